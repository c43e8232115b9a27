//! The subcommands, each producing a [`Report`].

use std::path::Path;

use bredon_core::bredon::{bredon_cohomology, bredon_homology, BredonError, BredonResult, CoefficientSystem, Variance};
use bredon_core::bundles::{BundleError, PrincipalBundle};
use bredon_core::gcw::{validate_gcw, GcwError};
use bredon_core::groupoid::{validate_groupoid, GroupoidError};
use bredon_core::gspace::{validate_gspace, GSpaceError};
use bredon_core::orbitcat::verify_orbit_category_iso;
use bredon_core::{fixtures, FgAbelianGroup, FiniteGSpace, FiniteGroupoid, GcwComplex, OrbitCategory};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::formats::{
    read_document, BundleFile, CoefficientsFile, Document, GcwFile, GroupoidFile, GroupoidTables, SpaceFile,
};
use crate::generate::Limits;
use crate::verify::{self, Property};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: Value,
    pub ok: bool,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Report {
    fn new(command: Value, ok: bool, result: Value) -> Self {
        Report {
            command,
            ok,
            result,
            timing_ms: None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

fn violations<T>(items: &[T], kind: impl Fn(&T) -> &'static str, witness: impl Fn(&T) -> Vec<String>) -> Value {
    Value::Array(
        items
            .iter()
            .map(|v| json!({ "kind": kind(v), "witness": witness(v) }))
            .collect(),
    )
}

fn invalid(what: &str, list: Value) -> Value {
    json!({ "valid": false, "object": what, "violations": list })
}

fn message(what: &str, kind: &str, text: String) -> Value {
    invalid(what, json!([{ "kind": kind, "witness": [text] }]))
}

pub fn group_json(g: &FgAbelianGroup) -> Value {
    json!({
        "free_rank": g.free_rank,
        "torsion": g.torsion.iter().map(|t| t.to_string().parse::<u64>().map_or_else(|_| json!(t.to_string()), |n| json!(n))).collect::<Vec<_>>(),
    })
}

/// The groupoid of a file, or a failed report.
fn load_groupoid(tables: &GroupoidTables) -> Result<FiniteGroupoid, Value> {
    match validate_groupoid(&tables.to_raw()) {
        Ok(g) => Ok(g),
        Err(GroupoidError::Invalid(v)) => Err(invalid("groupoid", violations(&v, |x| x.kind(), |x| x.witness()))),
        Err(e) => Err(message("groupoid", "groupoid", e.to_string())),
    }
}

fn space_error(e: GSpaceError) -> Value {
    match e {
        GSpaceError::Invalid(v) => invalid("space", violations(&v, |x| x.kind(), |x| x.witness())),
        GSpaceError::Groupoid(GroupoidError::Invalid(v)) => {
            invalid("groupoid", violations(&v, |x| x.kind(), |x| x.witness()))
        }
        other => message("space", "space", other.to_string()),
    }
}

fn load_gcw(file: &GcwFile) -> Result<Result<GcwComplex, Value>, CliError> {
    let raw = file.to_raw()?;
    Ok(validate_gcw(&raw).map_err(|e| match e {
        GcwError::Invalid(v) => invalid("gcw", violations(&v, |x| x.kind(), |x| x.witness())),
        other => message("gcw", "gcw", other.to_string()),
    }))
}

fn load_coefficients(file: &CoefficientsFile) -> Result<Result<CoefficientSystem, Value>, CliError> {
    let (cat, variance, values, maps) = file.resolve()?;
    Ok(
        CoefficientSystem::new(&cat, variance, values, maps).map_err(|e| match e {
            BredonError::InvalidCoefficients(v) => invalid(
                "coefficients",
                Value::Array(
                    v.iter()
                        .map(|x| json!({ "kind": "functoriality", "witness": [x.to_string()] }))
                        .collect(),
                ),
            ),
            other => message("coefficients", "coefficients", other.to_string()),
        }),
    )
}

fn load_bundle(file: &BundleFile) -> Result<Result<(FiniteGroupoid, PrincipalBundle), Value>, CliError> {
    let gpd = match load_groupoid(&file.groupoid) {
        Ok(g) => g,
        Err(r) => return Ok(Err(r)),
    };
    let space = match validate_gspace(&gpd, &file.space_raw()) {
        Ok(s) => s,
        Err(e) => return Ok(Err(space_error(e))),
    };
    let projection = file.projection_for(&space)?;
    Ok(match PrincipalBundle::new(&gpd, space, file.base.clone(), projection) {
        Ok(b) => Ok((gpd, b)),
        Err(BundleError::Invalid(v)) => Err(invalid("bundle", violations(&v, |x| x.kind(), |x| x.witness()))),
        Err(e) => Err(message("bundle", "bundle", e.to_string())),
    })
}

fn finish(command: Value, outcome: Result<Value, Value>) -> Report {
    match outcome {
        Ok(r) => Report::new(command, true, r),
        Err(r) => Report::new(command, false, r),
    }
}

fn space_summary(gpd: &FiniteGroupoid, s: &FiniteGSpace) -> Value {
    json!({
        "valid": true,
        "points": s.len(),
        "orbits": s.orbit_labels(gpd).iter().max().map_or(0, |m| m + 1),
        "transitive": s.is_transitive(gpd),
    })
}

pub fn cmd_validate(path: &Path) -> Result<Report, CliError> {
    let doc = read_document(path)?;
    let command = json!({ "command": "validate", "file": path.display().to_string(), "kind": doc.kind() });
    let outcome = match &doc {
        Document::Groupoid(f) => load_groupoid(&f.tables).map(|g| {
            json!({
                "valid": true,
                "objects": g.object_count(),
                "arrows": g.arrow_count(),
                "transitive": g.is_transitive(),
            })
        }),
        Document::Space(f) => load_groupoid(&f.groupoid).and_then(|g| {
            validate_gspace(&g, &f.to_raw())
                .map(|s| space_summary(&g, &s))
                .map_err(space_error)
        }),
        Document::Gcw(f) => load_gcw(f)?.map(|x| {
            json!({
                "valid": true,
                "group_order": x.group().order(),
                "cells": (0..x.dims()).map(|n| x.cell_count(n)).collect::<Vec<_>>(),
                "cell_orbits": (0..x.dims()).map(|n| x.cell_orbits(n).len()).collect::<Vec<_>>(),
            })
        }),
        Document::Coefficients(f) => load_coefficients(f)?.map(|c| {
            json!({
                "valid": true,
                "variance": c.variance().as_str(),
                "values": c.values().iter().map(|p| group_json(&p.group())).collect::<Vec<_>>(),
            })
        }),
        Document::Bundle(f) => load_bundle(f)?.map(|(g, b)| {
            json!({
                "valid": true,
                "points": b.total.len(),
                "base_points": b.base_names.len(),
                "fibres_are_free_orbits": b.fibres_are_free_orbits(&g),
            })
        }),
    };
    Ok(finish(command, outcome))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Homology,
    Cohomology,
}

fn bredon_json(mode: Mode, r: &BredonResult) -> Value {
    let n = r.complex.groups.len();
    let differentials: Vec<Value> = (0..n)
        .filter_map(|k| {
            let to = match mode {
                Mode::Cohomology if k + 1 < n => k + 1,
                Mode::Homology if k > 0 => k - 1,
                _ => return None,
            };
            Some(json!({ "from": k, "to": to, "surjective": r.complex.is_surjective(k) }))
        })
        .collect();
    json!({
        "mode": match mode { Mode::Homology => "homology", Mode::Cohomology => "cohomology" },
        "chain_groups": r.complex.groups.iter().map(group_json).collect::<Vec<_>>(),
        "chain_ranks": r.complex.groups.iter().map(|g| g.free_rank).collect::<Vec<_>>(),
        "differentials": differentials,
        "degrees": r.homology.iter().enumerate().map(|(k, g)| json!({ "degree": k, "group": group_json(g) })).collect::<Vec<_>>(),
    })
}

pub fn cmd_bredon(complex: &Path, coeffs: &Path, mode: Mode) -> Result<Report, CliError> {
    let command = json!({
        "command": "bredon",
        "complex": complex.display().to_string(),
        "coeffs": coeffs.display().to_string(),
        "mode": match mode { Mode::Homology => "homology", Mode::Cohomology => "cohomology" },
    });
    let Document::Gcw(gf) = read_document(complex)? else {
        return Err(CliError::Format(format!("{}: expected a gcw file", complex.display())));
    };
    let Document::Coefficients(cf) = read_document(coeffs)? else {
        return Err(CliError::Format(format!(
            "{}: expected a coefficients file",
            coeffs.display()
        )));
    };
    let x = match load_gcw(&gf)? {
        Ok(x) => x,
        Err(r) => return Ok(finish(command, Err(r))),
    };
    let sys = match load_coefficients(&cf)? {
        Ok(s) => s,
        Err(r) => return Ok(finish(command, Err(r))),
    };
    let outcome = if sys.category().group() != x.group() {
        Err(message(
            "coefficients",
            "group-mismatch",
            "coefficients and complex have different group tables".into(),
        ))
    } else {
        let result = match mode {
            Mode::Cohomology => bredon_cohomology(&x, &sys),
            Mode::Homology => bredon_homology(&x, &sys),
        };
        match result {
            Ok(r) => Ok(bredon_json(mode, &r)),
            Err(e @ BredonError::WrongVariance { .. }) => Err(message("coefficients", "variance", e.to_string())),
            Err(e @ (BredonError::Internal(_) | BredonError::Linalg(_))) => {
                return Err(CliError::Internal(e.to_string()))
            }
            Err(e) => Err(message("complex", "bredon", e.to_string())),
        }
    };
    Ok(finish(command, outcome))
}

pub fn orbit_category_json(cat: &OrbitCategory) -> Value {
    let group = cat.group();
    let k = cat.object_count();
    let objects: Vec<Value> = cat
        .objects()
        .iter()
        .enumerate()
        .map(|(i, s)| json!({ "index": i, "subgroup": s.names(group), "order": s.order() }))
        .collect();
    let mut hom = Vec::new();
    for a in 0..k {
        for b in 0..k {
            hom.push(json!({ "from": a, "to": b, "count": cat.hom(a, b).len() }));
        }
    }
    let morphisms: Vec<Value> = cat
        .morphisms()
        .iter()
        .enumerate()
        .map(|(i, f)| json!({ "id": i, "from": f.from, "to": f.to, "element": group.name(f.element) }))
        .collect();
    let m = cat.morphisms().len();
    let mut composition = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if let Some(c) = cat.compose(a, b) {
                composition.push(json!([a, b, c]));
            }
        }
    }
    json!({
        "objects": objects,
        "hom_sizes": hom,
        "morphisms": morphisms,
        "composition": composition,
    })
}

pub fn cmd_orbitcat(path: &Path, base: &str, verify_iso: bool) -> Result<Report, CliError> {
    let command = json!({
        "command": "orbitcat",
        "file": path.display().to_string(),
        "base": base,
        "verify": verify_iso,
    });
    let Document::Groupoid(f) = read_document(path)? else {
        return Err(CliError::Format(format!(
            "{}: expected a groupoid file",
            path.display()
        )));
    };
    let gpd = match load_groupoid(&f.tables) {
        Ok(g) => g,
        Err(r) => return Ok(finish(command, Err(r))),
    };
    let b = gpd.object_by_name(base).ok_or_else(|| {
        let names: Vec<&str> = gpd.objects().map(|o| gpd.object_name(o)).collect();
        CliError::Usage(format!(
            "unknown base object {base:?}; objects are {}",
            names.join(", ")
        ))
    })?;
    if !gpd.is_transitive() {
        return Ok(finish(
            command,
            Err(message(
                "groupoid",
                "not-transitive",
                "groupoid is not transitive".into(),
            )),
        ));
    }
    let iso = gpd.isotropy(b).map_err(|e| CliError::Internal(e.to_string()))?;
    let cat = OrbitCategory::build(&iso.group);
    let mut result = orbit_category_json(&cat);
    if !verify_iso {
        return Ok(finish(command, Ok(result)));
    }
    let outcome = match verify_orbit_category_iso(&gpd, b) {
        Ok(cert) => {
            result["verified"] = json!(true);
            result["realising_maps"] = json!(cert.maps.len());
            Ok(result)
        }
        Err(e) => {
            result["verified"] = json!(false);
            result["witness"] = json!({ "property": e.property, "witness": e.witness });
            Err(result)
        }
    };
    Ok(finish(command, outcome))
}

pub fn cmd_verify(property: Property, seed: u64, trials: u64, limits: &Limits) -> Report {
    let command = json!({
        "command": "verify",
        "prop": property.name(),
        "seed": seed,
        "trials": trials,
        "max_objects": limits.max_objects,
        "max_group": limits.max_group,
        "max_points": limits.max_points,
    });
    let summary = verify::run(property, seed, trials, limits);
    let ok = summary.failed == 0;
    Report::new(command, ok, serde_json::to_value(&summary).expect("summary serializes"))
}

pub const EXAMPLES: [&str; 1] = ["double-flip"];

/// File name and contents of every file of a named example.
pub fn example_files(name: &str) -> Result<Vec<(String, String)>, CliError> {
    match name {
        "double-flip" => {
            let gpd = fixtures::double_flip_groupoid();
            let x = fixtures::flip_circle();
            let cat = OrbitCategory::build(x.group());
            let a = fixtures::coefficients_a(&cat).map_err(|e| CliError::Internal(e.to_string()))?;
            let b = fixtures::coefficients_b(&cat).map_err(|e| CliError::Internal(e.to_string()))?;
            Ok(vec![
                (
                    "double_flip.groupoid.json".into(),
                    crate::formats::to_json(&GroupoidFile::new(&gpd)),
                ),
                (
                    "vertex_space.space.json".into(),
                    crate::formats::to_json(&SpaceFile::new(&gpd, &fixtures::vertex_space(&gpd))),
                ),
                (
                    "flip_circle.gcw.json".into(),
                    crate::formats::to_json(&GcwFile::new(&x)?),
                ),
                (
                    "coefficients_a.coeffs.json".into(),
                    crate::formats::to_json(&CoefficientsFile::new(&a)?),
                ),
                (
                    "coefficients_b.coeffs.json".into(),
                    crate::formats::to_json(&CoefficientsFile::new(&b)?),
                ),
            ])
        }
        other => Err(CliError::Usage(format!(
            "unknown example {other:?}; available: {}",
            EXAMPLES.join(", ")
        ))),
    }
}

/// Constant `ℤ` over the flip circle's group, for homology.
pub fn constant_z_file() -> Result<String, CliError> {
    let x = fixtures::flip_circle();
    let cat = OrbitCategory::build(x.group());
    let n = CoefficientSystem::constant(&cat, Variance::Covariant, bredon_core::Presentation::free(1))
        .map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(crate::formats::to_json(&CoefficientsFile::new(&n)?))
}

pub fn cmd_example(name: &str, out: &Path) -> Result<Report, CliError> {
    let files = example_files(name)?;
    std::fs::create_dir_all(out).map_err(|source| CliError::Io {
        path: out.display().to_string(),
        source,
    })?;
    let mut written = Vec::new();
    for (file, contents) in files {
        let path = out.join(&file);
        std::fs::write(&path, contents).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        written.push(file);
    }
    Ok(Report::new(
        json!({ "command": "example", "name": name, "out": out.display().to_string() }),
        true,
        json!({ "written": written }),
    ))
}
