//! JSON interchange files. Every file carries `kind` and `version`; tables
//! refer to objects, arrows, points and cells by name.

use std::path::Path;

use bredon_core::bredon::{CoefficientSystem, Presentation, Variance};
use bredon_core::bundles::PrincipalBundle;
use bredon_core::gcw::RawGcw;
use bredon_core::groupoid::{RawArrow, RawGroupoid};
use bredon_core::gspace::RawGSpace;
use bredon_core::{FiniteGSpace, FiniteGroup, FiniteGroupoid, GcwComplex, IntMatrix, OrbitCategory, Subgroup};
use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const VERSION: u32 = 1;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Header {
    pub kind: String,
    pub version: u32,
}

impl Header {
    fn new(kind: &str) -> Self {
        Header {
            kind: kind.into(),
            version: VERSION,
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ArrowEntry {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct GroupoidTables {
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowEntry>,
    /// `[object, identity arrow]`
    pub identities: Vec<[String; 2]>,
    /// `[arrow, inverse]`
    pub inverses: Vec<[String; 2]>,
    /// `[f, g, f∘g]`
    pub compose: Vec<[String; 3]>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct GroupoidFile {
    #[serde(flatten)]
    pub header: Header,
    #[serde(flatten)]
    pub tables: GroupoidTables,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct SpaceFile {
    #[serde(flatten)]
    pub header: Header,
    pub groupoid: GroupoidTables,
    pub points: Vec<String>,
    /// `[point, object]`
    pub anchor: Vec<[String; 2]>,
    /// `[x, g, x·g]`
    pub action: Vec<[String; 3]>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct GroupTables {
    pub elements: Vec<String>,
    /// `table[a][b]` is the name of `a·b`.
    pub table: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct BoundaryEntry {
    pub cell: String,
    pub chain: Vec<(String, i64)>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ActionEntry {
    pub element: String,
    /// Image of every cell, per dimension.
    pub images: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct GcwFile {
    #[serde(flatten)]
    pub header: Header,
    pub group: GroupTables,
    pub cells: Vec<Vec<String>>,
    pub boundary: Vec<BoundaryEntry>,
    pub action: Vec<ActionEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit_types: Option<Vec<Vec<Vec<String>>>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ValueEntry {
    /// The subgroup this orbit is the quotient by; must be the category's
    /// representative.
    pub subgroup: Vec<String>,
    pub generators: usize,
    /// Each relation is a vector of length `generators`.
    #[serde(default)]
    pub relations: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct MorphismEntry {
    pub from: usize,
    pub to: usize,
    /// Any element of the coset.
    pub element: String,
    /// Rows index generators of the target value, columns the source.
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CoefficientsFile {
    #[serde(flatten)]
    pub header: Header,
    pub group: GroupTables,
    pub variance: String,
    pub objects: Vec<ValueEntry>,
    pub morphisms: Vec<MorphismEntry>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct BundleFile {
    #[serde(flatten)]
    pub header: Header,
    pub groupoid: GroupoidTables,
    pub points: Vec<String>,
    pub anchor: Vec<[String; 2]>,
    pub action: Vec<[String; 3]>,
    pub base: Vec<String>,
    /// `[point, base point]`
    pub projection: Vec<[String; 2]>,
}

/// A parsed file of any kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Groupoid(GroupoidFile),
    Space(SpaceFile),
    Gcw(GcwFile),
    Coefficients(CoefficientsFile),
    Bundle(BundleFile),
}

pub const KINDS: [&str; 5] = ["groupoid", "space", "gcw", "coefficients", "bundle"];

fn parse_as<T: DeserializeOwned>(path: &str, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::parse(path, &e))
}

pub fn parse_document(path: &str, text: &str) -> Result<Document, CliError> {
    let header: Header = parse_as(path, text)?;
    if header.version != VERSION {
        return Err(CliError::Format(format!(
            "{path}: version {} is not supported (expected {VERSION})",
            header.version
        )));
    }
    Ok(match header.kind.as_str() {
        "groupoid" => Document::Groupoid(parse_as(path, text)?),
        "space" => Document::Space(parse_as(path, text)?),
        "gcw" => Document::Gcw(parse_as(path, text)?),
        "coefficients" => Document::Coefficients(parse_as(path, text)?),
        "bundle" => Document::Bundle(parse_as(path, text)?),
        other => {
            return Err(CliError::Format(format!(
                "{path}: unknown kind {other:?}, expected one of {}",
                KINDS.join(", ")
            )))
        }
    })
}

pub fn read_document(path: &Path) -> Result<Document, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    parse_document(&shown, &text)
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Groupoid(_) => "groupoid",
            Document::Space(_) => "space",
            Document::Gcw(_) => "gcw",
            Document::Coefficients(_) => "coefficients",
            Document::Bundle(_) => "bundle",
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            Document::Groupoid(d) => to_json(d),
            Document::Space(d) => to_json(d),
            Document::Gcw(d) => to_json(d),
            Document::Coefficients(d) => to_json(d),
            Document::Bundle(d) => to_json(d),
        }
    }
}

// ---- groupoids and spaces

impl GroupoidTables {
    pub fn to_raw(&self) -> RawGroupoid {
        RawGroupoid {
            objects: self.objects.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| RawArrow {
                    name: a.name.clone(),
                    source: a.source.clone(),
                    target: a.target.clone(),
                })
                .collect(),
            identities: self.identities.iter().map(|[o, a]| (o.clone(), a.clone())).collect(),
            inverses: self.inverses.iter().map(|[a, b]| (a.clone(), b.clone())).collect(),
            compose: self
                .compose
                .iter()
                .map(|[f, g, h]| (f.clone(), g.clone(), h.clone()))
                .collect(),
        }
    }

    pub fn from_groupoid(gpd: &FiniteGroupoid) -> Self {
        let raw = gpd.to_raw();
        GroupoidTables {
            objects: raw.objects,
            arrows: raw
                .arrows
                .into_iter()
                .map(|a| ArrowEntry {
                    name: a.name,
                    source: a.source,
                    target: a.target,
                })
                .collect(),
            identities: raw.identities.into_iter().map(|(o, a)| [o, a]).collect(),
            inverses: raw.inverses.into_iter().map(|(a, b)| [a, b]).collect(),
            compose: raw.compose.into_iter().map(|(f, g, h)| [f, g, h]).collect(),
        }
    }
}

impl GroupoidFile {
    pub fn new(gpd: &FiniteGroupoid) -> Self {
        GroupoidFile {
            header: Header::new("groupoid"),
            tables: GroupoidTables::from_groupoid(gpd),
        }
    }
}

fn space_raw(points: &[String], anchor: &[[String; 2]], action: &[[String; 3]]) -> RawGSpace {
    RawGSpace {
        points: points.to_vec(),
        anchor: anchor.iter().map(|[p, o]| (p.clone(), o.clone())).collect(),
        action: action
            .iter()
            .map(|[x, g, y]| (x.clone(), g.clone(), y.clone()))
            .collect(),
    }
}

type SpaceTables = (Vec<String>, Vec<[String; 2]>, Vec<[String; 3]>);

fn space_tables(gpd: &FiniteGroupoid, space: &FiniteGSpace) -> SpaceTables {
    let raw = space.to_raw(gpd);
    (
        raw.points,
        raw.anchor.into_iter().map(|(p, o)| [p, o]).collect(),
        raw.action.into_iter().map(|(x, g, y)| [x, g, y]).collect(),
    )
}

impl SpaceFile {
    pub fn new(gpd: &FiniteGroupoid, space: &FiniteGSpace) -> Self {
        let (points, anchor, action) = space_tables(gpd, space);
        SpaceFile {
            header: Header::new("space"),
            groupoid: GroupoidTables::from_groupoid(gpd),
            points,
            anchor,
            action,
        }
    }

    pub fn to_raw(&self) -> RawGSpace {
        space_raw(&self.points, &self.anchor, &self.action)
    }
}

impl BundleFile {
    pub fn new(gpd: &FiniteGroupoid, bundle: &PrincipalBundle) -> Self {
        let (points, anchor, action) = space_tables(gpd, &bundle.total);
        let projection = bundle
            .total
            .points()
            .map(|p| {
                [
                    bundle.total.name(p).to_string(),
                    bundle.base_names[bundle.project(p)].clone(),
                ]
            })
            .collect();
        BundleFile {
            header: Header::new("bundle"),
            groupoid: GroupoidTables::from_groupoid(gpd),
            points,
            anchor,
            action,
            base: bundle.base_names.clone(),
            projection,
        }
    }

    pub fn space_raw(&self) -> RawGSpace {
        space_raw(&self.points, &self.anchor, &self.action)
    }

    /// Projection as base indices in point order of `space`.
    pub fn projection_for(&self, space: &FiniteGSpace) -> Result<Vec<usize>, CliError> {
        let mut out = vec![None; space.len()];
        for [p, m] in &self.projection {
            let pi = space
                .point_by_name(p)
                .ok_or_else(|| CliError::Format(format!("projection names unknown point {p:?}")))?;
            let mi = self
                .base
                .iter()
                .position(|b| b == m)
                .ok_or_else(|| CliError::Format(format!("projection names unknown base point {m:?}")))?;
            if out[pi.0].replace(mi).is_some() {
                return Err(CliError::Format(format!("point {p:?} is projected twice")));
            }
        }
        out.into_iter()
            .zip(space.names())
            .map(|(m, p)| m.ok_or_else(|| CliError::Format(format!("point {p:?} has no projection"))))
            .collect()
    }
}

// ---- groups, complexes and coefficients

impl GroupTables {
    pub fn from_group(group: &FiniteGroup) -> Self {
        GroupTables {
            elements: group.names().to_vec(),
            table: group
                .elements()
                .map(|a| {
                    group
                        .elements()
                        .map(|b| group.name(group.mul(a, b)).to_string())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_group(&self) -> Result<FiniteGroup, CliError> {
        let n = self.elements.len();
        let index = |name: &str| {
            self.elements
                .iter()
                .position(|e| e == name)
                .ok_or_else(|| CliError::Format(format!("group table names unknown element {name:?}")))
        };
        if self.table.len() != n || self.table.iter().any(|r| r.len() != n) {
            return Err(CliError::Format(format!("group table must be {n} × {n}")));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &self.table {
            for e in row {
                flat.push(index(e)?);
            }
        }
        FiniteGroup::from_table(self.elements.clone(), flat).map_err(|e| CliError::Format(format!("group table: {e}")))
    }
}

fn small(k: &BigInt) -> Result<i64, CliError> {
    i64::try_from(k).map_err(|_| CliError::Internal(format!("integer {k} does not fit the file format")))
}

impl GcwFile {
    pub fn new(x: &GcwComplex) -> Result<Self, CliError> {
        let raw = x.to_raw();
        Ok(GcwFile {
            header: Header::new("gcw"),
            group: GroupTables::from_group(&raw.group),
            cells: raw.cells,
            boundary: raw
                .boundary
                .into_iter()
                .map(|(cell, chain)| {
                    Ok(BoundaryEntry {
                        cell,
                        chain: chain
                            .into_iter()
                            .map(|(f, k)| Ok((f, small(&k)?)))
                            .collect::<Result<_, CliError>>()?,
                    })
                })
                .collect::<Result<_, CliError>>()?,
            action: raw
                .action
                .into_iter()
                .map(|(element, images)| ActionEntry { element, images })
                .collect(),
            orbit_types: raw.orbit_types,
        })
    }

    pub fn to_raw(&self) -> Result<RawGcw, CliError> {
        Ok(RawGcw {
            group: self.group.to_group()?,
            cells: self.cells.clone(),
            boundary: self
                .boundary
                .iter()
                .map(|b| {
                    (
                        b.cell.clone(),
                        b.chain.iter().map(|(f, k)| (f.clone(), BigInt::from(*k))).collect(),
                    )
                })
                .collect(),
            action: self
                .action
                .iter()
                .map(|a| (a.element.clone(), a.images.clone()))
                .collect(),
            orbit_types: self.orbit_types.clone(),
        })
    }
}

fn matrix_rows(m: &IntMatrix) -> Result<Vec<Vec<i64>>, CliError> {
    (0..m.rows()).map(|r| m.row(r).iter().map(small).collect()).collect()
}

fn matrix_from_rows(rows: &[Vec<i64>], shape: (usize, usize), what: &str) -> Result<IntMatrix, CliError> {
    if rows.len() != shape.0 || rows.iter().any(|r| r.len() != shape.1) {
        return Err(CliError::Format(format!("{what} must be {} × {}", shape.0, shape.1)));
    }
    Ok(IntMatrix::from_fn(shape.0, shape.1, |r, c| BigInt::from(rows[r][c])))
}

pub fn parse_variance(s: &str) -> Result<Variance, CliError> {
    match s {
        "contravariant" => Ok(Variance::Contravariant),
        "covariant" => Ok(Variance::Covariant),
        other => Err(CliError::Format(format!(
            "variance {other:?} must be \"contravariant\" or \"covariant\""
        ))),
    }
}

impl CoefficientsFile {
    pub fn new(sys: &CoefficientSystem) -> Result<Self, CliError> {
        let cat = sys.category();
        let group = cat.group();
        let objects = cat
            .objects()
            .iter()
            .zip(sys.values())
            .map(|(s, v)| {
                let rel = v.relations.transpose();
                Ok(ValueEntry {
                    subgroup: s.names(group).into_iter().map(String::from).collect(),
                    generators: v.generators,
                    relations: matrix_rows(&rel)?,
                })
            })
            .collect::<Result<_, CliError>>()?;
        let morphisms = cat
            .morphisms()
            .iter()
            .enumerate()
            .map(|(id, f)| {
                Ok(MorphismEntry {
                    from: f.from,
                    to: f.to,
                    element: group.name(f.element).to_string(),
                    matrix: matrix_rows(sys.map(id))?,
                })
            })
            .collect::<Result<_, CliError>>()?;
        Ok(CoefficientsFile {
            header: Header::new("coefficients"),
            group: GroupTables::from_group(group),
            variance: sys.variance().as_str().into(),
            objects,
            morphisms,
        })
    }

    /// Resolves names against the orbit category of the file's group. The
    /// result still has to pass [`CoefficientSystem::new`].
    pub fn resolve(&self) -> Result<(OrbitCategory, Variance, Vec<Presentation>, Vec<IntMatrix>), CliError> {
        let group = self.group.to_group()?;
        let cat = OrbitCategory::build(&group);
        let variance = parse_variance(&self.variance)?;
        if self.objects.len() != cat.object_count() {
            return Err(CliError::Format(format!(
                "{} objects given, the orbit category has {}",
                self.objects.len(),
                cat.object_count()
            )));
        }
        let mut values = Vec::new();
        for (o, entry) in self.objects.iter().enumerate() {
            let elements = entry
                .subgroup
                .iter()
                .map(|n| {
                    group
                        .element(n)
                        .ok_or_else(|| CliError::Format(format!("unknown element {n:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let s = Subgroup::from_elements(elements);
            if cat.object_exact(&s) != Some(o) {
                let expected: Vec<&str> = cat.objects()[o].names(&group);
                return Err(CliError::Format(format!(
                    "object {o} must be the subgroup {{{}}}",
                    expected.join(",")
                )));
            }
            let g = entry.generators;
            let rel_t = matrix_from_rows(
                &entry.relations,
                (entry.relations.len(), g),
                &format!("relations of object {o}"),
            )?;
            values.push(Presentation {
                generators: g,
                relations: if entry.relations.is_empty() {
                    IntMatrix::zeros(g, 0)
                } else {
                    rel_t.transpose()
                },
            });
        }
        let mut maps: Vec<Option<IntMatrix>> = vec![None; cat.morphisms().len()];
        for entry in &self.morphisms {
            let what = format!("morphism {} → {} via {}", entry.from, entry.to, entry.element);
            let element = group
                .element(&entry.element)
                .ok_or_else(|| CliError::Format(format!("{what}: unknown element")))?;
            if entry.from >= cat.object_count() || entry.to >= cat.object_count() {
                return Err(CliError::Format(format!("{what}: no such object")));
            }
            let id = cat
                .morphism_via(entry.from, entry.to, element)
                .ok_or_else(|| CliError::Format(format!("{what}: element does not give a morphism")))?;
            let (src, dst) = match variance {
                Variance::Contravariant => (entry.to, entry.from),
                Variance::Covariant => (entry.from, entry.to),
            };
            let shape = (values[dst].generators, values[src].generators);
            let m = matrix_from_rows(&entry.matrix, shape, &what)?;
            if maps[id].replace(m).is_some() {
                return Err(CliError::Format(format!("{what}: given twice")));
            }
        }
        let maps = maps
            .into_iter()
            .enumerate()
            .map(|(id, m)| {
                m.ok_or_else(|| {
                    let f = cat.morphism(id);
                    CliError::Format(format!(
                        "missing morphism {} → {} via {}",
                        f.from,
                        f.to,
                        group.name(f.element)
                    ))
                })
            })
            .collect::<Result<_, _>>()?;
        Ok((cat, variance, values, maps))
    }
}
