//! Randomised checks of the structural theorems, one verifier per property.

use bredon_core::bundles::{verify_extend_restrict, verify_restrict_extend};
use bredon_core::gspace::{
    classify_trivial_action, fibrewise_product, find_isomorphism, object_space, restrict_to_fibre,
    verify_induction_iso, verify_quotient, verify_rest_bijection,
};
use bredon_core::orbitcat::{count_orbit_maps, subgroups, verify_fixed_point_count, verify_orbit_category_iso};
use bredon_core::{FiniteGroupoid, VerificationFailure};
use clap::ValueEnum;
use rand::seq::IndexedRandom;
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::generate::{
    random_bundle_groupoid, random_domain, random_group_bundle, random_groupoid, random_object,
    random_principal_bundle, random_space, trial_rng, Limits,
};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Property {
    /// Every space is induced from its fibre.
    #[value(name = "formY")]
    #[serde(rename = "formY")]
    FormY,
    /// Restriction to a fibre is a bijection on equivariant maps.
    #[value(name = "rest")]
    #[serde(rename = "rest")]
    Rest,
    /// Orbit spaces agree with fibre orbit spaces.
    #[value(name = "quots")]
    #[serde(rename = "quots")]
    Quots,
    /// The characterisations of a trivial action agree.
    #[value(name = "triv")]
    #[serde(rename = "triv")]
    Triv,
    /// Maps out of a canonical orbit count fixed points.
    #[value(name = "c2")]
    #[serde(rename = "c2")]
    C2,
    /// Canonical orbits form the orbit category of the isotropy group.
    #[value(name = "orbitcat")]
    #[serde(rename = "orbitcat")]
    Orbitcat,
    /// Restriction and extension of bundles are inverse.
    #[value(name = "bundle")]
    #[serde(rename = "bundle")]
    Bundle,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::FormY => "formY",
            Property::Rest => "rest",
            Property::Quots => "quots",
            Property::Triv => "triv",
            Property::C2 => "c2",
            Property::Orbitcat => "orbitcat",
            Property::Bundle => "bundle",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Trial {
    pub trial: u64,
    pub pass: bool,
    pub detail: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub property: Property,
    pub seed: u64,
    pub trials: u64,
    pub passed: u64,
    pub failed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Trial>,
    pub results: Vec<Trial>,
}

/// Upper bound on maps enumerated in a single `rest` trial.
const MAX_MAPS: u128 = 4096;
/// Bundles stay small enough for exhaustive isomorphism search.
const MAX_BUNDLE_POINTS: usize = 16;

fn shape(gpd: &FiniteGroupoid) -> Value {
    json!({
        "objects": gpd.object_count(),
        "arrows": gpd.arrow_count(),
    })
}

pub fn run_trial(property: Property, seed: u64, trial: u64, limits: &Limits) -> Trial {
    let mut rng = trial_rng(seed, trial);
    let outcome = match property {
        Property::Bundle => bundle_trial(&mut rng, limits),
        _ => {
            let gpd = random_groupoid(&mut rng, limits);
            let b = random_object(&mut rng, &gpd);
            let r = match property {
                Property::FormY => form_y_trial(&mut rng, &gpd, b, limits),
                Property::Rest => rest_trial(&mut rng, &gpd, b, limits),
                Property::Quots => quots_trial(&mut rng, &gpd, b, limits),
                Property::Triv => triv_trial(&mut rng, &gpd, b, limits),
                Property::C2 => c2_trial(&mut rng, &gpd, b, limits),
                Property::Orbitcat => orbitcat_trial(&gpd, b),
                Property::Bundle => unreachable!(),
            };
            r.map(|mut d| {
                d["groupoid"] = shape(&gpd);
                d
            })
        }
    };
    match outcome {
        Ok(detail) => Trial {
            trial,
            pass: true,
            detail,
            witness: None,
        },
        Err(e) => Trial {
            trial,
            pass: false,
            detail: json!({ "property": e.property }),
            witness: Some(e.witness),
        },
    }
}

pub fn run(property: Property, seed: u64, trials: u64, limits: &Limits) -> Summary {
    let results: Vec<Trial> = (0..trials).map(|t| run_trial(property, seed, t, limits)).collect();
    let passed = results.iter().filter(|t| t.pass).count() as u64;
    Summary {
        property,
        seed,
        trials,
        passed,
        failed: trials - passed,
        first_failure: results.iter().find(|t| !t.pass).cloned(),
        results,
    }
}

type Outcome = Result<Value, VerificationFailure>;

fn form_y_trial(rng: &mut impl Rng, gpd: &FiniteGroupoid, b: bredon_core::ObjectId, limits: &Limits) -> Outcome {
    let y = random_space(rng, gpd, limits.max_points, false, "y");
    let cert = verify_induction_iso(gpd, &y, b)?;
    Ok(json!({ "points": y.len(), "induced": cert.induced.space.len() }))
}

fn rest_trial(rng: &mut impl Rng, gpd: &FiniteGroupoid, b: bredon_core::ObjectId, limits: &Limits) -> Outcome {
    let x = random_space(rng, gpd, limits.max_points, false, "x");
    let y = random_domain(rng, gpd, &x, limits.max_points, MAX_MAPS);
    let cert = verify_rest_bijection(gpd, &y, &x, b)?;
    Ok(json!({
        "domain_points": y.len(),
        "codomain_points": x.len(),
        "global_maps": cert.global_maps,
        "fibre_maps": cert.fibre_maps,
    }))
}

fn quots_trial(rng: &mut impl Rng, gpd: &FiniteGroupoid, b: bredon_core::ObjectId, limits: &Limits) -> Outcome {
    let y = random_space(rng, gpd, limits.max_points, false, "y");
    let cert = verify_quotient(gpd, &y, b)?;
    Ok(json!({
        "points": y.len(),
        "global_classes": cert.global_classes,
        "fibre_classes": cert.fibre_classes,
    }))
}

fn triv_trial(rng: &mut impl Rng, gpd: &FiniteGroupoid, b: bredon_core::ObjectId, limits: &Limits) -> Outcome {
    const P: &str = "a trivial action splits";
    let trivial = rng.random_bool(0.5);
    let y = random_space(rng, gpd, limits.max_points, trivial, "y");
    let verdict = classify_trivial_action(gpd, &y, b)?;
    // independent reading of the first condition: an isomorphism with the
    // split space exists exactly when the action is trivial
    let fib = restrict_to_fibre(gpd, &y, b).map_err(|e| VerificationFailure::new(P, e.to_string()))?;
    let split = fibrewise_product(gpd, &object_space(gpd), &fib.names);
    let iso = find_isomorphism(gpd, &split, &y, &|_, _| true).is_some();
    if iso != verdict.trivial {
        return Err(VerificationFailure::new(
            P,
            format!(
                "conditions say trivial = {}, isomorphism search says {iso}",
                verdict.trivial
            ),
        ));
    }
    if trivial && !verdict.trivial {
        return Err(VerificationFailure::new(
            P,
            "space built from object spaces is not trivial",
        ));
    }
    Ok(json!({ "points": y.len(), "trivial": verdict.trivial }))
}

fn c2_trial(rng: &mut impl Rng, gpd: &FiniteGroupoid, b: bredon_core::ObjectId, limits: &Limits) -> Outcome {
    const P: &str = "maps out of a canonical orbit are fixed points";
    let x = random_space(rng, gpd, limits.max_points, false, "x");
    let iso = gpd
        .isotropy(b)
        .map_err(|e| VerificationFailure::new(P, e.to_string()))?;
    let h = subgroups(&iso.group).choose(rng).expect("trivial subgroup").clone();
    let n = verify_fixed_point_count(gpd, &x, b, &h)?;
    let counted = count_orbit_maps(gpd, b, &h, &x).map_err(|e| VerificationFailure::new(P, e.to_string()))?;
    if counted != n as u128 {
        return Err(VerificationFailure::new(
            P,
            format!("{counted} counted maps, {n} fixed points"),
        ));
    }
    Ok(json!({ "points": x.len(), "subgroup_order": h.order(), "fixed_points": n }))
}

fn orbitcat_trial(gpd: &FiniteGroupoid, b: bredon_core::ObjectId) -> Outcome {
    let cert = verify_orbit_category_iso(gpd, b)?;
    Ok(json!({
        "objects": cert.category.object_count(),
        "morphisms": cert.category.morphisms().len(),
    }))
}

fn bundle_trial(rng: &mut impl Rng, limits: &Limits) -> Outcome {
    const P: &str = "bundle instance";
    let cap = limits.max_points.min(MAX_BUNDLE_POINTS);
    let gpd = random_bundle_groupoid(rng, limits, cap);
    let b = random_object(rng, &gpd);
    let iso = gpd
        .isotropy(b)
        .map_err(|e| VerificationFailure::new(P, e.to_string()))?;
    let bb = random_group_bundle(rng, &iso.group, (cap / gpd.object_count()).max(iso.order()));
    if !bb.fibres_are_free_orbits() {
        return Err(VerificationFailure::new(P, "group bundle fibres are not free orbits"));
    }
    verify_restrict_extend(&gpd, b, &bb)?;
    let p = random_principal_bundle(rng, &gpd, cap);
    if !p.fibres_are_free_orbits(&gpd) {
        return Err(VerificationFailure::new(P, "bundle fibres are not free orbits"));
    }
    verify_extend_restrict(&gpd, b, &p)?;
    Ok(json!({
        "groupoid": shape(&gpd),
        "group_bundle_points": bb.len(),
        "bundle_points": p.total.len(),
        "base_points": p.base_names.len(),
    }))
}
