//! The double-flip groupoid and the data built on it.
//!
//! Two objects `a, b`; between any two of them there are exactly two
//! arrows, and every self-arrow squares to the identity. Arrows are
//! `u, s: a → a`, `v, t: b → b`, `x, y: a → b` and their inverses, with
//! `y = x∘s` and `t = x∘s∘x⁻¹`.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::bredon::{BredonError, CoefficientSystem, Presentation, Variance};
use crate::gcw::{validate_gcw, GcwComplex, RawGcw};
use crate::groupoid::{validate_groupoid, FiniteGroupoid, ObjectId, RawArrow, RawGroupoid};
use crate::gspace::{FiniteGSpace, PointId};
use crate::orbitcat::{OrbitCategory, Subgroup};

/// `(name, target, flip, source)`; an arrow is a pair of endpoints and an
/// element of ℤ/2.
const ARROWS: [(&str, &str, u8, &str); 8] = [
    ("u", "a", 0, "a"),
    ("v", "b", 0, "b"),
    ("x", "b", 0, "a"),
    ("y", "b", 1, "a"),
    ("x^-1", "a", 0, "b"),
    ("y^-1", "a", 1, "b"),
    ("s", "a", 1, "a"),
    ("t", "b", 1, "b"),
];

fn s(v: &str) -> String {
    v.to_string()
}

pub fn double_flip_raw() -> RawGroupoid {
    let find = |t: &str, k: u8, src: &str| {
        ARROWS
            .iter()
            .find(|a| a.1 == t && a.2 == k && a.3 == src)
            .expect("complete table")
            .0
    };
    let mut compose = Vec::new();
    for f in ARROWS {
        for g in ARROWS {
            if f.3 == g.1 {
                compose.push((s(f.0), s(g.0), s(find(f.1, f.2 ^ g.2, g.3))));
            }
        }
    }
    RawGroupoid {
        objects: vec![s("a"), s("b")],
        arrows: ARROWS
            .iter()
            .map(|a| RawArrow {
                name: s(a.0),
                source: s(a.3),
                target: s(a.1),
            })
            .collect(),
        identities: vec![(s("a"), s("u")), (s("b"), s("v"))],
        inverses: ARROWS.iter().map(|a| (s(a.0), s(find(a.3, a.2, a.1)))).collect(),
        compose,
    }
}

pub fn double_flip_groupoid() -> FiniteGroupoid {
    validate_groupoid(&double_flip_raw()).expect("double flip is a groupoid")
}

/// Two copies of the object space: the vertices `■, ▲` of the flip circle
/// over both objects.
pub fn vertex_space(gpd: &FiniteGroupoid) -> FiniteGSpace {
    let mut names = Vec::new();
    let mut anchor = Vec::new();
    for v in ["■", "▲"] {
        for o in gpd.objects() {
            names.push(alloc::format!("{v}_{}", gpd.object_name(o)));
            anchor.push(o);
        }
    }
    let n = gpd.object_count();
    FiniteGSpace::from_fn(gpd, names, anchor, |p, g| PointId(p.0 / n * n + gpd.source(g).0))
        .expect("vertex space is a space")
}

/// The circle over `b` with two fixed vertices and two edges swapped by
/// the flip `t`.
pub fn flip_circle_raw() -> RawGcw {
    let gpd = double_flip_groupoid();
    let b = gpd.object_by_name("b").expect("b");
    let group = gpd.isotropy(b).expect("isotropy").group;
    let edge = || vec![(s("▲"), BigInt::from(1)), (s("■"), BigInt::from(-1))];
    let fixed = vec![s("v"), s("t")];
    let free = vec![s("v")];
    RawGcw {
        group,
        cells: vec![vec![s("■"), s("▲")], vec![s("e1"), s("e2")]],
        boundary: vec![(s("e1"), edge()), (s("e2"), edge())],
        action: vec![
            (s("v"), vec![vec![s("■"), s("▲")], vec![s("e1"), s("e2")]]),
            (s("t"), vec![vec![s("■"), s("▲")], vec![s("e2"), s("e1")]]),
        ],
        orbit_types: Some(vec![vec![fixed.clone(), fixed], vec![free.clone(), free]]),
    }
}

pub fn flip_circle() -> GcwComplex {
    validate_gcw(&flip_circle_raw()).expect("flip circle is a complex")
}

fn full_object(cat: &OrbitCategory) -> usize {
    cat.object_of(&Subgroup::full(cat.group()))
        .expect("full group is an object")
}

/// `ℤ` at the full-group orbit, `0` elsewhere.
pub fn coefficients_a(cat: &OrbitCategory) -> Result<CoefficientSystem, BredonError> {
    CoefficientSystem::concentrated(cat, Variance::Contravariant, full_object(cat), Presentation::free(1))
}

/// Constant `ℤ` with identity maps.
pub fn coefficients_b(cat: &OrbitCategory) -> Result<CoefficientSystem, BredonError> {
    CoefficientSystem::constant(cat, Variance::Contravariant, Presentation::free(1))
}

/// Base object of the flip circle.
pub fn base(gpd: &FiniteGroupoid) -> ObjectId {
    gpd.object_by_name("b").expect("b")
}
