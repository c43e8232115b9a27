//! Bredon groups against cellular groups of fixed and quotient complexes.

mod common;

use bredon_core::bredon::{
    bredon_cohomology, bredon_homology, coend_tensor, nat_group, CoefficientSystem, Presentation, Variance,
};
use bredon_core::gcw::{assemble_from_cells, chain_functor, fixed_subcomplex, CellOrbit};
use bredon_core::{FgAbelianGroup, FiniteGroup, GcwComplex, OrbitCategory, Subgroup};
use num_bigint::BigInt;

fn layer(name: &str, dimension: usize, orbit_type: Subgroup, boundary: &[(&str, i64)]) -> CellOrbit {
    CellOrbit {
        name: name.into(),
        dimension,
        orbit_type,
        boundary: boundary.iter().map(|&(f, k)| (f.into(), BigInt::from(k))).collect(),
    }
}

/// ℤ/2 acting antipodally on a 2-sphere with two cells in each dimension.
fn antipodal_sphere() -> GcwComplex {
    let g = FiniteGroup::cyclic(2);
    let e = Subgroup::trivial(&g);
    assemble_from_cells(
        &g,
        &[
            layer("v", 0, e.clone(), &[]),
            layer("e", 1, e.clone(), &[("v2", 1), ("v1", -1)]),
            layer("c", 2, e, &[("e1", 1), ("e2", 1)]),
        ],
    )
    .unwrap()
}

/// A disk reflected across a diameter.
fn reflected_disk() -> GcwComplex {
    let g = FiniteGroup::cyclic(2);
    let (e, full) = (Subgroup::trivial(&g), Subgroup::full(&g));
    assemble_from_cells(
        &g,
        &[
            layer("p", 0, full.clone(), &[]),
            layer("q", 0, full.clone(), &[]),
            layer("a", 1, full, &[("q", 1), ("p", -1)]),
            layer("b", 1, e.clone(), &[("q", 1), ("p", -1)]),
            layer("c", 2, e, &[("b1", 1), ("a", -1)]),
        ],
    )
    .unwrap()
}

/// The symmetric group on three letters acting on a subdivided triangle.
fn hexagon() -> GcwComplex {
    let g = FiniteGroup::dihedral(3);
    let s = Subgroup::generated_by(&g, &[g.element("s").unwrap()]);
    assemble_from_cells(
        &g,
        &[
            layer("v", 0, s.clone(), &[]),
            layer("m", 0, s, &[]),
            layer("e", 1, Subgroup::trivial(&g), &[("m2", 1), ("v1", -1)]),
        ],
    )
    .unwrap()
}

/// ℤ/3 rotating a circle made of three edges, with a fixed center coned off.
fn rotated_disk() -> GcwComplex {
    let g = FiniteGroup::cyclic(3);
    let (e, full) = (Subgroup::trivial(&g), Subgroup::full(&g));
    assemble_from_cells(
        &g,
        &[
            layer("o", 0, full, &[]),
            layer("v", 0, e.clone(), &[]),
            layer("r", 1, e.clone(), &[("v1", 1), ("o", -1)]),
            layer("a", 1, e.clone(), &[("v2", 1), ("v1", -1)]),
            layer("f", 2, e, &[("r1", 1), ("a1", 1), ("r2", -1)]),
        ],
    )
    .unwrap()
}

fn complexes() -> Vec<(&'static str, GcwComplex)> {
    vec![
        ("sphere", antipodal_sphere()),
        ("disk", reflected_disk()),
        ("hexagon", hexagon()),
        ("rotated", rotated_disk()),
    ]
}

#[test]
fn a_shaped_system_sees_the_fixed_set() {
    for (name, x) in complexes() {
        let cat = OrbitCategory::build(x.group());
        let full = cat.object_of(&Subgroup::full(x.group())).unwrap();
        let m = CoefficientSystem::concentrated(&cat, Variance::Contravariant, full, Presentation::free(1)).unwrap();
        let fixed = fixed_subcomplex(&x, &Subgroup::full(x.group())).unwrap();
        assert_eq!(
            bredon_cohomology(&x, &m).unwrap().homology,
            fixed.cohomology(),
            "{name}"
        );
    }
}

#[test]
fn constant_system_sees_the_quotient() {
    for (name, x) in complexes() {
        let cat = OrbitCategory::build(x.group());
        let q = common::quotient_complex(&x);
        assert!(q.is_chain_complex(), "{name}");
        let m = CoefficientSystem::constant(&cat, Variance::Contravariant, Presentation::free(1)).unwrap();
        assert_eq!(bredon_cohomology(&x, &m).unwrap().homology, q.cohomology(), "{name}");
        let n = CoefficientSystem::constant(&cat, Variance::Covariant, Presentation::free(1)).unwrap();
        assert_eq!(bredon_homology(&x, &n).unwrap().homology, q.homology(), "{name}");
    }
}

#[test]
fn projective_plane_torsion() {
    let x = antipodal_sphere();
    let cat = OrbitCategory::build(x.group());
    let n = CoefficientSystem::constant(&cat, Variance::Covariant, Presentation::free(1)).unwrap();
    let h = bredon_homology(&x, &n).unwrap().homology;
    assert_eq!(
        h,
        [
            FgAbelianGroup::free(1),
            FgAbelianGroup::cyclic(2),
            FgAbelianGroup::zero()
        ]
    );
    let m = CoefficientSystem::constant(&cat, Variance::Contravariant, Presentation::free(1)).unwrap();
    let c = bredon_cohomology(&x, &m).unwrap().homology;
    assert_eq!(
        c,
        [
            FgAbelianGroup::free(1),
            FgAbelianGroup::zero(),
            FgAbelianGroup::cyclic(2)
        ]
    );
}

#[test]
fn cochain_and_chain_ranks_count_orbits() {
    for (name, x) in complexes() {
        let cat = OrbitCategory::build(x.group());
        let m = CoefficientSystem::constant(&cat, Variance::Contravariant, Presentation::free(1)).unwrap();
        let n = CoefficientSystem::constant(&cat, Variance::Covariant, Presentation::free(1)).unwrap();
        for d in 0..x.dims() {
            let f = chain_functor(&x, &cat, d).unwrap();
            let hom = nat_group(&f, &m).unwrap().group;
            let tensor = coend_tensor(&f, &n).unwrap().group;
            assert_eq!(hom.free_rank, x.cell_orbits(d).len(), "{name} {d}");
            assert_eq!(hom, tensor, "{name} {d}");
        }
    }
}

#[test]
fn torsion_coefficients() {
    // constant ℤ/3 on the rotated disk: the quotient is contractible
    let x = rotated_disk();
    let cat = OrbitCategory::build(x.group());
    let n = CoefficientSystem::constant(&cat, Variance::Covariant, Presentation::cyclic(3)).unwrap();
    let h = bredon_homology(&x, &n).unwrap().homology;
    assert_eq!(
        h,
        [
            FgAbelianGroup::cyclic(3),
            FgAbelianGroup::zero(),
            FgAbelianGroup::zero()
        ]
    );
    let m = CoefficientSystem::constant(&cat, Variance::Contravariant, Presentation::cyclic(3)).unwrap();
    let c = bredon_cohomology(&x, &m).unwrap().homology;
    assert_eq!(
        c,
        [
            FgAbelianGroup::cyclic(3),
            FgAbelianGroup::zero(),
            FgAbelianGroup::zero()
        ]
    );
}
