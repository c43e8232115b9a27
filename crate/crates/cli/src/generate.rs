//! Seeded random groupoids, spaces, bundles and complexes.

use bredon_core::bundles::{extend_bundle, GroupBundle, PrincipalBundle};
use bredon_core::gcw::{assemble_from_cells, CellOrbit};
use bredon_core::gspace::count_equivariant_maps;
use bredon_core::orbitcat::{canonical_orbit, subgroups};
use bredon_core::zlinalg::kernel_basis;
use bredon_core::{FiniteGSpace, FiniteGroup, FiniteGroupoid, GcwComplex, GroupSet, ObjectId, Subgroup};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Size bounds for generated instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_objects: usize,
    pub max_group: usize,
    pub max_points: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_objects: 4,
            max_group: 8,
            max_points: 20,
        }
    }
}

/// Independent stream per trial, so trial `k` does not depend on how many
/// draws earlier trials made.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Groups of order at most 8 up to isomorphism.
pub fn group_pool() -> Vec<FiniteGroup> {
    let c2 = FiniteGroup::cyclic(2);
    let mut pool: Vec<FiniteGroup> = (1..=8).map(FiniteGroup::cyclic).collect();
    pool.push(FiniteGroup::dihedral(2));
    pool.push(FiniteGroup::dihedral(3));
    pool.push(FiniteGroup::dihedral(4));
    pool.push(FiniteGroup::quaternion());
    pool.push(c2.direct_product(&FiniteGroup::cyclic(4)));
    pool.push(c2.direct_product(&c2).direct_product(&c2));
    pool
}

pub fn random_group(rng: &mut impl Rng, max_order: usize) -> FiniteGroup {
    let pool: Vec<FiniteGroup> = group_pool()
        .into_iter()
        .filter(|g| g.order() <= max_order.max(1))
        .collect();
    pool.choose(rng).expect("trivial group always fits").clone()
}

fn permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// A transitive groupoid: either objects × group × objects, or the action
/// groupoid of a group on the cosets of a subgroup. Objects and arrows are
/// shuffled and renamed.
pub fn random_groupoid(rng: &mut impl Rng, limits: &Limits) -> FiniteGroupoid {
    let max_objects = limits.max_objects.max(1);
    let gpd = if rng.random_bool(0.5) {
        let g = random_group(rng, limits.max_group);
        let k = rng.random_range(1..=max_objects);
        let names: Vec<String> = (0..k).map(|i| format!("x{i}")).collect();
        FiniteGroupoid::pair_with_group(&names, &g)
    } else {
        let g = random_group(rng, (limits.max_group * max_objects).min(8));
        let fits: Vec<Subgroup> = subgroups(&g)
            .into_iter()
            .filter(|s| s.order() <= limits.max_group && g.order() / s.order() <= max_objects)
            .collect();
        let k = fits.choose(rng).cloned().unwrap_or_else(|| Subgroup::full(&g));
        let (set, _) = GroupSet::cosets(&g, &k);
        let names: Vec<String> = (0..set.size()).map(|i| format!("x{i}")).collect();
        FiniteGroupoid::action_groupoid(&g, &set, &names)
    };
    let objects = permutation(rng, gpd.object_count());
    let arrows = permutation(rng, gpd.arrow_count());
    let object_names = (0..objects.len()).map(|i| format!("o{i}")).collect();
    let arrow_names = (0..arrows.len()).map(|i| format!("a{i}")).collect();
    gpd.permuted(&objects, &arrows, object_names, arrow_names)
}

pub fn random_object(rng: &mut impl Rng, gpd: &FiniteGroupoid) -> ObjectId {
    ObjectId(rng.random_range(0..gpd.object_count()))
}

pub fn shuffle_space(rng: &mut impl Rng, gpd: &FiniteGroupoid, space: &FiniteGSpace, prefix: &str) -> FiniteGSpace {
    let order = permutation(rng, space.len());
    let names = (0..order.len()).map(|i| format!("{prefix}{i}")).collect();
    space.permuted(gpd, &order, names)
}

/// A disjoint union of canonical orbits with at most `max_points` points.
/// With `trivial` every orbit is a copy of the object space.
pub fn random_space(
    rng: &mut impl Rng,
    gpd: &FiniteGroupoid,
    max_points: usize,
    trivial: bool,
    prefix: &str,
) -> FiniteGSpace {
    let n = gpd.object_count();
    let target = rng.random_range(n.min(max_points)..=max_points);
    let mut space = FiniteGSpace::from_fn(gpd, Vec::new(), Vec::new(), |x, _| x).expect("empty space");
    loop {
        let b = random_object(rng, gpd);
        let iso = gpd.isotropy(b).expect("object exists");
        let room = target - space.len();
        let fits: Vec<Subgroup> = subgroups(&iso.group)
            .into_iter()
            .filter(|h| n * (iso.order() / h.order()) <= room)
            .filter(|h| !trivial || h.order() == iso.order())
            .collect();
        let Some(h) = fits.choose(rng) else { break };
        let orbit = canonical_orbit(gpd, b, h).expect("transitive");
        space = space.disjoint_union(gpd, &orbit.space);
        if rng.random_bool(0.25) {
            break;
        }
    }
    shuffle_space(rng, gpd, &space, prefix)
}

/// A space whose equivariant maps into `codomain` number at most `max_maps`.
pub fn random_domain(
    rng: &mut impl Rng,
    gpd: &FiniteGroupoid,
    codomain: &FiniteGSpace,
    max_points: usize,
    max_maps: u128,
) -> FiniteGSpace {
    let mut cap = max_points;
    loop {
        let y = random_space(rng, gpd, cap, false, "y");
        if count_equivariant_maps(gpd, &y, codomain) <= max_maps || y.len() <= gpd.object_count() {
            return y;
        }
        cap = (cap / 2).max(gpd.object_count());
    }
}

/// Free orbits over `1..` base points, with points shuffled and renamed.
pub fn random_group_bundle(rng: &mut impl Rng, group: &FiniteGroup, max_points: usize) -> GroupBundle {
    let max_base = (max_points / group.order()).max(1);
    let k = rng.random_range(1..=max_base);
    let base: Vec<String> = (0..k).map(|i| format!("m{i}")).collect();
    let b = GroupBundle::trivial(group, base);
    let order = permutation(rng, b.len());
    let mut new_index = vec![0; order.len()];
    for (i, &o) in order.iter().enumerate() {
        new_index[o] = i;
    }
    let set = GroupSet::from_fn(group, b.len(), |x, g| new_index[b.set.act(order[x], g)]).expect("relabelled action");
    let names = (0..order.len()).map(|i| format!("z{i}")).collect();
    let projection = order.iter().map(|&o| b.projection[o]).collect();
    GroupBundle::new(group.clone(), set, names, b.base_names.clone(), projection).expect("relabelled bundle")
}

/// A groupoid small enough that one free orbit of the target fibre fits.
pub fn random_bundle_groupoid(rng: &mut impl Rng, limits: &Limits, max_points: usize) -> FiniteGroupoid {
    loop {
        let gpd = random_groupoid(rng, limits);
        let b = ObjectId(0);
        if gpd.target_fibre(b).expect("object 0").len() <= max_points {
            return gpd;
        }
    }
}

/// A principal bundle built by extending a random group bundle at a random
/// object, then shuffled.
pub fn random_principal_bundle(rng: &mut impl Rng, gpd: &FiniteGroupoid, max_points: usize) -> PrincipalBundle {
    let b = random_object(rng, gpd);
    let iso = gpd.isotropy(b).expect("object exists");
    let per_orbit = gpd.object_count();
    let bb = random_group_bundle(rng, &iso.group, (max_points / per_orbit).max(iso.order()));
    let ext = extend_bundle(gpd, b, &bb).expect("extension of a group bundle");
    let order = permutation(rng, ext.total.len());
    let names = (0..order.len()).map(|i| format!("p{i}")).collect();
    let total = ext.total.permuted(gpd, &order, names);
    let projection = order.iter().map(|&o| ext.projection[o]).collect();
    PrincipalBundle::new(gpd, total, ext.base_names.clone(), projection).expect("relabelled bundle")
}

fn random_subgroup(rng: &mut impl Rng, group: &FiniteGroup) -> Subgroup {
    subgroups(group).choose(rng).expect("trivial subgroup").clone()
}

/// A complex of dimension at most two: vertex orbits of random type, edges
/// between vertices fixed by the edge's type, and 2-cells along cycles of
/// fixed edges.
pub fn random_gcw(rng: &mut impl Rng, max_group: usize) -> GcwComplex {
    let group = random_group(rng, max_group);
    let mut layers: Vec<CellOrbit> = Vec::new();
    for i in 0..rng.random_range(1..=3) {
        layers.push(CellOrbit {
            name: format!("v{i}."),
            dimension: 0,
            orbit_type: random_subgroup(rng, &group),
            boundary: Vec::new(),
        });
    }
    let mut x = assemble_from_cells(&group, &layers).expect("vertices assemble");
    for i in 0..rng.random_range(0..=4) {
        let h = random_subgroup(rng, &group);
        let fixed = x.fixed_cells(0, &h);
        if fixed.is_empty() {
            continue;
        }
        let v0 = *fixed.choose(rng).expect("nonempty");
        let v1 = *fixed.choose(rng).expect("nonempty");
        let names = x.cell_names(0);
        let boundary = if v0 == v1 {
            Vec::new()
        } else {
            vec![
                (names[v1].clone(), BigInt::from(1)),
                (names[v0].clone(), BigInt::from(-1)),
            ]
        };
        layers.push(CellOrbit {
            name: format!("e{i}."),
            dimension: 1,
            orbit_type: h,
            boundary,
        });
        x = assemble_from_cells(&group, &layers).expect("edges assemble");
    }
    for i in 0..rng.random_range(0..=2) {
        let h = random_subgroup(rng, &group);
        let fixed = x.fixed_cells(1, &h);
        if fixed.is_empty() {
            continue;
        }
        let d = x.boundary(1).select_columns(&fixed);
        let k = kernel_basis(&d);
        if k.cols() == 0 {
            continue;
        }
        let mut chain = vec![BigInt::zero(); fixed.len()];
        for _ in 0..rng.random_range(1..=2) {
            let c = rng.random_range(0..k.cols());
            let sign = if rng.random_bool(0.5) { 1 } else { -1 };
            for (r, entry) in chain.iter_mut().enumerate() {
                *entry += k.get(r, c) * sign;
            }
        }
        let names = x.cell_names(1);
        let boundary: Vec<(String, BigInt)> = chain
            .into_iter()
            .enumerate()
            .filter(|(_, k)| !k.is_zero())
            .map(|(r, k)| (names[fixed[r]].clone(), k))
            .collect();
        layers.push(CellOrbit {
            name: format!("f{i}."),
            dimension: 2,
            orbit_type: h,
            boundary,
        });
        x = assemble_from_cells(&group, &layers).expect("2-cells assemble");
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pool_has_every_small_order() {
        let orders: std::collections::BTreeSet<usize> = group_pool().iter().map(FiniteGroup::order).collect();
        assert_eq!(orders, (1..=8).collect());
    }

    #[test]
    fn streams_are_reproducible() {
        let limits = Limits::default();
        let a = random_groupoid(&mut trial_rng(5, 3), &limits);
        let b = random_groupoid(&mut trial_rng(5, 3), &limits);
        assert_eq!(a, b);
    }

    #[test]
    fn generated_instances_respect_limits() {
        let limits = Limits::default();
        for t in 0..40 {
            let mut rng = trial_rng(11, t);
            let gpd = random_groupoid(&mut rng, &limits);
            assert!(gpd.is_transitive());
            assert!(gpd.object_count() <= 4);
            assert!(gpd.isotropy(ObjectId(0)).unwrap().order() <= 8);
            let y = random_space(&mut rng, &gpd, 20, false, "y");
            assert!(y.len() <= 20);
            let bg = random_bundle_groupoid(&mut rng, &limits, 16);
            let p = random_principal_bundle(&mut rng, &bg, 16);
            assert!(p.total.len() <= 16, "{}", p.total.len());
            let x = random_gcw(&mut rng, 8);
            assert!(x.dims() <= 3);
        }
    }
}
