//! Subgroups, canonical orbits and the orbit category of a finite group.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::failure::{ensure, VerificationFailure};
use crate::group::{right_coset_labels, FiniteGroup, GroupSet};
use crate::groupoid::{ArrowId, FiniteGroupoid, GroupoidError, ObjectId};
use crate::gspace::{
    check_equivariant, count_equivariant_maps, enumerate_equivariant_maps, restrict_to_fibre, EquivariantMap,
    FiniteGSpace, PointId,
};

/// A subgroup as a sorted list of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    /// Takes the elements as given; closure is not checked.
    pub fn from_elements(elements: impl IntoIterator<Item = usize>) -> Self {
        let mut elements: Vec<usize> = elements.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        Subgroup { elements }
    }

    /// Smallest subgroup containing `generators`.
    pub fn generated_by(group: &FiniteGroup, generators: &[usize]) -> Self {
        let mut set: BTreeSet<usize> = BTreeSet::new();
        set.insert(group.identity());
        let mut frontier: Vec<usize> = vec![group.identity()];
        while let Some(x) = frontier.pop() {
            for &g in generators {
                let y = group.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Subgroup {
            elements: set.into_iter().collect(),
        }
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        Subgroup {
            elements: vec![group.identity()],
        }
    }

    pub fn full(group: &FiniteGroup) -> Self {
        Subgroup {
            elements: group.elements().collect(),
        }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }

    /// `g∘S∘g⁻¹`.
    pub fn conjugate(&self, group: &FiniteGroup, g: usize) -> Subgroup {
        Subgroup::from_elements(self.elements.iter().map(|&s| group.conjugate(s, g)))
    }

    pub fn is_subgroup_of_group(&self, group: &FiniteGroup) -> bool {
        self.contains(group.identity())
            && self
                .elements
                .iter()
                .all(|&a| self.contains(group.inv(a)) && self.elements.iter().all(|&b| self.contains(group.mul(a, b))))
    }

    pub fn names<'a>(&self, group: &'a FiniteGroup) -> Vec<&'a str> {
        self.elements.iter().map(|&g| group.name(g)).collect()
    }
}

/// All subgroups, sorted by order and then by elements.
pub fn subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    let mut found: BTreeSet<Subgroup> = BTreeSet::new();
    let mut frontier = vec![Subgroup::trivial(group)];
    found.insert(frontier[0].clone());
    while let Some(s) = frontier.pop() {
        for g in group.elements() {
            if s.contains(g) {
                continue;
            }
            let mut gens = s.elements.clone();
            gens.push(g);
            let t = Subgroup::generated_by(group, &gens);
            if found.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
    out
}

/// Subgroups grouped by conjugacy, each class sorted and the classes
/// ordered by their first member.
pub fn conjugacy_classes_of_subgroups(group: &FiniteGroup) -> Vec<Vec<Subgroup>> {
    let all = subgroups(group);
    let mut assigned = vec![false; all.len()];
    let mut classes = Vec::new();
    for i in 0..all.len() {
        if assigned[i] {
            continue;
        }
        let conj: BTreeSet<Subgroup> = group.elements().map(|g| all[i].conjugate(group, g)).collect();
        let mut class = Vec::new();
        for (j, s) in all.iter().enumerate() {
            if conj.contains(s) {
                assigned[j] = true;
                class.push(s.clone());
            }
        }
        classes.push(class);
    }
    classes
}

/// A morphism `H → K` of the orbit category, realised by the right coset
/// `K∘g` with `g∘H∘g⁻¹ ⊆ K`. On cosets it sends `H∘x` to `K∘g∘x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitMorphism {
    pub from: usize,
    pub to: usize,
    /// Smallest element of the coset.
    pub element: usize,
    pub coset: Subgroup,
}

/// The orbit category of a finite group on one subgroup per conjugacy
/// class, with explicit coset morphisms and composition table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitCategory {
    group: FiniteGroup,
    objects: Vec<Subgroup>,
    morphisms: Vec<OrbitMorphism>,
    hom: Vec<Vec<usize>>,
    compose: Vec<usize>,
    identities: Vec<usize>,
}

impl OrbitCategory {
    pub fn build(group: &FiniteGroup) -> Self {
        let objects: Vec<Subgroup> = conjugacy_classes_of_subgroups(group)
            .into_iter()
            .map(|c| c[0].clone())
            .collect();
        let n = objects.len();
        let mut morphisms = Vec::new();
        let mut hom = vec![Vec::new(); n * n];
        for (hi, h) in objects.iter().enumerate() {
            for (ki, k) in objects.iter().enumerate() {
                let (reps, _) = right_coset_labels(group, k);
                for g in reps {
                    if h.conjugate(group, g).is_subset_of(k) {
                        hom[hi * n + ki].push(morphisms.len());
                        morphisms.push(OrbitMorphism {
                            from: hi,
                            to: ki,
                            element: g,
                            coset: Subgroup::from_elements(k.elements().iter().map(|&x| group.mul(x, g))),
                        });
                    }
                }
            }
        }
        let m = morphisms.len();
        let find = |from: usize, to: usize, elt: usize| -> usize {
            *hom[from * n + to]
                .iter()
                .find(|&&id| morphisms[id].coset.contains(elt))
                .expect("composite coset is a morphism")
        };
        let mut compose = vec![usize::MAX; m * m];
        for (a, fa) in morphisms.iter().enumerate() {
            for (b, fb) in morphisms.iter().enumerate() {
                if fb.to == fa.from {
                    compose[a * m + b] = find(fb.from, fa.to, group.mul(fa.element, fb.element));
                }
            }
        }
        let identities = (0..n).map(|h| find(h, h, group.identity())).collect();
        OrbitCategory {
            group: group.clone(),
            objects,
            morphisms,
            hom,
            compose,
            identities,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn objects(&self) -> &[Subgroup] {
        &self.objects
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    /// Index of the object conjugate to `s`.
    pub fn object_of(&self, s: &Subgroup) -> Option<usize> {
        self.objects
            .iter()
            .position(|h| self.group.elements().any(|g| &h.conjugate(&self.group, g) == s))
    }

    /// Index of the object with exactly these elements.
    pub fn object_exact(&self, s: &Subgroup) -> Option<usize> {
        self.objects.iter().position(|h| h == s)
    }

    pub fn morphisms(&self) -> &[OrbitMorphism] {
        &self.morphisms
    }

    pub fn morphism(&self, id: usize) -> &OrbitMorphism {
        &self.morphisms[id]
    }

    pub fn hom(&self, from: usize, to: usize) -> &[usize] {
        &self.hom[from * self.objects.len() + to]
    }

    /// Morphism `from → to` whose coset contains `element`.
    pub fn morphism_via(&self, from: usize, to: usize, element: usize) -> Option<usize> {
        self.hom(from, to)
            .iter()
            .copied()
            .find(|&id| self.morphisms[id].coset.contains(element))
    }

    /// `a∘b`, defined when `b` ends where `a` starts.
    pub fn compose(&self, a: usize, b: usize) -> Option<usize> {
        let c = self.compose[a * self.morphisms.len() + b];
        (c != usize::MAX).then_some(c)
    }

    pub fn identity(&self, object: usize) -> usize {
        self.identities[object]
    }

    /// Right cosets of an object, with representatives.
    pub fn coset_set(&self, object: usize) -> (GroupSet, Vec<usize>) {
        GroupSet::cosets(&self.group, &self.objects[object])
    }

    /// The coset map `H∘x ↦ K∘g∘x` of a morphism.
    pub fn coset_map(&self, id: usize) -> Vec<usize> {
        let m = &self.morphisms[id];
        let (_, reps) = self.coset_set(m.from);
        let (_, class_of) = right_coset_labels(&self.group, &self.objects[m.to]);
        reps.iter().map(|&x| class_of[self.group.mul(m.element, x)]).collect()
    }

    /// Exhaustive check of the category axioms on the table.
    pub fn check_axioms(&self) -> Result<(), VerificationFailure> {
        const P: &str = "orbit category axioms";
        let m = self.morphisms.len();
        for a in 0..m {
            let fa = &self.morphisms[a];
            ensure!(
                self.compose(a, self.identity(fa.from)) == Some(a) && self.compose(self.identity(fa.to), a) == Some(a),
                P,
                "identity law fails at morphism {}",
                a
            );
            for b in 0..m {
                if self.morphisms[b].to != fa.from {
                    continue;
                }
                for c in 0..m {
                    if self.morphisms[c].to != self.morphisms[b].from {
                        continue;
                    }
                    let lhs = self.compose(a, b).and_then(|ab| self.compose(ab, c));
                    let rhs = self.compose(b, c).and_then(|bc| self.compose(a, bc));
                    ensure!(lhs.is_some() && lhs == rhs, P, "({}, {}, {})", a, b, c);
                }
            }
        }
        Ok(())
    }
}

/// Subgroup of the isotropy group at `b`, given by arrows.
pub fn subgroup_of_arrows(gpd: &FiniteGroupoid, b: ObjectId, arrows: &[ArrowId]) -> Result<Subgroup, GroupoidError> {
    let iso = gpd.isotropy(b)?;
    Ok(Subgroup::from_elements(
        arrows.iter().filter_map(|&a| iso.element_of(a)),
    ))
}

/// `G^b/K` with, for each point, a representative arrow and the class of
/// every target-fibre arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalOrbit {
    pub space: FiniteGSpace,
    pub representatives: Vec<ArrowId>,
    class_of: Vec<usize>,
}

impl CanonicalOrbit {
    /// The point `[f]`, for `f` with target at the base.
    pub fn class(&self, f: ArrowId) -> PointId {
        PointId(self.class_of[f.0])
    }
}

/// `G^b/K`: target-fibre arrows modulo `f ~ k∘f`, anchored at the source,
/// with `[f]·g = [f∘g]`.
pub fn canonical_orbit(gpd: &FiniteGroupoid, b: ObjectId, k: &Subgroup) -> Result<CanonicalOrbit, GroupoidError> {
    gpd.require_transitive()?;
    let iso = gpd.isotropy(b)?;
    let fibre = gpd.target_fibre(b)?;
    let mut class_of = vec![usize::MAX; gpd.arrow_count()];
    let mut reps: Vec<ArrowId> = Vec::new();
    for &f in &fibre.arrows {
        if class_of[f.0] != usize::MAX {
            continue;
        }
        for &h in k.elements() {
            let hf = gpd.compose(iso.arrow(h), f).expect("composable");
            class_of[hf.0] = reps.len();
        }
        reps.push(f);
    }
    let names = reps.iter().map(|&f| format!("[{}]", gpd.arrow_name(f))).collect();
    let anchor = reps.iter().map(|&f| gpd.source(f)).collect();
    let space = FiniteGSpace::from_fn(gpd, names, anchor, |x, g| {
        PointId(class_of[gpd.compose(reps[x.0], g).expect("composable").0])
    })
    .expect("canonical orbit is a space");
    Ok(CanonicalOrbit {
        space,
        representatives: reps,
        class_of,
    })
}

/// Points of the fibre at `b` fixed by `k`.
pub fn fixed_points(
    gpd: &FiniteGroupoid,
    space: &FiniteGSpace,
    b: ObjectId,
    k: &Subgroup,
) -> Result<Vec<PointId>, GroupoidError> {
    let iso = gpd.isotropy(b)?;
    Ok(space
        .fibre(b)
        .into_iter()
        .filter(|&x| k.elements().iter().all(|&h| space.act(x, iso.arrow(h)) == Some(x)))
        .collect())
}

/// Certifies that a transitive space is `G^b/H` for `H` the stabilizer of
/// a point `x` over `b`, via `[f] ↦ x·f`.
pub fn verify_orbit_decomposition(
    gpd: &FiniteGroupoid,
    space: &FiniteGSpace,
    b: ObjectId,
) -> Result<(Subgroup, EquivariantMap), VerificationFailure> {
    const P: &str = "transitive space is a canonical orbit";
    ensure!(space.is_transitive(gpd), P, "space is not transitive");
    let x = *space
        .fibre(b)
        .first()
        .ok_or_else(|| VerificationFailure::new(P, "fibre over the base is empty"))?;
    let iso = gpd
        .isotropy(b)
        .map_err(|e| VerificationFailure::new(P, e.to_string()))?;
    let h = Subgroup::from_elements(
        space
            .stabilizer(gpd, x)
            .into_iter()
            .map(|a| iso.element_of(a).expect("self-arrow at b")),
    );
    let orbit = canonical_orbit(gpd, b, &h).map_err(|e| VerificationFailure::new(P, e.to_string()))?;
    let mapping: Vec<PointId> = orbit
        .representatives
        .iter()
        .map(|&f| space.act(x, f).expect("target is b"))
        .collect();
    let map = EquivariantMap { mapping };
    ensure!(
        map.is_bijective(space.len()),
        P,
        "[f] ↦ {}·f is not bijective",
        space.name(x)
    );
    ensure!(
        check_equivariant(gpd, &orbit.space, space, &map.mapping).is_ok(),
        P,
        "[f] ↦ {}·f is not equivariant",
        space.name(x)
    );
    Ok((h, map))
}

/// Certifies `|Map(G^b/H, X)| = |X_b^H|` by enumerating both sides.
pub fn verify_fixed_point_count(
    gpd: &FiniteGroupoid,
    space: &FiniteGSpace,
    b: ObjectId,
    h: &Subgroup,
) -> Result<usize, VerificationFailure> {
    const P: &str = "maps out of a canonical orbit are fixed points";
    let err = |e: GroupoidError| VerificationFailure::new(P, e.to_string());
    let orbit = canonical_orbit(gpd, b, h).map_err(err)?;
    let maps = enumerate_equivariant_maps(gpd, &orbit.space, space);
    let fixed = fixed_points(gpd, space, b, h).map_err(err)?;
    let fibre = restrict_to_fibre(gpd, space, b).map_err(|e| VerificationFailure::new(P, e.to_string()))?;
    // third count: isotropy maps from the coset set to the fibre
    let iso = gpd.isotropy(b).map_err(err)?;
    let (cosets, _) = GroupSet::cosets(&iso.group, h);
    let fibre_maps = cosets.equivariant_maps(&fibre.set).len();
    ensure!(
        maps.len() == fixed.len() && fibre_maps == fixed.len(),
        P,
        "{} maps, {} fibre maps, {} fixed points",
        maps.len(),
        fibre_maps,
        fixed.len()
    );
    // the bijection itself: φ ↦ φ([i(b)])
    let base_point = orbit.class(gpd.identity(b));
    let images: BTreeSet<PointId> = maps.iter().map(|m| m.apply(base_point)).collect();
    let fixed_set: BTreeSet<PointId> = fixed.iter().copied().collect();
    ensure!(
        images == fixed_set,
        P,
        "evaluation at the base point misses fixed points"
    );
    Ok(fixed.len())
}

/// Certificate that the orbit category of the groupoid, built from
/// canonical orbits and equivariant maps, matches the coset category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitCategoryIso {
    pub category: OrbitCategory,
    pub orbits: Vec<CanonicalOrbit>,
    /// Equivariant map realising each coset morphism.
    pub maps: Vec<EquivariantMap>,
}

pub fn verify_orbit_category_iso(gpd: &FiniteGroupoid, b: ObjectId) -> Result<OrbitCategoryIso, VerificationFailure> {
    const P: &str = "groupoid orbit category matches the group orbit category";
    let err = |e: GroupoidError| VerificationFailure::new(P, e.to_string());
    let iso = gpd.isotropy(b).map_err(err)?;
    let cat = OrbitCategory::build(&iso.group);
    cat.check_axioms()?;
    let orbits: Vec<CanonicalOrbit> = cat
        .objects()
        .iter()
        .map(|h| canonical_orbit(gpd, b, h))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    let mut maps = Vec::with_capacity(cat.morphisms().len());
    for (hi, h_orbit) in orbits.iter().enumerate() {
        for (ki, k_orbit) in orbits.iter().enumerate() {
            let direct = enumerate_equivariant_maps(gpd, &h_orbit.space, &k_orbit.space);
            let hom = cat.hom(hi, ki);
            ensure!(
                direct.len() == hom.len(),
                P,
                "hom({},{}) has {} equivariant maps and {} cosets",
                hi,
                ki,
                direct.len(),
                hom.len()
            );
            let mut hit = BTreeSet::new();
            for &id in hom {
                let g = iso.arrow(cat.morphism(id).element);
                // [f] ↦ [g∘f]
                let mapping: Vec<PointId> = h_orbit
                    .representatives
                    .iter()
                    .map(|&f| k_orbit.class(gpd.compose(g, f).expect("composable")))
                    .collect();
                let m = EquivariantMap { mapping };
                let pos = direct.binary_search(&m).map_err(|_| {
                    VerificationFailure::new(P, format!("coset morphism {} is not an equivariant map", id))
                })?;
                ensure!(hit.insert(pos), P, "two cosets give the same map in hom({},{})", hi, ki);
                maps.push((id, m));
            }
        }
    }
    maps.sort_by_key(|(id, _)| *id);
    let maps: Vec<EquivariantMap> = maps.into_iter().map(|(_, m)| m).collect();
    for a in 0..maps.len() {
        for b2 in 0..maps.len() {
            if let Some(c) = cat.compose(a, b2) {
                ensure!(
                    maps[c] == maps[a].after(&maps[b2]),
                    P,
                    "composition of {} and {} not preserved",
                    a,
                    b2
                );
            }
        }
    }
    for o in 0..cat.object_count() {
        let id = &maps[cat.identity(o)];
        ensure!(
            id.mapping.iter().enumerate().all(|(i, p)| p.0 == i),
            P,
            "identity of object {} is not the identity map",
            o
        );
    }
    Ok(OrbitCategoryIso {
        category: cat,
        orbits,
        maps,
    })
}

/// `|Map(G^b/H, X)|` by pruned counting; used for cross-checks.
pub fn count_orbit_maps(
    gpd: &FiniteGroupoid,
    b: ObjectId,
    h: &Subgroup,
    space: &FiniteGSpace,
) -> Result<u128, GroupoidError> {
    let orbit = canonical_orbit(gpd, b, h)?;
    Ok(count_equivariant_maps(gpd, &orbit.space, space))
}

pub(crate) fn subgroup_label(group: &FiniteGroup, s: &Subgroup) -> String {
    let mut out = String::from("{");
    out.push_str(&s.names(group).join(","));
    out.push('}');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::gspace::{object_space, target_fibre_space};

    #[test]
    fn subgroup_counts() {
        assert_eq!(subgroups(&FiniteGroup::cyclic(2)).len(), 2);
        assert_eq!(subgroups(&FiniteGroup::cyclic(4)).len(), 3);
        assert_eq!(subgroups(&FiniteGroup::dihedral(3)).len(), 6);
        assert_eq!(subgroups(&FiniteGroup::quaternion()).len(), 6);
        assert_eq!(subgroups(&FiniteGroup::dihedral(4)).len(), 10);
        for s in subgroups(&FiniteGroup::dihedral(4)) {
            assert!(s.is_subgroup_of_group(&FiniteGroup::dihedral(4)));
        }
    }

    #[test]
    fn conjugacy_class_counts() {
        assert_eq!(conjugacy_classes_of_subgroups(&FiniteGroup::cyclic(2)).len(), 2);
        let s3 = conjugacy_classes_of_subgroups(&FiniteGroup::dihedral(3));
        let sizes: Vec<usize> = s3.iter().map(Vec::len).collect();
        assert_eq!(sizes, [1, 3, 1, 1]);
        let v4 = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
        assert_eq!(conjugacy_classes_of_subgroups(&v4).len(), 5);
    }

    #[test]
    fn z2_orbit_category() {
        let c = OrbitCategory::build(&FiniteGroup::cyclic(2));
        assert_eq!(c.object_count(), 2);
        assert_eq!(c.hom(0, 0).len(), 2);
        assert_eq!(c.hom(0, 1).len(), 1);
        assert_eq!(c.hom(1, 0).len(), 0);
        assert_eq!(c.hom(1, 1).len(), 1);
        c.check_axioms().unwrap();
        let t = OrbitCategory::build(&FiniteGroup::trivial());
        assert_eq!((t.object_count(), t.morphisms().len()), (1, 1));
    }

    #[test]
    fn hom_sizes_match_coset_map_enumeration() {
        for g in [
            FiniteGroup::dihedral(3),
            FiniteGroup::cyclic(4),
            FiniteGroup::quaternion(),
            FiniteGroup::dihedral(4),
        ] {
            let c = OrbitCategory::build(&g);
            c.check_axioms().unwrap();
            for h in 0..c.object_count() {
                for k in 0..c.object_count() {
                    let (hs, _) = c.coset_set(h);
                    let (ks, _) = c.coset_set(k);
                    let maps = hs.equivariant_maps(&ks);
                    assert_eq!(maps.len(), c.hom(h, k).len());
                    for &id in c.hom(h, k) {
                        assert!(maps.contains(&c.coset_map(id)));
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_orbits_of_double_flip() {
        let g = fixtures::double_flip_groupoid();
        let b = g.object_by_name("b").unwrap();
        let iso = g.isotropy(b).unwrap();
        let full = canonical_orbit(&g, b, &Subgroup::full(&iso.group)).unwrap().space;
        assert_eq!(full.len(), 2);
        let obj = object_space(&g);
        assert!(crate::gspace::find_isomorphism(&g, &full, &obj, &|_, _| true).is_some());
        let free = canonical_orbit(&g, b, &Subgroup::trivial(&iso.group)).unwrap().space;
        assert_eq!(free.len(), 4);
        let tf = target_fibre_space(&g, b).unwrap();
        assert!(crate::gspace::find_isomorphism(&g, &free, &tf, &|_, _| true).is_some());
        let (h, _) = verify_orbit_decomposition(&g, &tf, b).unwrap();
        assert_eq!(h.order(), 1);
        let (h, _) = verify_orbit_decomposition(&g, &obj, b).unwrap();
        assert_eq!(h.order(), 2);
    }

    #[test]
    fn fixed_points_of_double_flip() {
        let g = fixtures::double_flip_groupoid();
        let b = g.object_by_name("b").unwrap();
        let iso = g.isotropy(b).unwrap();
        let full = Subgroup::full(&iso.group);
        let x0 = fixtures::vertex_space(&g);
        assert_eq!(fixed_points(&g, &x0, b, &full).unwrap().len(), 2);
        let tf = target_fibre_space(&g, b).unwrap();
        assert!(fixed_points(&g, &tf, b, &full).unwrap().is_empty());
        for h in subgroups(&iso.group) {
            verify_fixed_point_count(&g, &x0, b, &h).unwrap();
            verify_fixed_point_count(&g, &tf, b, &h).unwrap();
        }
    }

    #[test]
    fn orbit_category_iso_examples() {
        let g = fixtures::double_flip_groupoid();
        let b = g.object_by_name("b").unwrap();
        let cert = verify_orbit_category_iso(&g, b).unwrap();
        assert_eq!(cert.category.object_count(), 2);
        let names = [String::from("p"), String::from("q"), String::from("r")];
        let s3 = FiniteGroupoid::pair_with_group(&names, &FiniteGroup::dihedral(3));
        let cert = verify_orbit_category_iso(&s3, ObjectId(1)).unwrap();
        assert_eq!(cert.category.object_count(), 4);
        let triv = FiniteGroupoid::pair_with_group(&names[..1], &FiniteGroup::trivial());
        verify_orbit_category_iso(&triv, ObjectId(0)).unwrap();
    }
}
