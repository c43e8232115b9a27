//! Principal bundles over finite discrete bases.
//!
//! A base is just a list of names and a projection is an index per point.
//! The same checks are used for groupoid bundles and for bundles of the
//! isotropy group, so both report [`BundleViolation`]s by name.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::failure::{ensure, VerificationFailure};
use crate::group::{FiniteGroup, GroupSet};
use crate::groupoid::{FiniteGroupoid, ObjectId};
use crate::gspace::{
    arrow_space, find_isomorphism, induce_space, restrict_to_fibre, target_fibre_space, EquivariantMap, FiniteGSpace,
    GSpaceError, PointId,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BundleViolation {
    ProjectionLength {
        points: usize,
        projection: usize,
    },
    UnknownBasePoint {
        point: String,
        index: usize,
    },
    EmptyFibre {
        base: String,
    },
    NotInvariant {
        point: String,
        arrow: String,
        image: String,
    },
    /// `(p, 1)` and `(p, g)` both go to `(p, p)`.
    NotFree {
        point: String,
        first: String,
        second: String,
    },
    /// `(p, q)` over one base point with `q` not of the form `p·g`.
    NotTransitive {
        point: String,
        other: String,
    },
}

impl BundleViolation {
    pub fn kind(&self) -> &'static str {
        use BundleViolation::*;
        match self {
            ProjectionLength { .. } => "projection-length",
            UnknownBasePoint { .. } => "unknown-base-point",
            EmptyFibre { .. } => "not-surjective",
            NotInvariant { .. } => "not-invariant",
            NotFree { .. } => "shear-not-injective",
            NotTransitive { .. } => "shear-not-surjective",
        }
    }

    pub fn witness(&self) -> Vec<String> {
        use BundleViolation::*;
        match self {
            ProjectionLength { points, projection } => vec![points.to_string(), projection.to_string()],
            UnknownBasePoint { point, index } => vec![point.clone(), index.to_string()],
            EmptyFibre { base } => vec![base.clone()],
            NotInvariant { point, arrow, image } => vec![point.clone(), arrow.clone(), image.clone()],
            NotFree { point, first, second } => vec![point.clone(), first.clone(), second.clone()],
            NotTransitive { point, other } => vec![point.clone(), other.clone()],
        }
    }
}

impl core::fmt::Display for BundleViolation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}({})", self.kind(), self.witness().join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BundleError {
    #[error("not a principal bundle: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<BundleViolation>),
    #[error(transparent)]
    Space(#[from] GSpaceError),
    #[error("bundle group is not the isotropy group at the base object")]
    WrongGroup,
}

/// What the generic checks need to know about an action.
trait Acting {
    fn len(&self) -> usize;
    fn point_name(&self, p: usize) -> String;
    fn label(&self, g: usize) -> String;
    /// Group elements or arrows that act on `p`.
    fn acting_on(&self, p: usize) -> Vec<usize>;
    fn act(&self, p: usize, g: usize) -> usize;
    fn unit_at(&self, p: usize) -> usize;
}

struct SpaceActing<'a>(&'a FiniteGroupoid, &'a FiniteGSpace);

impl Acting for SpaceActing<'_> {
    fn len(&self) -> usize {
        self.1.len()
    }
    fn point_name(&self, p: usize) -> String {
        self.1.name(PointId(p)).to_string()
    }
    fn label(&self, g: usize) -> String {
        self.0.arrow_name(crate::groupoid::ArrowId(g)).to_string()
    }
    fn acting_on(&self, p: usize) -> Vec<usize> {
        self.0
            .arrows_with_target(self.1.anchor(PointId(p)))
            .map(|a| a.0)
            .collect()
    }
    fn act(&self, p: usize, g: usize) -> usize {
        self.1.act(PointId(p), crate::groupoid::ArrowId(g)).expect("anchored").0
    }
    fn unit_at(&self, p: usize) -> usize {
        self.0.identity(self.1.anchor(PointId(p))).0
    }
}

struct SetActing<'a>(&'a FiniteGroup, &'a GroupSet, &'a [String]);

impl Acting for SetActing<'_> {
    fn len(&self) -> usize {
        self.1.size()
    }
    fn point_name(&self, p: usize) -> String {
        self.2[p].clone()
    }
    fn label(&self, g: usize) -> String {
        self.0.name(g).to_string()
    }
    fn acting_on(&self, _: usize) -> Vec<usize> {
        self.0.elements().collect()
    }
    fn act(&self, p: usize, g: usize) -> usize {
        self.1.act(p, g)
    }
    fn unit_at(&self, _: usize) -> usize {
        self.0.identity()
    }
}

/// Surjectivity, invariance, and bijectivity of `(p, g) ↦ (p, p·g)` onto
/// pairs with equal projection.
fn bundle_violations(x: &dyn Acting, base_names: &[String], projection: &[usize]) -> Vec<BundleViolation> {
    use BundleViolation as V;
    let n = x.len();
    if projection.len() != n {
        return vec![V::ProjectionLength {
            points: n,
            projection: projection.len(),
        }];
    }
    let mut out = Vec::new();
    for (p, &m) in projection.iter().enumerate() {
        if m >= base_names.len() {
            out.push(V::UnknownBasePoint {
                point: x.point_name(p),
                index: m,
            });
        }
    }
    if !out.is_empty() {
        return out;
    }
    let mut hit = vec![false; base_names.len()];
    for &m in projection {
        hit[m] = true;
    }
    for (m, h) in hit.iter().enumerate() {
        if !h {
            out.push(V::EmptyFibre {
                base: base_names[m].clone(),
            });
        }
    }
    for p in 0..n {
        let mut seen: Vec<Option<usize>> = vec![None; n];
        for g in x.acting_on(p) {
            let q = x.act(p, g);
            if projection[q] != projection[p] {
                out.push(V::NotInvariant {
                    point: x.point_name(p),
                    arrow: x.label(g),
                    image: x.point_name(q),
                });
            }
            // a repeated value p·g = p·h means p·(g h⁻¹) = p, so the
            // collision with the unit is the one reported
            if q == p && g != x.unit_at(p) {
                out.push(V::NotFree {
                    point: x.point_name(p),
                    first: x.label(x.unit_at(p)),
                    second: x.label(g),
                });
            }
            seen[q].get_or_insert(g);
        }
        for q in 0..n {
            if projection[q] == projection[p] && seen[q].is_none() {
                out.push(V::NotTransitive {
                    point: x.point_name(p),
                    other: x.point_name(q),
                });
            }
        }
    }
    out
}

/// Orbits of the action, as labels.
fn orbit_labels(x: &dyn Acting) -> Vec<usize> {
    let mut uf = crate::util::UnionFind::new(x.len());
    for p in 0..x.len() {
        for g in x.acting_on(p) {
            uf.union(p, x.act(p, g));
        }
    }
    uf.labels()
}

/// The finite reading of the shear map condition: every projection fibre
/// is a single orbit, and only identities fix a point.
fn fibres_are_free_orbits(x: &dyn Acting, projection: &[usize], is_unit: impl Fn(usize) -> bool) -> bool {
    let labels = orbit_labels(x);
    let n = x.len();
    let same_fibre_same_orbit =
        (0..n).all(|p| (0..n).all(|q| (projection[p] == projection[q]) == (labels[p] == labels[q])));
    let free = (0..n).all(|p| x.acting_on(p).into_iter().all(|g| x.act(p, g) != p || is_unit(g)));
    same_fibre_same_orbit && free
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalBundle {
    pub total: FiniteGSpace,
    pub base_names: Vec<String>,
    pub projection: Vec<usize>,
}

impl PrincipalBundle {
    pub fn new(
        gpd: &FiniteGroupoid,
        total: FiniteGSpace,
        base_names: Vec<String>,
        projection: Vec<usize>,
    ) -> Result<Self, BundleError> {
        let v = bundle_violations(&SpaceActing(gpd, &total), &base_names, &projection);
        if !v.is_empty() {
            return Err(BundleError::Invalid(v));
        }
        Ok(PrincipalBundle {
            total,
            base_names,
            projection,
        })
    }

    pub fn project(&self, p: PointId) -> usize {
        self.projection[p.0]
    }

    /// Checks fibres are free orbits, independently of the shear map.
    pub fn fibres_are_free_orbits(&self, gpd: &FiniteGroupoid) -> bool {
        fibres_are_free_orbits(&SpaceActing(gpd, &self.total), &self.projection, |g| {
            let a = crate::groupoid::ArrowId(g);
            gpd.identity(gpd.target(a)) == a
        })
    }
}

/// A principal bundle of a group acting on the right of a finite set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupBundle {
    pub group: FiniteGroup,
    pub set: GroupSet,
    pub names: Vec<String>,
    pub base_names: Vec<String>,
    pub projection: Vec<usize>,
}

impl GroupBundle {
    pub fn new(
        group: FiniteGroup,
        set: GroupSet,
        names: Vec<String>,
        base_names: Vec<String>,
        projection: Vec<usize>,
    ) -> Result<Self, BundleError> {
        let v = bundle_violations(&SetActing(&group, &set, &names), &base_names, &projection);
        if !v.is_empty() {
            return Err(BundleError::Invalid(v));
        }
        Ok(GroupBundle {
            group,
            set,
            names,
            base_names,
            projection,
        })
    }

    /// `copies` free orbits over each of the base points, points named
    /// `m·g`.
    pub fn trivial(group: &FiniteGroup, base_names: Vec<String>) -> Self {
        let order = group.order();
        let k = base_names.len();
        let set = GroupSet::from_fn(group, k * order, |x, g| x / order * order + group.mul(x % order, g))
            .expect("free action");
        let names = (0..k * order)
            .map(|x| format!("{}·{}", base_names[x / order], group.name(x % order)))
            .collect();
        let projection = (0..k * order).map(|x| x / order).collect();
        GroupBundle::new(group.clone(), set, names, base_names, projection).expect("trivial bundle")
    }

    pub fn len(&self) -> usize {
        self.set.size()
    }

    pub fn is_empty(&self) -> bool {
        self.set.size() == 0
    }

    pub fn fibres_are_free_orbits(&self) -> bool {
        let id = self.group.identity();
        fibres_are_free_orbits(&SetActing(&self.group, &self.set, &self.names), &self.projection, |g| {
            g == id
        })
    }
}

/// `𝒢¹ → 𝒢⁰` by target, acted on by composition.
pub fn unit_bundle(gpd: &FiniteGroupoid) -> Result<PrincipalBundle, BundleError> {
    let total = arrow_space(gpd);
    let projection = gpd.arrows().map(|a| gpd.target(a).0).collect();
    let base = gpd.objects().map(|o| gpd.object_name(o).to_string()).collect();
    PrincipalBundle::new(gpd, total, base, projection)
}

/// `𝒢^b` over a point.
pub fn target_fibre_bundle(gpd: &FiniteGroupoid, b: ObjectId) -> Result<PrincipalBundle, BundleError> {
    let total = target_fibre_space(gpd, b)?;
    let n = total.len();
    PrincipalBundle::new(gpd, total, vec!["*".into()], vec![0; n])
}

/// The part of the total space over `b`, as a bundle of the isotropy group.
pub fn restrict_bundle(
    gpd: &FiniteGroupoid,
    bundle: &PrincipalBundle,
    b: ObjectId,
) -> Result<GroupBundle, BundleError> {
    let fib = restrict_to_fibre(gpd, &bundle.total, b)?;
    let projection = fib.points.iter().map(|&p| bundle.project(p)).collect();
    GroupBundle::new(
        fib.isotropy.group,
        fib.set,
        fib.names,
        bundle.base_names.clone(),
        projection,
    )
}

/// `P ×_{𝒢_b^b} 𝒢^b` with `[p, f] ↦ π(p)`.
pub fn extend_bundle(gpd: &FiniteGroupoid, b: ObjectId, bundle: &GroupBundle) -> Result<PrincipalBundle, BundleError> {
    let iso = gpd.isotropy(b).map_err(GSpaceError::from)?;
    if iso.group != bundle.group {
        return Err(BundleError::WrongGroup);
    }
    let induced = induce_space(gpd, b, &bundle.set, &bundle.names)?;
    let projection = induced
        .representatives
        .iter()
        .map(|&(z, _)| bundle.projection[z])
        .collect();
    PrincipalBundle::new(gpd, induced.space, bundle.base_names.clone(), projection)
}

/// Backtracking search for an equivariant bijection of group sets that
/// respects `allowed` everywhere.
pub fn find_set_isomorphism(
    group: &FiniteGroup,
    dom: &GroupSet,
    cod: &GroupSet,
    allowed: &dyn Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    if dom.size() != cod.size() {
        return None;
    }
    let labels = dom.orbit_labels();
    let mut reps = Vec::new();
    for (x, &l) in labels.iter().enumerate() {
        if !reps.iter().any(|&r: &usize| labels[r] == l) {
            reps.push(x);
        }
    }
    let cod_labels = cod.orbit_labels();
    let mut map = vec![usize::MAX; dom.size()];
    let mut used = vec![false; cod.size()];

    // Sends the orbit of `r` by `r·g ↦ y·g`; fails on any clash.
    fn place(group: &FiniteGroup, dom: &GroupSet, cod: &GroupSet, r: usize, y: usize, map: &mut [usize]) -> bool {
        for g in group.elements() {
            let (x, z) = (dom.act(r, g), cod.act(y, g));
            if map[x] != usize::MAX && map[x] != z {
                return false;
            }
            map[x] = z;
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        k: usize,
        group: &FiniteGroup,
        dom: &GroupSet,
        cod: &GroupSet,
        reps: &[usize],
        cod_labels: &[usize],
        allowed: &dyn Fn(usize, usize) -> bool,
        used: &mut [bool],
        map: &mut [usize],
    ) -> bool {
        let Some(&r) = reps.get(k) else {
            return true;
        };
        for y in 0..cod.size() {
            if used[cod_labels[y]] || dom.stabilizer(r) != cod.stabilizer(y) {
                continue;
            }
            let saved = map.to_vec();
            if place(group, dom, cod, r, y, map) && (0..dom.size()).all(|x| map[x] == usize::MAX || allowed(x, map[x]))
            {
                used[cod_labels[y]] = true;
                if search(k + 1, group, dom, cod, reps, cod_labels, allowed, used, map) {
                    return true;
                }
                used[cod_labels[y]] = false;
            }
            map.copy_from_slice(&saved);
        }
        false
    }

    search(0, group, dom, cod, &reps, &cod_labels, allowed, &mut used, &mut map).then_some(map)
}

/// Restricting the extension gives back the original group bundle, by an
/// equivariant bijection over the identity of the base.
pub fn verify_restrict_extend(
    gpd: &FiniteGroupoid,
    b: ObjectId,
    bundle: &GroupBundle,
) -> Result<Vec<usize>, VerificationFailure> {
    const P: &str = "restriction of the extension is isomorphic to the bundle";
    let fail = |e: BundleError| VerificationFailure::new(P, e.to_string());
    let ext = extend_bundle(gpd, b, bundle).map_err(fail)?;
    let back = restrict_bundle(gpd, &ext, b).map_err(fail)?;
    let map = find_set_isomorphism(&bundle.group, &back.set, &bundle.set, &|x, y| {
        back.projection[x] == bundle.projection[y]
    })
    .ok_or_else(|| VerificationFailure::new(P, format!("no isomorphism among {} points", bundle.len())))?;
    certify_set_iso(P, &back, bundle, &map)?;
    Ok(map)
}

fn certify_set_iso(
    p: &'static str,
    dom: &GroupBundle,
    cod: &GroupBundle,
    map: &[usize],
) -> Result<(), VerificationFailure> {
    let mut hit = vec![false; cod.len()];
    for (x, &y) in map.iter().enumerate() {
        ensure!(y < cod.len() && !hit[y], p, "{} is not sent injectively", dom.names[x]);
        hit[y] = true;
        ensure!(
            dom.projection[x] == cod.projection[y],
            p,
            "{} changes base point",
            dom.names[x]
        );
        for g in dom.group.elements() {
            ensure!(
                map[dom.set.act(x, g)] == cod.set.act(y, g),
                p,
                "not equivariant at ({}, {})",
                dom.names[x],
                dom.group.name(g)
            );
        }
    }
    Ok(())
}

/// Extending the restriction gives back the original bundle.
pub fn verify_extend_restrict(
    gpd: &FiniteGroupoid,
    b: ObjectId,
    bundle: &PrincipalBundle,
) -> Result<EquivariantMap, VerificationFailure> {
    const P: &str = "extension of the restriction is isomorphic to the bundle";
    let fail = |e: BundleError| VerificationFailure::new(P, e.to_string());
    let res = restrict_bundle(gpd, bundle, b).map_err(fail)?;
    let ext = extend_bundle(gpd, b, &res).map_err(fail)?;
    let map = find_isomorphism(gpd, &ext.total, &bundle.total, &|x, y| {
        ext.project(x) == bundle.project(y)
    })
    .ok_or_else(|| VerificationFailure::new(P, format!("no isomorphism among {} points", bundle.total.len())))?;
    ensure!(
        map.is_bijective(bundle.total.len()),
        P,
        "search returned a non-bijection"
    );
    for x in ext.total.points() {
        ensure!(
            ext.project(x) == bundle.project(map.apply(x)),
            P,
            "{} changes base point",
            ext.total.name(x)
        );
    }
    crate::gspace::check_equivariant(gpd, &ext.total, &bundle.total, &map.mapping).map_err(|(x, g)| {
        VerificationFailure::new(
            P,
            format!(
                "not equivariant at {} {:?}",
                ext.total.name(x),
                g.map(|g| gpd.arrow_name(g))
            ),
        )
    })?;
    Ok(map)
}
