//! Finite right groupoid-spaces and equivariant maps between them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::failure::{ensure, VerificationFailure};
use crate::group::GroupSet;
use crate::groupoid::{ArrowId, FiniteGroupoid, GroupoidError, IsotropyGroup, ObjectId};
use crate::util::{cartesian, classes_from_labels, UnionFind};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointId(pub usize);

const UNDEFINED: usize = usize::MAX;

/// Space tables by name. `action` lists triples `(x, g, x·g)` for every
/// pair with `anchor(x) = target(g)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawGSpace {
    pub points: Vec<String>,
    pub anchor: Vec<(String, String)>,
    pub action: Vec<(String, String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GSpaceViolation {
    DuplicatePoint(String),
    UnknownPoint(String),
    UnknownObject(String),
    UnknownArrow(String),
    MissingAnchor {
        point: String,
    },
    DuplicateAnchor {
        point: String,
    },
    NotActable {
        point: String,
        arrow: String,
    },
    MissingAction {
        point: String,
        arrow: String,
    },
    DuplicateAction {
        point: String,
        arrow: String,
    },
    AnchorOfResult {
        point: String,
        arrow: String,
        result: String,
    },
    IdentityMoves {
        point: String,
    },
    NotAssociative {
        point: String,
        g: String,
        h: String,
    },
}

impl GSpaceViolation {
    pub fn kind(&self) -> &'static str {
        use GSpaceViolation::*;
        match self {
            DuplicatePoint(_) => "duplicate-name",
            UnknownPoint(_) | UnknownObject(_) | UnknownArrow(_) => "unknown-name",
            MissingAnchor { .. } | DuplicateAnchor { .. } => "anchor",
            NotActable { .. } | MissingAction { .. } | DuplicateAction { .. } => "action-domain",
            AnchorOfResult { .. } => "anchor",
            IdentityMoves { .. } => "identity",
            NotAssociative { .. } => "associativity",
        }
    }

    pub fn witness(&self) -> Vec<String> {
        use GSpaceViolation::*;
        match self {
            DuplicatePoint(n) | UnknownPoint(n) | UnknownObject(n) | UnknownArrow(n) => {
                vec![n.clone()]
            }
            MissingAnchor { point } | DuplicateAnchor { point } | IdentityMoves { point } => {
                vec![point.clone()]
            }
            NotActable { point, arrow } | MissingAction { point, arrow } | DuplicateAction { point, arrow } => {
                vec![point.clone(), arrow.clone()]
            }
            AnchorOfResult { point, arrow, result } => vec![point.clone(), arrow.clone(), result.clone()],
            NotAssociative { point, g, h } => vec![point.clone(), g.clone(), h.clone()],
        }
    }
}

impl fmt::Display for GSpaceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violation at ({})", self.kind(), self.witness().join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GSpaceError {
    #[error("invalid space: {} violation(s), first: {}", .0.len(), .0[0])]
    Invalid(Vec<GSpaceViolation>),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
    #[error("spaces are over groupoids of different sizes")]
    Mismatch,
}

/// A finite right space over a [`FiniteGroupoid`], stored as a full action
/// table. The groupoid itself is passed to every operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGSpace {
    names: Vec<String>,
    anchor: Vec<ObjectId>,
    arrow_count: usize,
    action: Vec<usize>,
}

/// Validates a space given by name tables against `gpd`.
pub fn validate_gspace(gpd: &FiniteGroupoid, raw: &RawGSpace) -> Result<FiniteGSpace, GSpaceError> {
    use GSpaceViolation as V;
    let mut out = Vec::new();
    let mut points = BTreeMap::new();
    for (i, p) in raw.points.iter().enumerate() {
        if points.insert(p.clone(), i).is_some() {
            out.push(V::DuplicatePoint(p.clone()));
        }
    }
    let n = raw.points.len();
    let mut anchor = vec![ObjectId(UNDEFINED); n];
    for (p, o) in &raw.anchor {
        let Some(&pi) = points.get(p) else {
            out.push(V::UnknownPoint(p.clone()));
            continue;
        };
        let Some(oi) = gpd.object_by_name(o) else {
            out.push(V::UnknownObject(o.clone()));
            continue;
        };
        if anchor[pi].0 != UNDEFINED {
            out.push(V::DuplicateAnchor { point: p.clone() });
        }
        anchor[pi] = oi;
    }
    for (i, a) in anchor.iter().enumerate() {
        if a.0 == UNDEFINED {
            out.push(V::MissingAnchor {
                point: raw.points[i].clone(),
            });
        }
    }
    if !out.is_empty() {
        return Err(GSpaceError::Invalid(out));
    }
    let na = gpd.arrow_count();
    let mut action = vec![UNDEFINED; n * na];
    for (p, g, q) in &raw.action {
        let (Some(&pi), Some(gi), Some(&qi)) = (points.get(p), gpd.arrow_by_name(g), points.get(q)) else {
            if !points.contains_key(p) {
                out.push(V::UnknownPoint(p.clone()));
            }
            if gpd.arrow_by_name(g).is_none() {
                out.push(V::UnknownArrow(g.clone()));
            }
            if !points.contains_key(q) {
                out.push(V::UnknownPoint(q.clone()));
            }
            continue;
        };
        if anchor[pi] != gpd.target(gi) {
            out.push(V::NotActable {
                point: p.clone(),
                arrow: g.clone(),
            });
            continue;
        }
        if action[pi * na + gi.0] != UNDEFINED {
            out.push(V::DuplicateAction {
                point: p.clone(),
                arrow: g.clone(),
            });
        }
        action[pi * na + gi.0] = qi;
    }
    for p in 0..n {
        for g in gpd.arrows_with_target(anchor[p]) {
            if action[p * na + g.0] == UNDEFINED {
                out.push(V::MissingAction {
                    point: raw.points[p].clone(),
                    arrow: gpd.arrow_name(g).into(),
                });
            }
        }
    }
    if !out.is_empty() {
        return Err(GSpaceError::Invalid(out));
    }
    let space = FiniteGSpace {
        names: raw.points.clone(),
        anchor,
        arrow_count: na,
        action,
    };
    let v = space.violations(gpd);
    if v.is_empty() {
        Ok(space)
    } else {
        Err(GSpaceError::Invalid(v))
    }
}

impl FiniteGSpace {
    /// Builds a space from an action function and validates the axioms.
    /// `act` is only called on pairs with `anchor(x) == target(g)`.
    pub fn from_fn(
        gpd: &FiniteGroupoid,
        names: Vec<String>,
        anchor: Vec<ObjectId>,
        act: impl Fn(PointId, ArrowId) -> PointId,
    ) -> Result<Self, GSpaceError> {
        let space = Self::from_fn_unchecked(gpd, names, anchor, act);
        let v = space.violations(gpd);
        if v.is_empty() {
            Ok(space)
        } else {
            Err(GSpaceError::Invalid(v))
        }
    }

    pub(crate) fn from_fn_unchecked(
        gpd: &FiniteGroupoid,
        names: Vec<String>,
        anchor: Vec<ObjectId>,
        act: impl Fn(PointId, ArrowId) -> PointId,
    ) -> Self {
        let na = gpd.arrow_count();
        let mut action = vec![UNDEFINED; names.len() * na];
        for p in 0..names.len() {
            for g in gpd.arrows_with_target(anchor[p]) {
                action[p * na + g.0] = act(PointId(p), g).0;
            }
        }
        FiniteGSpace {
            names,
            anchor,
            arrow_count: na,
            action,
        }
    }

    fn violations(&self, gpd: &FiniteGroupoid) -> Vec<GSpaceViolation> {
        use GSpaceViolation as V;
        let mut out = Vec::new();
        let an = |g: ArrowId| String::from(gpd.arrow_name(g));
        for x in self.points() {
            let xn = self.name(x).to_string();
            if self.act(x, gpd.identity(self.anchor(x))) != Some(x) {
                out.push(V::IdentityMoves { point: xn.clone() });
            }
            for g in gpd.arrows_with_target(self.anchor(x)) {
                let Some(xg) = self.act(x, g) else { continue };
                if xg.0 >= self.len() {
                    out.push(V::UnknownPoint(format!("#{}", xg.0)));
                    continue;
                }
                if self.anchor(xg) != gpd.source(g) {
                    out.push(V::AnchorOfResult {
                        point: xn.clone(),
                        arrow: an(g),
                        result: self.name(xg).into(),
                    });
                    continue;
                }
                for h in gpd.arrows_with_target(gpd.source(g)) {
                    let lhs = self.act(xg, h);
                    let rhs = gpd.compose(g, h).and_then(|gh| self.act(x, gh));
                    if lhs.is_none() || lhs != rhs {
                        out.push(V::NotAssociative {
                            point: xn.clone(),
                            g: an(g),
                            h: an(h),
                        });
                    }
                }
            }
        }
        out
    }

    pub fn to_raw(&self, gpd: &FiniteGroupoid) -> RawGSpace {
        let mut action = Vec::new();
        for x in self.points() {
            for g in gpd.arrows_with_target(self.anchor(x)) {
                let y = self.act(x, g).expect("total on anchored pairs");
                action.push((self.name(x).into(), gpd.arrow_name(g).into(), self.name(y).into()));
            }
        }
        RawGSpace {
            points: self.names.clone(),
            anchor: self
                .points()
                .map(|x| (self.name(x).into(), gpd.object_name(self.anchor(x)).into()))
                .collect(),
            action,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = PointId> + Clone {
        (0..self.len()).map(PointId)
    }

    pub fn name(&self, x: PointId) -> &str {
        &self.names[x.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn point_by_name(&self, name: &str) -> Option<PointId> {
        self.names.iter().position(|n| n == name).map(PointId)
    }

    #[inline]
    pub fn anchor(&self, x: PointId) -> ObjectId {
        self.anchor[x.0]
    }

    /// `x·g`, defined when `anchor(x) == target(g)`.
    #[inline]
    pub fn act(&self, x: PointId, g: ArrowId) -> Option<PointId> {
        let y = self.action[x.0 * self.arrow_count + g.0];
        (y != UNDEFINED).then_some(PointId(y))
    }

    pub fn fibre(&self, b: ObjectId) -> Vec<PointId> {
        self.points().filter(|&x| self.anchor(x) == b).collect()
    }

    /// Same space with points renamed and reordered: new point `i` is old
    /// point `order[i]`.
    pub fn permuted(&self, gpd: &FiniteGroupoid, order: &[usize], names: Vec<String>) -> Self {
        let mut new_index = vec![0; order.len()];
        for (i, &o) in order.iter().enumerate() {
            new_index[o] = i;
        }
        let anchor = order.iter().map(|&o| self.anchor[o]).collect();
        Self::from_fn_unchecked(gpd, names, anchor, |x, g| {
            PointId(new_index[self.act(PointId(order[x.0]), g).expect("defined").0])
        })
    }

    pub fn disjoint_union(&self, gpd: &FiniteGroupoid, other: &FiniteGSpace) -> Self {
        let n = self.len();
        let names = self.names.iter().chain(&other.names).cloned().collect();
        let anchor = self.anchor.iter().chain(&other.anchor).copied().collect();
        Self::from_fn_unchecked(gpd, names, anchor, |x, g| {
            if x.0 < n {
                self.act(x, g).expect("defined")
            } else {
                PointId(other.act(PointId(x.0 - n), g).expect("defined").0 + n)
            }
        })
    }

    /// Orbit label per point, numbered by first occurrence.
    pub fn orbit_labels(&self, gpd: &FiniteGroupoid) -> Vec<usize> {
        let mut uf = UnionFind::new(self.len());
        for x in self.points() {
            for g in gpd.arrows_with_target(self.anchor(x)) {
                uf.union(x.0, self.act(x, g).expect("defined").0);
            }
        }
        uf.labels()
    }

    /// Arrows fixing `x`; all are self-arrows at `anchor(x)`.
    pub fn stabilizer(&self, gpd: &FiniteGroupoid, x: PointId) -> Vec<ArrowId> {
        gpd.hom(self.anchor(x), self.anchor(x))
            .filter(|&g| self.act(x, g) == Some(x))
            .collect()
    }

    pub fn is_transitive(&self, gpd: &FiniteGroupoid) -> bool {
        !self.is_empty() && self.orbit_labels(gpd).iter().all(|&l| l == 0)
    }
}

/// The object space: anchor is the identity and `y·g = source(g)`.
pub fn object_space(gpd: &FiniteGroupoid) -> FiniteGSpace {
    let names = gpd.objects().map(|o| gpd.object_name(o).to_string()).collect();
    let anchor = gpd.objects().collect();
    FiniteGSpace::from_fn_unchecked(gpd, names, anchor, |_, g| PointId(gpd.source(g).0))
}

/// Arrows with target `b`, anchored by source and acted on by composition.
/// Point `i` is `target_fibre(b).arrows[i]`.
pub fn target_fibre_space(gpd: &FiniteGroupoid, b: ObjectId) -> Result<FiniteGSpace, GSpaceError> {
    let fibre = gpd.target_fibre(b)?;
    Ok(arrow_subspace(gpd, &fibre.arrows))
}

/// All arrows, anchored by source and acted on by composition.
pub fn arrow_space(gpd: &FiniteGroupoid) -> FiniteGSpace {
    let all: Vec<ArrowId> = gpd.arrows().collect();
    arrow_subspace(gpd, &all)
}

fn arrow_subspace(gpd: &FiniteGroupoid, arrows: &[ArrowId]) -> FiniteGSpace {
    let mut index = vec![UNDEFINED; gpd.arrow_count()];
    for (i, a) in arrows.iter().enumerate() {
        index[a.0] = i;
    }
    let names = arrows.iter().map(|&a| gpd.arrow_name(a).to_string()).collect();
    let anchor = arrows.iter().map(|&a| gpd.source(a)).collect();
    FiniteGSpace::from_fn_unchecked(gpd, names, anchor, |x, g| {
        PointId(index[gpd.compose(arrows[x.0], g).expect("composable").0])
    })
}

/// A fibre `Y_b` with its right action of the isotropy group at `b`.
/// Local point `i` is `points[i]` of the ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibreSpace {
    pub base: ObjectId,
    pub isotropy: IsotropyGroup,
    pub points: Vec<PointId>,
    pub names: Vec<String>,
    pub set: GroupSet,
}

impl FibreSpace {
    pub fn local_index(&self, x: PointId) -> Option<usize> {
        self.points.iter().position(|&p| p == x)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn restrict_to_fibre(gpd: &FiniteGroupoid, space: &FiniteGSpace, b: ObjectId) -> Result<FibreSpace, GSpaceError> {
    let isotropy = gpd.isotropy(b)?;
    let points = space.fibre(b);
    let mut local = BTreeMap::new();
    for (i, &p) in points.iter().enumerate() {
        local.insert(p, i);
    }
    let set = GroupSet::from_fn(&isotropy.group, points.len(), |i, h| {
        local[&space.act(points[i], isotropy.arrow(h)).expect("fibre is closed")]
    })
    .expect("restricted action is a group action");
    let names = points.iter().map(|&p| space.name(p).to_string()).collect();
    Ok(FibreSpace {
        base: b,
        isotropy,
        points,
        names,
        set,
    })
}

/// `Z ×_{G_b^b} G^b` together with a representative pair per point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSpace {
    pub space: FiniteGSpace,
    /// `(z, f)` with `f` in the target fibre at the base.
    pub representatives: Vec<(usize, ArrowId)>,
    /// Point of every pair, indexed `z * arrow_count + f`.
    class_of: Vec<usize>,
    arrow_count: usize,
}

impl InducedSpace {
    /// The point `[z, f]`.
    pub fn class(&self, z: usize, f: ArrowId) -> PointId {
        PointId(self.class_of[z * self.arrow_count + f.0])
    }
}

/// Induces a space from a right set of the isotropy group at `b`:
/// pairs `(z, f)` with `target(f) = b` modulo `(z·h, f) ~ (z, h∘f)`,
/// anchored at `source(f)` and acted on by `[z, f]·g = [z, f∘g]`.
pub fn induce_space(
    gpd: &FiniteGroupoid,
    b: ObjectId,
    z: &GroupSet,
    z_names: &[String],
) -> Result<InducedSpace, GSpaceError> {
    gpd.require_transitive()?;
    let iso = gpd.isotropy(b)?;
    let fibre = gpd.target_fibre(b)?;
    let na = gpd.arrow_count();
    let key = |zi: usize, f: ArrowId| zi * na + f.0;
    let mut uf = UnionFind::new(z.size() * na);
    for zi in 0..z.size() {
        for &f in &fibre.arrows {
            for (h, &ha) in iso.arrows.iter().enumerate() {
                let hf = gpd.compose(ha, f).expect("isotropy composes with fibre");
                uf.union(key(z.act(zi, h), f), key(zi, hf));
            }
        }
    }
    let labels = uf.labels();
    let mut class_of = vec![UNDEFINED; z.size() * na];
    let mut representatives: Vec<(usize, ArrowId)> = Vec::new();
    let mut label_to_point: BTreeMap<usize, usize> = BTreeMap::new();
    for zi in 0..z.size() {
        for &f in &fibre.arrows {
            let next = representatives.len();
            let p = *label_to_point.entry(labels[key(zi, f)]).or_insert(next);
            if p == next {
                representatives.push((zi, f));
            }
            class_of[key(zi, f)] = p;
        }
    }
    let names = representatives
        .iter()
        .map(|&(zi, f)| format!("[{},{}]", z_names[zi], gpd.arrow_name(f)))
        .collect();
    let anchor = representatives.iter().map(|&(_, f)| gpd.source(f)).collect();
    let space = FiniteGSpace::from_fn(gpd, names, anchor, |x, g| {
        let (zi, f) = representatives[x.0];
        PointId(class_of[key(zi, gpd.compose(f, g).expect("composable"))])
    })?;
    // every member of a class must act the same way
    for zi in 0..z.size() {
        for &f in &fibre.arrows {
            let x = PointId(class_of[key(zi, f)]);
            for g in gpd.arrows_with_target(gpd.source(f)) {
                let fg = gpd.compose(f, g).expect("composable");
                debug_assert_eq!(space.act(x, g), Some(PointId(class_of[key(zi, fg)])));
            }
        }
    }
    Ok(InducedSpace {
        space,
        representatives,
        class_of,
        arrow_count: na,
    })
}

/// An equivariant map, as the image of every point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EquivariantMap {
    pub mapping: Vec<PointId>,
}

impl EquivariantMap {
    pub fn apply(&self, x: PointId) -> PointId {
        self.mapping[x.0]
    }

    pub fn is_bijective(&self, codomain_len: usize) -> bool {
        let set: BTreeSet<PointId> = self.mapping.iter().copied().collect();
        self.mapping.len() == codomain_len && set.len() == codomain_len
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &EquivariantMap) -> EquivariantMap {
        EquivariantMap {
            mapping: other.mapping.iter().map(|&x| self.apply(x)).collect(),
        }
    }
}

/// Checks anchors commute and `ψ(x·g) = ψ(x)·g` everywhere. Returns the
/// first failing point and arrow.
pub fn check_equivariant(
    gpd: &FiniteGroupoid,
    domain: &FiniteGSpace,
    codomain: &FiniteGSpace,
    map: &[PointId],
) -> Result<(), (PointId, Option<ArrowId>)> {
    if map.len() != domain.len() {
        return Err((PointId(map.len()), None));
    }
    for x in domain.points() {
        let y = map[x.0];
        if y.0 >= codomain.len() || codomain.anchor(y) != domain.anchor(x) {
            return Err((x, None));
        }
        for g in gpd.arrows_with_target(domain.anchor(x)) {
            if Some(map[domain.act(x, g).expect("defined").0]) != codomain.act(y, g) {
                return Err((x, Some(g)));
            }
        }
    }
    Ok(())
}

fn orbit_representatives(gpd: &FiniteGroupoid, space: &FiniteGSpace) -> Vec<PointId> {
    let labels = space.orbit_labels(gpd);
    let mut reps = Vec::new();
    for x in space.points() {
        if labels[x.0] == reps.len() {
            reps.push(x);
        }
    }
    reps
}

/// Points of `codomain` that a representative `r` may be sent to: same
/// anchor, and fixed by everything fixing `r`.
fn admissible_images(gpd: &FiniteGroupoid, domain: &FiniteGSpace, codomain: &FiniteGSpace, r: PointId) -> Vec<PointId> {
    let stab = domain.stabilizer(gpd, r);
    codomain
        .fibre(domain.anchor(r))
        .into_iter()
        .filter(|&y| stab.iter().all(|&g| codomain.act(y, g) == Some(y)))
        .collect()
}

/// Extends `r ↦ y` over the orbit of `r` by `r·g ↦ y·g`.
fn fill_orbit(
    gpd: &FiniteGroupoid,
    domain: &FiniteGSpace,
    codomain: &FiniteGSpace,
    r: PointId,
    y: PointId,
    map: &mut [PointId],
) {
    // reach every point of the orbit by a single arrow g with target anchor(r)
    for g in gpd.arrows_with_target(domain.anchor(r)) {
        let x = domain.act(r, g).expect("defined");
        map[x.0] = codomain.act(y, g).expect("defined");
    }
}

/// Every equivariant map `domain → codomain`, in lexicographic order.
pub fn enumerate_equivariant_maps(
    gpd: &FiniteGroupoid,
    domain: &FiniteGSpace,
    codomain: &FiniteGSpace,
) -> Vec<EquivariantMap> {
    let reps = orbit_representatives(gpd, domain);
    let candidates: Vec<Vec<usize>> = reps
        .iter()
        .map(|&r| {
            admissible_images(gpd, domain, codomain, r)
                .into_iter()
                .map(|y| y.0)
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for choice in cartesian(&candidates) {
        let mut map = vec![PointId(UNDEFINED); domain.len()];
        for (&r, &y) in reps.iter().zip(&choice) {
            fill_orbit(gpd, domain, codomain, r, PointId(y), &mut map);
        }
        debug_assert!(check_equivariant(gpd, domain, codomain, &map).is_ok());
        out.push(EquivariantMap { mapping: map });
    }
    out.sort();
    out
}

/// Number of equivariant maps without listing them.
pub fn count_equivariant_maps(gpd: &FiniteGroupoid, domain: &FiniteGSpace, codomain: &FiniteGSpace) -> u128 {
    orbit_representatives(gpd, domain)
        .into_iter()
        .map(|r| admissible_images(gpd, domain, codomain, r).len() as u128)
        .product()
}

/// Searches for an equivariant bijection satisfying `allowed(x, y)` on
/// every orbit representative. Backtracks over orbits.
pub fn find_isomorphism(
    gpd: &FiniteGroupoid,
    domain: &FiniteGSpace,
    codomain: &FiniteGSpace,
    allowed: &dyn Fn(PointId, PointId) -> bool,
) -> Option<EquivariantMap> {
    if domain.len() != codomain.len() {
        return None;
    }
    let reps = orbit_representatives(gpd, domain);
    let target_labels = codomain.orbit_labels(gpd);
    let candidates: Vec<Vec<PointId>> = reps
        .iter()
        .map(|&r| {
            let stab = domain.stabilizer(gpd, r);
            codomain
                .fibre(domain.anchor(r))
                .into_iter()
                .filter(|&y| codomain.stabilizer(gpd, y) == stab && allowed(r, y))
                .collect()
        })
        .collect();
    let mut map = vec![PointId(UNDEFINED); domain.len()];
    let mut used = vec![false; target_labels.iter().max().map_or(0, |m| m + 1)];
    fn search(
        k: usize,
        ctx: (&FiniteGroupoid, &FiniteGSpace, &FiniteGSpace),
        reps: &[PointId],
        candidates: &[Vec<PointId>],
        labels: &[usize],
        used: &mut [bool],
        map: &mut [PointId],
    ) -> bool {
        if k == reps.len() {
            return true;
        }
        for &y in &candidates[k] {
            if used[labels[y.0]] {
                continue;
            }
            used[labels[y.0]] = true;
            fill_orbit(ctx.0, ctx.1, ctx.2, reps[k], y, map);
            if search(k + 1, ctx, reps, candidates, labels, used, map) {
                return true;
            }
            used[labels[y.0]] = false;
        }
        false
    }
    let found = search(
        0,
        (gpd, domain, codomain),
        &reps,
        &candidates,
        &target_labels,
        &mut used,
        &mut map,
    );
    (found && map.iter().all(|p| p.0 != UNDEFINED) && check_equivariant(gpd, domain, codomain, &map).is_ok())
        .then_some(EquivariantMap { mapping: map })
}

/// Certificate that `Y_b ×_{G_b^b} G^b → Y`, `[y, f] ↦ y·f`, is an
/// equivariant bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InductionCertificate {
    pub induced: InducedSpace,
    pub map: EquivariantMap,
}

pub fn verify_induction_iso(
    gpd: &FiniteGroupoid,
    space: &FiniteGSpace,
    b: ObjectId,
) -> Result<InductionCertificate, VerificationFailure> {
    const P: &str = "space is induced from its fibre";
    let err = |e: GSpaceError| VerificationFailure::new(P, e.to_string());
    let fibre = restrict_to_fibre(gpd, space, b).map_err(err)?;
    let induced = induce_space(gpd, b, &fibre.set, &fibre.names).map_err(err)?;
    let tf = gpd.target_fibre(b).expect("object exists");
    let mut map = vec![PointId(UNDEFINED); induced.space.len()];
    for (zi, &y) in fibre.points.iter().enumerate() {
        for &f in &tf.arrows {
            let p = induced.class(zi, f);
            let image = space.act(y, f).expect("anchor of fibre point is b");
            ensure!(
                map[p.0] == PointId(UNDEFINED) || map[p.0] == image,
                P,
                "[{},{}] has two images",
                space.name(y),
                gpd.arrow_name(f)
            );
            map[p.0] = image;
        }
    }
    let map = EquivariantMap { mapping: map };
    ensure!(
        map.is_bijective(space.len()),
        P,
        "induced space has {} points, space has {}, map not bijective",
        induced.space.len(),
        space.len()
    );
    if let Err((x, g)) = check_equivariant(gpd, &induced.space, space, &map.mapping) {
        return Err(VerificationFailure::new(
            P,
            format!(
                "equivariance fails at {} {}",
                induced.space.name(x),
                g.map_or("(anchor)", |g| gpd.arrow_name(g))
            ),
        ));
    }
    Ok(InductionCertificate { induced, map })
}

/// Unique equivariant extension of a fibre map `φ: Y_b → X_b` (given on
/// local indices): `y ↦ φ(y·g)·g⁻¹` for any `g: b → anchor(y)`.
pub fn extend_map(
    gpd: &FiniteGroupoid,
    domain: &FiniteGSpace,
    codomain: &FiniteGSpace,
    b: ObjectId,
    fibre_map: &[usize],
) -> Result<EquivariantMap, VerificationFailure> {
    const P: &str = "fibre map extends equivariantly";
    let err = |e: GSpaceError| VerificationFailure::new(P, e.to_string());
    let yb = restrict_to_fibre(gpd, domain, b).map_err(err)?;
    let xb = restrict_to_fibre(gpd, codomain, b).map_err(err)?;
    ensure!(
        fibre_map.len() == yb.len() && yb.set.is_equivariant(&xb.set, fibre_map),
        P,
        "fibre map is not isotropy-equivariant"
    );
    let mut mapping = Vec::with_capacity(domain.len());
    for y in domain.points() {
        let g = gpd
            .some_arrow(b, domain.anchor(y))
            .ok_or_else(|| VerificationFailure::new(P, "groupoid is not transitive"))?;
        let yg = domain.act(y, g).expect("defined");
        let image = xb.points[fibre_map[yb.local_index(yg).expect("lands in fibre")]];
        mapping.push(codomain.act(image, gpd.inverse(g)).expect("defined"));
    }
    if let Err((x, _)) = check_equivariant(gpd, domain, codomain, &mapping) {
        return Err(VerificationFailure::new(
            P,
            format!("extension is not equivariant at {}", domain.name(x)),
        ));
    }
    Ok(EquivariantMap { mapping })
}

/// Restriction of a map to the fibres at `b`, on local indices.
pub fn restrict_map(domain_fibre: &FibreSpace, codomain_fibre: &FibreSpace, map: &EquivariantMap) -> Vec<usize> {
    domain_fibre
        .points
        .iter()
        .map(|&y| codomain_fibre.local_index(map.apply(y)).expect("anchors commute"))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionCertificate {
    pub global_maps: usize,
    pub fibre_maps: usize,
}

/// Certifies that restriction to the fibre at `b` is a bijection between
/// equivariant maps `Y → X` and isotropy-equivariant maps `Y_b → X_b`,
/// with extension as its inverse.
pub fn verify_rest_bijection(
    gpd: &FiniteGroupoid,
    domain: &FiniteGSpace,
    codomain: &FiniteGSpace,
    b: ObjectId,
) -> Result<RestrictionCertificate, VerificationFailure> {
    const P: &str = "maps are determined by a fibre";
    let err = |e: GSpaceError| VerificationFailure::new(P, e.to_string());
    let yb = restrict_to_fibre(gpd, domain, b).map_err(err)?;
    let xb = restrict_to_fibre(gpd, codomain, b).map_err(err)?;
    let global = enumerate_equivariant_maps(gpd, domain, codomain);
    let local = yb.set.equivariant_maps(&xb.set);
    let local_set: BTreeSet<&Vec<usize>> = local.iter().collect();
    let mut restricted = BTreeSet::new();
    for m in &global {
        let r = restrict_map(&yb, &xb, m);
        ensure!(local_set.contains(&r), P, "restriction {:?} is not an isotropy map", r);
        let back = extend_map(gpd, domain, codomain, b, &r)?;
        ensure!(&back == m, P, "extending the restriction of {:?} changes it", m.mapping);
        restricted.insert(r);
    }
    ensure!(
        restricted.len() == global.len(),
        P,
        "two maps have the same restriction"
    );
    for phi in &local {
        let ext = extend_map(gpd, domain, codomain, b, phi)?;
        ensure!(
            &restrict_map(&yb, &xb, &ext) == phi,
            P,
            "restricting the extension of {:?} changes it",
            phi
        );
    }
    ensure!(
        global.len() == local.len(),
        P,
        "{} global maps, {} fibre maps",
        global.len(),
        local.len()
    );
    Ok(RestrictionCertificate {
        global_maps: global.len(),
        fibre_maps: local.len(),
    })
}

/// Orbits of a space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub classes: Vec<Vec<PointId>>,
    pub class_of: Vec<usize>,
}

pub fn quotient(gpd: &FiniteGroupoid, space: &FiniteGSpace) -> Quotient {
    let class_of = space.orbit_labels(gpd);
    let classes = classes_from_labels(&class_of)
        .into_iter()
        .map(|c| c.into_iter().map(PointId).collect())
        .collect();
    Quotient { classes, class_of }
}

/// The two inverse maps between `Y/G` and `Y_b/G_b^b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientCertificate {
    pub global_classes: usize,
    pub fibre_classes: usize,
    /// Fibre orbit → global orbit.
    pub j: Vec<usize>,
    /// Global orbit → fibre orbit.
    pub r: Vec<usize>,
}

pub fn verify_quotient(
    gpd: &FiniteGroupoid,
    space: &FiniteGSpace,
    b: ObjectId,
) -> Result<QuotientCertificate, VerificationFailure> {
    const P: &str = "quotient agrees with fibre quotient";
    let yb = restrict_to_fibre(gpd, space, b).map_err(|e| VerificationFailure::new(P, e.to_string()))?;
    let global = quotient(gpd, space);
    let local_labels = yb.set.orbit_labels();
    let local_count = yb.set.orbit_count();
    // j([y]) = [y]
    let mut j = vec![UNDEFINED; local_count];
    for (i, &y) in yb.points.iter().enumerate() {
        let c = global.class_of[y.0];
        ensure!(
            j[local_labels[i]] == UNDEFINED || j[local_labels[i]] == c,
            P,
            "j is not well defined at {}",
            space.name(y)
        );
        j[local_labels[i]] = c;
    }
    // r([y]) = [y·g] for every g: b → anchor(y) and every representative y
    let mut r = vec![UNDEFINED; global.classes.len()];
    for y in space.points() {
        for g in gpd.hom(b, space.anchor(y)) {
            let yg = space.act(y, g).expect("defined");
            let l = local_labels[yb.local_index(yg).expect("lands in fibre")];
            let c = global.class_of[y.0];
            ensure!(
                r[c] == UNDEFINED || r[c] == l,
                P,
                "r is not well defined at {}·{}",
                space.name(y),
                gpd.arrow_name(g)
            );
            r[c] = l;
        }
    }
    ensure!(
        r.iter().all(|&l| l != UNDEFINED),
        P,
        "some orbit has no point over reachable objects"
    );
    for (l, &c) in j.iter().enumerate() {
        ensure!(r[c] == l, P, "r∘j moves fibre orbit {}", l);
    }
    for (c, &l) in r.iter().enumerate() {
        ensure!(j[l] == c, P, "j∘r moves orbit {}", c);
    }
    Ok(QuotientCertificate {
        global_classes: global.classes.len(),
        fibre_classes: local_count,
        j,
        r,
    })
}

/// `X ×_{G⁰} Y` with the diagonal action. Point names are `(x,y)`; the
/// second field lists the pair behind each point.
pub fn product(gpd: &FiniteGroupoid, x: &FiniteGSpace, y: &FiniteGSpace) -> (FiniteGSpace, Vec<(PointId, PointId)>) {
    let mut pairs = Vec::new();
    for p in x.points() {
        for q in y.points() {
            if x.anchor(p) == y.anchor(q) {
                pairs.push((p, q));
            }
        }
    }
    let index: BTreeMap<(PointId, PointId), usize> = pairs.iter().enumerate().map(|(i, &pq)| (pq, i)).collect();
    let names = pairs
        .iter()
        .map(|&(p, q)| format!("({},{})", x.name(p), y.name(q)))
        .collect();
    let anchor = pairs.iter().map(|&(p, _)| x.anchor(p)).collect();
    let space = FiniteGSpace::from_fn_unchecked(gpd, names, anchor, |i, g| {
        let (p, q) = pairs[i.0];
        PointId(index[&(x.act(p, g).expect("defined"), y.act(q, g).expect("defined"))])
    });
    (space, pairs)
}

/// `X × Z` for a plain set `Z`, anchored by `X` and acted on in the first
/// factor only. Point `(x, z)` has index `x * |Z| + z`.
pub fn fibrewise_product(gpd: &FiniteGroupoid, x: &FiniteGSpace, z_names: &[String]) -> FiniteGSpace {
    let k = z_names.len();
    let mut names = Vec::with_capacity(x.len() * k);
    let mut anchor = Vec::with_capacity(x.len() * k);
    for p in x.points() {
        for z in z_names {
            names.push(format!("({},{})", x.name(p), z));
            anchor.push(x.anchor(p));
        }
    }
    FiniteGSpace::from_fn_unchecked(gpd, names, anchor, |i, g| {
        let (p, z) = (i.0 / k, i.0 % k);
        PointId(x.act(PointId(p), g).expect("defined").0 * k + z)
    })
}

/// For trivial `Y`, certifies `(x, y) ↦ (x, y·g)` with `g: b → anchor(y)` is
/// an equivariant bijection `X ×_{G⁰} Y → X × Y_b`.
pub fn verify_fibrewise_product(
    gpd: &FiniteGroupoid,
    x: &FiniteGSpace,
    y: &FiniteGSpace,
    b: ObjectId,
) -> Result<EquivariantMap, VerificationFailure> {
    const P: &str = "product with a trivial space is fibrewise";
    let yb = restrict_to_fibre(gpd, y, b).map_err(|e| VerificationFailure::new(P, e.to_string()))?;
    ensure!(
        yb.set.is_trivial_action(),
        P,
        "second factor has nontrivial isotropy action"
    );
    let (prod, pairs) = product(gpd, x, y);
    let fib = fibrewise_product(gpd, x, &yb.names);
    let mut mapping = Vec::with_capacity(prod.len());
    for &(p, q) in &pairs {
        let g = gpd
            .some_arrow(b, y.anchor(q))
            .ok_or_else(|| VerificationFailure::new(P, "groupoid is not transitive"))?;
        let z = yb.local_index(y.act(q, g).expect("defined")).expect("fibre point");
        mapping.push(PointId(p.0 * yb.len() + z));
    }
    let map = EquivariantMap { mapping };
    ensure!(map.is_bijective(fib.len()), P, "comparison map is not bijective");
    if let Err((pt, _)) = check_equivariant(gpd, &prod, &fib, &map.mapping) {
        return Err(VerificationFailure::new(
            P,
            format!("comparison map not equivariant at {}", prod.name(pt)),
        ));
    }
    Ok(map)
}

/// Result of gluing `Y` and `Z` along a common domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pushout {
    pub space: FiniteGSpace,
    pub from_left: Vec<PointId>,
    pub from_right: Vec<PointId>,
}

/// `(Y ⊔ Z)/∼` where `φ(x) ∼ ψ(x)`. Anchors and action on classes are
/// checked to be independent of representatives.
pub fn pushout(
    gpd: &FiniteGroupoid,
    domain: &FiniteGSpace,
    left: (&FiniteGSpace, &EquivariantMap),
    right: (&FiniteGSpace, &EquivariantMap),
) -> Result<Pushout, VerificationFailure> {
    const P: &str = "pushout is well defined";
    let (y, phi) = left;
    let (z, psi) = right;
    for (cod, m) in [(y, phi), (z, psi)] {
        if let Err((x, _)) = check_equivariant(gpd, domain, cod, &m.mapping) {
            return Err(VerificationFailure::new(
                P,
                format!("leg is not equivariant at {}", domain.name(x)),
            ));
        }
    }
    let ny = y.len();
    let mut uf = UnionFind::new(ny + z.len());
    for x in domain.points() {
        uf.union(phi.apply(x).0, ny + psi.apply(x).0);
    }
    let labels = uf.labels();
    let classes = classes_from_labels(&labels);
    let joined = y.disjoint_union(gpd, z);
    for class in &classes {
        let a = joined.anchor(PointId(class[0]));
        ensure!(
            class.iter().all(|&p| joined.anchor(PointId(p)) == a),
            P,
            "class of {} has mixed anchors",
            joined.name(PointId(class[0]))
        );
        for g in gpd.arrows_with_target(a) {
            let l = labels[joined.act(PointId(class[0]), g).expect("defined").0];
            ensure!(
                class
                    .iter()
                    .all(|&p| labels[joined.act(PointId(p), g).expect("defined").0] == l),
                P,
                "action by {} is not constant on the class of {}",
                gpd.arrow_name(g),
                joined.name(PointId(class[0]))
            );
        }
    }
    let names = classes.iter().map(|c| joined.name(PointId(c[0])).to_string()).collect();
    let anchor = classes.iter().map(|c| joined.anchor(PointId(c[0]))).collect();
    let space = FiniteGSpace::from_fn(gpd, names, anchor, |c, g| {
        PointId(labels[joined.act(PointId(classes[c.0][0]), g).expect("defined").0])
    })
    .map_err(|e| VerificationFailure::new(P, e.to_string()))?;
    Ok(Pushout {
        space,
        from_left: (0..ny).map(|p| PointId(labels[p])).collect(),
        from_right: (0..z.len()).map(|p| PointId(labels[ny + p])).collect(),
    })
}

/// Outcome of checking the equivalent characterisations of a trivial action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialityVerdict {
    pub trivial: bool,
    /// Parallel arrows act equally everywhere.
    pub parallel_arrows_agree: bool,
    /// Every isotropy group acts trivially on its fibre.
    pub all_fibres_trivial: bool,
    /// The isotropy group at the chosen base acts trivially on its fibre.
    pub base_fibre_trivial: bool,
    /// When trivial, the isomorphism `Y_b × G⁰ → Y`.
    pub splitting: Option<EquivariantMap>,
    /// When not trivial, `(y, h)` with `y·h ≠ y` for `h` in the isotropy at `b`.
    pub obstruction: Option<(PointId, ArrowId)>,
}

/// Checks the three action-level characterisations of triviality
/// independently, requires them to agree, and certifies the splitting
/// `Y ≅ Y_b × G⁰` (or a witness against it).
pub fn classify_trivial_action(
    gpd: &FiniteGroupoid,
    space: &FiniteGSpace,
    b: ObjectId,
) -> Result<TrivialityVerdict, VerificationFailure> {
    const P: &str = "characterisations of a trivial action agree";
    gpd.require_transitive()
        .map_err(|e| VerificationFailure::new(P, e.to_string()))?;
    let parallel_arrows_agree = space.points().all(|y| {
        let gs: Vec<ArrowId> = gpd.arrows_with_target(space.anchor(y)).collect();
        gs.iter().all(|&g| {
            gs.iter()
                .filter(|&&g2| gpd.source(g2) == gpd.source(g))
                .all(|&g2| space.act(y, g) == space.act(y, g2))
        })
    });
    let fibre_trivial = |c: ObjectId| {
        space
            .fibre(c)
            .into_iter()
            .all(|y| gpd.hom(c, c).all(|h| space.act(y, h) == Some(y)))
    };
    let all_fibres_trivial = gpd.objects().all(fibre_trivial);
    let base_fibre_trivial = fibre_trivial(b);
    ensure!(
        parallel_arrows_agree == all_fibres_trivial && all_fibres_trivial == base_fibre_trivial,
        P,
        "parallel={}, all fibres={}, base fibre={}",
        parallel_arrows_agree,
        all_fibres_trivial,
        base_fibre_trivial
    );
    let yb = space.fibre(b);
    let mut verdict = TrivialityVerdict {
        trivial: base_fibre_trivial,
        parallel_arrows_agree,
        all_fibres_trivial,
        base_fibre_trivial,
        splitting: None,
        obstruction: None,
    };
    if base_fibre_trivial {
        // (y, c) ↦ y·g for g: c → b, from the split space onto Y
        let names: Vec<String> = yb.iter().map(|&y| space.name(y).to_string()).collect();
        let split = fibrewise_product(gpd, &object_space(gpd), &names);
        let k = yb.len();
        let mut mapping = Vec::with_capacity(split.len());
        for c in gpd.objects() {
            let g = gpd.some_arrow(c, b).expect("transitive");
            for &y in &yb {
                mapping.push(space.act(y, g).expect("defined"));
            }
        }
        debug_assert_eq!(mapping.len(), gpd.object_count() * k);
        let map = EquivariantMap { mapping };
        ensure!(map.is_bijective(space.len()), P, "splitting map is not bijective");
        if let Err((p, _)) = check_equivariant(gpd, &split, space, &map.mapping) {
            return Err(VerificationFailure::new(
                P,
                format!("splitting map not equivariant at {}", split.name(p)),
            ));
        }
        verdict.splitting = Some(map);
    } else {
        // any equivariant map into a space with trivial isotropy action
        // identifies y with y·h, so no bijection to Y_b × G⁰ exists
        let (y, h) = yb
            .iter()
            .find_map(|&y| gpd.hom(b, b).find(|&h| space.act(y, h) != Some(y)).map(|h| (y, h)))
            .expect("base fibre action is nontrivial");
        verdict.obstruction = Some((y, h));
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn double_flip() -> (FiniteGroupoid, ObjectId, ObjectId) {
        let g = fixtures::double_flip_groupoid();
        let a = g.object_by_name("a").unwrap();
        let b = g.object_by_name("b").unwrap();
        (g, a, b)
    }

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| String::from(*s)).collect()
    }

    #[test]
    fn skeleton_validates_and_restricts() {
        let (g, _, b) = double_flip();
        let x0 = fixtures::vertex_space(&g);
        assert_eq!(x0.len(), 4);
        let fib = restrict_to_fibre(&g, &x0, b).unwrap();
        assert_eq!(fib.names, names(&["■_b", "▲_b"]));
        assert!(fib.set.is_trivial_action());
    }

    #[test]
    fn object_space_and_target_fibre_validate() {
        let (g, _, b) = double_flip();
        let obj = object_space(&g);
        assert_eq!(validate_gspace(&g, &obj.to_raw(&g)).unwrap(), obj);
        let tf = target_fibre_space(&g, b).unwrap();
        assert_eq!(validate_gspace(&g, &tf.to_raw(&g)).unwrap(), tf);
        let fib = restrict_to_fibre(&g, &tf, b).unwrap();
        assert_eq!(fib.len(), 2);
        assert!(fib.set.is_free());
    }

    #[test]
    fn corrupted_anchor_reported() {
        let (g, _, _) = double_flip();
        let mut raw = fixtures::vertex_space(&g).to_raw(&g);
        // ■_b·x should be ■_a; send it over the wrong object
        let e = raw.action.iter_mut().find(|(p, a, _)| p == "■_b" && a == "x").unwrap();
        e.2 = "■_b".into();
        let Err(GSpaceError::Invalid(v)) = validate_gspace(&g, &raw) else {
            panic!()
        };
        assert!(v.contains(&GSpaceViolation::AnchorOfResult {
            point: "■_b".into(),
            arrow: "x".into(),
            result: "■_b".into()
        }));
    }

    #[test]
    fn induce_examples() {
        let (g, _, b) = double_flip();
        let iso = g.isotropy(b).unwrap();
        let two = GroupSet::trivial(&iso.group, 2);
        let ind = induce_space(&g, b, &two, &names(&["■", "▲"])).unwrap();
        assert_eq!(ind.space.len(), 4);
        let x0 = fixtures::vertex_space(&g);
        assert!(find_isomorphism(&g, &ind.space, &x0, &|_, _| true).is_some());

        let one = GroupSet::trivial(&iso.group, 1);
        let ind = induce_space(&g, b, &one, &names(&["*"])).unwrap();
        assert!(find_isomorphism(&g, &ind.space, &object_space(&g), &|_, _| true).is_some());

        let free = GroupSet::regular(&iso.group);
        let ind = induce_space(&g, b, &free, &names(&["v", "t"])).unwrap();
        let tf = target_fibre_space(&g, b).unwrap();
        assert_eq!(ind.space.len(), 4);
        assert!(find_isomorphism(&g, &ind.space, &tf, &|_, _| true).is_some());
        // restricting the induced space recovers Z
        let back = restrict_to_fibre(&g, &ind.space, b).unwrap();
        assert_eq!(back.set.orbit_count(), 1);
        assert!(back.set.is_free());
    }

    #[test]
    fn induction_iso_examples() {
        let (g, a, b) = double_flip();
        verify_induction_iso(&g, &fixtures::vertex_space(&g), b).unwrap();
        verify_induction_iso(&g, &object_space(&g), b).unwrap();
        verify_induction_iso(&g, &target_fibre_space(&g, b).unwrap(), a).unwrap();
    }

    #[test]
    fn map_counts() {
        let (g, _, b) = double_flip();
        let tf = target_fibre_space(&g, b).unwrap();
        let maps = enumerate_equivariant_maps(&g, &tf, &tf);
        assert_eq!(maps.len(), 2);
        let obj = object_space(&g);
        assert_eq!(enumerate_equivariant_maps(&g, &obj, &obj).len(), 1);
        let x0 = fixtures::vertex_space(&g);
        // oracle: brute force over all anchor-preserving functions
        let brute = brute_force_maps(&g, &x0, &obj);
        let maps = enumerate_equivariant_maps(&g, &x0, &obj);
        assert_eq!(maps, brute);
        assert_eq!(maps.len(), 1);
        assert_eq!(count_equivariant_maps(&g, &x0, &x0), 4);
        assert_eq!(brute_force_maps(&g, &x0, &x0).len(), 4);
    }

    fn brute_force_maps(g: &FiniteGroupoid, dom: &FiniteGSpace, cod: &FiniteGSpace) -> Vec<EquivariantMap> {
        let lists: Vec<Vec<usize>> = dom
            .points()
            .map(|x| cod.fibre(dom.anchor(x)).into_iter().map(|p| p.0).collect())
            .collect();
        let mut out: Vec<EquivariantMap> = cartesian(&lists)
            .map(|c| c.into_iter().map(PointId).collect::<Vec<_>>())
            .filter(|m| check_equivariant(g, dom, cod, m).is_ok())
            .map(|mapping| EquivariantMap { mapping })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn extension_examples() {
        let (g, _, b) = double_flip();
        let x0 = fixtures::vertex_space(&g);
        let id = extend_map(&g, &x0, &x0, b, &[0, 1]).unwrap();
        assert_eq!(id.mapping, x0.points().collect::<Vec<_>>());
        let swap = extend_map(&g, &x0, &x0, b, &[1, 0]).unwrap();
        for p in x0.points() {
            let q = swap.apply(p);
            assert_ne!(x0.name(p).chars().next(), x0.name(q).chars().next());
            assert_eq!(x0.anchor(p), x0.anchor(q));
        }
        let cert = verify_rest_bijection(&g, &x0, &x0, b).unwrap();
        assert_eq!(cert.global_maps, 4);
        let tf = target_fibre_space(&g, b).unwrap();
        assert_eq!(verify_rest_bijection(&g, &tf, &tf, b).unwrap().global_maps, 2);
        let obj = object_space(&g);
        assert_eq!(verify_rest_bijection(&g, &obj, &obj, b).unwrap().fibre_maps, 1);
    }

    #[test]
    fn quotient_examples() {
        let (g, _, b) = double_flip();
        let x0 = fixtures::vertex_space(&g);
        assert_eq!(quotient(&g, &x0).classes.len(), 2);
        let cert = verify_quotient(&g, &x0, b).unwrap();
        assert_eq!((cert.global_classes, cert.fibre_classes), (2, 2));
        let tf = target_fibre_space(&g, b).unwrap();
        assert_eq!(quotient(&g, &tf).classes.len(), 1);
        verify_quotient(&g, &tf, b).unwrap();
    }

    #[test]
    fn products() {
        let (g, _, b) = double_flip();
        let x0 = fixtures::vertex_space(&g);
        let obj = object_space(&g);
        let (p, _) = product(&g, &x0, &obj);
        assert!(find_isomorphism(&g, &p, &x0, &|_, _| true).is_some());
        let tf = target_fibre_space(&g, b).unwrap();
        let (p, _) = product(&g, &tf, &tf);
        assert_eq!(p.len(), 8);
        assert_eq!(quotient(&g, &p).classes.len(), 2);
        validate_gspace(&g, &p.to_raw(&g)).unwrap();
        // with a trivial two-point fibre factor
        let m = verify_fibrewise_product(&g, &tf, &x0, b).unwrap();
        assert_eq!(m.mapping.len(), 8);
        assert!(verify_fibrewise_product(&g, &x0, &tf, b).is_err());
    }

    #[test]
    fn pushout_identity_and_empty() {
        let (g, _, _) = double_flip();
        let x0 = fixtures::vertex_space(&g);
        let id = EquivariantMap {
            mapping: x0.points().collect(),
        };
        let po = pushout(&g, &x0, (&x0, &id), (&x0, &id)).unwrap();
        assert_eq!(po.space.len(), 4);
        assert!(find_isomorphism(&g, &po.space, &x0, &|_, _| true).is_some());
        let empty = FiniteGSpace::from_fn(&g, Vec::new(), Vec::new(), |x, _| x).unwrap();
        let none = EquivariantMap { mapping: Vec::new() };
        let obj = object_space(&g);
        let po = pushout(&g, &empty, (&x0, &none), (&obj, &none)).unwrap();
        assert_eq!(po.space.len(), 6);
    }

    #[test]
    fn one_skeleton_by_pushout() {
        // boundary pairs G^b × {0,1} glued to the vertices, and into a
        // three-point interval G^b × {0,m,1}
        let (g, _, b) = double_flip();
        let x0 = fixtures::vertex_space(&g);
        let tf = target_fibre_space(&g, b).unwrap();
        let ends = fibrewise_product(&g, &tf, &names(&["0", "1"]));
        let interval = fibrewise_product(&g, &tf, &names(&["0", "m", "1"]));
        let sq_b = x0.point_by_name("■_b").unwrap();
        let tri_b = x0.point_by_name("▲_b").unwrap();
        let attach = EquivariantMap {
            mapping: ends
                .points()
                .map(|p| {
                    let f = tf.names()[p.0 / 2].as_str();
                    let f = g.arrow_by_name(f).unwrap();
                    let v = if p.0 % 2 == 0 { sq_b } else { tri_b };
                    x0.act(v, f).unwrap()
                })
                .collect(),
        };
        let include = EquivariantMap {
            mapping: ends
                .points()
                .map(|p| PointId((p.0 / 2) * 3 + if p.0 % 2 == 0 { 0 } else { 2 }))
                .collect(),
        };
        let po = pushout(&g, &ends, (&x0, &attach), (&interval, &include)).unwrap();
        assert_eq!(po.space.len(), 8);
        // each open edge point joins a ■ and a ▲ vertex
        for q in interval.points().filter(|q| q.0 % 3 == 1) {
            let e = po.from_right[q.0];
            let lo = po.from_right[q.0 - 1];
            let hi = po.from_right[q.0 + 1];
            assert_eq!(po.space.anchor(e), po.space.anchor(lo));
            assert!(po.space.name(lo).starts_with('■'));
            assert!(po.space.name(hi).starts_with('▲'));
        }
        assert_eq!(quotient(&g, &po.space).classes.len(), 3);
    }

    #[test]
    fn triviality() {
        let (g, _, b) = double_flip();
        let x0 = fixtures::vertex_space(&g);
        let v = classify_trivial_action(&g, &x0, b).unwrap();
        assert!(v.trivial && v.splitting.is_some());
        let tf = target_fibre_space(&g, b).unwrap();
        let v = classify_trivial_action(&g, &tf, b).unwrap();
        assert!(!v.trivial);
        let (y, h) = v.obstruction.unwrap();
        assert_ne!(tf.act(y, h), Some(y));
        // cross-check: no isomorphism to the split space exists
        let fib = restrict_to_fibre(&g, &tf, b).unwrap();
        let split = fibrewise_product(&g, &object_space(&g), &fib.names);
        assert!(find_isomorphism(&g, &split, &tf, &|_, _| true).is_none());
    }
}
