//! Finite groupoids as validated composition tables.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::failure::{ensure, VerificationFailure};
use crate::group::{FiniteGroup, GroupSet};
use crate::util::{classes_from_labels, UnionFind};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjectId(pub usize);

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowId(pub usize);

const UNDEFINED: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawArrow {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// Groupoid tables by name, as read from a file.
///
/// `compose` lists triples `(f, g, f∘g)` for every pair with
/// `source(f) = target(g)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawGroupoid {
    pub objects: Vec<String>,
    pub arrows: Vec<RawArrow>,
    pub identities: Vec<(String, String)>,
    pub inverses: Vec<(String, String)>,
    pub compose: Vec<(String, String, String)>,
}

/// One violated groupoid axiom, named by the offending arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupoidViolation {
    DuplicateObject(String),
    DuplicateArrow(String),
    UnknownObject(String),
    UnknownArrow(String),
    MissingIdentity { object: String },
    DuplicateIdentity { object: String },
    IdentityEndpoints { object: String, arrow: String },
    MissingInverse { arrow: String },
    DuplicateInverse { arrow: String },
    InverseEndpoints { arrow: String, inverse: String },
    NotComposable { f: String, g: String },
    MissingComposite { f: String, g: String },
    DuplicateComposite { f: String, g: String },
    CompositeEndpoints { f: String, g: String, composite: String },
    LeftUnit { arrow: String },
    RightUnit { arrow: String },
    InverseLaw { arrow: String },
    Associativity { f: String, g: String, h: String },
}

impl GroupoidViolation {
    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        use GroupoidViolation::*;
        match self {
            DuplicateObject(_) | DuplicateArrow(_) => "duplicate-name",
            UnknownObject(_) | UnknownArrow(_) => "unknown-name",
            MissingIdentity { .. } | DuplicateIdentity { .. } | IdentityEndpoints { .. } => "identity",
            LeftUnit { .. } | RightUnit { .. } => "identity",
            MissingInverse { .. } | DuplicateInverse { .. } | InverseEndpoints { .. } => "inverse",
            InverseLaw { .. } => "inverse",
            NotComposable { .. } | MissingComposite { .. } | DuplicateComposite { .. } => "composability",
            CompositeEndpoints { .. } => "composability",
            Associativity { .. } => "associativity",
        }
    }

    /// Arrow and object names involved.
    pub fn witness(&self) -> Vec<String> {
        use GroupoidViolation::*;
        match self {
            DuplicateObject(n) | DuplicateArrow(n) | UnknownObject(n) | UnknownArrow(n) => {
                vec![n.clone()]
            }
            MissingIdentity { object } | DuplicateIdentity { object } => vec![object.clone()],
            IdentityEndpoints { object, arrow } => vec![object.clone(), arrow.clone()],
            MissingInverse { arrow } | DuplicateInverse { arrow } => vec![arrow.clone()],
            InverseEndpoints { arrow, inverse } => vec![arrow.clone(), inverse.clone()],
            NotComposable { f, g } | MissingComposite { f, g } | DuplicateComposite { f, g } => {
                vec![f.clone(), g.clone()]
            }
            CompositeEndpoints { f, g, composite } => {
                vec![f.clone(), g.clone(), composite.clone()]
            }
            LeftUnit { arrow } | RightUnit { arrow } | InverseLaw { arrow } => vec![arrow.clone()],
            Associativity { f, g, h } => vec![f.clone(), g.clone(), h.clone()],
        }
    }
}

impl fmt::Display for GroupoidViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violation at ({})", self.kind(), self.witness().join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupoidError {
    #[error("invalid groupoid: {} violation(s), first: {}", .0.len(), .0[0])]
    Invalid(Vec<GroupoidViolation>),
    #[error("object index {0} out of range")]
    InvalidObject(usize),
    #[error("groupoid is not transitive")]
    NotTransitive,
}

/// A validated finite groupoid. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    object_names: Vec<String>,
    arrow_names: Vec<String>,
    source: Vec<ObjectId>,
    target: Vec<ObjectId>,
    identity: Vec<ArrowId>,
    inverse: Vec<ArrowId>,
    compose: Vec<usize>,
}

fn index_names<'a>(
    names: impl Iterator<Item = &'a String>,
    dup: impl Fn(String) -> GroupoidViolation,
    out: &mut Vec<GroupoidViolation>,
) -> BTreeMap<String, usize> {
    let mut map = BTreeMap::new();
    for (i, n) in names.enumerate() {
        if map.insert(n.clone(), i).is_some() {
            out.push(dup(n.clone()));
        }
    }
    map
}

/// Validates raw tables. Every violation found is reported, not just the first.
pub fn validate_groupoid(raw: &RawGroupoid) -> Result<FiniteGroupoid, GroupoidError> {
    use GroupoidViolation as V;
    let mut structural = Vec::new();
    let objects = index_names(raw.objects.iter(), V::DuplicateObject, &mut structural);
    let arrows = index_names(raw.arrows.iter().map(|a| &a.name), V::DuplicateArrow, &mut structural);
    let obj = |n: &str, out: &mut Vec<V>| {
        let r = objects.get(n).copied();
        if r.is_none() {
            out.push(V::UnknownObject(n.into()));
        }
        r
    };
    let arr = |n: &str, out: &mut Vec<V>| {
        let r = arrows.get(n).copied();
        if r.is_none() {
            out.push(V::UnknownArrow(n.into()));
        }
        r
    };

    let n_arrows = raw.arrows.len();
    let mut source = vec![ObjectId(UNDEFINED); n_arrows];
    let mut target = vec![ObjectId(UNDEFINED); n_arrows];
    for (i, a) in raw.arrows.iter().enumerate() {
        if let Some(s) = obj(&a.source, &mut structural) {
            source[i] = ObjectId(s);
        }
        if let Some(t) = obj(&a.target, &mut structural) {
            target[i] = ObjectId(t);
        }
    }

    let mut identity = vec![ArrowId(UNDEFINED); raw.objects.len()];
    for (o, a) in &raw.identities {
        if let (Some(o), Some(a)) = (obj(o, &mut structural), arr(a, &mut structural)) {
            if identity[o].0 != UNDEFINED {
                structural.push(V::DuplicateIdentity {
                    object: raw.objects[o].clone(),
                });
            }
            identity[o] = ArrowId(a);
        }
    }
    for (o, id) in identity.iter().enumerate() {
        if id.0 == UNDEFINED {
            structural.push(V::MissingIdentity {
                object: raw.objects[o].clone(),
            });
        }
    }

    let mut inverse = vec![ArrowId(UNDEFINED); n_arrows];
    for (a, b) in &raw.inverses {
        if let (Some(a), Some(b)) = (arr(a, &mut structural), arr(b, &mut structural)) {
            if inverse[a].0 != UNDEFINED {
                structural.push(V::DuplicateInverse {
                    arrow: raw.arrows[a].name.clone(),
                });
            }
            inverse[a] = ArrowId(b);
        }
    }
    for (a, inv) in inverse.iter().enumerate() {
        if inv.0 == UNDEFINED {
            structural.push(V::MissingInverse {
                arrow: raw.arrows[a].name.clone(),
            });
        }
    }

    let mut compose = vec![UNDEFINED; n_arrows * n_arrows];
    let mut endpoint = Vec::new();
    for (f, g, h) in &raw.compose {
        let (Some(fi), Some(gi), Some(hi)) = (
            arr(f, &mut structural),
            arr(g, &mut structural),
            arr(h, &mut structural),
        ) else {
            continue;
        };
        if source[fi] != target[gi] {
            structural.push(V::NotComposable {
                f: f.clone(),
                g: g.clone(),
            });
            continue;
        }
        if compose[fi * n_arrows + gi] != UNDEFINED {
            structural.push(V::DuplicateComposite {
                f: f.clone(),
                g: g.clone(),
            });
        }
        compose[fi * n_arrows + gi] = hi;
        if source[hi] != source[gi] || target[hi] != target[fi] {
            endpoint.push(V::CompositeEndpoints {
                f: f.clone(),
                g: g.clone(),
                composite: h.clone(),
            });
        }
    }
    if structural.is_empty() {
        for f in 0..n_arrows {
            for g in 0..n_arrows {
                if source[f] == target[g] && compose[f * n_arrows + g] == UNDEFINED {
                    structural.push(V::MissingComposite {
                        f: raw.arrows[f].name.clone(),
                        g: raw.arrows[g].name.clone(),
                    });
                }
            }
        }
    }
    if !structural.is_empty() {
        structural.extend(endpoint);
        return Err(GroupoidError::Invalid(structural));
    }

    let gpd = FiniteGroupoid {
        object_names: raw.objects.clone(),
        arrow_names: raw.arrows.iter().map(|a| a.name.clone()).collect(),
        source,
        target,
        identity,
        inverse,
        compose,
    };
    let mut violations = endpoint;
    violations.extend(gpd.axiom_violations());
    if violations.is_empty() {
        Ok(gpd)
    } else {
        Err(GroupoidError::Invalid(violations))
    }
}

impl FiniteGroupoid {
    fn axiom_violations(&self) -> Vec<GroupoidViolation> {
        use GroupoidViolation as V;
        let mut out = Vec::new();
        let name = |a: ArrowId| self.arrow_names[a.0].clone();
        for x in self.objects() {
            let i = self.identity(x);
            if self.source(i) != x || self.target(i) != x {
                out.push(V::IdentityEndpoints {
                    object: self.object_name(x).into(),
                    arrow: name(i),
                });
            }
        }
        for f in self.arrows() {
            let inv = self.inverse(f);
            if self.source(inv) != self.target(f) || self.target(inv) != self.source(f) {
                out.push(V::InverseEndpoints {
                    arrow: name(f),
                    inverse: name(inv),
                });
            }
            if self.compose(f, self.identity(self.source(f))) != Some(f) {
                out.push(V::RightUnit { arrow: name(f) });
            }
            if self.compose(self.identity(self.target(f)), f) != Some(f) {
                out.push(V::LeftUnit { arrow: name(f) });
            }
            if self.compose(f, inv) != Some(self.identity(self.target(f)))
                || self.compose(inv, f) != Some(self.identity(self.source(f)))
            {
                out.push(V::InverseLaw { arrow: name(f) });
            }
        }
        // (f∘g)∘h = f∘(g∘h) over every declared-composable triple.
        for f in self.arrows() {
            for g in self.arrows_with_target(self.source(f)) {
                for h in self.arrows_with_target(self.source(g)) {
                    let lhs = self.compose(f, g).and_then(|fg| self.compose(fg, h));
                    let rhs = self.compose(g, h).and_then(|gh| self.compose(f, gh));
                    if lhs.is_none() || lhs != rhs {
                        out.push(V::Associativity {
                            f: name(f),
                            g: name(g),
                            h: name(h),
                        });
                    }
                }
            }
        }
        out
    }

    /// Pair groupoid on `objects` crossed with `group`: one arrow `x → y`
    /// per group element, `(z,γ,y)∘(y,δ,x) = (z,γδ,x)`. Every finite
    /// transitive groupoid is isomorphic to one of these.
    pub fn pair_with_group(objects: &[String], group: &FiniteGroup) -> Self {
        let n = objects.len();
        let k = group.order();
        // arrow index ((y * n) + x) * k + γ : x → y
        let idx = |y: usize, x: usize, g: usize| (y * n + x) * k + g;
        let mut arrow_names = Vec::with_capacity(n * n * k);
        let mut source = Vec::new();
        let mut target = Vec::new();
        for y in 0..n {
            for x in 0..n {
                for g in 0..k {
                    arrow_names.push(format!("{}:{}->{}", group.name(g), objects[x], objects[y]));
                    source.push(ObjectId(x));
                    target.push(ObjectId(y));
                }
            }
        }
        let total = n * n * k;
        let mut compose = vec![UNDEFINED; total * total];
        for z in 0..n {
            for y in 0..n {
                for x in 0..n {
                    for a in 0..k {
                        for b in 0..k {
                            compose[idx(z, y, a) * total + idx(y, x, b)] = idx(z, x, group.mul(a, b));
                        }
                    }
                }
            }
        }
        let identity = (0..n).map(|x| ArrowId(idx(x, x, group.identity()))).collect();
        let inverse = (0..total)
            .map(|a| {
                let (yx, g) = (a / k, a % k);
                let (y, x) = (yx / n, yx % n);
                ArrowId(idx(x, y, group.inv(g)))
            })
            .collect();
        FiniteGroupoid {
            object_names: objects.to_vec(),
            arrow_names,
            source,
            target,
            identity,
            inverse,
            compose,
        }
    }

    /// Action groupoid of a right group-set: arrow `(y, γ)` goes from `y·γ`
    /// to `y`, and `(y,γ)∘(y·γ,δ) = (y,γδ)`.
    pub fn action_groupoid(group: &FiniteGroup, set: &GroupSet, point_names: &[String]) -> Self {
        let n = set.size();
        let k = group.order();
        let total = n * k;
        let mut arrow_names = Vec::with_capacity(total);
        let mut source = Vec::with_capacity(total);
        let mut target = Vec::with_capacity(total);
        for y in 0..n {
            for g in 0..k {
                arrow_names.push(format!("{}@{}", group.name(g), point_names[y]));
                source.push(ObjectId(set.act(y, g)));
                target.push(ObjectId(y));
            }
        }
        let mut compose = vec![UNDEFINED; total * total];
        for y in 0..n {
            for a in 0..k {
                let mid = set.act(y, a);
                for b in 0..k {
                    compose[(y * k + a) * total + mid * k + b] = y * k + group.mul(a, b);
                }
            }
        }
        FiniteGroupoid {
            object_names: point_names.to_vec(),
            arrow_names,
            source,
            target,
            identity: (0..n).map(|y| ArrowId(y * k + group.identity())).collect(),
            inverse: (0..total)
                .map(|a| {
                    let (y, g) = (a / k, a % k);
                    ArrowId(set.act(y, g) * k + group.inv(g))
                })
                .collect(),
            compose,
        }
    }

    pub fn disjoint_union(&self, other: &FiniteGroupoid) -> Self {
        let (no, na) = (self.object_count(), self.arrow_count());
        let total = na + other.arrow_count();
        let mut compose = vec![UNDEFINED; total * total];
        for f in 0..na {
            for g in 0..na {
                compose[f * total + g] = self.compose[f * na + g];
            }
        }
        let ma = other.arrow_count();
        for f in 0..ma {
            for g in 0..ma {
                let c = other.compose[f * ma + g];
                compose[(na + f) * total + na + g] = if c == UNDEFINED { c } else { c + na };
            }
        }
        let shift_o = |o: &ObjectId| ObjectId(o.0 + no);
        let shift_a = |a: &ArrowId| ArrowId(a.0 + na);
        FiniteGroupoid {
            object_names: self.object_names.iter().chain(&other.object_names).cloned().collect(),
            arrow_names: self.arrow_names.iter().chain(&other.arrow_names).cloned().collect(),
            source: self
                .source
                .iter()
                .copied()
                .chain(other.source.iter().map(shift_o))
                .collect(),
            target: self
                .target
                .iter()
                .copied()
                .chain(other.target.iter().map(shift_o))
                .collect(),
            identity: self
                .identity
                .iter()
                .copied()
                .chain(other.identity.iter().map(shift_a))
                .collect(),
            inverse: self
                .inverse
                .iter()
                .copied()
                .chain(other.inverse.iter().map(shift_a))
                .collect(),
            compose,
        }
    }

    /// Reorders and renames: new object `i` is old object `objects[i]`, new
    /// arrow `j` is old arrow `arrows[j]`. Both slices must be permutations.
    pub fn permuted(
        &self,
        objects: &[usize],
        arrows: &[usize],
        object_names: Vec<String>,
        arrow_names: Vec<String>,
    ) -> Self {
        let mut new_obj = vec![0; objects.len()];
        for (i, &o) in objects.iter().enumerate() {
            new_obj[o] = i;
        }
        let mut new_arr = vec![0; arrows.len()];
        for (j, &a) in arrows.iter().enumerate() {
            new_arr[a] = j;
        }
        let na = arrows.len();
        let mut compose = vec![UNDEFINED; na * na];
        for f in 0..na {
            for g in 0..na {
                if let Some(h) = self.compose(ArrowId(arrows[f]), ArrowId(arrows[g])) {
                    compose[f * na + g] = new_arr[h.0];
                }
            }
        }
        FiniteGroupoid {
            object_names,
            arrow_names,
            source: arrows.iter().map(|&a| ObjectId(new_obj[self.source[a].0])).collect(),
            target: arrows.iter().map(|&a| ObjectId(new_obj[self.target[a].0])).collect(),
            identity: objects.iter().map(|&o| ArrowId(new_arr[self.identity[o].0])).collect(),
            inverse: arrows.iter().map(|&a| ArrowId(new_arr[self.inverse[a].0])).collect(),
            compose,
        }
    }

    /// Tables by name, suitable for serialisation. Validating the result
    /// gives back an identical groupoid.
    pub fn to_raw(&self) -> RawGroupoid {
        let an = |a: ArrowId| self.arrow_names[a.0].clone();
        let mut compose = Vec::new();
        for f in self.arrows() {
            for g in self.arrows_with_target(self.source(f)) {
                if let Some(h) = self.compose(f, g) {
                    compose.push((an(f), an(g), an(h)));
                }
            }
        }
        RawGroupoid {
            objects: self.object_names.clone(),
            arrows: self
                .arrows()
                .map(|a| RawArrow {
                    name: an(a),
                    source: self.object_name(self.source(a)).into(),
                    target: self.object_name(self.target(a)).into(),
                })
                .collect(),
            identities: self
                .objects()
                .map(|x| (self.object_name(x).into(), an(self.identity(x))))
                .collect(),
            inverses: self.arrows().map(|a| (an(a), an(self.inverse(a)))).collect(),
            compose,
        }
    }

    pub fn object_count(&self) -> usize {
        self.object_names.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrow_names.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjectId> + Clone {
        (0..self.object_count()).map(ObjectId)
    }

    pub fn arrows(&self) -> impl Iterator<Item = ArrowId> + Clone {
        (0..self.arrow_count()).map(ArrowId)
    }

    pub fn object_name(&self, x: ObjectId) -> &str {
        &self.object_names[x.0]
    }

    pub fn arrow_name(&self, a: ArrowId) -> &str {
        &self.arrow_names[a.0]
    }

    pub fn object_by_name(&self, name: &str) -> Option<ObjectId> {
        self.object_names.iter().position(|n| n == name).map(ObjectId)
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<ArrowId> {
        self.arrow_names.iter().position(|n| n == name).map(ArrowId)
    }

    #[inline]
    pub fn source(&self, a: ArrowId) -> ObjectId {
        self.source[a.0]
    }

    #[inline]
    pub fn target(&self, a: ArrowId) -> ObjectId {
        self.target[a.0]
    }

    #[inline]
    pub fn identity(&self, x: ObjectId) -> ArrowId {
        self.identity[x.0]
    }

    #[inline]
    pub fn inverse(&self, a: ArrowId) -> ArrowId {
        self.inverse[a.0]
    }

    /// `f∘g`, defined when `source(f) == target(g)`.
    #[inline]
    pub fn compose(&self, f: ArrowId, g: ArrowId) -> Option<ArrowId> {
        let c = self.compose[f.0 * self.arrow_count() + g.0];
        (c != UNDEFINED).then_some(ArrowId(c))
    }

    pub fn arrows_with_target(&self, y: ObjectId) -> impl Iterator<Item = ArrowId> + '_ {
        self.arrows().filter(move |&a| self.target(a) == y)
    }

    /// Arrows `from → to`.
    pub fn hom(&self, from: ObjectId, to: ObjectId) -> impl Iterator<Item = ArrowId> + '_ {
        self.arrows()
            .filter(move |&a| self.source(a) == from && self.target(a) == to)
    }

    /// First arrow `from → to` in index order.
    pub fn some_arrow(&self, from: ObjectId, to: ObjectId) -> Option<ArrowId> {
        self.hom(from, to).next()
    }

    pub fn check_object(&self, x: ObjectId) -> Result<(), GroupoidError> {
        if x.0 < self.object_count() {
            Ok(())
        } else {
            Err(GroupoidError::InvalidObject(x.0))
        }
    }

    /// Connected components of the objects.
    pub fn orbit_space_objects(&self) -> Vec<Vec<ObjectId>> {
        let mut uf = UnionFind::new(self.object_count());
        for a in self.arrows() {
            uf.union(self.source(a).0, self.target(a).0);
        }
        classes_from_labels(&uf.labels())
            .into_iter()
            .map(|c| c.into_iter().map(ObjectId).collect())
            .collect()
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit_space_objects().len() == 1
    }

    pub fn require_transitive(&self) -> Result<(), GroupoidError> {
        if self.is_transitive() {
            Ok(())
        } else {
            Err(GroupoidError::NotTransitive)
        }
    }

    /// The group of self-arrows at `base`.
    pub fn isotropy(&self, base: ObjectId) -> Result<IsotropyGroup, GroupoidError> {
        self.check_object(base)?;
        let arrows: Vec<ArrowId> = self.hom(base, base).collect();
        let pos = |a: ArrowId| arrows.iter().position(|&b| b == a).expect("closed");
        let table = arrows
            .iter()
            .flat_map(|&f| {
                arrows
                    .iter()
                    .map(move |&g| self.compose(f, g).expect("composable self-arrows"))
            })
            .map(pos)
            .collect();
        let names = arrows.iter().map(|&a| self.arrow_name(a).to_string()).collect();
        let group = FiniteGroup::from_table(names, table).expect("self-arrows of a validated groupoid form a group");
        Ok(IsotropyGroup { base, arrows, group })
    }

    /// All arrows with target `base`.
    pub fn target_fibre(&self, base: ObjectId) -> Result<TargetFibre, GroupoidError> {
        self.check_object(base)?;
        Ok(TargetFibre {
            base,
            arrows: self.arrows_with_target(base).collect(),
        })
    }
}

/// The stabilizer group at a base object, with its own multiplication table.
/// Group element `i` is the arrow `arrows[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropyGroup {
    pub base: ObjectId,
    pub arrows: Vec<ArrowId>,
    pub group: FiniteGroup,
}

impl IsotropyGroup {
    pub fn element_of(&self, a: ArrowId) -> Option<usize> {
        self.arrows.iter().position(|&b| b == a)
    }

    pub fn arrow(&self, element: usize) -> ArrowId {
        self.arrows[element]
    }

    pub fn order(&self) -> usize {
        self.arrows.len()
    }
}

/// Arrows with a fixed target `base`. Carries a left action of the isotropy
/// group at `base` and a right action of the whole groupoid, both by
/// composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetFibre {
    pub base: ObjectId,
    pub arrows: Vec<ArrowId>,
}

impl TargetFibre {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn contains(&self, a: ArrowId) -> bool {
        self.arrows.contains(&a)
    }

    /// `h·f = h∘f` for `h` in the isotropy group.
    pub fn left_act(&self, gpd: &FiniteGroupoid, h: ArrowId, f: ArrowId) -> Option<ArrowId> {
        gpd.compose(h, f)
    }

    /// `f·g = f∘g`, defined when `source(f) == target(g)`.
    pub fn right_act(&self, gpd: &FiniteGroupoid, f: ArrowId, g: ArrowId) -> Option<ArrowId> {
        gpd.compose(f, g)
    }
}

/// Certificate that the quotient of the target fibre by the isotropy group
/// is the object space: class `i` maps to `objects[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibreQuotientCertificate {
    pub classes: Vec<Vec<ArrowId>>,
    pub objects: Vec<ObjectId>,
}

/// Builds `[f] ↦ source(f)` from the isotropy orbits on the target fibre to
/// the objects, and checks it is a well-defined equivariant bijection.
pub fn verify_fibre_quotient(
    gpd: &FiniteGroupoid,
    base: ObjectId,
) -> Result<FibreQuotientCertificate, VerificationFailure> {
    const P: &str = "fibre quotient is the object space";
    let fibre = gpd
        .target_fibre(base)
        .map_err(|e| VerificationFailure::new(P, e.to_string()))?;
    let iso = gpd.isotropy(base).expect("object checked");
    let mut uf = UnionFind::new(gpd.arrow_count());
    for &f in &fibre.arrows {
        for &h in &iso.arrows {
            let hf = fibre.left_act(gpd, h, f).expect("isotropy composes with fibre");
            uf.union(f.0, hf.0);
        }
    }
    let labels = uf.labels();
    let mut class_index: BTreeMap<usize, usize> = BTreeMap::new();
    let mut classes: Vec<Vec<ArrowId>> = Vec::new();
    for &f in &fibre.arrows {
        let next = classes.len();
        let c = *class_index.entry(labels[f.0]).or_insert(next);
        if c == classes.len() {
            classes.push(Vec::new());
        }
        classes[c].push(f);
    }
    let mut objects = Vec::new();
    for class in &classes {
        let s = gpd.source(class[0]);
        ensure!(
            class.iter().all(|&f| gpd.source(f) == s),
            P,
            "class of {} has members with different sources",
            gpd.arrow_name(class[0])
        );
        objects.push(s);
    }
    let mut sorted = objects.clone();
    sorted.sort();
    sorted.dedup();
    ensure!(sorted.len() == objects.len(), P, "two classes share a source object");
    ensure!(
        sorted.len() == gpd.object_count(),
        P,
        "{} of {} objects are hit",
        sorted.len(),
        gpd.object_count()
    );
    // equivariance: [f]·g = [f∘g] must map to source(g), the object-space action.
    for (ci, class) in classes.iter().enumerate() {
        for &f in class {
            for g in gpd.arrows_with_target(objects[ci]) {
                let fg = gpd.compose(f, g).expect("composable");
                let cj = classes.iter().position(|c| c.contains(&fg)).expect("fibre closed");
                ensure!(
                    objects[cj] == gpd.source(g),
                    P,
                    "[{}]·{} lands over the wrong object",
                    gpd.arrow_name(f),
                    gpd.arrow_name(g)
                );
            }
        }
    }
    Ok(FibreQuotientCertificate { classes, objects })
}

/// For `b`, `b2` in one component, builds `h ↦ g∘h∘g⁻¹` along some arrow
/// `g: b → b2` and checks it is a group isomorphism. Returns the element
/// map between the two isotropy groups.
pub fn isotropy_conjugation(
    gpd: &FiniteGroupoid,
    b: ObjectId,
    b2: ObjectId,
) -> Result<Vec<usize>, VerificationFailure> {
    const P: &str = "isotropy groups in one orbit are isomorphic";
    let g = gpd
        .some_arrow(b, b2)
        .ok_or_else(|| VerificationFailure::new(P, "objects lie in different orbits"))?;
    let from = gpd.isotropy(b).expect("object exists");
    let to = gpd.isotropy(b2).expect("object exists");
    let ginv = gpd.inverse(g);
    let mut map = Vec::with_capacity(from.order());
    for &h in &from.arrows {
        let c = gpd
            .compose(g, h)
            .and_then(|gh| gpd.compose(gh, ginv))
            .expect("conjugate is defined");
        map.push(to.element_of(c).expect("conjugate lies in the target isotropy"));
    }
    let mut seen = map.clone();
    seen.sort();
    seen.dedup();
    ensure!(
        seen.len() == map.len() && map.len() == to.order(),
        P,
        "conjugation by {} is not bijective",
        gpd.arrow_name(g)
    );
    ensure!(
        from.group.is_homomorphism(&to.group, &map),
        P,
        "conjugation by {} is not multiplicative",
        gpd.arrow_name(g)
    );
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| String::from(*s)).collect()
    }

    #[test]
    fn double_flip_validates() {
        let g = fixtures::double_flip_groupoid();
        assert_eq!(g.object_count(), 2);
        assert_eq!(g.arrow_count(), 8);
        assert!(g.is_transitive());
        assert_eq!(g.orbit_space_objects().len(), 1);
        let s = g.arrow_by_name("s").unwrap();
        let u = g.arrow_by_name("u").unwrap();
        assert_eq!(g.compose(s, s), Some(u));
    }

    #[test]
    fn double_flip_isotropy_and_fibre() {
        let g = fixtures::double_flip_groupoid();
        let b = g.object_by_name("b").unwrap();
        let iso = g.isotropy(b).unwrap();
        let mut iso_names: Vec<&str> = iso.arrows.iter().map(|&a| g.arrow_name(a)).collect();
        iso_names.sort();
        assert_eq!(iso_names, ["t", "v"]);
        assert_eq!(iso.group.order(), 2);
        let fibre = g.target_fibre(b).unwrap();
        let mut fib: Vec<&str> = fibre.arrows.iter().map(|&a| g.arrow_name(a)).collect();
        fib.sort();
        assert_eq!(fib, ["t", "v", "x", "y"]);
    }

    #[test]
    fn trivial_groupoid() {
        let raw = RawGroupoid {
            objects: names(&["o"]),
            arrows: vec![RawArrow {
                name: "1".into(),
                source: "o".into(),
                target: "o".into(),
            }],
            identities: vec![("o".into(), "1".into())],
            inverses: vec![("1".into(), "1".into())],
            compose: vec![("1".into(), "1".into(), "1".into())],
        };
        let g = validate_groupoid(&raw).unwrap();
        assert!(g.is_transitive());
        let o = ObjectId(0);
        assert_eq!(g.isotropy(o).unwrap().order(), 1);
        assert_eq!(g.target_fibre(o).unwrap().len(), 1);
        let cert = verify_fibre_quotient(&g, o).unwrap();
        assert_eq!(cert.objects, vec![o]);
        let two = g.disjoint_union(&g);
        assert!(!two.is_transitive());
        assert_eq!(two.orbit_space_objects().len(), 2);
    }

    #[test]
    fn corrupted_composite_reports_associativity() {
        let mut raw = fixtures::double_flip_groupoid().to_raw();
        let entry = raw.compose.iter_mut().find(|(f, g, _)| f == "x" && g == "s").unwrap();
        assert_eq!(entry.2, "y");
        entry.2 = "y^-1".into();
        let Err(GroupoidError::Invalid(violations)) = validate_groupoid(&raw) else {
            panic!("corruption not detected");
        };
        let assoc: Vec<_> = violations
            .iter()
            .filter(|v| matches!(v, GroupoidViolation::Associativity { .. }))
            .collect();
        assert!(!assoc.is_empty());
        assert!(assoc.iter().all(|v| v.witness().len() == 3));
    }

    #[test]
    fn missing_tables_reported() {
        let mut raw = fixtures::double_flip_groupoid().to_raw();
        raw.compose.pop();
        raw.inverses.retain(|(a, _)| a != "x");
        raw.identities.push(("nowhere".into(), "u".into()));
        let Err(GroupoidError::Invalid(v)) = validate_groupoid(&raw) else {
            panic!()
        };
        assert!(v.contains(&GroupoidViolation::MissingInverse { arrow: "x".into() }));
        assert!(v.contains(&GroupoidViolation::UnknownObject("nowhere".into())));
    }

    #[test]
    fn pair_groupoid_on_three_objects() {
        let g = FiniteGroupoid::pair_with_group(&names(&["1", "2", "3"]), &FiniteGroup::trivial());
        assert_eq!(validate_groupoid(&g.to_raw()).unwrap(), g);
        assert!(g.is_transitive());
        let one = g.object_by_name("1").unwrap();
        assert_eq!(g.isotropy(one).unwrap().order(), 1);
        assert_eq!(g.target_fibre(one).unwrap().len(), 3);
        verify_fibre_quotient(&g, one).unwrap();
    }

    #[test]
    fn action_groupoids() {
        // ℤ/2 swapping two points: one orbit.
        let z2 = FiniteGroup::cyclic(2);
        let swap = GroupSet::from_fn(&z2, 2, |x, g| if g == 0 { x } else { 1 - x }).unwrap();
        let g = FiniteGroupoid::action_groupoid(&z2, &swap, &names(&["p", "q"]));
        assert_eq!(validate_groupoid(&g.to_raw()).unwrap(), g);
        assert_eq!(g.orbit_space_objects().len(), 1);
        // S3 on a point: isotropy is S3.
        let s3 = FiniteGroup::dihedral(3);
        let point = GroupSet::trivial(&s3, 1);
        let g = FiniteGroupoid::action_groupoid(&s3, &point, &names(&["*"]));
        let iso = g.isotropy(ObjectId(0)).unwrap();
        assert_eq!(iso.order(), 6);
        assert!(!iso.group.is_abelian());
    }

    #[test]
    fn invalid_object_rejected() {
        let g = fixtures::double_flip_groupoid();
        assert_eq!(g.isotropy(ObjectId(7)), Err(GroupoidError::InvalidObject(7)));
        assert!(g.target_fibre(ObjectId(2)).is_err());
    }

    #[test]
    fn fibre_quotient_on_double_flip() {
        let g = fixtures::double_flip_groupoid();
        let b = g.object_by_name("b").unwrap();
        let cert = verify_fibre_quotient(&g, b).unwrap();
        assert_eq!(cert.classes.len(), 2);
        for (class, obj) in cert.classes.iter().zip(&cert.objects) {
            let mut n: Vec<&str> = class.iter().map(|&a| g.arrow_name(a)).collect();
            n.sort();
            match g.object_name(*obj) {
                "b" => assert_eq!(n, ["t", "v"]),
                "a" => assert_eq!(n, ["x", "y"]),
                other => panic!("unexpected object {other}"),
            }
        }
    }

    #[test]
    fn pair_groupoid_two_objects_fibre_quotient() {
        let g = FiniteGroupoid::pair_with_group(&names(&["p", "q"]), &FiniteGroup::trivial());
        verify_fibre_quotient(&g, ObjectId(0)).unwrap();
    }

    #[test]
    fn conjugation_between_isotropy_groups() {
        let g = FiniteGroupoid::pair_with_group(&names(&["p", "q", "r"]), &FiniteGroup::dihedral(3));
        let map = isotropy_conjugation(&g, ObjectId(0), ObjectId(2)).unwrap();
        assert_eq!(map.len(), 6);
    }
}
