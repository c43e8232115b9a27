//! Finite groups as multiplication tables, and finite right group-sets.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::orbitcat::Subgroup;
use crate::util::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("multiplication table has {got} entries, expected {expected}")]
    TableSize { expected: usize, got: usize },
    #[error("product {0} * {1} is out of range")]
    OutOfRange(usize, usize),
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("associativity fails on ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
}

/// A finite group given by its full multiplication table.
///
/// `mul(a, b)` is the composite `a∘b`. Elements are dense indices with
/// display names attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<usize>,
    inverse: Vec<usize>,
    identity: usize,
}

impl FiniteGroup {
    /// Validates group axioms exhaustively.
    pub fn from_table(names: Vec<String>, table: Vec<usize>) -> Result<Self, GroupError> {
        let n = names.len();
        if table.len() != n * n {
            return Err(GroupError::TableSize {
                expected: n * n,
                got: table.len(),
            });
        }
        let mut seen = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if seen.insert(name.clone(), i).is_some() {
                return Err(GroupError::DuplicateName(name.clone()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] >= n {
                    return Err(GroupError::OutOfRange(a, b));
                }
            }
        }
        let m = |a: usize, b: usize| table[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or(GroupError::NoIdentity)?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| m(a, b) == identity && m(b, a) == identity)
                .ok_or(GroupError::NoInverse(a))?;
            inverse.push(inv);
        }
        Ok(FiniteGroup {
            names,
            table,
            inverse,
            identity,
        })
    }

    fn from_fn(names: Vec<String>, f: impl Fn(usize, usize) -> usize) -> Self {
        let n = names.len();
        let table = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self::from_table(names, table).expect("generated table is a group")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// ℤ/n with elements `e, r1, …`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let names = (0..n)
            .map(|k| if k == 0 { "e".into() } else { format!("r{k}") })
            .collect();
        Self::from_fn(names, |a, b| (a + b) % n)
    }

    /// Dihedral group of order `2n`: rotations `r^k` then reflections `s·r^k`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n > 0);
        let mut names: Vec<String> = (0..n)
            .map(|k| if k == 0 { "e".into() } else { format!("r{k}") })
            .collect();
        names.extend((0..n).map(|k| if k == 0 { "s".into() } else { format!("sr{k}") }));
        // element (f, k) ↦ f*n + k represents s^f r^k; r^k s = s r^{-k}
        Self::from_fn(names, |a, b| {
            let (fa, ka) = (a / n, a % n);
            let (fb, kb) = (b / n, b % n);
            let k = if fb == 0 { (ka + kb) % n } else { (n - ka + kb) % n };
            ((fa + fb) % 2) * n + k
        })
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn quaternion() -> Self {
        let names: Vec<String> = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .iter()
            .map(|s| String::from(*s))
            .collect();
        // unit index u ∈ {1,i,j,k} = 0..4, sign bit
        const UNIT: [[(usize, bool); 4]; 4] = [
            [(0, false), (1, false), (2, false), (3, false)],
            [(1, false), (0, true), (3, false), (2, true)],
            [(2, false), (3, true), (0, true), (1, false)],
            [(3, false), (2, false), (1, true), (0, true)],
        ];
        Self::from_fn(names, |a, b| {
            let (ua, sa) = (a / 2, a % 2 == 1);
            let (ub, sb) = (b / 2, b % 2 == 1);
            let (u, s) = UNIT[ua][ub];
            u * 2 + usize::from(s ^ sa ^ sb)
        })
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> Self {
        let m = other.order();
        let names = (0..self.order() * m)
            .map(|k| format!("({},{})", self.name(k / m), other.name(k % m)))
            .collect();
        Self::from_fn(names, |a, b| self.mul(a / m, b / m) * m + other.mul(a % m, b % m))
    }

    /// Same group with element names replaced.
    pub fn renamed(&self, names: Vec<String>) -> Result<Self, GroupError> {
        Self::from_table(names, self.table.clone())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g∘a∘g⁻¹`
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Checks `map(a∘b) = map(a)∘map(b)` for all pairs.
    pub fn is_homomorphism(&self, target: &FiniteGroup, map: &[usize]) -> bool {
        map.len() == self.order()
            && self.elements().all(|a| {
                self.elements()
                    .all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b]))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupSetError {
    #[error("action table has {got} entries, expected {expected}")]
    TableSize { expected: usize, got: usize },
    #[error("point {point}·{element} is out of range")]
    OutOfRange { point: usize, element: usize },
    #[error("identity moves point {0}")]
    IdentityMoves(usize),
    #[error("({point}·{g})·{h} differs from {point}·({g}∘{h})")]
    NotAnAction { point: usize, g: usize, h: usize },
}

/// A finite set with a right action of a [`FiniteGroup`]: `act(x, g) = x·g`,
/// so `(x·g)·h = x·(g∘h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSet {
    size: usize,
    order: usize,
    table: Vec<usize>,
}

impl GroupSet {
    pub fn new(group: &FiniteGroup, size: usize, table: Vec<usize>) -> Result<Self, GroupSetError> {
        let order = group.order();
        if table.len() != size * order {
            return Err(GroupSetError::TableSize {
                expected: size * order,
                got: table.len(),
            });
        }
        for x in 0..size {
            for g in 0..order {
                if table[x * order + g] >= size {
                    return Err(GroupSetError::OutOfRange { point: x, element: g });
                }
            }
        }
        let act = |x: usize, g: usize| table[x * order + g];
        for x in 0..size {
            if act(x, group.identity()) != x {
                return Err(GroupSetError::IdentityMoves(x));
            }
            for g in 0..order {
                for h in 0..order {
                    if act(act(x, g), h) != act(x, group.mul(g, h)) {
                        return Err(GroupSetError::NotAnAction { point: x, g, h });
                    }
                }
            }
        }
        Ok(GroupSet { size, order, table })
    }

    pub fn from_fn(group: &FiniteGroup, size: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self, GroupSetError> {
        let order = group.order();
        let table = (0..size * order).map(|k| f(k / order, k % order)).collect();
        Self::new(group, size, table)
    }

    /// Right cosets `K∘g` with `(K∘g)·h = K∘(g∘h)`. Cosets are numbered by
    /// their smallest element.
    pub fn cosets(group: &FiniteGroup, k: &Subgroup) -> (Self, Vec<usize>) {
        let (reps, class_of) = right_coset_labels(group, k);
        let set = Self::from_fn(group, reps.len(), |c, h| class_of[group.mul(reps[c], h)])
            .expect("coset action is a group action");
        (set, reps)
    }

    /// The group acting on itself by right multiplication.
    pub fn regular(group: &FiniteGroup) -> Self {
        Self::from_fn(group, group.order(), |x, g| group.mul(x, g)).expect("regular action")
    }

    /// `size` points all fixed.
    pub fn trivial(group: &FiniteGroup, size: usize) -> Self {
        Self::from_fn(group, size, |x, _| x).expect("trivial action")
    }

    pub fn disjoint_union(&self, other: &GroupSet) -> Self {
        assert_eq!(self.order, other.order, "group-sets over different groups");
        let mut table = self.table.clone();
        table.extend(other.table.iter().map(|&y| y + self.size));
        GroupSet {
            size: self.size + other.size,
            order: self.order,
            table,
        }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn act(&self, x: usize, g: usize) -> usize {
        self.table[x * self.order + g]
    }

    pub fn stabilizer(&self, x: usize) -> Subgroup {
        Subgroup::from_elements((0..self.order).filter(|&g| self.act(x, g) == x))
    }

    pub fn fixed_points(&self, k: &Subgroup) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| k.elements().iter().all(|&g| self.act(x, g) == x))
            .collect()
    }

    /// Orbit label for every point; labels are numbered by first occurrence.
    pub fn orbit_labels(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.size);
        for x in 0..self.size {
            for g in 0..self.order {
                uf.union(x, self.act(x, g));
            }
        }
        uf.labels()
    }

    pub fn orbit_count(&self) -> usize {
        self.orbit_labels().iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_trivial_action(&self) -> bool {
        (0..self.size).all(|x| (0..self.order).all(|g| self.act(x, g) == x))
    }

    pub fn is_free(&self) -> bool {
        (0..self.size).all(|x| self.stabilizer(x).order() == 1)
    }

    pub fn is_equivariant(&self, other: &GroupSet, map: &[usize]) -> bool {
        map.len() == self.size
            && (0..self.size).all(|x| (0..self.order).all(|g| map[self.act(x, g)] == other.act(map[x], g)))
    }

    /// All equivariant maps to `other`, in lexicographic order.
    ///
    /// A map is fixed by the images of one point per orbit, and a point `x`
    /// may go to `y` exactly when `stab(x) ⊆ stab(y)`.
    pub fn equivariant_maps(&self, other: &GroupSet) -> Vec<Vec<usize>> {
        let labels = self.orbit_labels();
        let mut reps: Vec<usize> = Vec::new();
        for x in 0..self.size {
            if labels[x] == reps.len() {
                reps.push(x);
            }
        }
        let candidates: Vec<Vec<usize>> = reps
            .iter()
            .map(|&r| {
                let stab = self.stabilizer(r);
                (0..other.size)
                    .filter(|&y| stab.elements().iter().all(|&g| other.act(y, g) == y))
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        for choice in crate::util::cartesian(&candidates) {
            let mut map = vec![usize::MAX; self.size];
            for (orbit, &r) in reps.iter().enumerate() {
                for g in 0..self.order {
                    map[self.act(r, g)] = other.act(choice[orbit], g);
                }
            }
            out.push(map);
        }
        out.sort();
        out
    }
}

/// Smallest element of each right coset `K∘g`, and the coset index of every
/// element.
pub(crate) fn right_coset_labels(group: &FiniteGroup, k: &Subgroup) -> (Vec<usize>, Vec<usize>) {
    let mut class_of = vec![usize::MAX; group.order()];
    let mut reps = Vec::new();
    for g in group.elements() {
        if class_of[g] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(g);
        for &h in k.elements() {
            class_of[group.mul(h, g)] = idx;
        }
    }
    (reps, class_of)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_groups_are_groups() {
        assert_eq!(FiniteGroup::cyclic(4).order(), 4);
        let d3 = FiniteGroup::dihedral(3);
        assert_eq!(d3.order(), 6);
        assert!(!d3.is_abelian());
        let q = FiniteGroup::quaternion();
        assert!(!q.is_abelian());
        let minus_one = q.element("-1").unwrap();
        assert_eq!(q.inv(minus_one), minus_one);
        let i = q.element("i").unwrap();
        assert_eq!(q.mul(i, i), minus_one);
        let v4 = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
        assert!(v4.is_abelian());
        assert!(v4.elements().all(|a| v4.mul(a, a) == v4.identity()));
    }

    #[test]
    fn bad_tables_rejected() {
        let names = vec![String::from("a"), String::from("b")];
        assert_eq!(
            FiniteGroup::from_table(names.clone(), vec![0, 0, 0, 0]),
            Err(GroupError::NoIdentity)
        );
        assert!(matches!(
            FiniteGroup::from_table(names, vec![0, 1, 1, 1]),
            Err(GroupError::NoInverse(1))
        ));
    }

    #[test]
    fn cosets_and_maps() {
        let g = FiniteGroup::dihedral(3);
        let sub = Subgroup::generated_by(&g, &[g.element("s").unwrap()]);
        let (cosets, reps) = GroupSet::cosets(&g, &sub);
        assert_eq!(cosets.size(), 3);
        assert_eq!(reps.len(), 3);
        assert_eq!(cosets.orbit_count(), 1);
        // Map(G/K, G/K) for K of order 2 in S3 has |N(K)/K| = 1 element.
        assert_eq!(cosets.equivariant_maps(&cosets).len(), 1);
        let regular = GroupSet::regular(&g);
        assert_eq!(regular.equivariant_maps(&regular).len(), 6);
        assert!(regular.equivariant_maps(&GroupSet::trivial(&g, 0)).is_empty());
    }

    #[test]
    fn invalid_action_rejected() {
        let g = FiniteGroup::cyclic(3);
        // a 2-point "action" of ℤ/3 swapping on the generator cannot be an action
        let err = GroupSet::from_fn(&g, 2, |x, k| if k == 0 { x } else { 1 - x });
        assert!(err.is_err());
    }
}
