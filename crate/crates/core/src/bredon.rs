//! Coefficient systems on the orbit category and Bredon (co)homology.
//!
//! Every abelian group is carried as a presentation: a generator count and
//! a relation matrix whose columns span the relations. Chain groups are
//! built as subquotients of a free ambient lattice and all homology is
//! taken with [`presented_homology`].

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::gcw::{chain_differential, chain_functor, ChainFunctor, GcwComplex, GcwError};
use crate::orbitcat::OrbitCategory;
use crate::zlinalg::{preimage_lattice, presented_homology, solve_matrix, FgAbelianGroup, IntMatrix, LinalgError};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Variance {
    /// `f: H → K` gives `M(K) → M(H)`; used for cohomology.
    Contravariant,
    /// `f: H → K` gives `N(H) → N(K)`; used for homology.
    Covariant,
}

impl Variance {
    pub fn as_str(self) -> &'static str {
        match self {
            Variance::Contravariant => "contravariant",
            Variance::Covariant => "covariant",
        }
    }
}

/// `ℤ^generators / im(relations)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: usize,
    pub relations: IntMatrix,
}

impl Presentation {
    pub fn free(rank: usize) -> Self {
        Presentation {
            generators: rank,
            relations: IntMatrix::zeros(rank, 0),
        }
    }

    pub fn cyclic(order: i64) -> Self {
        Presentation {
            generators: 1,
            relations: IntMatrix::from_rows(&[vec![order]]),
        }
    }

    pub fn zero() -> Self {
        Self::free(0)
    }

    pub fn group(&self) -> FgAbelianGroup {
        FgAbelianGroup::cokernel(&self.relations)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoefficientViolation {
    WrongObjectCount {
        expected: usize,
        got: usize,
    },
    WrongMorphismCount {
        expected: usize,
        got: usize,
    },
    RelationShape {
        object: usize,
    },
    MapShape {
        morphism: usize,
        expected: (usize, usize),
        got: (usize, usize),
    },
    RelationsNotPreserved {
        morphism: usize,
    },
    NotFunctorial {
        outer: usize,
        inner: usize,
    },
    IdentityNotIdentity {
        object: usize,
    },
}

impl core::fmt::Display for CoefficientViolation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        use CoefficientViolation::*;
        match self {
            WrongObjectCount { expected, got } => write!(f, "{got} values for {expected} objects"),
            WrongMorphismCount { expected, got } => {
                write!(f, "{got} maps for {expected} morphisms")
            }
            RelationShape { object } => write!(f, "relation matrix of object {object} has wrong row count"),
            MapShape {
                morphism,
                expected,
                got,
            } => write!(f, "map of morphism {morphism} is {got:?}, expected {expected:?}"),
            RelationsNotPreserved { morphism } => {
                write!(f, "map of morphism {morphism} does not preserve relations")
            }
            NotFunctorial { outer, inner } => {
                write!(f, "composite of morphisms {outer}∘{inner} is not respected")
            }
            IdentityNotIdentity { object } => {
                write!(f, "identity of object {object} does not act as the identity")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BredonError {
    #[error("invalid coefficient system: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidCoefficients(Vec<CoefficientViolation>),
    #[error("coefficients are {got}, {expected} required")]
    WrongVariance { expected: &'static str, got: &'static str },
    #[error("coefficient system is over a different orbit category")]
    CategoryMismatch,
    #[error(transparent)]
    Complex(#[from] GcwError),
    #[error("internal: {0}")]
    Linalg(#[from] LinalgError),
    #[error("internal: {0}")]
    Internal(String),
}

/// A functor from the orbit category to finitely generated abelian groups.
///
/// For a morphism `f: H → K` the matrix acts on generators: contravariant
/// maps are `g_H × g_K`, covariant ones `g_K × g_H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientSystem {
    category: OrbitCategory,
    variance: Variance,
    values: Vec<Presentation>,
    maps: Vec<IntMatrix>,
}

fn lies_in(relations: &IntMatrix, m: &IntMatrix) -> bool {
    matches!(solve_matrix(relations, m), Ok(Some(_)))
}

impl CoefficientSystem {
    /// Validates relation compatibility, identities and composition, all
    /// modulo relations.
    pub fn new(
        category: &OrbitCategory,
        variance: Variance,
        values: Vec<Presentation>,
        maps: Vec<IntMatrix>,
    ) -> Result<Self, BredonError> {
        use CoefficientViolation as V;
        let n = category.object_count();
        let m = category.morphisms().len();
        if values.len() != n {
            return Err(BredonError::InvalidCoefficients(vec![V::WrongObjectCount {
                expected: n,
                got: values.len(),
            }]));
        }
        if maps.len() != m {
            return Err(BredonError::InvalidCoefficients(vec![V::WrongMorphismCount {
                expected: m,
                got: maps.len(),
            }]));
        }
        let mut out = Vec::new();
        for (o, v) in values.iter().enumerate() {
            if v.relations.rows() != v.generators {
                out.push(V::RelationShape { object: o });
            }
        }
        if !out.is_empty() {
            return Err(BredonError::InvalidCoefficients(out));
        }
        let sys = CoefficientSystem {
            category: category.clone(),
            variance,
            values,
            maps,
        };
        for (id, f) in category.morphisms().iter().enumerate() {
            let (dom, cod) = sys.map_ends(f.from, f.to);
            let expected = (sys.values[cod].generators, sys.values[dom].generators);
            if sys.maps[id].shape() != expected {
                out.push(V::MapShape {
                    morphism: id,
                    expected,
                    got: sys.maps[id].shape(),
                });
            }
        }
        if !out.is_empty() {
            return Err(BredonError::InvalidCoefficients(out));
        }
        for (id, f) in category.morphisms().iter().enumerate() {
            let (dom, cod) = sys.map_ends(f.from, f.to);
            let image = &sys.maps[id] * &sys.values[dom].relations;
            if !lies_in(&sys.values[cod].relations, &image) {
                out.push(V::RelationsNotPreserved { morphism: id });
            }
        }
        for o in 0..n {
            let diff = &sys.maps[category.identity(o)] - &IntMatrix::identity(sys.values[o].generators);
            if !lies_in(&sys.values[o].relations, &diff) {
                out.push(V::IdentityNotIdentity { object: o });
            }
        }
        for (a, fa) in category.morphisms().iter().enumerate() {
            for (b, fb) in category.morphisms().iter().enumerate() {
                if fb.to != fa.from {
                    continue;
                }
                let ab = category.compose(a, b).expect("composable");
                let (expected, target) = match variance {
                    // M(a∘b) = M(b)M(a) on M(L) → M(H)
                    Variance::Contravariant => (&sys.maps[b] * &sys.maps[a], fb.from),
                    // N(a∘b) = N(a)N(b) on N(H) → N(L)
                    Variance::Covariant => (&sys.maps[a] * &sys.maps[b], fa.to),
                };
                let diff = &sys.maps[ab] - &expected;
                if !lies_in(&sys.values[target].relations, &diff) {
                    out.push(V::NotFunctorial { outer: a, inner: b });
                }
            }
        }
        if out.is_empty() {
            Ok(sys)
        } else {
            Err(BredonError::InvalidCoefficients(out))
        }
    }

    /// Same group everywhere and identity maps.
    pub fn constant(category: &OrbitCategory, variance: Variance, value: Presentation) -> Result<Self, BredonError> {
        let g = value.generators;
        let n = category.object_count();
        let maps = vec![IntMatrix::identity(g); category.morphisms().len()];
        Self::new(category, variance, vec![value; n], maps)
    }

    /// `value` at `object`, zero elsewhere; endomorphisms of `object` act
    /// trivially and all other maps vanish. Fails unless that is a functor.
    pub fn concentrated(
        category: &OrbitCategory,
        variance: Variance,
        object: usize,
        value: Presentation,
    ) -> Result<Self, BredonError> {
        let n = category.object_count();
        let values: Vec<Presentation> = (0..n)
            .map(|o| {
                if o == object {
                    value.clone()
                } else {
                    Presentation::zero()
                }
            })
            .collect();
        let maps = category
            .morphisms()
            .iter()
            .map(|f| {
                let (gf, gt) = (values[f.from].generators, values[f.to].generators);
                if f.from == object && f.to == object {
                    IntMatrix::identity(gf)
                } else {
                    match variance {
                        Variance::Contravariant => IntMatrix::zeros(gf, gt),
                        Variance::Covariant => IntMatrix::zeros(gt, gf),
                    }
                }
            })
            .collect();
        Self::new(category, variance, values, maps)
    }

    /// Object a map starts and ends at, given a morphism `from → to`.
    fn map_ends(&self, from: usize, to: usize) -> (usize, usize) {
        match self.variance {
            Variance::Contravariant => (to, from),
            Variance::Covariant => (from, to),
        }
    }

    pub fn category(&self) -> &OrbitCategory {
        &self.category
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn value(&self, object: usize) -> &Presentation {
        &self.values[object]
    }

    pub fn values(&self) -> &[Presentation] {
        &self.values
    }

    pub fn map(&self, morphism: usize) -> &IntMatrix {
        &self.maps[morphism]
    }

    fn require(&self, variance: Variance) -> Result<(), BredonError> {
        if self.variance == variance {
            Ok(())
        } else {
            Err(BredonError::WrongVariance {
                expected: variance.as_str(),
                got: self.variance.as_str(),
            })
        }
    }
}

/// Offsets of per-object blocks `rank(F(H)) × g_H` in the ambient lattice.
fn block_offsets(f: &ChainFunctor, sys: &CoefficientSystem) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(f.bases.len() + 1);
    let mut acc = 0;
    offsets.push(0);
    for (o, basis) in f.bases.iter().enumerate() {
        acc += basis.len() * sys.values[o].generators;
        offsets.push(acc);
    }
    offsets
}

fn ambient_relations(f: &ChainFunctor, sys: &CoefficientSystem) -> IntMatrix {
    let blocks: Vec<IntMatrix> = f
        .bases
        .iter()
        .enumerate()
        .map(|(o, b)| IntMatrix::identity(b.len()).kron(&sys.values[o].relations))
        .collect();
    let refs: Vec<&IntMatrix> = blocks.iter().collect();
    IntMatrix::block_diag(&refs)
}

/// The group of natural transformations `F → M`, as the sublattice
/// `lattice` of the ambient `⊕_H M(H)^{rank F(H)}` modulo `relations`
/// (given in lattice coordinates).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatGroup {
    pub group: FgAbelianGroup,
    pub lattice: IntMatrix,
    pub relations: IntMatrix,
    pub offsets: Vec<usize>,
}

/// Natural transformations from a free chain functor to a contravariant
/// system, solving `M(f)∘η_K = η_H∘F(f)` modulo relations for every
/// morphism `f: H → K`.
pub fn nat_group(f: &ChainFunctor, m: &CoefficientSystem) -> Result<NatGroup, BredonError> {
    m.require(Variance::Contravariant)?;
    let cat = &m.category;
    if f.bases.len() != cat.object_count() || f.maps.len() != cat.morphisms().len() {
        return Err(BredonError::CategoryMismatch);
    }
    let offsets = block_offsets(f, m);
    let dim = *offsets.last().expect("nonempty");
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut targets: Vec<&IntMatrix> = Vec::new();
    for (id, mor) in cat.morphisms().iter().enumerate() {
        let (h, k) = (mor.from, mor.to);
        let gh = m.values[h].generators;
        let gk = m.values[k].generators;
        let ff = &f.maps[id];
        for j in 0..f.rank(k) {
            // M(f)·η_K(e_j) − Σ_i F(f)[i,j]·η_H(e_i), one row per generator of M(H)
            let mut block = IntMatrix::zeros(gh, dim);
            for r in 0..gh {
                for c in 0..gk {
                    block.set(r, offsets[k] + j * gk + c, m.maps[id].get(r, c).clone());
                }
                for i in 0..f.rank(h) {
                    let coeff = ff.get(i, j);
                    let col = offsets[h] + i * gh + r;
                    let cur = block.get(r, col).clone();
                    block.set(r, col, cur - coeff);
                }
            }
            for r in 0..gh {
                rows.push(block.row(r).to_vec());
            }
            targets.push(&m.values[h].relations);
        }
    }
    let constraint = if rows.is_empty() {
        IntMatrix::zeros(0, dim)
    } else {
        IntMatrix::from_rows(&rows)
    };
    let target_rel = IntMatrix::block_diag(&targets);
    let lattice = preimage_lattice(&constraint, &target_rel)?;
    let amb = ambient_relations(f, m);
    let relations =
        solve_matrix(&lattice, &amb)?.ok_or_else(|| BredonError::Internal("relations are not natural".into()))?;
    Ok(NatGroup {
        group: FgAbelianGroup::cokernel(&relations),
        lattice,
        relations,
        offsets,
    })
}

/// `F ⊗ N` over the orbit category, presented on the ambient
/// `⊕_H F(H) ⊗ N(H)` by `relations`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coend {
    pub group: FgAbelianGroup,
    pub relations: IntMatrix,
    pub offsets: Vec<usize>,
}

/// Coend of a free chain functor with a covariant system: the ambient sum
/// modulo `F(f)x ⊗ n − x ⊗ N(f)n` for every `f: H → K`, `x ∈ F(K)`,
/// `n ∈ N(H)`.
pub fn coend_tensor(f: &ChainFunctor, n: &CoefficientSystem) -> Result<Coend, BredonError> {
    n.require(Variance::Covariant)?;
    let cat = &n.category;
    if f.bases.len() != cat.object_count() || f.maps.len() != cat.morphisms().len() {
        return Err(BredonError::CategoryMismatch);
    }
    let offsets = block_offsets(f, n);
    let dim = *offsets.last().expect("nonempty");
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    for (id, mor) in cat.morphisms().iter().enumerate() {
        let (h, k) = (mor.from, mor.to);
        let gh = n.values[h].generators;
        let gk = n.values[k].generators;
        for j in 0..f.rank(k) {
            for g in 0..gh {
                let mut col = vec![BigInt::from(0); dim];
                for i in 0..f.rank(h) {
                    col[offsets[h] + i * gh + g] += f.maps[id].get(i, j);
                }
                for l in 0..gk {
                    col[offsets[k] + j * gk + l] -= n.maps[id].get(l, g);
                }
                cols.push(col);
            }
        }
    }
    let bimodule = IntMatrix::from_columns(dim, &cols);
    let amb = ambient_relations(f, n);
    let relations = IntMatrix::hstack(dim, &[&amb, &bimodule]);
    Ok(Coend {
        group: FgAbelianGroup::cokernel(&relations),
        relations,
        offsets,
    })
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Differentials raise degree.
    Cochain,
    /// Differentials lower degree.
    Chain,
}

/// A (co)chain complex of presented groups in degrees `0..groups.len()`.
///
/// `differentials[n]` leaves degree `n`: into `n+1` for cochains, into
/// `n-1` for chains (`differentials[0]` of a chain complex is empty).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BredonComplex {
    pub direction: Direction,
    pub groups: Vec<FgAbelianGroup>,
    pub generators: Vec<usize>,
    pub relations: Vec<IntMatrix>,
    pub differentials: Vec<IntMatrix>,
}

impl BredonComplex {
    /// Whether the differential out of degree `n` is onto its target group.
    pub fn is_surjective(&self, n: usize) -> bool {
        let target = match self.direction {
            Direction::Cochain => n + 1,
            Direction::Chain => match n.checked_sub(1) {
                Some(t) => t,
                None => return true,
            },
        };
        let Some(rel) = self.relations.get(target) else {
            return true;
        };
        let d = &self.differentials[n];
        FgAbelianGroup::cokernel(&IntMatrix::hstack(rel.rows(), &[d, rel])).is_trivial()
    }
}

/// The complex with its homology, degree by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BredonResult {
    pub complex: BredonComplex,
    pub homology: Vec<FgAbelianGroup>,
}

fn check_complex(x: &GcwComplex, sys: &CoefficientSystem) -> Result<(), BredonError> {
    if sys.category.group() == x.group() {
        Ok(())
    } else {
        Err(BredonError::CategoryMismatch)
    }
}

fn lift_blocks(
    f_from: &ChainFunctor,
    f_to: &ChainFunctor,
    sys: &CoefficientSystem,
    block: impl Fn(usize) -> IntMatrix,
) -> IntMatrix {
    let from = block_offsets(f_from, sys);
    let to = block_offsets(f_to, sys);
    let mut out = IntMatrix::zeros(*to.last().expect("nonempty"), *from.last().expect("nonempty"));
    for o in 0..f_from.bases.len() {
        out.paste(to[o], from[o], &block(o));
    }
    out
}

/// Cohomology of `Hom(C_*(X), M)` with `δ` given by precomposition with `d`.
pub fn bredon_cohomology(x: &GcwComplex, m: &CoefficientSystem) -> Result<BredonResult, BredonError> {
    m.require(Variance::Contravariant)?;
    check_complex(x, m)?;
    let cat = &m.category;
    let top = x.dims();
    let functors: Vec<ChainFunctor> = (0..=top).map(|n| chain_functor(x, cat, n)).collect::<Result<_, _>>()?;
    let nats: Vec<NatGroup> = functors.iter().map(|f| nat_group(f, m)).collect::<Result<_, _>>()?;
    // δ_n: degree n → n+1, in lattice coordinates
    let mut deltas = Vec::with_capacity(top);
    for n in 0..top {
        let d = chain_differential(x, cat, n + 1).map_err(|e| BredonError::Internal(e.to_string()))?;
        let lift = lift_blocks(&functors[n], &functors[n + 1], m, |o| {
            d.components[o]
                .transpose()
                .kron(&IntMatrix::identity(m.values[o].generators))
        });
        let image = &lift * &nats[n].lattice;
        let coords = solve_matrix(&nats[n + 1].lattice, &image)?
            .ok_or_else(|| BredonError::Internal(format!("δ_{n} leaves the natural transformations")))?;
        deltas.push(coords);
    }
    let lattice_rank = |n: usize| nats[n].lattice.cols();
    let mut homology = Vec::with_capacity(top);
    for n in 0..top {
        let d_in = if n == 0 {
            IntMatrix::zeros(lattice_rank(0), 0)
        } else {
            deltas[n - 1].clone()
        };
        homology.push(presented_homology(
            &d_in,
            &nats[n].relations,
            &deltas[n],
            &nats[n + 1].relations,
        )?);
    }
    Ok(BredonResult {
        complex: BredonComplex {
            direction: Direction::Cochain,
            groups: nats[..top].iter().map(|g| g.group.clone()).collect(),
            generators: (0..top).map(lattice_rank).collect(),
            relations: nats[..top].iter().map(|g| g.relations.clone()).collect(),
            differentials: deltas,
        },
        homology,
    })
}

/// Homology of `C_*(X) ⊗ N` with `∂` induced by `d`.
pub fn bredon_homology(x: &GcwComplex, n_sys: &CoefficientSystem) -> Result<BredonResult, BredonError> {
    n_sys.require(Variance::Covariant)?;
    check_complex(x, n_sys)?;
    let cat = &n_sys.category;
    let top = x.dims();
    let functors: Vec<ChainFunctor> = (0..=top).map(|n| chain_functor(x, cat, n)).collect::<Result<_, _>>()?;
    let coends: Vec<Coend> = functors
        .iter()
        .map(|f| coend_tensor(f, n_sys))
        .collect::<Result<_, _>>()?;
    let size = |n: usize| coends[n].relations.rows();
    // ∂_n: degree n → n−1, n ≥ 1
    let mut partials = vec![IntMatrix::zeros(0, size(0))];
    for n in 1..=top {
        let d = chain_differential(x, cat, n).map_err(|e| BredonError::Internal(e.to_string()))?;
        partials.push(lift_blocks(&functors[n], &functors[n - 1], n_sys, |o| {
            d.components[o].kron(&IntMatrix::identity(n_sys.values[o].generators))
        }));
    }
    let mut homology = Vec::with_capacity(top);
    for n in 0..top {
        let d_out = if n == 0 {
            IntMatrix::zeros(0, size(0))
        } else {
            partials[n].clone()
        };
        let rel_out = if n == 0 {
            IntMatrix::zeros(0, 0)
        } else {
            coends[n - 1].relations.clone()
        };
        homology.push(presented_homology(
            &partials[n + 1],
            &coends[n].relations,
            &d_out,
            &rel_out,
        )?);
    }
    partials.truncate(top);
    Ok(BredonResult {
        complex: BredonComplex {
            direction: Direction::Chain,
            groups: coends[..top].iter().map(|c| c.group.clone()).collect(),
            generators: (0..top).map(size).collect(),
            relations: coends[..top].iter().map(|c| c.relations.clone()).collect(),
            differentials: partials,
        },
        homology,
    })
}

/// Identity on `ℤ`, for building constant systems by hand.
pub fn unit_matrix() -> IntMatrix {
    IntMatrix::from_fn(1, 1, |_, _| BigInt::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::gcw::{assemble_from_cells, CellOrbit};
    use crate::group::FiniteGroup;
    use crate::orbitcat::Subgroup;

    fn z(r: usize) -> FgAbelianGroup {
        FgAbelianGroup::free(r)
    }

    #[test]
    fn fixture_systems_validate() {
        let x = fixtures::flip_circle();
        let cat = OrbitCategory::build(x.group());
        fixtures::coefficients_a(&cat).unwrap();
        fixtures::coefficients_b(&cat).unwrap();
        let z3 = CoefficientSystem::constant(&cat, Variance::Covariant, Presentation::cyclic(3)).unwrap();
        assert_eq!(z3.value(0).group(), FgAbelianGroup::cyclic(3));
    }

    #[test]
    fn non_functorial_rejected() {
        let x = fixtures::flip_circle();
        let cat = OrbitCategory::build(x.group());
        let t = x.group().element("t").unwrap();
        let swap = cat.morphism_via(0, 0, t).unwrap();
        let mut maps = vec![IntMatrix::identity(1); cat.morphisms().len()];
        // t acting by −1 on ℤ is fine on its own, but then e → G must be killed
        maps[swap] = IntMatrix::from_rows(&[vec![-1]]);
        let err =
            CoefficientSystem::new(&cat, Variance::Contravariant, vec![Presentation::free(1); 2], maps).unwrap_err();
        assert!(matches!(err, BredonError::InvalidCoefficients(_)));
        // a torsion relation not carried along
        let mut maps = vec![IntMatrix::identity(1); cat.morphisms().len()];
        maps[cat.hom(0, 1)[0]] = IntMatrix::identity(1);
        let vals = vec![Presentation::free(1), Presentation::cyclic(2)];
        assert!(CoefficientSystem::new(&cat, Variance::Contravariant, vals, maps).is_err());
    }

    #[test]
    fn nat_groups_of_flip_circle() {
        let x = fixtures::flip_circle();
        let cat = OrbitCategory::build(x.group());
        let a = fixtures::coefficients_a(&cat).unwrap();
        let b = fixtures::coefficients_b(&cat).unwrap();
        let c0 = chain_functor(&x, &cat, 0).unwrap();
        let c1 = chain_functor(&x, &cat, 1).unwrap();
        assert_eq!(nat_group(&c0, &a).unwrap().group, z(2));
        assert_eq!(nat_group(&c1, &a).unwrap().group, z(0));
        assert_eq!(nat_group(&c1, &b).unwrap().group, z(1));
        assert_eq!(nat_group(&ChainFunctor::zero(&cat, 3), &b).unwrap().group, z(0));
    }

    #[test]
    fn coends_of_flip_circle() {
        let x = fixtures::flip_circle();
        let cat = OrbitCategory::build(x.group());
        let n = CoefficientSystem::constant(&cat, Variance::Covariant, Presentation::free(1)).unwrap();
        let c0 = chain_functor(&x, &cat, 0).unwrap();
        let c1 = chain_functor(&x, &cat, 1).unwrap();
        assert_eq!(coend_tensor(&c0, &n).unwrap().group, z(2));
        assert_eq!(coend_tensor(&c1, &n).unwrap().group, z(1));
        assert_eq!(coend_tensor(&ChainFunctor::zero(&cat, 2), &n).unwrap().group, z(0));
    }

    #[test]
    fn flip_circle_cohomology() {
        let x = fixtures::flip_circle();
        let cat = OrbitCategory::build(x.group());
        let a = bredon_cohomology(&x, &fixtures::coefficients_a(&cat).unwrap()).unwrap();
        assert_eq!(a.complex.groups, [z(2), z(0)]);
        assert_eq!(a.homology, [z(2), z(0)]);
        let b = bredon_cohomology(&x, &fixtures::coefficients_b(&cat).unwrap()).unwrap();
        assert_eq!(b.complex.groups, [z(2), z(1)]);
        assert!(b.complex.is_surjective(0));
        assert_eq!(b.homology, [z(1), z(0)]);
    }

    #[test]
    fn flip_circle_homology() {
        let x = fixtures::flip_circle();
        let cat = OrbitCategory::build(x.group());
        let n = CoefficientSystem::constant(&cat, Variance::Covariant, Presentation::free(1)).unwrap();
        let h = bredon_homology(&x, &n).unwrap();
        assert_eq!(h.homology, [z(1), z(0)]);
        let top = CoefficientSystem::concentrated(&cat, Variance::Covariant, 1, Presentation::free(1)).unwrap();
        let h = bredon_homology(&x, &top).unwrap();
        assert_eq!(h.homology, [z(2), z(0)]);
    }

    #[test]
    fn point_complex_returns_top_value() {
        let g = FiniteGroup::cyclic(2);
        let p = assemble_from_cells(
            &g,
            &[CellOrbit {
                name: "*".into(),
                dimension: 0,
                orbit_type: Subgroup::full(&g),
                boundary: Vec::new(),
            }],
        )
        .unwrap();
        let cat = OrbitCategory::build(&g);
        let m = CoefficientSystem::concentrated(&cat, Variance::Contravariant, 1, Presentation::cyclic(5)).unwrap();
        assert_eq!(bredon_cohomology(&p, &m).unwrap().homology, [FgAbelianGroup::cyclic(5)]);
        let n = CoefficientSystem::constant(&cat, Variance::Covariant, Presentation::free(1)).unwrap();
        assert_eq!(bredon_homology(&p, &n).unwrap().homology, [z(1)]);
    }

    #[test]
    fn torsion_coefficients_on_circle() {
        // constant ℤ/2 on the flip circle: quotient is an interval
        let x = fixtures::flip_circle();
        let cat = OrbitCategory::build(x.group());
        let m = CoefficientSystem::constant(&cat, Variance::Contravariant, Presentation::cyclic(2)).unwrap();
        let h = bredon_cohomology(&x, &m).unwrap();
        assert_eq!(h.homology, [FgAbelianGroup::cyclic(2), z(0)]);
        let n = CoefficientSystem::constant(&cat, Variance::Covariant, Presentation::cyclic(2)).unwrap();
        assert_eq!(
            bredon_homology(&x, &n).unwrap().homology,
            [FgAbelianGroup::cyclic(2), z(0)]
        );
    }

    #[test]
    fn variance_is_enforced() {
        let x = fixtures::flip_circle();
        let cat = OrbitCategory::build(x.group());
        let a = fixtures::coefficients_a(&cat).unwrap();
        assert!(matches!(
            bredon_homology(&x, &a),
            Err(BredonError::WrongVariance { .. })
        ));
    }
}
