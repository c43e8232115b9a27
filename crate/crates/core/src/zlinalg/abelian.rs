use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::{snf, IntMatrix};

/// A finitely generated abelian group `ℤ^r ⊕ ℤ/t₁ ⊕ … ⊕ ℤ/t_k` in canonical
/// form: every `tᵢ ≥ 2` and `tᵢ | tᵢ₊₁`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct FgAbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigUint>,
}

impl FgAbelianGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> Self {
        Self::from_invariant_factors(1, &[BigInt::from(order)])
    }

    /// The cokernel of a matrix with `generators` rows whose Smith diagonal
    /// is `factors`. Units are dropped, zeros count towards the free rank.
    pub fn from_invariant_factors(generators: usize, factors: &[BigInt]) -> Self {
        let nonzero: Vec<&BigInt> = factors.iter().filter(|d| !d.is_zero()).collect();
        let torsion: Vec<BigUint> = nonzero
            .iter()
            .filter(|d| !d.abs().is_one())
            .map(|d| d.abs().to_biguint().expect("absolute value is non-negative"))
            .collect();
        FgAbelianGroup {
            free_rank: generators - nonzero.len(),
            torsion,
        }
    }

    /// `ℤ^generators / im(relations)`.
    pub fn cokernel(relations: &IntMatrix) -> Self {
        let s = snf(relations);
        Self::from_invariant_factors(relations.rows(), &s.diagonal())
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Number of elements, `None` if infinite.
    pub fn order(&self) -> Option<BigUint> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let gens = self.free_rank + self.torsion.len() + other.free_rank + other.torsion.len();
        let mut diag: Vec<BigInt> = Vec::new();
        diag.extend(
            self.torsion
                .iter()
                .chain(&other.torsion)
                .map(|t| BigInt::from(t.clone())),
        );
        let rel = IntMatrix::from_fn(
            gens,
            diag.len(),
            |r, c| {
                if r == c {
                    diag[c].clone()
                } else {
                    BigInt::zero()
                }
            },
        );
        Self::cokernel(&rel)
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(alloc::format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| alloc::format!("Z/{t}")));
        f.write_str(&parts.join(" + "))
    }
}
