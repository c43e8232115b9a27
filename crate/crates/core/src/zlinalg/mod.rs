//! Exact integer linear algebra: Smith normal form, kernels, lattice
//! bases and homology of complexes of finitely generated abelian groups.

mod abelian;
mod matrix;
mod snf;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

pub use abelian::FgAbelianGroup;
pub use matrix::IntMatrix;
pub use snf::{snf, SnfResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("shape mismatch: {left:?} cannot be composed with {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("composite of consecutive differentials is nonzero")]
    NonzeroComposite,
    #[error("vector of length {got} does not match {expected} rows")]
    VectorLength { expected: usize, got: usize },
    #[error("differential does not carry relations into relations")]
    RelationsNotPreserved,
}

/// Basis of the integer kernel, as columns. The lattice is saturated.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let s = snf(a);
    let r = s.rank();
    let idx: Vec<usize> = (r..a.cols()).collect();
    s.v.select_columns(&idx)
}

/// Integer rank.
pub fn rank(a: &IntMatrix) -> usize {
    snf(a).rank()
}

/// An integer solution of `A·x = b`, or `None` when there is none.
pub fn solve_linear(a: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>, LinalgError> {
    if b.len() != a.rows() {
        return Err(LinalgError::VectorLength {
            expected: a.rows(),
            got: b.len(),
        });
    }
    Ok(solve_with(&snf(a), b))
}

fn solve_with(s: &SnfResult, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let c = s.u.mul_vec(b);
    let diag = s.diagonal();
    let r = s.rank();
    let mut y = alloc::vec![BigInt::zero(); s.v.rows()];
    for (i, ci) in c.iter().enumerate() {
        if i < r {
            let (q, rem) = ci.div_rem(&diag[i]);
            if !rem.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(s.v.mul_vec(&y))
}

/// Solves `A·X = B` column by column; `None` if some column has no integer
/// solution.
pub fn solve_matrix(a: &IntMatrix, b: &IntMatrix) -> Result<Option<IntMatrix>, LinalgError> {
    if a.rows() != b.rows() {
        return Err(LinalgError::ShapeMismatch {
            left: a.shape(),
            right: b.shape(),
        });
    }
    let s = snf(a);
    let mut cols = Vec::with_capacity(b.cols());
    for j in 0..b.cols() {
        match solve_with(&s, &b.column(j)) {
            Some(x) => cols.push(x),
            None => return Ok(None),
        }
    }
    Ok(Some(IntMatrix::from_columns(a.cols(), &cols)))
}

/// A basis (as columns) of the lattice spanned by the columns of `p`.
pub fn lattice_basis(p: &IntMatrix) -> IntMatrix {
    // P = U⁻¹·D·V⁻¹, so span(P) = span(U⁻¹·D).
    let s = snf(p);
    let diag = s.diagonal();
    let r = s.rank();
    IntMatrix::from_fn(p.rows(), r, |row, c| s.u_inv.get(row, c) * &diag[c])
}

/// Basis of `{x : L·x ∈ im(T)}`.
pub fn preimage_lattice(l: &IntMatrix, t: &IntMatrix) -> Result<IntMatrix, LinalgError> {
    if l.rows() != t.rows() {
        return Err(LinalgError::ShapeMismatch {
            left: l.shape(),
            right: t.shape(),
        });
    }
    let joined = IntMatrix::hstack(l.rows(), &[l, &-t]);
    let k = kernel_basis(&joined);
    let top: Vec<usize> = (0..l.cols()).collect();
    Ok(lattice_basis(&k.select_rows(&top)))
}

/// Homology `ker(d_out)/im(d_in)` of free groups, for `d_in: C_{n+1} → C_n`
/// and `d_out: C_n → C_{n-1}`.
pub fn homology_at(d_in: &IntMatrix, d_out: &IntMatrix) -> Result<FgAbelianGroup, LinalgError> {
    let zero_in = IntMatrix::zeros(d_in.rows(), 0);
    let zero_out = IntMatrix::zeros(d_out.rows(), 0);
    presented_homology(d_in, &zero_in, d_out, &zero_out)
}

/// Homology at the middle term of `coker(R_in) → coker(R) → coker(R_out)`.
///
/// Each group is presented as the cokernel of its relation matrix; the
/// differentials are lifts to the generator lattices. The result is
/// `{y : d_out·y ∈ im R_out} / (im d_in + im R)`.
pub fn presented_homology(
    d_in: &IntMatrix,
    relations: &IntMatrix,
    d_out: &IntMatrix,
    relations_out: &IntMatrix,
) -> Result<FgAbelianGroup, LinalgError> {
    let n = relations.rows();
    if d_in.rows() != n || d_out.cols() != n || d_out.rows() != relations_out.rows() {
        return Err(LinalgError::ShapeMismatch {
            left: d_out.shape(),
            right: d_in.shape(),
        });
    }
    // Composite must vanish modulo the outgoing relations.
    let composite = d_out * d_in;
    if solve_matrix(relations_out, &composite)?.is_none() {
        return Err(LinalgError::NonzeroComposite);
    }
    if solve_matrix(relations_out, &(d_out * relations))?.is_none() {
        return Err(LinalgError::RelationsNotPreserved);
    }

    let cycles = preimage_lattice(d_out, relations_out)?;
    let boundaries = IntMatrix::hstack(n, &[d_in, relations]);
    let coords =
        solve_matrix(&cycles, &boundaries)?.expect("boundaries lie in the cycle lattice once composites vanish");
    Ok(FgAbelianGroup::cokernel(&coords))
}
