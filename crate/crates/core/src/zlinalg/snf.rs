use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Smith normal form `U·A·V = D` together with the inverses of both
/// transforms (tracked alongside, never computed by inversion).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SnfResult {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|d| !d.is_zero()).count()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }
}

struct Work {
    d: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.d.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.d.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// `row[dst] += k * row[src]`
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.d.add_row_multiple(dst, src, k);
        self.u.add_row_multiple(dst, src, k);
        self.u_inv.add_col_multiple(src, dst, &-k);
    }

    /// `col[dst] += k * col[src]`
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.d.add_col_multiple(dst, src, k);
        self.v.add_col_multiple(dst, src, k);
        self.v_inv.add_row_multiple(src, dst, &-k);
    }

    fn negate_row(&mut self, i: usize) {
        self.d.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Smallest nonzero absolute value in the trailing block starting at
    /// `(t, t)`, ties broken by row-major order.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for r in t..self.d.rows() {
            for c in t..self.d.cols() {
                let v = self.d.get(r, c);
                if v.is_zero() {
                    continue;
                }
                let a = v.abs();
                if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                    best = Some((r, c, a));
                }
            }
        }
        best.map(|(r, c, _)| (r, c))
    }
}

/// Smith normal form with deterministic pivoting.
///
/// The diagonal of `D` is non-negative and forms a divisibility chain; `U`
/// and `V` are unimodular. Output depends only on the input matrix.
pub fn snf(a: &IntMatrix) -> SnfResult {
    let (m, n) = a.shape();
    let mut w = Work {
        d: a.clone(),
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
        v_inv: IntMatrix::identity(n),
    };

    'diag: for t in 0..m.min(n) {
        loop {
            let Some((pr, pc)) = w.pivot(t) else {
                break 'diag;
            };
            w.swap_rows(t, pr);
            w.swap_cols(t, pc);
            let p = w.d.get(t, t).clone();

            let mut remainder = false;
            for r in t + 1..m {
                let q = w.d.get(r, t).div_floor(&p);
                w.add_row(r, t, &-q);
                remainder |= !w.d.get(r, t).is_zero();
            }
            for c in t + 1..n {
                let q = w.d.get(t, c).div_floor(&p);
                w.add_col(c, t, &-q);
                remainder |= !w.d.get(t, c).is_zero();
            }
            if remainder {
                continue;
            }

            // Row and column are clear; enforce divisibility of the rest.
            let offender = (t + 1..m).find(|&r| (t + 1..n).any(|c| !w.d.get(r, c).is_multiple_of(&p)));
            match offender {
                Some(r) => w.add_row(t, r, &BigInt::from(1)),
                None => break,
            }
        }
        if w.d.get(t, t).is_negative() {
            w.negate_row(t);
        }
    }

    SnfResult {
        u: w.u,
        d: w.d,
        v: w.v,
        u_inv: w.u_inv,
        v_inv: w.v_inv,
    }
}
