#![allow(dead_code)]

use bredon_core::gcw::PlainComplex;
use bredon_core::{GcwComplex, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

pub fn rows_of(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..a.rows()).map(|r| a.row(r).to_vec()).collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all `k × k` minors.
pub fn minor_gcd(a: &IntMatrix, k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rs in subsets(a.rows(), k) {
        for cs in subsets(a.cols(), k) {
            let m: Vec<Vec<BigInt>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| a.get(r, c).clone()).collect())
                .collect();
            g = g.gcd(&cofactor_det(&m));
        }
    }
    g
}

/// Cells are orbits; a face orbit is hit with the sum of coefficients over
/// its members, read off at the orbit representative.
pub fn quotient_complex(x: &GcwComplex) -> PlainComplex {
    let orbits: Vec<Vec<Vec<usize>>> = (0..x.dims()).map(|n| x.cell_orbits(n)).collect();
    let names = orbits
        .iter()
        .enumerate()
        .map(|(n, os)| os.iter().map(|o| x.cell_names(n)[o[0]].clone()).collect())
        .collect();
    let boundary = (0..x.dims())
        .map(|n| {
            if n == 0 {
                return IntMatrix::zeros(0, orbits[0].len());
            }
            let d = x.boundary(n);
            IntMatrix::from_fn(orbits[n - 1].len(), orbits[n].len(), |t, s| {
                let rep = orbits[n][s][0];
                orbits[n - 1][t].iter().map(|&f| d.get(f, rep).clone()).sum()
            })
        })
        .collect();
    PlainComplex { names, boundary }
}
