#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

use bredon_core::gcw::PlainComplex;
use bredon_core::{GcwComplex, IntMatrix};
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bredon"))
}

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fixture(name: &str) -> String {
    fixtures_dir().join(name).display().to_string()
}

pub fn run(args: &[&str]) -> (i32, serde_json::Value, Output) {
    let out = bin().args(args).output().expect("binary runs");
    let code = out.status.code().expect("exit code");
    let stream = if out.stdout.is_empty() {
        &out.stderr
    } else {
        &out.stdout
    };
    let json = serde_json::from_slice(stream).unwrap_or(serde_json::Value::Null);
    (code, json, out)
}

/// Cells are orbits; the boundary of an orbit is read off at its first
/// member and summed over each face orbit.
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

/// Cells fixed by every group element, with the boundary restricted to them.
pub fn fixed_complex(x: &GcwComplex) -> PlainComplex {
    let order = x.group().order();
    let cells: Vec<Vec<usize>> = (0..x.dims())
        .map(|n| {
            (0..x.cell_count(n))
                .filter(|&c| (0..order).all(|g| x.act(n, c, g) == c))
                .collect()
        })
        .collect();
    let names = cells
        .iter()
        .enumerate()
        .map(|(n, cs)| cs.iter().map(|&c| x.cell_names(n)[c].clone()).collect())
        .collect();
    let boundary = (0..x.dims())
        .map(|n| {
            if n == 0 {
                return IntMatrix::zeros(0, cells[0].len());
            }
            let d = x.boundary(n);
            IntMatrix::from_fn(cells[n - 1].len(), cells[n].len(), |t, s| {
                d.get(cells[n - 1][t], cells[n][s]).clone()
            })
        })
        .collect();
    PlainComplex { names, boundary }
}

/// Fraction-free elimination.
pub fn bareiss_det(a: &IntMatrix) -> BigInt {
    let n = a.rows();
    let mut m: Vec<Vec<BigInt>> = (0..n).map(|r| a.row(r).to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return sign;
    }
    sign * &m[n - 1][n - 1]
}
