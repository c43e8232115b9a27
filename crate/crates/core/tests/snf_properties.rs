mod common;

use bredon_core::zlinalg::{homology_at, kernel_basis, rank, snf};
use bredon_core::{FgAbelianGroup, IntMatrix};
use common::{cofactor_det, minor_gcd, rows_of};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn matrix(max: usize) -> impl Strategy<Value = IntMatrix> {
    (0..=max, 0..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-9i64..=9, c), r).prop_map(move |rows| {
            if r == 0 {
                IntMatrix::zeros(0, c)
            } else {
                IntMatrix::from_rows(&rows)
            }
        })
    })
}

/// Product of random elementary operations, unimodular by construction.
fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec((0..n.max(1), 0..n.max(1), -3i64..=3, any::<bool>()), 0..12).prop_map(move |ops| {
        let mut m = IntMatrix::identity(n);
        for (i, j, k, swap) in ops {
            if n == 0 {
                break;
            }
            let mut e = IntMatrix::identity(n);
            if swap {
                e.set(i, i, 0);
                e.set(j, j, 0);
                e.set(i, j, 1);
                e.set(j, i, 1);
                if i == j {
                    e.set(i, i, -1);
                }
            } else if i != j {
                e.set(i, j, k);
            }
            m = &e * &m;
        }
        m
    })
}

proptest! {
    #[test]
    fn decomposition_is_exact(a in matrix(8)) {
        let s = snf(&a);
        prop_assert_eq!(&(&s.u * &a) * &s.v, s.d.clone());
        prop_assert_eq!(&s.u * &s.u_inv, IntMatrix::identity(a.rows()));
        prop_assert_eq!(&s.v * &s.v_inv, IntMatrix::identity(a.cols()));
        for r in 0..a.rows() {
            for c in 0..a.cols() {
                prop_assert!(r == c || s.d.get(r, c).is_zero());
            }
        }
        let diag = s.diagonal();
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative());
            let divides = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
            prop_assert!(divides);
        }
    }

    #[test]
    fn transforms_are_unimodular(a in matrix(6)) {
        let s = snf(&a);
        prop_assert_eq!(cofactor_det(&rows_of(&s.u)).abs(), BigInt::from(1));
        prop_assert_eq!(cofactor_det(&rows_of(&s.v)).abs(), BigInt::from(1));
    }

    /// d₁⋯d_k is the gcd of the k × k minors.
    #[test]
    fn invariant_factors_match_minors(a in matrix(4)) {
        let diag = snf(&a).diagonal();
        let mut prod = BigInt::from(1);
        for (k, d) in diag.iter().enumerate() {
            prod *= d;
            prop_assert_eq!(&prod, &minor_gcd(&a, k + 1));
        }
        prop_assert_eq!(rank(&a), (1..=diag.len()).filter(|&k| !minor_gcd(&a, k).is_zero()).count());
    }

    #[test]
    fn cokernel_ignores_change_of_basis(
        (a, p, q) in matrix(5).prop_flat_map(|a| {
            let (r, c) = a.shape();
            (Just(a), unimodular(r), unimodular(c))
        })
    ) {
        prop_assert_eq!(cofactor_det(&rows_of(&p)).abs(), BigInt::from(1));
        let b = &(&p * &a) * &q;
        prop_assert_eq!(FgAbelianGroup::cokernel(&b), FgAbelianGroup::cokernel(&a));
    }

    #[test]
    fn kernel_is_saturated_and_annihilated(a in matrix(6)) {
        let k = kernel_basis(&a);
        prop_assert!((&a * &k).is_zero());
        prop_assert_eq!(k.cols(), a.cols() - rank(&a));
        // saturation: ℤ^n / ker is torsion free
        if k.cols() > 0 {
            prop_assert!(FgAbelianGroup::cokernel(&k).torsion.is_empty());
        }
    }

    /// Homology of `ℤ^n --a--> ℤ^m → 0` is the cokernel.
    #[test]
    fn homology_of_two_term_complex(a in matrix(6)) {
        let h = homology_at(&a, &IntMatrix::zeros(0, a.rows())).unwrap();
        prop_assert_eq!(h, FgAbelianGroup::cokernel(&a));
    }
}

#[test]
fn known_forms() {
    let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    assert_eq!(snf(&a).diagonal(), [2, 6, 12].map(BigInt::from));
    let z = IntMatrix::zeros(3, 2);
    assert_eq!(FgAbelianGroup::cokernel(&z), FgAbelianGroup::free(3));
    assert_eq!(snf(&IntMatrix::zeros(0, 0)).diagonal(), Vec::<BigInt>::new());
}
