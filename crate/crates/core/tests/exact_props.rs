use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;
use wpsmirror::exact::{gcd_fold, smith_normal_form, IntMatrix, Rational};

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=5)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-30i64..=30, c), r))
        .prop_filter("nonzero", |m| m.iter().flatten().any(|&x| x != 0))
}

proptest! {
    #[test]
    fn snf_reconstructs(rows in matrix()) {
        let a = IntMatrix::from_rows(&rows).unwrap();
        let snf = smith_normal_form(&a).unwrap();
        let back = snf.u.checked_mul(&snf.s).unwrap().checked_mul(&snf.v).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert!(snf.u.det().unwrap().abs().is_one());
        prop_assert!(snf.v.det().unwrap().abs().is_one());
        prop_assert_eq!(snf.u.checked_mul(&snf.u_inv).unwrap(), IntMatrix::identity(a.rows()));
        prop_assert_eq!(snf.v.checked_mul(&snf.v_inv).unwrap(), IntMatrix::identity(a.cols()));
        let f = snf.invariant_factors();
        for pair in f.windows(2) {
            prop_assert!((&pair[1] % &pair[0]) == BigInt::from(0));
        }
        for i in 0..snf.s.rows() {
            for j in 0..snf.s.cols() {
                if i != j {
                    prop_assert_eq!(&snf.s[(i, j)], &BigInt::from(0));
                }
            }
        }
    }

    #[test]
    fn snf_is_deterministic(rows in matrix()) {
        let a = IntMatrix::from_rows(&rows).unwrap();
        let x = smith_normal_form(&a).unwrap();
        let y = smith_normal_form(&a).unwrap();
        prop_assert_eq!(x.u, y.u);
        prop_assert_eq!(x.v, y.v);
    }

    #[test]
    fn rational_add_sub(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
        let x = Rational::new(a, b);
        let y = Rational::new(c, d);
        prop_assert_eq!((x.clone() + &y) - &y, x.clone());
        prop_assert_eq!((x.clone() * &y) + x.clone(), x.clone() * (y.clone() + Rational::one()));
        let text = x.to_string();
        prop_assert_eq!(text.parse::<Rational>().unwrap(), x.clone());
        prop_assert!(!text.contains('.'));
        if let Some((_, den)) = text.split_once('/') {
            prop_assert!(!den.starts_with('-'));
        }
    }

    #[test]
    fn gcd_fold_order_and_repetition(seed in 1u64..10_000, mut extras in prop::collection::vec(1u64..10_000, 0..6)) {
        let g = gcd_fold(seed, &extras);
        extras.reverse();
        prop_assert_eq!(gcd_fold(seed, &extras), g);
        let doubled: Vec<u64> = extras.iter().chain(extras.iter()).copied().collect();
        prop_assert_eq!(gcd_fold(seed, &doubled), g);
    }
}

#[test]
fn rendering() {
    assert_eq!(Rational::new(1032, 5).to_string(), "1032/5");
    assert_eq!(Rational::new(-6, 4).to_string(), "-3/2");
    assert_eq!(Rational::new(10, -5).to_string(), "-2");
}
