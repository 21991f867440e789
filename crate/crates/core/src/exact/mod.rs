//! Exact integer and rational arithmetic.

mod matrix;
mod rational;
mod snf;

pub use matrix::{
    bareiss_det, gcd_of_maximal_minors, kernel_vector, nullspace_basis, rank, reduce_row, IntMatrix,
};
pub use rational::{ParseRationalError, Rational};
pub use snf::{smith_normal_form, SmithNormalForm};

use num_integer::Integer;

/// `gcd(seed, extras...)`; returns `seed` for an empty list.
pub fn gcd_fold(seed: u64, extras: &[u64]) -> u64 {
    extras.iter().fold(seed, |g, &x| g.gcd(&x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gcd_fold_examples() {
        assert_eq!(gcd_fold(15, &[]), 15);
        assert_eq!(gcd_fold(43, &[6, 14, 21]), 1);
        assert_eq!(gcd_fold(16, &[8, 4]), 4);
        assert_eq!(gcd_fold(0, &[0]), 0);
        assert_eq!(gcd_fold(0, &[12, 18]), 6);
    }

    proptest! {
        #[test]
        fn gcd_fold_order_and_repetition(seed in 0u64..500, mut xs in proptest::collection::vec(0u64..500, 0..6)) {
            let g = gcd_fold(seed, &xs);
            xs.reverse();
            prop_assert_eq!(gcd_fold(seed, &xs), g);
            let doubled: Vec<u64> = xs.iter().chain(xs.iter()).copied().collect();
            prop_assert_eq!(gcd_fold(seed, &doubled), g);
        }

        #[test]
        fn rational_add_sub_inverse(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let x = Rational::new(a, b);
            let y = Rational::new(c, d);
            prop_assert_eq!(&(&x + &y) - &y, x);
        }
    }
}
