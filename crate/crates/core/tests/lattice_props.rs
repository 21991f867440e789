mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wpsmirror::mirror::ghv_polynomial;
use wpsmirror::polytope::normalized_volume;
use wpsmirror::quasismooth::{census, has_ip_property, CensusFilter};
use wpsmirror::wps::{mirror_lattice, newton_points, WeightVector};
use wpsmirror::Rational;

fn well_formed(max_len: usize, max_degree: u64) -> impl Strategy<Value = WeightVector> {
    (3..=max_len, any::<u64>()).prop_map(move |(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        common::random_well_formed(&mut rng, n, max_degree)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn generators_satisfy_the_relation(w in well_formed(6, 200)) {
        let lattice = mirror_lattice(&w).unwrap();
        prop_assert_eq!(lattice.rank(), w.dim());
        let mut sum = vec![0i64; w.dim()];
        for (v, &x) in lattice.generators().iter().zip(w.weights()) {
            for (s, &c) in sum.iter_mut().zip(v) {
                *s += c * x as i64;
            }
        }
        prop_assert!(sum.iter().all(|&s| s == 0));
    }

    #[test]
    fn mirror_polynomial_shape(w in well_formed(6, 200)) {
        let f = ghv_polynomial(&w).unwrap();
        prop_assert_eq!(f.terms().len(), w.len());
        prop_assert!(f.terms().iter().all(|t| t.coeff == Rational::one()));
        if w.weights()[0] == 1 {
            let negative: Vec<_> = f.terms().iter().filter(|t| t.exponents.iter().any(|&e| e < 0)).collect();
            prop_assert_eq!(negative.len(), 1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn simplex_volume_is_the_degree(w in well_formed(6, 120)) {
        let simplex = mirror_lattice(&w).unwrap().mirror_simplex().unwrap();
        prop_assert_eq!(normalized_volume(&simplex), Rational::from(w.degree()));
    }

    #[test]
    fn monomial_pairings(w in well_formed(5, 40)) {
        let lattice = mirror_lattice(&w).unwrap();
        for u in newton_points(&w).unwrap() {
            let m = lattice.monomial_point(&u);
            for (i, &ui) in u.iter().enumerate() {
                let p = lattice.pairing(&m, i);
                prop_assert_eq!(&p, &Rational::from(ui as i64 - 1));
                prop_assert!(p >= -Rational::one());
            }
        }
    }
}

#[test]
fn transverse_implies_ip() {
    for (d, bound) in [(2, 60), (3, 120), (4, 250)] {
        let records = census(d, bound, CensusFilter::Transverse, None).unwrap();
        assert!(!records.is_empty());
        for r in &records {
            assert!(r.ip, "{} is transverse without the IP-property", r.weights);
            assert!(has_ip_property(&r.weights));
        }
    }
}
