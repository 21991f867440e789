mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wpsmirror::euler::{
    mirror_test, stringy_mirror_closed, stringy_polytope, stringy_reflexive, vafa_double_sum,
    vafa_subset_sum, EulerReport,
};
use wpsmirror::quasismooth::{census, census_tsv, CensusFilter};
use wpsmirror::wps::mirror_lattice;
use wpsmirror::Rational;

#[test]
fn gorenstein_routes_agree() {
    for (d, bound) in [(2, 60), (3, 40)] {
        for r in census(d, bound, CensusFilter::Ip, None).unwrap() {
            if !r.gorenstein {
                continue;
            }
            let lattice = mirror_lattice(&r.weights).unwrap();
            let simplex = lattice.mirror_simplex().unwrap();
            let refl = stringy_reflexive(&simplex).unwrap();
            assert_eq!(refl, stringy_polytope(&lattice).unwrap(), "{}", r.weights);
        }
    }
}

#[test]
fn curves_and_k3() {
    for r in census(2, 60, CensusFilter::Ip, None).unwrap() {
        assert_eq!(vafa_double_sum(&r.weights), Rational::zero());
    }
    for r in census(3, 100, CensusFilter::Transverse, None).unwrap() {
        assert_eq!(
            stringy_mirror_closed(&r.weights).unwrap(),
            Rational::from(24)
        );
    }
}

#[test]
fn random_fourfold_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let w = common::random_well_formed(&mut rng, 5, 300);
        assert_eq!(vafa_double_sum(&w), vafa_subset_sum(&w).value, "{w}");
    }
    for _ in 0..8 {
        let w = common::random_ip(&mut rng, 5, 70);
        let report = mirror_test(&w).unwrap();
        assert!(report.methods_agree, "{w}: {:?}", report.notes);
    }
}

#[test]
fn census_is_deterministic_and_monotone() {
    let one = census(3, 70, CensusFilter::Transverse, Some(1)).unwrap();
    let three = census(3, 70, CensusFilter::Transverse, Some(3)).unwrap();
    let a = census_tsv(3, 70, CensusFilter::Transverse, &one);
    let b = census_tsv(3, 70, CensusFilter::Transverse, &three);
    assert_eq!(a, b);

    for filter in [
        CensusFilter::Transverse,
        CensusFilter::Ip,
        CensusFilter::All,
    ] {
        let small = census(3, 24, filter, Some(2)).unwrap();
        let large = census(3, 32, filter, Some(2)).unwrap();
        assert!(small.iter().all(|r| large.contains(r)), "{filter}");
    }
}

#[test]
fn transverse_records_are_integral() {
    for r in census(4, 200, CensusFilter::Transverse, None).unwrap() {
        assert!(r.chi_orb_formula.is_integer(), "{}", r.weights);
    }
}

#[test]
fn report_json_round_trip() {
    for s in ["1,2,3,4,5", "1,1,2,4,5", "1,1,6,14,21", "1,1,4", "2,2,3"] {
        let report = mirror_test(&s.parse().unwrap()).unwrap();
        let text = serde_json::to_string_pretty(&report).unwrap();
        let back: EulerReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
    }
}
