#![allow(dead_code)]

use rand::Rng;
use wpsmirror::quasismooth::has_ip_property;
use wpsmirror::wps::WeightVector;

/// Sorted, well-formed weights with `n` entries and degree at most `max_degree`.
pub fn random_well_formed<R: Rng>(rng: &mut R, n: usize, max_degree: u64) -> WeightVector {
    loop {
        let cap = (max_degree / n as u64).max(1) * 2;
        let mut ws: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=cap)).collect();
        ws.sort_unstable();
        if ws.iter().sum::<u64>() > max_degree {
            continue;
        }
        if let Ok(w) = WeightVector::new(ws) {
            if w.is_well_formed() {
                return w;
            }
        }
    }
}

pub fn random_ip<R: Rng>(rng: &mut R, n: usize, max_degree: u64) -> WeightVector {
    loop {
        let w = random_well_formed(rng, n, max_degree);
        if has_ip_property(&w) {
            return w;
        }
    }
}
