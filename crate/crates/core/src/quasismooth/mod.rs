//! IP-property and transversality tests, and the weight-system census.

mod census;

pub use census::{census, census_tsv, CensusFilter, CensusRecord};

use crate::error::Result;
use crate::polytope::strictly_inside;
use crate::wps::{newton_points, WeightVector};

/// Whether the degree-`w` monomials span a `d`-dimensional polytope with
/// `(1, ..., 1)` in its interior.
///
/// Panics only if the number of monomials exceeds
/// [`crate::wps::NEWTON_POINT_LIMIT`]; see [`try_has_ip_property`].
pub fn has_ip_property(w: &WeightVector) -> bool {
    try_has_ip_property(w).expect("too many monomials for the IP test")
}

pub fn try_has_ip_property(w: &WeightVector) -> Result<bool> {
    let pts = newton_points(w)?;
    let n = w.len();
    // every coordinate must take the value 0 and some value >= 2
    for i in 0..n {
        let zero = pts.iter().any(|u| u[i] == 0);
        let two = pts.iter().any(|u| u[i] >= 2);
        if !(zero && two) {
            return Ok(false);
        }
    }
    debug_assert!(
        pts.iter().filter(|u| u.iter().all(|&x| x >= 1)).count() == 1,
        "(1,...,1) must be the only monomial without a vanishing exponent"
    );
    // drop the last coordinate: an affine chart of the degree hyperplane
    let projected: Vec<Vec<i64>> = pts
        .iter()
        .map(|u| u[..n - 1].iter().map(|&x| x as i64).collect())
        .collect();
    Ok(strictly_inside(&projected, &vec![1i64; n - 1]))
}

/// `reach[J]`: the degrees in `0..=w` of monomials supported on `J`.
struct Reach {
    degree: usize,
    sets: Vec<Vec<u64>>,
}

impl Reach {
    fn new(weights: &[u64], degree: u64) -> Reach {
        let n = weights.len();
        let bits = degree as usize + 1;
        let words = bits.div_ceil(64);
        let mut sets: Vec<Vec<u64>> = Vec::with_capacity(1 << n);
        let mut empty = vec![0u64; words];
        empty[0] = 1;
        sets.push(empty);
        for mask in 1usize..1 << n {
            let low = mask.trailing_zeros() as usize;
            let mut s = sets[mask & (mask - 1)].clone();
            let step = weights[low] as usize;
            // unbounded knapsack closure: ascending scan reuses new bits
            for t in step..bits {
                if s[(t - step) / 64] >> ((t - step) % 64) & 1 == 1 {
                    s[t / 64] |= 1 << (t % 64);
                }
            }
            sets.push(s);
        }
        Reach {
            degree: degree as usize,
            sets,
        }
    }

    fn contains(&self, mask: usize, t: usize) -> bool {
        t <= self.degree && self.sets[mask][t / 64] >> (t % 64) & 1 == 1
    }
}

/// The `|J| = 1` case of the criterion: every weight divides `w` or some
/// `w - w_j`.
pub fn singleton_condition(weights: &[u64], degree: u64) -> bool {
    weights.iter().enumerate().all(|(i, &x)| {
        degree.is_multiple_of(x)
            || weights
                .iter()
                .enumerate()
                .any(|(j, &y)| j != i && y < degree && (degree - y).is_multiple_of(x))
    })
}

/// Combinatorial quasi-smoothness test for a general degree-`w` polynomial:
/// for every nonempty `J`, either a monomial in the `z_j` (`j` in `J`) has
/// degree `w`, or at least `|J|` distinct `e` outside `J` admit a monomial
/// `z_e * (monomial in J)` of degree `w`.
pub fn is_transverse(w: &WeightVector) -> bool {
    let ws = w.weights();
    let degree = w.degree();
    if !singleton_condition(ws, degree) {
        return false;
    }
    let n = ws.len();
    let reach = Reach::new(ws, degree);
    (1usize..1 << n).all(|mask| {
        if reach.contains(mask, degree as usize) {
            return true;
        }
        let size = mask.count_ones() as usize;
        let partners = (0..n)
            .filter(|&e| mask >> e & 1 == 0 && ws[e] < degree)
            .filter(|&e| reach.contains(mask, (degree - ws[e]) as usize))
            .count();
        partners >= size
    })
}
