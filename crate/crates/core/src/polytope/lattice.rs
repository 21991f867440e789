//! Lattice points by a pruned bounding-box scan.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{point_from_ints, Polytope};
use crate::error::Result;

/// `sum c_j x_j + c0`, required `>= 0` (or `> 0`, or `= 0`).
struct Constraint {
    coeffs: Vec<i128>,
    constant: i128,
    kind: Kind,
    // bounds of sum_{j >= k} c_j x_j over the box, per k
    suffix_max: Vec<i128>,
    suffix_min: Vec<i128>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    NonNegative,
    Positive,
    Zero,
}

fn small(x: &BigInt) -> i128 {
    x.to_i128()
        .expect("polytope coordinates exceed the supported range")
}

fn constraints(p: &Polytope, strict: bool, lo: &[i128], hi: &[i128]) -> Vec<Constraint> {
    let mut out = Vec::new();
    let mut push = |coeffs: Vec<i128>, constant: i128, kind: Kind| {
        let n = coeffs.len();
        let mut suffix_max = vec![0i128; n + 1];
        let mut suffix_min = vec![0i128; n + 1];
        for j in (0..n).rev() {
            let (a, b) = (coeffs[j] * lo[j], coeffs[j] * hi[j]);
            suffix_max[j] = suffix_max[j + 1] + a.max(b);
            suffix_min[j] = suffix_min[j + 1] + a.min(b);
        }
        out.push(Constraint {
            coeffs,
            constant,
            kind,
            suffix_max,
            suffix_min,
        });
    };
    for f in p.facets() {
        let den = small(f.offset.denom());
        let coeffs = f.normal.iter().map(|a| small(a) * den).collect();
        let kind = if strict {
            Kind::Positive
        } else {
            Kind::NonNegative
        };
        push(coeffs, small(f.offset.numer()), kind);
    }
    for (n, c) in &p.affine.equations {
        let q = small(c.denom());
        let coeffs = n.iter().map(|a| small(a) * q).collect();
        push(coeffs, -small(c.numer()), Kind::Zero);
    }
    out
}

fn scan(p: &Polytope, strict: bool) -> Vec<Vec<i64>> {
    let d = p.ambient_dim();
    let mut lo = vec![i128::MAX; d];
    let mut hi = vec![i128::MIN; d];
    for v in p.vertices() {
        for j in 0..d {
            lo[j] = lo[j].min(small(&v[j].ceil()));
            hi[j] = hi[j].max(small(&v[j].floor()));
        }
    }
    if (0..d).any(|j| lo[j] > hi[j]) {
        return Vec::new();
    }
    let cons = constraints(p, strict, &lo, &hi);
    let mut partial = vec![0i128; cons.len()];
    let mut x = vec![0i64; d];
    let mut out = Vec::new();
    recurse(0, &lo, &hi, &cons, &mut partial, &mut x, &mut out);
    out
}

fn recurse(
    k: usize,
    lo: &[i128],
    hi: &[i128],
    cons: &[Constraint],
    partial: &mut Vec<i128>,
    x: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    let d = lo.len();
    if k == d {
        let ok = cons.iter().zip(partial.iter()).all(|(c, &s)| {
            let v = s + c.constant;
            match c.kind {
                Kind::NonNegative => v >= 0,
                Kind::Positive => v > 0,
                Kind::Zero => v == 0,
            }
        });
        if ok {
            out.push(x.clone());
        }
        return;
    }
    'values: for t in lo[k]..=hi[k] {
        for (i, c) in cons.iter().enumerate() {
            let s = partial[i] + c.coeffs[k] * t + c.constant;
            let feasible = match c.kind {
                Kind::NonNegative => s + c.suffix_max[k + 1] >= 0,
                Kind::Positive => s + c.suffix_max[k + 1] > 0,
                Kind::Zero => s + c.suffix_max[k + 1] >= 0 && s + c.suffix_min[k + 1] <= 0,
            };
            if !feasible {
                continue 'values;
            }
        }
        for (i, c) in cons.iter().enumerate() {
            partial[i] += c.coeffs[k] * t;
        }
        x[k] = t as i64;
        recurse(k + 1, lo, hi, cons, partial, x, out);
        for (i, c) in cons.iter().enumerate() {
            partial[i] -= c.coeffs[k] * t;
        }
    }
}

/// All integer points of `p`, sorted lexicographically.
pub fn lattice_points(p: &Polytope) -> Vec<Vec<i64>> {
    scan(p, false)
}

/// Integer points in the relative interior of `p`, sorted lexicographically.
pub fn interior_lattice_points(p: &Polytope) -> Vec<Vec<i64>> {
    scan(p, true)
}

/// `[P]`: the convex hull of the lattice points of `p`. Errors when `p`
/// contains no lattice point.
pub fn bracket(p: &Polytope) -> Result<Polytope> {
    let pts: Vec<_> = lattice_points(p)
        .iter()
        .map(|x| point_from_ints(x))
        .collect();
    Polytope::hull(&pts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    fn hull(rows: &[&[i64]]) -> Polytope {
        Polytope::hull(&rows.iter().map(|r| point_from_ints(r)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn unit_square() {
        let sq = hull(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(
            lattice_points(&sq),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
        assert!(interior_lattice_points(&sq).is_empty());
    }

    #[test]
    fn thin_rational_triangle() {
        let r = |p: i64, q: i64| Rational::new(p, q);
        let tri = Polytope::hull(&[
            vec![r(0, 1), r(0, 1)],
            vec![r(7, 2), r(0, 1)],
            vec![r(0, 1), r(1, 2)],
        ])
        .unwrap();
        assert_eq!(
            lattice_points(&tri),
            vec![vec![0, 0], vec![1, 0], vec![2, 0], vec![3, 0]]
        );
        assert!(interior_lattice_points(&tri).is_empty());
    }

    #[test]
    fn lower_dimensional_segment() {
        let seg = hull(&[&[0, 0, 0], &[3, 3, 6]]);
        assert_eq!(
            lattice_points(&seg),
            vec![vec![0, 0, 0], vec![1, 1, 2], vec![2, 2, 4], vec![3, 3, 6]]
        );
        assert_eq!(interior_lattice_points(&seg).len(), 2);
    }

    #[test]
    fn bracket_is_idempotent_and_contained() {
        let r = |p: i64, q: i64| Rational::new(p, q);
        let p = Polytope::hull(&[
            vec![r(-5, 2), r(-1, 3)],
            vec![r(7, 3), r(-2, 1)],
            vec![r(1, 2), r(11, 4)],
        ])
        .unwrap();
        let b = bracket(&p).unwrap();
        for v in b.vertices() {
            assert!(p.contains(v));
        }
        assert_eq!(bracket(&b).unwrap(), b);
    }
}
