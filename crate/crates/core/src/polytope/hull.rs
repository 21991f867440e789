//! Beneath-beyond convex hull over homogeneous integer coordinates.
//!
//! A point `x` in `Q^k` is carried as `(D x, D)` with `D > 0`, and a
//! halfspace as an integer vector `(a, b)` meaning `a . x + b >= 0`. All
//! tests are sign tests on integer dot products, so the hull is exact.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::bitset::BitSet;
use crate::exact::{kernel_vector, reduce_row};

pub(crate) struct RawHull {
    /// Indices of the input points that are vertices, ascending.
    pub vertices: Vec<usize>,
    /// Facet halfspaces with the input indices of their vertices.
    pub facets: Vec<(Vec<BigInt>, Vec<usize>)>,
}

struct Facet {
    plane: Vec<BigInt>,
    on: BitSet,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Hull of distinct homogeneous points spanning `Q^k` (`k + 1` coordinates each).
pub(crate) fn full_dimensional_hull(points: &[Vec<BigInt>]) -> RawHull {
    let n = points.len();
    let k = points[0].len() - 1;
    assert!(k >= 1 && n > k, "hull needs at least k + 1 points");

    let order = insertion_order(points);
    let simplex = initial_simplex(points, &order, k);
    let interior = centroid(points, &simplex);

    let mut facets: Vec<Facet> = Vec::new();
    let mut in_hull = BitSet::new(n);
    for &s in &simplex {
        in_hull.insert(s);
    }
    for omit in 0..simplex.len() {
        let support: Vec<usize> = simplex
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != omit)
            .map(|(_, &s)| s)
            .collect();
        let plane = plane_through(points, &support, &interior);
        let mut on = BitSet::new(n);
        for &s in &support {
            on.insert(s);
        }
        facets.push(Facet { plane, on });
    }
    let mut current: Vec<usize> = simplex.clone();

    for &p in &order {
        if in_hull.contains(p) {
            continue;
        }
        let signs: Vec<i8> = facets
            .iter()
            .map(|f| {
                let v = dot(&f.plane, &points[p]);
                if v.is_zero() {
                    0
                } else if v.is_positive() {
                    1
                } else {
                    -1
                }
            })
            .collect();
        if signs.iter().all(|&s| s >= 0) {
            continue;
        }

        let mut new_planes: HashMap<Vec<BigInt>, BitSet> = HashMap::new();
        for (fi, f) in facets.iter().enumerate() {
            if signs[fi] >= 0 {
                continue;
            }
            for (gi, g) in facets.iter().enumerate() {
                if signs[gi] <= 0 {
                    // coplanar neighbours absorb p; visible ones are removed
                    continue;
                }
                if f.on.intersection_len(&g.on) + 1 < k {
                    continue;
                }
                let ridge = f.on.intersection(&g.on);
                let is_ridge = facets
                    .iter()
                    .enumerate()
                    .all(|(hi, h)| hi == fi || hi == gi || !ridge.is_subset(&h.on));
                if !is_ridge {
                    continue;
                }
                let mut support: Vec<usize> = ridge.iter().collect();
                support.push(p);
                let plane = plane_through(points, &support, &interior);
                new_planes.entry(plane).or_insert_with(|| BitSet::new(n));
            }
        }

        in_hull.insert(p);
        current.push(p);
        let mut kept: Vec<Facet> = Vec::with_capacity(facets.len());
        for (fi, mut f) in facets.into_iter().enumerate() {
            match signs[fi] {
                -1 => {}
                0 => {
                    f.on.insert(p);
                    kept.push(f);
                }
                _ => kept.push(f),
            }
        }
        for (plane, mut on) in new_planes {
            for &q in &current {
                if dot(&plane, &points[q]).is_zero() {
                    on.insert(q);
                }
            }
            kept.push(Facet { plane, on });
        }
        facets = kept;
        current.retain(|&q| facets.iter().any(|f| f.on.contains(q)));
    }

    // Boundary points that are not vertices: the facets through a true
    // vertex meet only in that vertex.
    let vertices: Vec<usize> = {
        let mut vs: Vec<usize> = current
            .iter()
            .copied()
            .filter(|&q| {
                let mut meet: Option<BitSet> = None;
                for f in facets.iter().filter(|f| f.on.contains(q)) {
                    meet = Some(match meet {
                        None => f.on.clone(),
                        Some(m) => m.intersection(&f.on),
                    });
                }
                meet.is_some_and(|m| m.len() == 1)
            })
            .collect();
        vs.sort_unstable();
        vs
    };
    let mut is_vertex = BitSet::new(n);
    for &v in &vertices {
        is_vertex.insert(v);
    }
    let facets = facets
        .into_iter()
        .map(|f| {
            (
                f.plane,
                f.on.iter().filter(|&q| is_vertex.contains(q)).collect(),
            )
        })
        .collect();
    RawHull { vertices, facets }
}

/// Far-from-centre points first: they are likely vertices, and once they are
/// in, most of the remaining points fall inside after a single sign pass.
fn insertion_order(points: &[Vec<BigInt>]) -> Vec<usize> {
    const SCALE: i64 = 1 << 16;
    let k = points[0].len() - 1;
    let approx: Vec<Vec<i128>> = points
        .iter()
        .map(|p| {
            (0..k)
                .map(|j| {
                    let q = (&p[j] * SCALE) / &p[k];
                    q.to_i128().unwrap_or(if q.is_negative() {
                        i128::MIN / 4
                    } else {
                        i128::MAX / 4
                    })
                })
                .collect()
        })
        .collect();
    let n = points.len() as i128;
    let mean: Vec<i128> = (0..k)
        .map(|j| approx.iter().map(|a| a[j]).sum::<i128>() / n)
        .collect();
    let key = |a: &[i128]| -> i128 {
        a.iter()
            .zip(&mean)
            .map(|(x, m)| (x - m).saturating_mul(x - m))
            .fold(0i128, |s, t| s.saturating_add(t))
    };
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by_cached_key(|&i| (std::cmp::Reverse(key(&approx[i])), i));
    order
}

/// Greedily picks `k + 1` affinely independent points.
fn initial_simplex(points: &[Vec<BigInt>], order: &[usize], k: usize) -> Vec<usize> {
    let mut chosen = Vec::with_capacity(k + 1);
    let mut echelon: Vec<(usize, Vec<BigInt>)> = Vec::new();
    for &i in order {
        let p = &points[i];
        let mut v = p.clone();
        for (col, row) in &echelon {
            if v[*col].is_zero() {
                continue;
            }
            let (a, b) = (row[*col].clone(), v[*col].clone());
            for j in 0..v.len() {
                v[j] = &v[j] * &a - &row[j] * &b;
            }
            reduce_row(&mut v);
        }
        if let Some(col) = v.iter().position(|x| !x.is_zero()) {
            echelon.push((col, v));
            chosen.push(i);
            if chosen.len() == k + 1 {
                return chosen;
            }
        }
    }
    panic!("points do not span the ambient space");
}

fn centroid(points: &[Vec<BigInt>], idx: &[usize]) -> Vec<BigInt> {
    // sum of x_i / D_i, homogenised over the product of denominators
    let dim = points[0].len();
    let mut acc = vec![BigInt::zero(); dim - 1];
    let mut den = BigInt::from(1);
    for &i in idx {
        let p = &points[i];
        let d = &p[dim - 1];
        for j in 0..dim - 1 {
            acc[j] = &acc[j] * d + &p[j] * &den;
        }
        den *= d;
    }
    acc.push(den * BigInt::from(idx.len()));
    reduce_row(&mut acc);
    acc
}

fn plane_through(points: &[Vec<BigInt>], support: &[usize], interior: &[BigInt]) -> Vec<BigInt> {
    let rows: Vec<Vec<BigInt>> = support.iter().map(|&i| points[i].clone()).collect();
    let mut plane =
        kernel_vector(&rows, points[0].len()).expect("facet support must span a hyperplane");
    let side = dot(&plane, interior);
    debug_assert!(!side.is_zero(), "interior point lies on a facet plane");
    if side.is_negative() {
        for x in plane.iter_mut() {
            *x = -&*x;
        }
    }
    plane
}
