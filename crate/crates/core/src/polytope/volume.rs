//! Normalized volumes relative to the lattice of the affine hull.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{Point, Polytope};
use crate::exact::{gcd_of_maximal_minors, Rational};

/// Normalized volume of the simplex with the given vertices, measured in the
/// lattice `(affine direction space) ∩ Z^D`. Zero for a degenerate simplex.
pub fn simplex_volume(vertices: &[Point]) -> Rational {
    let k = vertices.len().saturating_sub(1);
    if k == 0 {
        return Rational::one();
    }
    let base = &vertices[0];
    let edges: Vec<Vec<Rational>> = vertices[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    let l = edges
        .iter()
        .flatten()
        .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let scaled: Vec<Vec<BigInt>> = edges
        .iter()
        .map(|row| row.iter().map(|x| x.numer() * (&l / x.denom())).collect())
        .collect();
    let g = gcd_of_maximal_minors(&scaled);
    Rational::from_integer(g) / Rational::from_integer(l).pow(k as i32)
}

/// Normalized volume `Vol_k(P)` for `k = dim P`, with respect to the lattice
/// of the affine hull of `P`.
pub fn normalized_volume(p: &Polytope) -> Rational {
    p.face_volume(p.top_face())
}

impl Polytope {
    /// Pulling triangulation of a face: simplices as vertex index lists.
    fn triangulate(
        &self,
        face: usize,
        memo: &mut HashMap<usize, Vec<Vec<usize>>>,
    ) -> Vec<Vec<usize>> {
        if let Some(t) = memo.get(&face) {
            return t.clone();
        }
        let f = &self.faces[face];
        let out = if f.dim == 0 {
            vec![f.vertices.clone()]
        } else {
            let apex = f.vertices[0];
            let mut simplices = Vec::new();
            for &c in &f.children {
                if self.faces[c].vertices.binary_search(&apex).is_ok() {
                    continue;
                }
                for mut s in self.triangulate(c, memo) {
                    s.push(apex);
                    simplices.push(s);
                }
            }
            simplices
        };
        memo.insert(face, out.clone());
        out
    }

    /// `Vol_k(theta)` of a `k`-face, in the lattice of its affine hull.
    pub fn face_volume(&self, face: usize) -> Rational {
        let mut memo = HashMap::new();
        self.triangulate(face, &mut memo)
            .iter()
            .map(|s| {
                let pts: Vec<Point> = s.iter().map(|&i| self.vertices[i].clone()).collect();
                simplex_volume(&pts)
            })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::point_from_ints;

    fn hull(rows: &[&[i64]]) -> Polytope {
        Polytope::hull(&rows.iter().map(|r| point_from_ints(r)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn unit_simplices() {
        for d in 1..=5 {
            let mut rows = vec![vec![0i64; d]];
            for i in 0..d {
                let mut e = vec![0i64; d];
                e[i] = 1;
                rows.push(e);
            }
            let p = Polytope::hull(&rows.iter().map(|r| point_from_ints(r)).collect::<Vec<_>>())
                .unwrap();
            assert_eq!(normalized_volume(&p), Rational::one());
        }
    }

    #[test]
    fn cube_and_scaling() {
        let sq = hull(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]]);
        assert_eq!(normalized_volume(&sq), Rational::from(8));
        let half = Polytope::hull(&[
            vec![Rational::zero(), Rational::zero()],
            vec![Rational::new(1, 2), Rational::zero()],
            vec![Rational::zero(), Rational::new(1, 2)],
        ])
        .unwrap();
        assert_eq!(normalized_volume(&half), Rational::new(1, 4));
    }

    #[test]
    fn relative_lattice_length() {
        // primitive direction (1,1): length 2
        let seg = hull(&[&[0, 0], &[2, 2]]);
        assert_eq!(normalized_volume(&seg), Rational::from(2));
        let tri = hull(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(normalized_volume(&tri), Rational::one());
    }

    #[test]
    fn faces_of_the_cube() {
        let mut corners = Vec::new();
        for a in [-1i64, 1] {
            for b in [-1i64, 1] {
                for c in [-1i64, 1] {
                    corners.push(point_from_ints(&[a, b, c]));
                }
            }
        }
        let cube = Polytope::hull(&corners).unwrap();
        assert_eq!(normalized_volume(&cube), Rational::from(48));
        for (i, _) in cube.faces_of_dim(2) {
            assert_eq!(cube.face_volume(i), Rational::from(8));
        }
        for (i, _) in cube.faces_of_dim(1) {
            assert_eq!(cube.face_volume(i), Rational::from(2));
        }
    }
}
