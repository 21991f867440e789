//! Exact rational polytopes: hulls, duals, face lattices, lattice points,
//! normalized volumes and the Fano classifications.

mod bitset;
mod fano;
mod hull;
mod lattice;
mod volume;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{reduce_row, Rational};

pub use fano::{fano_classification, FanoClass};
pub use lattice::{bracket, lattice_points};
pub use volume::{normalized_volume, simplex_volume};

/// A point with rational coordinates.
pub type Point = Vec<Rational>;

/// Converts an integer point.
pub fn point_from_ints<T: Copy + Into<BigInt>>(coords: &[T]) -> Point {
    coords
        .iter()
        .map(|&c| Rational::from_integer(c.into()))
        .collect()
}

/// A facet `{x : <normal, x> >= -offset}` with a primitive integer normal.
///
/// For lower-dimensional polytopes the inequality is relative to the affine
/// hull: it only involves the hull's coordinate chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub offset: Rational,
    /// Indices into [`Polytope::vertices`], ascending.
    pub vertices: Vec<usize>,
}

impl Facet {
    /// `<normal, x> + offset`; nonnegative exactly on the facet's side.
    pub fn eval(&self, x: &[Rational]) -> Rational {
        let mut acc = self.offset.clone();
        for (a, b) in self.normal.iter().zip(x) {
            if !a.is_zero() {
                acc += Rational::from_integer(a.clone()) * b;
            }
        }
        acc
    }
}

/// A nonempty face, identified by its vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub dim: usize,
    /// Indices into [`Polytope::vertices`], ascending.
    pub vertices: Vec<usize>,
    /// Facets containing this face (empty for the polytope itself).
    pub facets: Vec<usize>,
    /// Faces of dimension `dim - 1` contained in this one.
    pub children: Vec<usize>,
}

/// Affine hull chart: coordinates `pivots` give a bijection from the hull to
/// `Q^dim`, and `equations` (`<n, x> = c`) cut it out.
#[derive(Clone, Debug, PartialEq, Eq)]
struct AffineHull {
    pivots: Vec<usize>,
    equations: Vec<(Vec<BigInt>, Rational)>,
}

/// A bounded rational polytope with V- and H-representation and face lattice.
#[derive(Clone)]
pub struct Polytope {
    ambient_dim: usize,
    dim: usize,
    vertices: Vec<Point>,
    facets: Vec<Facet>,
    affine: AffineHull,
    faces: Vec<Face>,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

impl fmt::Debug for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Polytope")
            .field("ambient_dim", &self.ambient_dim)
            .field("dim", &self.dim)
            .field("vertices", &self.vertices)
            .field("facets", &self.facets.len())
            .finish()
    }
}

fn homogenize(p: &[Rational]) -> Vec<BigInt> {
    let den = p.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let mut h: Vec<BigInt> = p.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    h.push(den);
    h
}

/// Affine chart of a point set: pivot coordinates of the difference vectors
/// and the equations of the affine hull.
fn affine_chart(points: &[Point]) -> AffineHull {
    let d = points[0].len();
    let base = &points[0];
    let mut echelon: Vec<(usize, Vec<BigInt>)> = Vec::new();
    for p in &points[1..] {
        let diff: Vec<Rational> = p.iter().zip(base).map(|(a, b)| a - b).collect();
        let mut v = homogenize(&diff);
        v.pop();
        for (col, row) in &echelon {
            if v[*col].is_zero() {
                continue;
            }
            let (a, b) = (row[*col].clone(), v[*col].clone());
            for j in 0..d {
                v[j] = &v[j] * &a - &row[j] * &b;
            }
            reduce_row(&mut v);
        }
        if let Some(col) = v.iter().position(|x| !x.is_zero()) {
            echelon.push((col, v));
            if echelon.len() == d {
                break;
            }
        }
    }
    let mut pivots: Vec<usize> = echelon.iter().map(|(c, _)| *c).collect();
    pivots.sort_unstable();
    let rows: Vec<Vec<BigInt>> = echelon.into_iter().map(|(_, r)| r).collect();
    let equations = crate::exact::nullspace_basis(&rows, d)
        .into_iter()
        .map(|n| {
            let c: Rational = n
                .iter()
                .zip(base)
                .map(|(a, b)| Rational::from_integer(a.clone()) * b)
                .sum();
            (n, c)
        })
        .collect();
    AffineHull { pivots, equations }
}

impl Polytope {
    /// Convex hull of a nonempty point set, with its full face lattice.
    ///
    /// Lower-dimensional inputs give a lower-dimensional polytope (see
    /// [`Polytope::dim`]).
    pub fn hull(points: &[Point]) -> Result<Polytope> {
        let first = points.first().ok_or(Error::EmptyInput)?;
        let ambient_dim = first.len();
        if let Some(bad) = points.iter().find(|p| p.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                got: bad.len(),
            });
        }
        let distinct: Vec<Point> = points
            .iter()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let affine = affine_chart(&distinct);
        let dim = affine.pivots.len();

        let (vertices, facets) = if dim == 0 {
            (vec![distinct[0].clone()], Vec::new())
        } else {
            let projected: Vec<Vec<BigInt>> = distinct
                .iter()
                .map(|p| {
                    let chart: Vec<Rational> =
                        affine.pivots.iter().map(|&c| p[c].clone()).collect();
                    homogenize(&chart)
                })
                .collect();
            let raw = hull::full_dimensional_hull(&projected);
            let position: HashMap<usize, usize> = raw
                .vertices
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, i))
                .collect();
            let vertices: Vec<Point> = raw.vertices.iter().map(|&v| distinct[v].clone()).collect();
            let facets = raw
                .facets
                .into_iter()
                .map(|(plane, on)| {
                    let (normal_chart, b) = plane.split_at(dim);
                    let g = normal_chart.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
                    let mut normal = vec![BigInt::zero(); ambient_dim];
                    for (&c, a) in affine.pivots.iter().zip(normal_chart) {
                        normal[c] = a / &g;
                    }
                    let offset = Rational::new(b[0].clone(), g);
                    let mut vs: Vec<usize> = on.iter().map(|q| position[q]).collect();
                    vs.sort_unstable();
                    Facet {
                        normal,
                        offset,
                        vertices: vs,
                    }
                })
                .collect();
            (vertices, facets)
        };
        Ok(Self::assemble(ambient_dim, dim, vertices, facets, affine))
    }

    fn assemble(
        ambient_dim: usize,
        dim: usize,
        vertices: Vec<Point>,
        mut facets: Vec<Facet>,
        affine: AffineHull,
    ) -> Polytope {
        // canonical order: vertices lexicographic, facets by vertex sets
        let mut order: Vec<usize> = (0..vertices.len()).collect();
        order.sort_by(|&a, &b| vertices[a].cmp(&vertices[b]));
        let mut rank = vec![0; vertices.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let vertices: Vec<Point> = order.iter().map(|&i| vertices[i].clone()).collect();
        for f in &mut facets {
            for v in f.vertices.iter_mut() {
                *v = rank[*v];
            }
            f.vertices.sort_unstable();
        }
        facets.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        let faces = face_lattice(dim, vertices.len(), &facets);
        Polytope {
            ambient_dim,
            dim,
            vertices,
            facets,
            affine,
            faces,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Affine dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient_dim
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// All nonempty faces; the last entry is the polytope itself.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn faces_of_dim(&self, k: usize) -> impl Iterator<Item = (usize, &Face)> {
        self.faces
            .iter()
            .enumerate()
            .filter(move |(_, f)| f.dim == k)
    }

    /// Index of the face equal to the whole polytope.
    pub fn top_face(&self) -> usize {
        self.faces.len() - 1
    }

    /// Number of faces per dimension, vertices first.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..self.dim)
            .map(|k| self.faces.iter().filter(|f| f.dim == k).count())
            .collect()
    }

    pub fn is_lattice_polytope(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| v.iter().all(Rational::is_integer))
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.on_affine_hull(x) && self.facets.iter().all(|f| !f.eval(x).is_negative())
    }

    /// Strictly inside the relative interior.
    pub fn contains_in_relative_interior(&self, x: &[Rational]) -> bool {
        self.on_affine_hull(x) && self.facets.iter().all(|f| f.eval(x).is_positive())
    }

    fn on_affine_hull(&self, x: &[Rational]) -> bool {
        self.affine.equations.iter().all(|(n, c)| {
            let lhs: Rational = n
                .iter()
                .zip(x)
                .map(|(a, b)| Rational::from_integer(a.clone()) * b)
                .sum();
            &lhs == c
        })
    }

    pub fn origin_in_interior(&self) -> bool {
        self.is_full_dimensional() && self.facets.iter().all(|f| f.offset.is_positive())
    }

    /// The vertex of the dual polytope attached to a facet: `normal / offset`.
    pub fn dual_vertex(&self, facet: usize) -> Point {
        let f = &self.facets[facet];
        f.normal
            .iter()
            .map(|a| Rational::from_integer(a.clone()) / f.offset.clone())
            .collect()
    }

    /// `{y : <x, y> >= -1 for all x in P}`.
    pub fn dual(&self) -> Result<Polytope> {
        if !self.origin_in_interior() {
            return Err(Error::OriginNotInterior);
        }
        let pts: Vec<Point> = (0..self.facets.len())
            .map(|i| self.dual_vertex(i))
            .collect();
        Polytope::hull(&pts)
    }

    /// Vertices of the dual face `theta*` of a face `theta`.
    pub fn dual_face_vertices(&self, face: usize) -> Vec<Point> {
        self.faces[face]
            .facets
            .iter()
            .map(|&f| self.dual_vertex(f))
            .collect()
    }

    /// `sigma_theta ∩ P*`: the pyramid with apex 0 over the dual face.
    ///
    /// For the polytope itself this is the single point `{0}`.
    pub fn normal_cone_section(&self, face: usize) -> Result<Polytope> {
        if !self.origin_in_interior() {
            return Err(Error::OriginNotInterior);
        }
        let mut pts = self.dual_face_vertices(face);
        pts.push(vec![Rational::zero(); self.ambient_dim]);
        Polytope::hull(&pts)
    }

    /// Points of a face.
    pub fn face_points(&self, face: usize) -> Vec<Point> {
        self.faces[face]
            .vertices
            .iter()
            .map(|&v| self.vertices[v].clone())
            .collect()
    }

    /// Integral distance of a facet from the origin (the offset, for a
    /// primitive normal).
    pub fn facet_distance(&self, facet: usize) -> Rational {
        self.facets[facet].offset.clone()
    }

    /// One vertex per line, coordinates as space-separated rationals.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            let row: Vec<String> = v.iter().map(ToString::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Whether `x` lies strictly inside `conv(points)`, which must span `Z^k`
/// for a positive answer. Skips the face lattice.
pub(crate) fn strictly_inside(points: &[Vec<i64>], x: &[i64]) -> bool {
    let k = x.len();
    let mut distinct: Vec<Vec<i64>> = points.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() <= k {
        return false;
    }
    let homog: Vec<Vec<BigInt>> = distinct
        .iter()
        .map(|p| {
            p.iter()
                .map(|&c| BigInt::from(c))
                .chain(std::iter::once(BigInt::one()))
                .collect()
        })
        .collect();
    if crate::exact::rank(&homog) != k + 1 {
        return false;
    }
    let target: Vec<BigInt> = x
        .iter()
        .map(|&c| BigInt::from(c))
        .chain(std::iter::once(BigInt::one()))
        .collect();
    let raw = hull::full_dimensional_hull(&homog);
    raw.facets.iter().all(|(plane, _)| {
        let v: BigInt = plane.iter().zip(&target).map(|(a, b)| a * b).sum();
        v > BigInt::zero()
    })
}

/// Faces from vertex-facet incidences: the facets of a face are the
/// inclusion-maximal proper nonempty intersections with facets of the
/// polytope.
fn face_lattice(dim: usize, n_vertices: usize, facets: &[Facet]) -> Vec<Face> {
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut faces: Vec<Face> = Vec::new();
    let top: Vec<usize> = (0..n_vertices).collect();

    if dim == 0 {
        return vec![Face {
            dim: 0,
            vertices: top,
            facets: vec![],
            children: vec![],
        }];
    }

    let containing = |vs: &[usize]| -> Vec<usize> {
        facets
            .iter()
            .enumerate()
            .filter(|(_, f)| vs.iter().all(|v| f.vertices.binary_search(v).is_ok()))
            .map(|(i, _)| i)
            .collect()
    };

    // layer by layer, top down
    let mut layer: Vec<usize> = Vec::new();
    for f in facets {
        let id = faces.len();
        index.insert(f.vertices.clone(), id);
        faces.push(Face {
            dim: dim - 1,
            vertices: f.vertices.clone(),
            facets: containing(&f.vertices),
            children: vec![],
        });
        layer.push(id);
    }
    let mut k = dim - 1;
    while k > 0 {
        let mut next: Vec<usize> = Vec::new();
        for &id in &layer {
            let verts = faces[id].vertices.clone();
            let mut cands: Vec<Vec<usize>> = Vec::new();
            for f in facets {
                let meet: Vec<usize> = verts
                    .iter()
                    .copied()
                    .filter(|v| f.vertices.binary_search(v).is_ok())
                    .collect();
                if !meet.is_empty() && meet.len() < verts.len() && !cands.contains(&meet) {
                    cands.push(meet);
                }
            }
            let maximal: Vec<Vec<usize>> = cands
                .iter()
                .filter(|c| {
                    !cands
                        .iter()
                        .any(|o| o.len() > c.len() && c.iter().all(|v| o.contains(v)))
                })
                .cloned()
                .collect();
            let mut children = Vec::with_capacity(maximal.len());
            for m in maximal {
                let child = match index.get(&m) {
                    Some(&c) => c,
                    None => {
                        let c = faces.len();
                        index.insert(m.clone(), c);
                        let fs = containing(&m);
                        faces.push(Face {
                            dim: k - 1,
                            vertices: m,
                            facets: fs,
                            children: vec![],
                        });
                        next.push(c);
                        c
                    }
                };
                children.push(child);
            }
            children.sort_unstable();
            faces[id].children = children;
        }
        layer = next;
        k -= 1;
    }
    let facet_ids: Vec<usize> = (0..facets.len()).collect();
    faces.push(Face {
        dim,
        vertices: top,
        facets: vec![],
        children: facet_ids,
    });
    faces
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn pts(rows: &[&[i64]]) -> Vec<Point> {
        rows.iter().map(|r| point_from_ints(r)).collect()
    }

    #[test]
    fn square_with_center() {
        let p = Polytope::hull(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[0, 0]])).unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.facets().len(), 4);
        let q = Polytope::hull(&pts(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2], &[1, 1]])).unwrap();
        assert_eq!(q.vertices().len(), 4);
        assert_eq!(q.f_vector(), vec![4, 4]);
    }

    #[test]
    fn collinear_boundary_points_dropped() {
        let p = Polytope::hull(&pts(&[
            &[0, 0],
            &[1, 0],
            &[2, 0],
            &[0, 1],
            &[1, 1],
            &[2, 1],
        ]))
        .unwrap();
        assert_eq!(
            p.vertices(),
            pts(&[&[0, 0], &[0, 1], &[2, 0], &[2, 1]]).as_slice()
        );
    }

    #[test]
    fn four_simplex_f_vector() {
        let p = Polytope::hull(&pts(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[-1, -1, -1, -1],
        ]))
        .unwrap();
        assert_eq!(p.f_vector(), vec![5, 10, 10, 5]);
        assert!(p.origin_in_interior());
    }

    #[test]
    fn cross_polytope_and_cube() {
        let mut rows = Vec::new();
        for i in 0..3 {
            for s in [-1i64, 1] {
                let mut v = vec![0i64; 3];
                v[i] = s;
                rows.push(v);
            }
        }
        let octa =
            Polytope::hull(&rows.iter().map(|r| point_from_ints(r)).collect::<Vec<_>>()).unwrap();
        assert_eq!(octa.f_vector(), vec![6, 12, 8]);
        let cube = octa.dual().unwrap();
        let mut corners = Vec::new();
        for a in [-1i64, 1] {
            for b in [-1i64, 1] {
                for c in [-1i64, 1] {
                    corners.push(point_from_ints(&[a, b, c]));
                }
            }
        }
        assert_eq!(cube, Polytope::hull(&corners).unwrap());
        assert_eq!(cube.f_vector(), vec![8, 12, 6]);
        assert_eq!(cube.dual().unwrap(), octa);
    }

    #[test]
    fn facets_are_supported() {
        let p = Polytope::hull(&pts(&[
            &[3, 0, 0],
            &[0, 2, 0],
            &[0, 0, 5],
            &[-1, -1, -1],
            &[1, 1, 1],
        ]))
        .unwrap();
        for f in p.facets() {
            assert!(f.vertices.len() >= 3);
            for (i, v) in p.vertices().iter().enumerate() {
                let e = f.eval(v);
                assert!(!e.is_negative());
                assert_eq!(e.is_zero(), f.vertices.contains(&i));
            }
            let g = f.normal.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            assert!(g.is_one());
        }
    }

    #[test]
    fn lower_dimensional_hull() {
        let seg = Polytope::hull(&pts(&[&[0, 0, 0], &[1, 1, 1], &[2, 2, 2]])).unwrap();
        assert_eq!(seg.dim(), 1);
        assert_eq!(seg.vertices().len(), 2);
        assert!(seg.contains(&point_from_ints(&[1, 1, 1])));
        assert!(!seg.contains(&point_from_ints(&[1, 1, 0])));
        let tri = Polytope::hull(&pts(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        assert_eq!(tri.dim(), 2);
        assert_eq!(tri.f_vector(), vec![3, 3]);
        let single = Polytope::hull(&pts(&[&[4, 5]])).unwrap();
        assert_eq!(single.dim(), 0);
        assert_eq!(single.faces().len(), 1);
    }

    #[test]
    fn empty_input_rejected() {
        assert_eq!(Polytope::hull(&[]).unwrap_err(), Error::EmptyInput);
    }

    #[test]
    fn dual_requires_interior_origin() {
        let p = Polytope::hull(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        assert_eq!(p.dual().unwrap_err(), Error::OriginNotInterior);
    }
}
