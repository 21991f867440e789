//! Weight vectors, subset gcds, degree-`w` monomials and the quotient
//! lattice `N = Z^{d+1} / Z w` with its generators.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{gcd_fold, smith_normal_form, IntMatrix, Rational};
use crate::polytope::{Point, Polytope};

/// Upper bound on the number of monomials [`newton_points`] will enumerate.
pub const NEWTON_POINT_LIMIT: usize = 10_000_000;

/// A weight vector `(w_0, ..., w_d)` with Calabi-Yau degree `w = sum w_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    weights: Vec<u64>,
    degree: u64,
}

impl WeightVector {
    /// Needs at least three weights, all positive.
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.len() < 3 {
            return Err(Error::Parse(format!(
                "need at least 3 weights, got {}",
                weights.len()
            )));
        }
        if weights.contains(&0) {
            return Err(Error::Parse("weights must be positive".into()));
        }
        if weights.len() > 31 {
            return Err(Error::Parse("at most 31 weights are supported".into()));
        }
        let degree = weights
            .iter()
            .try_fold(0u64, |s, &x| s.checked_add(x))
            .ok_or_else(|| Error::Parse("degree overflows".into()))?;
        Ok(WeightVector { weights, degree })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// `d`, one less than the number of weights.
    pub fn dim(&self) -> usize {
        self.weights.len() - 1
    }

    /// Number of coordinates, `d + 1`.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `q_i = w_i / w`.
    pub fn charges(&self) -> Vec<Rational> {
        self.weights
            .iter()
            .map(|&x| Rational::new(x, self.degree))
            .collect()
    }

    pub fn is_well_formed(&self) -> bool {
        weight_flags(self).well_formed
    }

    pub fn is_gorenstein(&self) -> bool {
        weight_flags(self).gorenstein
    }

    /// The index set `{0, ..., d}`.
    pub fn full_mask(&self) -> SubsetMask {
        SubsetMask((1u32 << self.len()) - 1)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for WeightVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let weights = s
            .split(',')
            .map(|part| {
                let t = part.trim();
                t.parse::<u64>()
                    .map_err(|_| Error::Parse(format!("{t:?} is not a positive integer")))
            })
            .collect::<Result<Vec<u64>>>()?;
        WeightVector::new(weights)
    }
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.weights.serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let weights = Vec::<u64>::deserialize(d)?;
        WeightVector::new(weights).map_err(serde::de::Error::custom)
    }
}

/// A subset `J` of `{0, ..., d}` as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub fn from_indices(indices: &[usize]) -> Self {
        SubsetMask(indices.iter().fold(0, |m, &i| m | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `J̄` inside `{0, ..., n-1}`.
    pub fn complement(self, n: usize) -> Self {
        SubsetMask(!self.0 & ((1u32 << n) - 1))
    }

    pub fn members(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |&i| bits >> i & 1 == 1)
    }

    /// All subsets of `{0, ..., n-1}`.
    pub fn all(n: usize) -> impl Iterator<Item = SubsetMask> {
        (0..1u32 << n).map(SubsetMask)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightFlags {
    pub well_formed: bool,
    pub gorenstein: bool,
}

pub fn weight_flags(w: &WeightVector) -> WeightFlags {
    let ws = w.weights();
    let well_formed = (0..ws.len()).all(|skip| {
        let rest: Vec<u64> = ws
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &x)| x)
            .collect();
        gcd_fold(0, &rest) == 1
    });
    let gorenstein = ws.iter().all(|&x| w.degree().is_multiple_of(x));
    WeightFlags {
        well_formed,
        gorenstein,
    }
}

/// `n_J = gcd(w, w_j | j in J)`.
pub fn subset_gcd(w: &WeightVector, j: SubsetMask) -> u64 {
    let extras: Vec<u64> = j.members().map(|i| w.weights()[i]).collect();
    gcd_fold(w.degree(), &extras)
}

/// Exponent vectors of all monomials of degree `w`, sorted lexicographically.
pub fn newton_points(w: &WeightVector) -> Result<Vec<Vec<u64>>> {
    let ws = w.weights();
    let mut order: Vec<usize> = (0..ws.len()).collect();
    order.sort_by(|&a, &b| ws[b].cmp(&ws[a]).then(a.cmp(&b)));
    let mut out = Vec::new();
    let mut u = vec![0u64; ws.len()];
    knapsack(ws, &order, 0, w.degree(), &mut u, &mut out)?;
    out.sort_unstable();
    Ok(out)
}

fn knapsack(
    ws: &[u64],
    order: &[usize],
    k: usize,
    rest: u64,
    u: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) -> Result<()> {
    let i = order[k];
    if k + 1 == order.len() {
        if rest.is_multiple_of(ws[i]) {
            if out.len() >= NEWTON_POINT_LIMIT {
                return Err(Error::TooManyPoints(NEWTON_POINT_LIMIT));
            }
            u[i] = rest / ws[i];
            out.push(u.clone());
            u[i] = 0;
        }
        return Ok(());
    }
    for a in 0..=rest / ws[i] {
        u[i] = a;
        knapsack(ws, order, k + 1, rest - a * ws[i], u, out)?;
    }
    u[i] = 0;
    Ok(())
}

/// The lattice `N = Z^{d+1} / Z w` in a fixed basis, with the images `v_i`
/// of the standard basis vectors and the dual coordinates on `M = w^⊥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirrorLattice {
    weights: WeightVector,
    generators: Vec<Vec<i64>>,
    /// `d x (d+1)` matrix sending `m in w^⊥` to coordinates `mu` with
    /// `<mu, v_i> = m_i`.
    m_projection: Vec<Vec<i64>>,
}

fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("lattice coordinates exceed 64 bits")
}

impl MirrorLattice {
    /// Builds the lattice from a Smith normal form of the relation row.
    /// When some weight equals 1 the basis is changed so that `v_i = e_i`
    /// for the other indices and the unit-weight generator is `-(w_i)`.
    pub fn new(w: &WeightVector) -> Result<MirrorLattice> {
        if !w.is_well_formed() {
            return Err(Error::NotWellFormed(w.to_string()));
        }
        let n = w.len();
        let d = w.dim();
        if let Some(j) = w.weights().iter().position(|&x| x == 1) {
            let mut generators = Vec::with_capacity(n);
            let mut m_projection = Vec::with_capacity(d);
            let mut col = 0;
            for i in 0..n {
                if i == j {
                    generators.push(
                        w.weights()
                            .iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, &x)| -(x as i64))
                            .collect(),
                    );
                } else {
                    let mut e = vec![0i64; d];
                    e[col] = 1;
                    generators.push(e);
                    let mut row = vec![0i64; n];
                    row[i] = 1;
                    m_projection.push(row);
                    col += 1;
                }
            }
            return Ok(MirrorLattice {
                weights: w.clone(),
                generators,
                m_projection,
            });
        }

        let row: Vec<Vec<BigInt>> = vec![w.weights().iter().map(|&x| BigInt::from(x)).collect()];
        let a = IntMatrix::from_rows(&row)?;
        let snf = smith_normal_form(&a)?;
        let generators = (0..n)
            .map(|i| (1..n).map(|c| to_i64(&snf.v_inv[(i, c)])).collect())
            .collect();
        let m_projection = (1..n)
            .map(|r| (0..n).map(|c| to_i64(&snf.v[(r, c)])).collect())
            .collect();
        Ok(MirrorLattice {
            weights: w.clone(),
            generators,
            m_projection,
        })
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    /// `d`.
    pub fn rank(&self) -> usize {
        self.weights.dim()
    }

    /// `v_0, ..., v_d`.
    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    /// Coordinates in `M` of a rational vector `m` with `sum w_i m_i = 0`.
    pub fn project(&self, m: &[Rational]) -> Point {
        self.m_projection
            .iter()
            .map(|row| {
                row.iter()
                    .zip(m)
                    .filter(|(a, _)| **a != 0)
                    .map(|(&a, x)| Rational::from(a) * x)
                    .sum()
            })
            .collect()
    }

    /// `<mu, v_i>`.
    pub fn pairing(&self, mu: &[Rational], i: usize) -> Rational {
        self.generators[i]
            .iter()
            .zip(mu)
            .filter(|(a, _)| **a != 0)
            .map(|(&a, x)| Rational::from(a) * x)
            .sum()
    }

    /// `Δ*_w = conv(v_0, ..., v_d)`.
    pub fn mirror_simplex(&self) -> Result<Polytope> {
        let pts: Vec<Point> = self
            .generators
            .iter()
            .map(|v| v.iter().map(|&x| Rational::from(x)).collect())
            .collect();
        Polytope::hull(&pts)
    }

    /// Vertex of `Δ_w` opposite to the facet `<., v_i> = -1`: the image of
    /// `(w / w_i) e_i - (1, ..., 1)`.
    pub fn dual_simplex_vertex(&self, i: usize) -> Point {
        let w = &self.weights;
        let m: Vec<Rational> = (0..w.len())
            .map(|k| {
                let base = if k == i {
                    Rational::new(w.degree(), w.weights()[i])
                } else {
                    Rational::zero()
                };
                base - Rational::one()
            })
            .collect();
        self.project(&m)
    }

    /// Image of `u - (1, ..., 1)` for an exponent vector `u` of degree `w`.
    pub fn monomial_point(&self, u: &[u64]) -> Point {
        let m: Vec<Rational> = u
            .iter()
            .map(|&x| Rational::from(x) - Rational::one())
            .collect();
        self.project(&m)
    }

    /// `Δ'(W)`: the hull of all degree-`w` monomials, equal to the lattice
    /// hull of `Δ_w`.
    pub fn newton_polytope(&self) -> Result<Polytope> {
        let pts: Vec<Point> = newton_points(&self.weights)?
            .iter()
            .map(|u| self.monomial_point(u))
            .collect();
        Polytope::hull(&pts)
    }
}

/// The rational simplex `Δ_w = {x : <x, v_i> >= -1}`.
pub fn dual_simplex(w: &WeightVector, lattice: &MirrorLattice) -> Result<Polytope> {
    if lattice.weights() != w {
        return Err(Error::Domain(format!(
            "lattice built for {} not {}",
            lattice.weights(),
            w
        )));
    }
    let pts: Vec<Point> = (0..w.len())
        .map(|i| lattice.dual_simplex_vertex(i))
        .collect();
    Polytope::hull(&pts)
}

pub fn mirror_lattice(w: &WeightVector) -> Result<MirrorLattice> {
    MirrorLattice::new(w)
}
