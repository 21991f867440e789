//! Smith normal form with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// `A = u * s * v` with `u`, `v` unimodular and `s` diagonal, `d_1 | d_2 | ...`.
///
/// The inverses of both transforms are carried along so that callers can
/// change coordinates in either direction without a separate inversion.
#[derive(Debug, Clone)]
pub struct SmithNormalForm {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithNormalForm {
    /// Nonzero diagonal entries of `s`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s[(i, i)].clone())
            .filter(|d| !d.is_zero())
            .collect()
    }
}

struct Work {
    s: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Work {
    // Each operation keeps A = u * s * v and u * u_inv = v * v_inv = I.

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.u.swap_cols(a, b);
        self.u_inv.swap_rows(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        self.v.swap_rows(a, b);
        self.v_inv.swap_cols(a, b);
    }

    /// `row[target] += f * row[source]`
    fn add_row(&mut self, target: usize, source: usize, f: &BigInt) {
        self.s.add_row_multiple(target, source, f);
        self.u.add_col_multiple(source, target, &-f);
        self.u_inv.add_row_multiple(target, source, f);
    }

    /// `col[target] += f * col[source]`
    fn add_col(&mut self, target: usize, source: usize, f: &BigInt) {
        self.s.add_col_multiple(target, source, f);
        self.v.add_row_multiple(source, target, &-f);
        self.v_inv.add_col_multiple(target, source, f);
    }

    fn negate_row(&mut self, i: usize) {
        self.s.negate_row(i);
        self.u.negate_col(i);
        self.u_inv.negate_row(i);
    }

    /// Position of the smallest nonzero entry in the trailing block.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.s.rows() {
            for j in t..self.s.cols() {
                let x = &self.s[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.s[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }
}

/// Computes the Smith normal form of a nonzero integer matrix.
///
/// Deterministic: the pivot is always the first entry of least absolute
/// value in row-major order.
pub fn smith_normal_form(a: &IntMatrix) -> Result<SmithNormalForm> {
    if a.rows() == 0 || a.cols() == 0 {
        return Err(Error::EmptyInput);
    }
    if a.is_zero() {
        return Err(Error::Domain("Smith normal form of the zero matrix".into()));
    }
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work {
        s: a.clone(),
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
        v_inv: IntMatrix::identity(n),
    };

    for t in 0..m.min(n) {
        let Some((pi, pj)) = w.min_pivot(t) else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if w.s[(i, t)].is_zero() {
                    continue;
                }
                let q = w.s[(i, t)].div_floor(&w.s[(t, t)]);
                w.add_row(i, t, &-q);
                if !w.s[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if w.s[(t, j)].is_zero() {
                    continue;
                }
                let q = w.s[(t, j)].div_floor(&w.s[(t, t)]);
                w.add_col(j, t, &-q);
                if !w.s[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                let (pi, pj) = smallest_in_cross(&w.s, t);
                w.swap_rows(t, pi);
                w.swap_cols(t, pj);
                continue;
            }
            // Row and column are clear; enforce divisibility of the block.
            let p = w.s[(t, t)].clone();
            let bad = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !w.s[(i, j)].is_multiple_of(&p));
            match bad {
                Some((i, _)) => w.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if w.s[(t, t)].is_negative() {
            w.negate_row(t);
        }
    }

    Ok(SmithNormalForm {
        u: w.u,
        s: w.s,
        v: w.v,
        u_inv: w.u_inv,
        v_inv: w.v_inv,
    })
}

fn smallest_in_cross(s: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut best_abs = s[(t, t)].abs();
    for i in t + 1..s.rows() {
        let x = s[(i, t)].abs();
        if !x.is_zero() && x < best_abs {
            best = (i, t);
            best_abs = x;
        }
    }
    for j in t + 1..s.cols() {
        let x = s[(t, j)].abs();
        if !x.is_zero() && x < best_abs {
            best = (t, j);
            best_abs = x;
        }
    }
    best
}
