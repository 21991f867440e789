//! The Laurent polynomial `f = sum_i t^{v_i}` attached to a weight vector.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::polytope::{Point, Polytope};
use crate::wps::{mirror_lattice, WeightVector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: Rational,
    pub exponents: Vec<i64>,
}

/// A Laurent polynomial in `t_1, ..., t_n` with distinct exponents and
/// nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LaurentPolynomial {
    terms: Vec<Term>,
}

impl LaurentPolynomial {
    /// Merges repeated exponents and drops zero coefficients; term order is
    /// kept otherwise.
    pub fn new(terms: Vec<Term>) -> Result<Self> {
        let nvars = terms.first().map_or(0, |t| t.exponents.len());
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            if t.exponents.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    got: t.exponents.len(),
                });
            }
            match merged.iter_mut().find(|m| m.exponents == t.exponents) {
                Some(m) => m.coeff += t.coeff,
                None => merged.push(t),
            }
        }
        merged.retain(|t| !t.coeff.is_zero());
        Ok(LaurentPolynomial { terms: merged })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn num_vars(&self) -> usize {
        self.terms.first().map_or(0, |t| t.exponents.len())
    }

    /// Convex hull of the exponent vectors.
    pub fn newton_polytope(&self) -> Result<Polytope> {
        let pts: Vec<Point> = self
            .terms
            .iter()
            .map(|t| t.exponents.iter().map(|&e| Rational::from(e)).collect())
            .collect();
        Polytope::hull(&pts)
    }
}

fn monomial(exponents: &[i64], positive: bool) -> Vec<String> {
    exponents
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e != 0 && (e > 0) == positive)
        .map(|(i, &e)| {
            let e = e.abs();
            if e == 1 {
                format!("t{}", i + 1)
            } else {
                format!("t{}^{}", i + 1, e)
            }
        })
        .collect()
}

fn render_term(t: &Term) -> String {
    let num = monomial(&t.exponents, true);
    let den = monomial(&t.exponents, false);
    let mut numer = num.join("*");
    let coeff_is_unit = t.coeff == Rational::one() || t.coeff == -Rational::one();
    if !coeff_is_unit {
        let c = t.coeff.abs().to_string();
        numer = if numer.is_empty() {
            c
        } else {
            format!("{c}*{numer}")
        };
    }
    if numer.is_empty() {
        numer = "1".into();
    }
    match den.len() {
        0 => numer,
        1 => format!("{numer}/{}", den[0]),
        _ => format!("{numer}/({})", den.join("*")),
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let body = render_term(t);
            match (i, t.coeff.is_negative()) {
                (0, false) => f.write_str(&body)?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

/// `f = sum_i t^{v_i}` with unit coefficients. Terms with a negative exponent
/// come first, then the rest in generator order; with a unit weight this is
/// `1/(t1^w1 * ... ) + t1 + ... + td`.
pub fn ghv_polynomial(w: &WeightVector) -> Result<LaurentPolynomial> {
    let lattice = mirror_lattice(w)?;
    let mut terms: Vec<Term> = lattice
        .generators()
        .iter()
        .map(|v| Term {
            coeff: Rational::one(),
            exponents: v.clone(),
        })
        .collect();
    terms.sort_by_key(|t| !t.exponents.iter().any(|&e| e < 0));
    LaurentPolynomial::new(terms)
}
