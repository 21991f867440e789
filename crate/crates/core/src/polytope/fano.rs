use serde::{Deserialize, Serialize};

use super::lattice::{bracket, interior_lattice_points};
use super::Polytope;
use crate::error::{Error, Result};
use crate::exact::Rational;

/// The four Fano conditions on a lattice polytope with 0 inside.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanoClass {
    pub canonical: bool,
    pub reflexive: bool,
    pub pseudoreflexive: bool,
    pub almost_pseudoreflexive: bool,
}

/// `Some(true)` if 0 is the only interior lattice point, `Some(false)` if
/// there are none or several, and `None` for a single point elsewhere.
fn canonical_at_origin(p: &Polytope) -> Option<bool> {
    if !p.is_full_dimensional() {
        return Some(false);
    }
    let inner = interior_lattice_points(p);
    match inner.as_slice() {
        [x] if x.iter().all(|&c| c == 0) => Some(true),
        [_] => None,
        _ => Some(false),
    }
}

/// Classifies a full-dimensional lattice polytope.
///
/// Errors when the unique interior lattice point is not the origin.
pub fn fano_classification(p: &Polytope) -> Result<FanoClass> {
    if !p.is_full_dimensional() {
        return Err(Error::DimensionMismatch {
            expected: p.ambient_dim(),
            got: p.dim(),
        });
    }
    if !p.is_lattice_polytope() {
        return Err(Error::Domain(
            "fano classification needs a lattice polytope".into(),
        ));
    }
    let canonical = canonical_at_origin(p).ok_or(Error::InteriorPointNotAtOrigin)?;
    if !canonical {
        return Ok(FanoClass::default());
    }
    let reflexive = p.facets().iter().all(|f| f.offset == Rational::one());
    let hull_of_dual = bracket(&p.dual()?)?;
    let almost = canonical_at_origin(&hull_of_dual) == Some(true);
    let pseudo = almost && bracket(&hull_of_dual.dual()?)? == *p;
    Ok(FanoClass {
        canonical,
        reflexive,
        pseudoreflexive: pseudo,
        almost_pseudoreflexive: almost,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::point_from_ints;

    fn hull(rows: &[&[i64]]) -> Polytope {
        Polytope::hull(&rows.iter().map(|r| point_from_ints(r)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn reflexive_triangle() {
        let t = hull(&[&[1, 0], &[0, 1], &[-1, -1]]);
        let c = fano_classification(&t).unwrap();
        assert_eq!(
            c,
            FanoClass {
                canonical: true,
                reflexive: true,
                pseudoreflexive: true,
                almost_pseudoreflexive: true
            }
        );
    }

    #[test]
    fn not_canonical() {
        let big = hull(&[&[2, 0], &[0, 2], &[-2, -2]]);
        assert_eq!(fano_classification(&big).unwrap(), FanoClass::default());
    }

    #[test]
    fn interior_point_off_origin() {
        let t = hull(&[&[2, 1], &[1, 2], &[0, 0]]);
        assert_eq!(
            fano_classification(&t).unwrap_err(),
            Error::InteriorPointNotAtOrigin
        );
    }
}
