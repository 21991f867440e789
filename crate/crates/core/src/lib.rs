//! Exact Euler numbers, lattice polytopes and weight-system censuses for
//! Calabi-Yau hypersurfaces in weighted projective spaces.

pub mod error;
pub mod euler;
pub mod exact;
pub mod mirror;
pub mod polytope;
pub mod quasismooth;
pub mod wps;

pub use error::{Error, Result};
pub use exact::Rational;
