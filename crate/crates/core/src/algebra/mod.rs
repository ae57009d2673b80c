//! Exact arithmetic: Laurent polynomials, square matrices over `Z`, `Q` and
//! `Z[t, t⁻¹]`, subspaces of `Q^d` and signatures of rational forms.
//!
//! Nothing in here uses floating point.

pub mod form;
pub mod laurent;
pub mod linalg;
pub mod matrix;

pub use form::{form_signature, QuadForm};
pub use laurent::LaurentPoly;
pub use linalg::{image_basis, kernel_basis, solve, subspace_intersection, QVec, Subspace};
pub use matrix::{IntMatrix, LaurentMatrix, RatMatrix, Ring, SquareMatrix};

use num_rational::BigRational;

use crate::error::Result;

/// `p(v)` for a Laurent polynomial and a nonzero rational.
pub fn laurent_eval(p: &LaurentPoly, v: &BigRational) -> Result<BigRational> {
    p.eval(v)
}
