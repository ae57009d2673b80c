//! Braid-group computations built on the reduced Burau representation:
//! exact images at generic `t` and at `t = -1`, Alexander polynomials,
//! Meyer-cocycle signatures of 3-braid closures, random walks on braid groups
//! and their symplectic images, and Lissajous toric knots.

pub mod algebra;
pub mod braid;
pub mod burau;
pub mod entry_poly;
pub mod error;
pub mod lissajous;
pub mod meyer;
pub mod signature;
pub mod walks;

pub use algebra::{IntMatrix, LaurentMatrix, LaurentPoly, QuadForm, RatMatrix, Subspace};
pub use braid::{parse_word, BraidWord, Permutation};
pub use burau::{alexander_at_minus1, alexander_poly, burau_minus1, burau_t, symplectic_quotient, RepConfig};
pub use entry_poly::EntryPolynomial;
pub use error::{Error, Result};
pub use lissajous::{classify, lissajous_braid, Classification, Eligibility, LissajousClass};
pub use meyer::{meyer_cocycle, meyer_space, Sl2};
pub use signature::{gg_signature, seifert_signature_oracle, SignatureResult};
pub use walks::{GenMeasure, IntegralBurau, MatrixPredicate, ModPBurau, Representation, WalkDistribution};
