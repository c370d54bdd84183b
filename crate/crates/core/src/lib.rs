//! Exact supertropical linear algebra over the max-plus rationals.
//!
//! Scalars live in the supertropical semifield: tangible values, their ghost
//! copies, and an adjoined zero `-inf`. On top of that the crate provides
//! matrix quasi-inverses and quasi-identities, tropical rank, dual bases of
//! closed bases, strict bilinear forms with Gram-Schmidt and the
//! anisotropic/alternate decomposition, and quasilinear quadratic forms.
//! The [`oracle`] module holds brute-force engines, seeded samplers and the
//! property suites that check all of the above on random instances.

pub mod assignment;
pub mod bilinear;
pub mod det;
pub mod dual;
pub mod error;
pub mod format;
pub mod matrix;
pub mod oracle;
pub mod quadratic;
pub mod scalar;
pub mod vector;

pub use bilinear::BilinearForm;
pub use det::{det, det_assignment, DetResult, Engine};
pub use error::{Error, Result};
pub use matrix::{independent, Matrix};
pub use quadratic::QuadraticForm;
pub use scalar::{GroupValue, Rational, Scalar};
pub use vector::{lin_comb, Vector};
