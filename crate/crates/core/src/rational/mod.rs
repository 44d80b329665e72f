//! Complex polynomial and rational-function arithmetic, Laurent expansions
//! at finite points and at infinity, and polynomial root finding.

mod function;
mod laurent;
mod polynomial;
mod roots;

pub use function::{Affine, EnergyAffineRational, RationalFunction};
pub use laurent::{expansion_at_infinity, laurent_at, split_root, Center, LaurentData};
pub use polynomial::{Polynomial, TRIM_TOLERANCE};
pub use roots::{polynomial_roots, quadratic_roots};
