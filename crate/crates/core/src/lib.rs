//! Quantum Hamilton-Jacobi spectra for PT-symmetric potentials.
//!
//! The Schrodinger equation (`hbar = 2m = 1`) is rewritten as a Riccati
//! equation for the quantum momentum function; after a change of variable
//! the potential becomes a rational function and the eigenvalues follow from
//! the pole structure of the solution. Two models are provided: the
//! quasi-exactly solvable Khare-Mandal potential `-(zeta cosh 2x - iM)^2` and
//! the exactly solvable complex Scarf-II potential. Results are checked
//! against a finite-difference spectrum and pointwise residuals.

pub mod cli;
pub mod engine;
pub mod error;
pub mod linalg;
pub mod models;
pub mod oracle;
pub mod rational;

pub use error::{Error, Result};
pub use num_complex::Complex64;
