//! Independent checks: a finite-difference spectrum on a real interval and
//! pointwise Schrodinger residuals of closed-form eigenfunctions.

mod grid;
mod matching;
mod residual;
mod tridiagonal;

pub use grid::{discretize, discretize_with, EigenMethod, Grid, GridOracle, DEFAULT_HALF_WIDTH, DEFAULT_POINTS};
pub use matching::{match_spectra, MatchEntry, MatchReport, DEFAULT_MATCH_TOLERANCE};
pub use residual::{residual_check, ResidualReport, PASS_THRESHOLD, RICHARDSON_STEP, STEP};
pub use tridiagonal::symmetric_tridiagonal_eigenvalues;
