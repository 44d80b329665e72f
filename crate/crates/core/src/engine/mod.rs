//! The quantum Hamilton-Jacobi machinery for a transformed Riccati problem
//! `chi^2 + chi' + R_E(v) = 0`.
//!
//! `chi` is written as
//! `sum b_i/(v - c_i) + P_n'/P_n + a0`: fixed-pole residues come from the
//! order `-2` balance at each pole, `a0` and the `1/v` coefficient `lambda`
//! from the balance at infinity, and `sum b_i + n = lambda` ties them to the
//! number `n` of moving poles. Substituting back gives a linear system for
//! the coefficients of `P_n`.

mod families;
mod problem;
mod quantization;
mod residues;
mod system;

pub use families::{enumerate_families, EnumerateOptions, FamilyKind, SolutionFamily, INTEGER_TOLERANCE};
pub use problem::{QhjProblem, VariableMap};
pub use quantization::{quantization_check, MIN_SAMPLES, WINDING_TOLERANCE};
pub use residues::{fixed_pole_residues, infinity_branches, InfinityBranch, Lambda, ResiduePair};
pub use system::{
    build_linear_system, determinant_polynomial, qes_energies_by_determinant, solve_es_spectrum,
    solve_qes_spectrum, Diagnostics, EigenPair, LinearSystem, IDENTITY_TOLERANCE,
};
