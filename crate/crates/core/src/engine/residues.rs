use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::problem::QhjProblem;
use super::FamilyKind;
use crate::error::{Error, Result};
use crate::rational::{expansion_at_infinity, laurent_at, Affine};

/// Below this magnitude an expansion coefficient counts as zero.
pub(crate) const NEGLIGIBLE: f64 = 1e-13;

/// Both roots of `b^2 - b + r_{-2} = 0` at a fixed pole; no selection is made.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResiduePair {
    pub pole: Complex64,
    pub plus: Complex64,
    pub minus: Complex64,
    /// Order `-2` Laurent coefficient of the rational part at `pole`.
    pub leading: Complex64,
}

impl ResiduePair {
    pub fn roots(&self) -> [Complex64; 2] {
        [self.plus, self.minus]
    }

    pub fn contains(&self, b: Complex64, tol: f64) -> bool {
        (b - self.plus).norm() <= tol || (b - self.minus).norm() <= tol
    }
}

/// Residues `1/2 +/- sqrt(1/4 - r_{-2})` of `chi` at a fixed pole.
pub fn fixed_pole_residues(problem: &QhjProblem, pole: Complex64) -> Result<ResiduePair> {
    if !problem.fixed_poles.iter().any(|c| (c - pole).norm() <= 1e-12) {
        return Err(Error::NotAFixedPole(pole));
    }
    let laurent = laurent_at(&problem.rational_part, pole, -2)?;
    let leading = laurent.coefficient(-2);
    if !leading.is_energy_independent(NEGLIGIBLE) {
        return Err(Error::EnergyDependentResidue(pole));
    }
    let r = leading.constant;
    let half = Complex64::new(0.5, 0.0);
    let root = 0.5 * (Complex64::new(1.0, 0.0) - 4.0 * r).sqrt();
    Ok(ResiduePair {
        pole,
        plus: half + root,
        minus: half - root,
        leading: r,
    })
}

/// The `1/v` coefficient of `chi` at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Lambda {
    Fixed(Complex64),
    /// `1/2 + sign * sqrt(1/4 - r2(E))` with principal square root.
    EnergyDependent { sign: f64, r2: Affine },
}

impl Lambda {
    pub fn at(&self, energy: Complex64) -> Complex64 {
        match *self {
            Self::Fixed(l) => l,
            Self::EnergyDependent { sign, r2 } => 0.5 + sign * (0.25 - r2.at(energy)).sqrt(),
        }
    }
}

/// Leading behaviour `chi ~ a0 + lambda / v` at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct InfinityBranch {
    pub a0: Complex64,
    pub lambda: Lambda,
}

impl InfinityBranch {
    pub fn kind(&self) -> FamilyKind {
        match self.lambda {
            Lambda::Fixed(_) => FamilyKind::Qes,
            Lambda::EnergyDependent { .. } => FamilyKind::Es,
        }
    }
}

/// Both branches of the balance at infinity.
///
/// With `r0 != 0` the analytic part is `a0 = +/- sqrt(-r0)` and
/// `lambda = -r1 / (2 a0)`. With `r0 = r1 = 0` it is `a0 = 0` and
/// `lambda^2 - lambda + r2(E) = 0`, which is energy dependent whenever `r2` is.
pub fn infinity_branches(problem: &QhjProblem) -> Result<Vec<InfinityBranch>> {
    let exp = expansion_at_infinity(&problem.rational_part)?;
    let (r0, r1, r2) = (exp.coefficient(0), exp.coefficient(-1), exp.coefficient(-2));
    let zero = Complex64::new(0.0, 0.0);
    if !r0.is_zero(NEGLIGIBLE) {
        if !r0.is_energy_independent(NEGLIGIBLE) || !r1.is_energy_independent(NEGLIGIBLE) {
            return Err(Error::UnsupportedStructure(
                "energy-dependent r0 or r1 at infinity".into(),
            ));
        }
        let a0 = (-r0.constant).sqrt();
        return Ok([a0, -a0]
            .into_iter()
            .map(|a0| InfinityBranch {
                a0,
                lambda: Lambda::Fixed(-r1.constant / (2.0 * a0)),
            })
            .collect());
    }
    if !r1.is_zero(NEGLIGIBLE) {
        return Err(Error::UnsupportedStructure(
            "r0 = 0 but r1 != 0 at infinity".into(),
        ));
    }
    Ok([1.0, -1.0]
        .into_iter()
        .map(|sign| {
            let lambda = if r2.is_energy_independent(NEGLIGIBLE) {
                Lambda::Fixed(0.5 + sign * (0.25 - r2.constant).sqrt())
            } else {
                Lambda::EnergyDependent { sign, r2 }
            };
            InfinityBranch { a0: zero, lambda }
        })
        .collect())
}
