use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{expansion_at_infinity, EnergyAffineRational, Polynomial};

/// How the transformed variable `v` relates to the physical coordinate `x`.
///
/// Both maps share the prefactor shift `phi = chi - v / (2 (v^2 - 1))`, where
/// `phi = d ln(psi) / dv`, so the wavefunction carries `(v^2 - 1)^(-1/4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VariableMap {
    /// `t = cosh 2x`
    CoshTwoX,
    /// `y = i sinh x`
    ISinhX,
}

impl VariableMap {
    pub fn transform(&self, x: f64) -> Complex64 {
        match self {
            Self::CoshTwoX => Complex64::new((2.0 * x).cosh(), 0.0),
            Self::ISinhX => Complex64::new(0.0, x.sinh()),
        }
    }

    /// `dv/dx`
    pub fn derivative(&self, x: f64) -> Complex64 {
        match self {
            Self::CoshTwoX => Complex64::new(2.0 * (2.0 * x).sinh(), 0.0),
            Self::ISinhX => Complex64::new(0.0, x.cosh()),
        }
    }

    /// Exponent carried by each `(v -/+ 1)` factor from integrating the shift.
    pub fn prefactor_exponent(&self) -> f64 {
        -0.25
    }

    /// `phi - chi` at `v`.
    pub fn prefactor_shift(&self, v: Complex64) -> Complex64 {
        -v / (2.0 * (v * v - 1.0))
    }

    pub fn describe(&self) -> &'static str {
        match self {
            Self::CoshTwoX => "t = cosh 2x",
            Self::ISinhX => "y = i sinh x",
        }
    }
}

/// Transformed Riccati problem `chi^2 + chi' + R_E(v) = 0`.
#[derive(Clone, Debug)]
pub struct QhjProblem {
    pub(crate) rational_part: EnergyAffineRational,
    pub(crate) fixed_poles: Vec<Complex64>,
    pub(crate) variable_map: VariableMap,
    pub(crate) label: String,
}

impl QhjProblem {
    /// Checks that every pole of the rational part sits on a fixed pole with
    /// order at most two and that the rational part is bounded at infinity.
    pub fn new(
        rational_part: EnergyAffineRational,
        fixed_poles: Vec<Complex64>,
        variable_map: VariableMap,
        label: impl Into<String>,
    ) -> Result<Self> {
        expansion_at_infinity(&rational_part)?;
        let problem = Self {
            rational_part,
            fixed_poles,
            variable_map,
            label: label.into(),
        };
        let q2 = {
            let q = problem.pole_product();
            &q * &q
        };
        for part in [&problem.rational_part.base, &problem.rational_part.slope] {
            let (_, rem) = q2.div_rem(part.den())?;
            if !rem.is_zero() {
                return Err(Error::UnsupportedStructure(format!(
                    "denominator {} has poles outside the fixed set or of order > 2",
                    part.den()
                )));
            }
        }
        Ok(problem)
    }

    pub fn rational_part(&self) -> &EnergyAffineRational {
        &self.rational_part
    }

    pub fn fixed_poles(&self) -> &[Complex64] {
        &self.fixed_poles
    }

    pub fn variable_map(&self) -> VariableMap {
        self.variable_map
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `prod (v - c_i)` over the fixed poles.
    pub fn pole_product(&self) -> Polynomial {
        Polynomial::from_roots(Complex64::new(1.0, 0.0), &self.fixed_poles)
    }
}
