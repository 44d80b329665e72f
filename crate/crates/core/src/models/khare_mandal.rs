use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::engine::{QhjProblem, SolutionFamily, VariableMap};
use crate::error::{Error, Result};
use crate::rational::{EnergyAffineRational, Polynomial, RationalFunction};

/// `V(x) = -(zeta cosh 2x - i M)^2`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct KhareMandalParams {
    pub zeta: f64,
    pub m: u32,
}

impl KhareMandalParams {
    pub fn new(zeta: f64, m: u32) -> Result<Self> {
        if !(zeta.is_finite() && zeta > 0.0) {
            return Err(Error::InvalidParameter(format!("zeta must be positive, got {zeta}")));
        }
        if m == 0 {
            return Err(Error::InvalidParameter("M must be a positive integer".into()));
        }
        Ok(Self { zeta, m })
    }

    pub fn potential(&self, x: f64) -> Complex64 {
        let w = Complex64::new(self.zeta * (2.0 * x).cosh(), -(self.m as f64));
        -(w * w)
    }
}

/// Riccati problem in `t = cosh 2x`:
/// `R_E(t) = (t^2 + 2) / (4 (t^2 - 1)^2) + (E + (zeta t - i M)^2) / (4 (t^2 - 1))`.
pub fn build_khare_mandal(params: &KhareMandalParams) -> Result<QhjProblem> {
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let t2m1 = Polynomial::from_real(&[-1.0, 0.0, 1.0]);
    let shifted = Polynomial::new(vec![c(0.0, -(params.m as f64)), c(params.zeta, 0.0)]);
    let num = &Polynomial::from_real(&[2.0, 0.0, 1.0]) + &(&t2m1 * &(&shifted * &shifted));
    let den = (&t2m1 * &t2m1).scale(c(4.0, 0.0));
    let base = RationalFunction::new(num, den)?;
    let slope = RationalFunction::new(Polynomial::one(), t2m1.scale(c(4.0, 0.0)))?;
    QhjProblem::new(
        EnergyAffineRational::new(base, slope),
        vec![c(1.0, 0.0), c(-1.0, 0.0)],
        VariableMap::CoshTwoX,
        format!("khare-mandal zeta={} M={}", params.zeta, params.m),
    )
}

/// Relation between `M` and `n` implied by a family: `M = 2n + 2 (b1 + b1')`.
pub fn qes_condition(family: &SolutionFamily) -> String {
    let offset = 2.0 * family.residue_sum().re;
    format!("M = 2n + {}", offset.round() as i64)
}
