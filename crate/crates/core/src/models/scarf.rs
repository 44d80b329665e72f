use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::engine::{QhjProblem, VariableMap};
use crate::error::{Error, Result};
use crate::rational::{EnergyAffineRational, Polynomial, RationalFunction};

/// Parameters of the complex Scarf-II potential.
///
/// The Riccati form used here, `R_E(y) = (2 + y^2)/(4(1 - y^2)^2) - E/(1 - y^2)
/// - (A - B y)/(1 - y^2)^2` with `y = i sinh x`, corresponds to
/// `V(x) = -A sech^2 x + i B sech x tanh x`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScarfParams {
    pub a: f64,
    pub b: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScarfCase {
    /// `|B| > A + 1/4`: one residue pair is complex.
    One,
    /// `|B| <= A + 1/4`.
    Two,
}

impl ScarfCase {
    pub fn number(&self) -> u8 {
        match self {
            Self::One => 1,
            Self::Two => 2,
        }
    }
}

/// Square roots that parameterize the residues, for display.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "case")]
pub enum ScarfDisplay {
    /// `r = sqrt(|B| - A - 1/4)`, `s = sqrt(A + |B| + 1/4)`
    Case1 { r: f64, s: f64 },
    /// `mu = sqrt(1/4 + A - B)`, `nu = sqrt(1/4 + A + B)`
    Case2 { mu: f64, nu: f64 },
}

/// Residues kept by the decay requirement, with the bound `n < n_bound`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScarfResidueSelection {
    /// Admissible residues at `y = 1`.
    pub b1: Vec<Complex64>,
    /// Admissible residues at `y = -1`.
    pub b1p: Vec<Complex64>,
    pub case: ScarfCase,
    pub n_bound: f64,
    pub display: ScarfDisplay,
}

impl ScarfResidueSelection {
    /// Every `[b1, b1']` combination.
    pub fn choices(&self) -> Vec<Vec<Complex64>> {
        self.b1
            .iter()
            .flat_map(|&b1| self.b1p.iter().map(move |&b1p| vec![b1, b1p]))
            .collect()
    }

    /// `n` values with `n < n_bound`, capped at `n_max`.
    pub fn admissible_n(&self, n_max: usize) -> Vec<usize> {
        (0..=n_max).take_while(|&n| (n as f64) < self.n_bound).collect()
    }
}

impl ScarfParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::InvalidParameter(format!("A and B must be finite, got {a}, {b}")));
        }
        Ok(Self { a, b })
    }

    pub fn case(&self) -> ScarfCase {
        if self.b.abs() > self.a + 0.25 {
            ScarfCase::One
        } else {
            ScarfCase::Two
        }
    }

    pub fn potential(&self, x: f64) -> Complex64 {
        let sech = 1.0 / x.cosh();
        Complex64::new(-self.a * sech * sech, self.b * sech * x.tanh())
    }
}

pub fn build_scarf2(params: &ScarfParams) -> Result<QhjProblem> {
    let c = |re: f64| Complex64::new(re, 0.0);
    let y2m1 = Polynomial::from_real(&[-1.0, 0.0, 1.0]);
    // (2 + y^2) - 4 (A - B y) over 4 (y^2 - 1)^2
    let num = Polynomial::from_real(&[2.0 - 4.0 * params.a, 4.0 * params.b, 1.0]);
    let base = RationalFunction::new(num, (&y2m1 * &y2m1).scale(c(4.0)))?;
    // -E/(1 - y^2) = E/(y^2 - 1)
    let slope = RationalFunction::new(Polynomial::one(), y2m1)?;
    QhjProblem::new(
        EnergyAffineRational::new(base, slope),
        vec![c(1.0), c(-1.0)],
        VariableMap::ISinhX,
        format!("scarf2 A={} B={}", params.a, params.b),
    )
}

/// Residues at `y = +/-1` are `1/2 +/- (1/2) sqrt(1/4 + A -/+ B)`. A real
/// radicand keeps only the minus root (the plus root makes `psi` grow like a
/// positive power of `y`); a negative radicand gives two complex roots with
/// real part 1/2 and both are kept. `psi ~ y^(b1 + b1' + n - 1/2)` at large
/// `|y|`, so decay needs `n < 1/2 - Re(b1 + b1')`.
pub fn select_scarf_residues(params: &ScarfParams) -> ScarfResidueSelection {
    let pick = |radicand: f64| -> Vec<Complex64> {
        if radicand >= 0.0 {
            vec![Complex64::new(0.5 - 0.5 * radicand.sqrt(), 0.0)]
        } else {
            let w = 0.5 * (-radicand).sqrt();
            vec![Complex64::new(0.5, w), Complex64::new(0.5, -w)]
        }
    };
    let b1 = pick(0.25 + params.a - params.b);
    let b1p = pick(0.25 + params.a + params.b);
    let n_bound = 0.5 - (b1[0].re + b1p[0].re);
    let case = params.case();
    let display = match case {
        ScarfCase::One => ScarfDisplay::Case1 {
            r: (params.b.abs() - params.a - 0.25).sqrt(),
            s: (params.a + params.b.abs() + 0.25).sqrt(),
        },
        ScarfCase::Two => ScarfDisplay::Case2 {
            mu: (0.25 + params.a - params.b).sqrt(),
            nu: (0.25 + params.a + params.b).sqrt(),
        },
    };
    ScarfResidueSelection {
        b1,
        b1p,
        case,
        n_bound,
        display,
    }
}
