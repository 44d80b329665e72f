use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::engine::{EigenPair, QhjProblem, VariableMap};
use crate::error::{Error, Result};
use crate::rational::Polynomial;

/// Tolerance of the log-derivative consistency check done at assembly.
pub const LOG_DERIVATIVE_TOLERANCE: f64 = 1e-8;
pub const DEFAULT_SAMPLE_COUNT: usize = 8;
pub const DEFAULT_SAMPLE_RANGE: (f64, f64) = (-2.0, 2.0);
/// Samples keep `|P_n(v)|` and `|v - c|` above this.
pub const SAMPLE_CLEARANCE: f64 = 1e-3;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum FactorBase {
    /// `orientation * (v - pole)` with `orientation = +/-1`, chosen so the
    /// base stays off the principal branch cut along the real `x` axis.
    /// Flipping the orientation changes `psi` only by a constant phase.
    Linear { pole: Complex64, orientation: f64 },
    /// `exp(v)`
    Exponential,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Factor {
    pub base: FactorBase,
    pub exponent: Complex64,
}

impl Factor {
    fn eval(&self, v: Complex64) -> Complex64 {
        match self.base {
            FactorBase::Linear { pole, orientation } => (orientation * (v - pole)).powc(self.exponent),
            FactorBase::Exponential => (self.exponent * v).exp(),
        }
    }

    /// `d/dv` of the log of this factor.
    fn log_derivative(&self, v: Complex64) -> Complex64 {
        match self.base {
            FactorBase::Linear { pole, .. } => self.exponent / (v - pole),
            FactorBase::Exponential => self.exponent,
        }
    }
}

/// `psi(x) = prod factors(v) * P_n(v)` with `v = v(x)`, defined up to a constant.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WavefunctionForm {
    pub factors: Vec<Factor>,
    pub polynomial: Polynomial,
    pub variable_map: VariableMap,
}

impl WavefunctionForm {
    pub fn value_at(&self, v: Complex64) -> Complex64 {
        self.factors.iter().map(|f| f.eval(v)).product::<Complex64>() * self.polynomial.eval(v)
    }

    pub fn value(&self, x: f64) -> Complex64 {
        self.value_at(self.variable_map.transform(x))
    }

    /// `d ln(psi) / dx` from the closed form.
    pub fn log_derivative(&self, x: f64) -> Complex64 {
        let v = self.variable_map.transform(x);
        let (p, dp) = self.polynomial.eval_with_derivative(v);
        let sum: Complex64 = self.factors.iter().map(|f| f.log_derivative(v)).sum();
        self.variable_map.derivative(x) * (sum + dp / p)
    }

    fn linear_poles(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.factors.iter().filter_map(|f| match f.base {
            FactorBase::Linear { pole, .. } => Some(pole),
            FactorBase::Exponential => None,
        })
    }

    /// Whether `x` keeps [`SAMPLE_CLEARANCE`] from zeros of `P_n` and from the
    /// fixed singular points.
    pub fn is_clear_sample(&self, x: f64) -> bool {
        let v = self.variable_map.transform(x);
        self.polynomial.eval(v).norm() >= SAMPLE_CLEARANCE
            && self.linear_poles().all(|c| (v - c).norm() >= SAMPLE_CLEARANCE)
    }

    /// `count` evenly spaced points in `range`, each nudged until it is clear.
    pub fn sample_points(&self, count: usize, range: (f64, f64)) -> Result<Vec<f64>> {
        let (lo, hi) = range;
        let step = if count > 1 { (hi - lo) / (count - 1) as f64 } else { 0.0 };
        (0..count)
            .map(|k| {
                let x0 = lo + step * k as f64;
                (0..64)
                    .map(|j| x0 + 0.0173 * j as f64 * if j % 2 == 0 { 1.0 } else { -1.0 })
                    .find(|&x| self.is_clear_sample(x))
                    .ok_or(Error::NoSamplePoint(x0))
            })
            .collect()
    }

    pub fn default_samples(&self) -> Result<Vec<f64>> {
        self.sample_points(DEFAULT_SAMPLE_COUNT, DEFAULT_SAMPLE_RANGE)
    }
}

/// `q(x) = d ln(psi)/dx` rebuilt from `chi` through the change of variable:
/// `q = v'(x) (chi(v) + phi - chi)`.
pub fn qmf_from_chi(problem: &QhjProblem, pair: &EigenPair, x: f64) -> Complex64 {
    let map = problem.variable_map();
    let v = map.transform(x);
    let (p, dp) = pair.moving_polynomial.eval_with_derivative(v);
    let chi: Complex64 = problem
        .fixed_poles()
        .iter()
        .zip(&pair.family.residues)
        .map(|(&c, &b)| b / (v - c))
        .sum::<Complex64>()
        + dp / p
        + pair.family.branch.a0;
    map.derivative(x) * (chi + map.prefactor_shift(v))
}

/// Closed-form wavefunction: `(v - c_i)^(b_i - 1/4)` per fixed pole, `exp(a0 v)`
/// when `a0 != 0`, and `P_n(v)`. The log-derivative is checked against
/// [`qmf_from_chi`] at the default sample points.
pub fn assemble_wavefunction(problem: &QhjProblem, pair: &EigenPair) -> Result<WavefunctionForm> {
    let map = problem.variable_map();
    let origin = map.transform(0.0);
    let mut factors: Vec<Factor> = problem
        .fixed_poles()
        .iter()
        .zip(&pair.family.residues)
        .map(|(&pole, &b)| Factor {
            base: FactorBase::Linear {
                pole,
                orientation: if (origin - pole).re < 0.0 { -1.0 } else { 1.0 },
            },
            exponent: b + map.prefactor_exponent(),
        })
        .collect();
    let a0 = pair.family.branch.a0;
    if a0.norm() > 0.0 {
        factors.push(Factor {
            base: FactorBase::Exponential,
            exponent: a0,
        });
    }
    let form = WavefunctionForm {
        factors,
        polynomial: pair.moving_polynomial.clone(),
        variable_map: map,
    };
    for x in form.default_samples()? {
        let q = qmf_from_chi(problem, pair, x);
        let err = (form.log_derivative(x) - q).norm() / q.norm().max(1.0);
        if err > LOG_DERIVATIVE_TOLERANCE {
            return Err(Error::ConstructionMismatch(format!(
                "wavefunction log-derivative off by {err:.3e} at x = {x}"
            )));
        }
    }
    Ok(form)
}
