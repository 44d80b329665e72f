use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::models::WavefunctionForm;

pub const STEP: f64 = 1e-4;
pub const RICHARDSON_STEP: f64 = 5e-5;
/// Residual below which an eigenpair passes.
pub const PASS_THRESHOLD: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    /// `max_x |-psi'' + (V - E) psi| / max(|psi|, |psi''|)`
    pub max_relative: f64,
    pub per_point: Vec<(f64, f64)>,
    /// The two step sizes disagree by more than ten times the expected error.
    pub differentiation_warning: bool,
}

impl ResidualReport {
    pub fn passes(&self) -> bool {
        self.max_relative < PASS_THRESHOLD
    }
}

/// Five-point central second difference, with its rounding-error estimate.
fn second_derivative(f: &dyn Fn(f64) -> Complex64, x: f64, h: f64) -> (Complex64, f64) {
    let vals = [f(x - 2.0 * h), f(x - h), f(x), f(x + h), f(x + 2.0 * h)];
    let d2 = (-vals[0] + 16.0 * vals[1] - 30.0 * vals[2] + 16.0 * vals[3] - vals[4]) / (12.0 * h * h);
    let magnitude = vals.iter().map(|v| v.norm()).fold(0.0, f64::max);
    (d2, 64.0 / 12.0 * f64::EPSILON * magnitude / (h * h))
}

/// Pointwise Schrodinger residual of a closed-form wavefunction.
///
/// Works for non-normalizable `psi`. `psi''` is a five-point central
/// difference at [`STEP`], compared against [`RICHARDSON_STEP`] to flag
/// unreliable differentiation.
pub fn residual_check(
    wavefunction: &WavefunctionForm,
    energy: Complex64,
    potential: &dyn Fn(f64) -> Complex64,
    samples: &[f64],
) -> Result<ResidualReport> {
    let psi = |x: f64| wavefunction.value(x);
    let mut per_point = Vec::with_capacity(samples.len());
    let mut warning = false;
    for &x in samples {
        if !wavefunction.is_clear_sample(x) {
            return Err(Error::NoSamplePoint(x));
        }
        let value = psi(x);
        let (d2, noise) = second_derivative(&psi, x, STEP);
        let (d2_fine, noise_fine) = second_derivative(&psi, x, RICHARDSON_STEP);
        let expected = noise.max(noise_fine) + STEP.powi(4) * d2.norm();
        if (d2 - d2_fine).norm() > 10.0 * expected {
            warning = true;
        }
        let residual = (-d2 + (potential(x) - energy) * value).norm() / value.norm().max(d2.norm());
        per_point.push((x, residual));
    }
    let max_relative = per_point.iter().map(|p| p.1).fold(0.0, f64::max);
    Ok(ResidualReport {
        max_relative,
        per_point,
        differentiation_warning: warning,
    })
}
