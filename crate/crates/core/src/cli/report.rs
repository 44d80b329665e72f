use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::engine::FamilyKind;
use crate::models::{PtClass, PtLabel};
use crate::oracle::EigenMethod;

/// Complex number as `{ "re": .., "im": .. }`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexValue {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<ComplexValue> for Complex64 {
    fn from(z: ComplexValue) -> Self {
        Complex64::new(z.re, z.im)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Checks {
    pub ode_residual: f64,
    /// Winding number of `P_n'/P_n`; absent if the contour integral failed.
    pub quantization_n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_match_distance: Option<f64>,
}

/// One energy level and where it came from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyReport {
    /// Index of the solution family; QES families can own several levels.
    pub family: usize,
    pub b1: ComplexValue,
    pub b1p: ComplexValue,
    pub n: usize,
    pub kind: FamilyKind,
    #[serde(rename = "E")]
    pub energy: ComplexValue,
    /// Monic `P_n`, lowest degree first.
    pub polynomial_coeffs: Vec<ComplexValue>,
    pub pt_class: PtLabel,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub qes_condition: Option<String>,
    pub checks: Checks,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub grid_points: usize,
    pub half_width: f64,
    pub spacing: f64,
    pub method: EigenMethod,
    pub tolerance: f64,
    pub matched: bool,
    pub max_distance: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub model: String,
    pub params: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_bound: Option<f64>,
    pub pt_class: PtClass,
    pub pt_anomaly: bool,
    pub families: Vec<FamilyReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSummary>,
    pub notes: Vec<String>,
    /// Every residual and contour check passed.
    pub checks_passed: bool,
}

impl SolveReport {
    pub fn energies(&self) -> Vec<Complex64> {
        self.families.iter().map(|f| f.energy.into()).collect()
    }
}
