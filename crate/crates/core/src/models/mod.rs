//! The two PT-symmetric potentials as transformed Riccati problems, plus
//! residue selection, Jacobi polynomials and closed-form wavefunctions.

mod jacobi;
mod khare_mandal;
mod pt;
mod scarf;
mod wavefunction;

use num_complex::Complex64;

pub use jacobi::{jacobi_ode_residual, jacobi_polynomial};
pub use khare_mandal::{build_khare_mandal, qes_condition, KhareMandalParams};
pub use pt::{classify_pt, PtClass, PtLabel, PtReport, REALITY_TOLERANCE};
pub use scarf::{build_scarf2, select_scarf_residues, ScarfCase, ScarfDisplay, ScarfParams, ScarfResidueSelection};
pub use wavefunction::{
    assemble_wavefunction, qmf_from_chi, Factor, FactorBase, WavefunctionForm, DEFAULT_SAMPLE_COUNT,
    DEFAULT_SAMPLE_RANGE, LOG_DERIVATIVE_TOLERANCE, SAMPLE_CLEARANCE,
};

use crate::engine::{
    enumerate_families, solve_es_spectrum, solve_qes_spectrum, EigenPair, EnumerateOptions, FamilyKind, QhjProblem,
    SolutionFamily,
};
use crate::error::{Error, Result};

/// Default cap on the moving-pole count for ES families.
pub const DEFAULT_N_MAX: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Model {
    KhareMandal(KhareMandalParams),
    Scarf2(ScarfParams),
}

/// One solved level with its closed-form wavefunction.
#[derive(Clone, Debug)]
pub struct Solution {
    pub eigenpair: EigenPair,
    pub wavefunction: WavefunctionForm,
}

impl Solution {
    pub fn family(&self) -> &SolutionFamily {
        &self.eigenpair.family
    }

    pub fn energy(&self) -> Complex64 {
        self.eigenpair.energy
    }
}

#[derive(Clone, Debug)]
pub struct ModelSpectrum {
    pub problem: QhjProblem,
    pub solutions: Vec<Solution>,
    pub scarf_selection: Option<ScarfResidueSelection>,
    pub pt: PtReport,
}

impl ModelSpectrum {
    pub fn energies(&self) -> Vec<Complex64> {
        self.solutions.iter().map(Solution::energy).collect()
    }
}

impl Model {
    pub fn name(&self) -> &'static str {
        match self {
            Self::KhareMandal(_) => "khare-mandal",
            Self::Scarf2(_) => "scarf2",
        }
    }

    pub fn problem(&self) -> Result<QhjProblem> {
        match self {
            Self::KhareMandal(p) => build_khare_mandal(p),
            Self::Scarf2(p) => build_scarf2(p),
        }
    }

    pub fn potential(&self, x: f64) -> Complex64 {
        match self {
            Self::KhareMandal(p) => p.potential(x),
            Self::Scarf2(p) => p.potential(x),
        }
    }

    /// Enumerate, solve and assemble every admissible level.
    ///
    /// Khare-Mandal keeps every residue combination; Scarf-II keeps the
    /// decaying residues and `n < n_bound`, with `n` also capped by `n_max`.
    pub fn solve(&self, n_max: usize) -> Result<ModelSpectrum> {
        let problem = self.problem()?;
        let (options, scarf_selection) = match self {
            Self::KhareMandal(_) => (EnumerateOptions { n_max, ..Default::default() }, None),
            Self::Scarf2(p) => {
                let sel = select_scarf_residues(p);
                let options = EnumerateOptions {
                    n_max,
                    n_bound: Some(sel.n_bound),
                    residue_choices: Some(sel.choices()),
                };
                (options, Some(sel))
            }
        };
        let families = enumerate_families(&problem, &options)?;
        let mut solutions = Vec::new();
        for family in &families {
            let pairs = match family.kind {
                FamilyKind::Qes => solve_qes_spectrum(&problem, family)?,
                FamilyKind::Es => vec![solve_es_with_jacobi(&problem, family)?],
            };
            for eigenpair in pairs {
                let wavefunction = assemble_wavefunction(&problem, &eigenpair)?;
                solutions.push(Solution { eigenpair, wavefunction });
            }
        }
        let energies: Vec<Complex64> = solutions.iter().map(Solution::energy).collect();
        let pt = classify_pt(&energies);
        Ok(ModelSpectrum {
            problem,
            solutions,
            scarf_selection,
            pt,
        })
    }
}

/// ES eigenpair with `P_n = P_n^(2 b1 - 1, 2 b1' - 1)` when the recurrence is
/// regular and satisfies the Jacobi equation; the linear system at the known
/// energy is the fallback.
pub fn solve_es_with_jacobi(problem: &QhjProblem, family: &SolutionFamily) -> Result<EigenPair> {
    let [b1, b1p] = family.residues[..] else {
        return Err(Error::ConstructionMismatch("Jacobi form needs two fixed poles".into()));
    };
    let (alpha, beta) = (2.0 * b1 - 1.0, 2.0 * b1p - 1.0);
    let candidate = jacobi_polynomial(alpha, beta, family.n)
        .ok()
        .filter(|p| jacobi_ode_residual(p, alpha, beta, family.n) < 1e-9);
    solve_es_spectrum(problem, family, candidate.as_ref())
}
