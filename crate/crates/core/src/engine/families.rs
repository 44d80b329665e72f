use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::problem::QhjProblem;
use super::residues::{fixed_pole_residues, infinity_branches, InfinityBranch, Lambda, ResiduePair};
use crate::error::{Error, Result};

/// Tolerance for deciding that `lambda - sum(b)` is a nonnegative integer.
pub const INTEGER_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    /// `lambda` independent of the energy: finite determinant condition.
    Qes,
    /// `lambda` depends on the energy: one level per moving-pole count.
    Es,
}

/// One residue per fixed pole, an infinity branch and a moving-pole count.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionFamily {
    /// Aligned with the problem's fixed poles.
    pub residues: Vec<Complex64>,
    pub branch: InfinityBranch,
    pub n: usize,
    pub kind: FamilyKind,
    /// Fixed by the matching condition for ES families.
    pub energy: Option<Complex64>,
}

impl SolutionFamily {
    pub fn residue_sum(&self) -> Complex64 {
        self.residues.iter().sum()
    }
}

#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    /// Largest moving-pole count tried for ES families.
    pub n_max: usize,
    /// ES families need `n < n_bound` when set (normalizability).
    pub n_bound: Option<f64>,
    /// Restrict to these residue combinations instead of all of them.
    pub residue_choices: Option<Vec<Vec<Complex64>>>,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self {
            n_max: 10,
            n_bound: None,
            residue_choices: None,
        }
    }
}

fn all_combinations(pairs: &[ResiduePair]) -> Vec<Vec<Complex64>> {
    let mut combos: Vec<Vec<Complex64>> = vec![Vec::new()];
    for pair in pairs {
        let mut roots = vec![pair.plus];
        if (pair.plus - pair.minus).norm() > INTEGER_TOLERANCE {
            roots.push(pair.minus);
        }
        combos = combos
            .into_iter()
            .flat_map(|c| {
                roots.iter().map(move |&b| {
                    let mut next = c.clone();
                    next.push(b);
                    next
                })
            })
            .collect();
    }
    combos
}

fn as_nonnegative_integer(z: Complex64) -> Option<usize> {
    let rounded = z.re.round();
    let ok = z.im.abs() <= INTEGER_TOLERANCE
        && (z.re - rounded).abs() <= INTEGER_TOLERANCE
        && rounded >= 0.0;
    ok.then_some(rounded as usize)
}

/// Enumerates admissible (residues, branch, n) combinations.
///
/// QES: `n = lambda - sum(b)` must be a nonnegative integer. Branches whose
/// `lambda` cannot reach `sum(b) + n` are thereby discarded, which is the
/// positivity argument when all residues are positive.
///
/// ES: for each combination and `n`, the energy solves
/// `r2(E) = lambda - lambda^2` with `lambda = sum(b) + n`, and the branch sign
/// that reproduces that `lambda` is recorded.
pub fn enumerate_families(problem: &QhjProblem, options: &EnumerateOptions) -> Result<Vec<SolutionFamily>> {
    let pairs = problem
        .fixed_poles
        .iter()
        .map(|&p| fixed_pole_residues(problem, p))
        .collect::<Result<Vec<_>>>()?;
    let combos = match &options.residue_choices {
        Some(choices) => {
            for choice in choices {
                if choice.len() != pairs.len()
                    || !choice.iter().zip(&pairs).all(|(&b, p)| p.contains(b, INTEGER_TOLERANCE))
                {
                    return Err(Error::InvalidParameter(format!(
                        "residue choice {choice:?} does not match the indicial roots"
                    )));
                }
            }
            choices.clone()
        }
        None => all_combinations(&pairs),
    };
    let branches = infinity_branches(problem)?;

    let mut families = Vec::new();
    for residues in combos {
        let sum: Complex64 = residues.iter().sum();
        for branch in branches.iter().filter(|b| matches!(b.lambda, Lambda::Fixed(_))) {
            let Lambda::Fixed(lambda) = branch.lambda else { unreachable!() };
            if let Some(n) = as_nonnegative_integer(lambda - sum) {
                families.push(SolutionFamily {
                    residues: residues.clone(),
                    branch: *branch,
                    n,
                    kind: super::FamilyKind::Qes,
                    energy: None,
                });
            }
        }
        let es_r2 = branches.iter().find_map(|b| match b.lambda {
            Lambda::EnergyDependent { r2, .. } => Some(r2),
            Lambda::Fixed(_) => None,
        });
        let Some(r2) = es_r2 else { continue };
        for n in 0..=options.n_max {
            if options.n_bound.is_some_and(|bound| n as f64 >= bound) {
                break;
            }
            let lambda = sum + n as f64;
            let energy = (lambda - lambda * lambda - r2.constant) / r2.slope;
            let root = (0.25 - r2.at(energy)).sqrt();
            let sign = if (0.5 + root - lambda).norm() <= (0.5 - root - lambda).norm() {
                1.0
            } else {
                -1.0
            };
            families.push(SolutionFamily {
                residues: residues.clone(),
                branch: InfinityBranch {
                    a0: Complex64::new(0.0, 0.0),
                    lambda: Lambda::EnergyDependent { sign, r2 },
                },
                n,
                kind: FamilyKind::Es,
                energy: Some(energy),
            });
        }
    }
    Ok(families)
}
