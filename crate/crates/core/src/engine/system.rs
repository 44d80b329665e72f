use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::families::{FamilyKind, SolutionFamily};
use super::problem::QhjProblem;
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, CVector};
use crate::rational::{polynomial_roots, Polynomial, RationalFunction};

/// Tolerance on identities that the family constraint makes automatic.
pub const IDENTITY_TOLERANCE: f64 = 1e-9;

/// Largest `||M1|| * ||M1^-1||` for which the generalized eigenproblem is used.
const MAX_CONDITION: f64 = 1e12;

/// `M(E) = M0 + E * M1` acting on the coefficients of `P_n`, lowest first.
///
/// Row `i` is the coefficient of `v^i` in
/// `[Q^2 P'' + 2 Q S P' + (S^2 + S'Q - S Q' + Q^2 R_E) P] / Q`, where
/// `Q = prod (v - c_i)` and `S = Q * (sum b_i/(v - c_i) + a0)`. Rows above
/// `n` are kept in `surplus0`/`surplus1`.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub m0: CMatrix,
    pub m1: CMatrix,
    pub surplus0: CMatrix,
    pub surplus1: CMatrix,
}

impl LinearSystem {
    pub fn size(&self) -> usize {
        self.m0.nrows()
    }

    pub fn at(&self, energy: Complex64) -> CMatrix {
        &self.m0 + &self.m1 * energy
    }

    fn scale(&self) -> f64 {
        linalg::max_abs(&self.m0).max(linalg::max_abs(&self.m1)).max(1.0)
    }
}

/// Residual norms recorded for a solved eigenpair.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    /// `max|M(E) p| / (max|M(E)| max|p|)`
    pub system_residual: f64,
    /// Same measure over the surplus identities.
    pub surplus_residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenPair {
    pub energy: Complex64,
    /// Monic, of degree `family.n`.
    pub moving_polynomial: Polynomial,
    pub family: SolutionFamily,
    pub diagnostics: Diagnostics,
}

fn polynomial_part(q2: &Polynomial, r: &RationalFunction) -> Result<Polynomial> {
    let (quot, rem) = (q2 * r.num()).div_rem(r.den())?;
    if !rem.is_zero() {
        return Err(Error::ConstructionMismatch(
            "Q^2 R is not a polynomial".into(),
        ));
    }
    Ok(quot)
}

fn divide_exact(p: &Polynomial, q: &Polynomial, what: &str) -> Result<Polynomial> {
    let (quot, rem) = p.div_rem(q)?;
    if rem.max_abs() > IDENTITY_TOLERANCE * p.max_abs().max(1.0) {
        return Err(Error::ConstructionMismatch(format!(
            "{what} not divisible by the fixed-pole product (remainder {:.3e})",
            rem.max_abs()
        )));
    }
    Ok(quot)
}

pub fn build_linear_system(problem: &QhjProblem, family: &SolutionFamily) -> Result<LinearSystem> {
    let poles = problem.fixed_poles();
    if family.residues.len() != poles.len() {
        return Err(Error::ConstructionMismatch(format!(
            "{} residues for {} fixed poles",
            family.residues.len(),
            poles.len()
        )));
    }
    let one = Complex64::new(1.0, 0.0);
    let q = problem.pole_product();
    let dq = q.derivative();
    let q2 = &q * &q;
    let mut s = q.scale(family.branch.a0);
    for (i, &b) in family.residues.iter().enumerate() {
        let others: Vec<Complex64> = poles
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &c)| c)
            .collect();
        s = &s + &Polynomial::from_roots(b, &others);
    }
    let t = &(&(&s * &s) + &(&s.derivative() * &q)) - &(&s * &dq);
    let r = problem.rational_part();
    let u0 = polynomial_part(&q2, &r.base)?;
    let u1 = polynomial_part(&q2, &r.slope)?;
    let zero_order = &t + &u0;
    let two_qs = (&q * &s).scale(Complex64::new(2.0, 0.0));

    let n = family.n;
    let mut columns0 = Vec::with_capacity(n + 1);
    let mut columns1 = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let basis = Polynomial::monomial(one, j);
        let d1 = basis.derivative();
        let d2 = d1.derivative();
        let a = &(&(&q2 * &d2) + &(&two_qs * &d1)) + &(&zero_order * &basis);
        let b = &u1 * &basis;
        columns0.push(divide_exact(&a, &q, "energy-free part")?);
        columns1.push(divide_exact(&b, &q, "energy part")?);
    }
    let rows = columns0
        .iter()
        .chain(&columns1)
        .map(|p| p.coeffs().len())
        .max()
        .unwrap_or(0)
        .max(n + 1);
    let fill = |cols: &[Polynomial], range: std::ops::Range<usize>| {
        CMatrix::from_fn(range.len(), n + 1, |i, j| cols[j].coeff(range.start + i))
    };
    let system = LinearSystem {
        m0: fill(&columns0, 0..n + 1),
        m1: fill(&columns1, 0..n + 1),
        surplus0: fill(&columns0, n + 1..rows),
        surplus1: fill(&columns1, n + 1..rows),
    };

    let tol = IDENTITY_TOLERANCE * system.scale();
    let violation = match (family.kind, family.energy) {
        (FamilyKind::Qes, _) => linalg::max_abs(&system.surplus0).max(linalg::max_abs(&system.surplus1)),
        (FamilyKind::Es, Some(e)) => linalg::max_abs(&(&system.surplus0 + &system.surplus1 * e)),
        (FamilyKind::Es, None) => {
            return Err(Error::ConstructionMismatch("ES family without energy".into()))
        }
    };
    if violation > tol {
        return Err(Error::ConstructionMismatch(format!(
            "top-degree identity violated by {violation:.3e}"
        )));
    }
    Ok(system)
}

/// Largest system expanded by cofactors; bigger ones are sampled.
const COFACTOR_MAX_SIZE: usize = 4;

/// `det(M0 + E M1)` as a polynomial in `E`.
///
/// Small systems are expanded by cofactors over the linear entries, which
/// keeps double roots (exceptional points) intact; larger ones are recovered
/// from samples on a circle.
pub fn determinant_polynomial(system: &LinearSystem) -> Result<Polynomial> {
    let size = system.size();
    let p = if size <= COFACTOR_MAX_SIZE {
        let entries: Vec<Vec<Polynomial>> = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| Polynomial::new(vec![system.m0[(i, j)], system.m1[(i, j)]]))
                    .collect()
            })
            .collect();
        let columns: Vec<usize> = (0..size).collect();
        cofactor_determinant(&entries, 0, &columns)
    } else {
        sampled_determinant(system)
    };
    if p.is_zero() || p.degree() == 0 {
        return Err(Error::DegenerateSystem(
            "determinant does not depend on the energy".into(),
        ));
    }
    Ok(p)
}

/// Laplace expansion along `row` over the remaining `columns`.
fn cofactor_determinant(entries: &[Vec<Polynomial>], row: usize, columns: &[usize]) -> Polynomial {
    if columns.is_empty() {
        return Polynomial::one();
    }
    let mut det = Polynomial::zero();
    for (k, &col) in columns.iter().enumerate() {
        let rest: Vec<usize> = columns.iter().copied().filter(|&c| c != col).collect();
        let term = &entries[row][col] * &cofactor_determinant(entries, row + 1, &rest);
        det = if k % 2 == 0 { &det + &term } else { &det - &term };
    }
    det
}

fn sampled_determinant(system: &LinearSystem) -> Polynomial {
    let size = system.size();
    let samples = size + 2;
    let m1_norm = linalg::max_abs(&system.m1);
    let radius = if m1_norm > 0.0 {
        (linalg::max_abs(&system.m0) / m1_norm).max(1.0)
    } else {
        1.0
    };
    let values: Vec<Complex64> = (0..samples)
        .map(|k| {
            let e = Complex64::from_polar(radius, 2.0 * PI * k as f64 / samples as f64);
            linalg::determinant(&system.at(e))
        })
        .collect();
    let coeffs = (0..samples)
        .map(|m| {
            let sum: Complex64 = values
                .iter()
                .enumerate()
                .map(|(k, &v)| v * Complex64::from_polar(1.0, -2.0 * PI * (k * m) as f64 / samples as f64))
                .sum();
            sum / (samples as f64 * radius.powi(m as i32))
        })
        .collect();
    Polynomial::new(coeffs)
}

fn relative_residual(m: &CMatrix, v: &CVector) -> f64 {
    let scale = linalg::max_abs(m).max(f64::MIN_POSITIVE) * v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if m.nrows() == 0 {
        return 0.0;
    }
    (m * v).iter().map(|z| z.norm()).fold(0.0, f64::max) / scale
}

fn eigenpair_from_vector(
    system: &LinearSystem,
    family: &SolutionFamily,
    energy: Complex64,
    v: &CVector,
) -> Result<EigenPair> {
    let n = family.n;
    let lead = v[n];
    let vmax = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if lead.norm() <= 1e-12 * vmax {
        return Err(Error::DegenerateSystem(format!(
            "null vector at E = {energy} has vanishing degree-{n} coefficient"
        )));
    }
    let monic: CVector = v / lead;
    let surplus = &system.surplus0 + &system.surplus1 * energy;
    let diagnostics = Diagnostics {
        system_residual: relative_residual(&system.at(energy), &monic),
        surplus_residual: if surplus.nrows() == 0 {
            0.0
        } else {
            let m = system.at(energy);
            let scale = linalg::max_abs(&m).max(f64::MIN_POSITIVE)
                * monic.iter().map(|z| z.norm()).fold(0.0, f64::max);
            (&surplus * &monic).iter().map(|z| z.norm()).fold(0.0, f64::max) / scale
        },
    };
    let mut coeffs: Vec<Complex64> = monic.iter().copied().collect();
    coeffs[n] = Complex64::new(1.0, 0.0);
    Ok(EigenPair {
        energy,
        moving_polynomial: Polynomial::new(coeffs),
        family: family.clone(),
        diagnostics,
    })
}

/// Energies from `det(M0 + E M1) = 0` for a QES family.
///
/// Solved as the eigenproblem of `-M1^{-1} M0` when `M1` is well conditioned,
/// otherwise by rooting the determinant polynomial. Each null vector of
/// `M(E)` gives the coefficients of `P_n`, normalized to monic.
pub fn solve_qes_spectrum(problem: &QhjProblem, family: &SolutionFamily) -> Result<Vec<EigenPair>> {
    if family.kind != FamilyKind::Qes {
        return Err(Error::ConstructionMismatch("expected a QES family".into()));
    }
    let system = build_linear_system(problem, family)?;
    let energies = match well_conditioned_inverse(&system.m1) {
        Some(inv) => linalg::eigenvalues(&(-(&inv * &system.m0)))?,
        None => polynomial_roots(&determinant_polynomial(&system)?)?,
    };
    energies
        .into_iter()
        .map(|e| {
            let (v, _) = linalg::null_vector(&system.at(e))?;
            eigenpair_from_vector(&system, family, e, &v)
        })
        .collect()
}

/// Energies via the determinant route only; kept as a cross-check.
pub fn qes_energies_by_determinant(problem: &QhjProblem, family: &SolutionFamily) -> Result<Vec<Complex64>> {
    let system = build_linear_system(problem, family)?;
    polynomial_roots(&determinant_polynomial(&system)?)
}

fn well_conditioned_inverse(m: &CMatrix) -> Option<CMatrix> {
    let inv = linalg::inverse(m)?;
    let cond = linalg::max_abs(m) * linalg::max_abs(&inv) * m.nrows() as f64;
    (inv.iter().all(|z| z.re.is_finite() && z.im.is_finite()) && cond < MAX_CONDITION).then_some(inv)
}

/// Eigenpair of an ES family at its matched energy.
///
/// A candidate polynomial (for example from a closed-form recurrence) is
/// accepted if it annihilates `M(E)` to within [`IDENTITY_TOLERANCE`];
/// otherwise, or without a candidate, `P_n` is the null vector of `M(E)`.
pub fn solve_es_spectrum(
    problem: &QhjProblem,
    family: &SolutionFamily,
    candidate: Option<&Polynomial>,
) -> Result<EigenPair> {
    let energy = match (family.kind, family.energy) {
        (FamilyKind::Es, Some(e)) => e,
        _ => return Err(Error::ConstructionMismatch("expected an ES family with energy".into())),
    };
    let system = build_linear_system(problem, family)?;
    if let Some(p) = candidate.filter(|p| !p.is_zero() && p.degree() == family.n) {
        let v = CVector::from_iterator(family.n + 1, p.monic().coeffs().iter().copied());
        if relative_residual(&system.at(energy), &v) <= IDENTITY_TOLERANCE {
            return eigenpair_from_vector(&system, family, energy, &v);
        }
    }
    let (v, _) = linalg::null_vector(&system.at(energy))?;
    eigenpair_from_vector(&system, family, energy, &v)
}
