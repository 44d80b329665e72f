#![allow(dead_code)]

use qhj::models::{KhareMandalParams, Model, ModelSpectrum, ScarfParams, DEFAULT_N_MAX};
use qhj::Complex64;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn r(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn khare_mandal(zeta: f64, m: u32) -> Model {
    Model::KhareMandal(KhareMandalParams::new(zeta, m).unwrap())
}

pub fn scarf(a: f64, b: f64) -> Model {
    Model::Scarf2(ScarfParams::new(a, b).unwrap())
}

pub fn solve(model: &Model) -> ModelSpectrum {
    model.solve(DEFAULT_N_MAX).unwrap()
}

/// Every expected value has a distinct partner within `tol`.
pub fn same_multiset(actual: &[Complex64], expected: &[Complex64], tol: f64) -> bool {
    if actual.len() != expected.len() {
        return false;
    }
    let mut used = vec![false; actual.len()];
    expected.iter().all(|e| {
        let hit = (0..actual.len())
            .filter(|&i| !used[i])
            .min_by(|&a, &b| (actual[a] - e).norm().total_cmp(&(actual[b] - e).norm()));
        match hit {
            Some(i) if (actual[i] - e).norm() <= tol => {
                used[i] = true;
                true
            }
            _ => false,
        }
    })
}

/// Numbers consumed by [`random_problem`].
pub const RANDOM_PROBLEM_INPUTS: usize = 20;

/// Energy-affine problem with double poles at two random points `c1`, `c2`:
/// `N(v) / ((v - c1)^2 (v - c2)^2) + E L(v) / ((v - c1)(v - c2))` with
/// `deg N <= 4`, `deg L <= 2`.
pub struct RandomProblem {
    pub problem: qhj::engine::QhjProblem,
    pub poles: [Complex64; 2],
    num: qhj::rational::Polynomial,
    lin: qhj::rational::Polynomial,
}

impl RandomProblem {
    /// Evaluates the factored form, independent of the expanded denominator.
    pub fn eval(&self, t: Complex64, energy: Complex64) -> Complex64 {
        let [c1, c2] = self.poles;
        let q = (t - c1) * (t - c2);
        self.num.eval(t) / (q * q) + energy * self.lin.eval(t) / q
    }

    /// Exact order `-2` coefficients `N(c1) / (c1 - c2)^2`, `N(c2) / (c2 - c1)^2`.
    pub fn leading(&self) -> [(Complex64, Complex64); 2] {
        let [c1, c2] = self.poles;
        [(c1, self.num.eval(c1) / (c1 - c2).powi(2)), (c2, self.num.eval(c2) / (c2 - c1).powi(2))]
    }
}

pub fn random_problem(x: &[f64; RANDOM_PROBLEM_INPUTS]) -> RandomProblem {
    use qhj::engine::{QhjProblem, VariableMap};
    use qhj::rational::{EnergyAffineRational, Polynomial, RationalFunction};

    let c1 = c(x[0], x[1]);
    let mut c2 = c(x[2], x[3]);
    if (c1 - c2).norm() < 0.5 {
        c2 += 1.0;
    }
    let num = Polynomial::new((0..5).map(|k| c(x[4 + 2 * k], x[5 + 2 * k])).collect());
    let lin = Polynomial::new((0..3).map(|k| c(x[14 + 2 * k], x[15 + 2 * k])).collect());
    let q = Polynomial::from_roots(r(1.0), &[c1, c2]);
    let base = RationalFunction::new(num.clone(), &q * &q).unwrap();
    let slope = RationalFunction::new(lin.clone(), q).unwrap();
    let problem = QhjProblem::new(
        EnergyAffineRational::new(base, slope),
        vec![c1, c2],
        VariableMap::CoshTwoX,
        "random",
    )
    .unwrap();
    RandomProblem {
        problem,
        poles: [c1, c2],
        num,
        lin,
    }
}
