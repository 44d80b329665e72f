use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::rational::Polynomial;

/// Relative size below which the recurrence's leading factor counts as zero.
const DEGENERACY_TOLERANCE: f64 = 1e-12;

/// Jacobi polynomial `P_n^(alpha, beta)(z)` in the standard normalization,
/// built by the three-term recurrence with complex parameters.
pub fn jacobi_polynomial(alpha: Complex64, beta: Complex64, n: usize) -> Result<Polynomial> {
    let one = Complex64::new(1.0, 0.0);
    let mut prev = Polynomial::one();
    if n == 0 {
        return Ok(prev);
    }
    let ab = alpha + beta;
    let mut curr = Polynomial::new(vec![(alpha - beta) / 2.0, (ab + 2.0) / 2.0]);
    for k in 2..=n {
        let k = k as f64;
        let s = 2.0 * k + ab;
        let a1 = 2.0 * k * (k + ab) * (s - 2.0);
        let a2 = (s - 1.0) * (alpha * alpha - beta * beta);
        let a3 = (s - 2.0) * (s - 1.0) * s;
        let a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * s;
        let scale = a2.norm().max(a3.norm()).max(a4.norm()).max(1.0);
        if a1.norm() <= DEGENERACY_TOLERANCE * scale {
            return Err(Error::DegenerateRecurrence { degree: k as usize });
        }
        let linear = Polynomial::new(vec![a2, a3]);
        let next = (&(&linear * &curr) - &prev.scale(a4)).scale(one / a1);
        prev = std::mem::replace(&mut curr, next);
    }
    Ok(curr)
}

/// Largest coefficient of
/// `(1 - z^2) P'' + (beta - alpha - (alpha + beta + 2) z) P' + n (n + alpha + beta + 1) P`
/// relative to the largest coefficient among its three terms.
pub fn jacobi_ode_residual(p: &Polynomial, alpha: Complex64, beta: Complex64, n: usize) -> f64 {
    let d1 = p.derivative();
    let d2 = d1.derivative();
    let second = &Polynomial::from_real(&[1.0, 0.0, -1.0]) * &d2;
    let first = &Polynomial::new(vec![beta - alpha, -(alpha + beta + 2.0)]) * &d1;
    let nf = n as f64;
    let zeroth = p.scale(nf * (nf + alpha + beta + 1.0));
    let total = &(&second + &first) + &zeroth;
    let scale = second.max_abs().max(first.max_abs()).max(zeroth.max_abs());
    if scale == 0.0 {
        return 0.0;
    }
    total.max_abs() / scale
}
