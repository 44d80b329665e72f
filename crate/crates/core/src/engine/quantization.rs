use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::rational::{polynomial_roots, Polynomial};

pub const MIN_SAMPLES: usize = 1024;
pub const WINDING_TOLERANCE: f64 = 1e-6;
const POLE_CLEARANCE: f64 = 0.5;

/// Number of zeros of `p` enclosed by a circle about the origin, from the
/// trapezoid rule applied to `(1 / 2 pi i) \oint p'/p dz`.
///
/// The radius is raised to at least twice the largest root modulus and then
/// moved outward until the circle keeps [`POLE_CLEARANCE`] from every fixed
/// pole. Returns the integer winding number.
pub fn quantization_check(p: &Polynomial, fixed_poles: &[Complex64], radius: f64) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let max_root = polynomial_roots(p)?
        .iter()
        .map(|r| r.norm())
        .fold(0.0, f64::max);
    let mut rho = radius.max(2.0 * max_root).max(f64::EPSILON);
    while fixed_poles
        .iter()
        .any(|c| (c.norm() - rho).abs() < POLE_CLEARANCE)
    {
        rho += POLE_CLEARANCE;
    }
    let samples = MIN_SAMPLES.max(64 * (p.degree() + 1));
    let winding: Complex64 = (0..samples)
        .map(|k| {
            let z = Complex64::from_polar(rho, 2.0 * PI * k as f64 / samples as f64);
            let (v, dv) = p.eval_with_derivative(z);
            dv / v * z
        })
        .sum::<Complex64>()
        / samples as f64;
    let rounded = winding.re.round();
    if winding.im.abs() > WINDING_TOLERANCE || (winding.re - rounded).abs() > WINDING_TOLERANCE || rounded < 0.0 {
        return Err(Error::NonIntegerWinding(winding.re));
    }
    Ok(rounded as usize)
}
