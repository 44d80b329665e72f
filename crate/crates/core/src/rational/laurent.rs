use std::collections::BTreeMap;

use num_complex::Complex64;

use super::function::{Affine, EnergyAffineRational, RationalFunction};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// Relative size below which a deflation remainder counts as an exact root.
const ROOT_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Center {
    Finite(Complex64),
    Infinity,
}

/// Truncated Laurent expansion. At a finite center `c` the coefficient of
/// order `k` multiplies `(t - c)^k`; at infinity it multiplies `t^k` with
/// `k <= 0`. Coefficients are affine in the energy.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentData {
    pub center: Center,
    pub coefficients: BTreeMap<i32, Affine>,
}

impl LaurentData {
    pub fn coefficient(&self, order: i32) -> Affine {
        self.coefficients.get(&order).copied().unwrap_or_default()
    }

    /// Coefficients at a fixed energy.
    pub fn at_energy(&self, energy: Complex64) -> BTreeMap<i32, Complex64> {
        self.coefficients
            .iter()
            .map(|(&k, a)| (k, a.at(energy)))
            .collect()
    }
}

/// Multiplicity of `center` as a root of `p`, and `p / (t - center)^k`.
pub fn split_root(p: &Polynomial, center: Complex64) -> (usize, Polynomial) {
    let mut order = 0;
    let mut rest = p.clone();
    while rest.degree() > 0 {
        let (q, r) = rest.deflate(center);
        let scale = rest.max_abs() * (1.0 + center.norm()).powi(rest.degree() as i32);
        if r.norm() > ROOT_TOLERANCE * scale {
            break;
        }
        rest = q;
        order += 1;
    }
    (order, rest)
}

/// First `len` Taylor coefficients of `num / den` about `u = 0`, with `den(0) != 0`.
fn series_quotient(num: &[Complex64], den: &[Complex64], len: usize) -> Vec<Complex64> {
    let zero = Complex64::new(0.0, 0.0);
    let at = |v: &[Complex64], k: usize| v.get(k).copied().unwrap_or(zero);
    let d0 = den[0];
    let mut out: Vec<Complex64> = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = at(num, k);
        for j in 1..=k {
            acc -= at(den, j) * out[k - j];
        }
        out.push(acc / d0);
    }
    out
}

fn rational_laurent_at(
    r: &RationalFunction,
    center: Complex64,
    min_order: i32,
) -> Result<BTreeMap<i32, Complex64>> {
    let (pole_order, reduced_den) = split_root(r.den(), center);
    if pole_order > 2 {
        return Err(Error::UnsupportedSingularity {
            center,
            order: pole_order,
        });
    }
    let num = r.num().shift(center);
    let den = reduced_den.shift(center);
    // r = h(u) / u^k with h = num/den analytic at u = 0
    let k = pole_order as i32;
    let len = (k + 1).max(0) as usize;
    let taylor = series_quotient(num.coeffs(), den.coeffs(), len);
    Ok((min_order..=0)
        .map(|order| {
            let idx = order + k;
            let value = if idx < 0 {
                Complex64::new(0.0, 0.0)
            } else {
                taylor[idx as usize]
            };
            (order, value)
        })
        .collect())
}

/// Laurent coefficients of orders `min_order..=0` at a finite point.
///
/// The order `-2` coefficient at a double pole is `h(center)` where `h` is the
/// function with the squared factor divided out, so it is exact up to rounding.
pub fn laurent_at(r: &EnergyAffineRational, center: Complex64, min_order: i32) -> Result<LaurentData> {
    if min_order < -2 {
        return Err(Error::OrderOutOfRange(min_order));
    }
    let base = rational_laurent_at(&r.base, center, min_order)?;
    let slope = rational_laurent_at(&r.slope, center, min_order)?;
    let coefficients = base
        .into_iter()
        .map(|(k, c)| (k, Affine::new(c, slope[&k])))
        .collect();
    Ok(LaurentData {
        center: Center::Finite(center),
        coefficients,
    })
}

fn rational_at_infinity(r: &RationalFunction) -> Result<[Complex64; 3]> {
    let zero = Complex64::new(0.0, 0.0);
    if r.is_zero() {
        return Ok([zero; 3]);
    }
    let (dn, dd) = (r.num().degree(), r.den().degree());
    if dn > dd {
        return Err(Error::UnboundedAtInfinity { num: dn, den: dd });
    }
    // t = 1/u: num/den = rev(num)(u) / rev(den)(u), both padded to degree dd
    let num = r.num().reversed(dd + 1);
    let den = r.den().reversed(dd + 1);
    let s = series_quotient(&num, &den, 3);
    Ok([s[0], s[1], s[2]])
}

/// `r0 + r1/t + r2/t^2` expansion at infinity, stored under orders 0, -1, -2.
pub fn expansion_at_infinity(r: &EnergyAffineRational) -> Result<LaurentData> {
    let base = rational_at_infinity(&r.base)?;
    let slope = rational_at_infinity(&r.slope)?;
    let coefficients = (0..3)
        .map(|k| (-(k as i32), Affine::new(base[k], slope[k])))
        .collect();
    Ok(LaurentData {
        center: Center::Infinity,
        coefficients,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rf(num: &[f64], den: &[f64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_real(num), Polynomial::from_real(den)).unwrap()
    }

    fn energy_free(r: RationalFunction) -> EnergyAffineRational {
        EnergyAffineRational::new(r, RationalFunction::zero())
    }

    #[test]
    fn double_pole_leading_coefficient() {
        // (t^2 + 2) / (4 (t^2 - 1)^2)
        let r = energy_free(rf(&[2.0, 0.0, 1.0], &[4.0, 0.0, -8.0, 0.0, 4.0]));
        let l = laurent_at(&r, c(1.0, 0.0), -2).unwrap();
        assert!((l.coefficient(-2).constant - c(3.0 / 16.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn simple_pole_residue() {
        let r = energy_free(rf(&[1.0], &[-1.0, 0.0, 1.0]));
        let l = laurent_at(&r, c(1.0, 0.0), -2).unwrap();
        assert!(l.coefficient(-2).constant.norm() < 1e-15);
        assert!((l.coefficient(-1).constant - c(0.5, 0.0)).norm() < 1e-14);
        // regular part: 1/(t+1) - 1/2 ... the constant term of 1/((u)(u+2)) is -1/4
        assert!((l.coefficient(0).constant - c(-0.25, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn regular_point_is_taylor() {
        let r = energy_free(rf(&[1.0], &[-1.0, 0.0, 1.0]));
        let l = laurent_at(&r, c(0.0, 0.0), -2).unwrap();
        assert!(l.coefficient(-1).constant.norm() < 1e-15);
        assert!((l.coefficient(0).constant - c(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn triple_pole_rejected() {
        let r = energy_free(rf(&[1.0], &[-1.0, 3.0, -3.0, 1.0]));
        assert!(matches!(
            laurent_at(&r, c(1.0, 0.0), -2),
            Err(Error::UnsupportedSingularity { order: 3, .. })
        ));
        assert!(matches!(laurent_at(&r, c(1.0, 0.0), -3), Err(Error::OrderOutOfRange(-3))));
    }

    #[test]
    fn infinity_of_zero_and_unbounded() {
        let l = expansion_at_infinity(&energy_free(RationalFunction::zero())).unwrap();
        for k in [0, -1, -2] {
            assert!(l.coefficient(k).is_zero(0.0));
        }
        let r = energy_free(rf(&[0.0, 0.0, 1.0], &[1.0, 1.0]));
        assert!(matches!(
            expansion_at_infinity(&r),
            Err(Error::UnboundedAtInfinity { num: 2, den: 1 })
        ));
    }

    #[test]
    fn infinity_expansion_of_simple_ratio() {
        // (2t + 1)/(t - 1) = 2 + 3/t + 3/t^2 + ...
        let l = expansion_at_infinity(&energy_free(rf(&[1.0, 2.0], &[-1.0, 1.0]))).unwrap();
        assert!((l.coefficient(0).constant - c(2.0, 0.0)).norm() < 1e-14);
        assert!((l.coefficient(-1).constant - c(3.0, 0.0)).norm() < 1e-14);
        assert!((l.coefficient(-2).constant - c(3.0, 0.0)).norm() < 1e-14);
    }
}
