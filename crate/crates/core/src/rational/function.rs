use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// Ratio of two polynomials, stored with a monic denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let lead = den.leading().inv();
        Ok(Self {
            num: num.scale(lead),
            den: den.scale(lead),
        })
    }

    pub fn zero() -> Self {
        Self::from_polynomial(Polynomial::zero())
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn eval(&self, t: Complex64) -> Complex64 {
        self.num.eval(t) / self.den.eval(t)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        RationalFunction {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &rhs.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

/// A complex number that depends affinely on the energy: `constant + E * slope`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Affine {
    pub constant: Complex64,
    pub slope: Complex64,
}

impl Affine {
    pub fn new(constant: Complex64, slope: Complex64) -> Self {
        Self { constant, slope }
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(c, Complex64::new(0.0, 0.0))
    }

    pub fn at(&self, energy: Complex64) -> Complex64 {
        self.constant + energy * self.slope
    }

    pub fn is_energy_independent(&self, tol: f64) -> bool {
        self.slope.norm() <= tol
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.constant.norm() <= tol && self.slope.norm() <= tol
    }
}

/// `R_E(t) = base(t) + E * slope(t)`.
///
/// Only affine energy dependence is representable, which covers both
/// potentials handled by this crate.
#[derive(Clone, Debug, PartialEq)]
pub struct EnergyAffineRational {
    pub base: RationalFunction,
    pub slope: RationalFunction,
}

impl EnergyAffineRational {
    pub fn new(base: RationalFunction, slope: RationalFunction) -> Self {
        Self { base, slope }
    }

    pub fn eval(&self, t: Complex64, energy: Complex64) -> Complex64 {
        self.base.eval(t) + energy * self.slope.eval(t)
    }

    pub fn eval_affine(&self, t: Complex64) -> Affine {
        Affine::new(self.base.eval(t), self.slope.eval(t))
    }

    /// Fixes the energy, collapsing to a single rational function.
    pub fn at_energy(&self, energy: Complex64) -> RationalFunction {
        &self.base + &self.slope.scale(energy)
    }
}
