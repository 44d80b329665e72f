use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative threshold below which leading coefficients are trimmed.
pub const TRIM_TOLERANCE: f64 = 1e-12;

/// Dense polynomial with complex coefficients, lowest degree first.
///
/// Always kept in canonical form: the leading coefficient is nonzero unless
/// the polynomial is identically zero, in which case `coeffs` is empty.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Complex64>", into = "Vec<Complex64>")]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    /// Builds a canonical polynomial. Panics on non-finite coefficients;
    /// use [`Polynomial::try_new`] for untrusted input.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        Self::try_new(coeffs).expect("polynomial coefficients must be finite")
    }

    pub fn try_new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::NonFinite("polynomial coefficients"));
        }
        let mut p = Self { coeffs };
        p.trim();
        Ok(p)
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: Complex64, k: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `t - root`
    pub fn linear(root: Complex64) -> Self {
        Self::new(vec![-root, Complex64::new(1.0, 0.0)])
    }

    /// `lead * prod (t - r_i)`
    pub fn from_roots(lead: Complex64, roots: &[Complex64]) -> Self {
        roots
            .iter()
            .fold(Self::constant(lead), |acc, &r| &acc * &Self::linear(r))
    }

    fn trim(&mut self) {
        let scale = self.max_abs();
        if scale == 0.0 {
            self.coeffs.clear();
            return;
        }
        while let Some(last) = self.coeffs.last() {
            if last.norm() <= TRIM_TOLERANCE * scale {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `t^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs.last().copied().unwrap_or_default()
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn eval(&self, t: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * t + c)
    }

    /// Value and first derivative by a single Horner pass.
    pub fn eval_with_derivative(&self, t: Complex64) -> (Complex64, Complex64) {
        let zero = Complex64::new(0.0, 0.0);
        self.coeffs.iter().rev().fold((zero, zero), |(p, dp), &c| (p * t + c, dp * t + p))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    /// Divides by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.leading().inv())
    }

    /// Taylor shift: coefficients of `p(u + center)` as a polynomial in `u`.
    pub fn shift(&self, center: Complex64) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let hi = c[j + 1];
                c[j] += center * hi;
            }
        }
        Self::new(c)
    }

    /// Euclidean division, returning `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() < divisor.degree() || self.is_zero() {
            return Ok((Self::zero(), self.clone()));
        }
        let dlead = divisor.leading();
        let dd = divisor.degree();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Complex64::new(0.0, 0.0); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let q = rem[k + dd] / dlead;
            quot[k] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= q * d;
            }
        }
        rem.truncate(dd);
        // the remainder is trimmed relative to the dividend, not to itself
        let scale = self.max_abs();
        if rem.iter().all(|r| r.norm() <= TRIM_TOLERANCE * scale) {
            rem.clear();
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Synthetic division by `(t - root)`; returns quotient and remainder value.
    pub fn deflate(&self, root: Complex64) -> (Self, Complex64) {
        if self.is_zero() {
            return (Self::zero(), Complex64::new(0.0, 0.0));
        }
        let n = self.coeffs.len();
        let mut quot = vec![Complex64::new(0.0, 0.0); n - 1];
        let mut carry = self.coeffs[n - 1];
        for k in (0..n - 1).rev() {
            quot[k] = carry;
            carry = self.coeffs[k] + carry * root;
        }
        (Self::new(quot), carry)
    }

    /// Reversed coefficient list padded to `len`; used for expansions in `1/t`.
    pub(crate) fn reversed(&self, len: usize) -> Vec<Complex64> {
        let mut c = self.coeffs.clone();
        c.resize(len, Complex64::new(0.0, 0.0));
        c.reverse();
        c
    }
}

impl TryFrom<Vec<Complex64>> for Polynomial {
    type Error = Error;

    fn try_from(coeffs: Vec<Complex64>) -> Result<Self> {
        Self::try_new(coeffs)
    }
}

impl From<Polynomial> for Vec<Complex64> {
    fn from(p: Polynomial) -> Self {
        p.coeffs
    }
}

impl Default for Polynomial {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.norm() > 0.0)
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})t"),
                _ => format!("({c})t^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
