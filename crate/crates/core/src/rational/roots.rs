use num_complex::Complex64;

use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix};

/// Roots with multiplicity.
///
/// Degrees one and two use closed formulas (the quadratic in its
/// cancellation-free form); higher degrees take the eigenvalues of the
/// companion matrix followed by one Newton step per root, kept only when it
/// lowers `|p|`. A nonzero constant has no roots.
pub fn polynomial_roots(p: &Polynomial) -> Result<Vec<Complex64>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    match p.degree() {
        0 => Ok(Vec::new()),
        1 => Ok(vec![-p.coeff(0) / p.coeff(1)]),
        2 => Ok(quadratic_roots(p.coeff(2), p.coeff(1), p.coeff(0)).to_vec()),
        n => {
            let lead = p.leading();
            let mut companion = CMatrix::zeros(n, n);
            for i in 1..n {
                companion[(i, i - 1)] = Complex64::new(1.0, 0.0);
            }
            for i in 0..n {
                companion[(i, n - 1)] = -p.coeff(i) / lead;
            }
            let roots = linalg::eigenvalues(&companion)?;
            Ok(roots.into_iter().map(|r| newton_polish(p, r)).collect())
        }
    }
}

/// Roots of `a z^2 + b z + c` with `a != 0`.
pub fn quadratic_roots(a: Complex64, b: Complex64, c: Complex64) -> [Complex64; 2] {
    let disc = (b * b - 4.0 * a * c).sqrt();
    let (plus, minus) = (b + disc, b - disc);
    let q = -0.5 * if plus.norm() >= minus.norm() { plus } else { minus };
    if q.norm() == 0.0 {
        return [Complex64::new(0.0, 0.0); 2];
    }
    [q / a, c / q]
}

fn newton_polish(p: &Polynomial, r: Complex64) -> Complex64 {
    let (v, dv) = p.eval_with_derivative(r);
    if dv.norm() == 0.0 {
        return r;
    }
    let candidate = r - v / dv;
    if candidate.re.is_finite() && candidate.im.is_finite() && p.eval(candidate).norm() < v.norm() {
        candidate
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn difference_of_squares() {
        let mut r = polynomial_roots(&Polynomial::from_real(&[-1.0, 0.0, 1.0])).unwrap();
        r.sort_by(|a, b| a.re.total_cmp(&b.re));
        assert!((r[0] - c(-1.0, 0.0)).norm() < 1e-15);
        assert!((r[1] - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn zero_polynomial_is_error() {
        assert!(matches!(polynomial_roots(&Polynomial::zero()), Err(Error::ZeroPolynomial)));
        assert!(polynomial_roots(&Polynomial::one()).unwrap().is_empty());
    }

    #[test]
    fn quadratic_without_cancellation() {
        // roots 1e8 and 1e-8
        let [r1, r2] = quadratic_roots(c(1.0, 0.0), c(-1e8 - 1e-8, 0.0), c(1.0, 0.0));
        let (big, small) = if r1.norm() > r2.norm() { (r1, r2) } else { (r2, r1) };
        assert!((big - c(1e8, 0.0)).norm() / 1e8 < 1e-15);
        assert!((small - c(1e-8, 0.0)).norm() / 1e-8 < 1e-14);
    }

    #[test]
    fn companion_route_cubic() {
        let roots = [c(1.0, 2.0), c(-0.5, 0.0), c(3.0, -1.0)];
        let p = Polynomial::from_roots(c(2.0, -1.0), &roots);
        let found = polynomial_roots(&p).unwrap();
        assert_eq!(found.len(), 3);
        for r in roots {
            assert!(found.iter().any(|f| (f - r).norm() < 1e-10));
        }
    }
}
