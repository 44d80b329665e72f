use num_complex::Complex64;

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 60;

/// `sqrt(a^2 + b^2)` for complex arguments, scaled against overflow.
fn hypot(a: Complex64, b: Complex64) -> Complex64 {
    let s = a.norm().max(b.norm());
    if s == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let (a, b) = (a / s, b / s);
    (a * a + b * b).sqrt() * s
}

/// Eigenvalues of a complex symmetric tridiagonal matrix.
///
/// Implicit QL with Wilkinson shifts, using complex orthogonal rotations
/// (`c^2 + s^2 = 1`) in place of unitary ones so that the iterates stay
/// complex symmetric. `diag` has length `n`, `off` length `n - 1`.
pub fn symmetric_tridiagonal_eigenvalues(mut d: Vec<Complex64>, off: Vec<Complex64>) -> Result<Vec<Complex64>> {
    let n = d.len();
    if n == 0 {
        return Ok(d);
    }
    if off.len() + 1 != n {
        return Err(Error::InvalidParameter(format!(
            "off-diagonal length {} for dimension {n}",
            off.len()
        )));
    }
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let mut e = off;
    e.push(zero);

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].norm() + d[m + 1].norm();
                if e[m].norm() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS {
                return Err(Error::NoConvergence(format!("tridiagonal QL at index {l}")));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = hypot(g, one);
            let shift_den = if (g + r).norm() >= (g - r).norm() { g + r } else { g - r };
            g = d[m] - d[l] + e[l] / shift_den;
            let (mut s, mut c, mut p) = (one, one, zero);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = hypot(f, g);
                e[i + 1] = r;
                if r.norm() == 0.0 {
                    d[i + 1] -= p;
                    e[m] = zero;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = zero;
            if d.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::NoConvergence("tridiagonal QL produced non-finite values".into()));
            }
        }
    }
    Ok(d)
}
