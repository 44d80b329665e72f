//! Small dense complex linear algebra on top of nalgebra.

use nalgebra::{DMatrix, DVector, Schur};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

const SCHUR_EPS: f64 = 1e-14;
const SCHUR_MAX_ITER: usize = 10_000;

/// All eigenvalues of a general complex square matrix (Hessenberg + shifted QR).
pub fn eigenvalues(m: &CMatrix) -> Result<Vec<Complex64>> {
    let n = m.nrows();
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![m[(0, 0)]]);
    }
    let schur = Schur::try_new(m.clone(), SCHUR_EPS, SCHUR_MAX_ITER)
        .ok_or_else(|| Error::NoConvergence(format!("Schur decomposition of {n}x{n} matrix")))?;
    let (_, t) = schur.unpack();
    Ok((0..n).map(|i| t[(i, i)]).collect())
}

/// Unit-norm vector spanning the (numerical) null space, plus the ratio of the
/// smallest to the largest singular value.
pub fn null_vector(m: &CMatrix) -> Result<(CVector, f64)> {
    let n = m.ncols();
    if n == 0 {
        return Err(Error::DegenerateSystem("empty matrix".into()));
    }
    if n == 1 {
        return Ok((CVector::from_element(1, Complex64::new(1.0, 0.0)), m[(0, 0)].norm()));
    }
    // pad to square so the SVD exposes all right singular vectors
    let rows = m.nrows().max(n);
    let mut sq = CMatrix::zeros(rows, n);
    sq.view_mut((0, 0), (m.nrows(), n)).copy_from(m);
    let svd = sq.svd(false, true);
    let v_t = svd
        .v_t
        .ok_or_else(|| Error::NoConvergence("SVD right vectors".into()))?;
    let (imin, smin) = svd
        .singular_values
        .iter()
        .copied()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("nonempty");
    let smax = svd.singular_values.max();
    let v = v_t.row(imin).adjoint();
    let rel = if smax > 0.0 { smin / smax } else { 0.0 };
    Ok((v, rel))
}

pub fn determinant(m: &CMatrix) -> Complex64 {
    if m.nrows() == 0 {
        return Complex64::new(1.0, 0.0);
    }
    m.clone().lu().determinant()
}

pub fn inverse(m: &CMatrix) -> Option<CMatrix> {
    m.clone().try_inverse()
}

/// Largest entry magnitude.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
