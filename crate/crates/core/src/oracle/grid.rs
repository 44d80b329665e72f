use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::tridiagonal::symmetric_tridiagonal_eigenvalues;
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix};

pub const DEFAULT_HALF_WIDTH: f64 = 8.0;
pub const DEFAULT_POINTS: usize = 800;

/// Interior nodes `x_j = -L + j h`, `j = 1..=N`, `h = 2L / (N + 1)`, with
/// Dirichlet conditions at `+/-L`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    half_width: f64,
    points: usize,
}

impl Grid {
    pub fn new(half_width: f64, points: usize) -> Result<Self> {
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(Error::InvalidParameter(format!("half-width must be positive, got {half_width}")));
        }
        if points < 3 {
            return Err(Error::InvalidParameter(format!("need at least 3 grid points, got {points}")));
        }
        Ok(Self { half_width, points })
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / (self.points + 1) as f64
    }

    pub fn node(&self, j: usize) -> f64 {
        -self.half_width + (j + 1) as f64 * self.spacing()
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.points).map(|j| self.node(j))
    }

    /// Same interval with the spacing halved (`N -> 2N + 1`).
    pub fn refined(&self) -> Self {
        Self {
            half_width: self.half_width,
            points: 2 * self.points + 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EigenMethod {
    /// Complex-symmetric tridiagonal QL with implicit shifts.
    TridiagonalQl,
    /// Dense Hessenberg + shifted QR.
    DenseSchur,
}

/// Three-point discretization of `-psi'' + V psi` on a [`Grid`].
///
/// The matrix is complex symmetric and tridiagonal, so only its diagonal
/// and the constant off-diagonal `-1/h^2` are stored.
#[derive(Clone, Debug)]
pub struct GridOracle {
    pub grid: Grid,
    pub diagonal: Vec<Complex64>,
    pub off_diagonal: f64,
    /// Sorted by real part.
    pub spectrum: Vec<Complex64>,
    pub method: EigenMethod,
}

impl GridOracle {
    pub fn dense_matrix(&self) -> CMatrix {
        let n = self.diagonal.len();
        CMatrix::from_fn(n, n, |i, j| {
            if i == j {
                self.diagonal[i]
            } else if i.abs_diff(j) == 1 {
                Complex64::new(self.off_diagonal, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    /// The `count` eigenvalues nearest to `target`.
    pub fn nearest(&self, target: Complex64, count: usize) -> Vec<Complex64> {
        let mut s = self.spectrum.clone();
        s.sort_by(|a, b| (a - target).norm().total_cmp(&(b - target).norm()));
        s.truncate(count);
        s
    }
}

pub fn discretize(potential: impl Fn(f64) -> Complex64, grid: Grid) -> Result<GridOracle> {
    discretize_with(potential, grid, EigenMethod::TridiagonalQl)
}

/// As [`discretize`], choosing the eigensolver. The tridiagonal solver falls
/// back to the dense one if it fails to converge.
pub fn discretize_with(potential: impl Fn(f64) -> Complex64, grid: Grid, method: EigenMethod) -> Result<GridOracle> {
    let h = grid.spacing();
    let kinetic = 2.0 / (h * h);
    let diagonal: Vec<Complex64> = grid
        .nodes()
        .map(|x| {
            let v = potential(x);
            if v.re.is_finite() && v.im.is_finite() {
                Ok(v + kinetic)
            } else {
                Err(Error::NonFinite("potential on grid nodes"))
            }
        })
        .collect::<Result<_>>()?;
    let mut oracle = GridOracle {
        grid,
        diagonal,
        off_diagonal: -1.0 / (h * h),
        spectrum: Vec::new(),
        method,
    };
    let spectrum = match method {
        EigenMethod::TridiagonalQl => {
            let off = vec![Complex64::new(oracle.off_diagonal, 0.0); grid.points() - 1];
            match symmetric_tridiagonal_eigenvalues(oracle.diagonal.clone(), off) {
                Ok(s) => s,
                Err(_) => {
                    oracle.method = EigenMethod::DenseSchur;
                    dense_spectrum(&oracle)?
                }
            }
        }
        EigenMethod::DenseSchur => dense_spectrum(&oracle)?,
    };
    oracle.spectrum = spectrum;
    oracle.spectrum.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(oracle)
}

fn dense_spectrum(oracle: &GridOracle) -> Result<Vec<Complex64>> {
    linalg::eigenvalues(&oracle.dense_matrix()).map_err(|e| {
        Error::NoConvergence(format!(
            "{e} (grid N = {}, L = {}, h = {:.4e})",
            oracle.grid.points(),
            oracle.grid.half_width(),
            oracle.grid.spacing()
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn grid_geometry() {
        let g = Grid::new(1.0, 3).unwrap();
        assert_eq!(g.spacing(), 0.5);
        assert_eq!(g.nodes().collect::<Vec<_>>(), vec![-0.5, 0.0, 0.5]);
        assert!(Grid::new(1.0, 2).is_err());
        assert!(Grid::new(0.0, 10).is_err());
        assert_eq!(g.refined().spacing(), 0.25);
    }

    #[test]
    fn particle_in_a_box() {
        let oracle = discretize(|_| Complex64::new(0.0, 0.0), Grid::new(1.0, 400).unwrap()).unwrap();
        let ground = oracle.spectrum[0];
        let exact = (PI / 2.0).powi(2);
        assert!((ground.re - exact).abs() / exact < 0.01);
        assert!(ground.im.abs() < 1e-9);
        assert_eq!(oracle.spectrum.len(), 400);
    }

    #[test]
    fn tridiagonal_agrees_with_dense() {
        let v = |x: f64| Complex64::new(-4.0 / x.cosh().powi(2), 2.0 * x.tanh() / x.cosh());
        let grid = Grid::new(6.0, 120).unwrap();
        let fast = discretize_with(v, grid, EigenMethod::TridiagonalQl).unwrap();
        assert_eq!(fast.method, EigenMethod::TridiagonalQl);
        let dense = discretize_with(v, grid, EigenMethod::DenseSchur).unwrap();
        for e in &dense.spectrum {
            let nearest = fast.nearest(*e, 1)[0];
            assert!((nearest - e).norm() < 1e-8 * e.norm().max(1.0), "{e} vs {nearest}");
        }
    }

    #[test]
    fn rejects_non_finite_potential() {
        let r = discretize(|_| Complex64::new(f64::INFINITY, 0.0), Grid::new(1.0, 5).unwrap());
        assert!(r.is_err());
    }
}
