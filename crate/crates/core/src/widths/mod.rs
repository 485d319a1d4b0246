//! Distances between subspaces and truncated cylinder-ellipsoids.
//!
//! Coordinates are split as `(a, f)`: `a` runs over the unconstrained
//! (cylinder) axes and `f` over the ellipsoid axes with
//! `Σ λ_j f_j² ≤ 1`. A subspace misses the set by a finite amount only if it
//! contains every cylinder axis.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::disk::DiskSpectrum;
use crate::numkernel::linalg::householder_qr;
use crate::numkernel::sym_eig;
use crate::spectrum1d::Spectrum1D;
use crate::{Error, ExtReal, Result};

mod experiments;
mod jacobi;

pub use experiments::{
    diagonal_perturbation_probe, extremality_experiment, missing_axis_distances,
    unbounded_distance_demo, PerturbationRecord, UnboundedDemo, WidthMethod, WidthReport, WidthRow,
    LOWER_BOUND_SLACK,
};
pub use jacobi::{determinant, jacobi_matrix_check, JacobiCheck, Polynomial2, DISPLAYED_MATRIX};

pub const ORTHONORMAL_TOL: f64 = 1e-12;
/// Residual of a cylinder axis above which the axis counts as missed.
pub const AXIS_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TruncatedEllipsoid {
    lambdas: Vec<f64>,
    n_free: usize,
}

impl TruncatedEllipsoid {
    pub fn new(lambdas: Vec<f64>, n_free: usize) -> Result<Self> {
        if lambdas.is_empty() {
            return Err(Error::Size("ellipsoid needs at least one axis".into()));
        }
        if lambdas.iter().any(|&l| !(l > 0.0) || !l.is_finite()) {
            return Err(Error::Domain("ellipsoid eigenvalues must be positive".into()));
        }
        if lambdas.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::Domain("ellipsoid eigenvalues must be ascending".into()));
        }
        Ok(Self { lambdas, n_free })
    }

    /// The first `k` positive eigenvalues of a 1D spectrum with its `p`
    /// kernel axes.
    pub fn from_spectrum_1d(spectrum: &Spectrum1D, k: usize) -> Result<Self> {
        let positive = spectrum.positive_eigenvalues();
        if k > positive.len() {
            return Err(Error::Range(format!("{k} axes requested, {} available", positive.len())));
        }
        Self::new(positive[..k].to_vec(), spectrum.null_dim)
    }

    /// The first `k` merged eigenvalues of a free disk spectrum with one
    /// cylinder axis per null-basis function and angular factor.
    pub fn from_disk(spectrum: &DiskSpectrum, k: usize) -> Result<Self> {
        if k > spectrum.merged.len() {
            return Err(Error::Range(format!(
                "{k} axes requested, {} available",
                spectrum.merged.len()
            )));
        }
        let n_free = spectrum
            .null_basis
            .iter()
            .map(|m| m.coeffs.ncols() * crate::disk::Parity::of_mode(m.l).len())
            .sum();
        Self::new(spectrum.merged[..k].iter().map(|e| e.eigenvalue).collect(), n_free)
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    pub fn n_free(&self) -> usize {
        self.n_free
    }

    pub fn n_bound(&self) -> usize {
        self.lambdas.len()
    }

    pub fn dim(&self) -> usize {
        self.n_free + self.lambdas.len()
    }

    /// Eigenvalues multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(self.lambdas.iter().map(|l| l * factor).collect(), self.n_free)
    }

    /// `1/√λ_{N+1}` for `N` approximating directions beyond the cylinder.
    pub fn width(&self, n: usize) -> Result<f64> {
        self.lambdas
            .get(n)
            .map(|l| 1.0 / l.sqrt())
            .ok_or_else(|| Error::Range(format!("width d_{n} needs {} axes", n + 1)))
    }

    /// Cylinder axes together with the first `n` ellipsoid axes.
    pub fn extremal_subspace(&self, n: usize) -> Result<Subspace> {
        if n > self.n_bound() {
            return Err(Error::Range(format!("{n} ellipsoid axes requested")));
        }
        let axes: Vec<usize> = (0..self.n_free + n).collect();
        Subspace::axes(self.dim(), &axes)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Subspace {
    basis: DMatrix<f64>,
}

impl Subspace {
    /// Wraps a matrix with orthonormal columns.
    pub fn new(basis: DMatrix<f64>) -> Result<Self> {
        let k = basis.ncols();
        let gram = basis.transpose() * &basis;
        let err = (gram - DMatrix::identity(k, k)).amax();
        if err > ORTHONORMAL_TOL {
            return Err(Error::Domain(format!(
                "basis is not orthonormal: |BᵀB - I| = {err:e}"
            )));
        }
        Ok(Self { basis })
    }

    /// Orthonormalizes the columns of `m`, which must be linearly
    /// independent.
    pub fn from_columns(m: &DMatrix<f64>) -> Result<Self> {
        let (rows, cols) = m.shape();
        if cols > rows {
            return Err(Error::Shape(format!("{cols} columns in dimension {rows}")));
        }
        if cols == 0 {
            return Ok(Self {
                basis: DMatrix::zeros(rows, 0),
            });
        }
        let (q, r) = householder_qr(m);
        let scale = (0..cols).map(|i| r[(i, i)].abs()).fold(0.0, f64::max);
        if let Some(i) = (0..cols).find(|&i| r[(i, i)].abs() <= 1e-12 * scale) {
            return Err(Error::RankDeficient {
                pivot: i,
                value: r[(i, i)],
                scale,
            });
        }
        Self::new(q.columns(0, cols).into_owned())
    }

    /// Span of the given coordinate axes.
    pub fn axes(dim: usize, axes: &[usize]) -> Result<Self> {
        let mut b = DMatrix::zeros(dim, axes.len());
        for (j, &a) in axes.iter().enumerate() {
            if a >= dim {
                return Err(Error::Range(format!("axis {a} in dimension {dim}")));
            }
            b[(a, j)] = 1.0;
        }
        Self::new(b)
    }

    pub fn basis(&self) -> &DMatrix<f64> {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.nrows()
    }

    /// `y - B Bᵀ y`.
    pub fn residual(&self, y: &DVector<f64>) -> Result<DVector<f64>> {
        if y.len() != self.ambient_dim() {
            return Err(Error::Shape(format!(
                "point of dimension {} for a subspace of R^{}",
                y.len(),
                self.ambient_dim()
            )));
        }
        Ok(y - &self.basis * (self.basis.transpose() * y))
    }
}

/// `‖(I - B Bᵀ) y‖`.
pub fn dist_to_subspace(y: &DVector<f64>, sub: &Subspace) -> Result<f64> {
    Ok(sub.residual(y)?.norm())
}

/// `sup` over the cylinder-ellipsoid of the distance to `sub`.
///
/// Infinite when some cylinder axis leaves a residual above [`AXIS_TOL`].
/// Otherwise the square root of the largest eigenvalue of
/// `Λ^{-1/2} P Λ^{-1/2}`, `P` the projector `I - B Bᵀ` restricted to the
/// ellipsoid axes.
pub fn dist_subspace_to_ellipsoid(sub: &Subspace, ell: &TruncatedEllipsoid) -> Result<ExtReal> {
    let dim = ell.dim();
    if sub.ambient_dim() != dim {
        return Err(Error::Shape(format!(
            "subspace of R^{} for an ellipsoid in R^{dim}",
            sub.ambient_dim()
        )));
    }
    let b = &sub.basis;
    for i in 0..ell.n_free {
        let mut e = DVector::zeros(dim);
        e[i] = 1.0;
        if dist_to_subspace(&e, sub)? > AXIS_TOL {
            return Ok(ExtReal::Infinite);
        }
    }
    let k = ell.n_bound();
    let bb = b.rows(ell.n_free, k);
    let projector = DMatrix::identity(k, k) - &bb * bb.transpose();
    let inv_sqrt: Vec<f64> = ell.lambdas.iter().map(|l| 1.0 / l.sqrt()).collect();
    let mut form = DMatrix::from_fn(k, k, |i, j| inv_sqrt[i] * projector[(i, j)] * inv_sqrt[j]);
    crate::numkernel::linalg::symmetrize(&mut form);
    let top = sym_eig(&form)?.values.last().copied().unwrap_or(0.0);
    Ok(ExtReal::Finite(top.max(0.0).sqrt()))
}
