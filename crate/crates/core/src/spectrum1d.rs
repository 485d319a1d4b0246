//! Galerkin solution of the free eigenproblem
//! `(-1)^p u^(2p) = λ u` on `[0, 1]`, `u^(p+j)(0) = u^(p+j)(1) = 0`
//! (`j < p`), and the width, asymptotic and Jackson operations built on it.
//!
//! The trial space is spanned by orthonormal shifted Legendre polynomials
//! `B_k(t) = √(2k+1) P_k(2t - 1)`, `k < basis_size`. The boundary conditions
//! are natural for the Rayleigh quotient `∫(u^(p))² / ∫u²`, so nothing is
//! imposed on the trial space and the kernel `{u^(p) = 0}` (polynomials of
//! degree `< p`) appears exactly.
//!
//! Eigenvalues are indexed with the `p` zero eigenvalues first, so that the
//! width `d_N` is finite exactly when `N ≥ p`.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::ellipsoid::{self, EllipsoidCoords, JacksonRecord};
use crate::numkernel::{factored_generalized_eig, gauss_legendre, legendre, GalerkinPair};
use crate::{Error, ExtReal, Result};

pub const MAX_ORDER: usize = 4;
pub const MAX_BASIS: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Problem1D {
    p: usize,
    basis_size: usize,
}

impl Problem1D {
    pub fn new(p: usize, basis_size: usize) -> Result<Self> {
        if !(1..=MAX_ORDER).contains(&p) {
            return Err(Error::Size(format!("order p = {p} outside 1..={MAX_ORDER}")));
        }
        if basis_size < 2 * p + 2 || basis_size > MAX_BASIS {
            return Err(Error::Size(format!(
                "basis size {basis_size} outside {}..={MAX_BASIS} for p = {p}",
                2 * p + 2
            )));
        }
        Ok(Self { p, basis_size })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn basis_size(&self) -> usize {
        self.basis_size
    }
}

#[derive(Debug, Clone)]
pub struct Spectrum1D {
    pub p: usize,
    pub null_dim: usize,
    /// Ascending; the first `null_dim` entries are exactly zero.
    pub eigenvalues: Vec<f64>,
    /// Column `j` holds the shifted-Legendre coefficients of eigenfunction `j`.
    pub eigenvectors: DMatrix<f64>,
    mass: DMatrix<f64>,
}

/// Coefficient matrix of `d^p/dt^p` from the orthonormal basis of size `n`
/// into the first `n - p` basis functions.
fn derivative_operator(p: usize, n: usize) -> DMatrix<f64> {
    let d = legendre::derivative_matrix(n);
    let scale: Vec<f64> = (0..n).map(|k| ((2 * k + 1) as f64).sqrt()).collect();
    // d/dt = 2 d/dx; conjugate by the normalization
    let dn = DMatrix::from_fn(n, n, |k, m| 2.0 * d[(k, m)] * scale[m] / scale[k]);
    let mut g = DMatrix::identity(n, n);
    for _ in 0..p {
        g = &dn * g;
    }
    g.rows(0, n - p).into_owned()
}

/// Stiffness `∫₀¹ B_i^(p) B_j^(p)` and mass `∫₀¹ B_i B_j`, by a Gauss rule
/// that integrates the polynomial integrands exactly.
pub fn assemble_1d(problem: &Problem1D) -> Result<GalerkinPair> {
    let (p, n) = (problem.p, problem.basis_size);
    let rule = gauss_legendre(n + 2)?;
    let mut stiffness = DMatrix::zeros(n, n);
    let mut mass = DMatrix::zeros(n, n);
    let deriv_scale = 2f64.powi(p as i32);
    for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
        let w = 0.5 * w;
        let table = legendre::derivative_table(x, n, p);
        let norm: Vec<f64> = (0..n).map(|k| ((2 * k + 1) as f64).sqrt()).collect();
        let vals: Vec<f64> = (0..n).map(|k| norm[k] * table[0][k]).collect();
        let ders: Vec<f64> = (0..n).map(|k| norm[k] * deriv_scale * table[p][k]).collect();
        for j in 0..n {
            for i in 0..=j {
                mass[(i, j)] += w * vals[i] * vals[j];
                stiffness[(i, j)] += w * ders[i] * ders[j];
            }
        }
    }
    for j in 0..n {
        for i in 0..j {
            mass[(j, i)] = mass[(i, j)];
            stiffness[(j, i)] = stiffness[(i, j)];
        }
    }
    GalerkinPair::new(stiffness, mass)
}

/// Eigenpairs of the discretized problem.
///
/// The stiffness is handled in its factored form `Gᵀ M G` with `G` the exact
/// `p`-th derivative operator, so the `p`-dimensional kernel is split off
/// exactly and small positive eigenvalues keep full relative accuracy even
/// when the largest exceed them by ten orders of magnitude.
pub fn solve_spectrum_1d(problem: &Problem1D) -> Result<Spectrum1D> {
    let (p, n) = (problem.p, problem.basis_size);
    let pair = assemble_1d(problem)?;
    let g = derivative_operator(p, n);
    let range_mass = pair.mass.view((0, 0), (n - p, n - p)).into_owned();
    let eig = factored_generalized_eig(&g, &range_mass, &pair.mass).map_err(|e| match e {
        Error::RankDeficient { pivot, .. } => Error::Discretization {
            found: n - pivot,
            expected: p,
        },
        other => other,
    })?;
    let null_dim = eig.values.iter().take_while(|&&v| v == 0.0).count();
    if null_dim != p || eig.values[p..].iter().any(|&v| !(v > 0.0)) {
        return Err(Error::Discretization {
            found: null_dim,
            expected: p,
        });
    }
    Ok(Spectrum1D {
        p,
        null_dim,
        eigenvalues: eig.values,
        eigenvectors: eig.vectors,
        mass: pair.mass,
    })
}

impl Spectrum1D {
    pub fn basis_size(&self) -> usize {
        self.eigenvectors.nrows()
    }

    /// Number of lowest eigenvalues trusted as approximations of the
    /// continuous spectrum; the upper part of a Galerkin spectrum is
    /// discretization noise.
    pub fn trusted_len(&self) -> usize {
        self.basis_size() / 3
    }

    pub fn positive_eigenvalues(&self) -> &[f64] {
        &self.eigenvalues[self.null_dim..]
    }

    /// Value of the `order`-th derivative of eigenfunction `j` (zero-based)
    /// at `t ∈ [0, 1]`.
    pub fn eigenfunction_derivative(&self, j: usize, t: f64, order: usize) -> f64 {
        let coeffs: Vec<f64> = self.eigenvectors.column(j).iter().copied().collect();
        evaluate(&coeffs, t, order)
    }

    /// Coordinates of the function with basis coefficients `coeffs` in the
    /// eigenbasis: zero-eigenvalue axes first, then positive axes.
    pub fn coords(&self, coeffs: &[f64]) -> Result<EllipsoidCoords> {
        let n = self.basis_size();
        if coeffs.len() != n {
            return Err(Error::Shape(format!("{} coefficients for basis size {n}", coeffs.len())));
        }
        let f = nalgebra::DVector::from_column_slice(coeffs);
        let proj = self.eigenvectors.transpose() * (&self.mass * f);
        EllipsoidCoords::new(
            proj.rows(0, self.null_dim).iter().copied().collect(),
            proj.rows(self.null_dim, n - self.null_dim).iter().copied().collect(),
            self.positive_eigenvalues().to_vec(),
        )
    }
}

/// `Σ_k c_k B_k^{(order)}(t)` for shifted-Legendre coefficients `c`.
pub fn evaluate(coeffs: &[f64], t: f64, order: usize) -> f64 {
    let n = coeffs.len();
    let table = legendre::derivative_table(2.0 * t - 1.0, n, order);
    let scale = 2f64.powi(order as i32);
    coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| c * ((2 * k + 1) as f64).sqrt() * scale * table[order][k])
        .sum()
}

/// `d_N = 1/√λ_{N+1}` for `N ≥ p`, unbounded for `N < p`.
pub fn kolmogorov_width_1d(spectrum: &Spectrum1D, n: usize) -> Result<ExtReal> {
    if n + 1 > spectrum.eigenvalues.len() {
        return Err(Error::Range(format!(
            "width d_{n} needs {} eigenvalues, {} computed",
            n + 1,
            spectrum.eigenvalues.len()
        )));
    }
    if n < spectrum.null_dim {
        return Ok(ExtReal::Infinite);
    }
    Ok(ExtReal::Finite(1.0 / spectrum.eigenvalues[n].sqrt()))
}

#[derive(Debug, Clone, Serialize)]
pub struct AsymptoticRow {
    pub j: usize,
    pub eigenvalue: f64,
    /// `λ_{p+j} / (π^{2p} j^{2p})`
    pub ratio: f64,
    pub deviation: f64,
    /// `|ratio - 1| ≤ C/j` for the fitted `C`.
    pub within_fit: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AsymptoticReport {
    pub p: usize,
    pub rows: Vec<AsymptoticRow>,
    /// Least-squares `C` in `|r_j - 1| ≈ C/j`.
    pub fitted_constant: f64,
    /// Whether `|r_j - 1|` is non-increasing in `j`.
    pub monotone: bool,
}

pub fn asymptotic_report(spectrum: &Spectrum1D, j_max: usize) -> Result<AsymptoticReport> {
    let p = spectrum.p;
    if j_max == 0 || j_max > spectrum.trusted_len() || p + j_max > spectrum.eigenvalues.len() {
        return Err(Error::Range(format!(
            "j_max = {j_max} must lie in 1..={} (basis size {})",
            spectrum.trusted_len(),
            spectrum.basis_size()
        )));
    }
    let mut rows: Vec<AsymptoticRow> = (1..=j_max)
        .map(|j| {
            let eigenvalue = spectrum.eigenvalues[p + j - 1];
            let ratio = eigenvalue / (PI * j as f64).powi(2 * p as i32);
            AsymptoticRow {
                j,
                eigenvalue,
                ratio,
                deviation: (ratio - 1.0).abs(),
                within_fit: false,
            }
        })
        .collect();
    let num: f64 = rows.iter().map(|r| r.deviation / r.j as f64).sum();
    let den: f64 = rows.iter().map(|r| 1.0 / (r.j * r.j) as f64).sum();
    let fitted_constant = num / den;
    for r in &mut rows {
        r.within_fit = r.deviation <= fitted_constant / r.j as f64;
    }
    let monotone = rows.windows(2).all(|w| w[1].deviation <= w[0].deviation);
    Ok(AsymptoticReport {
        p,
        rows,
        fitted_constant,
        monotone,
    })
}

/// Truncation error of `f` after its first `n` eigen-coordinates (counting
/// the `p` zero-eigenvalue axes), against the bound `1/√λ_{N+1}`.
///
/// `coords` holds `p` free coordinates and the positive-axis coordinates;
/// `n` must be at least `p`.
pub fn jackson_check_1d(coords: &EllipsoidCoords, n: usize) -> Result<JacksonRecord> {
    let p = coords.free_coeffs.len();
    if n < p {
        return Err(Error::Range(format!(
            "Jackson bound needs N >= p = {p}, got N = {n}"
        )));
    }
    ellipsoid::jackson_tail(coords, n - p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference;

    #[test]
    fn problem_validation() {
        assert!(Problem1D::new(0, 10).is_err());
        assert!(Problem1D::new(5, 20).is_err());
        assert!(Problem1D::new(2, 5).is_err());
        assert!(Problem1D::new(1, 257).is_err());
        assert!(Problem1D::new(2, 6).is_ok());
    }

    #[test]
    fn p1_k3_mass_and_stiffness_entries() {
        let pair = assemble_1d(&Problem1D::new(1, 4).unwrap()).unwrap();
        assert!((pair.mass[(0, 0)] - 1.0).abs() < 1e-14);
        // B_1 = √3 (2t - 1): ∫ (B_1')² = 12;  B_2 = √5 (6t² - 6t + 1): ∫ (B_2')² = 60
        assert!((pair.stiffness[(1, 1)] - 12.0).abs() < 1e-12);
        assert!((pair.stiffness[(2, 2)] - 60.0).abs() < 1e-11);
        assert!(pair.stiffness.row(0).amax() < 1e-14);
    }

    #[test]
    fn stiffness_rank_deficiency_is_p() {
        for (p, k) in [(1, 4), (2, 6), (3, 10)] {
            let pair = assemble_1d(&Problem1D::new(p, k).unwrap()).unwrap();
            let e = crate::numkernel::sym_eig(&pair.stiffness).unwrap();
            let scale = e.values.last().unwrap();
            let zeros = e.values.iter().filter(|v| v.abs() < 1e-10 * scale).count();
            assert_eq!(zeros, p);
            // null vectors are polynomials of degree < p: supported on B_0..B_{p-1}
            for j in 0..p {
                let v = e.vectors.column(j);
                assert!(v.rows(p, k - p).amax() < 1e-10);
            }
        }
    }

    #[test]
    fn factored_stiffness_matches_quadrature() {
        let problem = Problem1D::new(2, 12).unwrap();
        let pair = assemble_1d(&problem).unwrap();
        let g = derivative_operator(2, 12);
        let w = pair.mass.view((0, 0), (10, 10)).into_owned();
        let s = g.transpose() * w * g;
        let scale = pair.stiffness.amax();
        assert!((s - &pair.stiffness).amax() < 1e-12 * scale);
    }

    #[test]
    fn neumann_spectrum() {
        let s = solve_spectrum_1d(&Problem1D::new(1, 40).unwrap()).unwrap();
        assert_eq!(s.null_dim, 1);
        assert_eq!(s.eigenvalues[0], 0.0);
        for j in 1..=10 {
            let want = reference::neumann_eigenvalue(j);
            assert!(((s.eigenvalues[j] - want) / want).abs() < 1e-8);
        }
    }

    #[test]
    fn free_beam_spectrum() {
        let s = solve_spectrum_1d(&Problem1D::new(2, 60).unwrap()).unwrap();
        assert_eq!(s.null_dim, 2);
        let beam = reference::free_beam_eigenvalues(6).unwrap();
        for (j, want) in beam.iter().enumerate() {
            let got = s.eigenvalues[2 + j];
            assert!(((got - want) / want).abs() < 1e-6, "j = {}: {got} vs {want}", j + 1);
        }
    }

    #[test]
    fn smallest_p_eigenvalues_vanish() {
        for p in 1..=4 {
            let s = solve_spectrum_1d(&Problem1D::new(p, 30).unwrap()).unwrap();
            assert!(s.eigenvalues[..p].iter().all(|&v| v == 0.0));
            assert!(s.eigenvalues[p] > 0.0);
        }
    }

    #[test]
    fn mass_orthonormal_eigenvectors() {
        let s = solve_spectrum_1d(&Problem1D::new(3, 24).unwrap()).unwrap();
        let t = s.trusted_len();
        let v = s.eigenvectors.columns(0, t);
        let gram = v.transpose() * &s.mass * v;
        assert!((gram - DMatrix::identity(t, t)).amax() < 1e-10);
    }

    #[test]
    fn widths_p1() {
        let s = solve_spectrum_1d(&Problem1D::new(1, 40).unwrap()).unwrap();
        assert_eq!(kolmogorov_width_1d(&s, 0).unwrap(), ExtReal::Infinite);
        let d1 = kolmogorov_width_1d(&s, 1).unwrap().finite().unwrap();
        let d2 = kolmogorov_width_1d(&s, 2).unwrap().finite().unwrap();
        assert!((d1 - 1.0 / PI).abs() < 1e-8);
        assert!((d2 - 0.5 / PI).abs() < 1e-8);
        assert!(matches!(kolmogorov_width_1d(&s, 40), Err(Error::Range(_))));
    }

    #[test]
    fn asymptotics_p1_exact() {
        let s = solve_spectrum_1d(&Problem1D::new(1, 40).unwrap()).unwrap();
        let r = asymptotic_report(&s, 10).unwrap();
        for row in &r.rows {
            assert!(row.deviation < 1e-8);
        }
        assert!(asymptotic_report(&s, 14).is_err());
    }

    #[test]
    fn asymptotics_p2_first_ratio() {
        let s = solve_spectrum_1d(&Problem1D::new(2, 60).unwrap()).unwrap();
        let r = asymptotic_report(&s, 6).unwrap();
        let k1 = reference::free_beam_roots(1).unwrap()[0];
        assert!((r.rows[0].ratio - (k1 / PI).powi(4)).abs() < 1e-6);
        assert!((r.rows[0].ratio - 5.1388).abs() < 1e-4);
        assert!(r.rows[5].deviation < r.rows[0].deviation);
        assert!(r.monotone);
    }

    #[test]
    fn jackson_edge_cases() {
        let s = solve_spectrum_1d(&Problem1D::new(2, 20).unwrap()).unwrap();
        let lambdas = s.positive_eigenvalues().to_vec();
        let zero = EllipsoidCoords::new(vec![0.0; 2], vec![0.0; 18], lambdas.clone()).unwrap();
        let r = jackson_check_1d(&zero, 3).unwrap();
        assert_eq!(r.tail_error, 0.0);
        assert!(r.satisfied);
        // extremal axis f_{N+1} = 1/√λ_{N+1}, N = 4 → positive index 2
        let mut b = vec![0.0; 18];
        b[2] = 1.0 / lambdas[2].sqrt();
        let c = EllipsoidCoords::new(vec![5.0, -1.0], b, lambdas).unwrap();
        let r = jackson_check_1d(&c, 4).unwrap();
        assert_eq!(r.tail_error, r.bound);
        assert!(matches!(jackson_check_1d(&c, 1), Err(Error::Range(_))));
    }

    #[test]
    fn natural_boundary_conditions_emerge() {
        let s = solve_spectrum_1d(&Problem1D::new(1, 40).unwrap()).unwrap();
        for j in 1..=10 {
            for t in [0.0, 1.0] {
                assert!(s.eigenfunction_derivative(j, t, 1).abs() < 1e-6);
            }
        }
    }
}
