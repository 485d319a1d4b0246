//! Functions on the disk: the polyharmonic null basis, expansions in an
//! eigenbasis, the clamped-to-free construction and the Green identity.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use super::assembly::{boundary_trace, laplacian_power, mode_mass, mode_system};
use super::{merge, solve_mode, DiskSpectrum, ModeSpectrum, Parity, Variant};
use crate::ellipsoid::{self, EllipsoidCoords, JacksonRecord, Membership};
use crate::numkernel::{legendre, CompliancePencil};
use crate::reference::angular_weight;
use crate::{Error, Result};

const MAP_RESIDUAL_TOL: f64 = 1e-6;
const MAP_ORTHOGONALITY_TOL: f64 = 1e-8;
const MAP_NORM_TOL: f64 = 1e-6;

/// Orthonormal basis of the mode-`l` solutions of `Δ^p u = 0`.
#[derive(Debug, Clone)]
pub struct NullMode {
    pub l: usize,
    /// Column `j`: coefficients of `ψ'_j` on `r^{l+2a}`, `a < p`.
    pub monomial: DMatrix<f64>,
    /// Column `j`: radial shifted-Legendre coefficients of `ψ'_j`.
    pub coeffs: DMatrix<f64>,
}

/// Gram–Schmidt over `r^l, r^{l+2}, …, r^{l+2(p-1)}` with the exact moments
/// `∫_B r^{2l+2a+2b} cos² lθ = w_l / (2l + 2a + 2b + 2)`.
pub fn polyharmonic_null_basis(p: usize, l_max: usize, radial_size: usize) -> Vec<NullMode> {
    (0..=l_max)
        .map(|l| {
            let w = angular_weight(l);
            let gram = DMatrix::from_fn(p, p, |a, b| w / (2 * l + 2 * a + 2 * b + 2) as f64);
            let mut q = DMatrix::<f64>::zeros(p, p);
            for j in 0..p {
                let mut v = DVector::<f64>::zeros(p);
                v[j] = 1.0;
                for i in 0..j {
                    let qi = q.column(i).into_owned();
                    let proj = v.dot(&(&gram * &qi));
                    v -= qi * proj;
                }
                let norm = v.dot(&(&gram * &v)).sqrt();
                q.set_column(j, &(v / norm));
            }
            let mut coeffs = DMatrix::zeros(radial_size, p);
            for a in 0..p {
                let mono = legendre::monomial_in_shifted(a);
                for j in 0..p {
                    for (k, c) in mono.iter().enumerate() {
                        coeffs[(k, j)] += q[(a, j)] * c;
                    }
                }
            }
            NullMode {
                l,
                monomial: q,
                coeffs,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModeComponent {
    pub l: usize,
    pub parity: Parity,
    pub coeffs: Vec<f64>,
}

/// `Σ r^l g_c(r²) cos(lθ) + r^l g_s(r²) sin(lθ)` over finitely many modes.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct DiskFunction {
    pub components: Vec<ModeComponent>,
}

impl DiskFunction {
    /// Components summed per `(l, parity)`, each padded to `radial_size`.
    pub fn grouped(
        &self,
        l_max: usize,
        radial_size: usize,
    ) -> Result<BTreeMap<(usize, Parity), DVector<f64>>> {
        let mut out = BTreeMap::new();
        for c in &self.components {
            if c.l > l_max {
                return Err(Error::Range(format!("mode {} beyond l_max = {l_max}", c.l)));
            }
            if c.l == 0 && c.parity == Parity::Sin {
                return Err(Error::Domain("mode 0 has no sine component".into()));
            }
            if c.coeffs.len() > radial_size {
                return Err(Error::Shape(format!(
                    "{} radial coefficients for radial size {radial_size}",
                    c.coeffs.len()
                )));
            }
            let entry = out
                .entry((c.l, c.parity))
                .or_insert_with(|| DVector::zeros(radial_size));
            for (k, v) in c.coeffs.iter().enumerate() {
                entry[k] += v;
            }
        }
        Ok(out)
    }

    /// `‖f‖²` in `L²(B)`.
    pub fn norm_squared(&self, l_max: usize, radial_size: usize) -> Result<f64> {
        let mut total = 0.0;
        for ((l, _), c) in self.grouped(l_max, radial_size)? {
            let m = mode_mass(l, radial_size)?;
            total += c.dot(&(m * &c));
        }
        Ok(total)
    }
}

/// Coordinates of `f` on the null basis (ordered by mode, cosine before
/// sine, then index) and on the merged positive eigenfunctions.
pub fn expand_in_eigenbasis(f: &DiskFunction, spectrum: &DiskSpectrum) -> Result<EllipsoidCoords> {
    if spectrum.problem.variant() != Variant::Free {
        return Err(Error::Domain("expansion requires a free-variant spectrum".into()));
    }
    let n = spectrum.problem.radial_size();
    let parts = f.grouped(spectrum.problem.l_max(), n)?;
    let weighted: BTreeMap<(usize, Parity), DVector<f64>> = parts
        .iter()
        .map(|(&(l, par), c)| ((l, par), &spectrum.modes[l].mass * c))
        .collect();
    let mut free = Vec::new();
    for null in &spectrum.null_basis {
        for &par in Parity::of_mode(null.l) {
            for j in 0..null.coeffs.ncols() {
                free.push(
                    weighted
                        .get(&(null.l, par))
                        .map_or(0.0, |mf| null.coeffs.column(j).dot(mf)),
                );
            }
        }
    }
    let mut bound = Vec::with_capacity(spectrum.merged.len());
    let mut lambdas = Vec::with_capacity(spectrum.merged.len());
    for e in &spectrum.merged {
        let mode = &spectrum.modes[e.l];
        bound.push(
            weighted
                .get(&(e.l, e.parity))
                .map_or(0.0, |mf| mode.eigenvectors.column(mode.null_dim + e.index).dot(mf)),
        );
        lambdas.push(e.eigenvalue);
    }
    EllipsoidCoords::new(free, bound, lambdas)
}

pub fn ellipsoid_membership(coords: &EllipsoidCoords) -> Membership {
    ellipsoid::membership(coords)
}

/// Tail after subtracting every null-basis component and the first `n`
/// merged eigen-components, against `1/√λ_{N+1}`.
pub fn jackson_check_disk(coords: &EllipsoidCoords, n: usize) -> Result<JacksonRecord> {
    ellipsoid::jackson_tail(coords, n)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MapCheck {
    pub l: usize,
    /// Position among the clamped eigenvalues of mode `l`, from zero.
    pub k: usize,
    pub eigenvalue: f64,
    /// Independently computed free eigenvalue at the same position.
    pub free_eigenvalue: f64,
    /// `‖ψ - λ T ψ‖ / ‖ψ‖` with `T` the free compliance operator.
    pub residual: f64,
    /// Largest `|⟨ψ/‖ψ‖, ψ'_j⟩|` over the null basis of the mode.
    pub orthogonality: f64,
    /// `|‖ψ‖ / (√λ ‖φ‖) - 1|`.
    pub norm_error: f64,
    pub trusted: bool,
}

#[derive(Debug, Clone)]
pub struct ClampedFreeMap {
    /// Free-variant spectrum whose positive eigenfunctions are `Δ^p φ_k`,
    /// normalized, and whose kernel is the null basis.
    pub spectrum: DiskSpectrum,
    pub checks: Vec<MapCheck>,
}

/// Maps each clamped eigenfunction `φ_k` to `ψ_k = Δ^p φ_k` and verifies,
/// for the trusted part of each mode, that `ψ_k` is a free eigenfunction
/// with the same eigenvalue, is orthogonal to the polyharmonic functions and
/// has `‖ψ_k‖² = λ_k ‖φ_k‖²`.
///
/// The eigen-residual is measured in compliance form, `‖ψ - λ T ψ‖ / ‖ψ‖`
/// with `T` the inverse of the free stiffness on the complement of the
/// polyharmonic functions (and zero on them). `T` is bounded, so unlike
/// `‖Sψ - λMψ‖` this is not swamped by the unresolved top of the spectrum.
pub fn clamped_to_free_map(clamped: &DiskSpectrum) -> Result<ClampedFreeMap> {
    let problem = clamped.problem;
    if problem.variant() != Variant::Clamped {
        return Err(Error::Domain("clamped_to_free_map expects a clamped spectrum".into()));
    }
    let (p, n) = (problem.p(), problem.radial_size());
    let trusted = n / 3;
    let free_problem = problem.with_variant(Variant::Free);
    let mut modes = Vec::with_capacity(clamped.modes.len());
    let mut checks = Vec::new();
    for (mode, null) in clamped.modes.iter().zip(&clamped.null_basis) {
        let l = mode.l;
        let free = solve_mode(&free_problem, l)?;
        let sys = mode_system(&free_problem, l)?;
        let pencil = CompliancePencil::new(&sys.op, &sys.range_mass, &sys.mass)?;
        let m = &mode.mass;
        let power = laplacian_power(l, n, p);
        let count = mode.eigenvalues.len();
        let mut vectors = DMatrix::zeros(n, p + count);
        let mut images = DMatrix::zeros(n, p + count);
        vectors.columns_mut(0, p).copy_from(&null.coeffs);
        for k in 0..count {
            let lambda = mode.eigenvalues[k];
            let phi = mode.eigenvectors.column(k).into_owned();
            let psi = mode.images.column(k).into_owned();
            let phi_norm = phi.dot(&(m * &phi)).sqrt();
            let psi_norm = psi.dot(&(m * &psi)).sqrt();
            let psi_hat = &psi / psi_norm;
            let m_psi = m * &psi_hat;
            let residual = pencil.relative_residual(&psi_hat, lambda);
            let orthogonality = (0..p)
                .map(|j| null.coeffs.column(j).dot(&m_psi).abs())
                .fold(0.0, f64::max);
            let norm_error = (psi_norm / (lambda.sqrt() * phi_norm) - 1.0).abs();
            let check = MapCheck {
                l,
                k,
                eigenvalue: lambda,
                free_eigenvalue: free.eigenvalues[free.null_dim + k],
                residual,
                orthogonality,
                norm_error,
                trusted: k < trusted,
            };
            if check.trusted {
                let failure = if !(residual <= MAP_RESIDUAL_TOL) {
                    Some(format!("eigen-residual {residual:e} above {MAP_RESIDUAL_TOL:e}"))
                } else if !(orthogonality <= MAP_ORTHOGONALITY_TOL) {
                    Some(format!(
                        "inner product {orthogonality:e} with the null basis above {MAP_ORTHOGONALITY_TOL:e}"
                    ))
                } else if !(norm_error <= MAP_NORM_TOL) {
                    Some(format!("norm identity error {norm_error:e} above {MAP_NORM_TOL:e}"))
                } else {
                    None
                };
                if let Some(reason) = failure {
                    return Err(Error::Construction { l, k, reason });
                }
            }
            checks.push(check);
            vectors.set_column(p + k, &psi_hat);
            images.set_column(p + k, &(&power * &psi_hat));
        }
        let mut eigenvalues = vec![0.0; p];
        eigenvalues.extend_from_slice(&mode.eigenvalues);
        modes.push(ModeSpectrum {
            l,
            null_dim: p,
            eigenvalues,
            eigenvectors: vectors,
            images,
            mass: mode.mass.clone(),
        });
    }
    let merged = merge(&modes, trusted);
    Ok(ClampedFreeMap {
        spectrum: DiskSpectrum {
            problem: free_problem,
            modes,
            merged,
            null_basis: clamped.null_basis.clone(),
        },
        checks,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GreenRecord {
    /// `∫_B (Δ^p u · v - u · Δ^p v)`
    pub volume: f64,
    /// `Σ_j ∮ (∂_n Δ^{p-1-j} u · Δ^j v - Δ^{p-1-j} u · ∂_n Δ^j v)`, outward normal.
    pub boundary: f64,
    /// `‖Δ^p u‖ ‖v‖ + ‖u‖ ‖Δ^p v‖`, a bound for both terms of the volume integral.
    pub scale: f64,
    pub relative_residual: f64,
}

/// Both sides of the Green formula for `Δ^p` on the disk, for mode-`l`
/// functions `u`, `v` with the same angular factor.
pub fn green_identity(p: usize, l: usize, u: &[f64], v: &[f64]) -> Result<GreenRecord> {
    let n = u.len();
    if v.len() != n || n == 0 {
        return Err(Error::Shape(format!("radial lengths {} and {}", n, v.len())));
    }
    if p == 0 {
        return Err(Error::Domain("order p must be positive".into()));
    }
    let m = mode_mass(l, n)?;
    let u = DVector::from_column_slice(u);
    let v = DVector::from_column_slice(v);
    let pow = |k: usize| laplacian_power(l, n, k);
    let (pu, pv) = (pow(p) * &u, pow(p) * &v);
    let norm = |x: &DVector<f64>| x.dot(&(&m * x)).sqrt();
    let volume = pu.dot(&(&m * &v)) - u.dot(&(&m * &pv));
    let trace = |k: usize, x: &DVector<f64>| {
        let y = pow(k) * x;
        boundary_trace(l, y.as_slice())
    };
    let boundary = angular_weight(l)
        * (0..p)
            .map(|j| {
                let (a, da) = trace(p - 1 - j, &u);
                let (b, db) = trace(j, &v);
                da * b - a * db
            })
            .sum::<f64>();
    let scale = norm(&pu) * norm(&v) + norm(&u) * norm(&pv);
    let relative_residual = if scale > 0.0 {
        (volume - boundary).abs() / scale
    } else {
        (volume - boundary).abs()
    };
    Ok(GreenRecord {
        volume,
        boundary,
        scale,
        relative_residual,
    })
}
