//! Randomized and structural width experiments.

use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;

use super::{dist_subspace_to_ellipsoid, Subspace, TruncatedEllipsoid};
use crate::disk::{DiskSpectrum, Variant};
use crate::numkernel::legendre;
use crate::numkernel::linalg::{cholesky, solve_lower};
use crate::{Error, ExtReal, Result};

/// Slack on the lower bound `1/√λ_{N+1}`.
pub const LOWER_BOUND_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WidthMethod {
    Formula,
    Search,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WidthRow {
    pub n: usize,
    pub width: ExtReal,
    pub method: WidthMethod,
    /// `axes` for the axis-aligned subspace, `trial-<i>` for a random one.
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WidthReport {
    pub n: usize,
    pub seed: u64,
    /// Formula row, axis-aligned search row, best random trial.
    pub rows: Vec<WidthRow>,
    pub trial_distances: Vec<f64>,
    pub bound: f64,
    /// Distance of the axis-aligned subspace minus the bound.
    pub extremal_gap: f64,
}

fn random_subspace(rng: &mut ChaCha8Rng, ell: &TruncatedEllipsoid, n: usize) -> DMatrix<f64> {
    let k = ell.n_bound();
    let g = DMatrix::from_fn(k, n, |_, _| StandardNormal.sample(rng));
    let mut full = DMatrix::zeros(ell.dim(), ell.n_free() + n);
    for i in 0..ell.n_free() {
        full[(i, i)] = 1.0;
    }
    full.view_mut((ell.n_free(), ell.n_free()), (k, n)).copy_from(&g);
    full
}

/// Distances from `trials` random `N`-dimensional subspaces of the ellipsoid
/// axes, each joined with every cylinder axis, compared with `1/√λ_{N+1}`.
///
/// The Gaussian matrices are drawn sequentially from one seeded stream;
/// distances are evaluated in parallel and reduced in trial order.
pub fn extremality_experiment(
    ell: &TruncatedEllipsoid,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<WidthReport> {
    if n >= ell.n_bound() {
        return Err(Error::Range(format!(
            "N = {n} must be below the number of ellipsoid axes {}",
            ell.n_bound()
        )));
    }
    if trials == 0 {
        return Err(Error::Size("at least one trial is required".into()));
    }
    let bound = ell.width(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<DMatrix<f64>> = (0..trials).map(|_| random_subspace(&mut rng, ell, n)).collect();
    let results = draws
        .par_iter()
        .map(|m| -> Result<(f64, Subspace)> {
            let sub = Subspace::from_columns(m)?;
            let d = dist_subspace_to_ellipsoid(&sub, ell)?;
            let d = d
                .finite()
                .ok_or_else(|| Error::Witness("random subspace lost a cylinder axis".into()))?;
            Ok((d, sub))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut trial_distances = Vec::with_capacity(trials);
    for (trial, (d, sub)) in results.iter().enumerate() {
        if *d < bound - LOWER_BOUND_SLACK {
            return Err(Error::CounterExample {
                trial,
                distance: *d,
                bound,
                basis: sub
                    .basis()
                    .column_iter()
                    .map(|c| c.iter().copied().collect())
                    .collect(),
            });
        }
        trial_distances.push(*d);
    }
    let (best, best_d) = trial_distances
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::INFINITY), |acc, (i, d)| if d < acc.1 { (i, d) } else { acc });
    let extremal = dist_subspace_to_ellipsoid(&ell.extremal_subspace(n)?, ell)?;
    let extremal_gap = match extremal {
        ExtReal::Finite(d) => d - bound,
        ExtReal::Infinite => f64::INFINITY,
    };
    Ok(WidthReport {
        n,
        seed,
        rows: vec![
            WidthRow {
                n,
                width: ExtReal::Finite(bound),
                method: WidthMethod::Formula,
                witness: "axes".into(),
            },
            WidthRow {
                n,
                width: extremal,
                method: WidthMethod::Search,
                witness: "axes".into(),
            },
            WidthRow {
                n,
                width: ExtReal::Finite(best_d),
                method: WidthMethod::Search,
                witness: format!("trial-{best}"),
            },
        ],
        trial_distances,
        bound,
        extremal_gap,
    })
}

/// Distances of the extremal subspace with one cylinder axis removed, for
/// each cylinder axis in turn.
pub fn missing_axis_distances(ell: &TruncatedEllipsoid, n: usize) -> Result<Vec<ExtReal>> {
    (0..ell.n_free())
        .map(|skip| {
            let axes: Vec<usize> = (0..ell.n_free() + n).filter(|&a| a != skip).collect();
            dist_subspace_to_ellipsoid(&Subspace::axes(ell.dim(), &axes)?, ell)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnboundedDemo {
    pub l: usize,
    pub m: usize,
    pub n_eigen: usize,
    /// `(t, dist(t·y))`
    pub rows: Vec<(f64, f64)>,
    /// `L²(B)` norm of the witness residual against the proxy.
    pub witness_residual: f64,
    pub slope: f64,
    pub intercept: f64,
    pub conclusion: String,
}

/// Distance from `t·y` to the proxy space
/// `span{r^{l+2i} : i < M} ⊕ span{first N positive eigenfunctions of mode l}`,
/// where `y = r^{l+2M}` is polyharmonic of order `p > M`.
///
/// Every `t·y` lies in the cylinder of the polyharmonic functions, so a
/// positive slope in `t` means the distance to the whole set is unbounded.
pub fn unbounded_distance_demo(
    spectrum: &DiskSpectrum,
    l: usize,
    m: usize,
    n_eigen: usize,
    t_values: &[f64],
) -> Result<UnboundedDemo> {
    let problem = spectrum.problem;
    if problem.variant() != Variant::Free {
        return Err(Error::Domain("unbounded-distance demo needs a free spectrum".into()));
    }
    let p = problem.p();
    if m >= p {
        return Err(Error::Domain(format!("M = {m} must be below p = {p}")));
    }
    let mode = spectrum
        .mode(l)
        .ok_or_else(|| Error::Range(format!("mode {l} beyond l_max = {}", problem.l_max())))?;
    let positive = mode.positive_eigenvalues().len();
    if n_eigen > positive {
        return Err(Error::Range(format!("{n_eigen} eigenfunctions requested, {positive} available")));
    }
    if t_values.len() < 2 {
        return Err(Error::Size("need at least two values of t".into()));
    }
    let n = problem.radial_size();
    let monomial = |a: usize| {
        let mut c = legendre::monomial_in_shifted(a);
        c.resize(n, 0.0);
        DVector::from_vec(c)
    };
    let mut proxy = DMatrix::zeros(n, m + n_eigen);
    for i in 0..m {
        proxy.set_column(i, &monomial(i));
    }
    for j in 0..n_eigen {
        proxy.set_column(m + j, &mode.eigenvectors.column(mode.null_dim + j));
    }
    let mass = mode.mass();
    let y = monomial(m);
    // M-orthogonal projection onto span(proxy): X (XᵀMX)⁻¹ XᵀM y
    let project = |v: &DVector<f64>| -> Result<DVector<f64>> {
        if proxy.ncols() == 0 {
            return Ok(DVector::zeros(n));
        }
        let gram = proxy.transpose() * mass * &proxy;
        let lg = cholesky(&gram)?;
        let rhs = proxy.transpose() * (mass * v);
        let z = solve_lower(&lg, &DMatrix::from_column_slice(rhs.len(), 1, rhs.as_slice()));
        let c = crate::numkernel::linalg::solve_upper(&lg.transpose(), &z);
        Ok(&proxy * c.column(0))
    };
    let m_norm = |v: &DVector<f64>| v.dot(&(mass * v)).max(0.0).sqrt();
    let witness_residual = m_norm(&(&y - project(&y)?));
    if witness_residual < 1e-10 {
        return Err(Error::Witness(format!(
            "r^{} lies in the proxy space (residual {witness_residual:e})",
            l + 2 * m
        )));
    }
    let rows = t_values
        .iter()
        .map(|&t| {
            let ty = &y * t;
            Ok((t, m_norm(&(&ty - project(&ty)?))))
        })
        .collect::<Result<Vec<_>>>()?;
    let count = rows.len() as f64;
    let mean_t = rows.iter().map(|r| r.0).sum::<f64>() / count;
    let mean_d = rows.iter().map(|r| r.1).sum::<f64>() / count;
    let sxx: f64 = rows.iter().map(|r| (r.0 - mean_t).powi(2)).sum();
    let sxy: f64 = rows.iter().map(|r| (r.0 - mean_t) * (r.1 - mean_d)).sum();
    if !(sxx > 0.0) {
        return Err(Error::Size("t values must not all coincide".into()));
    }
    let slope = sxy / sxx;
    let intercept = mean_d - slope * mean_t;
    if !(slope > 0.1 * witness_residual) {
        return Err(Error::Witness(format!(
            "fitted slope {slope:e} is not positive against residual {witness_residual:e}"
        )));
    }
    let conclusion = format!(
        "dist grows linearly in t with slope {slope:.6e}; every t*r^{} satisfies Delta^{p} u = 0, \
         so the supremum over the set is infinite. Probes cover the proxy space of mode {l} only.",
        l + 2 * m
    );
    Ok(UnboundedDemo {
        l,
        m,
        n_eigen,
        rows,
        witness_residual,
        slope,
        intercept,
        conclusion,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerturbationRecord {
    pub c: f64,
    pub n: usize,
    pub width: ExtReal,
    pub scaled_width: ExtReal,
    /// `width / c`
    pub expected: f64,
    /// Cylinder axes, identical for `Δ^p` and `c·Δ^p`.
    pub n_free: usize,
    pub kernel_unchanged: bool,
    /// Axes of the minimizing subspace before and after scaling.
    pub extremal_axes: Vec<usize>,
    pub scaled_extremal_axes: Vec<usize>,
    pub extremal_unchanged: bool,
}

fn extremal_axes(ell: &TruncatedEllipsoid, n: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..ell.n_bound()).collect();
    order.sort_by(|&a, &b| ell.lambdas()[a].total_cmp(&ell.lambdas()[b]).then(a.cmp(&b)));
    let mut axes: Vec<usize> = (0..ell.n_free()).collect();
    axes.extend(order[..n].iter().map(|a| ell.n_free() + a));
    axes
}

/// Replaces the operator by `c·Δ^p`: eigenvalues become `c² λ` while the
/// kernel (the cylinder axes) is unchanged. The width of the extremal
/// subspace becomes `d_N / c` and the minimizing axes stay the same.
pub fn diagonal_perturbation_probe(ell: &TruncatedEllipsoid, c: f64, n: usize) -> Result<PerturbationRecord> {
    if !(c > 0.0) || !c.is_finite() {
        return Err(Error::Domain(format!("scale c = {c} must be positive")));
    }
    if n >= ell.n_bound() {
        return Err(Error::Range(format!("N = {n} needs more than {} axes", ell.n_bound())));
    }
    let scaled = ell.scaled(c * c)?;
    let axes = extremal_axes(ell, n);
    let scaled_axes = extremal_axes(&scaled, n);
    let width = dist_subspace_to_ellipsoid(&Subspace::axes(ell.dim(), &axes)?, ell)?;
    let scaled_width = dist_subspace_to_ellipsoid(&Subspace::axes(scaled.dim(), &scaled_axes)?, &scaled)?;
    let expected = width.finite().map_or(f64::INFINITY, |w| w / c);
    Ok(PerturbationRecord {
        c,
        n,
        width,
        scaled_width,
        expected,
        n_free: ell.n_free(),
        kernel_unchanged: scaled.n_free() == ell.n_free(),
        extremal_unchanged: axes == scaled_axes,
        extremal_axes: axes,
        scaled_extremal_axes: scaled_axes,
    })
}
