use std::f64::consts::PI;

use clap::{Args, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::output::Row;
use crate::disk::{
    clamped_to_free_map, expand_in_eigenbasis, green_identity, jackson_check_disk, solve_disk_spectrum,
    DiskFunction, DiskProblem, ModeComponent, Parity, Variant,
};
use crate::ellipsoid::{EllipsoidCoords, SLACK};
use crate::numkernel::legendre;
use crate::spectrum1d::{asymptotic_report, jackson_check_1d, kolmogorov_width_1d, solve_spectrum_1d, Problem1D};
use crate::widths::{
    diagonal_perturbation_probe, extremality_experiment, jacobi_matrix_check, missing_axis_distances,
    unbounded_distance_demo, TruncatedEllipsoid, AXIS_TOL, DISPLAYED_MATRIX, LOWER_BOUND_SLACK,
};
use crate::{reference, Error, ExtReal, Result};

pub type Outcome = Result<(Vec<Row>, Vec<String>)>;

const NEUMANN_TOL: f64 = 1e-8;
const BEAM_TOL: f64 = 1e-6;
const BESSEL_TOL: f64 = 1e-5;
const VARIANT_TOL: f64 = 1e-6;
const KERNEL_TOL: f64 = 1e-10;
const MAP_RESIDUAL: f64 = 1e-6;
const MAP_ORTHOGONALITY: f64 = 1e-8;
const MAP_NORM: f64 = 1e-6;
const GREEN_TOL: f64 = 1e-8;
const SLOPE_TOL: f64 = 1e-8;
const INTERCEPT_TOL: f64 = 1e-10;

const RESTRICTION: &str = "width probes act on a finite truncation: the first K eigen-axes of the \
     cylinder-ellipsoid together with every cylinder (null-space) axis; subspaces are drawn \
     inside that truncation only";

/// Positive eigenvalue `i` (one-based) from a closed form or root oracle,
/// when one exists for order `p`.
fn interval_oracle(p: usize, i: usize) -> Result<Option<(f64, f64, &'static str)>> {
    Ok(match p {
        1 => Some((reference::neumann_eigenvalue(i), NEUMANN_TOL, "neumann_closed_form")),
        2 => Some((reference::free_beam_eigenvalues(i)?[i - 1], BEAM_TOL, "free_beam_roots")),
        _ => None,
    })
}

fn check_trusted(count: usize, trusted: usize, what: &str) -> Result<()> {
    if count > trusted {
        return Err(Error::Range(format!(
            "{count} {what} requested, only {trusted} are trusted at this basis size"
        )));
    }
    Ok(())
}

#[derive(Debug, Args, Serialize)]
pub struct Spectrum1dArgs {
    /// Order p of the operator (-1)^p d^{2p}/dt^{2p}, 1..=4.
    #[arg(long, default_value_t = 1)]
    pub p: usize,
    /// Shifted-Legendre basis size.
    #[arg(long, default_value_t = 40)]
    pub basis: usize,
    /// Number of positive eigenvalues reported.
    #[arg(long, default_value_t = 10)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

pub fn spectrum1d(a: &Spectrum1dArgs) -> Outcome {
    let spec = solve_spectrum_1d(&Problem1D::new(a.p, a.basis)?)?;
    check_trusted(a.count, spec.trusted_len(), "eigenvalues")?;
    let mut rows = vec![Row::exact(
        "null_dim",
        0,
        (spec.null_dim as f64).into(),
        (a.p as f64).into(),
        "structural",
    )];
    for (j, &lambda) in spec.eigenvalues[..a.p + a.count].iter().enumerate() {
        let index = j + 1;
        rows.push(if j < a.p {
            Row::abs("eigenvalue", index, lambda, 0.0, KERNEL_TOL, "structural")
        } else {
            match interval_oracle(a.p, j + 1 - a.p)? {
                Some((o, tol, prov)) => Row::rel("eigenvalue", index, lambda, o, tol, prov),
                None => Row::info("eigenvalue", index, lambda),
            }
        });
    }
    Ok((rows, vec!["index counts eigenvalues from one, zero eigenvalues first".into()]))
}

#[derive(Debug, Args, Serialize)]
pub struct Widths1dArgs {
    #[arg(long, default_value_t = 1)]
    pub p: usize,
    #[arg(long, default_value_t = 40)]
    pub basis: usize,
    /// Single width index N; when absent every N in 0..=n-max is reported.
    #[arg(long = "N")]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 10)]
    pub n_max: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

pub fn widths1d(a: &Widths1dArgs) -> Outcome {
    let spec = solve_spectrum_1d(&Problem1D::new(a.p, a.basis)?)?;
    let ns: Vec<usize> = match a.n {
        Some(n) => vec![n],
        None => (0..=a.n_max).collect(),
    };
    let mut rows = Vec::new();
    for n in ns {
        let d = kolmogorov_width_1d(&spec, n)?;
        if n < a.p {
            rows.push(Row::exact("width", n, d, ExtReal::Infinite, "structural"));
            continue;
        }
        let i = n + 1 - a.p;
        check_trusted(i, spec.trusted_len(), "eigenvalues")?;
        let value = d.finite().unwrap_or(f64::INFINITY);
        rows.push(match interval_oracle(a.p, i)? {
            Some((o, tol, prov)) => Row::rel("width", n, value, 1.0 / o.sqrt(), tol, prov),
            None => Row::info("width", n, d),
        });
    }
    Ok((rows, vec!["d_N = 1/sqrt(lambda_{N+1}), unbounded while N < p".into()]))
}

#[derive(Debug, Args, Serialize)]
pub struct AsymptoticsArgs {
    #[arg(long, default_value_t = 2)]
    pub p: usize,
    #[arg(long, default_value_t = 60)]
    pub basis: usize,
    #[arg(long, default_value_t = 6)]
    pub j_max: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

pub fn asymptotics(a: &AsymptoticsArgs) -> Outcome {
    let spec = solve_spectrum_1d(&Problem1D::new(a.p, a.basis)?)?;
    let report = asymptotic_report(&spec, a.j_max)?;
    let mut rows = Vec::new();
    for r in &report.rows {
        let scale = (PI * r.j as f64).powi(2 * a.p as i32);
        rows.push(match interval_oracle(a.p, r.j)? {
            Some((o, tol, prov)) => Row::rel("ratio", r.j, r.ratio, o / scale, tol, prov),
            None => Row::info("ratio", r.j, r.ratio),
        });
        rows.push(Row::info("deviation", r.j, r.deviation));
    }
    rows.push(Row::info("fitted_constant", 0, report.fitted_constant));
    let mut notes = vec!["ratio_j = lambda_{p+j} / (pi j)^{2p}; deviation_j = |ratio_j - 1|".to_string()];
    if a.p >= 2 {
        rows.push(Row::flag("deviation_monotone", 0, report.monotone, "observed_ratios"));
    } else {
        rows.push(Row::info("deviation_monotone", 0, if report.monotone { 1.0 } else { 0.0 }));
        notes.push("for p = 1 the ratios are exactly one and the deviations are rounding noise".into());
    }
    Ok((rows, notes))
}

fn random_coefficients(rng: &mut ChaCha8Rng, n: usize, decay: i32) -> Vec<f64> {
    (0..n)
        .map(|k| rng.random_range(-1.0..1.0) / (1.0 + k as f64).powi(decay))
        .collect()
}

/// Worst `tail - bound` over `ns` and the extremal-axis rows for the same
/// range of `N`.
fn jackson_rows(
    members: &[EllipsoidCoords],
    ns: std::ops::Range<usize>,
    offset: usize,
    check: impl Fn(&EllipsoidCoords, usize) -> Result<crate::ellipsoid::JacksonRecord>,
) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for (m, c) in members.iter().enumerate() {
        let mut worst = f64::NEG_INFINITY;
        for n in ns.clone() {
            let r = check(c, n)?;
            worst = worst.max(r.tail_error - r.bound);
        }
        rows.push(Row::upper("member_tail_excess", m, worst, 0.0, SLACK, "ellipsoid_bound"));
    }
    let lambdas = &members[0].eigenvalues;
    for n in ns {
        let axis = n - offset;
        let mut bound = vec![0.0; lambdas.len()];
        bound[axis] = 1.0 / lambdas[axis].sqrt();
        let c = EllipsoidCoords::new(vec![0.0; members[0].free_coeffs.len()], bound, lambdas.clone())?;
        let r = check(&c, n)?;
        rows.push(Row::abs("extremal_tail", n, r.tail_error, r.bound, SLACK, "extremal_axis"));
    }
    Ok(rows)
}

#[derive(Debug, Args, Serialize)]
pub struct Jackson1dArgs {
    #[arg(long, default_value_t = 2)]
    pub p: usize,
    #[arg(long, default_value_t = 40)]
    pub basis: usize,
    #[arg(long, default_value_t = 100)]
    pub members: usize,
    #[arg(long, default_value_t = 11)]
    pub seed: u64,
}

pub fn jackson1d(a: &Jackson1dArgs) -> Outcome {
    if a.members == 0 {
        return Err(Error::Size("at least one member is required".into()));
    }
    let spec = solve_spectrum_1d(&Problem1D::new(a.p, a.basis)?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let members = (0..a.members)
        .map(|_| {
            let c = spec.coords(&random_coefficients(&mut rng, a.basis, a.p as i32 + 1))?;
            c.scaled_to_boundary()
                .ok_or_else(|| Error::Witness("random member has no ellipsoid component".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let ns = a.p..a.p + spec.trusted_len();
    let rows = jackson_rows(&members, ns, a.p, jackson_check_1d)?;
    Ok((
        rows,
        vec!["members are random polynomials expanded in the eigenbasis and scaled onto the ellipsoid boundary; N counts the p kernel axes".into()],
    ))
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VariantArg {
    Free,
    Clamped,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Free => Variant::Free,
            VariantArg::Clamped => Variant::Clamped,
        }
    }
}

#[derive(Debug, Args, Serialize)]
pub struct DiskSpectrumArgs {
    #[arg(long, default_value_t = 1)]
    pub p: usize,
    #[arg(long, default_value_t = 2)]
    pub l_max: usize,
    #[arg(long, default_value_t = 32)]
    pub radial: usize,
    #[arg(long, value_enum, default_value_t = VariantArg::Clamped)]
    pub variant: VariantArg,
    /// Positive eigenvalues reported per mode.
    #[arg(long, default_value_t = 3)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

pub fn disk_spectrum(a: &DiskSpectrumArgs) -> Outcome {
    let problem = DiskProblem::new(a.p, a.l_max, a.radial, a.variant.into())?;
    let spec = solve_disk_spectrum(&problem)?;
    check_trusted(a.count, spec.trusted_per_mode(), "eigenvalues per mode")?;
    let other = if a.p == 1 {
        None
    } else {
        let v = match problem.variant() {
            Variant::Free => Variant::Clamped,
            Variant::Clamped => Variant::Free,
        };
        Some(solve_disk_spectrum(&problem.with_variant(v))?)
    };
    let expected_null = match problem.variant() {
        Variant::Free => a.p,
        Variant::Clamped => 0,
    };
    let mut rows = Vec::new();
    let mut smallest = f64::INFINITY;
    for mode in &spec.modes {
        let l = mode.l as f64;
        rows.push(
            Row::exact(
                "null_dim",
                mode.l,
                (mode.null_dim as f64).into(),
                (expected_null as f64).into(),
                "structural",
            )
            .at(l),
        );
        smallest = mode.eigenvalues.iter().copied().fold(smallest, f64::min);
        let positive = mode.positive_eigenvalues();
        match &other {
            None => {
                let roots = reference::clamped_plate_roots(mode.l, a.count)?;
                for (k, root) in roots.iter().enumerate() {
                    rows.push(Row::rel("eigenvalue", k, positive[k], root.powi(4), BESSEL_TOL, "bessel_roots").at(l));
                }
            }
            Some(o) => {
                let theirs = o.modes[mode.l].positive_eigenvalues();
                for k in 0..a.count {
                    rows.push(Row::rel("eigenvalue", k, positive[k], theirs[k], VARIANT_TOL, "other_variant").at(l));
                }
            }
        }
    }
    rows.push(Row::lower("min_eigenvalue", 0, smallest, 0.0, 0.0, "structural"));
    Ok((
        rows,
        vec!["eigenvalue rows: index = radial index k within mode x = l; oracle is the clamped-plate Bessel root for p = 1 and the other boundary variant otherwise".into()],
    ))
}

#[derive(Debug, Args, Serialize)]
pub struct ClampedFreeArgs {
    #[arg(long, default_value_t = 2)]
    pub p: usize,
    #[arg(long, default_value_t = 4)]
    pub l_max: usize,
    #[arg(long, default_value_t = 32)]
    pub radial: usize,
    /// Mapped eigenfunctions reported per mode.
    #[arg(long, default_value_t = 5)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

pub fn clamped_free(a: &ClampedFreeArgs) -> Outcome {
    let clamped = solve_disk_spectrum(&DiskProblem::clamped(a.p, a.l_max, a.radial)?)?;
    check_trusted(a.count, clamped.trusted_per_mode(), "eigenfunctions per mode")?;
    let map = clamped_to_free_map(&clamped)?;
    let mut rows = Vec::new();
    for c in map.checks.iter().filter(|c| c.k < a.count) {
        let l = c.l as f64;
        rows.push(Row::rel("free_eigenvalue", c.k, c.free_eigenvalue, c.eigenvalue, VARIANT_TOL, "clamped_spectrum").at(l));
        rows.push(Row::upper("residual", c.k, c.residual, 0.0, MAP_RESIDUAL, "compliance_operator").at(l));
        rows.push(Row::upper("null_orthogonality", c.k, c.orthogonality, 0.0, MAP_ORTHOGONALITY, "null_basis").at(l));
        rows.push(Row::upper("norm_identity", c.k, c.norm_error, 0.0, MAP_NORM, "clamped_norm").at(l));
    }
    Ok((
        rows,
        vec!["psi_k = Delta^p phi_k for clamped eigenfunctions phi_k; index = k, x = l".into()],
    ))
}

fn random_disk_function(rng: &mut ChaCha8Rng, l_max: usize, degree: usize) -> DiskFunction {
    let mut components = Vec::new();
    for l in 0..=l_max {
        for &parity in Parity::of_mode(l) {
            components.push(ModeComponent {
                l,
                parity,
                coeffs: random_coefficients(rng, degree, 3),
            });
        }
    }
    DiskFunction { components }
}

#[derive(Debug, Args, Serialize)]
pub struct JacksonDiskArgs {
    #[arg(long, default_value_t = 1)]
    pub p: usize,
    #[arg(long, default_value_t = 4)]
    pub l_max: usize,
    #[arg(long, default_value_t = 24)]
    pub radial: usize,
    /// Radial degree of the random members.
    #[arg(long, default_value_t = 8)]
    pub degree: usize,
    #[arg(long, default_value_t = 100)]
    pub members: usize,
    #[arg(long, default_value_t = 12)]
    pub seed: u64,
}

pub fn jackson_disk(a: &JacksonDiskArgs) -> Outcome {
    if a.members == 0 {
        return Err(Error::Size("at least one member is required".into()));
    }
    let spec = solve_disk_spectrum(&DiskProblem::free(a.p, a.l_max, a.radial)?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let members = (0..a.members)
        .map(|_| {
            let f = random_disk_function(&mut rng, a.l_max, a.degree);
            expand_in_eigenbasis(&f, &spec)?
                .scaled_to_boundary()
                .ok_or_else(|| Error::Witness("random member has no ellipsoid component".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let trusted = spec.merged.iter().take_while(|e| e.trusted).count();
    let rows = jackson_rows(&members, 0..trusted, 0, jackson_check_disk)?;
    Ok((
        rows,
        vec!["members are random disk polynomials expanded in the free eigenbasis and scaled onto the ellipsoid boundary; N counts merged positive axes up to the first untrusted eigenvalue".into()],
    ))
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Disk,
    Interval,
}

#[derive(Debug, Args, Serialize)]
pub struct ExtremalityArgs {
    #[arg(long, value_enum, default_value_t = Source::Disk)]
    pub source: Source,
    #[arg(long, default_value_t = 1)]
    pub p: usize,
    #[arg(long, default_value_t = 4)]
    pub l_max: usize,
    #[arg(long, default_value_t = 24)]
    pub radial: usize,
    /// Basis size for the interval source.
    #[arg(long, default_value_t = 40)]
    pub basis: usize,
    /// Number K of ellipsoid axes kept.
    #[arg(long, default_value_t = 12)]
    pub k: usize,
    #[arg(long, default_value_t = 1)]
    pub n_min: usize,
    #[arg(long, default_value_t = 6)]
    pub n_max: usize,
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    /// Operator scale c of the diagonal-perturbation probe.
    #[arg(long, default_value_t = 2.0)]
    pub scale: f64,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
}

pub fn extremality(a: &ExtremalityArgs) -> Outcome {
    let ell = match a.source {
        Source::Disk => {
            let spec = solve_disk_spectrum(&DiskProblem::free(a.p, a.l_max, a.radial)?)?;
            TruncatedEllipsoid::from_disk(&spec, a.k)?
        }
        Source::Interval => {
            let spec = solve_spectrum_1d(&Problem1D::new(a.p, a.basis)?)?;
            TruncatedEllipsoid::from_spectrum_1d(&spec, a.k)?
        }
    };
    if a.n_min > a.n_max {
        return Err(Error::Range(format!("n-min = {} exceeds n-max = {}", a.n_min, a.n_max)));
    }
    let mut rows = Vec::new();
    for n in a.n_min..=a.n_max {
        let x = n as f64;
        let report = extremality_experiment(&ell, n, a.trials, a.seed.wrapping_add(n as u64))?;
        let axis = report.rows[1].width.finite().unwrap_or(f64::INFINITY);
        let best = report.rows[2].width.finite().unwrap_or(f64::INFINITY);
        rows.push(Row::abs("axis_subspace", n, axis, report.bound, AXIS_TOL, "axis_formula"));
        rows.push(Row::lower("min_trial", n, best, report.bound, LOWER_BOUND_SLACK, "axis_formula"));
        for (skip, d) in missing_axis_distances(&ell, n)?.into_iter().enumerate() {
            rows.push(Row::exact("missing_axis", skip, d, ExtReal::Infinite, "structural").at(x));
        }
        let probe = diagonal_perturbation_probe(&ell, a.scale, n)?;
        let scaled = probe.scaled_width.finite().unwrap_or(f64::INFINITY);
        rows.push(Row::rel("scaled_width", n, scaled, probe.expected, 1e-12, "diagonal_scaling"));
        rows.push(Row::flag("extremal_axes_unchanged", n, probe.extremal_unchanged && probe.kernel_unchanged, "diagonal_scaling"));
    }
    Ok((
        rows,
        vec![
            RESTRICTION.to_string(),
            format!(
                "{} cylinder axes, {} ellipsoid axes; trial seed for N is seed + N",
                ell.n_free(),
                ell.n_bound()
            ),
            "missing_axis rows: index = removed cylinder axis, x = N".into(),
            "the diagonal-perturbation probe covers constant multiples c of the operator only".into(),
        ],
    ))
}

#[derive(Debug, Args, Serialize)]
pub struct UnboundedArgs {
    #[arg(long, default_value_t = 2)]
    pub p: usize,
    /// Power exponent M < p: the witness is r^{l+2M} against lower monomials.
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    #[arg(long, default_value_t = 0)]
    pub l: usize,
    #[arg(long, default_value_t = 5)]
    pub n_eigen: usize,
    #[arg(long, default_value_t = 24)]
    pub radial: usize,
    #[arg(long, value_delimiter = ',', default_values_t = [0.0, 1.0, 2.0, 4.0, 8.0, 16.0])]
    pub t: Vec<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

pub fn unbounded_demo(a: &UnboundedArgs) -> Outcome {
    let spec = solve_disk_spectrum(&DiskProblem::free(a.p, a.l, a.radial)?)?;
    let demo = unbounded_distance_demo(&spec, a.l, a.m, a.n_eigen, &a.t)?;
    let s = reference::monomial_residual_norm(a.l, a.m);
    let mut rows = Vec::new();
    for (i, &(t, d)) in demo.rows.iter().enumerate() {
        rows.push(Row::rel("distance", i, d, s * t, SLOPE_TOL, "monomial_gram").at(t));
    }
    rows.push(Row::rel("slope", 0, demo.slope, s, SLOPE_TOL, "monomial_gram"));
    rows.push(Row::abs("intercept", 0, demo.intercept, 0.0, INTERCEPT_TOL, "monomial_gram"));
    rows.push(Row::info("witness_residual", 0, demo.witness_residual));
    Ok((rows, vec![RESTRICTION.to_string(), demo.conclusion.clone()]))
}

#[derive(Debug, Args, Serialize)]
pub struct JacobiArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

pub fn jacobi_check(_a: &JacobiArgs) -> Outcome {
    let check = jacobi_matrix_check();
    let mut rows = Vec::new();
    for (i, row) in check.matrix.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            let shown = DISPLAYED_MATRIX[i][j] as f64;
            rows.push(Row::exact("matrix_entry", 5 * i + j, (v as f64).into(), shown.into(), "displayed_matrix"));
        }
    }
    rows.push(Row::exact(
        "abs_determinant",
        0,
        (check.determinant.abs() as f64).into(),
        2.0.into(),
        "cofactor_expansion",
    ));
    for (i, &h) in check.harmonic.iter().enumerate() {
        rows.push(Row::flag("harmonic", i, h, "symbolic_laplacian"));
    }
    rows.push(Row::flag("nondegenerate", 0, check.nondegenerate, "cofactor_expansion"));
    let notes = vec![
        format!("functions: {}", check.functions.join(", ")),
        "matrix_entry index = 5*row + column; five harmonic functions are checked".into(),
    ];
    Ok((rows, notes))
}

#[derive(Debug, Args, Serialize)]
pub struct GreenArgs {
    #[arg(long, default_value_t = 50)]
    pub pairs: usize,
    #[arg(long, default_value_t = 4)]
    pub l_max: usize,
    /// Number of monomials r^{l+2a} in each random radial polynomial.
    #[arg(long, default_value_t = 7)]
    pub degree: usize,
    #[arg(long, default_value_t = 21)]
    pub seed: u64,
}

fn monomial_to_shifted(c: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n];
    for (a, ca) in c.iter().enumerate() {
        for (k, v) in legendre::monomial_in_shifted(a).iter().enumerate() {
            out[k] += ca * v;
        }
    }
    out
}

pub fn green_check(a: &GreenArgs) -> Outcome {
    if a.degree == 0 {
        return Err(Error::Size("degree must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut rows = Vec::new();
    for i in 0..a.pairs {
        let p = 1 + i % 2;
        let l = i % (a.l_max + 1);
        let u: Vec<f64> = (0..a.degree).map(|_| rng.random_range(-1.0..1.0)).collect();
        let v: Vec<f64> = (0..a.degree).map(|_| rng.random_range(-1.0..1.0)).collect();
        let n = a.degree + 2;
        let r = green_identity(p, l, &monomial_to_shifted(&u, n), &monomial_to_shifted(&v, n))?;
        rows.push(Row::upper("green_residual", i, r.relative_residual, 0.0, GREEN_TOL, "boundary_trace").at(l as f64));
    }
    Ok((
        rows,
        vec!["pair i uses p = 1 + i mod 2 and mode l = i mod (l_max + 1); value = |interior - boundary| / scale".into()],
    ))
}
