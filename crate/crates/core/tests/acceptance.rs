//! Acceptance criteria, one PASS/FAIL line each. Oracles are computed here
//! from closed forms, series and exact monomial arithmetic; the library is
//! only the system under test.

use std::f64::consts::PI;
use std::process::Command;
use std::time::Instant;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use polywidth::disk::{
    clamped_to_free_map, evaluate_radial, expand_in_eigenbasis, green_identity, jackson_check_disk,
    solve_disk_spectrum, DiskFunction, DiskProblem, ModeComponent, Parity,
};
use polywidth::ellipsoid::EllipsoidCoords;
use polywidth::numkernel::{brent_root, legendre};
use polywidth::spectrum1d::{
    jackson_check_1d, kolmogorov_width_1d, solve_spectrum_1d, Problem1D, Spectrum1D,
};
use polywidth::widths::{
    dist_subspace_to_ellipsoid, extremality_experiment, jacobi_matrix_check, missing_axis_distances,
    unbounded_distance_demo, Subspace, TruncatedEllipsoid,
};
use polywidth::ExtReal;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn spectrum_1d(p: usize, basis: usize) -> Result<Spectrum1D, String> {
    solve_spectrum_1d(&Problem1D::new(p, basis).map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

fn disk(problem: polywidth::Result<DiskProblem>) -> Result<polywidth::disk::DiskSpectrum, String> {
    solve_disk_spectrum(&problem.map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

/// Roots of `cos k cosh k = 1`, one per interval around `(j + 1/2)π`.
fn beam_roots(count: usize) -> Vec<f64> {
    let f = |k: f64| k.cos() * k.cosh() - 1.0;
    (1..=count)
        .map(|j| {
            let c = (j as f64 + 0.5) * PI;
            brent_root(f, c - 0.4, c + 0.4, 1e-14).expect("beam root bracket")
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let spec = spectrum_1d(1, 40)?;
    let mut worst = 0.0f64;
    for j in 1..=10 {
        let oracle = (PI * j as f64).powi(2);
        let e = rel(spec.eigenvalues[j], oracle);
        ensure(e <= 1e-8, || format!("lambda_{} rel err {e:e}", j + 1))?;
        worst = worst.max(e);
        let d = kolmogorov_width_1d(&spec, j).map_err(|e| e.to_string())?;
        let d = d.finite().ok_or("width is infinite")?;
        let e = rel(d, 1.0 / (PI * j as f64));
        ensure(e <= 1e-8, || format!("d_{j} rel err {e:e}"))?;
        worst = worst.max(e);
    }
    let t = start.elapsed().as_secs_f64();
    ensure(t < 1.0, || format!("runtime {t:.3} s"))?;
    Ok(format!("max rel err {worst:.2e}, {t:.3} s"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let spec = spectrum_1d(2, 60)?;
    ensure(spec.null_dim == 2, || format!("null dimension {}", spec.null_dim))?;
    let k = beam_roots(6);
    ensure((k[0] - 4.730_040_7).abs() < 1e-7, || format!("k_1 = {}", k[0]))?;
    let mut worst = 0.0f64;
    for (j, kj) in k.iter().enumerate() {
        let e = rel(spec.positive_eigenvalues()[j], kj.powi(4));
        ensure(e <= 1e-6, || format!("j = {} rel err {e:e}", j + 1))?;
        worst = worst.max(e);
    }
    let t = start.elapsed().as_secs_f64();
    ensure(t < 2.0, || format!("runtime {t:.3} s"))?;
    Ok(format!("null dim 2, max rel err {worst:.2e}, {t:.3} s"))
}

fn criterion_3() -> Outcome {
    let spec = spectrum_1d(2, 60)?;
    let k = beam_roots(6);
    let mut deviations = Vec::new();
    for (j, kj) in k.iter().enumerate() {
        let scale = (PI * (j + 1) as f64).powi(4);
        let computed = spec.positive_eigenvalues()[j] / scale;
        let oracle = kj.powi(4) / scale;
        ensure(rel(computed, oracle) <= 1e-6, || format!("ratio {} differs from root oracle", j + 1))?;
        deviations.push((oracle - 1.0).abs());
    }
    let table: Vec<String> = deviations.iter().map(|d| format!("{d:.4}")).collect();
    let monotone = deviations.windows(2).all(|w| w[1] < w[0]);
    ensure(monotone, || format!("deviations not decreasing: {}", table.join(", ")))?;
    let last = deviations[5];
    ensure(last < 0.2, || {
        format!(
            "monotone decrease holds but |ratio_6 - 1| = {last:.4} is not below 0.2 (deviations {})",
            table.join(", ")
        )
    })?;
    Ok(format!("deviations {}", table.join(", ")))
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// `J_l` (sign = -1) or `I_l` (sign = +1) by the power series.
fn bessel_series(l: i64, x: f64, sign: f64) -> f64 {
    if l < 0 {
        let v = bessel_series(-l, x, sign);
        return if sign < 0.0 && l % 2 != 0 { -v } else { v };
    }
    let l = l as usize;
    (0..60)
        .map(|m| sign.powi(m as i32) * (x / 2.0).powi((2 * m + l) as i32) / (factorial(m) * factorial(m + l)))
        .sum()
}

fn clamped_determinant(l: i64, k: f64) -> f64 {
    let j = bessel_series(l, k, -1.0);
    let i = bessel_series(l, k, 1.0);
    let dj = 0.5 * (bessel_series(l - 1, k, -1.0) - bessel_series(l + 1, k, -1.0));
    let di = 0.5 * (bessel_series(l - 1, k, 1.0) + bessel_series(l + 1, k, 1.0));
    j * di - i * dj
}

fn first_clamped_root(l: i64) -> f64 {
    let f = |k: f64| clamped_determinant(l, k);
    let mut a = 0.5;
    while f(a).signum() == f(a + 0.01).signum() {
        a += 0.01;
    }
    let mut b = a + 0.01;
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if f(a).signum() == f(m).signum() {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let spec = disk(DiskProblem::clamped(1, 2, 32))?;
    let mut out = Vec::new();
    for l in 0..=2 {
        let k = first_clamped_root(l as i64);
        let lambda = spec.modes[l].eigenvalues[0];
        let e = rel(lambda, k.powi(4));
        ensure(e <= 1e-5, || format!("l = {l}: {lambda} vs {} (rel {e:e})", k.powi(4)))?;
        if l == 0 {
            ensure((k - 3.19622).abs() < 1e-5, || format!("l = 0 root {k}"))?;
        }
        out.push(format!("l={l} rel {e:.1e}"));
    }
    let t = start.elapsed().as_secs_f64();
    ensure(t < 5.0, || format!("runtime {t:.3} s"))?;
    Ok(format!("{}, {t:.3} s", out.join(", ")))
}

fn criterion_5() -> Outcome {
    let mut counts = 0;
    for p in 1..=2 {
        let free = disk(DiskProblem::free(p, 4, 32))?;
        let clamped = disk(DiskProblem::clamped(p, 4, 32))?;
        for l in 0..=4 {
            let a = free.modes[l].positive_eigenvalues();
            let b = clamped.modes[l].positive_eigenvalues();
            for k in 0..5 {
                let e = rel(a[k], b[k]);
                ensure(e <= 1e-6, || format!("p = {p}, l = {l}, k = {k}: rel {e:e}"))?;
            }
        }
        let map = clamped_to_free_map(&clamped).map_err(|e| e.to_string())?;
        for c in map.checks.iter().filter(|c| c.k < 5) {
            ensure(c.residual <= 1e-6, || format!("p = {p} {c:?}: residual"))?;
            ensure(c.orthogonality <= 1e-8, || format!("p = {p} {c:?}: orthogonality"))?;
            ensure(c.norm_error <= 1e-6, || format!("p = {p} {c:?}: norm identity"))?;
            counts += 1;
        }
    }
    Ok(format!("{counts} mapped eigenfunctions checked"))
}

/// `Δ` acting on `Σ c_a r^{l+2a}`: `Δ r^{l+2a} = 4a(a+l) r^{l+2a-2}`.
fn monomial_laplacian(l: usize, c: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; c.len()];
    for a in 1..c.len() {
        out[a - 1] = 4.0 * (a * (a + l)) as f64 * c[a];
    }
    out
}

fn monomial_power(l: usize, c: &[f64], p: usize) -> Vec<f64> {
    (0..p).fold(c.to_vec(), |acc, _| monomial_laplacian(l, &acc))
}

fn angular(l: usize) -> f64 {
    if l == 0 {
        2.0 * PI
    } else {
        PI
    }
}

fn monomial_inner(l: usize, c: &[f64], d: &[f64]) -> f64 {
    let mut s = 0.0;
    for (a, ca) in c.iter().enumerate() {
        for (b, db) in d.iter().enumerate() {
            s += ca * db / (2 * l + 2 * a + 2 * b + 2) as f64;
        }
    }
    angular(l) * s
}

fn monomial_trace(l: usize, c: &[f64]) -> (f64, f64) {
    let value = c.iter().sum();
    let slope = c.iter().enumerate().map(|(a, ca)| ca * (l + 2 * a) as f64).sum();
    (value, slope)
}

fn to_radial_basis(c: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n];
    for (a, ca) in c.iter().enumerate() {
        for (k, v) in legendre::monomial_in_shifted(a).iter().enumerate() {
            out[k] += ca * v;
        }
    }
    out
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = 0.0f64;
    for i in 0..50 {
        let p = 1 + i % 2;
        let l = i % 5;
        let u: Vec<f64> = (0..7).map(|_| rng.random_range(-1.0..1.0)).collect();
        let v: Vec<f64> = (0..7).map(|_| rng.random_range(-1.0..1.0)).collect();
        let (ub, vb) = (to_radial_basis(&u, 9), to_radial_basis(&v, 9));
        for r in [0.0f64, 0.3, 0.77, 1.0] {
            let direct: f64 = u.iter().enumerate().map(|(a, c)| c * r.powi((l + 2 * a) as i32)).sum();
            let e = (evaluate_radial(l, &ub, r) - direct).abs();
            ensure(e < 1e-11, || format!("pair {i}: basis conversion off by {e:e}"))?;
        }
        let (pu, pv) = (monomial_power(l, &u, p), monomial_power(l, &v, p));
        let volume = monomial_inner(l, &pu, &v) - monomial_inner(l, &u, &pv);
        let boundary = angular(l)
            * (0..p)
                .map(|j| {
                    let (a, da) = monomial_trace(l, &monomial_power(l, &u, p - 1 - j));
                    let (b, db) = monomial_trace(l, &monomial_power(l, &v, j));
                    da * b - a * db
                })
                .sum::<f64>();
        let norm = |c: &[f64]| monomial_inner(l, c, c).sqrt();
        let scale = norm(&pu) * norm(&v) + norm(&u) * norm(&pv);
        ensure((volume - boundary).abs() <= 1e-12 * scale, || format!("pair {i}: oracle sides differ"))?;
        let rec = green_identity(p, l, &ub, &vb).map_err(|e| e.to_string())?;
        ensure(rec.relative_residual <= 1e-8, || format!("pair {i}: relative residual {:e}", rec.relative_residual))?;
        let ev = (rec.volume - volume).abs() / scale;
        let eb = (rec.boundary - boundary).abs() / scale;
        ensure(ev <= 1e-8 && eb <= 1e-8, || format!("pair {i}: volume err {ev:e}, boundary err {eb:e}"))?;
        worst = worst.max(rec.relative_residual).max(ev).max(eb);
    }
    Ok(format!("50 pairs, worst relative discrepancy {worst:.2e}"))
}

fn random_decaying(rng: &mut ChaCha8Rng, n: usize, decay: i32) -> Vec<f64> {
    (0..n)
        .map(|k| rng.random_range(-1.0..1.0) / (1.0 + k as f64).powi(decay))
        .collect()
}

type Check = fn(&EllipsoidCoords, usize) -> polywidth::Result<polywidth::ellipsoid::JacksonRecord>;

/// Every member obeys the bound over `ns`; the single-axis member at
/// position `n - offset` attains it.
fn jackson_suite(members: &[EllipsoidCoords], ns: std::ops::Range<usize>, offset: usize, check: Check) -> Result<usize, String> {
    let mut count = 0;
    for (m, c) in members.iter().enumerate() {
        let value: f64 = c.bound_coeffs.iter().zip(&c.eigenvalues).map(|(f, l)| l * f * f).sum();
        ensure((value - 1.0).abs() < 1e-12, || format!("member {m} not on the boundary: {value}"))?;
        for n in ns.clone() {
            let r = check(c, n).map_err(|e| e.to_string())?;
            let tail: f64 = c.bound_coeffs[n - offset..].iter().map(|f| f * f).sum::<f64>().sqrt();
            let bound = 1.0 / c.eigenvalues[n - offset].sqrt();
            ensure((r.tail_error - tail).abs() <= 1e-14 && (r.bound - bound).abs() <= 1e-14, || {
                format!("member {m}, N = {n}: library tail/bound disagree with direct sum")
            })?;
            ensure(tail <= bound + 1e-12, || format!("member {m}, N = {n}: tail {tail} > {bound}"))?;
            count += 1;
        }
    }
    let lambdas = &members[0].eigenvalues;
    for n in ns {
        let mut b = vec![0.0; lambdas.len()];
        b[n - offset] = 1.0 / lambdas[n - offset].sqrt();
        let c = EllipsoidCoords::new(vec![0.0; members[0].free_coeffs.len()], b, lambdas.clone())
            .map_err(|e| e.to_string())?;
        let r = check(&c, n).map_err(|e| e.to_string())?;
        ensure((r.tail_error - r.bound).abs() <= 1e-12, || format!("extremal axis N = {n} misses equality"))?;
    }
    Ok(count)
}

fn criterion_7() -> Outcome {
    let mut total = 0;
    for p in 1..=2 {
        let spec = spectrum_1d(p, 40)?;
        let mut rng = ChaCha8Rng::seed_from_u64(70 + p as u64);
        let members = (0..100)
            .map(|_| {
                let c = spec.coords(&random_decaying(&mut rng, 40, p as i32 + 1)).map_err(|e| e.to_string())?;
                c.scaled_to_boundary().ok_or_else(|| "zero member".to_string())
            })
            .collect::<Result<Vec<_>, String>>()?;
        total += jackson_suite(&members, p..p + spec.trusted_len(), p, jackson_check_1d)?;
    }
    for p in 1..=2 {
        let spec = disk(DiskProblem::free(p, 4, 24))?;
        let mut rng = ChaCha8Rng::seed_from_u64(80 + p as u64);
        let members = (0..100)
            .map(|_| {
                let mut components = Vec::new();
                for l in 0..=4 {
                    for &parity in Parity::of_mode(l) {
                        components.push(ModeComponent { l, parity, coeffs: random_decaying(&mut rng, 8, 3) });
                    }
                }
                let c = expand_in_eigenbasis(&DiskFunction { components }, &spec).map_err(|e| e.to_string())?;
                c.scaled_to_boundary().ok_or_else(|| "zero member".to_string())
            })
            .collect::<Result<Vec<_>, String>>()?;
        let trusted = spec.merged.iter().take_while(|e| e.trusted).count();
        total += jackson_suite(&members, 0..trusted, 0, jackson_check_disk)?;
    }
    Ok(format!("400 members, {total} (member, N) pairs"))
}

/// `sup_{y ∈ E} ‖(I - P)y‖` for `P` the orthogonal projector onto the span
/// of `g` inside the ellipsoid axes.
fn oracle_distance(lambdas: &[f64], g: &DMatrix<f64>) -> f64 {
    let k = lambdas.len();
    let q = g.clone().qr().q();
    let complement = DMatrix::identity(k, k) - &q * q.transpose();
    let s = DMatrix::from_diagonal(&DVector::from_iterator(k, lambdas.iter().map(|l| 1.0 / l.sqrt())));
    let a = &s * complement * &s;
    let a = 0.5 * (&a + a.transpose());
    SymmetricEigen::new(a).eigenvalues.max().max(0.0).sqrt()
}

fn criterion_8() -> Outcome {
    let spec = disk(DiskProblem::free(1, 4, 24))?;
    let ell = TruncatedEllipsoid::from_disk(&spec, 12).map_err(|e| e.to_string())?;
    let mut sorted: Vec<f64> = spec.merged.iter().map(|e| e.eigenvalue).collect();
    sorted.sort_by(f64::total_cmp);
    let (nf, k) = (ell.n_free(), ell.n_bound());
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut min_gap = f64::INFINITY;
    for n in 1..=6 {
        let bound = 1.0 / sorted[n].sqrt();
        extremality_experiment(&ell, n, 200, 800 + n as u64).map_err(|e| format!("N = {n}: {e}"))?;
        for t in 0..200 {
            let g = DMatrix::from_fn(k, n, |_, _| StandardNormal.sample(&mut rng));
            let mut full = DMatrix::zeros(nf + k, nf + n);
            for i in 0..nf {
                full[(i, i)] = 1.0;
            }
            full.view_mut((nf, nf), (k, n)).copy_from(&g);
            let sub = Subspace::from_columns(&full).map_err(|e| e.to_string())?;
            let d = dist_subspace_to_ellipsoid(&sub, &ell).map_err(|e| e.to_string())?;
            let d = d.finite().ok_or_else(|| format!("N = {n}, trial {t}: infinite distance"))?;
            let o = oracle_distance(ell.lambdas(), &g);
            ensure((d - o).abs() <= 1e-9 * o.max(1.0), || format!("N = {n}, trial {t}: {d} vs oracle {o}"))?;
            ensure(o >= bound - 1e-9, || format!("N = {n}, trial {t}: {o} below {bound}"))?;
            min_gap = min_gap.min(o - bound);
        }
        let axes = dist_subspace_to_ellipsoid(&ell.extremal_subspace(n).map_err(|e| e.to_string())?, &ell)
            .map_err(|e| e.to_string())?;
        let axes = axes.finite().ok_or("axis subspace at infinite distance")?;
        ensure((axes - bound).abs() <= 1e-9, || format!("N = {n}: axis subspace {axes} vs {bound}"))?;
        let missing = missing_axis_distances(&ell, n).map_err(|e| e.to_string())?;
        ensure(missing.len() == nf && missing.iter().all(|d| *d == ExtReal::Infinite), || {
            format!("N = {n}: removing a cylinder axis left a finite distance")
        })?;
    }
    Ok(format!("K = 12, {nf} cylinder axes, min gap over trials {min_gap:.3e}"))
}

fn criterion_9() -> Outcome {
    let spec = disk(DiskProblem::free(2, 0, 24))?;
    let demo = unbounded_distance_demo(&spec, 0, 1, 5, &[0.0, 1.0, 2.0, 4.0, 8.0, 16.0]).map_err(|e| e.to_string())?;
    let s = (PI / 12.0).sqrt();
    let es = (demo.slope - s).abs();
    ensure(es <= 1e-8, || format!("slope {} vs {s} (err {es:e})", demo.slope))?;
    ensure(demo.intercept.abs() <= 1e-10, || format!("intercept {:e}", demo.intercept))?;
    Ok(format!("slope err {es:.1e}, intercept {:.1e}", demo.intercept.abs()))
}

fn criterion_10() -> Outcome {
    const SHOWN: [[f64; 5]; 5] = [
        [0.0, 0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0, 0.0],
        [2.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0, 0.0],
    ];
    let funcs: [fn(f64, f64) -> f64; 5] = [|_, _| 1.0, |x, _| x, |_, y| y, |x, y| x * x - y * y, |x, y| x * y];
    let h = 1e-3;
    let check = jacobi_matrix_check();
    for (i, f) in funcs.iter().enumerate() {
        let row = [
            (f(h, 0.0) - 2.0 * f(0.0, 0.0) + f(-h, 0.0)) / (h * h),
            (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4.0 * h * h),
            (f(h, 0.0) - f(-h, 0.0)) / (2.0 * h),
            (f(0.0, h) - f(0.0, -h)) / (2.0 * h),
            f(0.0, 0.0),
        ];
        for j in 0..5 {
            ensure((row[j] - SHOWN[i][j]).abs() < 1e-6, || format!("oracle entry ({i},{j}) = {}", row[j]))?;
            ensure(check.matrix[i][j] as f64 == SHOWN[i][j], || format!("entry ({i},{j}) = {}", check.matrix[i][j]))?;
        }
        for (x, y) in [(0.3, -0.2), (1.1, 0.7)] {
            let lap = (f(x + h, y) + f(x - h, y) + f(x, y + h) + f(x, y - h) - 4.0 * f(x, y)) / (h * h);
            ensure(lap.abs() < 1e-6, || format!("function {i} not harmonic at ({x}, {y})"))?;
        }
        ensure(check.harmonic[i], || format!("library marks function {i} non-harmonic"))?;
    }
    let det = DMatrix::from_fn(5, 5, |i, j| SHOWN[i][j]).determinant();
    ensure((det.abs() - 2.0).abs() < 1e-12, || format!("oracle determinant {det}"))?;
    ensure(check.determinant.abs() == 2, || format!("determinant {}", check.determinant))?;
    Ok(format!("matrix matches entry for entry, |det| = {}", check.determinant.abs()))
}

const SUBCOMMANDS: [&str; 11] = [
    "spectrum1d",
    "widths1d",
    "asymptotics",
    "jackson1d",
    "disk-spectrum",
    "clamped-free",
    "jackson-disk",
    "extremality",
    "unbounded-demo",
    "jacobi-check",
    "green-check",
];

fn criterion_11() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_polywidth");
    for sub in SUBCOMMANDS {
        for format in ["json", "csv"] {
            let run = || {
                Command::new(bin)
                    .args([sub, "--seed", "5", "--format", format])
                    .output()
                    .map_err(|e| e.to_string())
            };
            let (a, b) = (run()?, run()?);
            ensure(a.status.code() == Some(0), || format!("{sub}: exit {:?}", a.status.code()))?;
            ensure(!a.stdout.is_empty() && a.stdout == b.stdout, || format!("{sub} --format {format}: outputs differ"))?;
        }
    }
    Ok(format!("{} subcommands x 2 formats byte-identical", SUBCOMMANDS.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("1D Neumann oracle", criterion_1),
        ("1D free-free beam oracle", criterion_2),
        ("eigenvalue asymptotics", criterion_3),
        ("clamped disk Bessel oracle", criterion_4),
        ("clamped-to-free equivalence", criterion_5),
        ("Green formula", criterion_6),
        ("Jackson suites", criterion_7),
        ("width extremality", criterion_8),
        ("unbounded distance", criterion_9),
        ("Jacobi matrix", criterion_10),
        ("CLI determinism", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS criterion {:>2} {name}: {detail}", i + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL criterion {:>2} {name}: {reason}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
