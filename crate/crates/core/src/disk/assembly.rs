//! Mode-`l` operators on the radial family `r^l P̃_m(r²)`, `P̃_m(s) = P_m(2s - 1)`.

use nalgebra::DMatrix;

use super::{DiskProblem, Variant};
use crate::numkernel::linalg::{null_space, symmetrize};
use crate::numkernel::{gauss_legendre, legendre, GalerkinPair};
use crate::reference::angular_weight;
use crate::{Error, Result};

const CONSTRAINT_RANK_TOL: f64 = 1e-10;

/// Matrix of the mode-`l` Laplacian `f'' + f'/r - l² f/r²` on
/// `{r^l P̃_m(r²)}`, `m < n`.
///
/// On `f = r^l g(r²)` it acts as `r^l (4 s g'' + 4 (l + 1) g')`, so the image
/// stays in the family with the degree in `s` lowered by one. Entries are
/// built from the integer Legendre derivative and multiplication tables.
pub fn radial_laplacian_matrix(l: usize, n: usize) -> DMatrix<f64> {
    let d = legendre::derivative_matrix(n) * 2.0;
    let x = legendre::multiply_by_x(n);
    // s = (x + 1)/2; the dropped last row only receives degree n terms,
    // which s·g'' never produces
    let s = DMatrix::from_fn(n, n, |i, j| 0.5 * (x[(i, j)] + if i == j { 1.0 } else { 0.0 }));
    (s * (&d * &d)) * 4.0 + d * (4.0 * (l + 1) as f64)
}

/// `∫_B u v` for `u = r^l P̃_i(r²) cos(lθ)`, `v = r^l P̃_j(r²) cos(lθ)`
/// (or both with `sin`): `(w_l / 2) ∫₀¹ s^l P̃_i P̃_j ds`.
pub fn mode_mass(l: usize, n: usize) -> Result<DMatrix<f64>> {
    let degree = 2 * (n - 1) + l;
    let rule = gauss_legendre((degree + 2) / 2 + 2)?;
    let w_l = angular_weight(l);
    let mut m = DMatrix::zeros(n, n);
    for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
        let s = 0.5 * (x + 1.0);
        let w = 0.25 * w_l * w * s.powi(l as i32);
        let p = legendre::values(x, n);
        for j in 0..n {
            for i in 0..=j {
                m[(i, j)] += w * p[i] * p[j];
            }
        }
    }
    for j in 0..n {
        for i in 0..j {
            m[(j, i)] = m[(i, j)];
        }
    }
    Ok(m)
}

/// `(f(1), f'(1))` for `f(r) = r^l Σ c_m P̃_m(r²)`.
pub fn boundary_trace(l: usize, coeffs: &[f64]) -> (f64, f64) {
    coeffs
        .iter()
        .enumerate()
        .fold((0.0, 0.0), |(v, d), (m, c)| {
            (v + c, d + c * (l + 2 * m * (m + 1)) as f64)
        })
}

/// `r^l Σ c_m P̃_m(r²)`.
pub fn evaluate_radial(l: usize, coeffs: &[f64], r: f64) -> f64 {
    let p = legendre::values(2.0 * r * r - 1.0, coeffs.len());
    r.powi(l as i32) * coeffs.iter().zip(&p).map(|(c, q)| c * q).sum::<f64>()
}

pub(crate) fn laplacian_power(l: usize, n: usize, p: usize) -> DMatrix<f64> {
    let a = radial_laplacian_matrix(l, n);
    let mut g = DMatrix::identity(n, n);
    for _ in 0..p {
        g = &a * g;
    }
    g
}

/// Rows `Δʲu(1)` and `(Δʲu)'(1)`, `j < p`.
pub fn constraint_matrix(l: usize, p: usize, n: usize) -> DMatrix<f64> {
    let a = radial_laplacian_matrix(l, n);
    let mut power = DMatrix::identity(n, n);
    let mut c = DMatrix::zeros(2 * p, n);
    for j in 0..p {
        for col in 0..n {
            let image: Vec<f64> = power.column(col).iter().copied().collect();
            let (v, d) = boundary_trace(l, &image);
            c[(2 * j, col)] = v;
            c[(2 * j + 1, col)] = d;
        }
        power = &a * power;
    }
    c
}

/// Factored form of one mode: stiffness `opᵀ W op`, mass `mass`, and for the
/// clamped variant the basis `reduction` of the constrained trial space.
pub(crate) struct ModeSystem {
    pub op: DMatrix<f64>,
    pub range_mass: DMatrix<f64>,
    pub mass: DMatrix<f64>,
    pub reduction: Option<DMatrix<f64>>,
    pub full_mass: DMatrix<f64>,
}

pub(crate) fn mode_system(problem: &DiskProblem, l: usize) -> Result<ModeSystem> {
    let (p, n) = (problem.p(), problem.radial_size());
    let full_mass = mode_mass(l, n)?;
    let g = laplacian_power(l, n, p).rows(0, n - p).into_owned();
    let range_mass = full_mass.view((0, 0), (n - p, n - p)).into_owned();
    match problem.variant() {
        Variant::Free => Ok(ModeSystem {
            op: g,
            range_mass,
            mass: full_mass.clone(),
            reduction: None,
            full_mass,
        }),
        Variant::Clamped => {
            let z = clamped_basis(l, p, n)?;
            let mut mass = z.transpose() * &full_mass * &z;
            symmetrize(&mut mass);
            Ok(ModeSystem {
                op: g * &z,
                range_mass,
                mass,
                reduction: Some(z),
                full_mass,
            })
        }
    }
}

/// Basis of the null space of [`constraint_matrix`].
///
/// The `2p` conditions on `r^l g(r²)` are equivalent to `g^{(i)}(1) = 0` for
/// `i < 2p`, so the null space is `{(1 - s)^{2p} h(s)}`. Its basis
/// `(1 - s)^{2p} P̃_k` is built with the exact multiplication table; the
/// constraint matrix is still factored to confirm its rank and the basis is
/// checked against it.
pub fn clamped_basis(l: usize, p: usize, n: usize) -> Result<DMatrix<f64>> {
    let c = constraint_matrix(l, p, n);
    let qr_null = null_space(&c, CONSTRAINT_RANK_TOL)
        .map_err(|e| Error::Assembly(format!("clamped constraints for mode l = {l}: {e}")))?;
    let x = legendre::multiply_by_x(n);
    // 1 - s = (1 - x)/2, truncated to n rows
    let one_minus_s =
        DMatrix::from_fn(n, n, |i, j| 0.5 * (if i == j { 1.0 } else { 0.0 } - x[(i, j)]));
    let mut z = DMatrix::identity(n, n).columns(0, qr_null.ncols()).into_owned();
    for _ in 0..2 * p {
        z = &one_minus_s * z;
    }
    let residual = (&c * &z).amax();
    let scale = c.amax() * z.amax();
    if !(residual <= 1e-12 * scale) {
        return Err(Error::Assembly(format!(
            "clamped basis violates the constraints for mode l = {l}: {residual:e}"
        )));
    }
    Ok(z)
}

/// Stiffness `(Δ^p)ᵀ M Δ^p` and mass of mode `l`; for the clamped variant both
/// are expressed in an orthonormal basis of the constrained coefficients.
pub fn assemble_disk(problem: &DiskProblem, l: usize) -> Result<GalerkinPair> {
    if l > problem.l_max() {
        return Err(Error::Range(format!("mode {l} beyond l_max = {}", problem.l_max())));
    }
    let sys = mode_system(problem, l)?;
    let mut stiffness = sys.op.transpose() * &sys.range_mass * &sys.op;
    symmetrize(&mut stiffness);
    GalerkinPair::new(stiffness, sys.mass)
}
