//! Closed-form and root-finding reference values that do not pass through
//! any Galerkin discretization. The CLI compares computed spectra against
//! these.

use std::f64::consts::PI;

use crate::numkernel::{
    bessel_i, bessel_i_prime, bessel_j, bessel_j_prime, bracket_roots, brent_root,
};
use crate::{Error, Result};

const ROOT_TOL: f64 = 1e-14;

/// `j`-th positive eigenvalue `(πj)²` of `-u'' = λu` with Neumann conditions
/// on `[0, 1]`.
pub fn neumann_eigenvalue(j: usize) -> f64 {
    let k = PI * j as f64;
    k * k
}

/// First `count` positive roots of `cos k · cosh k = 1` (free-free beam).
///
/// Root `j` lies within `0.1` of `(j + 1/2)π`; each is bracketed there and
/// polished by Brent. The equation is evaluated as `cos k - 1/cosh k`.
pub fn free_beam_roots(count: usize) -> Result<Vec<f64>> {
    let f = |k: f64| k.cos() - 1.0 / k.cosh();
    (1..=count)
        .map(|j| {
            let c = (j as f64 + 0.5) * PI;
            brent_root(f, c - 0.3, c + 0.3, ROOT_TOL)
        })
        .collect()
}

/// Positive eigenvalues `k_j⁴` of `u'''' = λu` with free ends on `[0, 1]`.
pub fn free_beam_eigenvalues(count: usize) -> Result<Vec<f64>> {
    Ok(free_beam_roots(count)?.into_iter().map(|k| k.powi(4)).collect())
}

/// Frequency determinant of the clamped circular plate in mode `l`, divided
/// by `I_l(k)`: `J_l(k) I_l'(k)/I_l(k) - J_l'(k)`.
pub fn clamped_plate_determinant(l: usize, k: f64) -> Result<f64> {
    Ok(bessel_j(l, k)? * bessel_i_prime(l, k)? / bessel_i(l, k)? - bessel_j_prime(l, k)?)
}

/// First `count` roots `k` of the clamped-plate determinant in mode `l`;
/// the clamped eigenvalues of `Δ²` on the unit disk are `k⁴`.
pub fn clamped_plate_roots(l: usize, count: usize) -> Result<Vec<f64>> {
    let upper = 55.0;
    let f = |k: f64| clamped_plate_determinant(l, k).unwrap_or(f64::NAN);
    let roots = bracket_roots(f, 0.5, upper, 5500, ROOT_TOL)?;
    if roots.len() < count {
        return Err(Error::Range(format!(
            "only {} clamped-plate roots below k = {upper} for l = {l}",
            roots.len()
        )));
    }
    Ok(roots[..count].to_vec())
}

/// Angular normalization of mode `l` on the unit disk: `∫ cos²(lθ) dθ`.
pub fn angular_weight(l: usize) -> f64 {
    if l == 0 {
        2.0 * PI
    } else {
        PI
    }
}

/// `L²(B)` distance from `r^{l+2m}·cos(lθ)` to `span{r^{l+2i} cos(lθ) : i < m}`
/// from exact monomial moments, as a ratio of Gram determinants.
pub fn monomial_residual_norm(l: usize, m: usize) -> f64 {
    let w = angular_weight(l);
    let gram = |size: usize| -> f64 {
        let g = nalgebra::DMatrix::from_fn(size, size, |a, b| {
            w / (2 * l + 2 * a + 2 * b + 2) as f64
        });
        if size == 0 {
            1.0
        } else {
            g.determinant()
        }
    };
    (gram(m + 1) / gram(m)).sqrt()
}
