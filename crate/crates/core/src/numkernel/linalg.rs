//! Small dense factorizations on `nalgebra::DMatrix`.

use nalgebra::{DMatrix, DVector};

use crate::{Error, Result};

/// Lower Cholesky factor `L` with `a = L Lᵀ`; fails on the first
/// non-positive pivot.
pub fn cholesky(a: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::Shape(format!("cholesky of {}x{}", n, a.ncols())));
    }
    let mut l = DMatrix::zeros(n, n);
    for j in 0..n {
        let mut d = a[(j, j)];
        for k in 0..j {
            d -= l[(j, k)] * l[(j, k)];
        }
        if !(d > 0.0) {
            return Err(Error::NotPositiveDefinite { pivot: j, value: d });
        }
        let d = d.sqrt();
        l[(j, j)] = d;
        for i in j + 1..n {
            let mut s = a[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)];
            }
            l[(i, j)] = s / d;
        }
    }
    Ok(l)
}

/// Solves `L X = B` for lower-triangular `L`.
pub fn solve_lower(l: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    let n = l.nrows();
    let mut x = b.clone();
    for c in 0..x.ncols() {
        for i in 0..n {
            let mut s = x[(i, c)];
            for k in 0..i {
                s -= l[(i, k)] * x[(k, c)];
            }
            x[(i, c)] = s / l[(i, i)];
        }
    }
    x
}

/// Solves `U X = B` for upper-triangular `U`.
pub fn solve_upper(u: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    let n = u.nrows();
    let mut x = b.clone();
    for c in 0..x.ncols() {
        for i in (0..n).rev() {
            let mut s = x[(i, c)];
            for k in i + 1..n {
                s -= u[(i, k)] * x[(k, c)];
            }
            x[(i, c)] = s / u[(i, i)];
        }
    }
    x
}

/// Householder QR with the full orthogonal factor: `a = Q R`, `Q` is
/// `m x m`, `R` is `m x n` upper trapezoidal.
pub fn householder_qr(a: &DMatrix<f64>) -> (DMatrix<f64>, DMatrix<f64>) {
    let (m, n) = a.shape();
    let mut r = a.clone();
    let mut q = DMatrix::<f64>::identity(m, m);
    for k in 0..n.min(m.saturating_sub(1)) {
        let norm: f64 = (k..m).map(|i| r[(i, k)] * r[(i, k)]).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let alpha = if r[(k, k)] > 0.0 { -norm } else { norm };
        let mut v = DVector::<f64>::zeros(m - k);
        for i in k..m {
            v[i - k] = r[(i, k)];
        }
        v[0] -= alpha;
        let vnorm2 = v.norm_squared();
        if vnorm2 == 0.0 {
            continue;
        }
        // R <- (I - 2vvᵀ/vᵀv) R
        for j in k..n {
            let dot: f64 = (k..m).map(|i| v[i - k] * r[(i, j)]).sum();
            let f = 2.0 * dot / vnorm2;
            for i in k..m {
                r[(i, j)] -= f * v[i - k];
            }
        }
        // Q <- Q (I - 2vvᵀ/vᵀv)
        for i in 0..m {
            let dot: f64 = (k..m).map(|j| q[(i, j)] * v[j - k]).sum();
            let f = 2.0 * dot / vnorm2;
            for j in k..m {
                q[(i, j)] -= f * v[j - k];
            }
        }
        for i in k + 1..m {
            r[(i, k)] = 0.0;
        }
    }
    (q, r)
}

/// Orthonormal basis (columns) of the null space of `c`, assuming `c` has
/// full row rank; the rank is checked against `rel_tol` times the largest
/// pivot.
pub fn null_space(c: &DMatrix<f64>, rel_tol: f64) -> Result<DMatrix<f64>> {
    let (rows, cols) = c.shape();
    if rows > cols {
        return Err(Error::Shape(format!(
            "null space of a {rows}x{cols} constraint matrix"
        )));
    }
    let (q, r) = householder_qr(&c.transpose());
    check_pivots(&r, rows, rel_tol)?;
    Ok(q.columns(rows, cols - rows).into_owned())
}

pub(crate) fn check_pivots(r: &DMatrix<f64>, rank: usize, rel_tol: f64) -> Result<()> {
    let scale = (0..rank).map(|i| r[(i, i)].abs()).fold(0.0, f64::max);
    for i in 0..rank {
        let v = r[(i, i)].abs();
        if !(v > rel_tol * scale) {
            return Err(Error::RankDeficient {
                pivot: i,
                value: v,
                scale,
            });
        }
    }
    Ok(())
}

/// Largest `|a_ij - a_ji|` relative to the largest entry, with its position.
pub fn asymmetry(a: &DMatrix<f64>) -> (f64, usize, usize) {
    let n = a.nrows();
    let scale = a.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut worst = (0.0, 0, 0);
    if scale == 0.0 {
        return worst;
    }
    for i in 0..n {
        for j in i + 1..n {
            let d = (a[(i, j)] - a[(j, i)]).abs() / scale;
            if d > worst.0 {
                worst = (d, i, j);
            }
        }
    }
    worst
}

pub fn symmetrize(a: &mut DMatrix<f64>) {
    let n = a.nrows();
    for i in 0..n {
        for j in i + 1..n {
            let m = 0.5 * (a[(i, j)] + a[(j, i)]);
            a[(i, j)] = m;
            a[(j, i)] = m;
        }
    }
}
