//! Legendre polynomial recurrences and exact coefficient-space operators.
//!
//! `P_n` denotes the Legendre polynomial on `[-1, 1]`; the shifted family on
//! `[0, 1]` is `P̃_n(s) = P_n(2s - 1)`.

use nalgebra::DMatrix;

/// `P_0(x), …, P_{n-1}(x)` by the three-term recurrence.
pub fn values(x: f64, n: usize) -> Vec<f64> {
    let mut p = vec![0.0; n];
    if n > 0 {
        p[0] = 1.0;
    }
    if n > 1 {
        p[1] = x;
    }
    for k in 1..n.saturating_sub(1) {
        let kf = k as f64;
        p[k + 1] = ((2.0 * kf + 1.0) * x * p[k] - kf * p[k - 1]) / (kf + 1.0);
    }
    p
}

/// `table[k][m] = P_m^{(k)}(x)` for `k ≤ order`, `m < n`, using
/// `P_{m+1}^{(k)} = P_{m-1}^{(k)} + (2m + 1) P_m^{(k-1)}`.
///
/// Valid at the endpoints `x = ±1`, unlike the `(1 - x²)` form.
pub fn derivative_table(x: f64, n: usize, order: usize) -> Vec<Vec<f64>> {
    let mut table = vec![values(x, n)];
    for k in 1..=order {
        let prev = &table[k - 1];
        let mut d = vec![0.0; n];
        for m in 0..n.saturating_sub(1) {
            let below = if m >= 1 { d[m - 1] } else { 0.0 };
            d[m + 1] = below + (2 * m + 1) as f64 * prev[m];
        }
        table.push(d);
    }
    table
}

/// Coefficient matrix of `d/dx` on `span{P_0, …, P_{n-1}}`:
/// `P_m' = Σ_{k < m, m - k odd} (2k + 1) P_k`. Column `m` holds the image of
/// `P_m`. Entries are small integers, hence exact.
pub fn derivative_matrix(n: usize) -> DMatrix<f64> {
    DMatrix::from_fn(n, n, |k, m| {
        if k < m && (m - k) % 2 == 1 {
            (2 * k + 1) as f64
        } else {
            0.0
        }
    })
}

/// Coefficient matrix (`(n + 1) x n`) of multiplication by `x`:
/// `x P_k = ((k + 1) P_{k+1} + k P_{k-1}) / (2k + 1)`.
pub fn multiply_by_x(n: usize) -> DMatrix<f64> {
    let mut a = DMatrix::zeros(n + 1, n);
    for k in 0..n {
        let d = (2 * k + 1) as f64;
        a[(k + 1, k)] = (k + 1) as f64 / d;
        if k >= 1 {
            a[(k - 1, k)] = k as f64 / d;
        }
    }
    a
}

/// Shifted-Legendre coefficients of the monomial `s^m`:
/// `s^m = Σ_k (2k + 1) (m!)² / ((m + k + 1)! (m - k)!) P̃_k(s)`.
pub fn monomial_in_shifted(m: usize) -> Vec<f64> {
    // ratio of factorials evaluated as a running product to stay in range
    (0..=m)
        .map(|k| {
            let mut c = (2 * k + 1) as f64;
            // (m!)² / ((m+k+1)! (m-k)!) = Π_{i=m-k+1}^{m} i / Π_{i=m+1}^{m+k+1} i
            for i in (m - k + 1)..=m {
                c *= i as f64;
            }
            for i in (m + 1)..=(m + k + 1) {
                c /= i as f64;
            }
            c
        })
        .collect()
}
