//! Integer-order Bessel functions `J_l` and `I_l` on `0 ≤ l ≤ 20`,
//! `0 ≤ x ≤ 60`.
//!
//! `J_l` uses the ascending series for `x ≤ 8` and Miller's backward
//! recurrence normalized by `J_0 + 2 Σ J_2k = 1` above; absolute error stays
//! below `1e-10` over the whole range. `I_l` is summed from its ascending
//! series, which has only positive terms; its error is relative (`I_0(60)`
//! is about `6e24`).

use crate::{Error, Result};

pub const MAX_ORDER: usize = 20;
pub const MAX_ARG: f64 = 60.0;
const SERIES_LIMIT: f64 = 8.0;

fn check(l: usize, x: f64) -> Result<()> {
    if l > MAX_ORDER || !(0.0..=MAX_ARG).contains(&x) {
        return Err(Error::Domain(format!(
            "Bessel arguments l = {l}, x = {x} outside 0 <= l <= {MAX_ORDER}, 0 <= x <= {MAX_ARG}"
        )));
    }
    Ok(())
}

pub fn bessel_j(l: usize, x: f64) -> Result<f64> {
    check(l, x)?;
    Ok(j_unchecked(l, x))
}

pub fn bessel_i(l: usize, x: f64) -> Result<f64> {
    check(l, x)?;
    Ok(i_unchecked(l, x))
}

/// `J_l'(x) = (J_{l-1}(x) - J_{l+1}(x)) / 2`, with `J_{-1} = -J_1`.
pub fn bessel_j_prime(l: usize, x: f64) -> Result<f64> {
    check(l, x)?;
    let lower = if l == 0 {
        -j_unchecked(1, x)
    } else {
        j_unchecked(l - 1, x)
    };
    Ok(0.5 * (lower - j_unchecked(l + 1, x)))
}

/// `I_l'(x) = (I_{l-1}(x) + I_{l+1}(x)) / 2`, with `I_{-1} = I_1`.
pub fn bessel_i_prime(l: usize, x: f64) -> Result<f64> {
    check(l, x)?;
    let lower = if l == 0 {
        i_unchecked(1, x)
    } else {
        i_unchecked(l - 1, x)
    };
    Ok(0.5 * (lower + i_unchecked(l + 1, x)))
}

fn ascending_series(l: usize, x: f64, sign: f64) -> f64 {
    let h = 0.5 * x;
    let mut term = 1.0;
    for k in 1..=l {
        term *= h / k as f64;
    }
    let mut sum = term;
    let h2 = h * h;
    for k in 1..400 {
        term *= sign * h2 / (k as f64 * (k + l) as f64);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

fn j_unchecked(l: usize, x: f64) -> f64 {
    if x == 0.0 {
        return if l == 0 { 1.0 } else { 0.0 };
    }
    if x <= SERIES_LIMIT {
        return ascending_series(l, x, -1.0);
    }
    let top = (l as f64).max(x);
    let mut m = (top + 30.0 + (40.0 * top).sqrt()) as usize;
    m += m % 2;
    let two_over_x = 2.0 / x;
    let mut next = 0.0;
    let mut cur = 1e-300;
    let mut norm = 0.0;
    let mut wanted = 0.0;
    for k in (1..=m).rev() {
        // cur = J_k, next = J_{k+1} (unnormalized)
        let prev = k as f64 * two_over_x * cur - next;
        next = cur;
        cur = prev;
        // now cur = J_{k-1}
        if k - 1 == l {
            wanted = cur;
        }
        if (k - 1) % 2 == 0 && k - 1 > 0 {
            norm += 2.0 * cur;
        }
        if cur.abs() > 1e250 {
            cur *= 1e-250;
            next *= 1e-250;
            norm *= 1e-250;
            wanted *= 1e-250;
        }
    }
    norm += cur;
    wanted / norm
}

fn i_unchecked(l: usize, x: f64) -> f64 {
    if x == 0.0 {
        return if l == 0 { 1.0 } else { 0.0 };
    }
    ascending_series(l, x, 1.0)
}
