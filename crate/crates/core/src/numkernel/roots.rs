use crate::{Error, Result};

const MAX_ITER: usize = 500;

/// Brent's bracketing root finder (inverse quadratic interpolation with
/// secant and bisection fallbacks).
///
/// Requires `f(a)·f(b) ≤ 0` and `tol ≥ 1e-14`. On return the root is
/// bracketed by an interval of width at most `tol + 4ε|x|`.
pub fn brent_root<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if !(tol >= 1e-14) {
        return Err(Error::Domain(format!("tolerance {tol:e} below 1e-14")));
    }
    let (mut a, mut b) = (a, b);
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() || fa.is_nan() || fb.is_nan() {
        return Err(Error::Bracket { a, b, fa, fb });
    }
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;
    for _ in 0..MAX_ITER {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b);
    }
    Ok(b)
}

/// All roots of `f` on `[a, b]` that show up as sign changes on a uniform
/// grid of `steps` cells, each polished by [`brent_root`].
pub fn bracket_roots<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    steps: usize,
    tol: f64,
) -> Result<Vec<f64>> {
    let h = (b - a) / steps as f64;
    let mut roots = Vec::new();
    let mut x0 = a;
    let mut f0 = f(x0);
    for i in 1..=steps {
        let x1 = if i == steps { b } else { a + h * i as f64 };
        let f1 = f(x1);
        if f0 == 0.0 {
            roots.push(x0);
        } else if f0.signum() != f1.signum() && f1 != 0.0 {
            roots.push(brent_root(&f, x0, x1, tol)?);
        }
        x0 = x1;
        f0 = f1;
    }
    if f0 == 0.0 {
        roots.push(x0);
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bisect<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64) -> f64 {
        let fa = f(a);
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if m == a || m == b {
                break;
            }
            if f(m).signum() == fa.signum() {
                a = m;
            } else {
                b = m;
            }
        }
        0.5 * (a + b)
    }

    #[test]
    fn sqrt_two() {
        let x = brent_root(|x| x * x - 2.0, 1.0, 2.0, 1e-14).unwrap();
        assert!((x - 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn odd_function_root_at_zero() {
        let x = brent_root(|x| x, -1.0, 1.0, 1e-14).unwrap();
        assert!(x.abs() < 1e-14);
    }

    #[test]
    fn free_beam_first_root_matches_bisection() {
        let f = |k: f64| k.cos() * k.cosh() - 1.0;
        let oracle = bisect(f, 4.0, 5.0);
        let x = brent_root(f, 4.0, 5.0, 1e-14).unwrap();
        assert!((x - oracle).abs() < 1e-13);
        assert!((x - 4.730_040_7).abs() < 1e-7);
    }

    #[test]
    fn no_sign_change_is_a_bracket_error() {
        assert!(matches!(
            brent_root(|x| x * x + 1.0, -1.0, 1.0, 1e-12),
            Err(Error::Bracket { .. })
        ));
    }

    #[test]
    fn tolerance_below_floor_is_rejected() {
        assert!(matches!(
            brent_root(|x| x, -1.0, 1.0, 1e-16),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn scan_finds_all_sine_roots() {
        let roots = bracket_roots(f64::sin, 0.5, 10.0, 97, 1e-14).unwrap();
        assert_eq!(roots.len(), 3);
        for (k, r) in roots.iter().enumerate() {
            assert!((r - (k + 1) as f64 * std::f64::consts::PI).abs() < 1e-13);
        }
    }
}
