//! Small numerical utilities shared across modules: hyperbolic helpers,
//! bracketed root finding, adaptive quadrature, and a least-squares slope.

use crate::{Error, Result};

/// Hyperbolic cotangent.
pub fn coth(x: f64) -> f64 {
    1.0 / x.tanh()
}

/// Hyperbolic cosecant.
pub fn csch(x: f64) -> f64 {
    1.0 / x.sinh()
}

/// `sinh(x)/x`, continuous through `x = 0`.
pub fn sinhc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x.sinh() / x
    }
}

/// Maximum bisection iterations before giving up on the bracket.
const BISECT_MAX_ITER: usize = 200;

/// Bisection on `[a, b]` for a continuous `f` with a sign change.
///
/// Runs to floating-point bracket exhaustion or `BISECT_MAX_ITER` halvings,
/// whichever comes first.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64) -> Result<f64> {
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoConvergence(format!(
            "no sign change on [{a}, {b}]"
        )));
    }
    for _ in 0..BISECT_MAX_ITER {
        let mid = 0.5 * (a + b);
        if mid == a || mid == b {
            return Ok(mid);
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}

/// Adaptive Simpson quadrature of `f` over `[a, b]` to absolute tolerance
/// `tol`. The recursion is capped so the interval count stays below ~10⁶.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Result<f64> {
    // 2^20 leaf intervals at full depth.
    const MAX_DEPTH: u32 = 20;
    fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        ((b - a) / 6.0 * (fa + 4.0 * fm + fb), m, fm)
    }
    fn recurse<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        whole: f64,
        m: f64,
        fm: f64,
        tol: f64,
        depth: u32,
    ) -> Result<f64> {
        let (left, lm, flm) = simpson(f, a, fa, m, fm);
        let (right, rm, frm) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if delta.abs() <= 15.0 * tol {
            return Ok(left + right + delta / 15.0);
        }
        if depth == 0 {
            return Err(Error::NoConvergence(
                "adaptive quadrature hit subdivision cap".into(),
            ));
        }
        let l = recurse(f, a, fa, m, fm, left, lm, flm, 0.5 * tol, depth - 1)?;
        let r = recurse(f, m, fm, b, fb, right, rm, frm, 0.5 * tol, depth - 1)?;
        Ok(l + r)
    }
    if a == b {
        return Ok(0.0);
    }
    let fa = f(a);
    let fb = f(b);
    let (whole, m, fm) = simpson(f, a, fa, b, fb);
    recurse(f, a, fa, b, fb, whole, m, fm, tol, MAX_DEPTH)
}

/// Least-squares slope of `ys` against `xs`.
pub fn ls_slope(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        num += (x - mx) * (y - my);
        den += (x - mx) * (x - mx);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_sqrt2() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0).unwrap();
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-14);
    }

    #[test]
    fn bisect_rejects_bad_bracket() {
        assert!(bisect(|x| x * x + 1.0, -1.0, 1.0).is_err());
    }

    #[test]
    fn simpson_integrates_exponential() {
        let v = adaptive_simpson(&|x: f64| x.exp(), 0.0, 1.0, 1e-12).unwrap();
        assert!((v - (1f64.exp() - 1.0)).abs() < 1e-11);
    }

    #[test]
    fn slope_of_line_is_exact() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let ys = [2.0, 4.0, 6.0, 8.0];
        assert!((ls_slope(&xs, &ys) - 2.0).abs() < 1e-15);
    }
}
