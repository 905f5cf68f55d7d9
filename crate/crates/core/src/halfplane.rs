//! Upper half-plane geometry and its link to the momentum-space evolution.
//!
//! Geodesics of `H = {z : Im z > 0}` are vertical lines and semicircles
//! centered on the real axis; the distance between two points is the
//! logarithm of the cross-ratio of the pair with the geodesic's boundary
//! endpoints, `ρ(z,w) = ln[(w−z*)(z−w*)/((z−z*)(w−w*))]`, ordered so the
//! logarithm is nonnegative.
//!
//! On the momentum side, the companion matrix `E = [[0, −p²],[1, 2p0]]` of
//! the mass-shell quadratic `x² − 2p0·x + p² = 0` generates the evolution
//! `exp(Eφ) = g0 + E·g1`; the ratio `U = −g0/g1` obeys the Riccati equation
//! `dU/dφ = U² − 2p0U + p²` and recovers `p0 − U = m·coth(mφ)`. The table
//! integral `2m∫dx/(x²−2p0x+p²)` over a segment between the roots equals the
//! same cross-ratio logarithm — hyperbolic distance measured in momentum
//! space.

use num_complex::Complex64;

use crate::numeric::{adaptive_simpson, sinhc};
use crate::{Error, Result};

type C = Complex64;

/// Absolute tolerance of the adaptive quadrature used for the momentum
/// integral.
pub const QUADRATURE_TOL: f64 = 1e-10;

/// A point of the open upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlanePoint {
    pub re: f64,
    pub im: f64,
}

impl HalfPlanePoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !(im > 0.0) || !re.is_finite() || !im.is_finite() {
            return Err(Error::domain(format!(
                "({re}, {im}) is not in the open upper half-plane"
            )));
        }
        Ok(Self { re, im })
    }

    pub fn as_complex(&self) -> C {
        C::new(self.re, self.im)
    }
}

/// A point of the extended plane `C ∪ {∞}`, for cross-ratio and boundary
/// work.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedPoint {
    Finite(C),
    Infinity,
}

impl ExtendedPoint {
    pub fn real(x: f64) -> Self {
        ExtendedPoint::Finite(C::new(x, 0.0))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedPoint::Infinity)
    }
}

impl From<HalfPlanePoint> for ExtendedPoint {
    fn from(p: HalfPlanePoint) -> Self {
        ExtendedPoint::Finite(p.as_complex())
    }
}

/// Boundary endpoint of a geodesic: a real number or ∞.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryPoint {
    Finite(f64),
    Infinity,
}

impl From<BoundaryPoint> for ExtendedPoint {
    fn from(b: BoundaryPoint) -> Self {
        match b {
            BoundaryPoint::Finite(x) => ExtendedPoint::real(x),
            BoundaryPoint::Infinity => ExtendedPoint::Infinity,
        }
    }
}

/// Cross-ratio `[z1, z2; z3, z4] = ((z1−z4)(z3−z2))/((z1−z2)(z3−z4))` with
/// at most one point at infinity handled by dropping both factors that
/// contain it.
pub fn cross_ratio(
    z1: ExtendedPoint,
    z2: ExtendedPoint,
    z3: ExtendedPoint,
    z4: ExtendedPoint,
) -> Result<C> {
    let pts = [z1, z2, z3, z4];
    if pts.iter().filter(|p| p.is_infinite()).count() > 1 {
        return Err(Error::precondition(
            "at most one cross-ratio point may be infinite".into(),
        ));
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            if pts[i] == pts[j] {
                return Err(Error::precondition(format!(
                    "cross-ratio points must be pairwise distinct (points {i} and {j} coincide)"
                )));
            }
        }
    }
    let diff = |a: ExtendedPoint, b: ExtendedPoint| -> Option<C> {
        match (a, b) {
            (ExtendedPoint::Finite(x), ExtendedPoint::Finite(y)) => Some(x - y),
            _ => None,
        }
    };
    let mut num = C::new(1.0, 0.0);
    let mut den = C::new(1.0, 0.0);
    if let Some(d) = diff(z1, z4) {
        num *= d;
    }
    if let Some(d) = diff(z3, z2) {
        num *= d;
    }
    if let Some(d) = diff(z1, z2) {
        den *= d;
    }
    if let Some(d) = diff(z3, z4) {
        den *= d;
    }
    if den.norm() == 0.0 {
        return Err(Error::domain("cross-ratio denominator vanished".into()));
    }
    Ok(num / den)
}

/// Boundary endpoints `(z*, w*)` of the geodesic through `z` and `w`,
/// ordered so that `z` lies between `z*` and `w`.
pub fn geodesic_endpoints(
    z: &HalfPlanePoint,
    w: &HalfPlanePoint,
) -> Result<(BoundaryPoint, BoundaryPoint)> {
    if z == w {
        return Err(Error::precondition(
            "geodesic endpoints need two distinct points".into(),
        ));
    }
    if z.re == w.re {
        // Vertical line: endpoints are the foot and ∞; walking from z* the
        // geodesic must meet z first.
        return Ok(if z.im < w.im {
            (BoundaryPoint::Finite(z.re), BoundaryPoint::Infinity)
        } else {
            (BoundaryPoint::Infinity, BoundaryPoint::Finite(z.re))
        });
    }
    // Semicircle centered on the real axis through both points.
    let zz = z.re * z.re + z.im * z.im;
    let ww = w.re * w.re + w.im * w.im;
    let center = (ww - zz) / (2.0 * (w.re - z.re));
    let radius = ((z.re - center).powi(2) + z.im * z.im).sqrt();
    Ok(if z.re < w.re {
        (
            BoundaryPoint::Finite(center - radius),
            BoundaryPoint::Finite(center + radius),
        )
    } else {
        (
            BoundaryPoint::Finite(center + radius),
            BoundaryPoint::Finite(center - radius),
        )
    })
}

/// Hyperbolic distance via the cross-ratio of the pair with its geodesic
/// endpoints. Nonnegative, symmetric, zero iff the points coincide.
pub fn distance(z: &HalfPlanePoint, w: &HalfPlanePoint) -> Result<f64> {
    if z == w {
        return Ok(0.0);
    }
    let (z_star, w_star) = geodesic_endpoints(z, w)?;
    let ratio = cross_ratio(
        ExtendedPoint::from(*w),
        z_star.into(),
        ExtendedPoint::from(*z),
        w_star.into(),
    )?;
    // The endpooint ordering fixes the ratio to a real number ≥ 1 up to
    // rounding; fold any residual reciprocal ordering into |ln|.
    Ok(ratio.re.abs().ln().abs())
}

/// The g-function pair of `exp(Eφ) = g0 + E·g1` together with the derived
/// evolution function `U = −g0/g1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GFunctionState {
    pub p0: f64,
    /// `p²`, the constant term of the mass-shell quadratic.
    pub p2: f64,
    pub phi: f64,
    pub g0: f64,
    pub g1: f64,
    /// `U = −g0/g1`; −∞ at φ = 0 where g1 vanishes.
    pub u: f64,
}

impl GFunctionState {
    /// Half the eigenvalue gap, `m = √(p0² − p²)`.
    pub fn m(&self) -> f64 {
        (self.p0 * self.p0 - self.p2).sqrt()
    }

    /// Determinant identity residual `g0² + 2p0·g0·g1 + p²·g1² − e^{2p0φ}`,
    /// relative to `e^{2p0φ}`.
    pub fn determinant_residual(&self) -> f64 {
        let det = self.g0 * self.g0 + 2.0 * self.p0 * self.g0 * self.g1 + self.p2 * self.g1 * self.g1;
        let expected = (2.0 * self.p0 * self.phi).exp();
        (det - expected) / expected
    }

    /// The 2×2 transfer matrix `exp(Eφ) = g0·I + g1·E`.
    pub fn transfer_matrix(&self) -> [[f64; 2]; 2] {
        [
            [self.g0, -self.p2 * self.g1],
            [self.g1, self.g0 + 2.0 * self.p0 * self.g1],
        ]
    }
}

/// Evolves the g-functions to parameter φ:
/// `g1 = e^{p0φ}·sinh(mφ)/m`, `g0 = e^{p0φ}(cosh(mφ) − p0·sinh(mφ)/m)`,
/// written so the eigenvalue-degenerate case `m = 0` is the smooth limit
/// (`g1 = φe^{p0φ}`). Requires `p0² ≥ p²` (real eigenvalues).
pub fn g_evolution(p0: f64, p2: f64, phi: f64) -> Result<GFunctionState> {
    let m2 = p0 * p0 - p2;
    let scale = (p0 * p0).max(p2.abs()).max(1e-300);
    if m2 < -1e-14 * scale {
        return Err(Error::domain(format!(
            "complex eigenvalues: p0² − p² = {m2} < 0"
        )));
    }
    let m = m2.max(0.0).sqrt();
    let grow = (p0 * phi).exp();
    let sh = phi * sinhc(m * phi); // sinh(mφ)/m, smooth through m = 0
    let g1 = grow * sh;
    let g0 = grow * ((m * phi).cosh() - p0 * sh);
    Ok(GFunctionState {
        p0,
        p2,
        phi,
        g0,
        g1,
        u: -g0 / g1,
    })
}

/// Central-difference residual of the Riccati equation
/// `dU/dφ = U² − 2p0·U + p²` at φ, using `U` from [`g_evolution`].
pub fn riccati_residual(p0: f64, p2: f64, phi: f64, h: f64) -> Result<f64> {
    if !(h > 0.0 && phi > h) {
        return Err(Error::domain(format!(
            "need phi > h > 0 (got phi = {phi}, h = {h})"
        )));
    }
    let u_minus = g_evolution(p0, p2, phi - h)?.u;
    let u_plus = g_evolution(p0, p2, phi + h)?.u;
    let u = g_evolution(p0, p2, phi)?.u;
    let derivative = (u_plus - u_minus) / (2.0 * h);
    Ok((derivative - (u * u - 2.0 * p0 * u + p2)).abs())
}

fn quadratic_roots(p0: f64, p2: f64) -> Result<(f64, f64)> {
    let m2 = p0 * p0 - p2;
    if m2 <= 0.0 {
        return Err(Error::domain(format!(
            "need two distinct real roots: p0² − p² = {m2}"
        )));
    }
    let m = m2.sqrt();
    Ok((p0 - m, p0 + m))
}

/// Momentum-space distance of a segment `[zl, wl]` strictly between the
/// roots `x2 < x1` of `x² − 2p0·x + p²`: `2m·|∫ dx/(x²−2p0x+p²)|` by
/// adaptive Simpson quadrature.
pub fn momentum_distance_integral(zl: f64, wl: f64, p0: f64, p2: f64) -> Result<f64> {
    let (x2, x1) = quadratic_roots(p0, p2)?;
    if zl > wl {
        return Err(Error::precondition(format!("need zl ≤ wl (got {zl} > {wl})")));
    }
    if zl <= x2 || wl >= x1 {
        return Err(Error::domain(format!(
            "segment [{zl}, {wl}] must lie strictly inside the roots ({x2}, {x1})"
        )));
    }
    if zl == wl {
        return Ok(0.0);
    }
    let m = 0.5 * (x1 - x2);
    let integral = adaptive_simpson(
        &|x: f64| 1.0 / ((x - x1) * (x - x2)),
        zl,
        wl,
        QUADRATURE_TOL,
    )?;
    Ok(2.0 * m * integral.abs())
}

/// The same distance through the boundary cross-ratio
/// `ln[(wl−x2)(zl−x1)/((zl−x2)(wl−x1))]` with the roots as endpoints.
pub fn segment_cross_ratio_log(zl: f64, wl: f64, p0: f64, p2: f64) -> Result<f64> {
    let (x2, x1) = quadratic_roots(p0, p2)?;
    if zl <= x2 || wl >= x1 || zl > wl {
        return Err(Error::domain(format!(
            "segment [{zl}, {wl}] must lie strictly inside the roots ({x2}, {x1})"
        )));
    }
    Ok((((wl - x2) * (zl - x1)) / ((zl - x2) * (wl - x1))).ln())
}

/// The partial-fraction antiderivative evaluated at the segment ends:
/// `|ln((wl−x1)/(zl−x1)) − ln((wl−x2)/(zl−x2))|`.
pub fn segment_closed_form(zl: f64, wl: f64, p0: f64, p2: f64) -> Result<f64> {
    let (x2, x1) = quadratic_roots(p0, p2)?;
    if zl <= x2 || wl >= x1 || zl > wl {
        return Err(Error::domain(format!(
            "segment [{zl}, {wl}] must lie strictly inside the roots ({x2}, {x1})"
        )));
    }
    Ok((((wl - x1) / (zl - x1)).ln() - ((wl - x2) / (zl - x2)).ln()).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    const LN_2: f64 = std::f64::consts::LN_2;

    fn pt(re: f64, im: f64) -> HalfPlanePoint {
        HalfPlanePoint::new(re, im).unwrap()
    }

    /// Independent distance route used as the oracle here:
    /// `cosh ρ = 1 + |z−w|²/(2·Im z·Im w)`.
    fn distance_cosh_oracle(z: &HalfPlanePoint, w: &HalfPlanePoint) -> f64 {
        let dz = (z.as_complex() - w.as_complex()).norm_sqr();
        (1.0 + dz / (2.0 * z.im * w.im)).acosh()
    }

    #[test]
    fn cross_ratio_rational_example() {
        let v = cross_ratio(
            ExtendedPoint::real(3.0),
            ExtendedPoint::real(1.0),
            ExtendedPoint::real(2.0),
            ExtendedPoint::real(4.0),
        )
        .unwrap();
        assert!((v - C::new(0.25, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn cross_ratio_infinity_is_the_limit() {
        let z1 = ExtendedPoint::Finite(C::new(2.0, 1.0));
        let z2 = ExtendedPoint::Finite(C::new(0.0, 0.5));
        let z3 = ExtendedPoint::Finite(C::new(-1.0, 2.0));
        let exact = cross_ratio(z1, z2, z3, ExtendedPoint::Infinity).unwrap();
        let far = cross_ratio(z1, z2, z3, ExtendedPoint::real(1e8)).unwrap();
        assert!((exact - far).norm() < 1e-6);
    }

    #[test]
    fn cross_ratio_rejects_degenerate_tuples() {
        let a = ExtendedPoint::real(1.0);
        let b = ExtendedPoint::real(2.0);
        let cc = ExtendedPoint::real(3.0);
        assert!(cross_ratio(a, a, b, cc).is_err());
        assert!(cross_ratio(
            ExtendedPoint::Infinity,
            a,
            ExtendedPoint::Infinity,
            b
        )
        .is_err());
    }

    #[test]
    fn cross_ratio_mobius_invariance() {
        // z → (az+b)/(cz+d) with ad − bc = 1.
        let (a, b, cc, d) = (2.0, 1.0, 1.0, 1.0);
        let mob = |z: C| (z * a + b) / (z * cc + d);
        let pts = [C::new(0.3, 1.0), C::new(-1.0, 0.4), C::new(2.0, 2.0), C::new(0.9, 0.1)];
        let before = cross_ratio(
            ExtendedPoint::Finite(pts[0]),
            ExtendedPoint::Finite(pts[1]),
            ExtendedPoint::Finite(pts[2]),
            ExtendedPoint::Finite(pts[3]),
        )
        .unwrap();
        let after = cross_ratio(
            ExtendedPoint::Finite(mob(pts[0])),
            ExtendedPoint::Finite(mob(pts[1])),
            ExtendedPoint::Finite(mob(pts[2])),
            ExtendedPoint::Finite(mob(pts[3])),
        )
        .unwrap();
        assert!((before - after).norm() < 1e-10);
    }

    #[test]
    fn vertical_geodesic_endpoints() {
        let (zs, ws) = geodesic_endpoints(&pt(0.0, 1.0), &pt(0.0, 2.0)).unwrap();
        assert_eq!(zs, BoundaryPoint::Finite(0.0));
        assert_eq!(ws, BoundaryPoint::Infinity);
        // Swapping the points swaps the endpoints.
        let (zs, ws) = geodesic_endpoints(&pt(0.0, 2.0), &pt(0.0, 1.0)).unwrap();
        assert_eq!(zs, BoundaryPoint::Infinity);
        assert_eq!(ws, BoundaryPoint::Finite(0.0));
    }

    #[test]
    fn circular_geodesic_endpoints() {
        // Both points on the unit circle: endpoints (−1, 1).
        let (zs, ws) = geodesic_endpoints(&pt(-0.6, 0.8), &pt(0.6, 0.8)).unwrap();
        match (zs, ws) {
            (BoundaryPoint::Finite(a), BoundaryPoint::Finite(b)) => {
                assert!((a + 1.0).abs() < 1e-12);
                assert!((b - 1.0).abs() < 1e-12);
            }
            _ => panic!("expected finite endpoints"),
        }
    }

    #[test]
    fn distance_anchor_ln2() {
        let d = distance(&pt(0.0, 1.0), &pt(0.0, 2.0)).unwrap();
        assert!((d - LN_2).abs() < 1e-12);
        assert_eq!(distance(&pt(0.3, 0.7), &pt(0.3, 0.7)).unwrap(), 0.0);
    }

    #[test]
    fn distance_agrees_with_cosh_formula() {
        let pts = [
            (pt(0.0, 1.0), pt(0.0, 2.0)),
            (pt(-0.6, 0.8), pt(0.6, 0.8)),
            (pt(2.0, 0.3), pt(-1.0, 1.7)),
            (pt(0.1, 5.0), pt(0.2, 0.05)),
        ];
        for (z, w) in pts {
            let via_cr = distance(&z, &w).unwrap();
            let via_cosh = distance_cosh_oracle(&z, &w);
            assert!((via_cr - via_cosh).abs() < 1e-12, "{via_cr} vs {via_cosh}");
            // Symmetry.
            assert!((distance(&w, &z).unwrap() - via_cr).abs() < 1e-12);
        }
    }

    #[test]
    fn g_evolution_at_zero_is_identity() {
        let s = g_evolution(2.5, 4.0, 0.0).unwrap();
        assert_eq!((s.g0, s.g1), (1.0, 0.0));
    }

    #[test]
    fn g_evolution_matches_matrix_exponential() {
        // Frozen from a 50-digit evaluation of exp(Eφ) at p0=2.5, p²=4,
        // φ=0.3 (eigenvalues 1 and 4).
        let s = g_evolution(2.5, 4.0, 0.3).unwrap();
        assert!((s.g0 - 0.6931061025224883).abs() < 1e-14);
        assert!((s.g1 - 0.6567527050535148).abs() < 1e-14);
        assert!(s.determinant_residual().abs() < 1e-12);
        // U recovers p0 − U = m·coth(mφ) = 1.5·coth(0.45).
        assert!((s.p0 - s.u - 3.5553532512150236).abs() < 1e-13);
    }

    #[test]
    fn g_evolution_degenerate_eigenvalues() {
        // p0² = p² exactly (1.5² = 2.25): confluent limit g1 = φe^{p0φ}.
        let s = g_evolution(1.5, 2.25, 0.7).unwrap();
        let expected = 0.7 * (1.5f64 * 0.7).exp();
        assert!((s.g1 - expected).abs() < 1e-13);
        assert!(g_evolution(1.0, 2.0, 0.1).is_err());
    }

    #[test]
    fn g_semigroup_property() {
        let (p0, p2) = (1.3, 0.9);
        let a = g_evolution(p0, p2, 0.4).unwrap().transfer_matrix();
        let b = g_evolution(p0, p2, 0.6).unwrap().transfer_matrix();
        let ab = g_evolution(p0, p2, 1.0).unwrap().transfer_matrix();
        for i in 0..2 {
            for j in 0..2 {
                let prod = a[i][0] * b[0][j] + a[i][1] * b[1][j];
                assert!((prod - ab[i][j]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn riccati_residual_small_and_second_order() {
        let r = riccati_residual(2.5, 4.0, 0.5, 1e-5).unwrap();
        assert!(r < 1e-8, "residual {r:e}");
        // O(h²): quartering under h → h/2, within 20%.
        let r1 = riccati_residual(2.5, 4.0, 0.5, 1e-4).unwrap();
        let r2 = riccati_residual(2.5, 4.0, 0.5, 5e-5).unwrap();
        let ratio = r1 / r2;
        assert!((ratio - 4.0).abs() < 0.8, "ratio {ratio}");
        assert!(riccati_residual(2.5, 4.0, 1e-6, 1e-5).is_err());
    }

    #[test]
    fn riccati_degenerate_case() {
        // m = 0: U = p0 − 1/φ solves the same equation.
        let r = riccati_residual(1.5, 2.25, 0.5, 1e-5).unwrap();
        assert!(r < 1e-8, "residual {r:e}");
        let s = g_evolution(1.5, 2.25, 0.5).unwrap();
        assert!((s.u - (1.5 - 1.0 / 0.5)).abs() < 1e-12);
    }

    #[test]
    fn momentum_integral_anchor() {
        // Roots 1 and 4; segment [2, 3] gives 2·ln 2.
        let v = momentum_distance_integral(2.0, 3.0, 2.5, 4.0).unwrap();
        assert!((v - 2.0 * LN_2).abs() < 1e-10, "{v}");
        let cr = segment_cross_ratio_log(2.0, 3.0, 2.5, 4.0).unwrap();
        assert!((cr - 2.0 * LN_2).abs() < 1e-14);
        let cf = segment_closed_form(2.0, 3.0, 2.5, 4.0).unwrap();
        assert!((cf - 2.0 * LN_2).abs() < 1e-14);
    }

    #[test]
    fn momentum_integral_edge_cases() {
        assert_eq!(momentum_distance_integral(2.0, 2.0, 2.5, 4.0).unwrap(), 0.0);
        // Segment touching a root is rejected.
        assert!(momentum_distance_integral(1.0, 3.0, 2.5, 4.0).is_err());
        assert!(momentum_distance_integral(2.0, 4.0, 2.5, 4.0).is_err());
        assert!(momentum_distance_integral(3.0, 2.0, 2.5, 4.0).is_err());
    }

    #[test]
    fn momentum_integral_affine_invariance() {
        // x → ax + b moves roots and segment together; the value is invariant.
        let (p0, p2) = (2.5, 4.0);
        let base = momentum_distance_integral(2.0, 3.0, p0, p2).unwrap();
        let (a, b) = (1.7, -0.4);
        // Transformed quadratic has roots a·x_i + b.
        let (x2, x1) = (p0 - 1.5, p0 + 1.5);
        let (y2, y1) = (a * x2 + b, a * x1 + b);
        let q0 = 0.5 * (y1 + y2);
        let q2 = y1 * y2;
        let mapped = momentum_distance_integral(a * 2.0 + b, a * 3.0 + b, q0, q2).unwrap();
        assert!((base - mapped).abs() < 1e-8);
    }
}
