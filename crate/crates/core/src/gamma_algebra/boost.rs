//! Counter-boost transformations: translations of the counter-rapidity
//! acting on four-velocity components, the complementary-velocity addition
//! law, and the induced same-shell four-vector map.
//!
//! With `V0 = coth δ` and `V = 1/sinh δ` the translation `χ → χ + δ` reads
//!
//! ```text
//! u0' = (u0·V0 + 1)/(u0 + V0) = coth(χ+δ)
//! u'  = u·V/(u0 + V0)         = 1/sinh(χ+δ)
//! ```
//!
//! The rest point `(1, 0)` is an exact fixed point of the map (numerically
//! bit-exact: numerator and denominator coincide). The printed variant
//! `V0 = cosh δ` does not reproduce the translation; its gap is measured by
//! [`printed_v0_mismatch`] and lands in the errata report.

use nalgebra::Vector3;

use crate::numeric::{coth, csch};
use crate::{Error, Result};

/// Relative tolerance for same-shell checks on four-vectors.
pub const SHELL_MATCH_TOL: f64 = 1e-9;

/// The three velocity-like parameters derived from a single translation δ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CounterBoostParam {
    pub delta: f64,
    /// `V0 = coth δ`.
    pub v0: f64,
    /// `V = 1/sinh δ`.
    pub v: f64,
    /// `V̄ = tanh δ`.
    pub v_bar: f64,
}

impl CounterBoostParam {
    pub fn from_delta(delta: f64) -> Result<Self> {
        if delta == 0.0 {
            return Err(Error::domain(
                "delta = 0 has no finite V0/V parameters (the map is the identity)".into(),
            ));
        }
        Ok(Self {
            delta,
            v0: coth(delta),
            v: csch(delta),
            v_bar: delta.tanh(),
        })
    }

    /// `V0² − V² = 1` up to rounding.
    pub fn unit_residual(&self) -> f64 {
        self.v0 * self.v0 - self.v * self.v - 1.0
    }
}

/// Translates the counter-rapidity of a velocity pair `(u0, u)` by δ.
///
/// Accepts the rest point `(1, 0)` (returned unchanged, exactly) or a pair
/// `(coth χ, 1/sinh χ)` with `χ > 0`; the translated angle must stay
/// positive.
pub fn counter_boost_velocity(u0: f64, u: f64, delta: f64) -> Result<(f64, f64)> {
    if u0 == 1.0 && u == 0.0 {
        return Ok((1.0, 0.0));
    }
    if u0 <= 1.0 || u <= 0.0 {
        return Err(Error::precondition(format!(
            "(u0, u) = ({u0}, {u}) is neither the rest point nor (coth χ, 1/sinh χ) with χ > 0"
        )));
    }
    let shell = u0 * u0 - u * u;
    if (shell - 1.0).abs() > SHELL_MATCH_TOL * (u0 * u0 + u * u) {
        return Err(Error::off_shell(format!(
            "u0² − u² = {shell}, expected 1"
        )));
    }
    if delta == 0.0 {
        return Ok((u0, u));
    }
    let chi = (1.0 / u0).atanh();
    if chi + delta <= 0.0 {
        return Err(Error::domain(format!(
            "translated angle χ+δ = {} must stay positive",
            chi + delta
        )));
    }
    let p = CounterBoostParam::from_delta(delta)?;
    let denom = u0 + p.v0;
    Ok(((u0 * p.v0 + 1.0) / denom, u * p.v / denom))
}

/// Gap between the printed `V0 = cosh δ` substitution and the exact
/// translation `u0' = coth(χ+δ)`, evaluated at one probe point.
pub fn printed_v0_mismatch(chi: f64, delta: f64) -> f64 {
    let u0 = coth(chi);
    let printed = (u0 * delta.cosh() + 1.0) / (u0 + delta.cosh());
    (printed - coth(chi + delta)).abs()
}

/// Addition law for complementary velocities,
/// `v̄' = (v̄ + V̄)/(1 + v̄·V̄)` (c = 1).
///
/// `v̄ = 1` (the rest state) is a fixed point; `v̄ = 0` (the light-speed
/// state) maps to `V̄`, so light speed is relative for this family.
pub fn complementary_velocity_add(v_bar: f64, big_v_bar: f64) -> Result<f64> {
    for x in [v_bar, big_v_bar] {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::domain(format!(
                "complementary velocities live in [0, 1] (got {x})"
            )));
        }
    }
    Ok((v_bar + big_v_bar) / (1.0 + v_bar * big_v_bar))
}

/// Four-vector with its cached invariant square `ρ² = x0² − |x|²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourVector {
    pub x0: f64,
    pub x: Vector3<f64>,
    pub rho2: f64,
}

impl FourVector {
    pub fn new(x0: f64, x: Vector3<f64>) -> Self {
        Self {
            x0,
            x,
            rho2: x0 * x0 - x.norm_squared(),
        }
    }

    /// Recomputed invariant minus the stored one (zero unless the fields
    /// were mutated inconsistently).
    pub fn rho2_residual(&self) -> f64 {
        self.x0 * self.x0 - self.x.norm_squared() - self.rho2
    }
}

/// Counter-boost of a four-vector by a same-shell parameter vector `r`:
/// `x0' = (x0·r0 + ρ²)/(x0 + r0)`, spatial part scaled by `|r|/(x0 + r0)`.
/// Preserves ρ² identically.
pub fn fourvector_transform(x: &FourVector, r: &FourVector) -> Result<FourVector> {
    let scale = x.rho2.abs().max(r.rho2.abs());
    if scale <= 0.0 || x.rho2 <= 0.0 {
        return Err(Error::domain("both vectors need ρ² > 0".into()));
    }
    if (x.rho2 - r.rho2).abs() > SHELL_MATCH_TOL * scale {
        return Err(Error::off_shell(format!(
            "shell mismatch: ρ²_x = {} vs ρ²_r = {}",
            x.rho2, r.rho2
        )));
    }
    let denom = x.x0 + r.x0;
    if denom.abs() < 1e-12 * (x.x0.abs() + r.x0.abs()).max(1.0) {
        return Err(Error::domain(format!(
            "x0 + r0 = {denom} too close to zero"
        )));
    }
    let x0 = (x.x0 * r.x0 + x.rho2) / denom;
    let spatial = x.x * (r.x.norm() / denom);
    Ok(FourVector::new(x0, spatial))
}

#[cfg(test)]
mod tests {
    use super::*;

    const COTH_1_5: f64 = 1.1047913929825119;
    const CSCH_1_5: f64 = 0.4696424405952246;

    #[test]
    fn param_triple_from_delta() {
        let p = CounterBoostParam::from_delta(0.7).unwrap();
        assert!(p.unit_residual().abs() < 1e-15);
        assert!((p.v_bar - 0.7f64.tanh()).abs() < 1e-16);
        assert!(CounterBoostParam::from_delta(0.0).is_err());
    }

    #[test]
    fn rest_point_is_exactly_fixed() {
        for delta in [0.0, 0.1, -0.3, 5.0] {
            assert_eq!(counter_boost_velocity(1.0, 0.0, delta).unwrap(), (1.0, 0.0));
        }
    }

    #[test]
    fn translation_by_half() {
        let (u0, u) = counter_boost_velocity(coth(1.0), csch(1.0), 0.5).unwrap();
        assert!((u0 - COTH_1_5).abs() < 1e-14);
        assert!((u - CSCH_1_5).abs() < 1e-14);
    }

    #[test]
    fn zero_delta_is_identity() {
        let (u0, u) = counter_boost_velocity(coth(2.0), csch(2.0), 0.0).unwrap();
        assert_eq!((u0, u), (coth(2.0), csch(2.0)));
    }

    #[test]
    fn rejects_invalid_angle_and_inputs() {
        assert!(counter_boost_velocity(coth(1.0), csch(1.0), -1.5).is_err());
        assert!(counter_boost_velocity(0.7, 0.3, 0.5).is_err());
        assert!(counter_boost_velocity(2.0, 0.2, 0.5).is_err()); // off shell
    }

    #[test]
    fn printed_cosh_parameter_fails() {
        assert!(printed_v0_mismatch(1.0, 0.5) > 1e-3);
    }

    #[test]
    fn complementary_addition_cases() {
        assert_eq!(complementary_velocity_add(1.0, 0.7).unwrap(), 1.0);
        assert_eq!(complementary_velocity_add(0.0, 0.3).unwrap(), 0.3);
        let v = complementary_velocity_add(0.4f64.tanh(), 0.9f64.tanh()).unwrap();
        assert!((v - 1.3f64.tanh()).abs() < 1e-12);
        assert!(complementary_velocity_add(-0.1, 0.5).is_err());
    }

    #[test]
    fn fourvector_angle_addition() {
        let rho = 1.0;
        let x = FourVector::new(rho * coth(1.0), Vector3::new(rho * csch(1.0), 0.0, 0.0));
        let r = FourVector::new(rho * coth(0.5), Vector3::new(rho * csch(0.5), 0.0, 0.0));
        let out = fourvector_transform(&x, &r).unwrap();
        assert!((out.x0 - COTH_1_5).abs() < 1e-12);
        assert!((out.x.norm() - CSCH_1_5).abs() < 1e-12);
        assert!((out.rho2 - rho).abs() < 1e-12);
    }

    #[test]
    fn fourvector_doubling() {
        let x = FourVector::new(2.0 * coth(0.8), Vector3::new(0.0, 2.0 * csch(0.8), 0.0));
        let out = fourvector_transform(&x, &x).unwrap();
        // x = r doubles the angle: x0' = (x0² + ρ²)/(2x0) = ρ·coth(2χ).
        assert!((out.x0 - 2.0 * coth(1.6)).abs() < 1e-12);
    }

    #[test]
    fn fourvector_rest_parameter_stays_on_shell() {
        let x = FourVector::new(3.0 * coth(0.9), Vector3::new(0.0, 0.0, 3.0 * csch(0.9)));
        let rest = FourVector::new(3.0, Vector3::zeros());
        let out = fourvector_transform(&x, &rest).unwrap();
        assert!((out.rho2 - 9.0).abs() < 1e-10);
    }

    #[test]
    fn fourvector_rejects_mismatch() {
        let x = FourVector::new(2.0, Vector3::new(1.0, 0.0, 0.0));
        let r = FourVector::new(5.0, Vector3::new(1.0, 0.0, 0.0));
        assert!(fourvector_transform(&x, &r).is_err());
    }
}
