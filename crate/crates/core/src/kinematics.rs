//! Dual hyperbolic parametrizations of the mass shell.
//!
//! A massive on-shell state can be written either through the rapidity,
//! `p0 = m·cosh ψ, p = m·sinh ψ`, or through the counter-rapidity,
//! `p0 = m·coth χ, p = m/sinh χ`. The two angles are tied by the reciprocity
//! map `χ = ln coth(ψ/2)` (an involution) and by the paired identities
//! `sinh ψ · sinh χ = 1`, `cosh ψ · tanh χ = 1`, `tanh²ψ + tanh²χ = 1`.
//! The counter-rapidity form stays regular at the zero-mass point, where
//! `p0 = p = 1/φ = π₀` with `χ = mφ`.
//!
//! All angles are stored as nonnegative scalars; direction lives with the
//! 3-vector machinery in [`crate::dynamics`].

use crate::{Error, Result};

/// Relative tolerance for treating a state as on-shell.
pub const ON_SHELL_TOL: f64 = 1e-9;

/// Mass plus `(p0, p)` pair, the central kinematic record.
///
/// Physical on-shell states satisfy `p0² − p² = mass²` and `p0 ≥ mass > 0`;
/// off-shell values are representable so that residuals can be reported.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentumState {
    /// Rest mass, `≥ 0` (natural units).
    pub mass: f64,
    /// Energy component.
    pub p0: f64,
    /// Momentum magnitude, `≥ 0`.
    pub p: f64,
}

impl MomentumState {
    pub fn new(mass: f64, p0: f64, p: f64) -> Self {
        Self { mass, p0, p }
    }

    /// Signed shell residual `p0² − p² − mass²` (zero on shell).
    pub fn shell_residual(&self) -> f64 {
        self.p0 * self.p0 - self.p * self.p - self.mass * self.mass
    }

    /// Shell residual normalized by the squared scale of the state, so the
    /// check stays meaningful for both tiny and large momenta.
    pub fn shell_residual_relative(&self) -> f64 {
        let scale = self.p0 * self.p0 + self.p * self.p + self.mass * self.mass;
        if scale == 0.0 {
            0.0
        } else {
            self.shell_residual() / scale
        }
    }

    pub fn is_on_shell(&self, rel_tol: f64) -> bool {
        self.shell_residual_relative().abs() <= rel_tol
    }

    fn require_on_shell(&self, ctx: &str) -> Result<()> {
        if self.is_on_shell(ON_SHELL_TOL) {
            Ok(())
        } else {
            Err(Error::off_shell(format!(
                "{ctx}: residual {:e} for (m={}, p0={}, p={})",
                self.shell_residual(),
                self.mass,
                self.p0,
                self.p
            )))
        }
    }
}

/// The hyperbolic angles attached to one massive on-shell state: rapidity ψ,
/// counter-rapidity χ, the evolution parameter φ = χ/m, and the counter-mass
/// π₀ = 1/φ (the energy of the state's massless limit).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleState {
    pub psi: f64,
    pub chi: f64,
    pub phi: f64,
    pub pi0: f64,
}

/// Velocity `v` together with the complementary velocity `v̄`,
/// constrained by `v² + v̄² = 1`. `v = tanh ψ` and `v̄ = tanh χ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VelocityPair {
    pub v: f64,
    pub v_bar: f64,
}

/// The pair of energies `q1 = p0 − m`, `q2 = p0 + m` whose sum, difference
/// and product recover `2p0`, `2m` and `p²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergySplit {
    pub q1: f64,
    pub q2: f64,
}

/// Momenta from the rapidity form: `p0 = m·cosh ψ`, `p = m·|sinh ψ|`.
///
/// Total on its domain. At `m = 0` the form degenerates to the zero record;
/// the massless state is reached through [`massless_momenta`] instead.
pub fn momenta_from_rapidity(mass: f64, psi: f64) -> MomentumState {
    MomentumState::new(mass, mass * psi.cosh(), mass * psi.sinh().abs())
}

/// Momenta from the counter-rapidity form: `p0 = m·coth χ`, `p = m/sinh χ`.
///
/// Requires `mass > 0` and `chi > 0`; the momentum diverges as `chi → 0`, so
/// near-singular inputs produce a domain error rather than infinities.
pub fn momenta_from_counter_rapidity(mass: f64, chi: f64) -> Result<MomentumState> {
    if mass <= 0.0 {
        return Err(Error::domain(format!(
            "counter-rapidity form needs mass > 0 (got {mass}); use massless_momenta(phi) at m = 0"
        )));
    }
    if chi <= 0.0 {
        return Err(Error::domain(format!(
            "counter-rapidity must be > 0 for massive states (got {chi})"
        )));
    }
    let state = MomentumState::new(mass, mass / chi.tanh(), mass / chi.sinh());
    if !state.p0.is_finite() || !state.p.is_finite() {
        return Err(Error::domain(format!(
            "counter-rapidity {chi} too close to zero: momenta overflow"
        )));
    }
    Ok(state)
}

/// Light-like state at evolution parameter `phi`: `p0 = p = 1/φ = π₀`.
pub fn massless_momenta(phi: f64) -> Result<MomentumState> {
    if phi <= 0.0 {
        return Err(Error::domain(format!("phi must be > 0 (got {phi})")));
    }
    let pi0 = 1.0 / phi;
    Ok(MomentumState::new(0.0, pi0, pi0))
}

/// Rapidity of an on-shell state, `ψ = atanh(p/p0)`; zero at rest.
///
/// Fails on light-like states, where ψ is infinite.
pub fn rapidity_from_momenta(state: &MomentumState) -> Result<f64> {
    state.require_on_shell("rapidity_from_momenta")?;
    if state.p0 <= 0.0 {
        return Err(Error::domain("p0 must be positive".into()));
    }
    let psi = (state.p / state.p0).atanh();
    if !psi.is_finite() {
        return Err(Error::domain(
            "light-like state: rapidity is infinite; use the counter-rapidity route".into(),
        ));
    }
    Ok(psi)
}

/// Counter-rapidity of an on-shell state, `χ = atanh(m/p0)`; fails at rest
/// (χ infinite) and on light-like states (χ = 0, φ unrecoverable).
pub fn counter_rapidity_from_momenta(state: &MomentumState) -> Result<f64> {
    state.require_on_shell("counter_rapidity_from_momenta")?;
    if state.p0 <= 0.0 {
        return Err(Error::domain("p0 must be positive".into()));
    }
    if state.mass <= 0.0 {
        return Err(Error::domain(
            "light-like state: counter-rapidity degenerates, supply phi instead".into(),
        ));
    }
    let chi = (state.mass / state.p0).atanh();
    if !chi.is_finite() {
        return Err(Error::domain(
            "rest state: counter-rapidity is infinite".into(),
        ));
    }
    Ok(chi)
}

/// Both hyperbolic angles of a strictly moving massive on-shell state.
///
/// `ψ = ½·ln((p0+p)/(p0−p))` and `χ = ½·ln((p0+m)/(p0−m))`, evaluated in the
/// `atanh` form to avoid cancellation near rest. Errors at the two boundary
/// regimes: light-like input (χ undefined as a ratio) and rest input
/// (χ infinite — the overflow is signalled, ψ alone is available through
/// [`rapidity_from_momenta`]).
pub fn angles_from_momenta(state: &MomentumState) -> Result<AngleState> {
    let psi = rapidity_from_momenta(state)?;
    let chi = counter_rapidity_from_momenta(state)?;
    let phi = chi / state.mass;
    Ok(AngleState {
        psi,
        chi,
        phi,
        pi0: 1.0 / phi,
    })
}

/// The reciprocity map `χ = ln coth(ψ/2)` between the two angles.
///
/// The map is an involution: applying it twice returns the argument. Its
/// fixed point is `ψ* = ln(1+√2)`, where `sinh ψ* = 1`.
pub fn reciprocity(psi: f64) -> Result<f64> {
    if psi <= 0.0 {
        return Err(Error::domain(format!(
            "reciprocity needs a positive angle (got {psi})"
        )));
    }
    Ok((1.0 / (0.5 * psi).tanh()).ln())
}

/// Velocity and complementary velocity of an on-shell state:
/// `v = p/p0 = tanh ψ`, `v̄ = √(1−v²) = tanh χ`.
pub fn velocity_pair(state: &MomentumState) -> Result<VelocityPair> {
    state.require_on_shell("velocity_pair")?;
    if state.p0 <= 0.0 {
        return Err(Error::domain("p0 must be positive".into()));
    }
    let v = state.p / state.p0;
    Ok(VelocityPair {
        v,
        v_bar: (1.0 - v * v).max(0.0).sqrt(),
    })
}

/// Splits an on-shell state into the energy pair `(q1, q2) = (p0 ∓ m)`.
///
/// For `p ≪ m` the lower energy `q1` approaches the Newtonian kinetic
/// energy `p²/2m` with an `O(p⁴/m³)` remainder.
pub fn split_energies(state: &MomentumState) -> Result<EnergySplit> {
    state.require_on_shell("split_energies")?;
    Ok(EnergySplit {
        q1: state.p0 - state.mass,
        q2: state.p0 + state.mass,
    })
}

/// Signed mass-shell residual `p0² − p² − mass²` of an arbitrary record.
pub fn mass_shell_residual(state: &MomentumState) -> f64 {
    state.shell_residual()
}
