//! Proper-time integration of the Lorentz-force equations and the
//! rapidity-projected evolution.
//!
//! The equations of motion are
//!
//! ```text
//! dp/dτ  = (e/m)(E p0 + p × B)      dr/dτ = p/m
//! dp0/dτ = (e/m)(E · p)             dt/dτ = p0/m
//! ```
//!
//! with `p0² − |p|² = m²` as a first integral, and — for potential fields
//! `eE = −∇V` — the energy integral `p0 + V(r)`. Projected on the direction
//! of motion the system becomes the linear pair `dp/dψ = p0, dp0/dψ = p`,
//! whose general solution is `p0 = A(cosh ψ + B sinh ψ)` with
//! `A²(1−B²) = m²` and `B² = 1` exactly for massless generators.
//!
//! Integration is classical fixed-step RK4 with per-step invariant logging;
//! the invariants are the acceptance surface, so there is no adaptive
//! control and no interpolation.

use nalgebra::Vector3;

use crate::{Error, Result};

/// Phase-space point of a charged particle in proper time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParticleState {
    pub tau: f64,
    pub t: f64,
    pub r: Vector3<f64>,
    pub p: Vector3<f64>,
    pub p0: f64,
    pub mass: f64,
    pub charge: f64,
}

impl ParticleState {
    /// On-shell state at rest at the origin.
    pub fn at_rest(mass: f64, charge: f64) -> Self {
        Self {
            tau: 0.0,
            t: 0.0,
            r: Vector3::zeros(),
            p: Vector3::zeros(),
            p0: mass,
            mass,
            charge,
        }
    }

    /// On-shell state with the given position and momentum, `p0 = √(m²+|p|²)`.
    pub fn on_shell(mass: f64, charge: f64, r: Vector3<f64>, p: Vector3<f64>) -> Self {
        Self {
            tau: 0.0,
            t: 0.0,
            r,
            p,
            p0: (mass * mass + p.norm_squared()).sqrt(),
            mass,
            charge,
        }
    }

    pub fn shell_residual(&self) -> f64 {
        self.p0 * self.p0 - self.p.norm_squared() - self.mass * self.mass
    }
}

/// External field driving the integration.
///
/// The Coulomb variant stores the potential strength `k` of `V(r) = k/r`;
/// the force product satisfies `e·E = −∇V = k r̂/r²` exactly, independent of
/// the particle charge. Uniform fields keep an associated potential as well
/// (`V = −e E·r`, or zero for magnetic fields) so the energy integral
/// `p0 + V` is defined for every kind.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FieldConfig {
    UniformElectric { e_field: Vector3<f64> },
    UniformMagnetic { b_field: Vector3<f64> },
    Coulomb { k: f64 },
}

impl FieldConfig {
    /// Force product `e·E` at position `r`.
    pub fn electric_force(&self, r: &Vector3<f64>, charge: f64) -> Vector3<f64> {
        match self {
            FieldConfig::UniformElectric { e_field } => charge * e_field,
            FieldConfig::UniformMagnetic { .. } => Vector3::zeros(),
            FieldConfig::Coulomb { k } => {
                let rn = r.norm();
                (k / (rn * rn * rn)) * r
            }
        }
    }

    /// Magnetic product `e·B` (uniform kinds only).
    pub fn magnetic_force(&self, charge: f64) -> Vector3<f64> {
        match self {
            FieldConfig::UniformMagnetic { b_field } => charge * b_field,
            _ => Vector3::zeros(),
        }
    }

    /// Potential energy at `r`, chosen so `e·E = −∇V` for every kind.
    pub fn potential(&self, r: &Vector3<f64>, charge: f64) -> f64 {
        match self {
            FieldConfig::UniformElectric { e_field } => -charge * e_field.dot(r),
            FieldConfig::UniformMagnetic { .. } => 0.0,
            FieldConfig::Coulomb { k } => k / r.norm(),
        }
    }

    /// Raw field strengths `(E, B)` seen by a particle of the given charge.
    pub fn strengths(&self, r: &Vector3<f64>, charge: f64) -> (Vector3<f64>, Vector3<f64>) {
        match self {
            FieldConfig::UniformElectric { e_field } => (*e_field, Vector3::zeros()),
            FieldConfig::UniformMagnetic { b_field } => (Vector3::zeros(), *b_field),
            FieldConfig::Coulomb { k } => {
                let rn = r.norm();
                ((k / (charge * rn * rn * rn)) * r, Vector3::zeros())
            }
        }
    }
}

/// Antisymmetric field-strength tensor `F_{μν}` with `F_{0i} = E_i` and
/// `F_{ij} = −ε_{ijk} B_k`, metric signature `(+,−,−,−)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldTensor {
    pub f: [[f64; 4]; 4],
}

impl FieldTensor {
    pub fn from_strengths(e: Vector3<f64>, b: Vector3<f64>) -> Self {
        let mut f = [[0.0; 4]; 4];
        for i in 0..3 {
            f[0][i + 1] = e[i];
            f[i + 1][0] = -e[i];
        }
        f[1][2] = -b[2];
        f[2][1] = b[2];
        f[2][3] = -b[0];
        f[3][2] = b[0];
        f[3][1] = -b[1];
        f[1][3] = b[1];
        Self { f }
    }

    /// Tensor of the configured field at position `r`.
    pub fn from_config(fields: &FieldConfig, r: &Vector3<f64>, charge: f64) -> Self {
        let (e, b) = fields.strengths(r, charge);
        Self::from_strengths(e, b)
    }

    /// Mixed-index contraction `F^μ_ν u^ν`.
    pub fn apply_mixed(&self, u: &[f64; 4]) -> [f64; 4] {
        let mut out = [0.0; 4];
        for nu in 0..4 {
            out[0] += self.f[0][nu] * u[nu];
        }
        for mu in 1..4 {
            for nu in 0..4 {
                out[mu] -= self.f[mu][nu] * u[nu];
            }
        }
        out
    }

    pub fn antisymmetry_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for mu in 0..4 {
            for nu in 0..4 {
                worst = worst.max((self.f[mu][nu] + self.f[nu][mu]).abs());
            }
        }
        worst
    }
}

/// Amplitude and generator coefficient of the general hyperbolic solution
/// `p0 = A(cosh ψ + B sinh ψ)`, normalized at ψ = 0. On-shell solutions
/// satisfy `A²(1−B²) = m²`; `B² = 1` exactly for massless ones.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolicSolution {
    pub a: f64,
    pub b: f64,
}

/// One recorded integration step: the state plus its logged invariants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectorySample {
    pub state: ParticleState,
    /// `p0² − |p|² − m²` at this step.
    pub shell_residual: f64,
    /// `p0 + V(r)` at this step.
    pub energy_integral: f64,
}

/// Dense fixed-step trajectory (one sample per step, including τ₀).
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub samples: Vec<TrajectorySample>,
    pub step: f64,
}

impl Trajectory {
    pub fn last(&self) -> &TrajectorySample {
        self.samples.last().expect("trajectory is never empty")
    }

    /// Largest relative shell drift over the whole run.
    pub fn max_shell_drift(&self) -> f64 {
        self.samples
            .iter()
            .map(|s| {
                let scale =
                    s.state.p0 * s.state.p0 + s.state.p.norm_squared() + s.state.mass * s.state.mass;
                (s.shell_residual / scale).abs()
            })
            .fold(0.0, f64::max)
    }

    /// Largest drift of the energy integral from its initial value.
    pub fn max_energy_drift(&self) -> f64 {
        let e0 = self.samples[0].energy_integral;
        self.samples
            .iter()
            .map(|s| (s.energy_integral - e0).abs())
            .fold(0.0, f64::max)
    }
}

/// Default relative shell-drift bound at which a run is rejected.
pub const SHELL_DRIFT_LIMIT: f64 = 1e-6;

fn derivative(s: &ParticleState, fields: &FieldConfig) -> (f64, Vector3<f64>, Vector3<f64>, f64) {
    let ee = fields.electric_force(&s.r, s.charge);
    let eb = fields.magnetic_force(s.charge);
    let dp = (ee * s.p0 + s.p.cross(&eb)) / s.mass;
    let dp0 = ee.dot(&s.p) / s.mass;
    (s.p0 / s.mass, s.p / s.mass, dp, dp0)
}

#[derive(Debug, Clone, Copy)]
struct Slope {
    dt: f64,
    dr: Vector3<f64>,
    dp: Vector3<f64>,
    dp0: f64,
}

fn advanced(s: &ParticleState, k: &Slope, h: f64) -> ParticleState {
    ParticleState {
        tau: s.tau + h,
        t: s.t + h * k.dt,
        r: s.r + h * k.dr,
        p: s.p + h * k.dp,
        p0: s.p0 + h * k.dp0,
        ..*s
    }
}

/// Classical RK4 integration of the Lorentz-force system from `initial.tau`
/// to `tau_end`, recording the shell residual and energy integral per step.
///
/// Rejects the run if the relative shell drift exceeds
/// [`SHELL_DRIFT_LIMIT`]; massless particles are outside the system's domain
/// (`dt/dτ = p0/m`).
pub fn integrate_lorentz(
    initial: &ParticleState,
    fields: &FieldConfig,
    tau_end: f64,
    step: f64,
) -> Result<Trajectory> {
    integrate_lorentz_with(initial, fields, tau_end, step, SHELL_DRIFT_LIMIT)
}

/// [`integrate_lorentz`] with an explicit relative shell-drift bound.
pub fn integrate_lorentz_with(
    initial: &ParticleState,
    fields: &FieldConfig,
    tau_end: f64,
    step: f64,
    drift_limit: f64,
) -> Result<Trajectory> {
    if initial.mass <= 0.0 {
        return Err(Error::domain(
            "proper-time integration requires mass > 0".into(),
        ));
    }
    if step <= 0.0 {
        return Err(Error::domain(format!("step must be > 0 (got {step})")));
    }
    if tau_end <= initial.tau {
        return Err(Error::domain(format!(
            "tau_end {tau_end} must exceed initial tau {}",
            initial.tau
        )));
    }

    let n_steps = ((tau_end - initial.tau) / step).round() as usize;
    let n_steps = n_steps.max(1);
    let mut samples = Vec::with_capacity(n_steps + 1);
    let record = |s: &ParticleState| TrajectorySample {
        state: *s,
        shell_residual: s.shell_residual(),
        energy_integral: s.p0 + fields.potential(&s.r, s.charge),
    };

    let mut state = *initial;
    samples.push(record(&state));
    let shell_scale = initial.p0 * initial.p0
        + initial.p.norm_squared()
        + initial.mass * initial.mass;

    for _ in 0..n_steps {
        let k1 = {
            let (dt, dr, dp, dp0) = derivative(&state, fields);
            Slope { dt, dr, dp, dp0 }
        };
        let k2 = {
            let s = advanced(&state, &k1, 0.5 * step);
            let (dt, dr, dp, dp0) = derivative(&s, fields);
            Slope { dt, dr, dp, dp0 }
        };
        let k3 = {
            let s = advanced(&state, &k2, 0.5 * step);
            let (dt, dr, dp, dp0) = derivative(&s, fields);
            Slope { dt, dr, dp, dp0 }
        };
        let k4 = {
            let s = advanced(&state, &k3, step);
            let (dt, dr, dp, dp0) = derivative(&s, fields);
            Slope { dt, dr, dp, dp0 }
        };
        let sixth = step / 6.0;
        state = ParticleState {
            tau: state.tau + step,
            t: state.t + sixth * (k1.dt + 2.0 * k2.dt + 2.0 * k3.dt + k4.dt),
            r: state.r + sixth * (k1.dr + 2.0 * k2.dr + 2.0 * k3.dr + k4.dr),
            p: state.p + sixth * (k1.dp + 2.0 * k2.dp + 2.0 * k3.dp + k4.dp),
            p0: state.p0 + sixth * (k1.dp0 + 2.0 * k2.dp0 + 2.0 * k3.dp0 + k4.dp0),
            ..state
        };
        let sample = record(&state);
        if (sample.shell_residual / shell_scale).abs() > drift_limit {
            return Err(Error::NoConvergence(format!(
                "shell drift {:e} exceeded limit {:e} at tau {}",
                sample.shell_residual / shell_scale,
                drift_limit,
                state.tau
            )));
        }
        samples.push(sample);
    }
    Ok(Trajectory { samples, step })
}

/// Advances `(p0, p)` by the projected system `dp/dψ = p0, dp0/dψ = p`,
/// i.e. a hyperbolic rotation by `psi_span`. Preserves `p0² − p²` exactly up
/// to rounding and composes additively in the angle.
pub fn projected_evolution(p0: f64, p: f64, psi_span: f64) -> (f64, f64) {
    let c = psi_span.cosh();
    let s = psi_span.sinh();
    (p0 * c + p * s, p * c + p0 * s)
}

/// Fits `(A, B)` of the general hyperbolic solution to momenta at ψ = 0:
/// `A = p0`, `B = p/p0`. Rejects inputs inconsistent with the requested
/// mass sign (`p0² < p²` while `mass > 0`).
pub fn fit_hyperbolic_solution(p0: f64, p: f64, mass: f64) -> Result<HyperbolicSolution> {
    if p0 <= 0.0 {
        return Err(Error::domain(format!("p0 must be > 0 (got {p0})")));
    }
    if mass > 0.0 && p0 * p0 < p * p {
        return Err(Error::domain(format!(
            "p0² < p² is inconsistent with mass {mass} > 0"
        )));
    }
    Ok(HyperbolicSolution { a: p0, b: p / p0 })
}

impl HyperbolicSolution {
    /// Residual of the shell constraint `A²(1−B²) − m²`.
    pub fn shell_residual(&self, mass: f64) -> f64 {
        self.a * self.a * (1.0 - self.b * self.b) - mass * mass
    }

    /// Momenta at hyperbolic angle ψ.
    pub fn evaluate(&self, psi: f64) -> (f64, f64) {
        (
            self.a * (psi.cosh() + self.b * psi.sinh()),
            self.a * (psi.sinh() + self.b * psi.cosh()),
        )
    }
}

/// Four-velocity `u^μ = (p0/m, p/m)` of a sample.
fn four_velocity(s: &ParticleState) -> [f64; 4] {
    [
        s.p0 / s.mass,
        s.p[0] / s.mass,
        s.p[1] / s.mass,
        s.p[2] / s.mass,
    ]
}

/// Residual of the covariant force equation `du^μ/dτ − (e/m) F^μ_ν u^ν` at
/// an interior trajectory sample, with `du/dτ` by central difference over
/// the trajectory's own step. Near zero when the integration is correct and
/// the tensor was assembled from the same field configuration.
pub fn covariant_residual(
    traj: &Trajectory,
    index: usize,
    tensor: &FieldTensor,
) -> Result<[f64; 4]> {
    if index == 0 || index + 1 >= traj.samples.len() {
        return Err(Error::precondition(format!(
            "index {index} must be interior to the trajectory (len {})",
            traj.samples.len()
        )));
    }
    let prev = &traj.samples[index - 1].state;
    let here = &traj.samples[index].state;
    let next = &traj.samples[index + 1].state;
    let u_prev = four_velocity(prev);
    let u_next = four_velocity(next);
    let u_here = four_velocity(here);
    let force = tensor.apply_mixed(&u_here);
    let scale = here.charge / here.mass;
    let inv2h = 1.0 / (2.0 * traj.step);
    let mut out = [0.0; 4];
    for mu in 0..4 {
        out[mu] = (u_next[mu] - u_prev[mu]) * inv2h - scale * force[mu];
    }
    Ok(out)
}

/// Rapidity accumulated along a trajectory as `(e/m)∫ E·n dτ` with
/// `n = p/|p|` (trapezoidal rule; the field direction substitutes for `n`
/// while the particle is still at rest).
pub fn accumulated_rapidity(traj: &Trajectory, fields: &FieldConfig) -> f64 {
    let integrand = |s: &ParticleState| {
        let ee = fields.electric_force(&s.r, s.charge);
        let pn = s.p.norm();
        let n = if pn > 0.0 {
            s.p / pn
        } else {
            let en = ee.norm();
            if en > 0.0 {
                ee / en
            } else {
                Vector3::zeros()
            }
        };
        ee.dot(&n) / s.mass
    };
    let mut acc = 0.0;
    for w in traj.samples.windows(2) {
        acc += 0.5 * traj.step * (integrand(&w[0].state) + integrand(&w[1].state));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_motion_is_exactly_straight() {
        let initial = ParticleState::on_shell(
            1.0,
            1.0,
            Vector3::zeros(),
            Vector3::new(0.3, 0.0, 0.0),
        );
        let fields = FieldConfig::UniformElectric {
            e_field: Vector3::zeros(),
        };
        let traj = integrate_lorentz(&initial, &fields, 2.0, 1e-2).unwrap();
        let last = traj.last().state;
        assert_eq!(last.p, initial.p);
        assert_eq!(last.p0, initial.p0);
        assert!((last.r[0] - 0.3 * 2.0).abs() < 1e-12);
    }

    #[test]
    fn uniform_e_matches_closed_form() {
        // From rest in E = (1,0,0): p = m sinh(eEτ/m), p0 = m cosh(eEτ/m).
        let initial = ParticleState::at_rest(1.0, 1.0);
        let fields = FieldConfig::UniformElectric {
            e_field: Vector3::new(1.0, 0.0, 0.0),
        };
        let traj = integrate_lorentz(&initial, &fields, 5.0, 1e-3).unwrap();
        let last = traj.last().state;
        let rel_p = (last.p[0] - 5f64.sinh()).abs() / 5f64.sinh();
        let rel_p0 = (last.p0 - 5f64.cosh()).abs() / 5f64.cosh();
        assert!(rel_p < 1e-8, "rel_p = {rel_p:e}");
        assert!(rel_p0 < 1e-8, "rel_p0 = {rel_p0:e}");
    }

    #[test]
    fn coulomb_conserves_energy_integral() {
        // Circular-like initial data for V = k/r with k = -0.1:
        // p² = |k| p0 / r at r = 1.
        let k = -0.1f64;
        let p0 = 0.5 * (0.1 + (0.01f64 + 4.0).sqrt());
        let p = (0.1 * p0).sqrt();
        let initial = ParticleState {
            tau: 0.0,
            t: 0.0,
            r: Vector3::new(1.0, 0.0, 0.0),
            p: Vector3::new(0.0, p, 0.0),
            p0,
            mass: 1.0,
            charge: 1.0,
        };
        let fields = FieldConfig::Coulomb { k };
        let traj = integrate_lorentz(&initial, &fields, 50.0, 1e-3).unwrap();
        assert!(traj.max_energy_drift() < 1e-8, "{:e}", traj.max_energy_drift());
    }

    #[test]
    fn uniform_b_preserves_momentum_norm() {
        let initial = ParticleState::on_shell(
            1.0,
            1.0,
            Vector3::zeros(),
            Vector3::new(1.0, 0.0, 0.0),
        );
        let fields = FieldConfig::UniformMagnetic {
            b_field: Vector3::new(0.0, 0.0, 1.0),
        };
        let traj = integrate_lorentz(&initial, &fields, 10.0, 1e-3).unwrap();
        let drift = traj
            .samples
            .iter()
            .map(|s| (s.state.p.norm() - 1.0).abs())
            .fold(0.0, f64::max);
        assert!(drift < 1e-10, "drift = {drift:e}");
    }

    #[test]
    fn integrator_domain_errors() {
        let rest = ParticleState::at_rest(1.0, 1.0);
        let fields = FieldConfig::UniformMagnetic {
            b_field: Vector3::zeros(),
        };
        assert!(integrate_lorentz(&ParticleState::at_rest(0.0, 1.0), &fields, 1.0, 0.1).is_err());
        assert!(integrate_lorentz(&rest, &fields, 1.0, 0.0).is_err());
        assert!(integrate_lorentz(&rest, &fields, -1.0, 0.1).is_err());
    }

    #[test]
    fn projected_evolution_from_rest() {
        let (p0, p) = projected_evolution(2.0, 0.0, 1.0);
        assert!((p0 - 2.0 * 1f64.cosh()).abs() < 1e-14);
        assert!((p - 2.0 * 1f64.sinh()).abs() < 1e-14);
        assert_eq!(projected_evolution(1.5, 0.3, 0.0), (1.5, 0.3));
    }

    #[test]
    fn projected_evolution_semigroup() {
        let (a, b) = (0.7, 1.1);
        let one = projected_evolution(2.0, 0.5, a + b);
        let (p0, p) = projected_evolution(2.0, 0.5, a);
        let two = projected_evolution(p0, p, b);
        assert!((one.0 - two.0).abs() < 1e-12);
        assert!((one.1 - two.1).abs() < 1e-12);
    }

    #[test]
    fn hyperbolic_fit_cases() {
        let rest = fit_hyperbolic_solution(2.0, 0.0, 2.0).unwrap();
        assert_eq!((rest.a, rest.b), (2.0, 0.0));

        let light = fit_hyperbolic_solution(0.7, 0.7, 0.0).unwrap();
        assert_eq!((light.a, light.b), (0.7, 1.0));
        assert_eq!(light.shell_residual(0.0), 0.0);

        let s = crate::kinematics::momenta_from_rapidity(1.3, 0.8);
        let fit = fit_hyperbolic_solution(s.p0, s.p, 1.3).unwrap();
        assert!(fit.shell_residual(1.3).abs() < 1e-12);

        assert!(fit_hyperbolic_solution(0.5, 1.0, 1.0).is_err());
    }

    #[test]
    fn covariant_residual_uniform_e() {
        let initial = ParticleState::at_rest(1.0, 1.0);
        let e = Vector3::new(1.0, 0.0, 0.0);
        let fields = FieldConfig::UniformElectric { e_field: e };
        let traj = integrate_lorentz(&initial, &fields, 0.02, 1e-4).unwrap();
        let tensor = FieldTensor::from_config(&fields, &traj.samples[100].state.r, 1.0);
        let res = covariant_residual(&traj, 100, &tensor).unwrap();
        for c in res {
            assert!(c.abs() < 1e-6, "component {c:e}");
        }
    }

    #[test]
    fn covariant_residual_zero_field() {
        let initial = ParticleState::on_shell(
            1.0,
            1.0,
            Vector3::zeros(),
            Vector3::new(0.2, 0.1, 0.0),
        );
        let fields = FieldConfig::UniformElectric {
            e_field: Vector3::zeros(),
        };
        let traj = integrate_lorentz(&initial, &fields, 0.01, 1e-4).unwrap();
        let tensor = FieldTensor::from_strengths(Vector3::zeros(), Vector3::zeros());
        let res = covariant_residual(&traj, 50, &tensor).unwrap();
        for c in res {
            assert!(c.abs() < 1e-10);
        }
        assert!(covariant_residual(&traj, 0, &tensor).is_err());
    }

    #[test]
    fn tensor_is_antisymmetric() {
        let t = FieldTensor::from_strengths(Vector3::new(1.0, -2.0, 0.5), Vector3::new(0.3, 0.7, -1.1));
        assert_eq!(t.antisymmetry_residual(), 0.0);
    }

    #[test]
    fn rapidity_integral_matches_final_angle() {
        let initial = ParticleState::at_rest(1.0, 1.0);
        let fields = FieldConfig::UniformElectric {
            e_field: Vector3::new(1.0, 0.0, 0.0),
        };
        let traj = integrate_lorentz(&initial, &fields, 2.0, 1e-3).unwrap();
        let psi = accumulated_rapidity(&traj, &fields);
        let last = traj.last().state;
        let psi_state = (last.p.norm() / last.p0).atanh();
        assert!((psi - psi_state).abs() < 1e-6, "{:e}", (psi - psi_state).abs());
    }
}
