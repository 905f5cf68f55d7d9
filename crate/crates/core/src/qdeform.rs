//! The energy-momentum map from the massless state onto massive states,
//! read as a q-deformation.
//!
//! With the dimensionless pair `β = m/κ`, `α = φκ` the counter-rapidity
//! momenta become `P = m/sinh(βα)`, `P0 = m·coth(βα)`, `v = 1/cosh(βα)`. The
//! rescaled momentum `P_q = κ·sinh(β)/sinh(βα)` turns the map into a
//! q-bracket identity, `κ/P_q = (α)_q` with `q = exp(β)`, which pins the
//! equal-momentum point `P_q(α=1) = κ` for every mass. Quantizing
//! `α = 2J+1` over half-integers `J` yields the velocity ladder
//! `v_J = 1/cosh(β(2J+1))` and the wavelength ladder `λ_J = (h/κ)(2J+1)`.
//!
//! The module also solves the transcendental mass equation `tanh y = y/K`
//! (`y = m/π₀`), whose positive root exists only for `K > 1`.

use crate::numeric::{bisect, coth, csch, sinhc};
use crate::{Error, Result};

/// Parameters of the κ/α parametrization. `planck` only scales wavelength
/// outputs and defaults to 1 (natural units).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QParams {
    /// Mass-unit parameter κ > 0.
    pub kappa: f64,
    /// Dimensionless evolution parameter α > 0 (α = φκ).
    pub alpha: f64,
    /// Planck constant used for wavelengths.
    pub planck: f64,
}

impl QParams {
    pub fn new(kappa: f64, alpha: f64) -> Result<Self> {
        if kappa <= 0.0 || alpha <= 0.0 {
            return Err(Error::domain(format!(
                "kappa and alpha must be > 0 (got {kappa}, {alpha})"
            )));
        }
        Ok(Self {
            kappa,
            alpha,
            planck: 1.0,
        })
    }

    /// Quantized parameter α = 2J+1 for half-integer spin J.
    pub fn with_spin(kappa: f64, j: f64) -> Result<Self> {
        Self::new(kappa, 2.0 * j + 1.0)
    }

    /// Deformation parameter `q = exp(m/κ)` for a given mass.
    pub fn deformation(&self, mass: f64) -> f64 {
        (mass / self.kappa).exp()
    }
}

/// q-bracket `(N)_q = (q^N − q^{−N})/(q − q^{−1})`, continuous through
/// `q = 1` where it equals `N`.
pub fn q_bracket(n: f64, q: f64) -> Result<f64> {
    if q <= 0.0 {
        return Err(Error::domain(format!("q must be > 0 (got {q})")));
    }
    let t = q.ln();
    if t == 0.0 {
        return Ok(n);
    }
    Ok((n * t).sinh() / t.sinh())
}

/// Roots of the mass equation `m/(K·π₀) = tanh(m/π₀)` near the zero-mass
/// point. `m = 0` always solves it; the pair `±y·π₀` appears only when
/// `K > 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassRoots {
    /// The ever-present root m = 0.
    pub zero: f64,
    pub pair: Option<MassivePair>,
}

/// The nonzero root pair with the solver's diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassivePair {
    /// Positive dimensionless root of `tanh y = y/K`.
    pub y: f64,
    /// Cubic (small-mass) approximation `√3·√(1−1/K)`.
    pub y_cubic: f64,
    /// Relative gap between the exact root and the cubic approximation.
    pub rel_gap: f64,
    /// The masses `±y·π₀`.
    pub mass_plus: f64,
    pub mass_minus: f64,
    /// `|tanh y − y/K|` at the returned root.
    pub residual: f64,
}

/// Residual tolerance the hybrid root solver must reach.
pub const MASS_ROOT_TOL: f64 = 1e-14;

/// Solves the mass equation for given `K` and counter-mass `π₀`: bracketed
/// bisection on `[tiny, 1.5K]` followed by Newton polish.
pub fn solve_mass_equation(k: f64, pi0: f64) -> Result<MassRoots> {
    if k <= 0.0 || pi0 <= 0.0 {
        return Err(Error::domain(format!(
            "K and pi0 must be > 0 (got {k}, {pi0})"
        )));
    }
    if k <= 1.0 {
        return Ok(MassRoots {
            zero: 0.0,
            pair: None,
        });
    }
    let f = |y: f64| y.tanh() - y / k;
    // f > 0 just past the origin for K > 1, f < 0 at y = 1.5K > K ≥ tanh y.
    let mut y = bisect(f, 1e-12, 1.5 * k)?;
    for _ in 0..5 {
        let df = 1.0 / y.cosh().powi(2) - 1.0 / k;
        if df == 0.0 {
            break;
        }
        y -= f(y) / df;
    }
    let residual = f(y).abs();
    if residual > MASS_ROOT_TOL {
        return Err(Error::NoConvergence(format!(
            "mass-equation residual {residual:e} above {MASS_ROOT_TOL:e}"
        )));
    }
    let y_cubic = 3f64.sqrt() * (1.0 - 1.0 / k).sqrt();
    Ok(MassRoots {
        zero: 0.0,
        pair: Some(MassivePair {
            y,
            y_cubic,
            rel_gap: (y - y_cubic).abs() / y,
            mass_plus: y * pi0,
            mass_minus: -y * pi0,
            residual,
        }),
    })
}

/// Momentum, energy and velocity in the κ/α variables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KappaState {
    pub p: f64,
    pub p0: f64,
    pub v: f64,
}

/// Momenta in the κ/α parametrization: `P = m/sinh(βα)`, `P0 = m·coth(βα)`,
/// `v = 1/cosh(βα)` with `β = m/κ`. Continuous at `m = 0`, where
/// `P = P0 = κ/α = π₀` and `v = 1`. Substituting `α = φκ` reproduces the
/// counter-rapidity momenta exactly.
pub fn kappa_state(mass: f64, params: &QParams) -> Result<KappaState> {
    if mass < 0.0 {
        return Err(Error::domain(format!("mass must be ≥ 0 (got {mass})")));
    }
    let arg = (mass / params.kappa) * params.alpha;
    if mass == 0.0 {
        return Ok(KappaState {
            p: params.kappa / params.alpha,
            p0: params.kappa / params.alpha,
            v: 1.0,
        });
    }
    Ok(KappaState {
        p: mass * csch(arg),
        p0: mass * coth(arg),
        v: 1.0 / arg.cosh(),
    })
}

/// The rescaled (q-deformed) momentum `P_q = κ·sinh(β)/sinh(βα)`, for which
/// `κ/P_q = (α)_q` holds identically and `P_q(α=1) = κ` for every mass.
pub fn deformed_momentum(mass: f64, params: &QParams) -> Result<f64> {
    if mass < 0.0 {
        return Err(Error::domain(format!("mass must be ≥ 0 (got {mass})")));
    }
    let beta = mass / params.kappa;
    if beta == 0.0 {
        return Ok(params.kappa / params.alpha);
    }
    Ok(params.kappa * beta.sinh() / (beta * params.alpha).sinh())
}

/// The matching rescaled energy `P0_q = κ·sinh(β)·coth(βα)`; at α = 1 it
/// equals `κ·cosh(β)`.
pub fn deformed_energy(mass: f64, params: &QParams) -> Result<f64> {
    if mass < 0.0 {
        return Err(Error::domain(format!("mass must be ≥ 0 (got {mass})")));
    }
    let beta = mass / params.kappa;
    if beta == 0.0 {
        return Ok(params.kappa / params.alpha);
    }
    Ok(params.kappa * beta.sinh() * coth(beta * params.alpha))
}

/// Checks the integral representation
/// `κ/P = ∫_{−α/2}^{α/2} exp(2(m/κ)x) dx` by adaptive Simpson quadrature
/// against the closed `sinh(βα)/β` form; returns the absolute gap.
pub fn integral_representation_check(mass: f64, kappa: f64, alpha: f64) -> Result<f64> {
    if mass <= 0.0 || kappa <= 0.0 || alpha < 0.0 {
        return Err(Error::domain(format!(
            "need mass > 0, kappa > 0, alpha ≥ 0 (got {mass}, {kappa}, {alpha})"
        )));
    }
    let beta = mass / kappa;
    let quad = crate::numeric::adaptive_simpson(
        &|x: f64| (2.0 * beta * x).exp(),
        -0.5 * alpha,
        0.5 * alpha,
        1e-12,
    )?;
    let closed = alpha * sinhc(beta * alpha);
    Ok((quad - closed).abs())
}

/// Length `2πκ·sinh((m/κ)α)` of the circle of radius `mα` in the hyperbolic
/// space of curvature `1/κ`; approaches the Euclidean `2πmα` as `m/κ → 0`.
pub fn circle_length(kappa: f64, radius_mass: f64, alpha: f64) -> Result<f64> {
    if kappa <= 0.0 || radius_mass <= 0.0 || alpha <= 0.0 {
        return Err(Error::domain(
            "circle length needs positive kappa, radius and alpha".into(),
        ));
    }
    Ok(2.0 * std::f64::consts::PI * kappa * ((radius_mass / kappa) * alpha).sinh())
}

/// One row of the quantized ladder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LadderRow {
    pub j: f64,
    pub alpha: f64,
    /// `v_J = 1/cosh((m/κ)(2J+1))`.
    pub v: f64,
    /// `λ_J = (h/κ)(2J+1)`.
    pub lambda: f64,
    /// Gap between `sinh((2J+1)β)/sinh(β)` and the direct sum
    /// `Σ_{n=−J}^{J} e^{2nβ}` (n stepping by 1).
    pub sum_identity_gap: f64,
}

/// Velocity and wavelength ladder over `J ∈ {0, 1/2, 1, …, j_max}`, with the
/// finite-sum identity `sinh((2J+1)x)/sinh(x) = Σ_{n=−J}^{J} e^{2nx}`
/// checked against direct summation on every row.
pub fn quantized_ladder(mass: f64, kappa: f64, j_max: f64, planck: f64) -> Result<Vec<LadderRow>> {
    if mass <= 0.0 || kappa <= 0.0 {
        return Err(Error::domain(format!(
            "mass and kappa must be > 0 (got {mass}, {kappa})"
        )));
    }
    let steps = (2.0 * j_max).round() as i64;
    if steps < 0 || (2.0 * j_max - steps as f64).abs() > 1e-9 {
        return Err(Error::domain(format!(
            "j_max must be a nonnegative half-integer (got {j_max})"
        )));
    }
    let beta = mass / kappa;
    let mut rows = Vec::with_capacity((steps + 1) as usize);
    for twice_j in 0..=steps {
        let j = 0.5 * twice_j as f64;
        let alpha = 2.0 * j + 1.0;
        rows.push(LadderRow {
            j,
            alpha,
            v: 1.0 / (beta * alpha).cosh(),
            lambda: (planck / kappa) * alpha,
            sum_identity_gap: (ladder_sum(j, beta) - (alpha * beta).sinh() / beta.sinh()).abs(),
        });
    }
    Ok(rows)
}

/// Direct evaluation of `Σ_{n=−J}^{J} e^{2nx}` with `n` stepping by 1.
pub fn ladder_sum(j: f64, x: f64) -> f64 {
    let terms = (2.0 * j).round() as i64;
    (0..=terms)
        .map(|i| (2.0 * (i as f64 - j) * x).exp())
        .sum()
}

/// The misprinted variant `Σ_{n=−J}^{J} e^{nx}`, evaluated only so the gap
/// against the sinh ratio can be reported.
pub fn ladder_sum_printed(j: f64, x: f64) -> f64 {
    let terms = (2.0 * j).round() as i64;
    (0..=terms)
        .map(|i| ((i as f64 - j) * x).exp())
        .sum()
}

/// The de Broglie map at counter-mass `π₀`: `P0 = m·coth(m/π₀)`,
/// `P = m/sinh(m/π₀)`; both tend to `π₀` as `m → 0`, recovering
/// `P0 = hν`, `P = h/λ` under `λ = h/π₀`.
pub fn de_broglie_map(mass: f64, pi0: f64) -> Result<(f64, f64)> {
    if pi0 <= 0.0 {
        return Err(Error::domain(format!("pi0 must be > 0 (got {pi0})")));
    }
    if mass < 0.0 {
        return Err(Error::domain(format!("mass must be ≥ 0 (got {mass})")));
    }
    if mass == 0.0 {
        return Ok((pi0, pi0));
    }
    let arg = mass / pi0;
    Ok((mass * coth(arg), mass * csch(arg)))
}

/// Wavelength attached to a counter-mass, `λ = h/π₀`.
pub fn wavelength(pi0: f64, planck: f64) -> Result<f64> {
    if pi0 <= 0.0 {
        return Err(Error::domain(format!("pi0 must be > 0 (got {pi0})")));
    }
    Ok(planck / pi0)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Root of tanh y = y/K, 50-digit evaluation frozen here.
    const Y_EXACT_K_1_1: f64 = 0.5532346324391058;
    const Y_EXACT_K_1_001: f64 = 0.05477773332816380;
    const E_PLUS_INV_E: f64 = 3.0861612696304876;
    const TWO_PI_SINH_1: f64 = 7.384006872882645;

    #[test]
    fn q_bracket_hand_value() {
        // (8 − 1/8)/(2 − 1/2) = 5.25
        assert!((q_bracket(3.0, 2.0).unwrap() - 5.25).abs() < 1e-14);
    }

    #[test]
    fn q_bracket_unity_cases() {
        for q in [0.3, 1.0, 2.0, 7.5] {
            assert!((q_bracket(1.0, q).unwrap() - 1.0).abs() < 1e-14);
        }
        assert_eq!(q_bracket(4.2, 1.0).unwrap(), 4.2);
        // q → 1 limit approaches N smoothly.
        assert!((q_bracket(4.2, 1.0 + 1e-12).unwrap() - 4.2).abs() < 1e-9);
        assert!(q_bracket(1.0, 0.0).is_err());
    }

    #[test]
    fn mass_equation_below_threshold() {
        let roots = solve_mass_equation(0.9, 1.0).unwrap();
        assert_eq!(roots.zero, 0.0);
        assert!(roots.pair.is_none());
        assert!(solve_mass_equation(1.0, 1.0).unwrap().pair.is_none());
    }

    #[test]
    fn mass_equation_k_1_1() {
        let roots = solve_mass_equation(1.1, 1.0).unwrap();
        let pair = roots.pair.unwrap();
        assert!((pair.y - Y_EXACT_K_1_1).abs() < 1e-13);
        assert!(pair.residual <= MASS_ROOT_TOL);
        assert!(pair.rel_gap < 0.10, "gap {}", pair.rel_gap);
        assert_eq!(pair.mass_plus, -pair.mass_minus);
    }

    #[test]
    fn mass_equation_k_close_to_one() {
        let pair = solve_mass_equation(1.001, 1.0).unwrap().pair.unwrap();
        assert!((pair.y - Y_EXACT_K_1_001).abs() < 1e-13);
        assert!(pair.rel_gap < 1e-3, "gap {}", pair.rel_gap);
    }

    #[test]
    fn mass_equation_scales_with_pi0() {
        let pair = solve_mass_equation(1.1, 2.5).unwrap().pair.unwrap();
        assert!((pair.mass_plus - Y_EXACT_K_1_1 * 2.5).abs() < 1e-12);
    }

    #[test]
    fn kappa_state_examples() {
        // α=1, m=κ: P0 = κ·coth(1), v = 1/cosh(1).
        let params = QParams::new(1.0, 1.0).unwrap();
        let s = kappa_state(1.0, &params).unwrap();
        assert!((s.p0 - 1.3130352854993313).abs() < 1e-15);
        assert!((s.v - 0.6480542736638854).abs() < 1e-15);
        // m = 0: P = P0 = κ/α.
        let params = QParams::new(2.0, 4.0).unwrap();
        let s = kappa_state(0.0, &params).unwrap();
        assert_eq!((s.p, s.p0, s.v), (0.5, 0.5, 1.0));
    }

    #[test]
    fn kappa_state_matches_counter_rapidity_momenta() {
        // α = φκ turns the κ/α form back into p0 = m·coth(mφ).
        let (mass, kappa, phi) = (0.8, 2.3, 0.7);
        let params = QParams::new(kappa, phi * kappa).unwrap();
        let s = kappa_state(mass, &params).unwrap();
        let k = crate::kinematics::momenta_from_counter_rapidity(mass, mass * phi).unwrap();
        assert!((s.p - k.p).abs() < 1e-14);
        assert!((s.p0 - k.p0).abs() < 1e-14);
    }

    #[test]
    fn deformed_momentum_equal_point() {
        for mass in [0.0, 0.1, 1.0, 10.0] {
            let params = QParams::new(1.7, 1.0).unwrap();
            assert_eq!(deformed_momentum(mass, &params).unwrap(), 1.7);
        }
    }

    #[test]
    fn deformed_momentum_is_q_bracket() {
        let params = QParams::new(1.3, 2.4).unwrap();
        let p = deformed_momentum(0.9, &params).unwrap();
        let bracket = q_bracket(params.alpha, params.deformation(0.9)).unwrap();
        assert!((params.kappa / p - bracket).abs() < 1e-12);
    }

    #[test]
    fn deformed_energy_equal_point() {
        let params = QParams::new(1.0, 1.0).unwrap();
        let p0 = deformed_energy(1.0, &params).unwrap();
        assert!((p0 - 1f64.cosh()).abs() < 1e-14);
    }

    #[test]
    fn integral_representation_cases() {
        assert!(integral_representation_check(1.0, 1.0, 2.0).unwrap() < 1e-10);
        assert!(integral_representation_check(3.0, 1.0, 1.0).unwrap() < 1e-9);
        // α → 0: both sides tend to α together.
        assert!(integral_representation_check(1.0, 1.0, 1e-6).unwrap() < 1e-12);
    }

    #[test]
    fn circle_length_values() {
        let l = circle_length(1.0, 1.0, 1.0).unwrap();
        assert!((l - TWO_PI_SINH_1).abs() < 1e-12);
        // Flat limit: L → 2πmα.
        let m = 1e-4;
        let l = circle_length(1.0, m, 1.0).unwrap();
        let flat = 2.0 * std::f64::consts::PI * m;
        assert!((l / flat - 1.0).abs() < 1e-6);
        // Doubling α doubles the length in the flat regime.
        let l2 = circle_length(1.0, m, 2.0).unwrap();
        assert!((l2 / l - 2.0).abs() < 1e-6);
    }

    #[test]
    fn ladder_rows_and_sum_identity() {
        let rows = quantized_ladder(1.0, 1.0, 2.0, 1.0).unwrap();
        assert_eq!(rows.len(), 5);
        // J = 1/2, β = 1: sum = e + 1/e = sinh(2)/sinh(1).
        assert!((ladder_sum(0.5, 1.0) - E_PLUS_INV_E).abs() < 1e-12);
        assert!(rows[1].sum_identity_gap < 1e-12);
        // J = 0: single-term sum.
        assert_eq!(ladder_sum(0.0, 0.7), 1.0);
        assert!((rows[0].v - 1.0 / 1f64.cosh()).abs() < 1e-15);
        // J = 2, x = 0.3: five-term identity.
        let gap = (ladder_sum(2.0, 0.3) - (5.0 * 0.3f64).sinh() / 0.3f64.sinh()).abs();
        assert!(gap < 1e-12);
        // Velocities decrease strictly with J.
        for w in rows.windows(2) {
            assert!(w[1].v < w[0].v);
        }
    }

    #[test]
    fn printed_sum_variant_mismatches() {
        // The e^{nx} variant does not reproduce the sinh ratio.
        let x = 1.0;
        let ratio = (2.0 * x).sinh() / x.sinh();
        assert!((ladder_sum_printed(0.5, x) - ratio).abs() > 0.9);
    }

    #[test]
    fn de_broglie_limits() {
        let (p0, p) = de_broglie_map(1e-8, 1.0).unwrap();
        assert!((p0 - 1.0).abs() < 1e-15);
        assert!((p - 1.0).abs() < 1e-15);
        let (p0, _) = de_broglie_map(1.0, 1.0).unwrap();
        assert!((p0 - 1.3130352854993313).abs() < 1e-15);
        // λ = h/π₀ is self-inverse: extracting the counter-mass back from a
        // wavelength round-trips exactly.
        let lam = wavelength(2.0, 1.0).unwrap();
        assert!((lam - 0.5).abs() < 1e-15);
        assert!((wavelength(lam, 1.0).unwrap() - 2.0).abs() < 1e-12);
    }
}
