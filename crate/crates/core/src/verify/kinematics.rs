//! Kinematics suite: dual-representation equivalence, the paired-angle
//! identities, round trips, the energy split, and the quadratic massless
//! limit.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Checker;
use crate::kinematics::*;
use crate::numeric::ls_slope;

const N_SAMPLES: usize = 10_000;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

pub(super) fn run(ck: &mut Checker<'_>, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Dual representation + shell + angle identities on one shared sample.
    let mut dual_worst = 0.0f64;
    let mut shell_worst = 0.0f64;
    let mut product_worst = 0.0f64;
    let mut tanh_worst = 0.0f64;
    for _ in 0..N_SAMPLES {
        let mass = rng.random_range(1e-3..=10.0);
        let psi = rng.random_range(1e-6..=5.0);
        let via_rapidity = momenta_from_rapidity(mass, psi);
        let chi = reciprocity(psi).unwrap();
        let via_counter = momenta_from_counter_rapidity(mass, chi).unwrap();
        dual_worst = dual_worst
            .max(rel(via_counter.p0, via_rapidity.p0))
            .max(rel(via_counter.p, via_rapidity.p));
        shell_worst = shell_worst
            .max(via_rapidity.shell_residual_relative().abs())
            .max(via_counter.shell_residual_relative().abs());
        product_worst = product_worst
            .max((psi.sinh() * chi.sinh() - 1.0).abs())
            .max((psi.cosh() * chi.tanh() - 1.0).abs());
        tanh_worst = tanh_worst.max((psi.tanh().powi(2) + chi.tanh().powi(2) - 1.0).abs());
    }
    ck.push("dual-representation", "2.10/2.21/2.28", "dual_representation", 1e-10, dual_worst);
    ck.push("mass-shell", "2.3", "mass_shell", 1e-12, shell_worst);
    ck.push("angle-identity-product", "2.28", "angle_identities", 1e-12, product_worst);
    ck.push("angle-identity-tanh", "2.27", "angle_identities", 1e-12, tanh_worst);

    // Round trips constructor → angles → constructor.
    let mut rt_psi = 0.0f64;
    let mut rt_chi = 0.0f64;
    for _ in 0..N_SAMPLES / 10 {
        let mass = rng.random_range(1e-3..=10.0);
        let psi = rng.random_range(1e-3..=6.0);
        let state = momenta_from_rapidity(mass, psi);
        rt_psi = rt_psi.max(rel(angles_from_momenta(&state).unwrap().psi, psi));
        let chi = rng.random_range(1e-3..=7.0);
        let state = momenta_from_counter_rapidity(mass, chi).unwrap();
        rt_chi = rt_chi.max(rel(angles_from_momenta(&state).unwrap().chi, chi));
    }
    ck.push("roundtrip-rapidity", "2.10/2.22", "roundtrip", 1e-10, rt_psi);
    ck.push("roundtrip-counter-rapidity", "2.21/2.23", "roundtrip", 1e-10, rt_chi);

    // Quadratic approach to the counter-mass: log-log slope of
    // |p0(m, χ=mφ) − 1/φ| at fixed φ = 1 must be 2.
    let masses = [1e-2, 1e-3, 1e-4, 1e-5, 1e-6];
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    for &m in &masses {
        let p0 = momenta_from_counter_rapidity(m, m).unwrap().p0;
        xs.push(m.ln());
        ys.push((p0 - 1.0).abs().ln());
    }
    let slope = ls_slope(&xs, &ys);
    ck.push("massless-limit-slope", "2.24", "massless_slope", 0.1, slope - 2.0);

    // Energy split invariants, normalized by the state scale.
    let mut split_worst = 0.0f64;
    for _ in 0..N_SAMPLES / 10 {
        let mass = rng.random_range(1e-2..=10.0);
        let psi = rng.random_range(0.0..=5.0);
        let s = momenta_from_rapidity(mass, psi);
        let es = split_energies(&s).unwrap();
        let scale = s.p0 * s.p0 + s.p * s.p + mass * mass;
        split_worst = split_worst
            .max((es.q1 + es.q2 - 2.0 * s.p0).abs() / scale.sqrt())
            .max((es.q2 - es.q1 - 2.0 * mass).abs() / scale.sqrt())
            .max((es.q1 * es.q2 - s.p * s.p).abs() / scale);
    }
    ck.push("energy-split", "2.6/2.15", "energy_split", 1e-12, split_worst);

    // v² + v̄² = 1 and v̄ = tanh χ.
    let mut vel_worst = 0.0f64;
    for _ in 0..N_SAMPLES / 10 {
        let mass = rng.random_range(1e-2..=10.0);
        let psi = rng.random_range(1e-3..=5.0);
        let s = momenta_from_rapidity(mass, psi);
        let vp = velocity_pair(&s).unwrap();
        let chi = reciprocity(psi).unwrap();
        vel_worst = vel_worst
            .max((vp.v * vp.v + vp.v_bar * vp.v_bar - 1.0).abs())
            .max((vp.v_bar - chi.tanh()).abs());
    }
    ck.push("velocity-pair", "2.11/2.25-2.27", "velocity_pair", 1e-12, vel_worst);

    // Reciprocity is an involution.
    let mut inv_worst = 0.0f64;
    for _ in 0..N_SAMPLES / 10 {
        let psi = rng.random_range(1e-2..=6.0);
        inv_worst = inv_worst.max(rel(reciprocity(reciprocity(psi).unwrap()).unwrap(), psi));
    }
    ck.push("reciprocity-involution", "2.28", "reciprocity", 1e-12, inv_worst);

    // Newtonian limit of the lower split energy.
    let p = 0.01;
    let s = MomentumState::new(1.0, (1.0f64 + p * p).sqrt(), p);
    let q1 = split_energies(&s).unwrap().q1;
    ck.push("newtonian-limit", "2.7", "newtonian_limit", 1e-4, rel(q1, p * p / 2.0));

    ck.erratum(
        "eq-2.3-momentum-square",
        "2.3",
        "the first integral prints (p·p)² where dimensional consistency forces p·p; \
         implemented as p0² − p² = m²",
        None,
    );
}
