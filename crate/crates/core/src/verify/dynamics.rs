//! Dynamics suite: integrator accuracy against closed forms, conservation
//! laws, the projected evolution, and the covariant force residual.

use nalgebra::Vector3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Checker;
use crate::dynamics::*;
use crate::kinematics::momenta_from_rapidity;

pub(super) fn run(ck: &mut Checker<'_>, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Uniform E from rest vs the hyperbolic closed form at τ = 5.
    let e_fields = FieldConfig::UniformElectric {
        e_field: Vector3::new(1.0, 0.0, 0.0),
    };
    let traj_e = integrate_lorentz(&ParticleState::at_rest(1.0, 1.0), &e_fields, 5.0, 1e-3)
        .expect("uniform-E integration");
    let last = traj_e.last().state;
    let closed_p = 5f64.sinh();
    let closed_p0 = 5f64.cosh();
    let e_err = ((last.p[0] - closed_p) / closed_p)
        .abs()
        .max(((last.p0 - closed_p0) / closed_p0).abs());
    ck.push("uniform-e-closed-form", "2.9/2.10", "integrator_uniform_e", 1e-8, e_err);

    // Rapidity as the proper-time integral of the force.
    let psi_integral = accumulated_rapidity(&traj_e, &e_fields);
    let psi_final = (last.p.norm() / last.p0).atanh();
    ck.push(
        "rapidity-force-integral",
        "2.8",
        "rapidity_integral",
        1e-6,
        psi_integral - psi_final,
    );

    // Coulomb energy integral over a long run.
    let k = -0.1;
    let p0 = 0.5 * (0.1 + (0.01f64 + 4.0).sqrt());
    let coulomb_initial = ParticleState {
        tau: 0.0,
        t: 0.0,
        r: Vector3::new(1.0, 0.0, 0.0),
        p: Vector3::new(0.0, (0.1 * p0).sqrt(), 0.0),
        p0,
        mass: 1.0,
        charge: 1.0,
    };
    let coulomb = FieldConfig::Coulomb { k };
    let traj_c =
        integrate_lorentz(&coulomb_initial, &coulomb, 50.0, 1e-3).expect("coulomb integration");
    ck.push(
        "coulomb-energy-integral",
        "2.4",
        "energy_integral",
        1e-8,
        traj_c.max_energy_drift(),
    );

    // Uniform B preserves |p|.
    let b_fields = FieldConfig::UniformMagnetic {
        b_field: Vector3::new(0.0, 0.0, 1.0),
    };
    let b_initial = ParticleState::on_shell(1.0, 1.0, Vector3::zeros(), Vector3::new(1.0, 0.0, 0.0));
    let traj_b = integrate_lorentz(&b_initial, &b_fields, 10.0, 1e-3).expect("uniform-B integration");
    let b_drift = traj_b
        .samples
        .iter()
        .map(|s| (s.state.p.norm() - 1.0).abs())
        .fold(0.0, f64::max);
    ck.push("uniform-b-momentum-norm", "2.1", "magnetic_norm", 1e-10, b_drift);

    // Mass-shell drift, normalized per 10⁴ steps at step 1e-3.
    let drift = [&traj_e, &traj_c, &traj_b]
        .iter()
        .map(|t| t.max_shell_drift() / ((t.samples.len() as f64 - 1.0) / 1e4).max(1.0))
        .fold(0.0, f64::max);
    ck.push("shell-drift", "2.3", "shell_drift", 1e-8, drift);

    // Projected evolution: exact hyperbolic rotation.
    let mut invariant_worst = 0.0f64;
    let mut semigroup_worst = 0.0f64;
    for _ in 0..1_000 {
        let mass = rng.random_range(0.1..=5.0);
        let psi0 = rng.random_range(0.0..=2.0);
        let s = momenta_from_rapidity(mass, psi0);
        let span_a = rng.random_range(-1.5..=1.5);
        let span_b = rng.random_range(-1.5..=1.5);
        let (p0a, pa) = projected_evolution(s.p0, s.p, span_a);
        let scale = p0a * p0a + pa * pa;
        invariant_worst = invariant_worst
            .max(((p0a * p0a - pa * pa) - (s.p0 * s.p0 - s.p * s.p)).abs() / scale);
        let (p0ab, pab) = projected_evolution(p0a, pa, span_b);
        let (p0sum, psum) = projected_evolution(s.p0, s.p, span_a + span_b);
        semigroup_worst = semigroup_worst
            .max((p0ab - p0sum).abs() / p0sum.abs().max(1.0))
            .max((pab - psum).abs() / p0sum.abs().max(1.0));
    }
    ck.push(
        "projected-evolution-invariant",
        "2.8",
        "projected_invariant",
        1e-12,
        invariant_worst,
    );
    ck.push(
        "projected-evolution-semigroup",
        "2.8",
        "projected_semigroup",
        1e-12,
        semigroup_worst,
    );

    // General hyperbolic solution: A²(1−B²) = m² on random on-shell data.
    let mut fit_worst = 0.0f64;
    for _ in 0..1_000 {
        let mass = rng.random_range(0.1..=5.0);
        let psi = rng.random_range(0.0..=3.0);
        let s = momenta_from_rapidity(mass, psi);
        let fit = fit_hyperbolic_solution(s.p0, s.p, mass).unwrap();
        fit_worst = fit_worst.max(fit.shell_residual(mass).abs() / (mass * mass).max(1.0));
    }
    ck.push("hyperbolic-fit-shell", "2.9", "hyperbolic_fit", 1e-12, fit_worst);

    // Covariant force residual by central differences at step 1e-4.
    let traj_fine = integrate_lorentz(&ParticleState::at_rest(1.0, 1.0), &e_fields, 0.1, 1e-4)
        .expect("fine uniform-E integration");
    let mid = traj_fine.samples.len() / 2;
    let tensor = FieldTensor::from_config(&e_fields, &traj_fine.samples[mid].state.r, 1.0);
    let res = covariant_residual(&traj_fine, mid, &tensor).unwrap();
    let worst_e = res.iter().fold(0.0f64, |a, &x| a.max(x.abs()));
    ck.push("covariant-residual-uniform-e", "2.5", "covariant_residual", 1e-6, worst_e);

    let traj_bfine = integrate_lorentz(&b_initial, &b_fields, 0.1, 1e-4).expect("fine uniform-B");
    let mid = traj_bfine.samples.len() / 2;
    let tensor = FieldTensor::from_config(&b_fields, &traj_bfine.samples[mid].state.r, 1.0);
    let res = covariant_residual(&traj_bfine, mid, &tensor).unwrap();
    let worst_b = res.iter().fold(0.0f64, |a, &x| a.max(x.abs()));
    ck.push("covariant-residual-uniform-b", "2.5", "covariant_residual", 1e-6, worst_b);
}
