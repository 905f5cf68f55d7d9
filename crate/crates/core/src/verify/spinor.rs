//! Spinor suite: boost residuals, block/coupled equivalence, basis change,
//! the split eigenvalue problems with their regular massless limit, and the
//! complex period/half-shift facts.

use nalgebra::{Vector2, Vector3};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Checker;
use crate::spinor::*;

type C = Complex64;

fn random_unit(rng: &mut ChaCha8Rng) -> Vector3<f64> {
    loop {
        let v = Vector3::new(
            rng.random_range(-1.0..=1.0),
            rng.random_range(-1.0..=1.0),
            rng.random_range(-1.0..=1.0),
        );
        let n = v.norm();
        if n > 1e-3 {
            return v / n;
        }
    }
}

fn random_spinor(rng: &mut ChaCha8Rng) -> Vector2<C> {
    let v = Vector2::new(
        C::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0)),
        C::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0)),
    );
    if v.norm() < 1e-3 {
        Vector2::new(C::new(1.0, 0.0), C::new(0.0, 0.0))
    } else {
        v / C::new(v.norm(), 0.0)
    }
}

pub(super) fn run(ck: &mut Checker<'_>, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Boost residuals for 10³ random boosts.
    let mut boost_worst = 0.0f64;
    let mut block_gap = 0.0f64;
    for _ in 0..1_000 {
        let mass = rng.random_range(0.1..=2.0);
        let p = random_unit(&mut rng) * rng.random_range(0.0..=5.0);
        let xi0 = random_spinor(&mut rng);
        let pair = boost_spinors(mass, &p, &xi0).unwrap();
        let (r1, r2) = coupled_equation_residuals(&pair);
        boost_worst = boost_worst.max(r1).max(r2);
        block_gap = block_gap.max((chiral_dirac_residual(&pair) - r1.max(r2)).abs());
    }
    ck.push("boost-coupled-equations", "3.1/3.2", "boost_residual", 1e-12, boost_worst);
    ck.push("block-equivalence", "3.2/3.3", "block_equivalence", 1e-13, block_gap);

    // det(block) = (mass-shell residual)² on random off-shell inputs.
    let mut det_worst = 0.0f64;
    for _ in 0..200 {
        let mass = rng.random_range(0.1..=2.0);
        let p0 = rng.random_range(0.5..=3.0);
        let p = random_unit(&mut rng) * rng.random_range(0.0..=2.0);
        let det = chiral_block_determinant(mass, p0, &p);
        let shell = p0 * p0 - p.norm_squared() - mass * mass;
        det_worst = det_worst.max((det - C::new(shell * shell, 0.0)).norm());
    }
    ck.push("block-determinant", "3.3", "block_determinant", 1e-10, det_worst);

    // Standard ↔ chiral basis change.
    let maps = ChiralBasisMaps::new();
    let mut basis_worst = 0.0f64;
    for _ in 0..100 {
        let mass = rng.random_range(0.1..=2.0);
        let p0 = rng.random_range(0.5..=3.0);
        let p = random_unit(&mut rng) * rng.random_range(0.0..=2.0);
        let conjugated = maps.to_chiral(&standard_dirac_operator(mass, p0, &p));
        basis_worst = basis_worst.max((conjugated - chiral_block(mass, p0, &p)).norm());
    }
    ck.push("basis-change", "3.4/3.5", "basis_change", 1e-14, basis_worst);

    // Split equations on the positive-helicity branch, half-angle form.
    let mut split_worst = 0.0f64;
    for _ in 0..500 {
        let mass = rng.random_range(0.05..=3.0);
        let phi = rng.random_range(0.1..=3.0) / mass.max(0.5);
        let n = random_unit(&mut rng);
        let xi = helicity_spinor(&n, Helicity::Plus).unwrap();
        let (rl, rr) =
            split_dirac_residuals(mass, phi, &n, &xi, EigenvalueConvention::HalfAngle).unwrap();
        split_worst = split_worst.max(rl).max(rr);
    }
    ck.push("split-equations", "3.7a/3.7b", "split_residual", 1e-10, split_worst);

    // Massless limit reaches the {2π₀, 0} pair with error O(m).
    let mut limit_worst = 0.0f64;
    for &m in &[1e-4, 1e-6] {
        let phi = 1.0;
        let (lp, lm) = split_eigenvalues(m, phi, EigenvalueConvention::HalfAngle);
        limit_worst = limit_worst
            .max((lp - 2.0).abs() / m)
            .max(lm.abs() / m);
    }
    ck.push(
        "massless-limit-eigenvalues",
        "3.9",
        "massless_eigenvalues",
        1.0,
        limit_worst,
    );

    // Weyl equations and the parity witness.
    let rep = massless_weyl_check(1.0, &random_unit(&mut rng)).unwrap();
    ck.push(
        "weyl-helicity",
        "3.9",
        "weyl",
        1e-12,
        rep.weyl_right_residual.max(rep.weyl_left_residual),
    );
    let parity_residual = if rep.parity_symmetric {
        1.0
    } else {
        (rep.parity_mismatch - 2.0).abs() // 2π₀ with π₀ = 1
    };
    ck.push("parity-witness", "3.9", "parity", 1e-12, parity_residual);

    // coth(z + iπ/2) = tanh(z) off the singular set.
    let mut shift_worst = 0.0f64;
    for _ in 0..200 {
        let z = C::new(rng.random_range(0.2..=2.0), rng.random_range(-1.0..=1.0));
        let shifted = complex_coth(z + C::new(0.0, std::f64::consts::FRAC_PI_2));
        shift_worst = shift_worst.max((shifted - z.tanh()).norm());
    }
    ck.push("half-shift-coth-tanh", "3.8", "half_shift", 1e-12, shift_worst);

    // Completed electron pair closes under the half-angle convention.
    let mut completed_worst = 0.0f64;
    let mut printed_gap = 0.0f64;
    for _ in 0..200 {
        let mass = rng.random_range(0.1..=2.0);
        let pi0 = rng.random_range(0.3..=3.0);
        let n = random_unit(&mut rng);
        let xi = helicity_spinor(&n, Helicity::Plus).unwrap();
        let half = completed_dirac(mass, pi0, &n, &xi, EigenvalueConvention::HalfAngle).unwrap();
        completed_worst = completed_worst.max(half.res_plus).max(half.res_minus);
        let full = completed_dirac(mass, pi0, &n, &xi, EigenvalueConvention::FullAngle).unwrap();
        printed_gap = printed_gap.max(full.res_plus).max(full.res_minus);
    }
    ck.push(
        "completed-dirac-half-angle",
        "3.10/2.21",
        "completed_dirac",
        1e-12,
        completed_worst,
    );

    // Errata: the full-angle eigenvalues as printed do not close the system
    // fed by the counter-rapidity momenta.
    ck.erratum(
        "eq-3.7-angle-argument",
        "3.7a/3.10",
        "coth(mcφ) and coth(mcφ/2) both appear; only the half-angle pairing is \
         consistent with the momenta of 2.21 (full-angle residual reported)",
        Some(printed_gap),
    );

    // Errata: the printed period claim. Under χ → χ + i2π the half-angle
    // functions are invariant, not exchanged; the exchange happens at iπ.
    let z = C::new(0.9, 0.3);
    let two_pi = C::new(0.0, 2.0 * std::f64::consts::PI);
    let claimed_exchange = (complex_coth(0.5 * (z + two_pi)) - (0.5 * z).tanh()).norm();
    let invariance = (complex_coth(0.5 * (z + two_pi)) - complex_coth(0.5 * z)).norm();
    let true_exchange =
        (complex_coth(0.5 * (z + C::new(0.0, std::f64::consts::PI))) - (0.5 * z).tanh()).norm();
    ck.erratum(
        "eq-3.8-period",
        "3.8",
        &format!(
            "under χ → χ+2πi the functions coth(χ/2), tanh(χ/2) are invariant \
             (residual {invariance:.2e}), not exchanged as claimed (gap reported); \
             the exchange holds under χ → χ+iπ (residual {true_exchange:.2e})"
        ),
        Some(claimed_exchange),
    );

    // Errata: the 3.7 matrix as printed sums instead of cancelling; the 3.6
    // sign convention is the implemented one.
    let (mass, phi) = (1.0, 0.7);
    let s = crate::kinematics::momenta_from_counter_rapidity(mass, mass * phi).unwrap();
    let printed_row = (s.p0 + mass) * (-0.5 * mass * phi).exp() + s.p * (0.5 * mass * phi).exp();
    ck.erratum(
        "eq-3.7-matrix-sign",
        "3.6/3.7",
        "the printed matrix row (P0+mc)e^{-mcφ/2} + P e^{mcφ/2} does not vanish; \
         the 3.6 relation fixes the relative sign to a minus",
        Some(printed_row.abs()),
    );
}
