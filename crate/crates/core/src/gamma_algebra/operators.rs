//! The Γ-group as differential operators, verified in exact arithmetic.
//!
//! With lowered coordinates `x_μ = η_μν x^ν` and the dilatation
//! `D = x^μ∂_μ`, the generators are `G_ν = ρ²∂_ν − x_ν D`, acting on
//! coordinates as `G_ν x_μ = ρ²η_νμ − x_ν x_μ`. Together with the Lorentz
//! generators `M_μν = x_μ∂_ν − x_ν∂_μ` and the scalar `ρ²` they close:
//!
//! ```text
//! [G_μ, G_ν] = ρ² M_μν            [G_μ, ρ²] = [ρ², M_μν] = 0
//! [M_μν, G_λ] = η_νλ G_μ − η_μλ G_ν
//! [M_μν, M_λη] = η_νλ M_μη − η_μλ M_νη + η_μη M_νλ + η_νη M_λμ
//! [D, G_μ] = G_μ                  [D, ρ²] = 2ρ²
//! ```
//!
//! Every relation is checked by action on the full monomial basis of degree
//! ≤ 3 (first-order operators with quadratic coefficients are determined
//! there), demanding identically zero residual polynomials.

use super::poly::{monomials_up_to, Poly, PolyOperator};

/// Metric signature (+,−,−,−).
pub const ETA: [i64; 4] = [1, -1, -1, -1];

/// Degree of the monomial test space the suite runs on.
pub const TEST_SPACE_DEGREE: u32 = 3;

/// The invariant square `ρ² = x_μ x^μ` as a polynomial.
pub fn rho2() -> Poly {
    let mut p = Poly::zero();
    for mu in 0..4 {
        p = p.add(&Poly::var(mu).mul(&Poly::var(mu)).scale_int(ETA[mu]));
    }
    p
}

/// Lowered coordinate `x_μ` as a polynomial.
pub fn lowered(mu: usize) -> Poly {
    Poly::var(mu).scale_int(ETA[mu])
}

/// Generator `G_ν = ρ²∂_ν − x_ν D`.
pub fn generator(nu: usize) -> PolyOperator {
    let mut op = PolyOperator::zero();
    let r2 = rho2();
    let xnu = lowered(nu);
    for mu in 0..4 {
        // coefficient of ∂_μ: ρ²δ_νμ − x_ν x^μ
        let mut coeff = xnu.mul(&Poly::var(mu)).neg();
        if mu == nu {
            coeff = coeff.add(&r2);
        }
        op.deriv[mu] = coeff;
    }
    op
}

/// Lorentz generator `M_μν = x_μ∂_ν − x_ν∂_μ`.
pub fn lorentz(mu: usize, nu: usize) -> PolyOperator {
    let mut op = PolyOperator::zero();
    op.deriv[nu] = lowered(mu);
    op.deriv[mu] = lowered(nu).neg();
    op
}

/// Applies `G_ν` to a polynomial (exact).
pub fn generator_apply(nu: usize, f: &Poly) -> Poly {
    generator(nu).apply(f)
}

/// One verified operator identity.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorCheck {
    pub id: String,
    /// True when the residual polynomial vanished identically on the whole
    /// test space.
    pub exact: bool,
    /// Number of test polynomials with a nonzero residual.
    pub failures: usize,
    /// Largest residual coefficient seen (0 for exact passes).
    pub worst_coeff: f64,
}

/// Outcome of the full exact commutator suite.
#[derive(Debug, Clone, PartialEq)]
pub struct CommutatorSuiteReport {
    pub checks: Vec<OperatorCheck>,
    /// Residual size of the Lorentz relation with the printed (opposite)
    /// overall sign, kept for the errata report.
    pub printed_lorentz_sign_worst: f64,
}

impl CommutatorSuiteReport {
    pub fn all_exact(&self) -> bool {
        self.checks.iter().all(|c| c.exact)
    }
}

fn check_on_test_space<F>(id: String, residual: F) -> OperatorCheck
where
    F: Fn(&Poly) -> Poly,
{
    let mut failures = 0;
    let mut worst = 0.0f64;
    for f in monomials_up_to(TEST_SPACE_DEGREE) {
        let r = residual(&f);
        if !r.is_zero() {
            failures += 1;
            worst = worst.max(r.max_coeff_abs());
        }
    }
    OperatorCheck {
        id,
        exact: failures == 0,
        failures,
        worst_coeff: worst,
    }
}

/// Runs every Γ-group relation in exact arithmetic and reports each as an
/// exact pass/fail.
pub fn commutator_suite() -> CommutatorSuiteReport {
    let mut checks = Vec::new();
    let r2 = rho2();
    let r2_op = PolyOperator::multiplication(r2.clone());
    let d = PolyOperator::dilation();
    let g: Vec<PolyOperator> = (0..4).map(generator).collect();

    // Coordinate action G_ν x_μ = ρ²η_νμ − x_ν x_μ.
    {
        let mut failures = 0;
        let mut worst = 0.0f64;
        for nu in 0..4 {
            for mu in 0..4 {
                let lhs = g[nu].apply(&lowered(mu));
                let mut rhs = lowered(nu).mul(&lowered(mu)).neg();
                if mu == nu {
                    rhs = rhs.add(&r2.scale_int(ETA[mu]));
                }
                let res = lhs.sub(&rhs);
                if !res.is_zero() {
                    failures += 1;
                    worst = worst.max(res.max_coeff_abs());
                }
            }
        }
        checks.push(OperatorCheck {
            id: "generator-coordinate-action".into(),
            exact: failures == 0,
            failures,
            worst_coeff: worst,
        });
    }

    // [G_μ, G_ν] = ρ² M_μν.
    for mu in 0..4 {
        for nu in (mu + 1)..4 {
            let m = lorentz(mu, nu);
            checks.push(check_on_test_space(
                format!("[G{mu},G{nu}]=rho2*M{mu}{nu}"),
                |f| {
                    PolyOperator::commutator_apply(&g[mu], &g[nu], f)
                        .sub(&r2.mul(&m.apply(f)))
                },
            ));
        }
    }

    // [G_μ, ρ²] = 0 and [ρ², M_μν] = 0 as multiplication operators.
    for mu in 0..4 {
        checks.push(check_on_test_space(format!("[G{mu},rho2]=0"), |f| {
            PolyOperator::commutator_apply(&g[mu], &r2_op, f)
        }));
    }
    for mu in 0..4 {
        for nu in (mu + 1)..4 {
            let m = lorentz(mu, nu);
            checks.push(check_on_test_space(format!("[rho2,M{mu}{nu}]=0"), |f| {
                PolyOperator::commutator_apply(&r2_op, &m, f)
            }));
        }
    }

    // [M_μν, G_λ] = η_νλ G_μ − η_μλ G_ν.
    for mu in 0..4 {
        for nu in (mu + 1)..4 {
            let m = lorentz(mu, nu);
            for lam in 0..4 {
                let mut rhs = PolyOperator::zero();
                if nu == lam {
                    rhs = rhs.add(&g[mu].scale_int(ETA[nu]));
                }
                if mu == lam {
                    rhs = rhs.sub(&g[nu].scale_int(ETA[mu]));
                }
                checks.push(check_on_test_space(
                    format!("[M{mu}{nu},G{lam}]"),
                    |f| PolyOperator::commutator_apply(&m, &g[lam], f).sub(&rhs.apply(f)),
                ));
            }
        }
    }

    // Lorentz algebra, with the sign consistent with M_μν = x_μ∂_ν − x_ν∂_μ.
    let lorentz_rhs = |mu: usize, nu: usize, lam: usize, eta_idx: usize| -> PolyOperator {
        let mut rhs = PolyOperator::zero();
        if nu == lam {
            rhs = rhs.add(&lorentz(mu, eta_idx).scale_int(ETA[nu]));
        }
        if mu == lam {
            rhs = rhs.sub(&lorentz(nu, eta_idx).scale_int(ETA[mu]));
        }
        if mu == eta_idx {
            rhs = rhs.add(&lorentz(nu, lam).scale_int(ETA[mu]));
        }
        if nu == eta_idx {
            rhs = rhs.add(&lorentz(lam, mu).scale_int(ETA[nu]));
        }
        rhs
    };
    let mut printed_sign_worst = 0.0f64;
    for mu in 0..4 {
        for nu in (mu + 1)..4 {
            for lam in 0..4 {
                for eta_idx in (lam + 1)..4 {
                    let ma = lorentz(mu, nu);
                    let mb = lorentz(lam, eta_idx);
                    let rhs = lorentz_rhs(mu, nu, lam, eta_idx);
                    checks.push(check_on_test_space(
                        format!("[M{mu}{nu},M{lam}{eta_idx}]"),
                        |f| PolyOperator::commutator_apply(&ma, &mb, f).sub(&rhs.apply(f)),
                    ));
                    // The printed relation carries the opposite overall sign;
                    // measure its residual for the errata record.
                    for f in monomials_up_to(1) {
                        let res = PolyOperator::commutator_apply(&ma, &mb, &f)
                            .add(&rhs.apply(&f));
                        printed_sign_worst = printed_sign_worst.max(res.max_coeff_abs());
                    }
                }
            }
        }
    }

    // Dilatation extension: [D, G_μ] = G_μ and [D, ρ²] = 2ρ².
    for mu in 0..4 {
        checks.push(check_on_test_space(format!("[D,G{mu}]=G{mu}"), |f| {
            PolyOperator::commutator_apply(&d, &g[mu], f).sub(&g[mu].apply(f))
        }));
    }
    checks.push(check_on_test_space("[D,rho2]=2rho2".into(), |f| {
        PolyOperator::commutator_apply(&d, &r2_op, f).sub(&r2.scale_int(2).mul(f))
    }));

    CommutatorSuiteReport {
        checks,
        printed_lorentz_sign_worst: printed_sign_worst,
    }
}
