//! Exact multivariate polynomials over the rationals in the four coordinate
//! functions `x^0..x^3`, and first-order differential operators with
//! polynomial coefficients. No floating point anywhere: commutator checks
//! either vanish identically or they fail.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exponent tuple of one monomial `x0^a x1^b x2^c x3^d`.
pub type Monomial = [u32; 4];

/// Sparse polynomial with `BigRational` coefficients, normalized so stored
/// coefficients are never zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term([0; 4], BigRational::from_integer(BigInt::from(c)));
        p
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The coordinate function `x^mu`.
    pub fn var(mu: usize) -> Self {
        let mut exp = [0; 4];
        exp[mu] = 1;
        let mut p = Self::zero();
        p.add_term(exp, BigRational::one());
        p
    }

    pub fn monomial(exp: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, BigRational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    fn add_term(&mut self, exp: Monomial, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.add_term(*exp, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.add_term(*exp, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly::zero().sub(self)
    }

    pub fn scale_int(&self, k: i64) -> Poly {
        let factor = BigRational::from_integer(BigInt::from(k));
        let mut out = Poly::zero();
        for (exp, c) in &self.terms {
            out.add_term(*exp, c * &factor);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                out.add_term(exp, ca * cb);
            }
        }
        out
    }

    /// Partial derivative with respect to `x^mu`.
    pub fn partial(&self, mu: usize) -> Poly {
        let mut out = Poly::zero();
        for (exp, c) in &self.terms {
            if exp[mu] == 0 {
                continue;
            }
            let mut e = *exp;
            e[mu] -= 1;
            out.add_term(e, c * BigRational::from_integer(BigInt::from(exp[mu])));
        }
        out
    }

    /// Largest coefficient magnitude, as f64, for reporting residual sizes.
    pub fn max_coeff_abs(&self) -> f64 {
        self.terms
            .values()
            .map(|c| {
                let num: f64 = c.numer().to_string().parse().unwrap_or(f64::INFINITY);
                let den: f64 = c.denom().to_string().parse().unwrap_or(1.0);
                (num / den).abs()
            })
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (mu, &e) in exp.iter().enumerate() {
                if e == 1 {
                    write!(f, "*x{mu}")?;
                } else if e > 1 {
                    write!(f, "*x{mu}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// First-order differential operator `Σ_μ a_μ(x) ∂_μ + b(x)` with
/// polynomial coefficients. Applying it to a polynomial stays exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyOperator {
    pub deriv: [Poly; 4],
    pub mult: Poly,
}

impl PolyOperator {
    pub fn zero() -> Self {
        Self {
            deriv: [Poly::zero(), Poly::zero(), Poly::zero(), Poly::zero()],
            mult: Poly::zero(),
        }
    }

    /// The plain derivative `∂_μ = ∂/∂x^μ`.
    pub fn partial(mu: usize) -> Self {
        let mut op = Self::zero();
        op.deriv[mu] = Poly::one();
        op
    }

    /// Multiplication by a fixed polynomial.
    pub fn multiplication(p: Poly) -> Self {
        let mut op = Self::zero();
        op.mult = p;
        op
    }

    /// The dilatation `D = x^μ ∂_μ`.
    pub fn dilation() -> Self {
        let mut op = Self::zero();
        for mu in 0..4 {
            op.deriv[mu] = Poly::var(mu);
        }
        op
    }

    pub fn apply(&self, f: &Poly) -> Poly {
        let mut out = self.mult.mul(f);
        for mu in 0..4 {
            if !self.deriv[mu].is_zero() {
                out = out.add(&self.deriv[mu].mul(&f.partial(mu)));
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            deriv: [
                self.deriv[0].add(&other.deriv[0]),
                self.deriv[1].add(&other.deriv[1]),
                self.deriv[2].add(&other.deriv[2]),
                self.deriv[3].add(&other.deriv[3]),
            ],
            mult: self.mult.add(&other.mult),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale_int(-1))
    }

    pub fn scale_int(&self, k: i64) -> Self {
        Self {
            deriv: [
                self.deriv[0].scale_int(k),
                self.deriv[1].scale_int(k),
                self.deriv[2].scale_int(k),
                self.deriv[3].scale_int(k),
            ],
            mult: self.mult.scale_int(k),
        }
    }

    /// Commutator action `[A, B] f = A(B f) − B(A f)`.
    pub fn commutator_apply(a: &Self, b: &Self, f: &Poly) -> Poly {
        a.apply(&b.apply(f)).sub(&b.apply(&a.apply(f)))
    }
}

/// All monomials of total degree ≤ `max_degree` in the four coordinates.
pub fn monomials_up_to(max_degree: u32) -> Vec<Poly> {
    let mut out = Vec::new();
    let d = max_degree;
    for a in 0..=d {
        for b in 0..=(d - a) {
            for cc in 0..=(d - a - b) {
                for e in 0..=(d - a - b - cc) {
                    out.push(Poly::monomial([a, b, cc, e]));
                }
            }
        }
    }
    out
}
