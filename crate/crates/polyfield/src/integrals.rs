//! Exact monomial integrals over the unit ball `B⁷` and sphere `S⁶`.
//!
//! With `α` even in every slot and `m_i = α_i/2`, `m = Σm_i`, the classical
//! Γ-function formula reduces to
//!
//! ```text
//! ∫_{S⁶} ω^α dσ = 128 (m+3)! ∏_i [(2m_i)!/m_i!] / (2m+6)! · π³,
//! ```
//!
//! using `Γ(k + ½) = (2k)!/(4^k k!) √π`; any odd exponent integrates to
//! zero. Ball integrals divide by the radial power `|α| + 7`. All results
//! are exact rationals times `π³`, carried by [`ExactScalar`].

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::poly::{Exponents, MultiPoly7};
use crate::{factorial, q, Q};

/// An exact rational multiple of `π³`, the value group of every polynomial
/// integral over `B⁷` or `S⁶`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct ExactScalar {
    /// Coefficient of `π³`.
    pub q: Q,
}

impl ExactScalar {
    pub fn new(q: Q) -> Self {
        Self { q }
    }

    pub fn zero() -> Self {
        Self { q: Q::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.q.is_positive()
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self { q: &self.q * c }
    }

    /// Floating approximation, `q · π³`.
    pub fn to_f64(&self) -> f64 {
        self.q.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI.powi(3)
    }

    /// Exact ratio of two scalars (the `π³` units cancel).
    pub fn ratio(&self, other: &Self) -> Option<Q> {
        if other.is_zero() {
            None
        } else {
            Some(&self.q / &other.q)
        }
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: ExactScalar) -> ExactScalar {
        ExactScalar { q: self.q + rhs.q }
    }
}

impl AddAssign for ExactScalar {
    fn add_assign(&mut self, rhs: ExactScalar) {
        self.q += rhs.q;
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: ExactScalar) -> ExactScalar {
        ExactScalar { q: self.q - rhs.q }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { q: -self.q }
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·π³", self.q)
    }
}

/// `∫_{S⁶} ω^α dσ`.
pub fn monomial_integral_sphere(alpha: &Exponents) -> ExactScalar {
    if alpha.iter().any(|&a| a % 2 == 1) {
        return ExactScalar::zero();
    }
    let m_total: u64 = alpha.iter().map(|&a| a as u64 / 2).sum();
    let mut num = BigInt::from(128) * factorial(m_total + 3);
    let mut den = factorial(2 * m_total + 6);
    for &a in alpha {
        let m = a as u64 / 2;
        num *= factorial(2 * m);
        den *= factorial(m);
    }
    ExactScalar::new(BigRational::new(num, den))
}

/// `∫_{B⁷} ξ^α dξ`.
pub fn monomial_integral_ball(alpha: &Exponents) -> ExactScalar {
    let total: i64 = alpha.iter().map(|&a| a as i64).sum();
    monomial_integral_sphere(alpha).scale(&(q(1) / q(total + 7)))
}

/// Integral of a polynomial over the ball.
pub fn integral_ball(p: &MultiPoly7) -> ExactScalar {
    let mut out = ExactScalar::zero();
    for (e, c) in p.terms() {
        out += monomial_integral_ball(e).scale(c);
    }
    out
}

/// Integral of a polynomial over the sphere.
pub fn integral_sphere(p: &MultiPoly7) -> ExactScalar {
    let mut out = ExactScalar::zero();
    for (e, c) in p.terms() {
        out += monomial_integral_sphere(e).scale(c);
    }
    out
}
