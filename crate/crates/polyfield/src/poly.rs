//! Sparse polynomials in seven variables with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::{q, Q};

/// Ambient dimension.
pub const DIM: usize = 7;

/// Exponent tuple of a monomial `ξ₁^{e₁} ⋯ ξ₇^{e₇}`.
pub type Exponents = [u8; DIM];

/// A polynomial in `ξ₁, …, ξ₇` as a sorted term map. Zero coefficients are
/// never stored, so structural equality is semantic equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiPoly7 {
    terms: BTreeMap<Exponents, Q>,
}

impl MultiPoly7 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Q) -> Self {
        let mut p = Self::zero();
        p.add_term([0; DIM], c);
        p
    }

    pub fn one() -> Self {
        Self::constant(q(1))
    }

    /// The coordinate monomial `ξ_{j+1}` (zero-based `j`).
    pub fn coordinate(j: usize) -> Self {
        assert!(j < DIM);
        let mut e = [0; DIM];
        e[j] = 1;
        Self::monomial(e, q(1))
    }

    /// `|ξ|²`.
    pub fn radius_sq() -> Self {
        let mut p = Self::zero();
        for j in 0..DIM {
            let mut e = [0; DIM];
            e[j] = 2;
            p.add_term(e, q(1));
        }
        p
    }

    pub fn monomial(exponents: Exponents, coeff: Q) -> Self {
        let mut p = Self::zero();
        p.add_term(exponents, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Q)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exponents: Exponents, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents).or_insert_with(Q::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, v * c))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&q(-1))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = [0u8; DIM];
                for k in 0..DIM {
                    e[k] = e1[k]
                        .checked_add(e2[k])
                        .expect("monomial degree exceeds u8");
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Partial derivative `∂/∂ξ_{j+1}`.
    pub fn diff(&self, j: usize) -> Self {
        assert!(j < DIM);
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[j] > 0 {
                let mut e2 = *e;
                e2[j] -= 1;
                out.add_term(e2, c * q(e[j] as i64));
            }
        }
        out
    }

    /// Iterated partial derivative `∂^β`.
    pub fn diff_multi(&self, beta: &Exponents) -> Self {
        let mut out = self.clone();
        for (j, &b) in beta.iter().enumerate() {
            for _ in 0..b {
                if out.is_zero() {
                    return out;
                }
                out = out.diff(j);
            }
        }
        out
    }

    /// Radial derivative field `ξ·∇`.
    pub fn xi_grad(&self) -> Self {
        let mut out = Self::zero();
        for j in 0..DIM {
            out = out.add(&Self::coordinate(j).mul(&self.diff(j)));
        }
        out
    }

    pub fn laplacian(&self) -> Self {
        let mut out = Self::zero();
        for j in 0..DIM {
            out = out.add(&self.diff(j).diff(j));
        }
        out
    }
}

impl fmt::Display for MultiPoly7 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (j, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*x{}", j + 1)?,
                    _ => write!(f, "*x{}^{}", j + 1, p)?,
                }
            }
        }
        Ok(())
    }
}

/// A two-component field `(u₁, u₂)`, the polynomial stand-in for a pair in
/// `H³ × H²(B⁷)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairField {
    pub u1: MultiPoly7,
    pub u2: MultiPoly7,
}

impl PairField {
    pub fn new(u1: MultiPoly7, u2: MultiPoly7) -> Self {
        Self { u1, u2 }
    }

    pub fn is_zero(&self) -> bool {
        self.u1.is_zero() && self.u2.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.u1.add(&other.u1), self.u2.add(&other.u2))
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::new(self.u1.scale(c), self.u2.scale(c))
    }
}

/// All exponent tuples `β` with `|β| = order`, in lexicographic order.
pub(crate) fn compositions(order: u8) -> Vec<Exponents> {
    fn rec(order: u8, pos: usize, cur: &mut Exponents, out: &mut Vec<Exponents>) {
        if pos == DIM - 1 {
            cur[pos] = order;
            out.push(*cur);
            return;
        }
        for v in 0..=order {
            cur[pos] = v;
            rec(order - v, pos + 1, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(order, 0, &mut [0; DIM], &mut out);
    out
}
