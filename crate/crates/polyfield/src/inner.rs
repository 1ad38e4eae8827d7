//! The equivalent pair inner product and the usual Sobolev norm.
//!
//! On pairs `u = (u₁, u₂)` define the full derivative contractions
//! `D^k u : D^k v = Σ_{i₁…i_k} ∂_{i₁}⋯∂_{i_k} u · ∂_{i₁}⋯∂_{i_k} v` and
//!
//! ```text
//! (u|v)₁ = ∫_B D³u₁:D³v₁ + ∫_B D²u₂:D²v₂ + ∫_S D²u₁:D²v₁
//! (u|v)₂ = ∫_B ∇Δu₁·∇Δv₁ + ∫_B D²u₂:D²v₂ + ∫_S ∇u₂·∇v₂
//! (u|v)_H = 4(u|v)₁ + (u|v)₂ + ∫_S ∇u₁·∇v₁ + ∫_S u₁v₁ + ∫_S u₂v₂.
//! ```
//!
//! The boundary traces are what make the generator dissipative at the
//! `H³ × H²` regularity level; on polynomials everything evaluates to an
//! exact rational multiple of `π³`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::integrals::{integral_ball, integral_sphere, ExactScalar};
use crate::poly::{compositions, MultiPoly7, PairField};
use crate::{factorial, PolyfieldError, Q};

/// `∫ D^k p : D^k q` with the given integral (ball or sphere), computed as
/// a multinomial-weighted sum over sorted multi-indices.
fn contract(
    p: &MultiPoly7,
    q_poly: &MultiPoly7,
    order: u8,
    integral: fn(&MultiPoly7) -> ExactScalar,
) -> ExactScalar {
    let mut out = ExactScalar::zero();
    for beta in compositions(order) {
        let dp = p.diff_multi(&beta);
        if dp.is_zero() {
            continue;
        }
        let dq = q_poly.diff_multi(&beta);
        if dq.is_zero() {
            continue;
        }
        let mut weight = factorial(order as u64);
        for &b in &beta {
            weight /= factorial(b as u64);
        }
        out += integral(&dp.mul(&dq)).scale(&BigRational::from_integer(weight));
    }
    out
}

fn inner_1(u: &PairField, v: &PairField) -> ExactScalar {
    contract(&u.u1, &v.u1, 3, integral_ball)
        + contract(&u.u2, &v.u2, 2, integral_ball)
        + contract(&u.u1, &v.u1, 2, integral_sphere)
}

fn inner_2(u: &PairField, v: &PairField) -> ExactScalar {
    contract(&u.u1.laplacian(), &v.u1.laplacian(), 1, integral_ball)
        + contract(&u.u2, &v.u2, 2, integral_ball)
        + contract(&u.u2, &v.u2, 1, integral_sphere)
}

/// The equivalent inner product `(u|v)_H`.
pub fn inner_h(u: &PairField, v: &PairField) -> ExactScalar {
    inner_1(u, v).scale(&BigRational::from_integer(BigInt::from(4)))
        + inner_2(u, v)
        + contract(&u.u1, &v.u1, 1, integral_sphere)
        + integral_sphere(&u.u1.mul(&v.u1))
        + integral_sphere(&u.u2.mul(&v.u2))
}

/// The usual squared `H³ × H²(B⁷)` norm: all ball derivative contractions
/// of `u₁` to order 3 and of `u₂` to order 2.
pub fn sobolev_norm_sq(u: &PairField) -> ExactScalar {
    let mut out = ExactScalar::zero();
    for order in 0..=3 {
        out += contract(&u.u1, &u.u1, order, integral_ball);
    }
    for order in 0..=2 {
        out += contract(&u.u2, &u.u2, order, integral_ball);
    }
    out
}

/// The pair `((u|u)_H, ‖u‖²_{H³×H²})` for estimating the norm-equivalence
/// constants empirically; the zero field is rejected.
pub fn equivalence_sample(u: &PairField) -> Result<(ExactScalar, ExactScalar), PolyfieldError> {
    if u.is_zero() {
        return Err(PolyfieldError::ZeroField);
    }
    Ok((inner_h(u, u), sobolev_norm_sq(u)))
}

/// Exact equivalence ratio `(u|u)_H / ‖u‖²` of one field.
pub fn equivalence_ratio(u: &PairField) -> Result<Q, PolyfieldError> {
    let (h, s) = equivalence_sample(u)?;
    h.ratio(&s).ok_or(PolyfieldError::ZeroField)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qr};

    fn pair(u1: MultiPoly7, u2: MultiPoly7) -> PairField {
        PairField::new(u1, u2)
    }

    #[test]
    fn constant_first_component() {
        let u = pair(MultiPoly7::one(), MultiPoly7::zero());
        assert_eq!(inner_h(&u, &u).q, qr(16, 15));
        assert_eq!(sobolev_norm_sq(&u).q, qr(16, 105));
        let (h, s) = equivalence_sample(&u).unwrap();
        assert_eq!(h.ratio(&s), Some(q(7)));
    }

    #[test]
    fn constant_second_component() {
        let u = pair(MultiPoly7::zero(), MultiPoly7::one());
        assert_eq!(inner_h(&u, &u).q, qr(16, 15));
        assert_eq!(sobolev_norm_sq(&u).q, qr(16, 105));
    }

    #[test]
    fn linear_first_component_sobolev() {
        let u = pair(MultiPoly7::coordinate(0), MultiPoly7::zero());
        assert_eq!(sobolev_norm_sq(&u).q, qr(32, 189));
    }

    #[test]
    fn mixed_pair_h_norm() {
        // u = (ξ₁ξ₂ - 2, 3ξ₃ + |ξ|²/2).
        let u1 = MultiPoly7::coordinate(0)
            .mul(&MultiPoly7::coordinate(1))
            .add(&MultiPoly7::constant(q(-2)));
        let u2 = MultiPoly7::coordinate(2)
            .scale(&q(3))
            .add(&MultiPoly7::radius_sq().scale(&qr(1, 2)));
        let u = pair(u1, u2);
        assert_eq!(inner_h(&u, &u).q, qr(29068, 945));
    }

    #[test]
    fn inner_h_is_bilinear() {
        let a = pair(MultiPoly7::coordinate(0), MultiPoly7::one());
        let b = pair(MultiPoly7::radius_sq(), MultiPoly7::coordinate(3));
        let c = pair(
            MultiPoly7::coordinate(1).mul(&MultiPoly7::coordinate(2)),
            MultiPoly7::zero(),
        );
        let lhs = inner_h(&a.add(&b), &c);
        let rhs = inner_h(&a, &c) + inner_h(&b, &c);
        assert_eq!(lhs, rhs);
        // Scaling is quadratic in the norm.
        let s3 = inner_h(&a.scale(&q(3)), &a.scale(&q(3)));
        assert_eq!(s3.q, inner_h(&a, &a).q * q(9));
    }

    #[test]
    fn zero_field_has_no_ratio() {
        assert!(equivalence_sample(&PairField::default()).is_err());
    }
}
