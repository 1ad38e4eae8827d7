//! The wave generator on pair fields and the exact dissipativity margin.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use workpool::ExecMode;

use crate::inner::{inner_h, sobolev_norm_sq};
use crate::integrals::ExactScalar;
use crate::poly::{MultiPoly7, PairField, DIM};
use crate::{q, qr};

/// The free generator in similarity variables:
/// `L̃(u₁, u₂) = (−ξ·∇u₁ − u₁ + u₂, Δu₁ − ξ·∇u₂ − 2u₂)`.
pub fn apply_ltilde(u: &PairField) -> PairField {
    let w1 = u.u1.xi_grad().neg().sub(&u.u1).add(&u.u2);
    let w2 = u
        .u1
        .laplacian()
        .sub(&u.u2.xi_grad())
        .sub(&u.u2.scale(&q(2)));
    PairField::new(w1, w2)
}

/// `(L̃u|u)_H + ½(u|u)_H` for a real field; dissipativity of the generator
/// says this is never positive.
pub fn dissipativity_margin(u: &PairField) -> ExactScalar {
    inner_h(&apply_ltilde(u), u) + inner_h(u, u).scale(&qr(1, 2))
}

/// One record of the random margin sweep.
#[derive(Clone, Debug)]
pub struct SweepSample {
    /// Exact margin `(L̃u|u)_H + ½(u|u)_H`.
    pub margin: ExactScalar,
    /// `(u|u)_H`.
    pub h_norm_sq: ExactScalar,
    /// `‖u‖²_{H³×H²}`.
    pub usual_norm_sq: ExactScalar,
}

/// Random pair with integer coefficients in `[-9, 9]`: `u₁` of total degree
/// `≤ degree` (5 terms), `u₂` of degree one lower (4 terms).
pub fn random_pair(rng: &mut impl Rng, degree: u8) -> PairField {
    let mut poly = |deg: u8, terms: usize| {
        let mut p = MultiPoly7::zero();
        for _ in 0..terms {
            let mut e = [0u8; DIM];
            for _ in 0..rng.random_range(0..=deg as usize) {
                e[rng.random_range(0..DIM)] += 1;
            }
            p.add_term(e, q(rng.random_range(-9..=9)));
        }
        p
    };
    let u1 = poly(degree, 5);
    let u2 = poly(degree.saturating_sub(1), 4);
    PairField::new(u1, u2)
}

/// Deterministic random sweep: `count` pairs of degree `≤ degree`, each
/// generated from a per-index stream so the result is independent of the
/// execution mode.
pub fn margin_sweep(seed: u64, count: usize, degree: u8, mode: ExecMode) -> Vec<SweepSample> {
    let indices: Vec<u64> = (0..count as u64).collect();
    workpool::map(mode, &indices, |&i| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9E37_79B9_7F4A_7C15u64.wrapping_mul(i + 1));
        let u = random_pair(&mut rng, degree);
        SweepSample {
            margin: dissipativity_margin(&u),
            h_norm_sq: inner_h(&u, &u),
            usual_norm_sq: sobolev_norm_sq(&u),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(u1: MultiPoly7, u2: MultiPoly7) -> PairField {
        PairField::new(u1, u2)
    }

    #[test]
    fn generator_on_simple_fields() {
        let out = apply_ltilde(&pair(MultiPoly7::one(), MultiPoly7::zero()));
        assert_eq!(
            out,
            pair(MultiPoly7::constant(q(-1)), MultiPoly7::zero())
        );

        let out = apply_ltilde(&pair(MultiPoly7::zero(), MultiPoly7::one()));
        assert_eq!(out, pair(MultiPoly7::one(), MultiPoly7::constant(q(-2))));

        let out = apply_ltilde(&pair(MultiPoly7::radius_sq(), MultiPoly7::zero()));
        assert_eq!(
            out,
            pair(
                MultiPoly7::radius_sq().scale(&q(-3)),
                MultiPoly7::constant(q(14))
            )
        );
    }

    #[test]
    fn margins_of_hand_fields() {
        let cases: Vec<(PairField, (i64, i64))> = vec![
            (pair(MultiPoly7::one(), MultiPoly7::zero()), (-8, 15)),
            (pair(MultiPoly7::zero(), MultiPoly7::one()), (-8, 5)),
            (pair(MultiPoly7::radius_sq(), MultiPoly7::zero()), (-312, 1)),
            (pair(MultiPoly7::coordinate(0), MultiPoly7::zero()), (-64, 35)),
        ];
        for (u, (num, den)) in cases {
            assert_eq!(dissipativity_margin(&u).q, qr(num, den));
        }
    }

    #[test]
    fn zero_field_margin_is_zero() {
        assert!(dissipativity_margin(&PairField::default()).is_zero());
    }

    #[test]
    fn mixed_pair_margin() {
        let u1 = MultiPoly7::coordinate(0)
            .mul(&MultiPoly7::coordinate(1))
            .add(&MultiPoly7::constant(q(-2)));
        let u2 = MultiPoly7::coordinate(2)
            .scale(&q(3))
            .add(&MultiPoly7::radius_sq().scale(&qr(1, 2)));
        assert_eq!(dissipativity_margin(&pair(u1, u2)).q, qr(-71914, 945));
    }

    #[test]
    fn sweep_is_mode_independent() {
        let seq = margin_sweep(11, 8, 4, ExecMode::Sequential);
        let par = margin_sweep(11, 8, 4, ExecMode::Parallel);
        assert_eq!(seq.len(), 8);
        for (a, b) in seq.iter().zip(&par) {
            assert_eq!(a.margin, b.margin);
            assert_eq!(a.h_norm_sq, b.h_norm_sq);
            assert_eq!(a.usual_norm_sq, b.usual_norm_sq);
        }
    }
}
