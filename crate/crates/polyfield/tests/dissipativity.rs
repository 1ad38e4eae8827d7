//! Exact dissipativity sweep: the module's core guarantee is that the
//! margin `(L̃u|u)_H + ½(u|u)_H` is ≤ 0 for every real polynomial pair,
//! verified here in exact rational arithmetic on frozen hand fields and on
//! 200 random integer-coefficient pairs of degree ≤ 6.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;

use polyfield::{
    dissipativity_margin, equivalence_sample, margin_sweep, MultiPoly7, PairField, DIM,
};
use workpool::ExecMode;

fn qr(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn poly(terms: &[([u8; DIM], i64)]) -> MultiPoly7 {
    let mut p = MultiPoly7::zero();
    for &(e, c) in terms {
        p.add_term(e, BigRational::from_integer(BigInt::from(c)));
    }
    p
}

#[test]
fn frozen_random_fields_have_exact_margins() {
    let cases = [
        (
            poly(&[
                ([0, 1, 0, 1, 0, 0, 0], -8),
                ([0, 0, 0, 0, 0, 0, 0], 10),
                ([2, 1, 0, 0, 1, 0, 0], -7),
                ([1, 1, 0, 1, 0, 0, 0], -7),
            ]),
            poly(&[
                ([1, 0, 0, 0, 1, 0, 1], -6),
                ([0, 0, 0, 0, 0, 1, 0], 9),
                ([0, 0, 0, 0, 0, 0, 0], 9),
                ([2, 1, 0, 0, 0, 0, 0], 8),
            ]),
            qr(-617_725_552, 135_135),
        ),
        (
            poly(&[
                ([0, 0, 1, 0, 0, 0, 0], 4),
                ([0, 0, 0, 0, 1, 0, 0], -6),
                ([0, 0, 1, 0, 1, 1, 1], -4),
                ([0, 0, 0, 0, 0, 0, 0], 9),
                ([1, 1, 1, 0, 0, 1, 0], 8),
            ]),
            poly(&[([0, 0, 0, 0, 0, 0, 0], 6), ([0, 0, 0, 1, 1, 1, 0], 1)]),
            qr(-15_327_016, 15_015),
        ),
        (
            poly(&[
                ([0, 0, 0, 0, 0, 0, 1], -4),
                ([1, 0, 0, 0, 0, 0, 0], 9),
                ([0, 0, 0, 1, 1, 0, 0], 1),
                ([1, 0, 1, 0, 1, 0, 0], -6),
                ([0, 1, 1, 1, 0, 0, 1], -5),
            ]),
            poly(&[
                ([1, 0, 0, 1, 0, 1, 0], -7),
                ([0, 0, 1, 0, 0, 1, 0], 2),
                ([0, 0, 0, 1, 1, 0, 1], -7),
                ([0, 0, 0, 0, 0, 0, 0], -1),
            ]),
            qr(-75_549_944, 45_045),
        ),
    ];
    for (u1, u2, expected) in cases {
        let m = dissipativity_margin(&PairField::new(u1, u2));
        assert_eq!(m.q, expected);
    }
}

#[test]
fn two_hundred_random_degree_six_pairs_are_dissipative() {
    let samples = margin_sweep(2024, 200, 6, ExecMode::Auto);
    assert_eq!(samples.len(), 200);
    let mut ratios = Vec::new();
    for (i, s) in samples.iter().enumerate() {
        assert!(
            !s.margin.is_positive(),
            "sample {i}: margin {} > 0",
            s.margin
        );
        if !s.usual_norm_sq.is_zero() {
            ratios.push(s.h_norm_sq.ratio(&s.usual_norm_sq).unwrap());
        }
    }
    // Empirical norm-equivalence window: strictly positive and bounded.
    let r_min = ratios.iter().min().unwrap();
    let r_max = ratios.iter().max().unwrap();
    assert!(r_min.is_positive(), "r_min = {r_min}");
    assert!(r_max < &BigRational::from_integer(BigInt::from(1000)));
}

#[test]
fn equivalence_corner_values() {
    let u = PairField::new(MultiPoly7::one(), MultiPoly7::zero());
    let v = PairField::new(MultiPoly7::zero(), MultiPoly7::one());
    for w in [u, v] {
        let (h, s) = equivalence_sample(&w).unwrap();
        assert_eq!(h.q, qr(16, 15));
        assert_eq!(s.q, qr(16, 105));
    }
}

fn arb_poly(max_deg: u8, max_terms: usize) -> impl Strategy<Value = MultiPoly7> {
    let term = (
        proptest::collection::vec(0u8..=max_deg, DIM),
        -9i64..=9,
    )
        .prop_filter_map("degree cap", move |(e, c)| {
            let total: u32 = e.iter().map(|&x| x as u32).sum();
            if total > max_deg as u32 {
                return None;
            }
            let mut exp = [0u8; DIM];
            exp.copy_from_slice(&e);
            Some((exp, c))
        });
    proptest::collection::vec(term, 1..=max_terms).prop_map(|terms| {
        let mut p = MultiPoly7::zero();
        for (e, c) in terms {
            p.add_term(e, BigRational::from_integer(BigInt::from(c)));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn margin_is_never_positive(
        u1 in arb_poly(5, 4),
        u2 in arb_poly(4, 3),
    ) {
        let m = dissipativity_margin(&PairField::new(u1, u2));
        prop_assert!(!m.is_positive(), "margin {} > 0", m);
    }

    #[test]
    fn margin_scales_quadratically(
        u1 in arb_poly(4, 3),
        u2 in arb_poly(3, 2),
        c in 1i64..=7,
    ) {
        let u = PairField::new(u1, u2);
        let scaled = u.scale(&BigRational::from_integer(BigInt::from(c)));
        let lhs = dissipativity_margin(&scaled).q;
        let rhs = dissipativity_margin(&u).q * qr(c * c, 1);
        prop_assert_eq!(lhs, rhs);
    }
}
