//! Exact closed forms of the contraction quantities, evaluated in rational
//! arithmetic for cross-validation against the recurrence definitions.
//!
//! The fractions here were obtained by symbolic reduction of the defining
//! expressions and are kept as integer-coefficient polynomials; every
//! function has a recurrence counterpart in this module computed from
//! [`crate::family`]-style coefficient formulas over `BigRational`, so the
//! test suite can assert exact equality at rational sample points.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

fn br(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Evaluate a polynomial with integer coefficients (lowest degree first).
fn poly(coeffs: &[i64], x: &BigRational) -> BigRational {
    coeffs
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, &c| acc * x + br(c))
}

/// Evaluate a polynomial whose λ-coefficients are themselves integer
/// polynomials in ℓ (each row lowest ℓ-degree first; rows lowest λ-degree
/// first).
fn poly2(rows: &[&[i64]], ell: &BigRational, lam: &BigRational) -> BigRational {
    rows.iter()
        .rev()
        .fold(BigRational::zero(), |acc, row| acc * lam + poly(row, ell))
}

// ---------------------------------------------------------------------------
// Exact recurrence building blocks (generic and SUSY families).
// ---------------------------------------------------------------------------

pub fn generic_a(n: i64, ell: i64, lam: &BigRational) -> BigRational {
    let num = lam * lam
        + lam * br(8 * n + 4 * ell + 18)
        + br(12 * n * n + 4 * (3 * ell + 12) * n + 3 * (ell * ell + 8 * ell - 1));
    num / br(4 * (2 * n + 2 * ell + 9) * (n + 2))
}

pub fn generic_b(n: i64, ell: i64, lam: &BigRational) -> BigRational {
    -(lam + br(ell + 2 * n + 7)) * (lam + br(ell + 2 * n - 3))
        / br(4 * (2 * n + 2 * ell + 9) * (n + 2))
}

pub fn generic_quasi(n: i64, ell: i64, lam: &BigRational) -> BigRational {
    lam * lam / br(4 * (n + 1) * (2 * n + 2 * ell + 7))
        + lam * br(4 * n + 2 * ell + 5) / br(2 * (n + 1) * (2 * n + 2 * ell + 7))
        + br(n - 1) / br(n + 1)
        + br(3 * ell) / br(8 * (n + 1))
}

pub fn susy_a(n: i64, lam: &BigRational) -> BigRational {
    (lam * lam + lam * br(2 * (4 * n + 15)) + br(12 * (n + 5) * (n + 2)))
        / br(4 * (2 * n + 15) * (n + 2))
}

pub fn susy_b(n: i64, lam: &BigRational) -> BigRational {
    -(lam + br(2 * n + 6)) * (lam + br(2 * n + 4)) / br(4 * (2 * n + 15) * (n + 2))
}

pub fn susy_quasi(n: i64, lam: &BigRational) -> BigRational {
    lam * lam / br(4 * (2 * n + 13) * (n + 1))
        + lam * br(2 * n + 5) / br((2 * n + 13) * (n + 1))
        + br(2 * n + 9) / br(2 * n + 13)
}

/// Seed of the `ℓ = 0` index-2 variant.
pub fn ell_zero_seed(lam: &BigRational) -> BigRational {
    poly(&[4971, 6350, 1052, 58, 1], lam) / (br(132) * poly(&[235, 32, 1], lam))
}

// ---------------------------------------------------------------------------
// Closed forms.
// ---------------------------------------------------------------------------

/// `P1(n, ℓ, λ) = 16(2n+2ℓ+7)(n+1)(2n+λ+ℓ+7)(2n+λ+ℓ-3)`.
pub fn p1(n: i64, ell: i64, lam: &BigRational) -> BigRational {
    br(16 * (2 * n + 2 * ell + 7) * (n + 1))
        * (lam + br(2 * n + ell + 7))
        * (lam + br(2 * n + ell - 3))
}

/// `P2`, the product of the two contraction denominators.
pub fn p2(n: i64, ell: i64, lam: &BigRational) -> BigRational {
    let f1 = br(2) * lam * lam
        + br(4 * (4 * n + 2 * ell + 9)) * lam
        + br((2 * n + 2 * ell + 9) * (8 * n + 3 * ell));
    let f2 = br(2) * lam * lam
        + br(4 * (4 * n + 2 * ell + 5)) * lam
        + br((2 * n + 2 * ell + 7) * (8 * n + 3 * ell - 8));
    f1 * f2
}

/// `P3`, the numerator of `ε_n`.
pub fn p3(n: i64, ell: i64, lam: &BigRational) -> BigRational {
    let c2 = br(-16 * n * n - 28 * n * ell - 96 * n + 10 * ell - 124);
    let c1 = br(-96 * n * n * ell - 48 * n * ell * ell - 160 * n * n + 24 * n * ell
        + 104 * ell * ell
        - 640 * n
        + 20 * ell
        - 568);
    let c0 = -br(2 * n + 2 * ell + 7)
        * br(24 * n * n * ell + 10 * n * ell * ell + 64 * n * n - 96 * n * ell
            - 47 * ell * ell
            + 32 * n
            + 250 * ell
            - 384);
    c2 * lam * lam + c1 * lam + c0
}

/// Closed form of the contraction coefficient: `C_n = -P1/P2`.
pub fn contraction_closed(n: i64, ell: i64, lam: &BigRational) -> BigRational {
    -p1(n, ell, lam) / p2(n, ell, lam)
}

/// Closed form of the deviation source: `ε_n = P3/P2`.
pub fn epsilon_closed(n: i64, ell: i64, lam: &BigRational) -> BigRational {
    p3(n, ell, lam) / p2(n, ell, lam)
}

/// Exact recurrence counterpart of `C_n`.
pub fn contraction_exact(n: i64, ell: i64, lam: &BigRational) -> BigRational {
    generic_b(n, ell, lam) / (generic_quasi(n, ell, lam) * generic_quasi(n + 1, ell, lam))
}

/// Exact recurrence counterpart of `ε_n`.
pub fn epsilon_exact(n: i64, ell: i64, lam: &BigRational) -> BigRational {
    (generic_a(n, ell, lam) * generic_quasi(n, ell, lam) + generic_b(n, ell, lam))
        / (generic_quasi(n, ell, lam) * generic_quasi(n + 1, ell, lam))
        - br(1)
}

/// Closed form of the seeded generic deviation `δ₃(ℓ, λ) = R1/R2`.
pub fn delta3_closed(ell: i64, lam: &BigRational) -> BigRational {
    let l = &br(ell);
    let r1 = {
        let c6: &[i64] = &[-190, -23];
        let c5: &[i64] = &[-6564, -2322, -180];
        let c4: &[i64] = &[-59746, -46097, -8670, -447];
        let c3: &[i64] = &[-35592, -274292, -107992, -11740, -248];
        let c2: &[i64] = &[890030, -209537, -473652, -97410, -1770, 483];
        let c1: &[i64] = &[155820, 1828454, -363908, -342356, -17812, 7470, 684];
        // 3(ℓ-1)(81ℓ⁶ + 1427ℓ⁵ + 5140ℓ⁴ - 21610ℓ³ - 81983ℓ² + 226647ℓ + 314586)
        let c0 = br(3)
            * (l - br(1))
            * poly(&[314586, 226647, -81983, -21610, 5140, 1427, 81], l);
        poly2(&[&[], c1, c2, c3, c4, c5, c6], l, lam) + c0
    };
    let r2 = {
        let c8: &[i64] = &[2];
        let c7: &[i64] = &[176, 32];
        let c6: &[i64] = &[5526, 2279, 216];
        let c5: &[i64] = &[71828, 55602, 12132, 800];
        let c4: &[i64] = &[294126, 532737, 223270, 34319, 1772];
        let c3: &[i64] = &[-694504, 1481556, 1530808, 458780, 55688, 2400];
        let c2: &[i64] = &[-3619670, -2334671, 2913884, 2148322, 510802, 51981, 1944];
        let c1: &[i64] = &[
            840612, -7996550, -2394892, 2609780, 1477060, 293490, 25956, 864,
        ];
        // 3(ℓ-1)(3ℓ+16)(2ℓ+13)(9ℓ⁵ + 201ℓ⁴ + 1410ℓ³ + 2594ℓ² - 4235ℓ - 4971)
        let c0 = br(3)
            * (l - br(1))
            * (br(3) * l + br(16))
            * (br(2) * l + br(13))
            * poly(&[-4971, -4235, 2594, 1410, 201, 9], l);
        poly2(&[&[], c1, c2, c3, c4, c5, c6, c7, c8], l, lam) + c0
    };
    r1 / r2
}

/// Exact recurrence counterpart of `δ₃`: three ratio steps from the
/// Frobenius seed, normalized by the generic quasi-solution.
pub fn delta3_exact(ell: i64, lam: &BigRational) -> BigRational {
    let mut r = generic_a(-1, ell, lam);
    for n in 0..3 {
        r = generic_a(n, ell, lam) + generic_b(n, ell, lam) / r;
    }
    r / generic_quasi(3, ell, lam) - br(1)
}

/// Closed form of the seeded `ℓ = 0` deviation `δ₅(λ) = R3/R4`, in the
/// convention that normalizes by the generic quasi-solution at `ℓ = 0`.
pub fn delta5_ell0_closed(lam: &BigRational) -> BigRational {
    let r3 = poly(
        &[
            -2726072037,
            -4932933534,
            -3005668466,
            -900471766,
            -149594764,
            -14060890,
            -728158,
            -18994,
            -191,
        ],
        lam,
    );
    let r4 = poly(
        &[
            13392819504,
            31789410678,
            23936737079,
            8524836246,
            1667459514,
            191728906,
            13346440,
            562738,
            13910,
            184,
            1,
        ],
        lam,
    );
    r3 / r4
}

/// Exact recurrence counterpart of `δ₅`: the index-2 seed iterated to `r₅`,
/// normalized by the generic quasi-solution at `ℓ = 0`.
pub fn delta5_ell0_exact(lam: &BigRational) -> BigRational {
    let mut r = ell_zero_seed(lam);
    for n in 2..5 {
        r = generic_a(n, 0, lam) + generic_b(n, 0, lam) / r;
    }
    r / generic_quasi(5, 0, lam) - br(1)
}

/// Closed form of the SUSY seeded deviation `δ₁`.
pub fn susy_delta1_closed(lam: &BigRational) -> BigRational {
    br(2) * poly(&[144, 140, 12, 1], lam) / poly(&[4224, 3280, 752, 50, 1], lam)
}

pub fn susy_delta1_exact(lam: &BigRational) -> BigRational {
    let r0 = susy_a(-1, lam);
    let r1 = susy_a(0, lam) + susy_b(0, lam) / r0;
    r1 / susy_quasi(1, lam) - br(1)
}

/// Closed form of the SUSY contraction coefficient.
pub fn susy_contraction_closed(n: i64, lam: &BigRational) -> BigRational {
    let num = br(-4 * (n + 1) * (2 * n + 13))
        * (lam * lam + lam * br(2 * (2 * n + 5)) + br(4 * (n + 3) * (n + 2)));
    num / susy_denominators(n, lam)
}

/// Closed form of the SUSY deviation source.
pub fn susy_epsilon_closed(n: i64, lam: &BigRational) -> BigRational {
    let num = br(2)
        * (lam * lam * lam - lam * lam * br(2 * (n * n + 5 * n - 5))
            - lam * br(8 * (2 * n * n - n - 12))
            - br(8 * (2 * n + 3) * (n + 2) * (n + 1)));
    num / susy_denominators(n, lam)
}

fn susy_denominators(n: i64, lam: &BigRational) -> BigRational {
    (lam * lam + lam * br(4 * (2 * n + 7)) + br(4 * (2 * n + 11) * (n + 2)))
        * (lam * lam + lam * br(4 * (2 * n + 5)) + br(4 * (2 * n + 9) * (n + 1)))
}

pub fn susy_contraction_exact(n: i64, lam: &BigRational) -> BigRational {
    susy_b(n, lam) / (susy_quasi(n, lam) * susy_quasi(n + 1, lam))
}

pub fn susy_epsilon_exact(n: i64, lam: &BigRational) -> BigRational {
    (susy_a(n, lam) * susy_quasi(n, lam) + susy_b(n, lam))
        / (susy_quasi(n, lam) * susy_quasi(n + 1, lam))
        - br(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brq(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    /// Rational λ samples chosen away from poles of the intermediate ratios.
    fn lambda_samples() -> Vec<BigRational> {
        vec![brq(2, 7), brq(9, 2), brq(13, 3), brq(-5, 4), brq(17, 5)]
    }

    #[test]
    fn contraction_and_epsilon_closed_forms() {
        for n in 0..=8 {
            for ell in 0..=8 {
                for lam in lambda_samples() {
                    assert_eq!(
                        contraction_closed(n, ell, &lam),
                        contraction_exact(n, ell, &lam),
                        "C at n={n} ℓ={ell}"
                    );
                    assert_eq!(
                        epsilon_closed(n, ell, &lam),
                        epsilon_exact(n, ell, &lam),
                        "ε at n={n} ℓ={ell}"
                    );
                }
            }
        }
    }

    #[test]
    fn delta3_closed_form() {
        for ell in 0..=12 {
            for lam in lambda_samples() {
                assert_eq!(delta3_closed(ell, &lam), delta3_exact(ell, &lam), "ℓ={ell}");
            }
        }
    }

    #[test]
    fn delta5_closed_form() {
        for lam in [brq(0, 1), brq(2, 1), brq(5, 1), brq(7, 1), brq(3, 2)] {
            assert_eq!(delta5_ell0_closed(&lam), delta5_ell0_exact(&lam));
        }
    }

    #[test]
    fn delta5_frozen_value_at_origin() {
        let d = delta5_ell0_closed(&brq(0, 1));
        assert_eq!(d, brq(-2726072037, 13392819504));
    }

    #[test]
    fn susy_closed_forms() {
        assert_eq!(susy_delta1_closed(&brq(0, 1)), brq(3, 44));
        for lam in lambda_samples() {
            assert_eq!(susy_delta1_closed(&lam), susy_delta1_exact(&lam));
            for n in 0..=12 {
                assert_eq!(susy_contraction_closed(n, &lam), susy_contraction_exact(n, &lam));
                assert_eq!(susy_epsilon_closed(n, &lam), susy_epsilon_exact(n, &lam));
            }
        }
    }
}
