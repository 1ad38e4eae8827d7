//! Exact certificate for the imaginary-axis contraction inequality.
//!
//! On `λ = it` the squared contraction bound for the shifted indices
//! `(n+3, ℓ+2)` reads `|C|² ≤ [(3n+ℓ+26)/(6(n+ℓ+10))]²`, which after
//! clearing denominators is the negativity of
//!
//! ```text
//! F(n, ℓ, t) = 36(n+ℓ+10)² Q1(n+3, ℓ+2, t) - (3n+ℓ+26)² Q2(n+3, ℓ+2, t),
//! ```
//!
//! where `Q1 = |P1(it)|²` and `Q2 = |P2(it)|²`. `F` is an even polynomial of
//! degree 8 in `t`; its odd coefficients vanish identically and the five
//! even ones are integers computed here exactly in `i128` (they stay below
//! 10²¹). Strict negativity of all five certifies the bound on the whole
//! axis. A Routh–Hurwitz check plus numeric roots confirm independently that
//! `P2(n+3, ℓ+2, ·)` has no zeros in the closed right half-plane, so the
//! rational functions involved are analytic where the bound is claimed.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::C64;

/// `|P1(n, ℓ, it)|²` as a polynomial in `s = t²` (lowest degree first):
/// `256(2n+2ℓ+7)²(n+1)² · ((2n+ℓ+7)² + s)((2n+ℓ-3)² + s)`.
fn q1_in_s(n: i128, ell: i128) -> [i128; 3] {
    let k = 256 * (2 * n + 2 * ell + 7).pow(2) * (n + 1).pow(2);
    let u = (2 * n + ell + 7).pow(2);
    let v = (2 * n + ell - 3).pow(2);
    [k * u * v, k * (u + v), k]
}

/// The two quadratic factors of `P2` as `(2, b, c)` coefficient triples.
fn p2_factors(n: i128, ell: i128) -> [(i128, i128, i128); 2] {
    [
        (
            2,
            4 * (4 * n + 2 * ell + 9),
            (2 * n + 2 * ell + 9) * (8 * n + 3 * ell),
        ),
        (
            2,
            4 * (4 * n + 2 * ell + 5),
            (2 * n + 2 * ell + 7) * (8 * n + 3 * ell - 8),
        ),
    ]
}

/// `|P2(n, ℓ, it)|²` as a polynomial in `s = t²`:
/// each factor contributes `4s² + (b²-4c)s + c²`.
fn q2_in_s(n: i128, ell: i128) -> [i128; 5] {
    let [(_, b1, c1), (_, b2, c2)] = p2_factors(n, ell);
    let beta1 = b1 * b1 - 4 * c1;
    let beta2 = b2 * b2 - 4 * c2;
    // (4s² + β₁s + c₁²)(4s² + β₂s + c₂²)
    [
        c1 * c1 * c2 * c2,
        beta1 * c2 * c2 + beta2 * c1 * c1,
        beta1 * beta2 + 4 * c1 * c1 + 4 * c2 * c2,
        4 * (beta1 + beta2),
        16,
    ]
}

/// Coefficients of `F(n, ℓ, t)` as an even degree-8 polynomial in `t`
/// (lowest degree first); odd entries are structurally zero.
pub fn certificate_coefficients(n: i64, ell: i64) -> [i128; 9] {
    let (n, ell) = (n as i128, ell as i128);
    let w1 = 36 * (n + ell + 10).pow(2);
    let w2 = (3 * n + ell + 26).pow(2);
    let q1 = q1_in_s(n + 3, ell + 2);
    let q2 = q2_in_s(n + 3, ell + 2);
    let mut out = [0i128; 9];
    for (k, &c) in q2.iter().enumerate() {
        out[2 * k] = -w2 * c;
    }
    for (k, &c) in q1.iter().enumerate() {
        out[2 * k] += w1 * c;
    }
    out
}

/// All even coefficients strictly negative (odd ones are identically zero),
/// certifying the imaginary-axis contraction bound at shifted `(n, ℓ)`.
pub fn certificate_holds(n: i64, ell: i64) -> bool {
    let c = certificate_coefficients(n, ell);
    c.iter().step_by(2).all(|&x| x < 0) && c.iter().skip(1).step_by(2).all(|&x| x == 0)
}

/// Numeric evaluation of `F` via complex modulus, for cross-validating the
/// integer expansion.
pub fn certificate_numeric(n: i64, ell: i64, t: f64) -> f64 {
    let (nf, lf) = ((n + 3) as f64, (ell + 2) as f64);
    let lam = C64::new(0.0, t);
    let p1 = 16.0
        * (2.0 * nf + 2.0 * lf + 7.0)
        * (nf + 1.0)
        * (lam + (2.0 * nf + lf + 7.0))
        * (lam + (2.0 * nf + lf - 3.0));
    let [(a1, b1, c1), (a2, b2, c2)] = p2_factors(n as i128 + 3, ell as i128 + 2);
    let f1 = lam * lam * a1 as f64 + lam * b1 as f64 + c1 as f64;
    let f2 = lam * lam * a2 as f64 + lam * b2 as f64 + c2 as f64;
    let w1 = 36.0 * ((n + ell + 10) as f64).powi(2);
    let w2 = ((3 * n + ell + 26) as f64).powi(2);
    w1 * p1.norm_sqr() - w2 * (f1 * f2).norm_sqr()
}

/// Expanded quartic `P2(n+3, ℓ+2, λ)`, lowest degree first.
pub fn shifted_p2_quartic(n: i64, ell: i64) -> [i128; 5] {
    let [(_, b1, c1), (_, b2, c2)] = p2_factors(n as i128 + 3, ell as i128 + 2);
    [
        c1 * c2,
        b1 * c2 + b2 * c1,
        b1 * b2 + 2 * c1 + 2 * c2,
        2 * (b1 + b2),
        4,
    ]
}

/// Routh–Hurwitz stability test for a real polynomial given highest degree
/// first; returns true iff all roots lie strictly in the open left
/// half-plane. Exact rational arithmetic; a vanishing pivot (marginal case)
/// returns false.
pub fn routh_hurwitz_stable(coeffs_high_first: &[BigRational]) -> bool {
    let n = coeffs_high_first.len();
    if n == 0 || coeffs_high_first[0].is_zero() {
        return false;
    }
    // Normalize sign so the leading coefficient is positive.
    let sign = if coeffs_high_first[0].is_negative() {
        -BigRational::from_integer(BigInt::from(1))
    } else {
        BigRational::from_integer(BigInt::from(1))
    };
    let coeffs: Vec<BigRational> = coeffs_high_first.iter().map(|c| c * &sign).collect();
    if coeffs.iter().any(|c| !c.is_positive()) {
        // A necessary condition for Hurwitz stability.
        return false;
    }
    let width = n.div_ceil(2);
    let mut row0: Vec<BigRational> = (0..width)
        .map(|i| coeffs.get(2 * i).cloned().unwrap_or_else(BigRational::zero))
        .collect();
    let mut row1: Vec<BigRational> = (0..width)
        .map(|i| {
            coeffs
                .get(2 * i + 1)
                .cloned()
                .unwrap_or_else(BigRational::zero)
        })
        .collect();
    for _ in 0..n.saturating_sub(2) {
        if !row1[0].is_positive() {
            return false;
        }
        let mut next = Vec::with_capacity(width);
        for i in 0..width {
            let a = row0.get(i + 1).cloned().unwrap_or_else(BigRational::zero);
            let b = row1.get(i + 1).cloned().unwrap_or_else(BigRational::zero);
            next.push(a - &row0[0] * &b / &row1[0]);
        }
        row0 = std::mem::replace(&mut row1, next);
    }
    row1[0].is_positive() || (n == 1)
}

/// Routh–Hurwitz verdict on the shifted quartic `P2(n+3, ℓ+2, ·)`.
pub fn shifted_p2_is_hurwitz(n: i64, ell: i64) -> bool {
    let q = shifted_p2_quartic(n, ell);
    let coeffs: Vec<BigRational> = q
        .iter()
        .rev()
        .map(|&c| BigRational::from_integer(BigInt::from(c)))
        .collect();
    routh_hurwitz_stable(&coeffs)
}

/// Largest real part among the roots of `P2(n+3, ℓ+2, ·)`, from the
/// quadratic formula on each factor; numeric cross-validation of the
/// Routh–Hurwitz verdict.
pub fn shifted_p2_max_root_real(n: i64, ell: i64) -> f64 {
    let factors = p2_factors(n as i128 + 3, ell as i128 + 2);
    factors
        .iter()
        .map(|&(a, b, c)| {
            let (a, b, c) = (a as f64, b as f64, c as f64);
            let disc = b * b - 4.0 * a * c;
            if disc >= 0.0 {
                (-b + disc.sqrt()) / (2.0 * a)
            } else {
                -b / (2.0 * a)
            }
        })
        .fold(f64::NEG_INFINITY, f64::max)
}
