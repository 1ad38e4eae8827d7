//! Double-double arithmetic (~31 significant digits) and a small dense LU,
//! used to refine discrete eigenvalues past the f64 roundoff floor so that
//! grid-refinement convergence stays visible down to truncation errors of
//! order 1e-21.

use crate::{EvolveError, Result};

/// Unevaluated sum `hi + lo` with `|lo| ≤ ulp(hi)/2`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = f64::mul_add(a, b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul(Dd::from_f64(q1)));
        let q2 = r.hi / other.hi;
        let r = r.sub(other.mul(Dd::from_f64(q2)));
        let q3 = r.hi / other.hi;
        let (s, e) = two_sum(q1, q2);
        let (hi, lo) = quick_two_sum(s, e + q3);
        Dd { hi, lo }
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }
}

/// Dense row-major LU factorization with partial pivoting in double-double.
pub struct DdLu {
    m: Vec<Dd>,
    perm: Vec<usize>,
    n: usize,
}

pub fn lu_factor(mut a: Vec<Dd>, n: usize) -> Result<DdLu> {
    assert_eq!(a.len(), n * n);
    let mut perm: Vec<usize> = (0..n).collect();
    for col in 0..n {
        let mut pivot_row = col;
        let mut pivot_mag = a[perm[col] * n + col].hi.abs();
        for row in col + 1..n {
            let mag = a[perm[row] * n + col].hi.abs();
            if mag > pivot_mag {
                pivot_mag = mag;
                pivot_row = row;
            }
        }
        if pivot_mag == 0.0 {
            return Err(EvolveError::Numerical(
                "extended-precision factorization hit a zero pivot",
            ));
        }
        perm.swap(col, pivot_row);
        let pivot = a[perm[col] * n + col];
        for row in col + 1..n {
            let factor = a[perm[row] * n + col].div(pivot);
            a[perm[row] * n + col] = factor;
            for k in col + 1..n {
                let update = factor.mul(a[perm[col] * n + k]);
                a[perm[row] * n + k] = a[perm[row] * n + k].sub(update);
            }
        }
    }
    Ok(DdLu { m: a, perm, n })
}

impl DdLu {
    /// Solve `A x = b`.
    pub fn solve(&self, b: &[Dd]) -> Vec<Dd> {
        let n = self.n;
        let at = |i: usize, j: usize| self.m[self.perm[i] * n + j];
        let mut y: Vec<Dd> = (0..n).map(|i| b[self.perm[i]]).collect();
        for i in 1..n {
            for j in 0..i {
                let t = at(i, j).mul(y[j]);
                y[i] = y[i].sub(t);
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let t = at(i, j).mul(y[j]);
                y[i] = y[i].sub(t);
            }
            y[i] = y[i].div(at(i, i));
        }
        y
    }

    /// Solve `Aᵀ z = b` using the same factorization: with `PA = LU` this is
    /// `Uᵀ v = b`, `Lᵀ w = v`, `z = Pᵀ w`.
    pub fn solve_transposed(&self, b: &[Dd]) -> Vec<Dd> {
        let n = self.n;
        let at = |i: usize, j: usize| self.m[self.perm[i] * n + j];
        let mut v = b.to_vec();
        for i in 0..n {
            for j in 0..i {
                let t = at(j, i).mul(v[j]);
                v[i] = v[i].sub(t);
            }
            v[i] = v[i].div(at(i, i));
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let t = at(j, i).mul(v[j]);
                v[i] = v[i].sub(t);
            }
        }
        let mut z = vec![Dd::ZERO; n];
        for i in 0..n {
            z[self.perm[i]] = v[i];
        }
        z
    }
}

pub fn matvec(a: &[Dd], n: usize, x: &[Dd]) -> Vec<Dd> {
    let mut out = vec![Dd::ZERO; n];
    for i in 0..n {
        let mut acc = Dd::ZERO;
        for j in 0..n {
            acc = acc.add(a[i * n + j].mul(x[j]));
        }
        out[i] = acc;
    }
    out
}

pub fn matmul(a: &[Dd], b: &[Dd], n: usize) -> Vec<Dd> {
    let mut out = vec![Dd::ZERO; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik.hi == 0.0 && aik.lo == 0.0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = out[i * n + j].add(aik.mul(b[k * n + j]));
            }
        }
    }
    out
}

pub fn dot(x: &[Dd], y: &[Dd]) -> Dd {
    let mut acc = Dd::ZERO;
    for (a, b) in x.iter().zip(y) {
        acc = acc.add(a.mul(*b));
    }
    acc
}
