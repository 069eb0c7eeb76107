//! Exact and numeric checks of U^τ = I.
//!
//! The exact check clears denominators once, N = L·U with N over Z[ζ_m],
//! and compares N^τ with L^τ·I by repeated squaring. Entries are kept in
//! i128 with checked arithmetic; on overflow the computation restarts in
//! BigInt.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, ToPrimitive, Zero};

use super::dense::{ExactMatrix, NumericMatrix};
use crate::cyclo::{cyclotomic_polynomial, lcm};
use crate::scalar::Scalar;

trait Ring: Clone + Zero + One + PartialEq {
    fn cadd(&self, o: &Self) -> Option<Self>;
    fn csub(&self, o: &Self) -> Option<Self>;
    fn cmul(&self, o: &Self) -> Option<Self>;
    fn small(v: i64) -> Self;
}

impl Ring for i128 {
    fn cadd(&self, o: &Self) -> Option<Self> {
        self.checked_add(o)
    }
    fn csub(&self, o: &Self) -> Option<Self> {
        CheckedSub::checked_sub(self, o)
    }
    fn cmul(&self, o: &Self) -> Option<Self> {
        CheckedMul::checked_mul(self, o)
    }
    fn small(v: i64) -> Self {
        v as i128
    }
}

impl Ring for BigInt {
    fn cadd(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn csub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn cmul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn small(v: i64) -> Self {
        BigInt::from(v)
    }
}

/// Square matrix over Z[ζ_m]; entry (i, j) occupies data[(i·n + j)·φ ..][..φ].
#[derive(Clone, PartialEq)]
struct ZMat<T> {
    n: usize,
    phi: usize,
    data: Vec<T>,
}

struct Ctx {
    phi: usize,
    /// Φ_m without its leading 1.
    modulus: Vec<i64>,
}

impl<T: Ring> ZMat<T> {
    fn scalar(n: usize, phi: usize, c: T) -> Self {
        let mut data = vec![T::zero(); n * n * phi];
        for i in 0..n {
            data[(i * n + i) * phi] = c.clone();
        }
        ZMat { n, phi, data }
    }

    fn entry(&self, i: usize, j: usize) -> &[T] {
        let s = (i * self.n + j) * self.phi;
        &self.data[s..s + self.phi]
    }

    fn mul(&self, other: &Self, ctx: &Ctx) -> Option<Self> {
        let (n, phi) = (self.n, self.phi);
        let width = 2 * phi - 1;
        let mut data = Vec::with_capacity(n * n * phi);
        let mut acc = vec![T::zero(); n * width];
        let nonzero = |e: &[T]| e.iter().any(|c| !c.is_zero());
        for i in 0..n {
            acc.iter_mut().for_each(|c| *c = T::zero());
            for l in 0..n {
                let a = self.entry(i, l);
                if !nonzero(a) {
                    continue;
                }
                for j in 0..n {
                    let b = other.entry(l, j);
                    if !nonzero(b) {
                        continue;
                    }
                    let out = &mut acc[j * width..(j + 1) * width];
                    for (p, x) in a.iter().enumerate() {
                        if x.is_zero() {
                            continue;
                        }
                        for (q, y) in b.iter().enumerate() {
                            if !y.is_zero() {
                                out[p + q] = out[p + q].cadd(&x.cmul(y)?)?;
                            }
                        }
                    }
                }
            }
            for j in 0..n {
                let buf = &mut acc[j * width..(j + 1) * width];
                for k in (phi..width).rev() {
                    let c = std::mem::replace(&mut buf[k], T::zero());
                    if c.is_zero() {
                        continue;
                    }
                    for (t, &p) in ctx.modulus.iter().enumerate() {
                        if p != 0 {
                            buf[k - phi + t] = buf[k - phi + t].csub(&c.cmul(&T::small(p))?)?;
                        }
                    }
                }
                data.extend_from_slice(&buf[..phi]);
            }
        }
        Some(ZMat { n, phi, data })
    }

    fn pow(&self, mut e: u64, ctx: &Ctx) -> Option<Self> {
        let mut result = Self::scalar(self.n, self.phi, T::one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base, ctx)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, ctx)?;
            }
        }
        Some(result)
    }
}

fn checked_pow<T: Ring>(base: &T, mut e: u64) -> Option<T> {
    let mut r = T::one();
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            r = r.cmul(&b)?;
        }
        e >>= 1;
        if e > 0 {
            b = b.cmul(&b)?;
        }
    }
    Some(r)
}

struct Cleared {
    n: usize,
    phi: usize,
    scale: BigInt,
    data: Vec<BigInt>,
    ctx: Ctx,
}

fn clear_denominators(u: &ExactMatrix) -> Cleared {
    let m = u.entries().iter().fold(1, |acc, e| lcm(acc, e.conductor()));
    let mut modulus = cyclotomic_polynomial(m)
        .to_i64_vec()
        .expect("cyclotomic coefficients fit in i64");
    modulus.pop();
    let phi = modulus.len();
    let lifted: Vec<_> = u.entries().iter().map(|e| e.lift(m)).collect();
    let scale = lifted
        .iter()
        .fold(BigInt::one(), |acc, e| acc.lcm(e.denominator()));
    let mut data = Vec::with_capacity(lifted.len() * phi);
    for e in &lifted {
        let f = &scale / e.denominator();
        data.extend(e.numerators().iter().map(|c| c * &f));
    }
    Cleared {
        n: u.nrows(),
        phi,
        scale,
        data,
        ctx: Ctx { phi, modulus },
    }
}

fn check<T: Ring>(c: &Cleared, tau: u64, convert: impl Fn(&BigInt) -> Option<T>) -> Option<bool> {
    debug_assert_eq!(c.ctx.phi, c.phi);
    let data = c.data.iter().map(&convert).collect::<Option<Vec<T>>>()?;
    let mat = ZMat {
        n: c.n,
        phi: c.phi,
        data,
    };
    let target = checked_pow(&convert(&c.scale)?, tau)?;
    let p = mat.pow(tau, &c.ctx)?;
    Some(p == ZMat::scalar(c.n, c.phi, target))
}

/// Exact test of U^τ = I for a square matrix over a cyclotomic field.
pub fn exact_power_is_identity(u: &ExactMatrix, tau: u64) -> bool {
    assert!(u.is_square(), "power check needs a square matrix");
    if u.nrows() == 0 {
        return true;
    }
    let c = clear_denominators(u);
    if let Some(r) = check::<i128>(&c, tau, |b| b.to_i128()) {
        return r;
    }
    check::<BigInt>(&c, tau, |b| Some(b.clone())).expect("BigInt arithmetic cannot overflow")
}

/// max_{ij} |(U^τ − I)_ij| in floating point.
pub fn numeric_power_deviation(u: &NumericMatrix, tau: u64) -> f64 {
    assert!(u.is_square(), "power check needs a square matrix");
    let id = NumericMatrix::identity(u.rows().clone(), Scalar::one(), Scalar::zero());
    let mut result = id.clone();
    let mut base = u.clone();
    let mut e = tau;
    while e > 0 {
        if e & 1 == 1 {
            result = result.mul(&base).expect("square");
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base).expect("square");
        }
    }
    result.max_abs_diff(&id)
}
