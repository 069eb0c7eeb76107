//! Elements of Q(ζ_m) in the power basis 1, ζ_m, …, ζ_m^{φ(m)−1}.
//!
//! An element is stored as integer numerators over one positive common
//! denominator, reduced so that the gcd of all numerators and the
//! denominator is 1. With that normalization two elements of the same
//! conductor are equal iff their stored data are equal, and membership in
//! Z[ζ_m] is simply `den == 1` (the power basis is an integral basis).

use std::cell::RefCell;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{cyclotomic_polynomial, lcm, totient};
use crate::error::{Error, Result};

#[derive(Debug)]
pub(crate) struct Field {
    pub(crate) m: u64,
    pub(crate) phi: usize,
    /// Φ_m without its leading 1, constant term first.
    modulus: Vec<i64>,
}

fn global_fields() -> &'static RwLock<HashMap<u64, Arc<Field>>> {
    static FIELDS: OnceLock<RwLock<HashMap<u64, Arc<Field>>>> = OnceLock::new();
    FIELDS.get_or_init(|| RwLock::new(HashMap::new()))
}

thread_local! {
    static LOCAL_FIELDS: RefCell<HashMap<u64, Arc<Field>>> = RefCell::new(HashMap::new());
}

pub(crate) fn field(m: u64) -> Arc<Field> {
    assert!(m >= 1, "conductor must be positive");
    if let Some(f) = LOCAL_FIELDS.with(|c| c.borrow().get(&m).cloned()) {
        return f;
    }
    let existing = global_fields().read().unwrap().get(&m).cloned();
    let f = existing.unwrap_or_else(|| {
        let phi_poly = cyclotomic_polynomial(m);
        let mut coeffs = phi_poly
            .to_i64_vec()
            .expect("cyclotomic coefficients exceed i64");
        coeffs.pop();
        let f = Arc::new(Field {
            m,
            phi: totient(m) as usize,
            modulus: coeffs,
        });
        global_fields().write().unwrap().insert(m, f.clone());
        f
    });
    LOCAL_FIELDS.with(|c| c.borrow_mut().insert(m, f.clone()));
    f
}

/// Reduce a coefficient buffer in powers of ζ_m modulo Φ_m.
fn reduce(f: &Field, mut buf: Vec<BigInt>) -> Vec<BigInt> {
    let phi = f.phi;
    for k in (phi..buf.len()).rev() {
        let c = std::mem::take(&mut buf[k]);
        if c.is_zero() {
            continue;
        }
        for (i, &p) in f.modulus.iter().enumerate() {
            if p != 0 {
                buf[k - phi + i] -= &c * p;
            }
        }
    }
    buf.resize(phi, BigInt::zero());
    buf
}

#[derive(Clone)]
pub struct CycloElem {
    field: Arc<Field>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycloElem {
    fn from_parts(field: Arc<Field>, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut e = CycloElem { field, num, den };
        e.normalize();
        e
    }

    fn normalize(&mut self) {
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                return;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    pub fn zero(m: u64) -> Self {
        let f = field(m);
        let phi = f.phi;
        CycloElem {
            field: f,
            num: vec![BigInt::zero(); phi],
            den: BigInt::one(),
        }
    }

    pub fn one(m: u64) -> Self {
        Self::from_ratio_in(m, 1, 1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_ratio_in(1, v, 1)
    }

    /// The rational n/d viewed in Q(ζ_m). Panics if `d == 0`.
    pub fn from_ratio_in(m: u64, n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        let f = field(m);
        let mut num = vec![BigInt::zero(); f.phi];
        num[0] = BigInt::from(n);
        Self::from_parts(f, num, BigInt::from(d))
    }

    pub fn from_rational(m: u64, q: &BigRational) -> Self {
        let f = field(m);
        let mut num = vec![BigInt::zero(); f.phi];
        num[0] = q.numer().clone();
        Self::from_parts(f, num, q.denom().clone())
    }

    pub fn from_bigint(v: &BigInt) -> Self {
        Self::from_rational(1, &BigRational::from_integer(v.clone()))
    }

    /// ζ_m^k for any integer k.
    pub fn zeta_pow(m: u64, k: i64) -> Self {
        let f = field(m);
        let e = k.rem_euclid(m as i64) as usize;
        let mut buf = vec![BigInt::zero(); (e + 1).max(f.phi)];
        buf[e] = BigInt::one();
        let num = reduce(&f, buf);
        Self::from_parts(f, num, BigInt::one())
    }

    pub fn zeta(m: u64) -> Self {
        Self::zeta_pow(m, 1)
    }

    /// Σ coeffs[j]·ζ_m^j for a coefficient list of any length.
    pub fn from_coeffs(m: u64, coeffs: &[BigRational]) -> Self {
        let f = field(m);
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut buf: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        if buf.len() < f.phi {
            buf.resize(f.phi, BigInt::zero());
        }
        let num = reduce(&f, buf);
        Self::from_parts(f, num, den)
    }

    pub fn conductor(&self) -> u64 {
        self.field.m
    }

    pub fn phi(&self) -> usize {
        self.field.phi
    }

    /// Power-basis coefficients, length φ(m).
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    /// Membership in Z[ζ_m]: every power-basis coefficient is an integer.
    pub fn is_algebraic_integer(&self) -> bool {
        self.den.is_one()
    }

    /// The same element written with conductor `target`, a multiple of the
    /// current conductor.
    pub fn lift(&self, target: u64) -> Self {
        let m = self.field.m;
        assert!(target % m == 0, "cannot lift conductor {m} to {target}");
        if target == m {
            return self.clone();
        }
        let f = field(target);
        let step = (target / m) as usize;
        let mut buf = vec![BigInt::zero(); (target as usize).max(f.phi)];
        for (j, c) in self.num.iter().enumerate() {
            buf[j * step] = c.clone();
        }
        let num = reduce(&f, buf);
        Self::from_parts(f, num, self.den.clone())
    }

    fn aligned<'a>(
        &'a self,
        other: &'a Self,
    ) -> (std::borrow::Cow<'a, Self>, std::borrow::Cow<'a, Self>) {
        use std::borrow::Cow;
        if Arc::ptr_eq(&self.field, &other.field) || self.field.m == other.field.m {
            return (Cow::Borrowed(self), Cow::Borrowed(other));
        }
        let target = lcm(self.field.m, other.field.m);
        let a = if self.field.m == target {
            Cow::Borrowed(self)
        } else {
            Cow::Owned(self.lift(target))
        };
        let b = if other.field.m == target {
            Cow::Borrowed(other)
        } else {
            Cow::Owned(other.lift(target))
        };
        (a, b)
    }

    fn add_signed(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = self.aligned(other);
        if b.is_zero() {
            return a.into_owned();
        }
        if a.is_zero() {
            return if negate { -b.as_ref() } else { b.into_owned() };
        }
        let (num, den) = if a.den == b.den {
            let num = a
                .num
                .iter()
                .zip(&b.num)
                .map(|(x, y)| if negate { x - y } else { x + y })
                .collect();
            (num, a.den.clone())
        } else {
            let num = a
                .num
                .iter()
                .zip(&b.num)
                .map(|(x, y)| {
                    let l = x * &b.den;
                    let r = y * &a.den;
                    if negate {
                        l - r
                    } else {
                        l + r
                    }
                })
                .collect();
            (num, &a.den * &b.den)
        };
        Self::from_parts(a.field.clone(), num, den)
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.add_signed(other, false)
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_signed(other, true)
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let f = a.field.clone();
        if a.is_zero() || b.is_zero() {
            return Self::zero(f.m);
        }
        let phi = f.phi;
        let num = if phi == 1 {
            vec![&a.num[0] * &b.num[0]]
        } else {
            let mut buf = vec![BigInt::zero(); 2 * phi - 1];
            for (i, x) in a.num.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b.num.iter().enumerate() {
                    if !y.is_zero() {
                        buf[i + j] += x * y;
                    }
                }
            }
            reduce(&f, buf)
        };
        Self::from_parts(f, num, &a.den * &b.den)
    }

    pub fn neg_ref(&self) -> Self {
        CycloElem {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        Self::from_parts(
            self.field.clone(),
            self.num.iter().map(|c| c * k).collect(),
            self.den.clone(),
        )
    }

    /// Division by a nonzero integer.
    pub fn div_int(&self, k: i64) -> Self {
        assert!(k != 0, "division by zero");
        Self::from_parts(self.field.clone(), self.num.clone(), &self.den * k)
    }

    /// The automorphism ζ_m ↦ ζ_m^j (j coprime to m).
    pub fn galois(&self, j: u64) -> Self {
        let m = self.field.m;
        debug_assert_eq!(j.gcd(&m), 1);
        if m <= 2 {
            return self.clone();
        }
        let mut buf = vec![BigInt::zero(); m as usize];
        for (i, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                let idx = ((i as u64 * j) % m) as usize;
                buf[idx] += c;
            }
        }
        let num = reduce(&self.field, buf);
        Self::from_parts(self.field.clone(), num, self.den.clone())
    }

    /// Complex conjugation, ζ_m ↦ ζ_m^{-1}.
    pub fn conj(&self) -> Self {
        let m = self.field.m;
        self.galois(m - 1)
    }

    pub fn galois_exponents(m: u64) -> Vec<u64> {
        (1..=m.max(1)).filter(|j| j.gcd(&m) == 1).collect()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m = self.field.m;
        // product of the non-trivial conjugates; times self it is the (rational) norm
        let mut others = Self::one(m);
        for j in Self::galois_exponents(m).into_iter().filter(|&j| j != 1) {
            others = others.mul_ref(&self.galois(j));
        }
        let norm = self
            .mul_ref(&others)
            .as_rational()
            .expect("field norm must be rational");
        let inv_norm = BigRational::one() / norm;
        Ok(others.mul_ref(&Self::from_rational(m, &inv_norm)))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field.m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    pub fn to_complex(&self) -> Complex64 {
        let m = self.field.m as f64;
        let mut z = Complex64::new(0.0, 0.0);
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = BigRational::new(c.clone(), self.den.clone())
                .to_f64()
                .unwrap_or(f64::NAN);
            z += Complex64::from_polar(v, 2.0 * PI * j as f64 / m);
        }
        z
    }
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for CycloElem {}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElem({self})")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&CycloElem> for &CycloElem {
            type Output = CycloElem;
            fn $method(self, rhs: &CycloElem) -> CycloElem {
                self.$inner(rhs)
            }
        }
        impl $tr<CycloElem> for CycloElem {
            type Output = CycloElem;
            fn $method(self, rhs: CycloElem) -> CycloElem {
                self.$inner(&rhs)
            }
        }
        impl $tr<&CycloElem> for CycloElem {
            type Output = CycloElem;
            fn $method(self, rhs: &CycloElem) -> CycloElem {
                self.$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        self.neg_ref()
    }
}

impl Neg for CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared() {
        let i = CycloElem::zeta(4);
        assert_eq!(&i * &i, CycloElem::from_int(-1));
    }

    #[test]
    fn root_sum_of_phi3() {
        let z = CycloElem::zeta(3);
        let s = CycloElem::one(3) + z.clone() + &z * &z;
        assert!(s.is_zero());
    }

    #[test]
    fn inverse_of_zeta5() {
        let z = CycloElem::zeta(5);
        let inv = z.inv().unwrap();
        assert_eq!(inv, CycloElem::zeta_pow(5, 4));
        assert!((&z * &inv).is_one());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(matches!(CycloElem::zero(7).inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn mixed_conductors_lift() {
        let half = CycloElem::from_ratio_in(1, 1, 2);
        let i = CycloElem::zeta(4);
        let w = CycloElem::zeta(3);
        let s = &(&half * &i) + &w;
        assert_eq!(s.conductor(), 12);
        let expect = Complex64::new(0.0, 0.5) + w.to_complex();
        assert!((s.to_complex() - expect).norm() < 1e-12);
    }

    #[test]
    fn rational_equals_across_conductors() {
        assert_eq!(CycloElem::from_int(3), CycloElem::from_ratio_in(5, 6, 2));
        assert_eq!(CycloElem::zeta(2), CycloElem::from_int(-1));
        // ζ_12^4 = ζ_3
        assert_eq!(CycloElem::zeta_pow(12, 4), CycloElem::zeta(3));
    }

    #[test]
    fn to_complex_values() {
        assert!((CycloElem::zeta(4).to_complex() - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        let z6 = CycloElem::zeta(6).to_complex();
        assert!((z6 - Complex64::new(0.5, 3f64.sqrt() / 2.0)).norm() < 1e-12);
        assert_eq!(CycloElem::zeta(2).to_complex(), Complex64::new(-1.0, 0.0));
    }

    #[test]
    fn integrality() {
        assert!(CycloElem::zeta(4).is_algebraic_integer());
        assert!(!CycloElem::from_ratio_in(1, 1, 2).is_algebraic_integer());
        let a = CycloElem::one(3) + CycloElem::zeta(3);
        assert!(a.is_algebraic_integer());
        assert!(!a.div_int(2).is_algebraic_integer());
    }

    #[test]
    fn conj_of_zeta() {
        for m in 1..=12 {
            let z = CycloElem::zeta(m);
            assert_eq!(z.conj(), CycloElem::zeta_pow(m, -1));
            assert!((&z * &z.conj()).is_one());
        }
    }
}
