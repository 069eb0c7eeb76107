//! Scalars shared by the exact (cyclotomic) and numeric (complex f64) pipelines.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::cyclo::CycloElem;

pub trait Scalar: Clone + Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn from_bigint(v: &BigInt) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn conjugate(&self) -> Self;
    fn div_int(&self, k: i64) -> Self;
    fn to_complex(&self) -> Complex64;
    /// Exact equality for exact scalars; |a − b| ≤ tol for floats.
    fn close_to(&self, other: &Self, tol: f64) -> bool;
}

impl Scalar for CycloElem {
    fn zero() -> Self {
        CycloElem::zero(1)
    }
    fn one() -> Self {
        CycloElem::one(1)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        CycloElem::from_ratio_in(1, num, den)
    }
    fn from_bigint(v: &BigInt) -> Self {
        CycloElem::from_bigint(v)
    }
    fn is_zero(&self) -> bool {
        CycloElem::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add_ref(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub_ref(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul_ref(other)
    }
    fn negated(&self) -> Self {
        self.neg_ref()
    }
    fn conjugate(&self) -> Self {
        self.conj()
    }
    fn div_int(&self, k: i64) -> Self {
        CycloElem::div_int(self, k)
    }
    fn to_complex(&self) -> Complex64 {
        CycloElem::to_complex(self)
    }
    fn close_to(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }
    fn from_bigint(v: &BigInt) -> Self {
        Complex64::new(v.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn conjugate(&self) -> Self {
        self.conj()
    }
    fn div_int(&self, k: i64) -> Self {
        self / k as f64
    }
    fn to_complex(&self) -> Complex64 {
        *self
    }
    fn close_to(&self, other: &Self, tol: f64) -> bool {
        (self - other).norm() <= tol
    }
}
