use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::cyclo::{CycloElem, IntPoly};
use crate::scalar::Scalar;

/// Dense univariate polynomial, constant term first, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::new(vec![S::one()])
    }

    /// c·x^k
    pub fn monomial(c: S, k: usize) -> Self {
        let mut v = vec![S::zero(); k];
        v.push(c);
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of x^i; zero for i < 0 or above the degree.
    pub fn coeff(&self, i: isize) -> S {
        if i < 0 {
            return S::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_else(S::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self, tol: f64) -> bool {
        self.coeffs.last().is_some_and(|c| c.close_to(&S::one(), tol))
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..len as isize)
                .map(|i| self.coeff(i).plus(&other.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..len as isize)
                .map(|i| self.coeff(i).minus(&other.coeff(i)))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc.times(x).plus(c))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn to_complex(&self) -> Poly<Complex64> {
        self.map(Scalar::to_complex)
    }

    /// Coefficientwise comparison; exact for exact scalars.
    pub fn close_to(&self, other: &Self, tol: f64) -> bool {
        let len = self.coeffs.len().max(other.coeffs.len()) as isize;
        (0..len).all(|i| self.coeff(i).close_to(&other.coeff(i), tol))
    }

    pub fn max_coeff_diff(&self, other: &Self) -> f64 {
        let len = self.coeffs.len().max(other.coeffs.len()) as isize;
        (0..len)
            .map(|i| (self.coeff(i).to_complex() - other.coeff(i).to_complex()).norm())
            .fold(0.0, f64::max)
    }
}

impl Poly<CycloElem> {
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(CycloElem::is_rational)
    }

    pub fn all_algebraic_integers(&self) -> bool {
        self.coeffs.iter().all(CycloElem::is_algebraic_integer)
    }

    /// The polynomial in Z[x], when every coefficient is a rational integer.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| {
                let q = c.as_rational()?;
                q.is_integer().then(|| q.to_integer())
            })
            .collect::<Option<Vec<BigInt>>>()
            .map(IntPoly::new)
    }

    pub fn from_int_poly(p: &IntPoly) -> Self {
        Poly::new(p.coeffs().iter().map(CycloElem::from_bigint).collect())
    }

    /// σ_j applied to every coefficient.
    pub fn galois(&self, j: u64) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.galois(j)).collect())
    }

    /// Smallest conductor holding every coefficient's representation.
    pub fn conductor(&self) -> u64 {
        self.coeffs
            .iter()
            .fold(1, |acc, c| crate::cyclo::lcm(acc, c.conductor()))
    }
}

impl<S: Scalar + fmt::Display> Poly<S> {
    /// Exact coefficient strings, constant term first.
    pub fn to_json_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let one = c.close_to(&S::one(), 0.0);
            match k {
                0 => write!(f, "{c}")?,
                _ if one => {}
                _ => write!(f, "({c})")?,
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Complex coefficients rounded to the nearest integers, if every one is
/// within `tol` of an integer.
pub fn round_to_integers(p: &Poly<Complex64>, tol: f64) -> Option<Vec<i64>> {
    p.coeffs()
        .iter()
        .map(|c| {
            let r = c.re.round();
            ((c - Complex64::new(r, 0.0)).norm() <= tol).then(|| r.to_i64()).flatten()
        })
        .collect()
}
