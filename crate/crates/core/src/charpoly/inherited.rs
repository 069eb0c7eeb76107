//! Ψ(x) = (2x)^n g((x + x⁻¹)/2), computed two independent ways.
//!
//! Writing g(x) = Σ d_i x^i,
//!   substitution: Ψ = Σ_i d_i (2x)^{n−i} (x² + 1)^i,
//!   index sets:   α_j = Σ_{(i,l) ∈ I_j} 2^{n−i} d_i C(i, l),
//! where I_j = {(i, l) : 0 ≤ l ≤ i ≤ n, n + 2l − i = j}.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IndexPair {
    pub i: usize,
    pub l: usize,
}

/// I_j in increasing (i, l) order.
pub fn index_set(n: usize, j: usize) -> Result<Vec<IndexPair>> {
    if j > 2 * n {
        return Err(Error::JOutOfRange { j, max: 2 * n });
    }
    Ok((0..=n)
        .filter_map(|l| {
            let i = (n + 2 * l).checked_sub(j)?;
            (l <= i && i <= n).then_some(IndexPair { i, l })
        })
        .collect())
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, t| acc * (n - t) / (t + 1))
}

fn check_degree<S: Scalar>(g: &Poly<S>, n: usize) -> Result<()> {
    if g.degree() != Some(n) {
        return Err(Error::BadParameters(format!(
            "g has degree {:?}, expected {n}",
            g.degree()
        )));
    }
    Ok(())
}

pub fn psi_by_substitution<S: Scalar>(g: &Poly<S>, n: usize) -> Result<Poly<S>> {
    check_degree(g, n)?;
    let x2p1 = Poly::new(vec![S::one(), S::zero(), S::one()]);
    let mut power = Poly::one();
    let mut psi = Poly::zero();
    for i in 0..=n {
        let d = g.coeff(i as isize);
        if !d.is_zero() {
            let c = d.times(&S::from_bigint(&(BigInt::one() << (n - i))));
            psi = psi.add(&power.mul(&Poly::monomial(c, n - i)));
        }
        power = power.mul(&x2p1);
    }
    Ok(psi)
}

pub fn psi_by_index_sets<S: Scalar>(g: &Poly<S>, n: usize) -> Result<Poly<S>> {
    check_degree(g, n)?;
    let alphas = (0..=2 * n)
        .map(|j| {
            let mut a = S::zero();
            for IndexPair { i, l } in index_set(n, j)? {
                let d = g.coeff(i as isize);
                if !d.is_zero() {
                    let w = (BigInt::one() << (n - i)) * binomial(i, l);
                    a = a.plus(&d.times(&S::from_bigint(&w)));
                }
            }
            Ok(a)
        })
        .collect::<Result<Vec<S>>>()?;
    Ok(Poly::new(alphas))
}

/// Ψ by both routes; any disagreement is reported as an internal error.
pub fn inherited_factor<S: Scalar>(g: &Poly<S>, n: usize) -> Result<Poly<S>> {
    let a = psi_by_substitution(g, n)?;
    let b = psi_by_index_sets(g, n)?;
    let scale = b
        .coeffs()
        .iter()
        .map(|c| c.to_complex().norm())
        .fold(1.0, f64::max);
    let tol = 1e-12 * scale;
    let len = a.coeffs().len().max(b.coeffs().len()) as isize;
    if let Some(j) = (0..len).find(|&j| !a.coeff(j).close_to(&b.coeff(j), tol)) {
        return Err(Error::ImplementationMismatch(format!(
            "alpha[{j}]: {:?} vs {:?}",
            a.coeff(j),
            b.coeff(j)
        )));
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::CycloElem;

    fn q(v: &[(i64, i64)]) -> Poly<CycloElem> {
        Poly::new(v.iter().map(|&(a, b)| CycloElem::from_ratio_in(1, a, b)).collect())
    }

    fn pairs(v: &[(usize, usize)]) -> Vec<IndexPair> {
        v.iter().map(|&(i, l)| IndexPair { i, l }).collect()
    }

    #[test]
    fn index_set_cases() {
        for n in 3..9 {
            assert_eq!(index_set(n, 2 * n).unwrap(), pairs(&[(n, n)]));
            assert_eq!(
                index_set(n, 2 * n - 3).unwrap(),
                pairs(&[(n - 3, n - 3), (n - 1, n - 2)])
            );
        }
        assert_eq!(index_set(3, 3).unwrap(), pairs(&[(0, 0), (2, 1)]));
        assert!(matches!(index_set(3, 7), Err(Error::JOutOfRange { j: 7, max: 6 })));
    }

    #[test]
    fn triangle_psi() {
        // g = x³ − (3/4)x − 1/4
        let g = q(&[(-1, 4), (-3, 4), (0, 1), (1, 1)]);
        let psi = inherited_factor(&g, 3).unwrap();
        let expected = q(&[(1, 1), (0, 1), (0, 1), (-2, 1), (0, 1), (0, 1), (1, 1)]);
        assert_eq!(psi, expected);
    }

    #[test]
    fn monomial_collapses() {
        let g = Poly::monomial(CycloElem::one(1), 4);
        let psi = inherited_factor(&g, 4).unwrap();
        let x2p1 = q(&[(1, 1), (0, 1), (1, 1)]);
        assert_eq!(psi, x2p1.pow(4));
    }

    #[test]
    fn wrong_degree() {
        assert!(inherited_factor(&q(&[(1, 1), (1, 1)]), 3).is_err());
    }
}
