use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::charpoly::modular::{mul_mod, prime_with_root};
use crate::charpoly::Poly;
use crate::cyclo::{cyclotomic_polynomial, CycloElem, IntPoly};
use crate::error::{Error, Result};

/// Ψ = Π Φ_d^{e_d} as a list of (d, e_d) with d increasing, or `None` when a
/// factor other than a cyclotomic polynomial remains.
pub fn is_cyclotomic_product(psi: &IntPoly) -> Result<Option<Vec<(u64, u32)>>> {
    if !psi.is_monic() {
        return Err(Error::NotMonic);
    }
    let mut rest = psi.clone();
    let mut deg = rest.degree().unwrap_or(0);
    if !passes_unit_circle_filters(&rest) {
        return Ok(None);
    }
    let mut factors = Vec::new();
    // φ(d) ≥ √(d/2), so no d beyond 2·deg² can contribute.
    let phi = totient_sieve(2 * deg * deg);
    let mut d = 1u64;
    while deg > 0 && (d as usize) < phi.len() {
        if phi[d as usize] as usize <= deg && vanishes_mod_p(&rest, d) {
            let phi_d = cyclotomic_polynomial(d);
            let mut e = 0;
            loop {
                let (q, r) = rest.div_rem_monic(&phi_d);
                if !r.is_zero() {
                    break;
                }
                rest = q;
                e += 1;
            }
            if e > 0 {
                factors.push((d, e));
                deg = rest.degree().unwrap_or(0);
            }
        }
        d += 1;
    }
    Ok((deg == 0).then_some(factors))
}

fn totient_sieve(limit: usize) -> Vec<u32> {
    let mut phi: Vec<u32> = (0..=limit as u32).collect();
    for i in 2..=limit {
        if phi[i] == i as u32 {
            for j in (i..=limit).step_by(i) {
                phi[j] -= phi[j] / i as u32;
            }
        }
    }
    phi
}

/// P(r) ≡ 0 (mod p) for r of order d mod a prime p ≡ 1 (mod d); necessary
/// for Φ_d | P.
fn vanishes_mod_p(p: &IntPoly, d: u64) -> bool {
    let (q, r) = prime_with_root(d);
    let big_q = BigInt::from(q);
    p.coeffs().iter().rev().fold(0u64, |acc, c| {
        let c = c.mod_floor(&big_q).to_u64().expect("residue below q");
        (mul_mod(acc, r, q) + c) % q
    }) == 0
}

/// Exact necessary conditions for a monic integer polynomial whose roots all
/// lie on the unit circle: |constant term| = 1 and |c_k| ≤ C(deg, k).
fn passes_unit_circle_filters(p: &IntPoly) -> bool {
    let c = p.coeffs();
    let deg = c.len() - 1;
    if deg == 0 {
        return true;
    }
    if !c[0].abs().is_one() {
        return false;
    }
    let mut binom = BigInt::one();
    for (k, ck) in c.iter().enumerate() {
        if ck.abs() > binom {
            return false;
        }
        binom = binom * (deg - k) / (k + 1);
    }
    true
}

/// Same factorization for a polynomial held with field coefficients.
pub fn cyclotomic_factorization(psi: &Poly<CycloElem>) -> Result<Option<Vec<(u64, u32)>>> {
    if !psi.is_monic(0.0) {
        return Err(Error::NotMonic);
    }
    let ints = psi.to_int_poly().ok_or(Error::NotIntegerCoefficients)?;
    is_cyclotomic_product(&ints)
}

/// Every coefficient lies in Z[ζ_m].
pub fn algebraic_integer_coefficients(psi: &Poly<CycloElem>) -> bool {
    psi.all_algebraic_integers()
}

/// N(Ψ) = Π_σ σ(Ψ) over Gal(Q(ζ_m)/Q), m the common conductor of the
/// coefficients. Rational coefficients; integral when Ψ's are algebraic
/// integers.
pub fn galois_norm(psi: &Poly<CycloElem>) -> Poly<CycloElem> {
    let m = psi.conductor();
    let lifted = Poly::new(psi.coeffs().iter().map(|c| c.lift(m)).collect());
    CycloElem::galois_exponents(m)
        .into_iter()
        .fold(Poly::one(), |acc, j| acc.mul(&lifted.galois(j)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(v: &[i64]) -> IntPoly {
        IntPoly::from_i64(v)
    }

    #[test]
    fn triangle_inherited_factor() {
        // x⁶ − 2x³ + 1 = Φ1²Φ3²
        let f = is_cyclotomic_product(&ip(&[1, 0, 0, -2, 0, 0, 1])).unwrap();
        assert_eq!(f, Some(vec![(1, 2), (3, 2)]));
    }

    #[test]
    fn square_inherited_factor() {
        // (x−1)²(x+1)²(x²+1)²
        let p = ip(&[-1, 1]).pow(2).mul(&ip(&[1, 1]).pow(2)).mul(&ip(&[1, 0, 1]).pow(2));
        assert_eq!(
            is_cyclotomic_product(&p).unwrap(),
            Some(vec![(1, 2), (2, 2), (4, 2)])
        );
    }

    #[test]
    fn rejects() {
        assert_eq!(is_cyclotomic_product(&ip(&[1, -3, 1])).unwrap(), None);
        // x³ + x + 1 passes the coefficient filters.
        assert_eq!(is_cyclotomic_product(&ip(&[1, 1, 0, 1])).unwrap(), None);
        assert!(matches!(is_cyclotomic_product(&ip(&[1, 2])), Err(Error::NotMonic)));
        let half = Poly::new(vec![CycloElem::from_ratio_in(1, 1, 2), CycloElem::one(1)]);
        assert!(matches!(cyclotomic_factorization(&half), Err(Error::NotIntegerCoefficients)));
    }

    #[test]
    fn norm_of_linear_factor() {
        // N(x − ζ5) = Φ5
        let p = Poly::new(vec![CycloElem::zeta(5).neg_ref(), CycloElem::one(5)]);
        let n = galois_norm(&p).to_int_poly().unwrap();
        assert_eq!(n, ip(&[1, 1, 1, 1, 1]));
        assert!(algebraic_integer_coefficients(&p));
    }
}
