//! Exact characteristic polynomials over Q(ζ_m) by multi-modular
//! Faddeev–LeVerrier.
//!
//! Clearing denominators gives N = L·A with entries P_ab(x) ∈ Z[x], deg < φ(m).
//! Read in Z[x]/(xᵐ − 1), det(tI − N) has coefficients e_i with
//! e_i(ω) = e_i(N(ω)) for every m-th root of unity ω, so
//! |e_i(ω)| ≤ C(n, i)·Rⁿ⁻ⁱ, where R bounds every row sum of coefficient
//! 1-norms. The coefficients of e_i, recovered from its values by an
//! inverse DFT, obey the same bound. Each prime p ≡ 1 (mod m) gives those
//! values mod p from m scalar runs; CRT lifts once the modulus exceeds
//! twice the bound.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::Poly;
use crate::cyclo::{lcm, prime_factors, CycloElem};
use crate::matrices::ExactMatrix;

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes p ≡ 1 (mod m) below 2⁶², largest first, each with an element of
/// exact multiplicative order m.
struct PrimeStream {
    m: u64,
    k: u64,
}

impl PrimeStream {
    fn new(m: u64) -> Self {
        PrimeStream {
            m,
            k: ((1u64 << 62) - 2) / m,
        }
    }
}

impl Iterator for PrimeStream {
    type Item = (u64, u64);

    fn next(&mut self) -> Option<(u64, u64)> {
        while self.k > 0 {
            let p = self.k * self.m + 1;
            self.k -= 1;
            if !is_prime_u64(p) {
                continue;
            }
            let qs = prime_factors(self.m);
            for g in 2..p {
                let r = pow_mod(g, (p - 1) / self.m, p);
                if qs.iter().all(|&q| pow_mod(r, self.m / q, p) != 1) {
                    return Some((p, r));
                }
            }
        }
        None
    }
}

/// The largest prime p < 2⁶² with p ≡ 1 (mod m), and an element of order m.
pub(crate) fn prime_with_root(m: u64) -> (u64, u64) {
    PrimeStream::new(m).next().expect("a prime congruent to 1 mod m below 2^62")
}

fn charpoly_mod_p(rows: &[Vec<(usize, u64)>], n: usize, p: u64) -> Vec<u64> {
    let mut c = vec![0u64; n + 1];
    c[n] = 1 % p;
    let mut m = vec![0u64; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    for k in 1..=n {
        if k > 1 {
            let mut next = vec![0u64; n * n];
            for (i, row) in rows.iter().enumerate() {
                let out = &mut next[i * n..(i + 1) * n];
                for &(l, v) in row {
                    let src = &m[l * n..(l + 1) * n];
                    for (slot, &x) in out.iter_mut().zip(src) {
                        if x != 0 {
                            *slot = (*slot + mul_mod(v, x, p)) % p;
                        }
                    }
                }
            }
            for i in 0..n {
                next[i * n + i] = (next[i * n + i] + c[n - k + 1]) % p;
            }
            m = next;
        }
        let mut tr = 0u64;
        for (i, row) in rows.iter().enumerate() {
            for &(l, v) in row {
                tr = (tr + mul_mod(v, m[l * n + i], p)) % p;
            }
        }
        let inv_k = pow_mod(k as u64, p - 2, p);
        c[n - k] = mul_mod((p - tr) % p, inv_k, p);
    }
    c
}

fn residue(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue below p")
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, t| acc * (n - t) / (t + 1))
}

/// det(tI − A) with exact coefficients.
pub fn charpoly_multimodular(a: &ExactMatrix) -> Poly<CycloElem> {
    assert!(a.is_square(), "characteristic polynomial of a non-square matrix");
    let n = a.nrows();
    let m = a.entries().iter().fold(1, |acc, e| lcm(acc, e.conductor()));
    let lifted: Vec<CycloElem> = a.entries().iter().map(|e| e.lift(m)).collect();
    let scale = lifted
        .iter()
        .fold(BigInt::one(), |acc, e| acc.lcm(e.denominator()));
    // Integer coefficient vectors of N = scale·A, entry by entry.
    let polys: Vec<Vec<BigInt>> = lifted
        .iter()
        .map(|e| {
            let f = &scale / e.denominator();
            e.numerators().iter().map(|c| c * &f).collect()
        })
        .collect();
    let row_bound = (0..n)
        .map(|i| {
            polys[i * n..(i + 1) * n]
                .iter()
                .flat_map(|v| v.iter().map(|c| c.abs()))
                .fold(BigInt::zero(), |acc, c| acc + c)
        })
        .max()
        .unwrap_or_else(BigInt::zero);
    let bound = (0..=n)
        .map(|i| binomial(n, i) * num_traits::pow(row_bound.clone(), n - i))
        .max()
        .unwrap_or_else(BigInt::one);
    let target = bound * 2 + 1;

    let mu = m as usize;
    let mut modulus = BigInt::one();
    // crt[i][t]: coefficient of xᵗ in e_i, modulo `modulus`.
    let mut crt = vec![vec![BigInt::zero(); mu]; n + 1];
    for (p, r) in PrimeStream::new(m) {
        let residues: Vec<Vec<u64>> = polys
            .iter()
            .map(|v| v.iter().map(|c| residue(c, p)).collect())
            .collect();
        let roots: Vec<u64> = (0..mu).map(|j| pow_mod(r, j as u64, p)).collect();
        // values[j][i] = e_i(r^j) mod p
        let values: Vec<Vec<u64>> = roots
            .iter()
            .map(|&w| {
                let rows: Vec<Vec<(usize, u64)>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .filter_map(|l| {
                                let coeffs = &residues[i * n + l];
                                let v = coeffs
                                    .iter()
                                    .rev()
                                    .fold(0u64, |acc, &c| (mul_mod(acc, w, p) + c) % p);
                                (v != 0).then_some((l, v))
                            })
                            .collect()
                    })
                    .collect();
                charpoly_mod_p(&rows, n, p)
            })
            .collect();
        let inv_m = pow_mod(m % p, p - 2, p);
        let big_p = BigInt::from(p);
        let inv_mod = residue(&modulus, p);
        let inv_mod = pow_mod(inv_mod, p - 2, p);
        for (i, slots) in crt.iter_mut().enumerate() {
            for (t, slot) in slots.iter_mut().enumerate() {
                // Inverse DFT: b_t = m⁻¹ Σ_j e_i(r^j) r^{−jt}.
                let mut b = 0u64;
                for (j, vals) in values.iter().enumerate() {
                    let w = roots[(mu - (j * t) % mu) % mu];
                    b = (b + mul_mod(vals[i], w, p)) % p;
                }
                b = mul_mod(b, inv_m, p);
                let cur = residue(slot, p);
                let delta = mul_mod((b + p - cur) % p, inv_mod, p);
                *slot += &modulus * BigInt::from(delta);
            }
        }
        modulus *= big_p;
        if modulus >= target {
            break;
        }
    }
    let half = &modulus / 2;
    let coeffs = crt
        .into_iter()
        .enumerate()
        .map(|(i, slots)| {
            let den = num_traits::pow(scale.clone(), n - i);
            let q: Vec<BigRational> = slots
                .into_iter()
                .map(|b| {
                    let b = if b > half { b - &modulus } else { b };
                    BigRational::new(b, den.clone())
                })
                .collect();
            CycloElem::from_coeffs(m, &q)
        })
        .collect();
    Poly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::faddeev_leverrier;
    use crate::cyclo::RationalAngle;
    use crate::graph::families;
    use crate::matrices::{Exact, Walk};

    #[test]
    fn miller_rabin() {
        let small: Vec<u64> = (0..60).filter(|&k| is_prime_u64(k)).collect();
        assert_eq!(
            small,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime_u64((1 << 61) - 1));
        assert!(!is_prime_u64(3_215_031_751));
    }

    #[test]
    fn agrees_with_field_arithmetic() {
        for (idx, (a, b)) in [(0, 1), (1, 4), (1, 6), (2, 5), (3, 7)].into_iter().enumerate() {
            let g = families::complete(4, &families::orientations_from_index(37 * idx as u64 + 5, 6))
                .unwrap();
            let mode = Exact::from_rational(RationalAngle::new(a, b).unwrap());
            let w = Walk::new(&g, &mode);
            for mat in [w.time_evolution(), w.random_walk_hermitian(), w.hermitian_adjacency()] {
                assert_eq!(charpoly_multimodular(&mat), faddeev_leverrier(&mat));
            }
        }
    }
}
