#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use mixed_walk::cyclo::{cyclotomic_polynomial, totient, CycloElem};
use mixed_walk::graph::MixedGraph;

pub const CORPUS_SEED: u64 = 0x00c0_ffee;
pub const CORPUS_SIZE: usize = 200;
pub const CORPUS_MAX_N: usize = 7;

pub fn adjacent(g: &MixedGraph, x: usize, y: usize) -> bool {
    g.orientation(x, y).is_some()
}

/// Triangles by brute force over all vertex triples.
pub fn triangles_by_triples(g: &MixedGraph) -> u64 {
    let n = g.n();
    let mut t = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if adjacent(g, a, b) && adjacent(g, b, c) && adjacent(g, a, c) {
                    t += 1;
                }
            }
        }
    }
    t
}

/// Coefficients (constant first) of Π (x − r).
pub fn expand_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut c = vec![Complex64::one()];
    for &r in roots {
        let mut next = vec![Complex64::zero(); c.len() + 1];
        for (i, &a) in c.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= a * r;
        }
        c = next;
    }
    c
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// det(xI − A) over Q by Faddeev–LeVerrier, constant term first.
pub fn rational_charpoly(a: &[Vec<BigRational>]) -> Vec<BigRational> {
    let n = a.len();
    let matmul = |x: &[Vec<BigRational>], y: &[Vec<BigRational>]| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(BigRational::zero(), |s, k| s + &x[i][k] * &y[k][j]))
                    .collect()
            })
            .collect()
    };
    let mut c = vec![BigRational::zero(); n + 1];
    c[n] = BigRational::one();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for k in 1..=n {
        if k > 1 {
            m = matmul(a, &m);
            for (i, row) in m.iter_mut().enumerate() {
                row[i] += &c[n - k + 1];
            }
        }
        let am = matmul(a, &m);
        let tr = (0..n).fold(BigRational::zero(), |s, i| s + &am[i][i]);
        c[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
    }
    c
}

/// Integral exactly when the characteristic polynomial of multiplication
/// by the element on the power basis has integer coefficients.
pub fn integral_by_charpoly(e: &CycloElem, m: u64) -> bool {
    let phi = totient(m) as usize;
    let a = e.lift(m).coeffs();
    let modulus = cyclotomic_polynomial(m);
    let modulus: Vec<BigRational> = modulus.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect();
    // Column j: coordinates of a·x^j mod Φ_m.
    let mut cols = Vec::with_capacity(phi);
    for j in 0..phi {
        let mut prod = vec![BigRational::zero(); phi + j];
        for (i, c) in a.iter().enumerate() {
            prod[i + j] += c;
        }
        for top in (phi..prod.len()).rev() {
            let lead = prod[top].clone();
            if !lead.is_zero() {
                for (s, mc) in modulus.iter().enumerate() {
                    prod[top - phi + s] -= &lead * mc;
                }
            }
        }
        prod.truncate(phi);
        cols.push(prod);
    }
    let mat: Vec<Vec<BigRational>> = (0..phi).map(|i| (0..phi).map(|j| cols[j][i].clone()).collect()).collect();
    rational_charpoly(&mat).iter().all(|c| c.is_integer())
}
