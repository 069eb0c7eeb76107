//! Floating-point spectra through nalgebra.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrices::NumericMatrix;

const SCHUR_EPS: f64 = 1e-14;
const SCHUR_MAX_ITER: usize = 10_000;
const SCHUR_RETRIES: u64 = 4;

pub fn to_dmatrix(m: &NumericMatrix) -> DMatrix<Complex64> {
    DMatrix::from_fn(m.nrows(), m.ncols(), |i, j| *m.get(i, j))
}

/// Unitary Q factor of a seeded random complex matrix.
fn random_unitary(n: usize, seed: u64) -> DMatrix<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = DMatrix::from_fn(n, n, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    a.qr().q()
}

/// All eigenvalues of a square complex matrix (complex Schur form).
///
/// Shifted QR can stall on permutation-like matrices; those are retried
/// after a random unitary similarity, which leaves the spectrum unchanged.
pub fn eigenvalues(m: &NumericMatrix) -> Result<Vec<Complex64>> {
    let n = m.nrows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let a = to_dmatrix(m);
    let diagonal = |t: DMatrix<Complex64>| (0..n).map(|i| t[(i, i)]).collect();
    if let Some(schur) = a.clone().try_schur(SCHUR_EPS, SCHUR_MAX_ITER) {
        return Ok(diagonal(schur.unpack().1));
    }
    for seed in 0..SCHUR_RETRIES {
        let q = random_unitary(n, seed);
        let b = q.adjoint() * &a * &q;
        if let Some(schur) = b.try_schur(SCHUR_EPS, SCHUR_MAX_ITER) {
            return Ok(diagonal(schur.unpack().1));
        }
    }
    Err(Error::EigenSolver)
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &NumericMatrix) -> Vec<f64> {
    if m.nrows() == 0 {
        return Vec::new();
    }
    let mut v: Vec<f64> = to_dmatrix(m).symmetric_eigenvalues().iter().copied().collect();
    v.sort_by(f64::total_cmp);
    v
}

/// Coefficients of Π (x − r), constant term first.
pub fn poly_from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(1.0, 0.0)];
    for &r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
        for (k, &ck) in c.iter().enumerate() {
            next[k + 1] += ck;
            next[k] -= r * ck;
        }
        c = next;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::{FieldMatrix, IndexSpace};

    #[test]
    fn block_permutation_spectrum() {
        // 3-cycle on two blocks: stalls unshifted QR.
        let p = FieldMatrix::from_fn(IndexSpace::Vertices(6), IndexSpace::Vertices(6), |i, j| {
            let block = i / 3 * 3;
            let hit = j == block + (i + 2 - block) % 3;
            Complex64::new(if hit { 1.0 } else { 0.0 }, 0.0)
        });
        let eig = eigenvalues(&p).unwrap();
        assert_eq!(eig.len(), 6);
        for z in eig {
            assert!((z.powu(3) - Complex64::new(1.0, 0.0)).norm() < 1e-10);
        }
        let path = crate::graph::families::undirected_path(4).unwrap();
        let u = crate::matrices::time_evolution(&path, &crate::matrices::Numeric::from_radians(0.0));
        assert_eq!(eigenvalues(&u).unwrap().len(), 6);
    }

    #[test]
    fn roots_expand() {
        let c = poly_from_roots(&[Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)]);
        let re: Vec<f64> = c.iter().map(|z| z.re).collect();
        assert_eq!(re, vec![2.0, -3.0, 1.0]);
    }

    #[test]
    fn permutation_spectrum() {
        let sp = IndexSpace::Vertices(3);
        let p = FieldMatrix::from_fn(sp.clone(), sp, |i, j| {
            Complex64::new(if (i + 1) % 3 == j { 1.0 } else { 0.0 }, 0.0)
        });
        let ev = eigenvalues(&p).unwrap();
        assert_eq!(ev.len(), 3);
        for z in ev {
            assert!((z.powu(3) - 1.0).norm() < 1e-12);
        }
    }
}
