//! Characteristic polynomials f, g, the inherited factor Ψ and the
//! spectral-mapping identity det(xI − U_θ) = (x² − 1)^{m−n} Ψ(x).

mod identities;
mod inherited;
pub(crate) mod modular;
mod poly;

use std::fmt::Display;

use num_complex::Complex64;

pub use identities::{coefficient_identities, CoefficientReport, IdentityCheck};
pub use inherited::{
    index_set, inherited_factor, psi_by_index_sets, psi_by_substitution, IndexPair,
};
pub use modular::charpoly_multimodular;
pub use poly::{round_to_integers, Poly};

use crate::cyclo::CycloElem;
use crate::error::Result;
use crate::graph::MixedGraph;
use crate::linalg;
use crate::matrices::{FieldMatrix, PhaseMode, Walk};
use crate::scalar::Scalar;

/// Tolerance for numeric coefficient comparisons.
pub const NUMERIC_COEFF_TOL: f64 = 1e-8;

/// Scalars with a characteristic-polynomial routine: multi-modular
/// Faddeev–LeVerrier for exact entries, eigenvalue expansion for floats.
pub trait CharScalar: Scalar + Display {
    fn charpoly(m: &FieldMatrix<Self>) -> Result<Poly<Self>>;
    /// For matrices known to be Hermitian.
    fn charpoly_hermitian(m: &FieldMatrix<Self>) -> Result<Poly<Self>>;
    fn tolerance() -> f64;
}

impl CharScalar for CycloElem {
    fn charpoly(m: &FieldMatrix<Self>) -> Result<Poly<Self>> {
        Ok(charpoly_multimodular(m))
    }
    fn charpoly_hermitian(m: &FieldMatrix<Self>) -> Result<Poly<Self>> {
        Ok(charpoly_multimodular(m))
    }
    fn tolerance() -> f64 {
        0.0
    }
}

impl CharScalar for Complex64 {
    fn charpoly(m: &FieldMatrix<Self>) -> Result<Poly<Self>> {
        Ok(Poly::new(linalg::poly_from_roots(&linalg::eigenvalues(m)?)))
    }
    fn charpoly_hermitian(m: &FieldMatrix<Self>) -> Result<Poly<Self>> {
        let roots: Vec<Complex64> = linalg::hermitian_eigenvalues(m)
            .into_iter()
            .map(|x| Complex64::new(x, 0.0))
            .collect();
        let mut p = linalg::poly_from_roots(&roots);
        p.iter_mut().for_each(|c| c.im = 0.0);
        Ok(Poly::new(p))
    }
    fn tolerance() -> f64 {
        NUMERIC_COEFF_TOL
    }
}

/// det(xI − M) by Faddeev–LeVerrier: M_1 = I, M_k = A·M_{k−1} + c_{n−k+1}I,
/// c_{n−k} = −tr(A·M_k)/k. Only nonzero entries of A are visited.
pub fn faddeev_leverrier<S: Scalar>(a: &FieldMatrix<S>) -> Poly<S> {
    assert!(a.is_square(), "characteristic polynomial of a non-square matrix");
    let n = a.nrows();
    let sparse: Vec<Vec<(usize, S)>> = (0..n)
        .map(|i| {
            a.row(i)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(l, v)| (l, v.clone()))
                .collect()
        })
        .collect();
    let mut c = vec![S::zero(); n + 1];
    c[n] = S::one();
    // m holds M_k row-major.
    let mut m: Vec<S> = (0..n * n)
        .map(|idx| if idx / n == idx % n { S::one() } else { S::zero() })
        .collect();
    for k in 1..=n {
        if k > 1 {
            let mut next = vec![S::zero(); n * n];
            for (i, row) in sparse.iter().enumerate() {
                let out = &mut next[i * n..(i + 1) * n];
                for (l, v) in row {
                    for (j, slot) in out.iter_mut().enumerate() {
                        let x = &m[l * n + j];
                        if !x.is_zero() {
                            *slot = slot.plus(&v.times(x));
                        }
                    }
                }
            }
            for i in 0..n {
                next[i * n + i] = next[i * n + i].plus(&c[n - k + 1]);
            }
            m = next;
        }
        let mut tr = S::zero();
        for (i, row) in sparse.iter().enumerate() {
            for (l, v) in row {
                let x = &m[l * n + i];
                if !x.is_zero() {
                    tr = tr.plus(&v.times(x));
                }
            }
        }
        c[n - k] = tr.negated().div_int(k as i64);
    }
    Poly::new(c)
}

/// charpoly of a square matrix in its own arithmetic.
pub fn charpoly<S: CharScalar>(m: &FieldMatrix<S>) -> Result<Poly<S>> {
    S::charpoly(m)
}

/// f, g and Ψ of a graph.
#[derive(Clone, Debug)]
pub struct GraphPolys<S> {
    /// det(xI − H_η)
    pub f: Poly<S>,
    /// det(xI − H̃_η)
    pub g: Poly<S>,
    pub psi: Poly<S>,
}

/// g(x) = det(xI − H̃_η). Exact mode uses D⁻¹H_η, which is similar to H̃_η
/// and has entries in Q(ζ_m) for every graph.
pub fn normalized_charpoly<M: PhaseMode>(g: &MixedGraph, mode: &M) -> Result<Poly<M::S>>
where
    M::S: CharScalar,
{
    let w = Walk::new(g, mode);
    if mode.is_exact() {
        charpoly(&w.random_walk_hermitian())
    } else {
        M::S::charpoly_hermitian(&w.normalized_hermitian()?)
    }
}

pub fn graph_polys<M: PhaseMode>(g: &MixedGraph, mode: &M) -> Result<GraphPolys<M::S>>
where
    M::S: CharScalar,
{
    let h = Walk::new(g, mode).hermitian_adjacency();
    let f = M::S::charpoly_hermitian(&h)?;
    let gp = normalized_charpoly(g, mode)?;
    let psi = inherited_factor(&gp, g.n())?;
    Ok(GraphPolys { f, g: gp, psi })
}

/// (x² − 1)^e
pub fn birth_factor<S: Scalar>(e: u32) -> Poly<S> {
    Poly::new(vec![S::one().negated(), S::zero(), S::one()]).pow(e)
}

/// charpoly(U_θ) against (x² − 1)^{m−n}·Ψ. For trees (m − n = −1) the
/// factor moves to the other side: (x² − 1)·charpoly(U_θ) = Ψ.
#[derive(Clone, Debug)]
pub struct SpectralMap<S> {
    pub birth_exponent: i64,
    pub walk_charpoly: Poly<S>,
    pub psi: Poly<S>,
    pub holds: bool,
    pub max_coeff_diff: f64,
}

pub fn spectral_map<M: PhaseMode>(g: &MixedGraph, mode: &M) -> Result<SpectralMap<M::S>>
where
    M::S: CharScalar,
{
    let u = Walk::new(g, mode).time_evolution();
    let walk_charpoly = charpoly(&u)?;
    let psi = inherited_factor(&normalized_charpoly(g, mode)?, g.n())?;
    let e = g.edge_count() as i64 - g.n() as i64;
    let (lhs, rhs) = if e >= 0 {
        (walk_charpoly.clone(), birth_factor::<M::S>(e as u32).mul(&psi))
    } else {
        (birth_factor::<M::S>((-e) as u32).mul(&walk_charpoly), psi.clone())
    };
    let tol = M::S::tolerance();
    Ok(SpectralMap {
        birth_exponent: e,
        holds: lhs.close_to(&rhs, tol),
        max_coeff_diff: lhs.max_coeff_diff(&rhs),
        walk_charpoly,
        psi,
    })
}

pub fn spectral_map_check<M: PhaseMode>(g: &MixedGraph, mode: &M) -> Result<bool>
where
    M::S: CharScalar,
{
    Ok(spectral_map(g, mode)?.holds)
}
