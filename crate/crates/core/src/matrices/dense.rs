use std::sync::Arc;

use num_complex::Complex64;

use crate::cyclo::CycloElem;
use crate::error::{Error, Result};
use crate::graph::ArcOrdering;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub enum IndexSpace {
    Vertices(usize),
    Arcs(Arc<ArcOrdering>),
}

impl IndexSpace {
    pub fn len(&self) -> usize {
        match self {
            IndexSpace::Vertices(n) => *n,
            IndexSpace::Arcs(a) => a.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn describe(&self) -> String {
        match self {
            IndexSpace::Vertices(n) => format!("V({n})"),
            IndexSpace::Arcs(a) => format!("A±({})", a.len()),
        }
    }
}

impl PartialEq for IndexSpace {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (IndexSpace::Vertices(a), IndexSpace::Vertices(b)) => a == b,
            (IndexSpace::Arcs(a), IndexSpace::Arcs(b)) => Arc::ptr_eq(a, b) || a == b,
            _ => false,
        }
    }
}

/// Row-major dense matrix with recorded row and column index spaces.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldMatrix<S> {
    rows: IndexSpace,
    cols: IndexSpace,
    data: Vec<S>,
}

pub type ExactMatrix = FieldMatrix<CycloElem>;
pub type NumericMatrix = FieldMatrix<Complex64>;

impl<S: Scalar> FieldMatrix<S> {
    pub fn from_fn(rows: IndexSpace, cols: IndexSpace, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let (r, c) = (rows.len(), cols.len());
        let mut data = Vec::with_capacity(r * c);
        for i in 0..r {
            for j in 0..c {
                data.push(f(i, j));
            }
        }
        FieldMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: IndexSpace, cols: IndexSpace, data: Vec<S>) -> Result<Self> {
        if data.len() != rows.len() * cols.len() {
            return Err(Error::BadParameters(format!(
                "{} entries for a {}x{} matrix",
                data.len(),
                rows.len(),
                cols.len()
            )));
        }
        Ok(FieldMatrix { rows, cols, data })
    }

    pub fn identity(space: IndexSpace, one: S, zero: S) -> Self {
        Self::from_fn(space.clone(), space, |i, j| {
            if i == j {
                one.clone()
            } else {
                zero.clone()
            }
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn rows(&self) -> &IndexSpace {
        &self.rows
    }

    pub fn cols(&self) -> &IndexSpace {
        &self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.ncols() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        let c = self.ncols();
        self.data[i * c + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        let c = self.ncols();
        &self.data[i * c..(i + 1) * c]
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::IndexSpaceMismatch(format!(
                "{} columns against {} rows",
                self.cols.describe(),
                other.rows.describe()
            )));
        }
        let (r, k, c) = (self.nrows(), self.ncols(), other.ncols());
        let zero = other.data.first().map(|x| x.minus(x)).unwrap_or_else(S::zero);
        let mut data = vec![zero; r * c];
        for i in 0..r {
            let out = &mut data[i * c..(i + 1) * c];
            for l in 0..k {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for (j, slot) in out.iter_mut().enumerate() {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        *slot = slot.plus(&a.times(b));
                    }
                }
            }
        }
        Ok(FieldMatrix {
            rows: self.rows.clone(),
            cols: other.cols.clone(),
            data,
        })
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols.clone(), self.rows.clone(), |i, j| {
            self.get(j, i).conjugate()
        })
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> FieldMatrix<T> {
        FieldMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn to_complex(&self) -> NumericMatrix {
        self.map(Scalar::to_complex)
    }

    pub fn trace(&self) -> S {
        let zero = self.data[0].minus(&self.data[0]);
        (0..self.nrows()).fold(zero, |acc, i| acc.plus(self.get(i, i)))
    }

    /// Entrywise comparison: exact equality for exact scalars, within `tol`
    /// otherwise.
    pub fn close_to(&self, other: &Self, tol: f64) -> bool {
        self.nrows() == other.nrows()
            && self.ncols() == other.ncols()
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| a.close_to(b, tol))
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        let (one, zero) = (S::one(), S::zero());
        self.is_square()
            && (0..self.nrows()).all(|i| {
                (0..self.ncols()).all(|j| self.get(i, j).close_to(if i == j { &one } else { &zero }, tol))
            })
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.close_to(&self.conj_transpose(), tol)
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.is_square()
            && self
                .mul(&self.conj_transpose())
                .map(|p| p.is_identity(tol))
                .unwrap_or(false)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a.to_complex() - b.to_complex()).norm())
            .fold(0.0, f64::max)
    }

    /// Same entries, rows and columns re-indexed by a permutation:
    /// result[perm[i]][perm[j]] = self[i][j].
    pub fn permuted(&self, perm: &[usize], space: IndexSpace) -> Result<Self> {
        if perm.len() != self.nrows() || space.len() != self.nrows() || !self.is_square() {
            return Err(Error::IndexSpaceMismatch("permutation size".into()));
        }
        let mut inv = vec![usize::MAX; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            if p >= perm.len() || inv[p] != usize::MAX {
                return Err(Error::BadParameters("not a permutation".into()));
            }
            inv[p] = i;
        }
        Ok(Self::from_fn(space.clone(), space, |i, j| {
            self.get(inv[i], inv[j]).clone()
        }))
    }
}

impl ExactMatrix {
    /// One row per line, entries as exact strings.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.nrows() {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

impl NumericMatrix {
    /// One row per line, each entry written as two fields `re,im`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.nrows() {
            let row: Vec<String> = self
                .row(i)
                .iter()
                .map(|z| format!("{:e},{:e}", z.re, z.im))
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: usize) -> IndexSpace {
        IndexSpace::Vertices(n)
    }

    #[test]
    fn product_and_identity() {
        let a = FieldMatrix::from_fn(v(2), v(2), |i, j| CycloElem::from_int((i * 2 + j) as i64));
        let id = FieldMatrix::identity(v(2), CycloElem::one(1), CycloElem::zero(1));
        assert_eq!(a.mul(&id).unwrap(), a);
        let sq = a.mul(&a).unwrap();
        assert_eq!(*sq.get(1, 1), CycloElem::from_int(11));
        assert_eq!(sq.trace(), CycloElem::from_int(13));
    }

    #[test]
    fn csv_dump() {
        let a = FieldMatrix::from_fn(v(2), v(2), |i, j| {
            if i == j {
                CycloElem::from_ratio_in(6, 3, 4)
            } else {
                CycloElem::zeta(6).div_int(2)
            }
        });
        assert_eq!(a.to_csv(), "3/4,(1/2)ζ6^1\n(1/2)ζ6^1,3/4\n");
        let z = a.to_complex().to_csv();
        assert_eq!(z.lines().next().unwrap().split(',').count(), 4);
    }

    #[test]
    fn mismatched_spaces() {
        let a = FieldMatrix::from_fn(v(2), v(3), |_, _| CycloElem::one(1));
        assert!(matches!(a.mul(&a), Err(Error::IndexSpaceMismatch(_))));
    }
}
