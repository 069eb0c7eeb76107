use std::sync::Arc;

use num_complex::Complex64;

use super::dense::{FieldMatrix, IndexSpace, NumericMatrix};
use crate::cyclo::{unit_from_angle, Angle, CycloElem, RationalAngle};
use crate::error::{Error, Result};
use crate::graph::{ArcOrdering, MixedGraph, SymmetricArc};
use crate::scalar::Scalar;

/// Supplies e^{±iη} and rationals in the chosen arithmetic.
pub trait PhaseMode: Sync {
    type S: Scalar;
    /// e^{i·sign·η}; sign ∈ {−1, 0, 1}.
    fn phase(&self, sign: i8) -> Self::S;
    fn ratio(&self, num: i64, den: i64) -> Self::S;
    fn is_exact(&self) -> bool;
    /// 1/√(a·b), when representable.
    fn inv_sqrt_product(&self, a: i64, b: i64) -> Result<Self::S>;

    fn zero(&self) -> Self::S {
        self.ratio(0, 1)
    }
    fn one(&self) -> Self::S {
        self.ratio(1, 1)
    }
}

/// Exact arithmetic in Q(ζ_m) for η = 2π·a/m.
#[derive(Clone, Debug)]
pub struct Exact {
    angle: RationalAngle,
    unit: CycloElem,
    unit_bar: CycloElem,
}

impl Exact {
    pub fn new(angle: &Angle) -> Result<Self> {
        match angle {
            Angle::Rational(r) => Ok(Self::from_rational(*r)),
            Angle::Float(_) => Err(Error::NumericAngle),
        }
    }

    pub fn from_rational(angle: RationalAngle) -> Self {
        let unit = unit_from_angle(&Angle::Rational(angle)).expect("rational angle");
        let unit_bar = unit.conj();
        Exact {
            angle,
            unit,
            unit_bar,
        }
    }

    pub fn angle(&self) -> RationalAngle {
        self.angle
    }

    pub fn conductor(&self) -> u64 {
        self.angle.conductor()
    }
}

impl PhaseMode for Exact {
    type S = CycloElem;

    fn phase(&self, sign: i8) -> CycloElem {
        match sign {
            1 => self.unit.clone(),
            -1 => self.unit_bar.clone(),
            _ => CycloElem::one(self.conductor()),
        }
    }

    fn ratio(&self, num: i64, den: i64) -> CycloElem {
        CycloElem::from_ratio_in(self.conductor(), num, den)
    }

    fn is_exact(&self) -> bool {
        true
    }

    fn inv_sqrt_product(&self, a: i64, b: i64) -> Result<CycloElem> {
        let p = a * b;
        let r = (p as f64).sqrt().round() as i64;
        if r * r == p && r > 0 {
            Ok(self.ratio(1, r))
        } else {
            Err(Error::NonRegularExactNormalization)
        }
    }
}

/// Complex double precision for any real η.
#[derive(Clone, Copy, Debug)]
pub struct Numeric {
    eta: f64,
}

impl Numeric {
    pub fn new(angle: &Angle) -> Self {
        Numeric {
            eta: angle.radians(),
        }
    }

    pub fn from_radians(eta: f64) -> Self {
        Numeric { eta }
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }
}

impl PhaseMode for Numeric {
    type S = Complex64;

    fn phase(&self, sign: i8) -> Complex64 {
        if sign == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::from_polar(1.0, sign as f64 * self.eta)
        }
    }

    fn ratio(&self, num: i64, den: i64) -> Complex64 {
        Complex64::new(num as f64 / den as f64, 0.0)
    }

    fn is_exact(&self) -> bool {
        false
    }

    fn inv_sqrt_product(&self, a: i64, b: i64) -> Result<Complex64> {
        Ok(Complex64::new(1.0 / ((a * b) as f64).sqrt(), 0.0))
    }
}

/// A graph, an arithmetic mode and a fixed arc ordering; builds every walk
/// matrix consistently indexed.
pub struct Walk<'a, M: PhaseMode> {
    g: &'a MixedGraph,
    mode: &'a M,
    arcs: Arc<ArcOrdering>,
}

impl<'a, M: PhaseMode> Walk<'a, M> {
    pub fn new(g: &'a MixedGraph, mode: &'a M) -> Self {
        Self::with_ordering(g, mode, Arc::new(ArcOrdering::canonical(g)))
    }

    pub fn with_ordering(g: &'a MixedGraph, mode: &'a M, arcs: Arc<ArcOrdering>) -> Self {
        Walk { g, mode, arcs }
    }

    pub fn ordering(&self) -> &Arc<ArcOrdering> {
        &self.arcs
    }

    pub fn vertex_space(&self) -> IndexSpace {
        IndexSpace::Vertices(self.g.n())
    }

    pub fn arc_space(&self) -> IndexSpace {
        IndexSpace::Arcs(self.arcs.clone())
    }

    fn deg(&self, x: usize) -> i64 {
        self.g.neighbors(x).len() as i64
    }

    pub fn hermitian_adjacency(&self) -> FieldMatrix<M::S> {
        let sp = self.vertex_space();
        FieldMatrix::from_fn(sp.clone(), sp, |x, y| match self.g.arc_sign(x, y) {
            Some(s) => self.mode.phase(s),
            None => self.mode.zero(),
        })
    }

    pub fn degree_matrix(&self) -> FieldMatrix<M::S> {
        let sp = self.vertex_space();
        FieldMatrix::from_fn(sp.clone(), sp, |x, y| {
            if x == y {
                self.mode.ratio(self.deg(x), 1)
            } else {
                self.mode.zero()
            }
        })
    }

    /// D^{-1/2} H_η D^{-1/2}. Exact mode needs a regular graph, where this is
    /// H_η / k.
    pub fn normalized_hermitian(&self) -> Result<FieldMatrix<M::S>> {
        if self.mode.is_exact() && self.g.is_regular().is_none() {
            return Err(Error::NonRegularExactNormalization);
        }
        let h = self.hermitian_adjacency();
        let sp = self.vertex_space();
        let mut out = FieldMatrix::from_fn(sp.clone(), sp, |_, _| self.mode.zero());
        for x in 0..self.g.n() {
            for &y in self.g.neighbors(x) {
                let s = self.mode.inv_sqrt_product(self.deg(x), self.deg(y))?;
                out.set(x, y, h.get(x, y).times(&s));
            }
        }
        Ok(out)
    }

    /// D⁻¹ H_η, similar to the normalized matrix; rational in exact mode for
    /// every graph.
    pub fn random_walk_hermitian(&self) -> FieldMatrix<M::S> {
        let h = self.hermitian_adjacency();
        let sp = self.vertex_space();
        FieldMatrix::from_fn(sp.clone(), sp, |x, y| h.get(x, y).div_int(self.deg(x)))
    }

    /// C_ab = 2/deg t(a) · [t(a) = t(b)] − [a = b].
    pub fn coin(&self) -> FieldMatrix<M::S> {
        let sp = self.arc_space();
        let arcs = self.arcs.arcs();
        FieldMatrix::from_fn(sp.clone(), sp, |i, j| {
            let (a, b) = (arcs[i], arcs[j]);
            let mut v = if a.terminus == b.terminus {
                self.mode.ratio(2, self.deg(a.terminus))
            } else {
                self.mode.zero()
            };
            if i == j {
                v = v.minus(&self.mode.one());
            }
            v
        })
    }

    /// (S_θ)_ab = e^{iθ(b)} [a = b⁻¹].
    pub fn shift(&self) -> FieldMatrix<M::S> {
        let sp = self.arc_space();
        FieldMatrix::from_fn(sp.clone(), sp, |i, j| {
            if self.arcs.reverse_index(j) == i {
                self.mode.phase(self.arcs.get(j).sign)
            } else {
                self.mode.zero()
            }
        })
    }

    /// U_θ = S_θ C.
    pub fn time_evolution(&self) -> FieldMatrix<M::S> {
        self.shift()
            .mul(&self.coin())
            .expect("shift and coin share the arc space")
    }

    fn entry_formula(&self, a: SymmetricArc, b: SymmetricArc, i: usize, j: usize) -> M::S {
        let mut v = if a.origin == b.terminus {
            self.mode.ratio(2, self.deg(b.terminus))
        } else {
            self.mode.zero()
        };
        if self.arcs.reverse_index(j) == i {
            v = v.minus(&self.mode.one());
        }
        self.mode.phase(-a.sign).times(&v)
    }

    /// Compares `u` entrywise with U_ab = e^{−iθ(a)}(2/deg t(b)·[o(a) = t(b)] − [a = b⁻¹]).
    pub fn entry_formula_holds(&self, u: &FieldMatrix<M::S>, tol: f64) -> bool {
        let n = self.arcs.len();
        if u.nrows() != n || u.ncols() != n {
            return false;
        }
        let arcs = self.arcs.arcs();
        (0..n).all(|i| {
            (0..n).all(|j| {
                u.get(i, j)
                    .close_to(&self.entry_formula(arcs[i], arcs[j], i, j), tol)
            })
        })
    }
}

pub fn hermitian_adjacency<M: PhaseMode>(g: &MixedGraph, mode: &M) -> FieldMatrix<M::S> {
    Walk::new(g, mode).hermitian_adjacency()
}

pub fn degree_matrix<M: PhaseMode>(g: &MixedGraph, mode: &M) -> FieldMatrix<M::S> {
    Walk::new(g, mode).degree_matrix()
}

pub fn normalized_hermitian<M: PhaseMode>(g: &MixedGraph, mode: &M) -> Result<FieldMatrix<M::S>> {
    Walk::new(g, mode).normalized_hermitian()
}

pub fn random_walk_hermitian<M: PhaseMode>(g: &MixedGraph, mode: &M) -> FieldMatrix<M::S> {
    Walk::new(g, mode).random_walk_hermitian()
}

pub fn coin_matrix<M: PhaseMode>(g: &MixedGraph, mode: &M) -> FieldMatrix<M::S> {
    Walk::new(g, mode).coin()
}

pub fn shift_matrix<M: PhaseMode>(g: &MixedGraph, mode: &M) -> FieldMatrix<M::S> {
    Walk::new(g, mode).shift()
}

pub fn time_evolution<M: PhaseMode>(g: &MixedGraph, mode: &M) -> FieldMatrix<M::S> {
    Walk::new(g, mode).time_evolution()
}

/// Builds U_θ as S_θ C and checks it against the closed entry formula.
pub fn verify_entry_formula<M: PhaseMode>(g: &MixedGraph, mode: &M, tol: f64) -> bool {
    let w = Walk::new(g, mode);
    w.entry_formula_holds(&w.time_evolution(), tol)
}

/// K_{x,a} = [x = t(a)] / √deg x, in the canonical arc ordering.
pub fn boundary_matrix(g: &MixedGraph) -> NumericMatrix {
    let arcs = Arc::new(ArcOrdering::canonical(g));
    let list = arcs.arcs().to_vec();
    FieldMatrix::from_fn(IndexSpace::Vertices(g.n()), IndexSpace::Arcs(arcs), |x, j| {
        if list[j].terminus == x {
            Complex64::new(1.0 / (g.neighbors(x).len() as f64).sqrt(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// 2K*K − I.
pub fn coin_from_boundary(g: &MixedGraph) -> NumericMatrix {
    let k = boundary_matrix(g);
    let kk = k.conj_transpose().mul(&k).expect("K*K is square");
    let sp = kk.rows().clone();
    FieldMatrix::from_fn(sp.clone(), sp, |i, j| {
        let v = kk.get(i, j) * 2.0;
        if i == j {
            v - 1.0
        } else {
            v
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{self, EdgeOrientation};
    use crate::graph::EdgeClass::*;

    fn turn(a: i64, b: i64) -> Exact {
        Exact::from_rational(RationalAngle::new(a, b).unwrap())
    }

    fn int_matrix(m: &FieldMatrix<CycloElem>) -> Vec<Vec<i64>> {
        (0..m.nrows())
            .map(|i| {
                (0..m.ncols())
                    .map(|j| {
                        let q = m.get(i, j).as_rational().expect("rational entry");
                        assert!(q.is_integer());
                        q.to_integer().try_into().unwrap()
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn single_forward_arc() {
        let g = MixedGraph::build(2, &[(0, 1, Forward)]).unwrap();
        let h = hermitian_adjacency(&g, &turn(1, 4));
        assert!(h.get(0, 1).is_one() == false);
        assert_eq!(*h.get(0, 1), CycloElem::zeta(4));
        assert_eq!(*h.get(1, 0), CycloElem::zeta(4).conj());
        assert!(h.get(0, 0).is_zero());
        assert!(h.is_hermitian(0.0));
    }

    #[test]
    fn triangle_walk_matches_worked_example() {
        let g = families::undirected_cycle(3).unwrap();
        let u = time_evolution(&g, &turn(1, 7));
        let expected = vec![
            vec![0, 0, 1, 0, 0, 0],
            vec![1, 0, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 0],
            vec![0, 0, 0, 0, 0, 1],
            vec![0, 0, 0, 1, 0, 0],
        ];
        assert_eq!(int_matrix(&u), expected);
        let h = normalized_hermitian(&g, &turn(0, 1)).unwrap();
        assert_eq!(*h.get(0, 1), CycloElem::from_ratio_in(1, 1, 2));
    }

    #[test]
    fn single_edge_swaps() {
        let g = families::undirected_path(2).unwrap();
        let u = time_evolution(&g, &turn(0, 1));
        assert_eq!(int_matrix(&u), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn irregular_exact_normalization_refused() {
        let g = families::undirected_path(3).unwrap();
        assert!(matches!(
            normalized_hermitian(&g, &turn(0, 1)),
            Err(Error::NonRegularExactNormalization)
        ));
        let h = normalized_hermitian(&g, &Numeric::from_radians(0.3)).unwrap();
        assert!((h.get(0, 1).re - 1.0 / 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn entry_formula_and_negative_control() {
        let pattern = [
            EdgeOrientation::Forward,
            EdgeOrientation::Bidirected,
            EdgeOrientation::Bidirected,
        ];
        let g = families::cycle(3, &pattern).unwrap();
        let mode = turn(1, 6);
        assert!(verify_entry_formula(&g, &mode, 0.0));
        let w = Walk::new(&g, &mode);
        let mut u = w.time_evolution();
        let flipped = u.get(0, 2).negated();
        u.set(0, 2, flipped);
        assert!(!w.entry_formula_holds(&u, 0.0));
        assert!(verify_entry_formula(&g, &Numeric::from_radians(1.0), 1e-12));
    }

    #[test]
    fn coin_from_boundary_agrees() {
        let g = MixedGraph::build(4, &[(0, 1, Forward), (1, 2, Undirected), (1, 3, Forward), (2, 3, Undirected)])
            .unwrap();
        let exact = coin_matrix(&g, &turn(1, 3)).to_complex();
        assert!(exact.max_abs_diff(&coin_from_boundary(&g)) < 1e-12);
        let k = boundary_matrix(&g);
        assert_eq!((k.nrows(), k.ncols()), (4, 8));
    }

    #[test]
    fn exact_and_numeric_agree() {
        let g = families::complete(4, &families::orientations_from_index(100, 6)).unwrap();
        let angle = RationalAngle::new(2, 5).unwrap();
        let e = time_evolution(&g, &Exact::from_rational(angle)).to_complex();
        let n = time_evolution(&g, &Numeric::new(&Angle::Rational(angle)));
        assert!(e.max_abs_diff(&n) < 1e-12);
    }
}
