use std::collections::HashMap;

use super::MixedGraph;
use crate::error::{Error, Result};

/// An element of A^±(G). `sign` is +1 on A∖A⁻¹, −1 on A⁻¹∖A and 0 on A∩A⁻¹,
/// so the η-function is θ(a) = sign·η.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SymmetricArc {
    pub origin: usize,
    pub terminus: usize,
    pub sign: i8,
}

impl SymmetricArc {
    pub fn reverse(&self) -> Self {
        SymmetricArc {
            origin: self.terminus,
            terminus: self.origin,
            sign: -self.sign,
        }
    }
}

/// A fixed listing of all 2m symmetric arcs; rows and columns of every
/// arc-indexed matrix follow it.
#[derive(Clone, Debug)]
pub struct ArcOrdering {
    arcs: Vec<SymmetricArc>,
    position: HashMap<(usize, usize), usize>,
    reverse: Vec<usize>,
}

impl PartialEq for ArcOrdering {
    fn eq(&self, other: &Self) -> bool {
        self.arcs == other.arcs
    }
}

impl Eq for ArcOrdering {}

impl ArcOrdering {
    fn from_list(arcs: Vec<SymmetricArc>) -> Self {
        let position: HashMap<_, _> = arcs
            .iter()
            .enumerate()
            .map(|(i, a)| ((a.origin, a.terminus), i))
            .collect();
        let reverse = arcs
            .iter()
            .map(|a| position[&(a.terminus, a.origin)])
            .collect();
        ArcOrdering {
            arcs,
            position,
            reverse,
        }
    }

    fn arc(g: &MixedGraph, origin: usize, terminus: usize) -> SymmetricArc {
        SymmetricArc {
            origin,
            terminus,
            sign: g.arc_sign(origin, terminus).expect("arc of the graph"),
        }
    }

    /// Each edge's reference arc (the arc of A for a one-directional edge, the
    /// supplied direction for an undirected one), sorted by (origin,
    /// terminus), followed by the reversals of those arcs in the same order.
    /// For the undirected triangle given as 0–1, 1–2, 2–0 this lists
    /// (0,1),(1,2),(2,0),(1,0),(2,1),(0,2).
    pub fn canonical(g: &MixedGraph) -> Self {
        let mut forward: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        forward.sort_unstable();
        let mut arcs: Vec<SymmetricArc> = forward
            .iter()
            .map(|&(o, t)| Self::arc(g, o, t))
            .collect();
        let back: Vec<SymmetricArc> = arcs.iter().map(SymmetricArc::reverse).collect();
        arcs.extend(back);
        Self::from_list(arcs)
    }

    /// Arcs sorted by (min endpoint, max endpoint), low → high first.
    pub fn by_endpoints(g: &MixedGraph) -> Self {
        let mut pairs: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|e| (e.u.min(e.v), e.u.max(e.v)))
            .collect();
        pairs.sort_unstable();
        let arcs = pairs
            .into_iter()
            .flat_map(|(lo, hi)| [Self::arc(g, lo, hi), Self::arc(g, hi, lo)])
            .collect();
        Self::from_list(arcs)
    }

    /// A caller-supplied listing; must contain every symmetric arc of `g`
    /// exactly once.
    pub fn from_arcs(g: &MixedGraph, list: &[(usize, usize)]) -> Result<Self> {
        if list.len() != 2 * g.edge_count() {
            return Err(Error::BadParameters(format!(
                "expected {} arcs, got {}",
                2 * g.edge_count(),
                list.len()
            )));
        }
        let mut arcs = Vec::with_capacity(list.len());
        let mut seen = std::collections::HashSet::new();
        for &(o, t) in list {
            if g.arc_sign(o, t).is_none() || !seen.insert((o, t)) {
                return Err(Error::BadParameters(format!(
                    "({o}, {t}) is not a fresh symmetric arc of the graph"
                )));
            }
            arcs.push(Self::arc(g, o, t));
        }
        Ok(Self::from_list(arcs))
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn arcs(&self) -> &[SymmetricArc] {
        &self.arcs
    }

    pub fn get(&self, i: usize) -> SymmetricArc {
        self.arcs[i]
    }

    pub fn index_of(&self, origin: usize, terminus: usize) -> Option<usize> {
        self.position.get(&(origin, terminus)).copied()
    }

    /// Index of a⁻¹ for the arc at index `i`.
    pub fn reverse_index(&self, i: usize) -> usize {
        self.reverse[i]
    }
}

/// A^±(G) in canonical order.
pub fn symmetric_arcs(g: &MixedGraph) -> ArcOrdering {
    ArcOrdering::canonical(g)
}
