//! Mixed graphs: undirected edges and one-directional arcs on a vertex set
//! 0..n, always weakly connected.

mod arcs;
pub mod families;
mod io;

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use arcs::{symmetric_arcs, ArcOrdering, SymmetricArc};
pub use io::GraphFile;

pub const MAX_VERTICES: usize = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeClass {
    /// Both (u, v) and (v, u) are arcs.
    Undirected,
    /// Only (u, v) is an arc.
    Forward,
}

/// One edge of the underlying graph as it was supplied. For a forward edge
/// the direction is u → v; for an undirected edge (u, v) only fixes which
/// arc is listed first in the canonical arc ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub class: EdgeClass,
}

/// Orientation class of an adjacent pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Bidirected,
    Forward { from: usize, to: usize },
}

#[derive(Clone, Debug)]
pub struct MixedGraph {
    n: usize,
    edges: Vec<Edge>,
    lookup: HashMap<(usize, usize), usize>,
    neighbors: Vec<Vec<usize>>,
}

fn pair_key(x: usize, y: usize) -> (usize, usize) {
    (x.min(y), x.max(y))
}

impl MixedGraph {
    pub fn build(n: usize, arcs: &[(usize, usize, EdgeClass)]) -> Result<Self> {
        Self::from_edges(
            n,
            arcs.iter()
                .map(|&(u, v, class)| Edge { u, v, class })
                .collect(),
        )
    }

    pub fn from_edges(n: usize, edges: Vec<Edge>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewVertices(n));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n, MAX_VERTICES));
        }
        let mut lookup = HashMap::with_capacity(edges.len());
        let mut neighbors = vec![Vec::new(); n];
        for (idx, e) in edges.iter().enumerate() {
            for vertex in [e.u, e.v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if e.u == e.v {
                return Err(Error::SelfLoop(e.u));
            }
            let key = pair_key(e.u, e.v);
            if lookup.insert(key, idx).is_some() {
                return Err(Error::DuplicatePair(key.0, key.1));
            }
            neighbors[e.u].push(e.v);
            neighbors[e.v].push(e.u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        let g = MixedGraph {
            n,
            edges,
            lookup,
            neighbors,
        };
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &self.neighbors[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count == self.n
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// |E(G^±)|
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.neighbors[x]
    }

    pub fn orientation(&self, x: usize, y: usize) -> Option<Orientation> {
        let e = self.edges[*self.lookup.get(&pair_key(x, y))?];
        Some(match e.class {
            EdgeClass::Undirected => Orientation::Bidirected,
            EdgeClass::Forward => Orientation::Forward { from: e.u, to: e.v },
        })
    }

    /// +1 if (x, y) ∈ A∖A⁻¹, −1 if (x, y) ∈ A⁻¹∖A, 0 if both directions
    /// are arcs; `None` when x and y are not adjacent.
    pub fn arc_sign(&self, x: usize, y: usize) -> Option<i8> {
        Some(match self.orientation(x, y)? {
            Orientation::Bidirected => 0,
            Orientation::Forward { from, .. } if from == x => 1,
            Orientation::Forward { .. } => -1,
        })
    }

    pub fn degree(&self, x: usize) -> Result<usize> {
        self.neighbors
            .get(x)
            .map(Vec::len)
            .ok_or(Error::VertexOutOfRange {
                vertex: x,
                n: self.n,
            })
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    /// Some(k) iff every vertex has degree k in the underlying graph.
    pub fn is_regular(&self) -> Option<usize> {
        let k = self.neighbors[0].len();
        self.neighbors.iter().all(|l| l.len() == k).then_some(k)
    }

    pub fn is_undirected(&self) -> bool {
        self.edges.iter().all(|e| e.class == EdgeClass::Undirected)
    }

    /// G^± with the supplied edge directions kept as reference directions.
    pub fn underlying(&self) -> MixedGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                class: EdgeClass::Undirected,
                ..*e
            })
            .collect();
        MixedGraph {
            edges,
            ..self.clone()
        }
    }

    /// Number of triangles of G^±, as Tr(A³)/6.
    pub fn triangle_count(&self) -> u64 {
        // Tr(A³) = Σ_x Σ_{y ~ x} |N(x) ∩ N(y)|
        let mut trace = 0u64;
        for x in 0..self.n {
            for &y in &self.neighbors[x] {
                trace += sorted_intersection_len(&self.neighbors[x], &self.neighbors[y]) as u64;
            }
        }
        trace / 6
    }
}

fn sorted_intersection_len(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

impl PartialEq for MixedGraph {
    fn eq(&self, other: &Self) -> bool {
        let sorted = |g: &MixedGraph| {
            let mut e = g.edges.clone();
            e.sort_by_key(|e| (pair_key(e.u, e.v), e.u, e.class == EdgeClass::Forward));
            e
        };
        self.n == other.n && sorted(self) == sorted(other)
    }
}
