//! Named graph families: mixed cycles, paths and complete graphs, plus the
//! undirected complete bipartite, complete multipartite and Hamming graphs.

use super::{Edge, EdgeClass, MixedGraph, MAX_VERTICES};
use crate::error::{Error, Result};

/// How a listed edge (u, v) is realized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeOrientation {
    Bidirected,
    /// u → v only
    Forward,
    /// v → u only
    Backward,
}

impl EdgeOrientation {
    pub const ALL: [EdgeOrientation; 3] = [
        EdgeOrientation::Bidirected,
        EdgeOrientation::Forward,
        EdgeOrientation::Backward,
    ];

    /// Base-3 digit: 0 bidirected, 1 u→v, 2 v→u.
    pub fn from_digit(d: u64) -> Self {
        Self::ALL[(d % 3) as usize]
    }

    pub fn digit(self) -> u64 {
        match self {
            EdgeOrientation::Bidirected => 0,
            EdgeOrientation::Forward => 1,
            EdgeOrientation::Backward => 2,
        }
    }

    fn edge(self, u: usize, v: usize) -> Edge {
        match self {
            EdgeOrientation::Bidirected => Edge {
                u,
                v,
                class: EdgeClass::Undirected,
            },
            EdgeOrientation::Forward => Edge {
                u,
                v,
                class: EdgeClass::Forward,
            },
            EdgeOrientation::Backward => Edge {
                u: v,
                v: u,
                class: EdgeClass::Forward,
            },
        }
    }
}

/// Orientation list encoded by `index` in base 3; digit i (least
/// significant first) belongs to edge i.
pub fn orientations_from_index(mut index: u64, len: usize) -> Vec<EdgeOrientation> {
    (0..len)
        .map(|_| {
            let d = index % 3;
            index /= 3;
            EdgeOrientation::from_digit(d)
        })
        .collect()
}

pub fn orientation_index(pattern: &[EdgeOrientation]) -> u64 {
    pattern.iter().rev().fold(0, |acc, o| acc * 3 + o.digit())
}

/// Realize each listed pair with the matching orientation.
pub fn oriented(
    n: usize,
    pairs: &[(usize, usize)],
    pattern: &[EdgeOrientation],
) -> Result<MixedGraph> {
    if pattern.len() != pairs.len() {
        return Err(Error::BadParameters(format!(
            "expected {} edge orientations, got {}",
            pairs.len(),
            pattern.len()
        )));
    }
    let edges = pairs
        .iter()
        .zip(pattern)
        .map(|(&(u, v), o)| o.edge(u, v))
        .collect();
    MixedGraph::from_edges(n, edges)
}

/// Edges {i, i+1 mod n} for i = 0..n.
pub fn cycle_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

pub fn cycle(n: usize, pattern: &[EdgeOrientation]) -> Result<MixedGraph> {
    if n < 3 {
        return Err(Error::BadParameters(format!("cycle needs n >= 3, got {n}")));
    }
    oriented(n, &cycle_pairs(n), pattern)
}

pub fn undirected_cycle(n: usize) -> Result<MixedGraph> {
    cycle(n, &vec![EdgeOrientation::Bidirected; n])
}

pub fn path(n: usize, pattern: &[EdgeOrientation]) -> Result<MixedGraph> {
    if n < 2 {
        return Err(Error::BadParameters(format!("path needs n >= 2, got {n}")));
    }
    let pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    oriented(n, &pairs, pattern)
}

pub fn undirected_path(n: usize) -> Result<MixedGraph> {
    path(n, &vec![EdgeOrientation::Bidirected; n.saturating_sub(1)])
}

/// Pairs (u, v), u < v, in lexicographic order.
pub fn complete_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

pub fn complete(n: usize, assignment: &[EdgeOrientation]) -> Result<MixedGraph> {
    if n < 2 {
        return Err(Error::BadParameters(format!(
            "complete graph needs n >= 2, got {n}"
        )));
    }
    oriented(n, &complete_pairs(n), assignment)
}

pub fn complete_undirected(n: usize) -> Result<MixedGraph> {
    complete(n, &vec![EdgeOrientation::Bidirected; n * n.saturating_sub(1) / 2])
}

fn undirected(n: usize, pairs: Vec<(usize, usize)>) -> Result<MixedGraph> {
    MixedGraph::from_edges(
        n,
        pairs
            .into_iter()
            .map(|(u, v)| EdgeOrientation::Bidirected.edge(u, v))
            .collect(),
    )
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<MixedGraph> {
    if a == 0 || b == 0 {
        return Err(Error::BadParameters(format!(
            "K_{{{a},{b}}} needs both sides non-empty"
        )));
    }
    complete_multipartite(&[a, b])
}

pub fn complete_multipartite(parts: &[usize]) -> Result<MixedGraph> {
    if parts.len() < 2 || parts.contains(&0) {
        return Err(Error::BadParameters(format!(
            "complete multipartite graph needs at least two non-empty parts, got {parts:?}"
        )));
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(p).take(size));
    }
    let pairs = complete_pairs(n)
        .into_iter()
        .filter(|&(u, v)| part_of[u] != part_of[v])
        .collect();
    undirected(n, pairs)
}

/// H(d, q): words of length d over q symbols, adjacent at Hamming distance 1.
pub fn hamming(d: usize, q: usize) -> Result<MixedGraph> {
    if d == 0 || q < 2 {
        return Err(Error::BadParameters(format!(
            "H({d},{q}) needs d >= 1 and q >= 2"
        )));
    }
    let n = (q as u64)
        .checked_pow(d as u32)
        .filter(|&n| n <= MAX_VERTICES as u64)
        .ok_or_else(|| Error::BadParameters(format!("H({d},{q}) is too large")))?
        as usize;
    let digits = |mut x: usize| {
        (0..d)
            .map(|_| {
                let r = x % q;
                x /= q;
                r
            })
            .collect::<Vec<_>>()
    };
    let words: Vec<Vec<usize>> = (0..n).map(digits).collect();
    let pairs = complete_pairs(n)
        .into_iter()
        .filter(|&(u, v)| words[u].iter().zip(&words[v]).filter(|(a, b)| a != b).count() == 1)
        .collect();
    undirected(n, pairs)
}
