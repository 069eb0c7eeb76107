//! Seeded random mixed graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::families::{complete_pairs, oriented, EdgeOrientation};
use crate::graph::MixedGraph;

pub fn random_orientations<R: Rng>(rng: &mut R, len: usize) -> Vec<EdgeOrientation> {
    (0..len)
        .map(|_| EdgeOrientation::ALL[rng.gen_range(0..3)])
        .collect()
}

/// A random spanning tree on 0..n plus every other pair with probability
/// `p`, each edge oriented uniformly among the three classes.
pub fn random_mixed_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Result<MixedGraph> {
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut pairs: Vec<(usize, usize)> = (1..n)
        .map(|i| {
            let j = rng.gen_range(0..i);
            let (a, b) = (order[i], order[j]);
            (a.min(b), a.max(b))
        })
        .collect();
    for (u, v) in complete_pairs(n) {
        if !pairs.contains(&(u, v)) && rng.gen_bool(p) {
            pairs.push((u, v));
        }
    }
    pairs.sort_unstable();
    let pattern = random_orientations(rng, pairs.len());
    oriented(n, &pairs, &pattern)
}

fn pairing_attempt<R: Rng>(rng: &mut R, n: usize, k: usize) -> Option<Vec<(usize, usize)>> {
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(k)).collect();
    points.shuffle(rng);
    let mut pairs: Vec<(usize, usize)> = points
        .chunks(2)
        .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
        .collect();
    pairs.sort_unstable();
    let simple = pairs.iter().all(|&(u, v)| u != v) && pairs.windows(2).all(|w| w[0] != w[1]);
    simple.then_some(pairs)
}

/// Edge list of a uniformly paired simple k-regular graph on n vertices.
pub fn random_regular_pairs<R: Rng>(rng: &mut R, n: usize, k: usize) -> Result<Vec<(usize, usize)>> {
    if k >= n || (n * k) % 2 != 0 {
        return Err(Error::BadParameters(format!("no simple {k}-regular graph on {n} vertices")));
    }
    let dense = 2 * k > n - 1;
    let k_eff = if dense { n - 1 - k } else { k };
    for _ in 0..100_000 {
        if let Some(pairs) = pairing_attempt(rng, n, k_eff) {
            if !dense {
                return Ok(pairs);
            }
            return Ok(complete_pairs(n)
                .into_iter()
                .filter(|p| pairs.binary_search(p).is_err())
                .collect());
        }
    }
    Err(Error::BadParameters(format!("pairing model kept failing for k = {k}, n = {n}")))
}

/// A weakly connected k-regular mixed graph with random orientations.
pub fn random_regular_mixed<R: Rng>(rng: &mut R, n: usize, k: usize) -> Result<MixedGraph> {
    loop {
        let pairs = random_regular_pairs(rng, n, k)?;
        let pattern = random_orientations(rng, pairs.len());
        match oriented(n, &pairs, &pattern) {
            Err(Error::Disconnected) => continue,
            other => return other,
        }
    }
}

/// `count` graphs on 2..=max_n vertices: three in four from
/// [`random_mixed_graph`], the rest regular.
pub fn corpus(count: usize, max_n: usize, seed: u64) -> Result<Vec<MixedGraph>> {
    if max_n < 2 {
        return Err(Error::TooFewVertices(max_n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(2..=max_n);
            if i % 4 == 3 && n >= 3 {
                let ks: Vec<usize> = (2..n).filter(|k| (n * k) % 2 == 0).collect();
                let k = *ks.choose(&mut rng).expect("k = 2 is always admissible");
                random_regular_mixed(&mut rng, n, k)
            } else {
                let p = rng.gen_range(0.1..0.7);
                random_mixed_graph(&mut rng, n, p)
            }
        })
        .collect()
}
