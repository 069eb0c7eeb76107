use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::corpus::{random_orientations, random_regular_mixed};
use super::{run_experiment, Expectation, ExperimentReport, Instance};
use crate::cyclo::{is_prime, Angle, RationalAngle};
use crate::error::{Error, Result};
use crate::graph::families::{self, complete_pairs, orientations_from_index, EdgeOrientation};
use crate::graph::MixedGraph;
use crate::periodicity::DecideOptions;

pub const MAX_COMPLETE_N: usize = 5;
pub const MAX_KNOWN_ARCS: usize = 400;
pub const MAX_SCAN_PRIME: u64 = 13;
const EXHAUSTIVE_CYCLE_MAX: u64 = 7;

fn digits(pattern: &[EdgeOrientation]) -> String {
    pattern.iter().map(|o| o.digit().to_string()).collect()
}

/// Every orientation assignment of K_n, indexed in base 3.
pub fn enumerate_complete(n: usize, eta: Angle, opts: &DecideOptions) -> Result<ExperimentReport> {
    if n > MAX_COMPLETE_N {
        return Err(Error::NTooLarge(n, MAX_COMPLETE_N));
    }
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    let pairs = complete_pairs(n).len();
    let count = 3u64.pow(pairs as u32);
    let expected = match (n, eta) {
        (2, _) => Expectation::Periodic,
        (3, Angle::Rational(_)) => Expectation::Periodic,
        (3, Angle::Float(_)) => Expectation::NotPeriodicOrUndecided,
        _ => Expectation::NotPeriodic,
    };
    run_experiment(
        "enumerate-complete",
        json!({"n": n, "eta": eta.to_string(), "instances": count}),
        count,
        |i| {
            let pattern = orientations_from_index(i, pairs);
            Ok(Instance {
                index: i,
                label: format!("K{n}:{}", digits(&pattern)),
                graph: families::complete(n, &pattern)?,
                eta,
                expected,
            })
        },
        opts,
    )
}

/// Undirected families believed periodic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnownFamily {
    Cycle(usize),
    CompleteBipartite(usize, usize),
    Multipartite(Vec<usize>),
    Hamming(usize, usize),
}

impl KnownFamily {
    /// `family` is one of cycle, complete-bipartite, multipartite, hamming;
    /// `params` a comma-separated list.
    pub fn parse(family: &str, params: &str) -> Result<Self> {
        let nums = params
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::BadParameters(format!("bad parameter {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let arity = |k: usize| {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::BadParameters(format!(
                    "{family} takes {k} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        match family {
            "cycle" => arity(1).map(|_| KnownFamily::Cycle(nums[0])),
            "complete-bipartite" => arity(2).map(|_| KnownFamily::CompleteBipartite(nums[0], nums[1])),
            "multipartite" => Ok(KnownFamily::Multipartite(nums)),
            "hamming" => arity(2).map(|_| KnownFamily::Hamming(nums[0], nums[1])),
            other => Err(Error::BadParameters(format!("unknown family {other:?}"))),
        }
    }

    pub fn build(&self) -> Result<MixedGraph> {
        match self {
            KnownFamily::Cycle(n) => families::undirected_cycle(*n),
            KnownFamily::CompleteBipartite(a, b) => families::complete_bipartite(*a, *b),
            KnownFamily::Multipartite(parts) => families::complete_multipartite(parts),
            KnownFamily::Hamming(d, q) => families::hamming(*d, *q),
        }
    }
}

impl fmt::Display for KnownFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnownFamily::Cycle(n) => write!(f, "C_{n}"),
            KnownFamily::CompleteBipartite(a, b) => write!(f, "K_{{{a},{b}}}"),
            KnownFamily::Multipartite(p) => {
                let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                write!(f, "K_{{{}}}", parts.join(","))
            }
            KnownFamily::Hamming(d, q) => write!(f, "H({d},{q})"),
        }
    }
}

impl FromStr for KnownFamily {
    type Err = Error;

    /// `family:params`, e.g. `hamming:3,3`.
    fn from_str(s: &str) -> Result<Self> {
        let (family, params) = s
            .split_once(':')
            .ok_or_else(|| Error::BadParameters(format!("expected family:params, got {s:?}")))?;
        Self::parse(family, params)
    }
}

/// Decide each family member (η = 0; the graphs are undirected).
pub fn verify_known(families: &[KnownFamily], opts: &DecideOptions) -> Result<ExperimentReport> {
    let graphs = families
        .iter()
        .map(|f| {
            let g = f.build()?;
            if 2 * g.edge_count() > MAX_KNOWN_ARCS {
                return Err(Error::BadParameters(format!(
                    "{f} has {} arcs, above the limit {MAX_KNOWN_ARCS}",
                    2 * g.edge_count()
                )));
            }
            Ok(g)
        })
        .collect::<Result<Vec<_>>>()?;
    let names: Vec<String> = families.iter().map(|f| f.to_string()).collect();
    run_experiment(
        "verify-known",
        json!({ "families": names }),
        graphs.len() as u64,
        |i| {
            Ok(Instance {
                index: i,
                label: names[i as usize].clone(),
                graph: graphs[i as usize].clone(),
                eta: Angle::Rational(RationalAngle::zero()),
                expected: Expectation::Periodic,
            })
        },
        opts,
    )
}

#[derive(Clone, Debug, PartialEq)]
pub struct PrimeScanOptions {
    pub samples: usize,
    /// Degrees for the regular non-cycle samples; empty means every k ≥ 3
    /// admitting a k-regular graph on p vertices.
    pub degrees: Vec<usize>,
    pub seed: u64,
}

impl Default for PrimeScanOptions {
    fn default() -> Self {
        PrimeScanOptions {
            samples: 10,
            degrees: Vec::new(),
            seed: 0x5eed,
        }
    }
}

/// Mixed cycles (or P_2) on p vertices, expected periodic, followed by
/// random k-regular mixed graphs, expected to fail 2n/k.
pub fn prime_scan(p: u64, eta: RationalAngle, scan: &PrimeScanOptions, opts: &DecideOptions) -> Result<ExperimentReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p > MAX_SCAN_PRIME {
        return Err(Error::BadParameters(format!("p = {p} above {MAX_SCAN_PRIME}")));
    }
    let n = p as usize;
    let degrees: Vec<usize> = if scan.degrees.is_empty() {
        (3..n).filter(|k| (n * k) % 2 == 0).collect()
    } else {
        scan.degrees.clone()
    };
    for &k in &degrees {
        if k <= 2 || k >= n || (n * k) % 2 != 0 {
            return Err(Error::BadParameters(format!("no non-cycle {k}-regular graph on {n} vertices")));
        }
    }
    let edges = if n == 2 { 1 } else { n };
    let cycle_count = if p <= EXHAUSTIVE_CYCLE_MAX {
        3u64.pow(edges as u32)
    } else {
        scan.samples as u64
    };
    let exhaustive = p <= EXHAUSTIVE_CYCLE_MAX;
    let total = cycle_count + (degrees.len() * scan.samples) as u64;
    let eta = Angle::Rational(eta);
    run_experiment(
        "prime-scan",
        json!({
            "p": p, "eta": eta.to_string(), "samples": scan.samples,
            "degrees": degrees, "seed": scan.seed, "exhaustive_cycles": exhaustive,
        }),
        total,
        |i| {
            let mut rng = ChaCha8Rng::seed_from_u64(scan.seed ^ i.wrapping_mul(0x9e37_79b9_7f4a_7c15));
            if i < cycle_count {
                let pattern = if exhaustive {
                    orientations_from_index(i, edges)
                } else {
                    random_orientations(&mut rng, edges)
                };
                let graph = if n == 2 {
                    families::path(2, &pattern)?
                } else {
                    families::cycle(n, &pattern)?
                };
                let name = if n == 2 { "P2" } else { "C" };
                return Ok(Instance {
                    index: i,
                    label: format!("{name}{}:{}", if n == 2 { String::new() } else { n.to_string() }, digits(&pattern)),
                    graph,
                    eta,
                    expected: Expectation::Periodic,
                });
            }
            let j = (i - cycle_count) as usize;
            let k = degrees[j / scan.samples];
            Ok(Instance {
                index: i,
                label: format!("{k}-regular#{}", j % scan.samples),
                graph: random_regular_mixed(&mut rng, n, k)?,
                eta,
                expected: Expectation::NotPeriodic,
            })
        },
        opts,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::periodicity::{Verdict, Witness};

    #[test]
    fn complete_three_rational() {
        let r = enumerate_complete(3, Angle::turn(1, 6).unwrap(), &DecideOptions::default()).unwrap();
        assert_eq!(r.rows.len(), 27);
        assert!(r.consistent);
        assert_eq!(r.aggregate.summary, "all 27 periodic");
        assert!(r.is_self_consistent());
    }

    #[test]
    fn complete_bounds() {
        let o = DecideOptions::default();
        assert!(matches!(enumerate_complete(6, Angle::turn(1, 4).unwrap(), &o), Err(Error::NTooLarge(6, 5))));
        let r = enumerate_complete(2, Angle::Float(0.3), &o).unwrap();
        assert_eq!((r.rows.len(), r.aggregate.periodic), (3, 3));
    }

    #[test]
    fn known_parse() {
        assert_eq!("hamming:4,2".parse::<KnownFamily>().unwrap(), KnownFamily::Hamming(4, 2));
        assert_eq!(
            KnownFamily::parse("multipartite", "2,2,2").unwrap(),
            KnownFamily::Multipartite(vec![2, 2, 2])
        );
        assert!(KnownFamily::parse("cycle", "3,4").is_err());
        assert!(KnownFamily::parse("petersen", "1").is_err());
        let big = verify_known(&[KnownFamily::Hamming(4, 3)], &DecideOptions::default());
        assert!(matches!(big, Err(Error::BadParameters(_))));
    }

    #[test]
    fn known_square() {
        let r = verify_known(&[KnownFamily::CompleteBipartite(2, 2)], &DecideOptions::default()).unwrap();
        let row = &r.rows[0];
        assert_eq!((row.report.verdict, row.report.tau), (Verdict::Periodic, Some(4)));
        assert_eq!(row.graph.two_n_over_k.as_deref(), Some("4"));
        assert_eq!(row.graph.sixteen_t_over_k3.as_deref(), Some("0"));
    }

    #[test]
    fn prime_five() {
        let scan = PrimeScanOptions {
            samples: 4,
            ..Default::default()
        };
        let r = prime_scan(5, RationalAngle::new(1, 6).unwrap(), &scan, &DecideOptions::default()).unwrap();
        assert_eq!(r.rows.len(), 243 + 4);
        assert!(r.consistent);
        assert!(r.rows[243..]
            .iter()
            .all(|row| matches!(row.report.witness, Some(Witness::TwoNOverK { n: 5, k: 4 }))));
        assert!(matches!(
            prime_scan(9, RationalAngle::zero(), &scan, &DecideOptions::default()),
            Err(Error::NotPrime(9))
        ));
    }
}
