mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::sample::Index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use mixed_walk::charpoly::{
    charpoly, graph_polys, index_set, psi_by_index_sets, psi_by_substitution, spectral_map_check,
};
use mixed_walk::cyclo::{totient, Angle, CycloElem, RationalAngle};
use mixed_walk::experiments::corpus::random_regular_mixed;
use mixed_walk::experiments::{enumerate_complete, Aggregate};
use mixed_walk::graph::families::{self, complete_pairs, EdgeOrientation};
use mixed_walk::graph::{ArcOrdering, Edge, EdgeClass, MixedGraph};
use mixed_walk::matrices::{exact_power_is_identity, Exact, Numeric, Walk};
use mixed_walk::periodicity::{
    check_16t, check_2nk, decide_exact, decide_periodicity, DecideOptions, Method, Verdict,
};

use common::*;

/// Weakly connected mixed graphs: a random spanning tree plus random
/// extra pairs, every edge in a random class.
fn mixed_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = MixedGraph> {
    (min_n..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (
                Just(n),
                prop::collection::vec(any::<Index>(), n - 1),
                prop::collection::vec(0u8..4, pairs),
            )
        })
        .prop_map(|(n, parents, mut classes)| {
            let pairs = complete_pairs(n);
            for (i, parent) in parents.iter().enumerate() {
                let child = i + 1;
                let p = parent.index(child);
                let slot = pairs.iter().position(|&e| e == (p, child)).unwrap();
                if classes[slot] == 0 {
                    classes[slot] = 1;
                }
            }
            let edges = pairs
                .iter()
                .zip(&classes)
                .filter_map(|(&(u, v), &c)| match c {
                    0 => None,
                    1 => Some(Edge { u, v, class: EdgeClass::Undirected }),
                    2 => Some(Edge { u, v, class: EdgeClass::Forward }),
                    _ => Some(Edge { u: v, v: u, class: EdgeClass::Forward }),
                })
                .collect();
            MixedGraph::from_edges(n, edges).expect("spanning tree keeps it connected")
        })
}

fn undirected_graph(max_n: usize) -> impl Strategy<Value = MixedGraph> {
    mixed_graph(2, max_n).prop_map(|g| g.underlying())
}

fn angle() -> impl Strategy<Value = RationalAngle> {
    prop_oneof![
        3 => prop::sample::select(vec![(0, 1), (1, 4), (1, 6), (1, 5)]),
        1 => (1i64..12).prop_flat_map(|b| (0..b, Just(b))),
    ]
    .prop_map(|(a, b)| RationalAngle::new(a, b).unwrap())
}

fn elem(max_m: u64) -> impl Strategy<Value = CycloElem> {
    (1..=max_m).prop_flat_map(|m| {
        let phi = totient(m) as usize;
        prop::collection::vec((-5i64..=5, prop::sample::select(vec![1i64, 1, 1, 2, 3])), phi).prop_map(
            move |cs| {
                let q: Vec<BigRational> = cs.iter().map(|&(n, d)| rat(n, d)).collect();
                CycloElem::from_coeffs(m, &q)
            },
        )
    })
}

fn integral_elem(max_m: u64) -> impl Strategy<Value = CycloElem> {
    (1..=max_m).prop_flat_map(|m| {
        prop::collection::vec(-5i64..=5, totient(m) as usize).prop_map(move |cs| {
            let q: Vec<BigRational> = cs.iter().map(|&n| rat(n, 1)).collect();
            CycloElem::from_coeffs(m, &q)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn handshaking(g in mixed_graph(2, 9)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn arc_reversal(g in mixed_graph(2, 8)) {
        for ord in [ArcOrdering::canonical(&g), ArcOrdering::by_endpoints(&g)] {
            for (i, a) in ord.arcs().iter().enumerate() {
                prop_assert_eq!(a.reverse().reverse(), *a);
                let back = ord.reverse_index(i);
                prop_assert_eq!(ord.get(back), a.reverse());
                prop_assert_eq!(
                    g.arc_sign(a.origin, a.terminus).unwrap(),
                    -g.arc_sign(a.terminus, a.origin).unwrap()
                );
            }
        }
    }

    #[test]
    fn triangle_oracle(g in mixed_graph(2, 8)) {
        prop_assert_eq!(g.triangle_count(), triangles_by_triples(&g));
    }

    #[test]
    fn complete_builder_faithful(n in 2usize..7, seed in any::<u64>()) {
        let pairs = complete_pairs(n);
        let pattern = families::orientations_from_index(seed % 3u64.pow(pairs.len() as u32), pairs.len());
        let g = families::complete(n, &pattern).unwrap();
        for (&(u, v), o) in pairs.iter().zip(&pattern) {
            let want = match o {
                EdgeOrientation::Bidirected => 0,
                EdgeOrientation::Forward => 1,
                EdgeOrientation::Backward => -1,
            };
            prop_assert_eq!(g.arc_sign(u, v), Some(want));
        }
    }

    #[test]
    fn field_axioms(a in elem(12), b in elem(12), c in elem(12)) {
        prop_assert_eq!(a.add_ref(&b).add_ref(&c), a.add_ref(&b.add_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        if !a.is_zero() {
            prop_assert!(a.mul_ref(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn conjugation(a in elem(12), b in elem(12)) {
        prop_assert_eq!(a.mul_ref(&b).conj(), a.conj().mul_ref(&b.conj()));
        prop_assert!((a.conj().to_complex() - a.to_complex().conj()).norm() <= 1e-10);
    }

    #[test]
    fn integers_form_a_ring(a in integral_elem(12), b in integral_elem(12), c in elem(12)) {
        prop_assert!(a.is_algebraic_integer() && b.is_algebraic_integer());
        prop_assert!(a.add_ref(&b).is_algebraic_integer());
        prop_assert!(a.mul_ref(&b).is_algebraic_integer());
        if c.is_algebraic_integer() {
            prop_assert!(c.mul_ref(&a).add_ref(&b).is_algebraic_integer());
        }
    }

    #[test]
    fn walk_matrices(g in mixed_graph(2, 6), r in angle()) {
        let mode = Exact::from_rational(r);
        let w = Walk::new(&g, &mode);
        let c = w.coin();
        prop_assert!(c.mul(&c).unwrap().is_identity(0.0));
        prop_assert!(c.is_hermitian(0.0));
        prop_assert!(w.shift().is_unitary(0.0));
        let u = w.time_evolution();
        prop_assert!(u.is_unitary(0.0));
        let un = Walk::new(&g, &Numeric::from_radians(r.radians())).time_evolution();
        prop_assert!(u.to_complex().max_abs_diff(&un) <= 1e-12);
    }

    #[test]
    fn undirected_walk_ignores_eta(g in undirected_graph(6), r in angle(), s in angle()) {
        let u = Walk::new(&g, &Exact::from_rational(r)).time_evolution();
        let v = Walk::new(&g, &Exact::from_rational(s)).time_evolution();
        prop_assert_eq!(u.entries(), v.entries());
        let f = charpoly(&Walk::new(&g, &Exact::from_rational(r)).hermitian_adjacency()).unwrap();
        let h = charpoly(&Walk::new(&g, &Exact::from_rational(s)).hermitian_adjacency()).unwrap();
        prop_assert_eq!(f, h);
    }

    #[test]
    fn underlying_adjacency(g in mixed_graph(2, 7), r in angle()) {
        let h = Walk::new(&g.underlying(), &Exact::from_rational(r)).hermitian_adjacency();
        for x in 0..g.n() {
            for y in 0..g.n() {
                let want = CycloElem::from_int(adjacent(&g, x, y) as i64);
                prop_assert_eq!(h.get(x, y), &want);
            }
        }
    }

    #[test]
    fn spectral_map_and_dual_route(g in mixed_graph(2, 7), r in angle()) {
        let mode = Exact::from_rational(r);
        prop_assert!(spectral_map_check(&g, &mode).unwrap());
        let gp = graph_polys(&g, &mode).unwrap();
        prop_assert_eq!(
            psi_by_substitution(&gp.g, g.n()).unwrap(),
            psi_by_index_sets(&gp.g, g.n()).unwrap()
        );
    }

    #[test]
    fn undirected_coefficients(g in undirected_graph(8)) {
        let f = graph_polys(&g, &Exact::from_rational(RationalAngle::zero())).unwrap().f;
        let n = g.n() as isize;
        prop_assert_eq!(f.coeff(n - 2), CycloElem::from_int(-(g.edge_count() as i64)));
        prop_assert_eq!(f.coeff(n - 3), CycloElem::from_int(-2 * triangles_by_triples(&g) as i64));
    }

    #[test]
    fn regular_coefficients(n in 4usize..9, k_pick in any::<Index>(), seed in any::<u64>(), r in angle()) {
        let ks: Vec<usize> = (2..n).filter(|k| (n * k) % 2 == 0).collect();
        let k = ks[k_pick.index(ks.len())];
        let g = random_regular_mixed(&mut ChaCha8Rng::seed_from_u64(seed), n, k).unwrap();
        let gp = graph_polys(&g, &Exact::from_rational(r)).unwrap();
        for i in 0..=n {
            let scale = BigInt::from(k).pow((n - i) as u32);
            prop_assert_eq!(gp.g.coeff(i as isize).scale_int(&scale), gp.f.coeff(i as isize));
        }
    }

    #[test]
    fn periodic_verdicts_are_sound(g in mixed_graph(2, 6), r in angle()) {
        let rep = decide_periodicity(&g, &Angle::Rational(r), &DecideOptions::default()).unwrap();
        if rep.verdict == Verdict::Periodic {
            let tau = rep.tau.unwrap();
            prop_assert!(tau >= 1);
            let eff = if g.is_undirected() { RationalAngle::zero() } else { r };
            let u = Walk::new(&g, &Exact::from_rational(eff)).time_evolution();
            prop_assert!(exact_power_is_identity(&u, tau));
            prop_assert!(exact_power_is_identity(&u, 2 * tau));
            for s in 1..tau {
                prop_assert!(!exact_power_is_identity(&u, s), "U^{} = I below tau = {}", s, tau);
            }
            prop_assert!(!matches!(check_2nk(&g), Ok(false)));
            prop_assert!(!matches!(check_16t(&g), Ok(false)));
        }
    }

    #[test]
    fn exact_and_numeric_agree(g in mixed_graph(2, 6), quarter in any::<bool>()) {
        let r = RationalAngle::new(quarter as i64, 4).unwrap();
        let opts = DecideOptions::default();
        let exact = decide_periodicity(&g, &Angle::Rational(r), &opts).unwrap();
        let numeric = decide_periodicity(&g, &Angle::Float(r.radians()), &opts).unwrap();
        if exact.verdict == Verdict::Periodic {
            prop_assert_eq!(numeric.verdict, Verdict::Periodic);
            prop_assert_eq!(numeric.tau, exact.tau);
        } else {
            prop_assert_ne!(numeric.verdict, Verdict::Periodic);
        }
        if !g.is_undirected() && exact.method != Method::NecessaryCondition {
            prop_assert_eq!(numeric.method, Method::NumericRationalization);
        }
    }
}

#[test]
fn index_sets_partition() {
    for n in 0..=12usize {
        let mut seen = std::collections::BTreeSet::new();
        for j in 0..=2 * n {
            for p in index_set(n, j).unwrap() {
                assert!(p.l <= p.i && p.i <= n, "({}, {}) outside I", p.i, p.l);
                assert!(seen.insert((p.i, p.l)), "({}, {}) in two index sets", p.i, p.l);
            }
        }
        let all: std::collections::BTreeSet<_> =
            (0..=n).flat_map(|i| (0..=i).map(move |l| (i, l))).collect();
        assert_eq!(seen, all, "n = {n}");
    }
}

#[test]
fn exact_path_numeric_path_mixed_cycles() {
    let opts = DecideOptions::default();
    for i in 0..27 {
        let g = families::cycle(3, &families::orientations_from_index(i, 3)).unwrap();
        let r = RationalAngle::new(1, 4).unwrap();
        let e = decide_exact(&g, r, &opts).unwrap();
        let n = mixed_walk::periodicity::decide_numeric(&g, r.radians(), &opts).unwrap();
        assert_eq!((e.verdict, e.tau), (n.verdict, n.tau), "orientation {i}");
    }
}

#[test]
fn aggregates_recompute_from_json() {
    for (n, eta) in [(3, Angle::turn(1, 6).unwrap()), (4, Angle::turn(1, 4).unwrap()), (3, Angle::Float(1.0))] {
        let report = enumerate_complete(n, eta, &DecideOptions::default()).unwrap();
        assert!(report.is_self_consistent());
        assert_eq!(Aggregate::from_rows(&report.rows), report.aggregate);
        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        let rows = v["rows"].as_array().unwrap();
        assert_eq!(rows.len() as u64, v["aggregate"]["instances"].as_u64().unwrap());
        for (key, verdict) in [("periodic", "periodic"), ("not_periodic", "not_periodic"), ("undecided", "undecided_numeric")] {
            let count = rows.iter().filter(|r| r["report"]["verdict"] == verdict).count() as u64;
            assert_eq!(count, v["aggregate"][key].as_u64().unwrap(), "{key}");
        }
        let mismatches = rows.iter().filter(|r| r["matches"] == false).count();
        assert_eq!(v["consistent"].as_bool().unwrap(), mismatches == 0);
    }
}

#[test]
fn complete_three_partition() {
    let opts = DecideOptions::default();
    let rational = enumerate_complete(3, Angle::turn(1, 6).unwrap(), &opts).unwrap();
    assert_eq!(rational.aggregate.periodic, 27);
    // At a real angle exactly the orientations with no net flux around the
    // triangle stay periodic: they are gauge-equivalent to the undirected K_3.
    let float = enumerate_complete(3, Angle::Float(1.0), &opts).unwrap();
    for row in &float.rows {
        let g = families::complete(3, &families::orientations_from_index(row.index, 3)).unwrap();
        let flux: i32 = [(0, 1), (1, 2), (2, 0)].iter().map(|&(x, y)| g.arc_sign(x, y).unwrap() as i32).sum();
        let periodic = row.report.verdict == Verdict::Periodic;
        assert_eq!(periodic, flux == 0, "{}", row.label);
        if periodic {
            assert_eq!(row.report.tau, Some(3));
        }
    }
}
