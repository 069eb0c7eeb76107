use serde::Serialize;

use super::{graph_polys, CharScalar};
use crate::error::Result;
use crate::graph::MixedGraph;
use crate::matrices::PhaseMode;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CoefficientReport {
    pub checks: Vec<IdentityCheck>,
}

impl CoefficientReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push<S: CharScalar>(&mut self, name: impl Into<String>, lhs: S, rhs: S) {
        self.checks.push(IdentityCheck {
            name: name.into(),
            holds: lhs.close_to(&rhs, S::tolerance()),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
}

/// Coefficient identities of f = Σ c_i x^i, g = Σ d_i x^i and Ψ = Σ α_j x^j.
/// Regular-graph identities are included only for regular graphs, the
/// triangle identity only for undirected ones.
pub fn coefficient_identities<M: PhaseMode>(g: &MixedGraph, mode: &M) -> Result<CoefficientReport>
where
    M::S: CharScalar,
{
    let polys = graph_polys(g, mode)?;
    let n = g.n() as isize;
    let int = |v: i64| M::S::from_ratio(v, 1);
    let c = |i: isize| polys.f.coeff(i);
    let d = |i: isize| polys.g.coeff(i);
    let alpha = |j: isize| polys.psi.coeff(j);
    let mut r = CoefficientReport::default();

    r.push("c[n-1] = 0", c(n - 1), int(0));
    r.push("d[n-1] = 0", d(n - 1), int(0));
    r.push("c[n-2] = -|E|", c(n - 2), int(-(g.edge_count() as i64)));
    if g.is_undirected() {
        r.push("c[n-3] = -2t", c(n - 3), int(-2 * g.triangle_count() as i64));
    }
    r.push("alpha[2n] = 1", alpha(2 * n), int(1));
    r.push("alpha[2n-1] = 0", alpha(2 * n - 1), int(0));
    r.push(
        "alpha[2n-2] = n + 4 d[n-2]",
        alpha(2 * n - 2),
        int(n as i64).plus(&d(n - 2).times(&int(4))),
    );
    r.push(
        "alpha[2n-3] = 8 d[n-3]",
        alpha(2 * n - 3),
        d(n - 3).times(&int(8)),
    );
    if let Some(k) = g.is_regular() {
        let k = k as i64;
        for i in 0..=n {
            let kpow = k.checked_pow((n - i) as u32);
            let rhs = match kpow {
                Some(p) => c(i).div_int(p),
                None => (0..n - i).fold(c(i), |acc, _| acc.div_int(k)),
            };
            r.push(format!("d[{i}] = c[{i}]/k^{}", n - i), d(i), rhs);
        }
        r.push(
            "alpha[2n-2] = n - 2n/k",
            alpha(2 * n - 2),
            M::S::from_ratio(n as i64 * k - 2 * n as i64, k),
        );
    }
    Ok(r)
}
