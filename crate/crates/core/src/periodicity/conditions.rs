use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::MixedGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConditionOutcome {
    Pass,
    Fail,
    NotApplicable,
}

impl From<bool> for ConditionOutcome {
    fn from(pass: bool) -> Self {
        if pass {
            ConditionOutcome::Pass
        } else {
            ConditionOutcome::Fail
        }
    }
}

/// 2n/k ∈ Z for a k-regular graph on n vertices.
pub fn check_2nk(g: &MixedGraph) -> Result<bool> {
    let k = g.is_regular().ok_or(Error::NotRegular)?;
    Ok((2 * g.n()) % k == 0)
}

/// 16t/k³ ∈ Z for an undirected k-regular graph with t triangles.
pub fn check_16t(g: &MixedGraph) -> Result<bool> {
    let k = g.is_regular().ok_or(Error::NotRegular)? as u128;
    if !g.is_undirected() {
        return Err(Error::NotUndirected);
    }
    Ok((16 * g.triangle_count() as u128) % (k * k * k) == 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Conditions {
    pub two_n_over_k: ConditionOutcome,
    pub sixteen_t_over_k3: ConditionOutcome,
}

impl Conditions {
    pub fn any_failed(&self) -> bool {
        self.two_n_over_k == ConditionOutcome::Fail
            || self.sixteen_t_over_k3 == ConditionOutcome::Fail
    }
}

/// Both necessary conditions, marked not applicable where their
/// hypotheses fail.
pub fn necessary_conditions(g: &MixedGraph) -> Conditions {
    let outcome = |r: Result<bool>| r.map(Into::into).unwrap_or(ConditionOutcome::NotApplicable);
    Conditions {
        two_n_over_k: outcome(check_2nk(g)),
        sixteen_t_over_k3: outcome(check_16t(g)),
    }
}
