//! JSON graph files: `{"n": 3, "arcs": [{"u": 0, "v": 1, "class": "forward"}]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Edge, EdgeClass, MixedGraph};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcEntry {
    pub u: usize,
    pub v: usize,
    pub class: EdgeClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub arcs: Vec<ArcEntry>,
}

impl GraphFile {
    pub fn from_graph(g: &MixedGraph) -> Self {
        GraphFile {
            n: g.n(),
            arcs: g
                .edges()
                .iter()
                .map(|e| ArcEntry {
                    u: e.u,
                    v: e.v,
                    class: e.class,
                })
                .collect(),
        }
    }

    pub fn into_graph(self) -> Result<MixedGraph> {
        MixedGraph::from_edges(
            self.n,
            self.arcs
                .into_iter()
                .map(|a| Edge {
                    u: a.u,
                    v: a.v,
                    class: a.class,
                })
                .collect(),
        )
    }
}

impl MixedGraph {
    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str::<GraphFile>(s)?.into_graph()
    }

    pub fn from_json_slice(bytes: &[u8]) -> Result<Self> {
        serde_json::from_slice::<GraphFile>(bytes)?.into_graph()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&GraphFile::from_graph(self)).expect("graph serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn parse_triangle() {
        let g = MixedGraph::from_json_str(
            r#"{"n": 3, "arcs": [
                {"u": 0, "v": 1, "class": "forward"},
                {"u": 1, "v": 2, "class": "undirected"},
                {"u": 2, "v": 0, "class": "undirected"}]}"#,
        )
        .unwrap();
        assert_eq!(g.arc_sign(0, 1), Some(1));
        assert_eq!(MixedGraph::from_json_str(&g.to_json_string()).unwrap(), g);
    }

    #[test]
    fn rejects_bad_files() {
        let err = MixedGraph::from_json_str("{\"n\": 2,\n \"arcs\": [{\"u\": 0, \"v\": 1, \"class\": \"sideways\"}]}")
            .unwrap_err();
        assert!(matches!(err, Error::Json(ref e) if e.line() == 2), "{err}");
        assert!(matches!(
            MixedGraph::from_json_str(r#"{"n": 2, "arcs": [{"u": 1, "v": 1, "class": "forward"}]}"#),
            Err(Error::SelfLoop(1))
        ));
        assert!(MixedGraph::from_json_str(r#"{"n": 2, "arcs": [], "extra": 1}"#).is_err());
        assert!(matches!(
            MixedGraph::from_json_str(r#"{"n": 3, "arcs": [{"u": 0, "v": 1, "class": "forward"}]}"#),
            Err(Error::Disconnected)
        ));
    }
}
