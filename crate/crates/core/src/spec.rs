//! JSON input formats for graphs and ideals.
//!
//! A graph is either explicit,
//! `{"vertices": ["a", "b", "c"], "edges": [[0, 1], [1, 2]]}`
//! (optionally with `"parts": [[0], [1, 2]]`), or a named family,
//! `{"family": "complete_multipartite", "params": [2, 3]}`.
//!
//! An ideal wraps a graph:
//! `{"graph": {...}, "kind": "cover", "compressed": true, "power": 2}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, DEFAULT_MAX_VERTICES};
use crate::ideal::{cover_ideal_bounded, edge_ideal, MonomialIdeal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphFamily {
    CompleteMultipartite,
    CmBipartite,
    NestedBipartite,
}

impl std::str::FromStr for GraphFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complete_multipartite" => Ok(GraphFamily::CompleteMultipartite),
            "cm_bipartite" => Ok(GraphFamily::CmBipartite),
            "nested_bipartite" => Ok(GraphFamily::NestedBipartite),
            _ => Err(Error::Parse(format!(
                "unknown graph family '{s}' (expected complete_multipartite, cm_bipartite or nested_bipartite)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphSpec {
    Family {
        family: GraphFamily,
        params: Vec<usize>,
    },
    Explicit {
        vertices: Vec<String>,
        edges: Vec<[usize; 2]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        parts: Option<Vec<Vec<usize>>>,
    },
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::Explicit {
                vertices,
                edges,
                parts,
            } => {
                let edges: Vec<(usize, usize)> = edges.iter().map(|e| (e[0], e[1])).collect();
                Graph::new(vertices.clone(), &edges, parts.clone())
            }
            GraphSpec::Family { family, params } => match family {
                GraphFamily::CompleteMultipartite => Graph::complete_multipartite(params),
                GraphFamily::CmBipartite => match params.as_slice() {
                    [n] => Graph::cm_bipartite(*n),
                    _ => Err(Error::InvalidArgument(
                        "cm_bipartite takes exactly one parameter n".into(),
                    )),
                },
                GraphFamily::NestedBipartite => match params.as_slice() {
                    [n1, n2, m1, m2] => Graph::nested_bipartite(*n1, *n2, *m1, *m2),
                    _ => Err(Error::InvalidArgument(
                        "nested_bipartite takes four parameters n1,n2,m1,m2".into(),
                    )),
                },
            },
        }
    }

    pub fn from_json(text: &str) -> Result<GraphSpec> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("graph spec: {e}")))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealKind {
    #[default]
    Cover,
    Edge,
}

impl std::str::FromStr for IdealKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cover" => Ok(IdealKind::Cover),
            "edge" => Ok(IdealKind::Edge),
            _ => Err(Error::Parse(format!("unknown ideal kind '{s}' (expected cover or edge)"))),
        }
    }
}

fn one() -> u32 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSpec {
    pub graph: GraphSpec,
    #[serde(default)]
    pub kind: IdealKind,
    #[serde(default)]
    pub compressed: bool,
    #[serde(default = "one")]
    pub power: u32,
}

impl IdealSpec {
    pub fn build(&self) -> Result<MonomialIdeal> {
        let g = self.graph.build()?;
        self.build_on(&g, DEFAULT_MAX_VERTICES)
    }

    /// Builds the ideal on an already constructed graph, with a bound on the
    /// vertex count for cover enumeration.
    pub fn build_on(&self, g: &Graph, max_vertices: usize) -> Result<MonomialIdeal> {
        let base = match self.kind {
            IdealKind::Cover => cover_ideal_bounded(g, self.compressed, max_vertices)?,
            IdealKind::Edge => {
                if self.compressed {
                    return Err(Error::InvalidArgument(
                        "compression applies to cover ideals only".into(),
                    ));
                }
                edge_ideal(g)?
            }
        };
        if self.power == 1 {
            Ok(base)
        } else {
            base.power(self.power)
        }
    }

    /// Accepts either a bare ideal spec, a bare graph spec (cover ideal,
    /// first power), or any JSON object carrying one of those under `"spec"`.
    pub fn from_json(text: &str) -> Result<IdealSpec> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("spec: {e}")))?;
        Self::from_value(value)
    }

    pub fn from_value(value: serde_json::Value) -> Result<IdealSpec> {
        if let Some(inner) = value.get("spec") {
            return Self::from_value(inner.clone());
        }
        if value.get("graph").is_some() {
            return serde_json::from_value(value).map_err(|e| Error::Parse(format!("ideal spec: {e}")));
        }
        let graph: GraphSpec =
            serde_json::from_value(value).map_err(|e| Error::Parse(format!("graph spec: {e}")))?;
        Ok(IdealSpec {
            graph,
            kind: IdealKind::Cover,
            compressed: false,
            power: 1,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_graph() {
        let spec = GraphSpec::from_json(r#"{"vertices":["a","b","c"],"edges":[[0,1],[1,2],[0,2]]}"#).unwrap();
        let g = spec.build().unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.minimal_vertex_covers().unwrap().len(), 3);
    }

    #[test]
    fn family_graph() {
        let spec = GraphSpec::from_json(r#"{"family":"nested_bipartite","params":[2,1,1,1]}"#).unwrap();
        assert_eq!(spec.build().unwrap().edge_count(), 5);
        let bad = GraphSpec::from_json(r#"{"family":"cm_bipartite","params":[2,3]}"#).unwrap();
        assert!(bad.build().is_err());
        assert!(GraphSpec::from_json(r#"{"family":"petersen","params":[]}"#).is_err());
    }

    #[test]
    fn ideal_spec_defaults_and_wrapping() {
        let s = IdealSpec::from_json(r#"{"graph":{"family":"complete_multipartite","params":[1,1,1]},"power":2}"#)
            .unwrap();
        assert_eq!(s.kind, IdealKind::Cover);
        assert_eq!(s.build().unwrap().mu(), 6);
        let text = serde_json::to_string(&serde_json::json!({ "spec": s, "reg": 4 })).unwrap();
        assert_eq!(IdealSpec::from_json(&text).unwrap(), s);
        let bare = IdealSpec::from_json(r#"{"family":"cm_bipartite","params":[3]}"#).unwrap();
        assert_eq!(bare.build().unwrap().mu(), 5);
    }

    #[test]
    fn compressed_edge_rejected() {
        let s = IdealSpec {
            graph: GraphSpec::Family {
                family: GraphFamily::CompleteMultipartite,
                params: vec![1, 2],
            },
            kind: IdealKind::Edge,
            compressed: true,
            power: 1,
        };
        assert!(s.build().is_err());
    }
}
