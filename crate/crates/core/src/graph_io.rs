//! JSON graph files.
//!
//! ```json
//! {"K": 2,
//!  "nodes": [{"id": "s", "lat": 52.1, "lon": 4.3}, {"id": "t"}],
//!  "edges": [{"from": "s", "to": "t", "category": 1, "length": "2.5"}]}
//! ```
//!
//! Lengths are decimal strings (`p/q` is accepted too) so that they are read exactly.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{parse_rational, to_decimal_string};
use crate::pathsolve::{CategoryGraph, Edge, Node};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphFile {
    #[serde(rename = "K")]
    pub k: usize,
    pub nodes: Vec<NodeRecord>,
    pub edges: Vec<EdgeRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NodeRecord {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lat: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lon: Option<f64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub from: String,
    pub to: String,
    pub category: usize,
    pub length: String,
}

impl GraphFile {
    pub fn into_graph(self) -> Result<CategoryGraph> {
        let mut index = HashMap::new();
        for (i, n) in self.nodes.iter().enumerate() {
            if index.insert(n.id.clone(), i).is_some() {
                return Err(Error::DuplicateNode(n.id.clone()));
            }
        }
        let lookup = |id: &str| index.get(id).copied().ok_or_else(|| Error::UnknownNode(id.to_string()));
        let edges = self
            .edges
            .iter()
            .map(|e| {
                Ok(Edge {
                    from: lookup(&e.from)?,
                    to: lookup(&e.to)?,
                    category: e.category,
                    length: parse_rational(&e.length)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let nodes = self.nodes.into_iter().map(|n| Node { id: n.id, lat: n.lat, lon: n.lon }).collect();
        CategoryGraph::new(self.k, nodes, edges)
    }

    pub fn from_graph(g: &CategoryGraph) -> GraphFile {
        GraphFile {
            k: g.k(),
            nodes: g.nodes().iter().map(|n| NodeRecord { id: n.id.clone(), lat: n.lat, lon: n.lon }).collect(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeRecord {
                    from: g.nodes()[e.from].id.clone(),
                    to: g.nodes()[e.to].id.clone(),
                    category: e.category,
                    length: to_decimal_string(&e.length),
                })
                .collect(),
        }
    }
}

pub fn parse_graph(json: &str) -> Result<CategoryGraph> {
    let file: GraphFile = serde_json::from_str(json).map_err(|e| Error::Format(e.to_string()))?;
    file.into_graph()
}

pub fn graph_to_json(g: &CategoryGraph) -> String {
    serde_json::to_string_pretty(&GraphFile::from_graph(g)).expect("graph serializes")
}
