use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{MetricEdge, MetricGraph, VertexFlags};
use crate::error::{Error, Result};
use crate::scalar::{ExactScalar, Length};

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<VertexJson>,
    edges: Vec<EdgeJson>,
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: u64,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    marked: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    puncture: bool,
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    a: u64,
    b: u64,
    length: String,
}

pub fn graph_to_json<S: ExactScalar>(g: &MetricGraph<S>) -> String {
    let doc = GraphJson {
        vertices: g
            .vertices()
            .iter()
            .enumerate()
            .map(|(k, f)| VertexJson { id: k as u64, marked: f.marked, puncture: f.puncture })
            .collect(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeJson { a: e.a as u64, b: e.b as u64, length: e.length.to_string() })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("graph serializes") + "\n"
}

pub fn graph_from_json<S: ExactScalar>(text: &str) -> Result<MetricGraph<S>> {
    let doc: GraphJson = serde_json::from_str(text).map_err(|e| Error::invalid(format!("graph JSON: {e}")))?;
    let mut index = HashMap::new();
    let mut flags = Vec::new();
    for v in &doc.vertices {
        if index.insert(v.id, flags.len()).is_some() {
            return Err(Error::invalid(format!("duplicate vertex id {}", v.id)));
        }
        flags.push(VertexFlags { marked: v.marked, puncture: v.puncture });
    }
    let lookup = |id: u64| index.get(&id).copied().ok_or_else(|| Error::invalid(format!("unknown vertex id {id}")));
    let edges = doc
        .edges
        .iter()
        .map(|e| {
            let length =
                Length::parse(&e.length).ok_or_else(|| Error::invalid(format!("bad length `{}`", e.length)))?;
            Ok(MetricEdge { a: lookup(e.a)?, b: lookup(e.b)?, length })
        })
        .collect::<Result<Vec<_>>>()?;
    MetricGraph::new(flags, edges)
}

/// Graphviz rendering; marked vertices are boxes, punctures are hollow points.
pub fn graph_to_dot<S: ExactScalar>(g: &MetricGraph<S>) -> String {
    let mut out = String::from("graph metric {\n");
    for (k, f) in g.vertices().iter().enumerate() {
        let shape = match (f.marked, f.puncture) {
            (true, _) => "box",
            (_, true) => "point, style=hollow",
            _ => "circle",
        };
        out.push_str(&format!("  {k} [shape={shape}];\n"));
    }
    for e in g.edges() {
        out.push_str(&format!("  {} -- {} [label=\"{}\"];\n", e.a, e.b, e.length));
    }
    out.push_str("}\n");
    out
}
