//! JSON and Graphviz formats for (marked) floor diagrams.
//!
//! Floors are named `v<id>` and edges `e<index>` in markings.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{DiagramEdge, Element, FloorDiagram, MarkedFloorDiagram};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramRecord {
    pub degree: u64,
    pub genus: u64,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub marking: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: u64,
    pub source: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub from: u64,
    pub to: u64,
    pub weight: u64,
}

fn element_name(x: Element) -> String {
    match x {
        Element::Floor(v) => format!("v{v}"),
        Element::Edge(k) => format!("e{k}"),
    }
}

impl DiagramRecord {
    pub fn of(d: &FloorDiagram) -> Self {
        DiagramRecord {
            degree: d.degree(),
            genus: d.genus(),
            vertices: (0..d.vertex_count()).map(|v| VertexRecord { id: v as u64, source: d.is_source(v) }).collect(),
            edges: d
                .edges()
                .iter()
                .map(|e| EdgeRecord { from: e.from as u64, to: e.to as u64, weight: e.weight })
                .collect(),
            marking: None,
        }
    }

    pub fn of_marked(m: &MarkedFloorDiagram) -> Self {
        let mut rec = DiagramRecord::of(m.diagram());
        rec.marking = Some(m.order().iter().map(|&x| element_name(x)).collect());
        rec
    }

    /// Fails unless the record carries a valid marking.
    pub fn to_marked(&self) -> Result<MarkedFloorDiagram> {
        let (diagram, marking) = self.to_diagram()?;
        let order = marking.ok_or_else(|| Error::invalid("diagram has no marking"))?;
        MarkedFloorDiagram::new(diagram, order)
    }

    /// The diagram together with its marking, if the record has one.
    pub fn to_diagram(&self) -> Result<(FloorDiagram, Option<Vec<Element>>)> {
        let mut index = HashMap::new();
        let mut sources = Vec::new();
        for v in &self.vertices {
            if index.insert(v.id, sources.len()).is_some() {
                return Err(Error::invalid(format!("duplicate vertex id {}", v.id)));
            }
            sources.push(v.source);
        }
        let lookup = |id: u64| index.get(&id).copied().ok_or_else(|| Error::invalid(format!("unknown vertex id {id}")));
        let edges = self
            .edges
            .iter()
            .map(|e| Ok(DiagramEdge { from: lookup(e.from)?, to: lookup(e.to)?, weight: e.weight }))
            .collect::<Result<Vec<_>>>()?;
        let diagram = FloorDiagram::new(self.degree, self.genus, sources, edges)?;
        let marking = match &self.marking {
            None => None,
            Some(names) => Some(
                names
                    .iter()
                    .map(|name| {
                        let bad = || Error::invalid(format!("bad marking entry `{name}`"));
                        let (kind, num) = name.split_at(name.len().min(1));
                        let num: u64 = num.parse().map_err(|_| bad())?;
                        match kind {
                            "v" => Ok(Element::Floor(lookup(num)?)),
                            "e" if (num as usize) < self.edges.len() => Ok(Element::Edge(num as usize)),
                            _ => Err(bad()),
                        }
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        Ok((diagram, marking))
    }
}

pub fn diagram_to_json(d: &FloorDiagram) -> String {
    serde_json::to_string_pretty(&DiagramRecord::of(d)).expect("diagram serializes") + "\n"
}

pub fn marked_to_json(m: &MarkedFloorDiagram) -> String {
    serde_json::to_string_pretty(&DiagramRecord::of_marked(m)).expect("diagram serializes") + "\n"
}

/// A JSON array of records.
pub fn records_to_json(records: &[DiagramRecord]) -> String {
    serde_json::to_string_pretty(records).expect("diagrams serialize") + "\n"
}

fn parse_record(text: &str) -> Result<DiagramRecord> {
    serde_json::from_str(text).map_err(|e| Error::invalid(format!("diagram JSON: {e}")))
}

pub fn records_from_json(text: &str) -> Result<Vec<DiagramRecord>> {
    serde_json::from_str(text).map_err(|e| Error::invalid(format!("diagram list JSON: {e}")))
}

pub fn diagram_from_json(text: &str) -> Result<FloorDiagram> {
    Ok(parse_record(text)?.to_diagram()?.0)
}

/// Parses a diagram that must carry a marking.
pub fn marked_from_json(text: &str) -> Result<MarkedFloorDiagram> {
    parse_record(text)?.to_marked()
}

/// Graphviz rendering with sources at the bottom as filled points and edge
/// weights as labels. Marked elements carry their point number.
pub fn diagram_to_dot(d: &FloorDiagram, marking: Option<&[Element]>) -> String {
    let number = |x: Element| marking.and_then(|m| m.iter().position(|&y| y == x)).map(|k| k + 1);
    let mut out = String::from("digraph floor {\n  rankdir=BT;\n");
    for v in 0..d.vertex_count() {
        if d.is_source(v) {
            out.push_str(&format!("  {v} [shape=point, style=filled, width=0.12];\n"));
        } else {
            let label = match number(Element::Floor(v)) {
                Some(k) => format!("v{v} ({k})"),
                None => format!("v{v}"),
            };
            out.push_str(&format!("  {v} [shape=ellipse, label=\"{label}\"];\n"));
        }
    }
    for (k, e) in d.edges().iter().enumerate() {
        let mut label = e.weight.to_string();
        if let Some(p) = number(Element::Edge(k)) {
            label = format!("{label} ({p})");
        }
        out.push_str(&format!("  {} -> {} [label=\"{label}\"];\n", e.from, e.to));
    }
    out.push_str("}\n");
    out
}
