//! Floor diagrams of plane curves and the enumerative counts built on them.
//!
//! A floor diagram of degree `d` and genus `g` is a connected, acyclic,
//! weighted oriented graph with `d` sources (1-valent, one outgoing edge of
//! weight 1) in which every other vertex, a *floor*, has total incoming weight
//! exceeding total outgoing weight by exactly one. Edges point upwards.
//!
//! A marking is a linear extension of the poset on floors and edges generated
//! by `tail(e) < e < head(e)`. Markings are counted up to automorphisms of
//! the diagram.

mod canon;
mod counts;
mod enumerate;
pub mod io;
mod kontsevich;
mod marking;

pub use canon::{automorphism_count, canonical_form, CanonicalForm};
pub use counts::{
    count, gw_count, gw_count_with, multiplicity, real_multiplicity, welschinger_count, welschinger_count_with, Variant,
};
pub use enumerate::{enumerate_diagrams, enumerate_diagrams_with, Limits};
pub use kontsevich::kontsevich_oracle;
pub use marking::{
    count_linear_extensions, count_markings, enumerate_marked, enumerate_marked_with, markings_of, MarkedFloorDiagram,
    MAX_LINEAR_EXTENSIONS, MAX_MARKING_ELEMENTS,
};

use crate::error::{Error, Result};

/// An element of `M(D)`: a floor (by vertex id) or an edge (by edge index).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Floor(usize),
    Edge(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramEdge {
    pub from: usize,
    pub to: usize,
    pub weight: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FloorDiagram {
    degree: u64,
    genus: u64,
    /// `true` for sources.
    sources: Vec<bool>,
    edges: Vec<DiagramEdge>,
}

impl FloorDiagram {
    /// Builds a diagram and checks every axiom.
    pub fn new(degree: u64, genus: u64, sources: Vec<bool>, edges: Vec<DiagramEdge>) -> Result<Self> {
        let d = FloorDiagram { degree, genus, sources, edges };
        d.validate()?;
        Ok(d)
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn vertex_count(&self) -> usize {
        self.sources.len()
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.sources[v]
    }

    pub fn edges(&self) -> &[DiagramEdge] {
        &self.edges
    }

    /// Non-source vertex ids in increasing order.
    pub fn floors(&self) -> Vec<usize> {
        (0..self.sources.len()).filter(|&v| !self.sources[v]).collect()
    }

    /// Floors followed by edges, the ground set of the marking poset.
    pub fn elements(&self) -> Vec<Element> {
        let mut out: Vec<Element> = self.floors().into_iter().map(Element::Floor).collect();
        out.extend((0..self.edges.len()).map(Element::Edge));
        out
    }

    /// Number of points a marking assigns, `3d − 1 + g`.
    pub fn marking_size(&self) -> usize {
        self.floors().len() + self.edges.len()
    }

    /// Cover relations `tail(e) < e` and `e < head(e)` of the marking poset.
    pub fn cover_relations(&self) -> Vec<(Element, Element)> {
        let mut rel = Vec::new();
        for (k, e) in self.edges.iter().enumerate() {
            if !self.sources[e.from] {
                rel.push((Element::Floor(e.from), Element::Edge(k)));
            }
            rel.push((Element::Edge(k), Element::Floor(e.to)));
        }
        rel
    }

    /// `(total in, total out)` weight at `v`.
    pub fn flow(&self, v: usize) -> (u64, u64) {
        self.edges.iter().fold((0, 0), |(i, o), e| {
            (i + if e.to == v { e.weight } else { 0 }, o + if e.from == v { e.weight } else { 0 })
        })
    }

    /// Re-checks the axioms and the vertex and edge counts they imply.
    pub fn validate(&self) -> Result<()> {
        let n = self.sources.len();
        let (d, g) = (self.degree as usize, self.genus as usize);
        let fail = |msg: String| Err(Error::invalid(msg));
        if d == 0 {
            return fail("degree must be positive".into());
        }
        if n != 2 * d {
            return fail(format!("expected {} vertices, found {n}", 2 * d));
        }
        if self.edges.len() != 2 * d - 1 + g {
            return fail(format!("expected {} edges, found {}", 2 * d - 1 + g, self.edges.len()));
        }
        if self.edges.iter().any(|e| e.from >= n || e.to >= n) {
            return fail("edge references a missing vertex".into());
        }
        if self.edges.iter().any(|e| e.weight == 0) {
            return fail("edge weights must be positive".into());
        }
        if self.edges.iter().any(|e| e.from == e.to) {
            return fail("loops are not acyclic".into());
        }
        let valence = |v: usize| self.edges.iter().filter(|e| e.from == v || e.to == v).count();
        for v in 0..n {
            let structural_source = valence(v) == 1 && self.edges.iter().any(|e| e.from == v);
            if structural_source != self.sources[v] {
                return fail(format!("vertex {v}: source flag disagrees with its edges"));
            }
        }
        if self.sources.iter().filter(|&&s| s).count() != d {
            return fail(format!("expected {d} sources"));
        }
        for e in &self.edges {
            if self.sources[e.from] && e.weight != 1 {
                return fail("edges at sources must have weight 1".into());
            }
        }
        for v in self.floors() {
            let (inw, outw) = self.flow(v);
            if inw != outw + 1 {
                return fail(format!("floor {v} has divergence {}", inw as i64 - outw as i64));
            }
        }
        if !self.is_connected() {
            return fail("diagram is disconnected".into());
        }
        if !self.is_acyclic() {
            return fail("diagram has an oriented cycle".into());
        }
        // with 2d vertices, connectivity and 2d − 1 + g edges, b1 = g
        Ok(())
    }

    pub(crate) fn is_connected(&self) -> bool {
        let n = self.sources.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for e in &self.edges {
                let w = if e.from == v {
                    e.to
                } else if e.to == v {
                    e.from
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn is_acyclic(&self) -> bool {
        let n = self.sources.len();
        let mut indegree = vec![0usize; n];
        for e in &self.edges {
            indegree[e.to] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut visited = 0;
        while let Some(v) = ready.pop() {
            visited += 1;
            for e in self.edges.iter().filter(|e| e.from == v) {
                indegree[e.to] -= 1;
                if indegree[e.to] == 0 {
                    ready.push(e.to);
                }
            }
        }
        visited == n
    }

    /// First Betti number of the underlying graph.
    pub fn betti_number(&self) -> u64 {
        (self.edges.len() + 1 - self.sources.len()) as u64
    }
}
