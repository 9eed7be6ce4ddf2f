//! Abstract tropical curves: finite graphs with an inner metric in which the
//! edges at 1-valent vertices have infinite length.

mod io;
mod iso;

pub use io::{graph_from_json, graph_to_dot, graph_to_json};
pub use iso::{is_isometric, MAX_ISOMETRY_VERTICES};

use crate::error::{Error, Result};
use crate::scalar::{ExactScalar, Length};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexFlags {
    pub marked: bool,
    /// The vertex stands for a removed point at infinity.
    pub puncture: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MetricEdge<S> {
    pub a: usize,
    pub b: usize,
    pub length: Length<S>,
}

impl<S> MetricEdge<S> {
    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }

    pub fn other(&self, v: usize) -> usize {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }
}

/// A connected metric graph. Construct through [`MetricGraph::new`], which
/// enforces the invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MetricGraph<S> {
    vertices: Vec<VertexFlags>,
    edges: Vec<MetricEdge<S>>,
}

/// A point of a metric graph: a vertex, or an interior point of an edge at
/// `distance` from the endpoint `from`.
///
/// On an infinite edge the distance is measured from its non-leaf endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphPoint<S> {
    Vertex(usize),
    OnEdge { edge: usize, from: usize, distance: S },
}

/// Describes the contraction of a modified graph back onto the original.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    /// The attached ray, collapsed onto `attach`.
    pub ray: usize,
    pub leaf: usize,
    pub attach: usize,
    /// When the modification point was inside an edge: that edge's index in the
    /// original graph and the two pieces it was cut into.
    pub split: Option<(usize, [usize; 2])>,
}

impl<S: ExactScalar> MetricGraph<S> {
    pub fn new(vertices: Vec<VertexFlags>, edges: Vec<MetricEdge<S>>) -> Result<Self> {
        let g = MetricGraph { vertices, edges };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        let n = self.vertices.len();
        if n == 0 {
            return Err(Error::invalid("a metric graph needs a vertex"));
        }
        for (k, e) in self.edges.iter().enumerate() {
            if e.a >= n || e.b >= n {
                return Err(Error::invalid(format!("edge {k} references a missing vertex")));
            }
            if let Length::Finite(l) = &e.length {
                if !l.is_positive() {
                    return Err(Error::invalid(format!("edge {k} has non-positive length")));
                }
            }
        }
        if !self.is_connected() {
            return Err(Error::invalid("metric graph is disconnected"));
        }
        for (k, e) in self.edges.iter().enumerate() {
            let at_leaf = self.valence(e.a) == 1 || self.valence(e.b) == 1;
            if at_leaf != e.length.is_infinite() {
                return Err(Error::invalid(format!(
                    "edge {k}: exactly the edges at 1-valent vertices must be infinite"
                )));
            }
        }
        for (v, flags) in self.vertices.iter().enumerate() {
            if flags.marked && flags.puncture {
                return Err(Error::invalid(format!("vertex {v} is both marked and a puncture")));
            }
            if (flags.marked || flags.puncture) && self.valence(v) != 1 {
                return Err(Error::invalid(format!("vertex {v} is flagged but not 1-valent")));
            }
        }
        Ok(())
    }

    fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &e in &adj[v] {
                let w = self.edges[e].other(v);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Incident edge indices per vertex; a loop appears twice.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (k, e) in self.edges.iter().enumerate() {
            adj[e.a].push(k);
            adj[e.b].push(k);
        }
        adj
    }

    pub fn vertices(&self) -> &[VertexFlags] {
        &self.vertices
    }

    pub fn edges(&self) -> &[MetricEdge<S>] {
        &self.edges
    }

    pub fn valence(&self, v: usize) -> usize {
        self.edges.iter().map(|e| (e.a == v) as usize + (e.b == v) as usize).sum()
    }

    /// First Betti number `#E − #V + 1`.
    pub fn genus(&self) -> usize {
        self.edges.len() + 1 - self.vertices.len()
    }

    pub fn puncture_count(&self) -> usize {
        self.vertices.iter().filter(|f| f.puncture).count()
    }

    pub fn marked_count(&self) -> usize {
        self.vertices.iter().filter(|f| f.marked).count()
    }

    /// Sum of the finite edge lengths.
    pub fn finite_length(&self) -> S {
        self.edges.iter().fold(S::zero(), |acc, e| match &e.length {
            Length::Finite(l) => acc + l.clone(),
            Length::Infinite => acc,
        })
    }

    /// A single vertex with a loop of length `length`.
    pub fn circle(length: S) -> Result<Self> {
        MetricGraph::new(vec![VertexFlags::default()], vec![MetricEdge { a: 0, b: 0, length: Length::Finite(length) }])
    }

    /// Two trivalent vertices joined by three edges.
    pub fn theta(lengths: [S; 3]) -> Result<Self> {
        let edges = lengths.into_iter().map(|l| MetricEdge { a: 0, b: 1, length: Length::Finite(l) }).collect();
        MetricGraph::new(vec![VertexFlags::default(); 2], edges)
    }

    /// Attaches an infinite ray at `x`, cutting an edge when `x` is interior.
    ///
    /// Genus and punctures are unchanged; the new leaf carries no flag.
    pub fn modify(&self, x: &GraphPoint<S>) -> Result<(MetricGraph<S>, Contraction)> {
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        let (attach, split) = match x {
            GraphPoint::Vertex(v) => {
                if *v >= vertices.len() {
                    return Err(Error::invalid(format!("no vertex {v}")));
                }
                if self.valence(*v) == 1 {
                    return Err(Error::invalid("cannot modify at a 1-valent vertex"));
                }
                (*v, None)
            }
            GraphPoint::OnEdge { edge, from, distance } => {
                let e = self.edges.get(*edge).ok_or_else(|| Error::invalid(format!("no edge {edge}")))?;
                if e.a != *from && e.b != *from {
                    return Err(Error::invalid("`from` is not an endpoint of the edge"));
                }
                if !distance.is_positive() {
                    return Err(Error::invalid("distance must be positive"));
                }
                let to = if e.a == *from { e.b } else { e.a };
                let (near, far) = match &e.length {
                    Length::Finite(l) => {
                        if distance >= l {
                            return Err(Error::invalid("point lies beyond the edge"));
                        }
                        (Length::Finite(distance.clone()), Length::Finite(l.clone() - distance.clone()))
                    }
                    Length::Infinite => {
                        let from_leaf = self.valence(*from) == 1;
                        let to_leaf = self.valence(to) == 1 || e.is_loop();
                        match (from_leaf, to_leaf) {
                            (true, true) => (Length::Infinite, Length::Infinite),
                            (false, _) => (Length::Finite(distance.clone()), Length::Infinite),
                            (true, false) => {
                                return Err(Error::invalid("measure distances on a ray from its finite end"))
                            }
                        }
                    }
                };
                let mid = vertices.len();
                vertices.push(VertexFlags::default());
                edges[*edge] = MetricEdge { a: *from, b: mid, length: near };
                edges.push(MetricEdge { a: mid, b: to, length: far });
                (mid, Some((*edge, [*edge, edges.len() - 1])))
            }
        };
        let leaf = vertices.len();
        vertices.push(VertexFlags::default());
        edges.push(MetricEdge { a: attach, b: leaf, length: Length::Infinite });
        let ray = edges.len() - 1;
        let g = MetricGraph::new(vertices, edges)?;
        Ok((g, Contraction { ray, leaf, attach, split }))
    }

    /// Undoes [`MetricGraph::modify`]: collapses the ray and re-glues a cut edge.
    pub fn contract(&self, c: &Contraction) -> Result<MetricGraph<S>> {
        let mut edges: Vec<Option<MetricEdge<S>>> = self.edges.iter().cloned().map(Some).collect();
        edges[c.ray] = None;
        let mut removed = vec![c.leaf];
        if let Some((original, [p0, p1])) = c.split {
            let (e0, e1) = (self.edges[p0].clone(), self.edges[p1].clone());
            let far_end = e1.other(c.attach);
            let length = match (e0.length.clone(), e1.length.clone()) {
                (Length::Finite(x), Length::Finite(y)) => Length::Finite(x + y),
                _ => Length::Infinite,
            };
            edges[p1] = None;
            edges[original] = Some(MetricEdge { a: e0.other(c.attach), b: far_end, length });
            removed.push(c.attach);
        }
        rebuild(&self.vertices, edges, &removed)
    }

    /// Contracts edges at unmarked 1-valent vertices until none remain, then
    /// erases unmarked 2-valent vertices by joining their two edges.
    ///
    /// Requires genus at least 1, or genus 0 with at least two marked vertices.
    pub fn minimal_model(&self) -> Result<MetricGraph<S>> {
        if self.genus() == 0 && self.marked_count() < 2 {
            return Err(Error::invalid("a rational curve needs two marked points to have a minimal model"));
        }
        let n = self.vertices.len();
        let mut alive_edges: Vec<Option<MetricEdge<S>>> = self.edges.iter().cloned().map(Some).collect();
        let mut valence: Vec<usize> = (0..n).map(|v| self.valence(v)).collect();
        let mut removed = Vec::new();
        let mut queue: Vec<usize> = (0..n).filter(|&v| valence[v] == 1 && !self.vertices[v].marked).collect();
        while let Some(v) = queue.pop() {
            if valence[v] != 1 {
                continue;
            }
            let k = alive_edges
                .iter()
                .position(|e| e.as_ref().is_some_and(|e| e.a == v || e.b == v))
                .expect("1-valent vertex has an edge");
            let w = alive_edges[k].as_ref().expect("alive").other(v);
            alive_edges[k] = None;
            valence[v] = 0;
            valence[w] -= 1;
            removed.push(v);
            if valence[w] == 1 && !self.vertices[w].marked {
                queue.push(w);
            }
        }
        smooth(&self.vertices, alive_edges, removed)
    }

    /// The same metric space without unflagged 2-valent vertices (a lone
    /// circle keeps its single vertex).
    pub fn smoothed(&self) -> MetricGraph<S> {
        smooth(&self.vertices, self.edges.iter().cloned().map(Some).collect(), Vec::new())
            .expect("smoothing preserves the invariants")
    }
}

fn smooth<S: ExactScalar>(
    flags: &[VertexFlags],
    mut edges: Vec<Option<MetricEdge<S>>>,
    mut removed: Vec<usize>,
) -> Result<MetricGraph<S>> {
    loop {
        let mut changed = false;
        for (v, flag) in flags.iter().enumerate() {
            if removed.contains(&v) || flag.marked || flag.puncture {
                continue;
            }
            let incident: Vec<usize> = edges
                .iter()
                .enumerate()
                .filter(|(_, e)| e.as_ref().is_some_and(|e| e.a == v || e.b == v))
                .map(|(k, _)| k)
                .collect();
            let [k1, k2] = incident.as_slice() else { continue };
            let (e1, e2) = (edges[*k1].clone().expect("alive"), edges[*k2].clone().expect("alive"));
            if e1.is_loop() || e2.is_loop() {
                continue;
            }
            let length = match (e1.length.clone(), e2.length.clone()) {
                (Length::Finite(x), Length::Finite(y)) => Length::Finite(x + y),
                _ => Length::Infinite,
            };
            edges[*k1] = Some(MetricEdge { a: e1.other(v), b: e2.other(v), length });
            edges[*k2] = None;
            removed.push(v);
            changed = true;
        }
        if !changed {
            break;
        }
    }
    rebuild(flags, edges, &removed)
}

fn rebuild<S: ExactScalar>(
    flags: &[VertexFlags],
    edges: Vec<Option<MetricEdge<S>>>,
    removed: &[usize],
) -> Result<MetricGraph<S>> {
    let mut index = vec![usize::MAX; flags.len()];
    let mut vertices = Vec::new();
    for (v, f) in flags.iter().enumerate() {
        if !removed.contains(&v) {
            index[v] = vertices.len();
            vertices.push(*f);
        }
    }
    let edges =
        edges.into_iter().flatten().map(|e| MetricEdge { a: index[e.a], b: index[e.b], length: e.length }).collect();
    MetricGraph::new(vertices, edges)
}

/// All connected trivalent graphs (loops and multiple edges allowed) of the
/// given genus `g ≥ 2`, up to isomorphism, with unit edge lengths.
pub fn trivalent_graphs<S: ExactScalar>(genus: usize) -> Result<Vec<MetricGraph<S>>> {
    if !(2..=4).contains(&genus) {
        return Err(Error::Capacity(format!("trivalent graph census supports genus 2..=4, got {genus}")));
    }
    let n = 2 * genus - 2;
    let half_edges: Vec<usize> = (0..3 * n).map(|h| h / 3).collect();
    let mut found: Vec<MetricGraph<S>> = Vec::new();
    let mut used = vec![false; half_edges.len()];
    let mut pairs = Vec::new();
    pair_half_edges(&half_edges, &mut used, &mut pairs, &mut |pairs| {
        let edges = pairs
            .iter()
            .map(|&(x, y)| MetricEdge { a: half_edges[x], b: half_edges[y], length: Length::Finite(S::one()) })
            .collect();
        if let Ok(g) = MetricGraph::new(vec![VertexFlags::default(); n], edges) {
            if !found.iter().any(|h| is_isometric(h, &g).unwrap_or(false)) {
                found.push(g);
            }
        }
    });
    Ok(found)
}

fn pair_half_edges(
    owner: &[usize],
    used: &mut [bool],
    pairs: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    let Some(first) = used.iter().position(|u| !u) else {
        emit(pairs);
        return;
    };
    used[first] = true;
    for other in first + 1..owner.len() {
        if used[other] {
            continue;
        }
        used[other] = true;
        pairs.push((first, other));
        pair_half_edges(owner, used, pairs, emit);
        pairs.pop();
        used[other] = false;
    }
    used[first] = false;
}
