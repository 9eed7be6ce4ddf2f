use std::collections::BTreeMap;

use super::polynomial::{LatticePoint, TropicalPolynomial};
use super::subdivision::dual_subdivision;
use super::{gcd, primitive, Point};
use crate::error::{Error, Result};
use crate::scalar::{ExactScalar, Length};

/// How an edge of a plane curve is attached to the vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind<S> {
    /// Bounded edge; the primitive direction points from `a` to `b`.
    Segment { a: usize, b: usize },
    /// Unbounded edge leaving vertex `from` along the primitive direction.
    Ray { from: usize },
    /// A full line with no vertex on it; the primitive sign is arbitrary.
    Line { through: Point<S> },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveEdge<S> {
    pub kind: EdgeKind<S>,
    pub primitive: (i64, i64),
    pub weight: u64,
    /// The two monomials whose tie defines the edge, when the curve came from a polynomial.
    pub dual: Option<[LatticePoint; 2]>,
}

impl<S: ExactScalar> CurveEdge<S> {
    /// `w(E) · primitive(E)`.
    pub fn weighted_direction(&self) -> (i64, i64) {
        let w = self.weight as i64;
        (self.primitive.0 * w, self.primitive.1 * w)
    }

    pub fn is_bounded(&self) -> bool {
        matches!(self.kind, EdgeKind::Segment { .. })
    }
}

/// An embedded weighted rational graph in the plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlaneTropicalCurve<S> {
    pub vertices: Vec<Point<S>>,
    pub edges: Vec<CurveEdge<S>>,
}

/// A vertex at which the weighted outgoing directions do not cancel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancingViolation {
    pub vertex: usize,
    pub sum: (i64, i64),
}

fn cross<S: ExactScalar>(v: (&S, &S), dir: (i64, i64)) -> S {
    v.0.clone() * S::from_int(dir.1) - v.1.clone() * S::from_int(dir.0)
}

fn dot<S: ExactScalar>(v: (&S, &S), dir: (i64, i64)) -> S {
    v.0.clone() * S::from_int(dir.0) + v.1.clone() * S::from_int(dir.1)
}

impl<S: ExactScalar> PlaneTropicalCurve<S> {
    pub fn empty() -> Self {
        PlaneTropicalCurve { vertices: Vec::new(), edges: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks the structural invariants: primitive directions, positive weights,
    /// valid vertex references and segment endpoints lying along their direction.
    pub fn validate(&self) -> Result<()> {
        for (k, e) in self.edges.iter().enumerate() {
            if e.weight == 0 {
                return Err(Error::invalid(format!("edge {k} has weight 0")));
            }
            if gcd(e.primitive.0, e.primitive.1) != 1 {
                return Err(Error::invalid(format!("edge {k} direction {:?} is not primitive", e.primitive)));
            }
            let check = |v: usize| {
                if v < self.vertices.len() {
                    Ok(())
                } else {
                    Err(Error::invalid(format!("edge {k} references missing vertex {v}")))
                }
            };
            match &e.kind {
                EdgeKind::Segment { a, b } => {
                    check(*a)?;
                    check(*b)?;
                    let (pa, pb) = (&self.vertices[*a], &self.vertices[*b]);
                    let dx = pb.x.clone() - pa.x.clone();
                    let dy = pb.y.clone() - pa.y.clone();
                    if !cross((&dx, &dy), e.primitive).is_zero() || !dot((&dx, &dy), e.primitive).is_positive() {
                        return Err(Error::invalid(format!("edge {k} endpoints do not follow its direction")));
                    }
                }
                EdgeKind::Ray { from } => check(*from)?,
                EdgeKind::Line { .. } => {}
            }
        }
        Ok(())
    }

    /// Whether `p` lies on a vertex or an edge of the curve.
    pub fn contains(&self, p: &Point<S>) -> bool {
        self.vertices.iter().any(|v| v == p) || self.edges.iter().any(|e| self.edge_contains(e, p))
    }

    pub fn edge_contains(&self, e: &CurveEdge<S>, p: &Point<S>) -> bool {
        let base = match &e.kind {
            EdgeKind::Segment { a, .. } => &self.vertices[*a],
            EdgeKind::Ray { from } => &self.vertices[*from],
            EdgeKind::Line { through } => through,
        };
        let dx = p.x.clone() - base.x.clone();
        let dy = p.y.clone() - base.y.clone();
        if !cross((&dx, &dy), e.primitive).is_zero() {
            return false;
        }
        let along = dot((&dx, &dy), e.primitive);
        match &e.kind {
            EdgeKind::Segment { a, b } => {
                let (pa, pb) = (&self.vertices[*a], &self.vertices[*b]);
                let ex = pb.x.clone() - pa.x.clone();
                let ey = pb.y.clone() - pa.y.clone();
                !along.is_negative() && along <= dot((&ex, &ey), e.primitive)
            }
            EdgeKind::Ray { .. } => !along.is_negative(),
            EdgeKind::Line { .. } => true,
        }
    }

    /// Unbounded ends as (primitive direction, weight); a line contributes both of its ends.
    pub fn ends(&self) -> Vec<((i64, i64), u64)> {
        let mut out = Vec::new();
        for e in &self.edges {
            match e.kind {
                EdgeKind::Segment { .. } => {}
                EdgeKind::Ray { .. } => out.push((e.primitive, e.weight)),
                EdgeKind::Line { .. } => {
                    out.push((e.primitive, e.weight));
                    out.push(((-e.primitive.0, -e.primitive.1), e.weight));
                }
            }
        }
        out
    }

    /// `d` when the ends, counted with weight, are exactly `d` in each of the
    /// directions `(−1,0)`, `(0,−1)` and `(1,1)`.
    pub fn degree(&self) -> Option<u64> {
        let mut counts = [0u64; 3];
        for (dir, w) in self.ends() {
            let slot = match dir {
                (-1, 0) => 0,
                (0, -1) => 1,
                (1, 1) => 2,
                _ => return None,
            };
            counts[slot] += w;
        }
        (counts[0] >= 1 && counts[0] == counts[1] && counts[1] == counts[2]).then_some(counts[0])
    }

    /// Weighted primitive directions at `v`, oriented away from `v`.
    pub fn outgoing(&self, v: usize) -> Vec<((i64, i64), u64)> {
        let mut out = Vec::new();
        for e in &self.edges {
            match e.kind {
                EdgeKind::Segment { a, b } => {
                    if a == v {
                        out.push((e.primitive, e.weight));
                    }
                    if b == v {
                        out.push(((-e.primitive.0, -e.primitive.1), e.weight));
                    }
                }
                EdgeKind::Ray { from } if from == v => out.push((e.primitive, e.weight)),
                _ => {}
            }
        }
        out
    }
}

/// Reports every vertex where `Σ w(E)·primitive(E)` over outgoing edges is non-zero.
pub fn check_balancing<S: ExactScalar>(c: &PlaneTropicalCurve<S>) -> Vec<BalancingViolation> {
    (0..c.vertices.len())
        .filter_map(|v| {
            let sum = c
                .outgoing(v)
                .iter()
                .fold((0i64, 0i64), |acc, (d, w)| (acc.0 + d.0 * *w as i64, acc.1 + d.1 * *w as i64));
            (sum != (0, 0)).then_some(BalancingViolation { vertex: v, sum })
        })
        .collect()
}

/// Length of an edge in the metric where `w(E)·primitive(E)` has unit speed.
pub fn lattice_length<S: ExactScalar>(c: &PlaneTropicalCurve<S>, edge: &CurveEdge<S>) -> Result<Length<S>> {
    match edge.kind {
        EdgeKind::Segment { a, b } => {
            let (pa, pb) = (&c.vertices[a], &c.vertices[b]);
            let dx = pb.x.clone() - pa.x.clone();
            let dy = pb.y.clone() - pa.y.clone();
            if dx.is_zero() && dy.is_zero() {
                return Err(Error::invalid("edge has zero length"));
            }
            let (u, v) = edge.primitive;
            let steps = dot((&dx, &dy), edge.primitive) / S::from_int(u * u + v * v);
            Ok(Length::Finite(steps / S::from_int(edge.weight as i64)))
        }
        EdgeKind::Ray { .. } | EdgeKind::Line { .. } => Ok(Length::Infinite),
    }
}

/// The locus where `f` is not locally affine, as a weighted balanced graph.
pub fn corner_locus<S: ExactScalar>(f: &TropicalPolynomial<S>) -> PlaneTropicalCurve<S> {
    let sub = dual_subdivision(f);
    match sub.dimension() {
        0 => PlaneTropicalCurve::empty(),
        1 => {
            let edges = sub
                .cells
                .iter()
                .map(|cell| {
                    let (p, q) = (cell.vertices[0], cell.vertices[1]);
                    let d = (q.0 - p.0, q.1 - p.1);
                    let g = gcd(d.0, d.1);
                    // points where a_p + p·z = a_q + q·z, i.e. d·z = a_p − a_q
                    let rhs = f.coefficient(p).expect("support").clone() - f.coefficient(q).expect("support").clone();
                    let scale = rhs / S::from_int(d.0 * d.0 + d.1 * d.1);
                    CurveEdge {
                        kind: EdgeKind::Line {
                            through: Point::new(scale.clone() * S::from_int(d.0), scale * S::from_int(d.1)),
                        },
                        primitive: primitive((d.1, -d.0)),
                        weight: g as u64,
                        dual: Some([p, q]),
                    }
                })
                .collect();
            PlaneTropicalCurve { vertices: Vec::new(), edges }
        }
        _ => {
            let cells: Vec<_> = sub.two_cells().collect();
            let vertices: Vec<Point<S>> =
                cells.iter().map(|c| c.dual_vertex.clone().expect("2-cells carry a dual vertex")).collect();
            let mut incidence: BTreeMap<(LatticePoint, LatticePoint), Vec<usize>> = BTreeMap::new();
            for (k, cell) in cells.iter().enumerate() {
                for (a, b) in cell.boundary() {
                    incidence.entry((a.min(b), a.max(b))).or_default().push(k);
                }
            }
            let mut edges = Vec::new();
            for ((p, q), owners) in incidence {
                let d = (q.0 - p.0, q.1 - p.1);
                let weight = gcd(d.0, d.1) as u64;
                let normal = primitive((d.1, -d.0));
                let dual = Some([p, q]);
                match owners.as_slice() {
                    [k1, k2] => {
                        let (v1, v2) = (&vertices[*k1], &vertices[*k2]);
                        let dx = v2.x.clone() - v1.x.clone();
                        let dy = v2.y.clone() - v1.y.clone();
                        let along = dot((&dx, &dy), normal);
                        debug_assert!(cross((&dx, &dy), normal).is_zero());
                        let dir = if along.is_positive() { normal } else { (-normal.0, -normal.1) };
                        edges.push(CurveEdge {
                            kind: EdgeKind::Segment { a: *k1, b: *k2 },
                            primitive: dir,
                            weight,
                            dual,
                        });
                    }
                    [k] => {
                        let inner = cells[*k]
                            .vertices
                            .iter()
                            .find(|c| (c.0 - p.0) * d.1 - (c.1 - p.1) * d.0 != 0)
                            .expect("a 2-cell has a vertex off each of its edges");
                        let side = (inner.0 - p.0) * normal.0 + (inner.1 - p.1) * normal.1;
                        let dir = if side < 0 { normal } else { (-normal.0, -normal.1) };
                        edges.push(CurveEdge { kind: EdgeKind::Ray { from: *k }, primitive: dir, weight, dual });
                    }
                    _ => unreachable!("a subdivision edge borders one or two cells"),
                }
            }
            PlaneTropicalCurve { vertices, edges }
        }
    }
}
