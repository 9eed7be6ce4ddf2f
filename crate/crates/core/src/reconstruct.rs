//! Plane curves through vertically stretched point configurations, built from
//! marked floor diagrams.
//!
//! Point `k` of the configuration sits on the piece of the curve that the
//! marking assigns to it. Each floor is the graph of a convex piecewise-linear
//! function through its point; each elevator is vertical at the abscissa of
//! its point.

use std::collections::HashMap;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::floor::{Element, FloorDiagram, MarkedFloorDiagram};
use crate::plane::{CurveEdge, EdgeKind, PlaneTropicalCurve, Point};
use crate::scalar::{format_exact, ExactScalar};

/// Minimum ratio between vertical gaps and the horizontal spread plus one.
pub const STRETCH: i64 = 100;

/// Points listed from lowest to highest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration<S> {
    points: Vec<Point<S>>,
}

impl<S: ExactScalar> PointConfiguration<S> {
    /// Requires pairwise distinct abscissae and strictly increasing heights.
    pub fn new(points: Vec<Point<S>>) -> Result<Self> {
        for w in points.windows(2) {
            if w[1].y <= w[0].y {
                return Err(Error::invalid("heights must increase strictly with the index"));
            }
        }
        let mut xs: Vec<&S> = points.iter().map(|p| &p.x).collect();
        xs.sort();
        if xs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("abscissae must be pairwise distinct"));
        }
        Ok(PointConfiguration { points })
    }

    pub fn points(&self) -> &[Point<S>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Spread of the abscissae.
    pub fn diameter(&self) -> S {
        let mut xs = self.points.iter().map(|p| &p.x);
        let Some(first) = xs.next() else { return S::zero() };
        let (lo, hi) = xs.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x)));
        hi.clone() - lo.clone()
    }

    /// Smallest vertical gap divided by `diameter + 1`; `None` with fewer than two points.
    pub fn stretch(&self) -> Option<S> {
        let gap = self.points.windows(2).map(|w| w[1].y.clone() - w[0].y.clone()).min()?;
        Some(gap / (self.diameter() + S::one()))
    }

    pub fn is_stretched(&self) -> bool {
        self.stretch().is_none_or(|s| s > S::from_int(STRETCH))
    }
}

/// `n` points with distinct abscissae on the grid `{0, 1/4, …, n − 1/4}`,
/// chosen by `seed`, at heights `k · 100(n + 1)`.
pub fn stretched_config<S: ExactScalar>(n: usize, seed: u64) -> PointConfiguration<S> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gap = S::from_int(STRETCH * (n as i64 + 1));
    let points = sample(&mut rng, 4 * n, n)
        .into_iter()
        .enumerate()
        .map(|(k, slot)| Point::new(S::from_frac(slot as i64, 4), gap.clone() * S::from_int(k as i64)))
        .collect();
    PointConfiguration::new(points).expect("grid points are distinct")
}

/// Whether every point of `cfg` lies on `c`.
pub fn incidence_check<S: ExactScalar>(c: &PlaneTropicalCurve<S>, cfg: &PointConfiguration<S>) -> bool {
    cfg.points.iter().all(|p| c.contains(p))
}

/// Validates `order` as a marking of `d` and reconstructs.
pub fn reconstruct_marking<S: ExactScalar>(
    d: &FloorDiagram,
    order: &[Element],
    cfg: &PointConfiguration<S>,
) -> Result<PlaneTropicalCurve<S>> {
    let md = MarkedFloorDiagram::new(d.clone(), order.to_vec())?;
    reconstruct(&md, cfg)
}

/// A floor as a convex piecewise-linear function pinned through its point.
struct FloorPath<S> {
    /// Elevator abscissae in increasing order with the edge index attached there.
    breaks: Vec<(S, usize)>,
    /// `slopes[k]` holds left of `breaks[k]`; the last one holds right of all breaks.
    slopes: Vec<i64>,
    /// Height at each break.
    heights: Vec<S>,
}

impl<S: ExactScalar> FloorPath<S> {
    fn new(mut breaks: Vec<(S, usize, i64)>, through: &Point<S>) -> Self {
        breaks.sort_by(|a, b| a.0.cmp(&b.0));
        let mut slopes = vec![0];
        for b in &breaks {
            slopes.push(slopes.last().unwrap() + b.2);
        }
        let mut heights = vec![S::zero()];
        for k in 1..breaks.len() {
            let run = breaks[k].0.clone() - breaks[k - 1].0.clone();
            heights.push(heights[k - 1].clone() + run * S::from_int(slopes[k]));
        }
        let breaks: Vec<(S, usize)> = breaks.into_iter().map(|(x, e, _)| (x, e)).collect();
        let mut path = FloorPath { breaks, slopes, heights };
        let shift = through.y.clone() - path.eval(&through.x);
        for h in &mut path.heights {
            *h = h.clone() + shift.clone();
        }
        path
    }

    fn eval(&self, x: &S) -> S {
        match self.breaks.iter().rposition(|(b, _)| b <= x) {
            None => self.heights[0].clone() + (x.clone() - self.breaks[0].0.clone()) * S::from_int(self.slopes[0]),
            Some(k) => {
                self.heights[k].clone() + (x.clone() - self.breaks[k].0.clone()) * S::from_int(self.slopes[k + 1])
            }
        }
    }
}

/// The plane tropical curve through `cfg` that corresponds to `md`.
///
/// Fails with [`Error::InsufficientlyStretched`] when the configuration is
/// not stretched enough or an elevator does not run upwards through its point.
pub fn reconstruct<S: ExactScalar>(
    md: &MarkedFloorDiagram,
    cfg: &PointConfiguration<S>,
) -> Result<PlaneTropicalCurve<S>> {
    let d = md.diagram();
    let order = md.order();
    if cfg.len() != order.len() {
        return Err(Error::invalid(format!("diagram needs {} points, configuration has {}", order.len(), cfg.len())));
    }
    if !cfg.is_stretched() {
        return Err(Error::InsufficientlyStretched(format!(
            "vertical gaps must exceed {STRETCH} times the horizontal spread plus one"
        )));
    }
    let point: HashMap<Element, &Point<S>> = order.iter().copied().zip(cfg.points.iter()).collect();

    let mut paths = HashMap::new();
    for v in d.floors() {
        let breaks = d
            .edges()
            .iter()
            .enumerate()
            .filter_map(|(k, e)| {
                let x = point[&Element::Edge(k)].x.clone();
                if e.to == v {
                    Some((x, k, e.weight as i64))
                } else if e.from == v {
                    Some((x, k, -(e.weight as i64)))
                } else {
                    None
                }
            })
            .collect();
        let path = FloorPath::new(breaks, point[&Element::Floor(v)]);
        assert_eq!(*path.slopes.last().unwrap(), 1, "floor {v} must end with slope 1");
        paths.insert(v, path);
    }

    let mut curve = PlaneTropicalCurve::empty();
    let mut attach = HashMap::new();
    for v in d.floors() {
        let path = &paths[&v];
        let first = curve.vertices.len();
        for (k, ((x, e), h)) in path.breaks.iter().zip(&path.heights).enumerate() {
            attach.insert((v, *e), first + k);
            curve.vertices.push(Point::new(x.clone(), h.clone()));
        }
        let last = curve.vertices.len() - 1;
        curve.edges.push(edge(EdgeKind::Ray { from: first }, (-1, 0), 1));
        for k in first..last {
            curve.edges.push(edge(EdgeKind::Segment { a: k, b: k + 1 }, (1, path.slopes[k - first + 1]), 1));
        }
        curve.edges.push(edge(EdgeKind::Ray { from: last }, (1, 1), 1));
    }

    for (k, e) in d.edges().iter().enumerate() {
        let marked = point[&Element::Edge(k)];
        let head = attach[&(e.to, k)];
        if marked.y >= curve.vertices[head].y {
            return Err(Error::InsufficientlyStretched(format!("point of elevator e{k} lies above its upper floor")));
        }
        if d.is_source(e.from) {
            curve.edges.push(edge(EdgeKind::Ray { from: head }, (0, -1), e.weight));
        } else {
            let tail = attach[&(e.from, k)];
            if marked.y <= curve.vertices[tail].y {
                return Err(Error::InsufficientlyStretched(format!(
                    "point of elevator e{k} lies below its lower floor"
                )));
            }
            curve.edges.push(edge(EdgeKind::Segment { a: tail, b: head }, (0, 1), e.weight));
        }
    }
    curve.validate()?;
    Ok(curve)
}

fn edge<S>(kind: EdgeKind<S>, primitive: (i64, i64), weight: u64) -> CurveEdge<S> {
    CurveEdge { kind, primitive, weight, dual: None }
}

#[derive(Serialize, Deserialize)]
struct ConfigJson {
    points: Vec<[serde_json::Value; 2]>,
}

pub fn config_to_json<S: ExactScalar>(cfg: &PointConfiguration<S>) -> String {
    let doc = ConfigJson {
        points: cfg.points.iter().map(|p| [format_exact(&p.x).into(), format_exact(&p.y).into()]).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("configuration serializes") + "\n"
}

/// Coordinates may be JSON integers or strings such as `"7/4"`.
pub fn config_from_json<S: ExactScalar>(text: &str) -> Result<PointConfiguration<S>> {
    let doc: ConfigJson = serde_json::from_str(text).map_err(|e| Error::invalid(format!("configuration JSON: {e}")))?;
    let coord = |v: &serde_json::Value| {
        let text = match v {
            serde_json::Value::String(s) => s.clone(),
            serde_json::Value::Number(n) => n.to_string(),
            _ => String::new(),
        };
        S::parse_exact(&text).ok_or_else(|| Error::invalid(format!("bad coordinate {v}")))
    };
    let points = doc.points.iter().map(|[x, y]| Ok(Point::new(coord(x)?, coord(y)?))).collect::<Result<Vec<_>>>()?;
    PointConfiguration::new(points)
}
