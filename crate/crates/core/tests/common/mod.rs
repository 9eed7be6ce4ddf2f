#![allow(dead_code)]

use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;
use tropical::metric::{GraphPoint, MetricEdge, MetricGraph, VertexFlags};
use tropical::plane::{EdgeKind, PlaneTropicalCurve, Point, TropicalPolynomial};
use tropical::{Length, Rational};

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// A random rational `p/d` with `|p| ≤ num` and `d ∈ 1..=den`.
pub fn rational(rng: &mut impl Rng, num: i64, den: i64) -> Rational {
    Rational::new(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

/// Random polynomial with support in the degree-`d` triangle.
pub fn polynomial(rng: &mut impl Rng, d: i64) -> TropicalPolynomial<Rational> {
    let mut terms = Vec::new();
    for i in 0..=d {
        for j in 0..=d - i {
            if rng.gen_bool(0.6) {
                terms.push(((i, j), rational(rng, 20, 4)));
            }
        }
    }
    if terms.is_empty() {
        terms.push(((rng.gen_range(0..=d), 0), rational(rng, 20, 4)));
    }
    TropicalPolynomial::new(terms).unwrap()
}

/// Random connected metric graph: a core of 1 to 4 vertices with finite edges,
/// plus infinite leaves, some of them marked or punctured.
pub fn metric_graph(rng: &mut impl Rng) -> MetricGraph<Rational> {
    let core = rng.gen_range(1..=4);
    let mut flags = vec![VertexFlags::default(); core];
    let mut edges = Vec::new();
    let length =
        |rng: &mut dyn rand::RngCore| Length::Finite(Rational::new(rng.gen_range(1..=12), rng.gen_range(1..=3)));
    for v in 1..core {
        let w = rng.gen_range(0..v);
        edges.push(MetricEdge { a: w, b: v, length: length(rng) });
    }
    for _ in 0..rng.gen_range(0..=2) {
        let (a, b) = (rng.gen_range(0..core), rng.gen_range(0..core));
        edges.push(MetricEdge { a, b, length: length(rng) });
    }
    let leaves = rng.gen_range(0..=2);
    let mut attach: Vec<usize> = (0..leaves).map(|_| rng.gen_range(0..core)).collect();
    for v in 0..core {
        let valence: usize = edges.iter().map(|e| usize::from(e.a == v) + usize::from(e.b == v)).sum::<usize>()
            + attach.iter().filter(|&&a| a == v).count();
        if valence < 2 && edges.iter().all(|e| !e.is_loop() || e.a != v) {
            for _ in valence..2 {
                attach.push(v);
            }
        }
    }
    for a in attach {
        let leaf = flags.len();
        flags.push(match rng.gen_range(0..3) {
            0 => VertexFlags { marked: true, puncture: false },
            1 => VertexFlags { marked: false, puncture: true },
            _ => VertexFlags::default(),
        });
        edges.push(MetricEdge { a, b: leaf, length: Length::Infinite });
    }
    MetricGraph::new(flags, edges).expect("generated graph is valid")
}

/// A random point of `g` where a modification is allowed.
pub fn modification_point(rng: &mut impl Rng, g: &MetricGraph<Rational>) -> GraphPoint<Rational> {
    let inner: Vec<usize> = (0..g.vertices().len()).filter(|&v| g.valence(v) >= 2).collect();
    if rng.gen_bool(0.3) {
        return GraphPoint::Vertex(inner[rng.gen_range(0..inner.len())]);
    }
    let k = rng.gen_range(0..g.edges().len());
    let e = &g.edges()[k];
    match &e.length {
        Length::Finite(l) => {
            let t = Rational::new(rng.gen_range(1..8), 8);
            GraphPoint::OnEdge { edge: k, from: e.a, distance: l * t }
        }
        Length::Infinite => {
            let from = if g.valence(e.a) >= 2 { e.a } else { e.b };
            GraphPoint::OnEdge { edge: k, from, distance: Rational::new(rng.gen_range(1..20), 3) }
        }
    }
}

/// Same graph with vertices renamed by a random permutation and edges shuffled.
pub fn relabeled(rng: &mut impl Rng, g: &MetricGraph<Rational>) -> MetricGraph<Rational> {
    use rand::seq::SliceRandom;
    let n = g.vertices().len();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut flags = vec![VertexFlags::default(); n];
    for v in 0..n {
        flags[perm[v]] = g.vertices()[v];
    }
    let mut edges: Vec<MetricEdge<Rational>> =
        g.edges().iter().map(|e| MetricEdge { a: perm[e.b], b: perm[e.a], length: e.length.clone() }).collect();
    edges.shuffle(rng);
    MetricGraph::new(flags, edges).unwrap()
}

/// Outcome of comparing a corner locus with finite differences on a grid.
#[derive(Debug, Default)]
pub struct GridReport {
    pub flagged: usize,
    pub on_curve: usize,
    /// Flagged grid points whose neighbourhood misses the curve.
    pub false_flags: usize,
    /// Grid points on the curve that were not flagged.
    pub missed: usize,
}

/// Lays a `size × size` grid of step `1/steps` over the curve and checks that
/// a grid point has a positive second difference along an axis exactly when
/// the curve passes through the open axis segment around it.
pub fn grid_oracle(f: &TropicalPolynomial<Rational>, c: &PlaneTropicalCurve<Rational>, size: i64) -> GridReport {
    let (lo, hi) = bounding_box(c);
    let span = (hi.0 - lo.0).max(hi.1 - lo.1) + q(2);
    let steps = (Rational::from_integer(size - 1) / span).floor().to_integer().max(1);
    let h = Rational::new(1, steps);
    let x0 = ((lo.0 - q(1)) * q(steps)).floor().to_integer();
    let y0 = ((lo.1 - q(1)) * q(steps)).floor().to_integer();

    // f · L · steps as integers, where L clears the coefficient denominators.
    let l = f.terms().fold(1i64, |acc, (_, a)| acc.lcm(a.denom()));
    let terms: Vec<(i64, i64, i128)> =
        f.terms().map(|((i, j), a)| (i, j, (a * q(l) * q(steps)).to_integer() as i128)).collect();
    let eval = |gx: i64, gy: i64| -> i128 {
        terms.iter().map(|&(i, j, a)| a + (i as i128 * gx as i128 + j as i128 * gy as i128) * l as i128).max().unwrap()
    };
    let n = size as usize + 2;
    let mut values = vec![0i128; n * n];
    for a in 0..n {
        for b in 0..n {
            values[a * n + b] = eval(x0 - 1 + a as i64, y0 - 1 + b as i64);
        }
    }
    let at = |a: usize, b: usize| values[a * n + b];
    let mut flagged = vec![[false; 2]; (size * size) as usize];
    let mut report = GridReport::default();
    for a in 1..=size as usize {
        for b in 1..=size as usize {
            let kx = at(a - 1, b) + at(a + 1, b) - 2 * at(a, b) > 0;
            let ky = at(a, b - 1) + at(a, b + 1) - 2 * at(a, b) > 0;
            flagged[(a - 1) * size as usize + (b - 1)] = [kx, ky];
            if !(kx || ky) {
                continue;
            }
            report.flagged += 1;
            let p = Point::new(Rational::new(x0 + a as i64 - 1, steps), Rational::new(y0 + b as i64 - 1, steps));
            let meets = |axis: usize| c.edges.iter().any(|e| crosses(c, e, &p, axis, &h));
            if (kx && !meets(0)) || (ky && !meets(1)) {
                report.false_flags += 1;
            }
        }
    }
    for (gx, gy) in grid_points_on(c, steps) {
        let (a, b) = (gx - x0, gy - y0);
        if (0..size).contains(&a) && (0..size).contains(&b) {
            report.on_curve += 1;
            let [kx, ky] = flagged[(a * size + b) as usize];
            if !(kx || ky) {
                report.missed += 1;
            }
        }
    }
    report
}

fn bounding_box(c: &PlaneTropicalCurve<Rational>) -> ((Rational, Rational), (Rational, Rational)) {
    let mut pts: Vec<&Point<Rational>> = c.vertices.iter().collect();
    for e in &c.edges {
        if let EdgeKind::Line { through } = &e.kind {
            pts.push(through);
        }
    }
    if pts.is_empty() {
        return ((q(-1), q(-1)), (q(1), q(1)));
    }
    let xs = pts.iter().map(|p| p.x);
    let ys = pts.iter().map(|p| p.y);
    ((xs.clone().min().unwrap(), ys.clone().min().unwrap()), (xs.max().unwrap(), ys.max().unwrap()))
}

/// Parameter range of an edge: base point and `t` bounds along its primitive direction.
fn edge_span(
    c: &PlaneTropicalCurve<Rational>,
    e: &tropical::plane::CurveEdge<Rational>,
) -> (Point<Rational>, Option<Rational>, Option<Rational>) {
    match &e.kind {
        EdgeKind::Segment { a, b } => {
            let (pa, pb) = (&c.vertices[*a], &c.vertices[*b]);
            let u = e.primitive;
            let t = if u.0 != 0 { (pb.x - pa.x) / q(u.0) } else { (pb.y - pa.y) / q(u.1) };
            (pa.clone(), Some(q(0)), Some(t))
        }
        EdgeKind::Ray { from } => (c.vertices[*from].clone(), Some(q(0)), None),
        EdgeKind::Line { through } => (through.clone(), None, None),
    }
}

fn in_range(t: &Rational, lo: &Option<Rational>, hi: &Option<Rational>) -> bool {
    lo.as_ref().is_none_or(|l| t >= l) && hi.as_ref().is_none_or(|h| t <= h)
}

/// Whether the edge meets the open segment `p ± h·e_axis`.
fn crosses(
    c: &PlaneTropicalCurve<Rational>,
    e: &tropical::plane::CurveEdge<Rational>,
    p: &Point<Rational>,
    axis: usize,
    h: &Rational,
) -> bool {
    let (base, lo, hi) = edge_span(c, e);
    let u = (q(e.primitive.0), q(e.primitive.1));
    let (along, across) = if axis == 0 { ((u.0, u.1), (p.x, p.y)) } else { ((u.1, u.0), (p.y, p.x)) };
    let (b_along, b_across) = if axis == 0 { (base.x, base.y) } else { (base.y, base.x) };
    if along.1.is_zero() {
        // parallel to the axis: overlap of two collinear intervals
        if b_across != across.1 {
            return false;
        }
        let (s_lo, s_hi) = (across.0 - h, across.0 + h);
        let dir = along.0;
        let ends = |t: &Option<Rational>| t.as_ref().map(|t| b_along + t * dir);
        let (mut e_lo, mut e_hi) = (ends(&lo), ends(&hi));
        if dir.is_negative() {
            std::mem::swap(&mut e_lo, &mut e_hi);
        }
        return e_lo.is_none_or(|v| v < s_hi) && e_hi.is_none_or(|v| v > s_lo);
    }
    let t = (across.1 - b_across) / along.1;
    if !in_range(&t, &lo, &hi) {
        return false;
    }
    let s = b_along + t * along.0 - across.0;
    s.abs() < *h
}

/// Grid points `(gx, gy)` (coordinates `gx/steps`, `gy/steps`) lying on the curve,
/// found by intersecting every edge with the grid rows or columns.
fn grid_points_on(c: &PlaneTropicalCurve<Rational>, steps: i64) -> Vec<(i64, i64)> {
    let s = q(steps);
    let (lo, hi) = bounding_box(c);
    let limit = (hi.0 - lo.0).max(hi.1 - lo.1) * s + q(4 * steps + 400);
    let mut out = Vec::new();
    for e in &c.edges {
        let (base, t_lo, t_hi) = edge_span(c, e);
        let u = e.primitive;
        // walk the edge in units of 1/steps along whichever coordinate moves
        let (coord, other, du, dv) =
            if u.0 != 0 { (base.x * s, base.y * s, u.0, u.1) } else { (base.y * s, base.x * s, u.1, u.0) };
        let first = |bound: &Option<Rational>, default: Rational| bound.as_ref().map_or(default, |t| coord + t * q(du));
        let (mut a, mut b) =
            (first(&t_lo, coord - limit * q(du.signum())), first(&t_hi, coord + limit * q(du.signum())));
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        let mut k = a.ceil().to_integer();
        while q(k) <= b {
            let w = other + (q(k) - coord) * q(dv) / q(du);
            if w.is_integer() {
                let (gx, gy) = if u.0 != 0 { (k, w.to_integer()) } else { (w.to_integer(), k) };
                out.push((gx, gy));
            }
            k += 1;
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}
