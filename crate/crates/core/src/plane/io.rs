//! JSON and SVG encodings of plane tropical curves.

use serde::{Deserialize, Serialize};

use super::{CurveEdge, EdgeKind, PlaneTropicalCurve, Point};
use crate::error::{Error, Result};
use crate::scalar::{format_exact, ExactScalar};

#[derive(Serialize, Deserialize)]
struct CurveJson {
    vertices: Vec<[String; 2]>,
    edges: Vec<EdgeJson>,
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ends: Option<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ray: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    line: Option<[String; 2]>,
    primitive: [i64; 2],
    weight: u64,
}

fn point_json<S: ExactScalar>(p: &Point<S>) -> [String; 2] {
    [format_exact(&p.x), format_exact(&p.y)]
}

fn parse_point<S: ExactScalar>(p: &[String; 2]) -> Result<Point<S>> {
    let coord = |s: &str| S::parse_exact(s).ok_or_else(|| Error::invalid(format!("bad coordinate `{s}`")));
    Ok(Point::new(coord(&p[0])?, coord(&p[1])?))
}

pub fn curve_to_json<S: ExactScalar>(c: &PlaneTropicalCurve<S>) -> String {
    let doc = CurveJson {
        vertices: c.vertices.iter().map(point_json).collect(),
        edges: c
            .edges
            .iter()
            .map(|e| {
                let mut j = EdgeJson {
                    ends: None,
                    ray: None,
                    line: None,
                    primitive: [e.primitive.0, e.primitive.1],
                    weight: e.weight,
                };
                match &e.kind {
                    EdgeKind::Segment { a, b } => j.ends = Some([*a, *b]),
                    EdgeKind::Ray { from } => j.ray = Some(*from),
                    EdgeKind::Line { through } => j.line = Some(point_json(through)),
                }
                j
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("curve serializes") + "\n"
}

/// Parses and validates a curve document.
pub fn curve_from_json<S: ExactScalar>(text: &str) -> Result<PlaneTropicalCurve<S>> {
    let doc: CurveJson = serde_json::from_str(text).map_err(|e| Error::invalid(format!("curve JSON: {e}")))?;
    let vertices = doc.vertices.iter().map(parse_point).collect::<Result<Vec<_>>>()?;
    let edges = doc
        .edges
        .into_iter()
        .enumerate()
        .map(|(k, e)| {
            let kind = match (e.ends, e.ray, e.line) {
                (Some([a, b]), None, None) => EdgeKind::Segment { a, b },
                (None, Some(from), None) => EdgeKind::Ray { from },
                (None, None, Some(p)) => EdgeKind::Line { through: parse_point(&p)? },
                _ => return Err(Error::invalid(format!("edge {k} needs exactly one of ends, ray, line"))),
            };
            Ok(CurveEdge { kind, primitive: (e.primitive[0], e.primitive[1]), weight: e.weight, dual: None })
        })
        .collect::<Result<Vec<_>>>()?;
    let curve = PlaneTropicalCurve { vertices, edges };
    curve.validate()?;
    Ok(curve)
}

struct Frame {
    xmin: f64,
    xmax: f64,
    ymin: f64,
    ymax: f64,
    scale: f64,
}

const CANVAS: f64 = 600.0;

impl Frame {
    fn around(points: &[(f64, f64)]) -> Frame {
        let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for &(x, y) in points {
            xmin = xmin.min(x);
            xmax = xmax.max(x);
            ymin = ymin.min(y);
            ymax = ymax.max(y);
        }
        if points.is_empty() {
            (xmin, xmax, ymin, ymax) = (-1.0, 1.0, -1.0, 1.0);
        }
        let pad_x = ((xmax - xmin) * 0.2).max(1.0);
        let pad_y = ((ymax - ymin) * 0.2).max(1.0);
        let (mut xmin, mut xmax, mut ymin, mut ymax) = (xmin - pad_x, xmax + pad_x, ymin - pad_y, ymax + pad_y);
        // keep the canvas no thinner than 1:4
        let widen = |lo: &mut f64, hi: &mut f64, other: f64| {
            let extra = (other / 4.0 - (*hi - *lo)).max(0.0) / 2.0;
            *lo -= extra;
            *hi += extra;
        };
        widen(&mut xmin, &mut xmax, ymax - ymin);
        widen(&mut ymin, &mut ymax, xmax - xmin);
        let scale = CANVAS / (xmax - xmin).max(ymax - ymin);
        Frame { xmin, xmax, ymin, ymax, scale }
    }

    fn px(&self, (x, y): (f64, f64)) -> (f64, f64) {
        ((x - self.xmin) * self.scale, (self.ymax - y) * self.scale)
    }

    fn width(&self) -> f64 {
        (self.xmax - self.xmin) * self.scale
    }

    fn height(&self) -> f64 {
        (self.ymax - self.ymin) * self.scale
    }

    /// Clips `origin + s·dir`, `s ∈ [lo, hi]`, to the frame (Liang–Barsky).
    fn clip(&self, origin: (f64, f64), dir: (f64, f64), lo: f64, hi: f64) -> Option<(f64, f64)> {
        let (mut lo, mut hi) = (lo, hi);
        for (p, q) in [
            (-dir.0, origin.0 - self.xmin),
            (dir.0, self.xmax - origin.0),
            (-dir.1, origin.1 - self.ymin),
            (dir.1, self.ymax - origin.1),
        ] {
            if p == 0.0 {
                if q < 0.0 {
                    return None;
                }
            } else {
                let r = q / p;
                if p < 0.0 {
                    lo = lo.max(r);
                } else {
                    hi = hi.min(r);
                }
            }
        }
        (lo <= hi).then_some((lo, hi))
    }
}

/// Renders the curve clipped to a padded bounding box of its vertices and the
/// overlay points; weights of at least 2 are drawn as labels.
pub fn curve_to_svg<S: ExactScalar>(c: &PlaneTropicalCurve<S>, overlay: &[Point<S>]) -> String {
    let mut anchors: Vec<(f64, f64)> = c.vertices.iter().map(Point::to_f64).collect();
    anchors.extend(overlay.iter().map(Point::to_f64));
    anchors.extend(c.edges.iter().filter_map(|e| match &e.kind {
        EdgeKind::Line { through } => Some(through.to_f64()),
        _ => None,
    }));
    let frame = Frame::around(&anchors);
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0}\" height=\"{:.0}\" viewBox=\"0 0 {:.3} {:.3}\">\n",
        frame.width(),
        frame.height(),
        frame.width(),
        frame.height()
    );
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    for e in &c.edges {
        let dir = (e.primitive.0 as f64, e.primitive.1 as f64);
        let (origin, lo, hi) = match &e.kind {
            EdgeKind::Segment { a, b } => {
                let (pa, pb) = (c.vertices[*a].to_f64(), c.vertices[*b].to_f64());
                let len = if dir.0 != 0.0 { (pb.0 - pa.0) / dir.0 } else { (pb.1 - pa.1) / dir.1 };
                (pa, 0.0, len)
            }
            EdgeKind::Ray { from } => (c.vertices[*from].to_f64(), 0.0, f64::INFINITY),
            EdgeKind::Line { through } => (through.to_f64(), f64::NEG_INFINITY, f64::INFINITY),
        };
        let Some((s0, s1)) = frame.clip(origin, dir, lo, hi) else {
            continue;
        };
        let p0 = frame.px((origin.0 + s0 * dir.0, origin.1 + s0 * dir.1));
        let p1 = frame.px((origin.0 + s1 * dir.0, origin.1 + s1 * dir.1));
        out.push_str(&format!(
            "<line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"black\" stroke-width=\"{}\"/>\n",
            p0.0,
            p0.1,
            p1.0,
            p1.1,
            1 + e.weight
        ));
        if e.weight >= 2 {
            let mid = ((p0.0 + p1.0) / 2.0, (p0.1 + p1.1) / 2.0);
            out.push_str(&format!(
                "<text x=\"{:.3}\" y=\"{:.3}\" font-size=\"14\" fill=\"black\">{}</text>\n",
                mid.0 + 4.0,
                mid.1 - 4.0,
                e.weight
            ));
        }
    }
    for v in &c.vertices {
        let p = frame.px(v.to_f64());
        out.push_str(&format!("<circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"2\" fill=\"black\"/>\n", p.0, p.1));
    }
    for pt in overlay {
        let p = frame.px(pt.to_f64());
        out.push_str(&format!("<circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"4\" fill=\"red\"/>\n", p.0, p.1));
    }
    out.push_str("</svg>\n");
    out
}
