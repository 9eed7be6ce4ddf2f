//! Regular subdivisions of Newton polygons induced by lifting the support by
//! the coefficients and projecting the upper convex hull.

use std::collections::BTreeSet;

use super::polynomial::{LatticePoint, TropicalPolynomial};
use super::Point;
use crate::scalar::ExactScalar;

fn cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Strict convex hull vertices in counter-clockwise order (Andrew's monotone chain).
///
/// Collinear input yields its two extreme points; a single point yields itself.
pub fn convex_hull(points: &[LatticePoint]) -> Vec<LatticePoint> {
    let mut pts: Vec<LatticePoint> = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<LatticePoint> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<LatticePoint> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    lower
}

/// Twice the Euclidean area of a lattice polygon given by its vertices in order.
pub fn doubled_area(polygon: &[LatticePoint]) -> i64 {
    if polygon.len() < 3 {
        return 0;
    }
    let n = polygon.len();
    let twice: i64 = (0..n)
        .map(|k| {
            let (a, b) = (polygon[k], polygon[(k + 1) % n]);
            a.0 * b.1 - a.1 * b.0
        })
        .sum();
    twice.abs()
}

/// A cell of the subdivision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell<S> {
    /// Vertices of the cell polygon, counter-clockwise (two endpoints for a segment).
    pub vertices: Vec<LatticePoint>,
    /// Every support point whose lift lies on the cell's face of the upper hull.
    pub points: Vec<LatticePoint>,
    /// For two-dimensional cells, the point of the plane where all of the cell's
    /// monomials tie.
    pub dual_vertex: Option<Point<S>>,
}

impl<S> Cell<S> {
    pub fn dimension(&self) -> usize {
        match self.vertices.len() {
            1 => 0,
            2 => 1,
            _ => 2,
        }
    }

    pub fn doubled_area(&self) -> i64 {
        doubled_area(&self.vertices)
    }

    /// Boundary edges as consecutive vertex pairs (empty below dimension 2).
    pub fn boundary(&self) -> Vec<(LatticePoint, LatticePoint)> {
        if self.vertices.len() < 3 {
            return Vec::new();
        }
        let n = self.vertices.len();
        (0..n).map(|k| (self.vertices[k], self.vertices[(k + 1) % n])).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonSubdivision<S> {
    /// Vertices of the Newton polygon, counter-clockwise.
    pub newton_polygon: Vec<LatticePoint>,
    pub cells: Vec<Cell<S>>,
    /// Support points that lie strictly below the upper hull of the lift.
    pub hull_absent: Vec<LatticePoint>,
}

impl<S: ExactScalar> NewtonSubdivision<S> {
    pub fn dimension(&self) -> usize {
        match self.newton_polygon.len() {
            1 => 0,
            2 => 1,
            _ => 2,
        }
    }

    pub fn newton_doubled_area(&self) -> i64 {
        doubled_area(&self.newton_polygon)
    }

    /// Vertices of the subdivision: the monomials that strictly dominate somewhere.
    pub fn vertices(&self) -> Vec<LatticePoint> {
        let set: BTreeSet<LatticePoint> = self.cells.iter().flat_map(|c| c.vertices.iter().copied()).collect();
        set.into_iter().collect()
    }

    pub fn two_cells(&self) -> impl Iterator<Item = &Cell<S>> {
        self.cells.iter().filter(|c| c.dimension() == 2)
    }
}

/// Solves `a = c + α·i + β·j` through three lifted points; `None` when the
/// projections are collinear.
fn plane_through<S: ExactScalar>(pts: [(LatticePoint, &S); 3]) -> Option<(S, S, S)> {
    let [(p0, a0), (p1, a1), (p2, a2)] = pts;
    let (di1, dj1) = (p1.0 - p0.0, p1.1 - p0.1);
    let (di2, dj2) = (p2.0 - p0.0, p2.1 - p0.1);
    let det = di1 * dj2 - di2 * dj1;
    if det == 0 {
        return None;
    }
    let da1 = a1.clone() - a0.clone();
    let da2 = a2.clone() - a0.clone();
    let det_s = S::from_int(det);
    let alpha = (da1.clone() * S::from_int(dj2) - da2.clone() * S::from_int(dj1)) / det_s.clone();
    let beta = (S::from_int(di1) * da2 - S::from_int(di2) * da1) / det_s;
    let c = a0.clone() - alpha.clone() * S::from_int(p0.0) - beta.clone() * S::from_int(p0.1);
    Some((c, alpha, beta))
}

/// Regular subdivision of the Newton polygon induced by the coefficient lift.
pub fn dual_subdivision<S: ExactScalar>(f: &TropicalPolynomial<S>) -> NewtonSubdivision<S> {
    let terms: Vec<(LatticePoint, S)> = f.terms().map(|(p, a)| (p, a.clone())).collect();
    let support: Vec<LatticePoint> = terms.iter().map(|(p, _)| *p).collect();
    let newton_polygon = convex_hull(&support);
    let cells = match newton_polygon.len() {
        1 => vec![Cell { vertices: newton_polygon.clone(), points: support.clone(), dual_vertex: None }],
        2 => collinear_cells(&terms),
        _ => planar_cells(&terms),
    };
    let covered: BTreeSet<LatticePoint> = cells.iter().flat_map(|c| c.points.iter().copied()).collect();
    let hull_absent = support.iter().copied().filter(|p| !covered.contains(p)).collect();
    NewtonSubdivision { newton_polygon, cells, hull_absent }
}

fn planar_cells<S: ExactScalar>(terms: &[(LatticePoint, S)]) -> Vec<Cell<S>> {
    let n = terms.len();
    let mut seen: BTreeSet<Vec<LatticePoint>> = BTreeSet::new();
    let mut cells = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let Some((c0, alpha, beta)) =
                    plane_through([(terms[a].0, &terms[a].1), (terms[b].0, &terms[b].1), (terms[c].0, &terms[c].1)])
                else {
                    continue;
                };
                let mut tied = Vec::new();
                let mut supporting = true;
                for ((i, j), coeff) in terms {
                    let plane = c0.clone() + alpha.clone() * S::from_int(*i) + beta.clone() * S::from_int(*j);
                    match coeff.cmp(&plane) {
                        std::cmp::Ordering::Greater => {
                            supporting = false;
                            break;
                        }
                        std::cmp::Ordering::Equal => tied.push((*i, *j)),
                        std::cmp::Ordering::Less => {}
                    }
                }
                if !supporting || !seen.insert(tied.clone()) {
                    continue;
                }
                cells.push(Cell {
                    vertices: convex_hull(&tied),
                    points: tied,
                    dual_vertex: Some(Point::new(-alpha, -beta)),
                });
            }
        }
    }
    cells.sort_by(|x, y| x.points.cmp(&y.points));
    cells
}

fn collinear_cells<S: ExactScalar>(terms: &[(LatticePoint, S)]) -> Vec<Cell<S>> {
    // Order along the supporting line and take the upper hull of (position, coefficient).
    let mut sorted: Vec<(LatticePoint, S)> = terms.to_vec();
    sorted.sort_by_key(|x| x.0);
    let origin = sorted[0].0;
    // the first coordinate is strictly monotone along the line unless the line is vertical
    let along_i = sorted.iter().any(|(p, _)| p.0 != origin.0);
    let key = |p: LatticePoint| if along_i { p.0 - origin.0 } else { p.1 - origin.1 };
    let turn = |o: &(LatticePoint, S), a: &(LatticePoint, S), b: &(LatticePoint, S)| {
        // sign of the cross product in the (position, coefficient) plane
        let (ko, ka, kb) = (key(o.0), key(a.0), key(b.0));
        S::from_int(ka - ko) * (b.1.clone() - o.1.clone()) - S::from_int(kb - ko) * (a.1.clone() - o.1.clone())
    };
    let mut hull: Vec<(LatticePoint, S)> = Vec::new();
    for t in &sorted {
        while hull.len() >= 2 && turn(&hull[hull.len() - 2], &hull[hull.len() - 1], t) >= S::zero() {
            hull.pop();
        }
        hull.push(t.clone());
    }
    hull.windows(2)
        .map(|w| {
            let (lo, hi) = (&w[0], &w[1]);
            let points = sorted
                .iter()
                .filter(|t| key(t.0) >= key(lo.0) && key(t.0) <= key(hi.0) && turn(lo, hi, t) == S::zero())
                .map(|t| t.0)
                .collect();
            Cell { vertices: vec![lo.0, hi.0], points, dual_vertex: None }
        })
        .collect()
}
