use super::polynomial::{LatticePoint, TropicalPolynomial};
use super::subdivision::dual_subdivision;
use super::Point;
use crate::scalar::ExactScalar;

/// A connected component of the complement of a corner locus, identified by
/// the monomial that strictly dominates on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region<S> {
    pub monomial: LatticePoint,
    /// A point of the component; only `monomial` attains the maximum there.
    pub sample: Point<S>,
}

/// One region per vertex of the dual subdivision, ordered by monomial.
///
/// Monomials that never dominate strictly (below the lifted hull, or lying
/// inside a cell of tied coefficients) have no region.
pub fn region_monomials<S: ExactScalar>(f: &TropicalPolynomial<S>) -> Vec<Region<S>> {
    let sub = dual_subdivision(f);
    sub.vertices()
        .into_iter()
        .map(|p| {
            let anchor = anchor_point(f, &sub, p);
            Region { monomial: p, sample: push_into_region(f, p, &anchor) }
        })
        .collect()
}

/// A point where `p` is among the maximizing monomials.
fn anchor_point<S: ExactScalar>(
    f: &TropicalPolynomial<S>,
    sub: &super::NewtonSubdivision<S>,
    p: LatticePoint,
) -> Point<S> {
    let cell = sub.cells.iter().find(|c| c.vertices.contains(&p)).expect("subdivision vertex lies on a cell");
    match (&cell.dual_vertex, cell.vertices.as_slice()) {
        (Some(v), _) => v.clone(),
        (None, [a, b]) => {
            let d = (b.0 - a.0, b.1 - a.1);
            let rhs = f.coefficient(*a).expect("support").clone() - f.coefficient(*b).expect("support").clone();
            let scale = rhs / S::from_int(d.0 * d.0 + d.1 * d.1);
            Point::new(scale.clone() * S::from_int(d.0), scale * S::from_int(d.1))
        }
        _ => Point::new(S::zero(), S::zero()),
    }
}

/// Moves from `anchor` into the open region where `p` strictly dominates.
fn push_into_region<S: ExactScalar>(f: &TropicalPolynomial<S>, p: LatticePoint, anchor: &Point<S>) -> Point<S> {
    let tied = f.dominant_monomials(&anchor.x, &anchor.y);
    let others: Vec<LatticePoint> = tied.iter().copied().filter(|&q| q != p).collect();
    if others.is_empty() {
        return anchor.clone();
    }
    // p is a vertex of conv(tied), so its normal cone is open; the sum of the two
    // adjacent edge normals has coordinates bounded by twice the support span.
    let span = f.support().iter().map(|&(i, j)| i.max(j)).max().unwrap_or(0) + 1;
    let bound = 2 * span;
    let dir = (-bound..=bound)
        .flat_map(|u| (-bound..=bound).map(move |v| (u, v)))
        .find(|&(u, v)| others.iter().all(|q| (p.0 - q.0) * u + (p.1 - q.1) * v > 0))
        .expect("a subdivision vertex has an open normal cone");
    let top = f.monomial_value(p, &anchor.x, &anchor.y).expect("support");
    let mut step = S::one();
    for (q, a) in f.terms() {
        if tied.contains(&q) {
            continue;
        }
        let gap = top.clone() - (a.clone() + S::from_int(q.0) * anchor.x.clone() + S::from_int(q.1) * anchor.y.clone());
        let closing = (q.0 - p.0) * dir.0 + (q.1 - p.1) * dir.1;
        if closing > 0 {
            let limit = gap / S::from_int(2 * closing);
            if limit < step {
                step = limit;
            }
        }
    }
    let sample = anchor.offset(&step, dir);
    debug_assert_eq!(f.dominant_monomials(&sample.x, &sample.y), vec![p]);
    sample
}
