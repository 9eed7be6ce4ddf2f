//! Plane tropical curves: polynomials, their dual subdivisions and corner loci.

mod curve;
pub mod io;
mod polynomial;
mod region;
pub mod subdivision;

pub use curve::{
    check_balancing, corner_locus, lattice_length, BalancingViolation, CurveEdge, EdgeKind, PlaneTropicalCurve,
};
pub use polynomial::{LatticePoint, TropicalPolynomial};
pub use region::{region_monomials, Region};
pub use subdivision::{dual_subdivision, Cell, NewtonSubdivision};

use crate::scalar::ExactScalar;

/// A point of the plane with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point<S> {
    pub x: S,
    pub y: S,
}

impl<S> Point<S> {
    pub fn new(x: S, y: S) -> Self {
        Point { x, y }
    }
}

impl<S: ExactScalar> Point<S> {
    /// `self + k·(u, v)`.
    pub fn offset(&self, k: &S, dir: (i64, i64)) -> Self {
        Point::new(self.x.clone() + k.clone() * S::from_int(dir.0), self.y.clone() + k.clone() * S::from_int(dir.1))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64_lossy(), self.y.to_f64_lossy())
    }
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}

/// Reduces an integer vector to its primitive representative.
pub fn primitive(v: (i64, i64)) -> (i64, i64) {
    let g = gcd(v.0, v.1);
    if g == 0 {
        v
    } else {
        (v.0 / g, v.1 / g)
    }
}
