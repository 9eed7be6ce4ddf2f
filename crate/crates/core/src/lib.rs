//! Exact tropical geometry.
//!
//! * [`semiring`]: max-plus arithmetic, its dequantization family and free energy.
//! * [`plane`]: tropical polynomials in two variables, dual subdivisions and corner loci.
//! * [`metric`]: abstract tropical curves as metric graphs.
//! * [`floor`]: floor diagrams and the plane Gromov–Witten and Welschinger counts.
//! * [`reconstruct`]: plane curves through vertically stretched configurations.
//!
//! The geometry is generic over an [`ExactScalar`]; the aliases below fix it to
//! `Ratio<i64>`, which is what the command-line tool uses.

pub mod error;
pub mod floor;
pub mod metric;
pub mod plane;
pub mod reconstruct;
pub mod scalar;
pub mod semiring;

pub use error::{Error, Result};
pub use scalar::{ExactScalar, Length};
pub use semiring::Tropical;

/// Exact rational scalar used by the concrete aliases.
pub type Rational = num_rational::Ratio<i64>;

/// An element of `Q ∪ {−∞}`.
pub type TropicalValue = Tropical<Rational>;
pub type TropicalPolynomial2 = plane::TropicalPolynomial<Rational>;
pub type PlaneCurve = plane::PlaneTropicalCurve<Rational>;
pub type Subdivision = plane::NewtonSubdivision<Rational>;
pub type MetricGraph = metric::MetricGraph<Rational>;
pub type Configuration = reconstruct::PointConfiguration<Rational>;
