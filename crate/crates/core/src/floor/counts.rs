use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::enumerate::{enumerate_diagrams_with, Limits};
use super::marking::count_markings;
use super::FloorDiagram;
use crate::error::Result;

/// Which count to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Variant {
    #[default]
    Complex,
    Real,
}

/// Product of the squared edge weights.
pub fn multiplicity(d: &FloorDiagram) -> BigUint {
    d.edges().iter().fold(BigUint::one(), |acc, e| acc * BigUint::from(e.weight * e.weight))
}

/// 0 if some edge has even weight, 1 otherwise.
pub fn real_multiplicity(d: &FloorDiagram) -> u64 {
    u64::from(d.edges().iter().all(|e| e.weight % 2 == 1))
}

fn weighted_sum(d: u64, g: u64, limits: Limits, variant: Variant) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for diagram in enumerate_diagrams_with(d, g, limits)? {
        let weight = match variant {
            Variant::Complex => multiplicity(&diagram),
            Variant::Real => BigUint::from(real_multiplicity(&diagram)),
        };
        if !weight.is_zero() {
            total += count_markings(&diagram)? * weight;
        }
    }
    Ok(total)
}

/// Number of complex curves of degree `d` and genus `g` through `3d − 1 + g` generic points.
pub fn gw_count(d: u64, g: u64) -> Result<BigUint> {
    weighted_sum(d, g, Limits::default(), Variant::Complex)
}

pub fn gw_count_with(d: u64, g: u64, limits: Limits) -> Result<BigUint> {
    weighted_sum(d, g, limits, Variant::Complex)
}

/// Tropical count of real curves, weighting each marked diagram by its real multiplicity.
pub fn welschinger_count(d: u64, g: u64) -> Result<BigUint> {
    weighted_sum(d, g, Limits::default(), Variant::Real)
}

pub fn welschinger_count_with(d: u64, g: u64, limits: Limits) -> Result<BigUint> {
    weighted_sum(d, g, limits, Variant::Real)
}

/// [`gw_count_with`] or [`welschinger_count_with`] by variant.
pub fn count(d: u64, g: u64, variant: Variant, limits: Limits) -> Result<BigUint> {
    weighted_sum(d, g, limits, variant)
}
