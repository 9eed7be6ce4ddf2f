//! The max-plus semiring, its finite-temperature deformation and tropical
//! projective points.
//!
//! [`Tropical`] is generic over the underlying scalar. The exact alias
//! [`crate::TropicalValue`] (rationals) is what the geometry modules use; the
//! floating point layer ([`subtropical_add`], [`free_energy`]) works over any
//! [`num_traits::Float`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Float, One, Zero};

use crate::error::{Error, Result};

/// An element of `S ∪ {−∞}`.
///
/// The derived order puts `NegInfinity` strictly below every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tropical<S> {
    NegInfinity,
    Finite(S),
}

impl<S> Tropical<S> {
    pub fn finite(&self) -> Option<&S> {
        match self {
            Tropical::NegInfinity => None,
            Tropical::Finite(v) => Some(v),
        }
    }

    pub fn is_neg_infinity(&self) -> bool {
        matches!(self, Tropical::NegInfinity)
    }
}

impl<S> From<S> for Tropical<S> {
    fn from(v: S) -> Self {
        Tropical::Finite(v)
    }
}

impl<S: fmt::Display> fmt::Display for Tropical<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tropical::NegInfinity => f.write_str("-inf"),
            Tropical::Finite(v) => v.fmt(f),
        }
    }
}

/// Tropical sum: the maximum.
pub fn trop_add<S: PartialOrd>(a: Tropical<S>, b: Tropical<S>) -> Tropical<S> {
    match (a, b) {
        (Tropical::NegInfinity, x) | (x, Tropical::NegInfinity) => x,
        (Tropical::Finite(x), Tropical::Finite(y)) => {
            if x.partial_cmp(&y) == Some(Ordering::Less) {
                Tropical::Finite(y)
            } else {
                Tropical::Finite(x)
            }
        }
    }
}

/// Tropical product: ordinary addition, with `−∞` absorbing.
pub fn trop_mul<S: Add<Output = S>>(a: Tropical<S>, b: Tropical<S>) -> Tropical<S> {
    match (a, b) {
        (Tropical::Finite(x), Tropical::Finite(y)) => Tropical::Finite(x + y),
        _ => Tropical::NegInfinity,
    }
}

impl<S: PartialOrd> Add for Tropical<S> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        trop_add(self, rhs)
    }
}

impl<S: Add<Output = S>> Mul for Tropical<S> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        trop_mul(self, rhs)
    }
}

impl<S: PartialOrd> Zero for Tropical<S> {
    fn zero() -> Self {
        Tropical::NegInfinity
    }

    fn is_zero(&self) -> bool {
        self.is_neg_infinity()
    }
}

impl<S: Zero + Add<Output = S>> One for Tropical<S> {
    fn one() -> Self {
        Tropical::Finite(S::zero())
    }
}

/// The isomorphism `x ↦ −x` carrying the max-plus model onto the min-plus one.
pub fn flip<S: Neg<Output = S>>(x: S) -> S {
    -x
}

/// Minimum, obtained from the max-plus sum through [`flip`].
pub fn min_plus_add<S: PartialOrd + Neg<Output = S>>(a: S, b: S) -> S {
    match trop_add(Tropical::Finite(flip(a)), Tropical::Finite(flip(b))) {
        Tropical::Finite(m) => flip(m),
        Tropical::NegInfinity => unreachable!("finite operands"),
    }
}

/// Base of the logarithm in the dequantization family, `t > 0`, `t ≠ 1`.
///
/// Only `ln t` is stored so that bases such as `e^{-1000}` stay representable.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dequantization<F> {
    ln_t: F,
}

impl<F: Float> Dequantization<F> {
    pub fn new(t: F) -> Result<Self> {
        if !t.is_finite() || t <= F::zero() || t == F::one() {
            return Err(Error::invalid("dequantization base must be positive, finite and not 1"));
        }
        Ok(Dequantization { ln_t: t.ln() })
    }

    /// Builds the base `t = e^{ln_t}` from its natural logarithm.
    pub fn from_ln(ln_t: F) -> Result<Self> {
        if ln_t == F::zero() || !ln_t.is_finite() {
            return Err(Error::invalid("ln t must be finite and non-zero"));
        }
        Ok(Dequantization { ln_t })
    }

    pub fn ln_t(&self) -> F {
        self.ln_t
    }

    pub fn t(&self) -> F {
        self.ln_t.exp()
    }

    pub fn is_max_like(&self) -> bool {
        self.ln_t > F::zero()
    }
}

/// Base-`t` logarithm of a modulus. `log_t 0` is `−∞` for `t > 1` and `+∞` for `t < 1`.
pub fn log_t<F: Float>(modulus: F, t: Dequantization<F>) -> Result<F> {
    if modulus < F::zero() || modulus.is_nan() {
        return Err(Error::invalid("modulus must be non-negative"));
    }
    if modulus == F::zero() {
        return Ok(if t.is_max_like() { F::neg_infinity() } else { F::infinity() });
    }
    Ok(modulus.ln() / t.ln_t)
}

/// `log_t(t^x + t^y)`, evaluated by factoring out the dominant term.
pub fn subtropical_add<F: Float>(x: F, y: F, t: Dequantization<F>) -> F {
    let (hi, lo) = if x >= y { (x, y) } else { (y, x) };
    let dominant = if t.is_max_like() { hi } else { lo };
    if hi.is_infinite() || lo.is_infinite() {
        return dominant;
    }
    // t^{-|x-y|} for t > 1 and t^{|x-y|} for t < 1 are both exp(-|ln t|·|x-y|).
    let gap = (hi - lo) * t.ln_t.abs();
    dominant + (-gap).exp().ln_1p() / t.ln_t
}

/// Energy levels `E_0 ≤ … ≤ E_{k−1}` at temperature `T > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct EnergySpectrum<F> {
    levels: Vec<F>,
    temperature: F,
}

impl<F: Float> EnergySpectrum<F> {
    pub fn new(levels: Vec<F>, temperature: F) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::invalid("energy spectrum is empty"));
        }
        if !temperature.is_finite() || temperature <= F::zero() {
            return Err(Error::invalid("temperature must be positive"));
        }
        if levels.iter().any(|e| !e.is_finite()) {
            return Err(Error::invalid("energy levels must be finite"));
        }
        if levels.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::invalid("energy levels must be non-decreasing"));
        }
        Ok(EnergySpectrum { levels, temperature })
    }

    pub fn levels(&self) -> &[F] {
        &self.levels
    }

    pub fn temperature(&self) -> F {
        self.temperature
    }

    /// The base `t = e^{−1/T}` under which the free energy is a subtropical fold.
    pub fn dequantization(&self) -> Dequantization<F> {
        Dequantization { ln_t: -self.temperature.recip() }
    }
}

/// Helmholtz free energy `−T · ln Σ_j exp(−E_j / T)`.
pub fn free_energy<F: Float>(spectrum: &EnergySpectrum<F>) -> F {
    let temp = spectrum.temperature;
    let ground = spectrum.levels[0];
    let partition = spectrum.levels.iter().fold(F::zero(), |acc, &e| acc + (-(e - ground) / temp).exp());
    ground - temp * partition.ln()
}

/// The same quantity as [`free_energy`], folded through [`subtropical_add`].
pub fn free_energy_by_fold<F: Float>(spectrum: &EnergySpectrum<F>) -> F {
    let t = spectrum.dequantization();
    let mut levels = spectrum.levels.iter().copied();
    let first = levels.next().expect("non-empty spectrum");
    levels.fold(first, |acc, e| subtropical_add(acc, e, t))
}

/// A point of tropical projective space: coordinates up to a common additive shift.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropicalProjectivePoint<S> {
    coords: Vec<Tropical<S>>,
}

impl<S> TropicalProjectivePoint<S> {
    pub fn new(coords: Vec<Tropical<S>>) -> Result<Self> {
        if coords.iter().all(Tropical::is_neg_infinity) {
            return Err(Error::invalid("a projective point needs a finite coordinate"));
        }
        Ok(TropicalProjectivePoint { coords })
    }

    pub fn coords(&self) -> &[Tropical<S>] {
        &self.coords
    }
}

/// Whether `q = λ ⊗ p` for some finite `λ`.
pub fn projective_equal<S>(p: &TropicalProjectivePoint<S>, q: &TropicalProjectivePoint<S>) -> bool
where
    S: Clone + PartialEq + Sub<Output = S>,
{
    if p.coords.len() != q.coords.len() {
        return false;
    }
    let mut shift: Option<S> = None;
    for (a, b) in p.coords.iter().zip(&q.coords) {
        match (a, b) {
            (Tropical::NegInfinity, Tropical::NegInfinity) => {}
            (Tropical::Finite(a), Tropical::Finite(b)) => {
                let diff = b.clone() - a.clone();
                match &shift {
                    None => shift = Some(diff),
                    Some(s) if *s == diff => {}
                    Some(_) => return false,
                }
            }
            _ => return false,
        }
    }
    true
}
