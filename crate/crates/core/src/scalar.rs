//! Scalar abstractions shared by the exact geometry modules.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// An exact ordered field used for coordinates, coefficients and lengths.
///
/// Implemented for `Ratio<i64>`, `Ratio<i128>` and `BigRational`; the
/// geometry code never compares with a tolerance, so floating point types
/// are deliberately excluded.
pub trait ExactScalar:
    Clone + Ord + Hash + Num + Signed + FromPrimitive + ToPrimitive + FromStr + Debug + Display
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer fits in scalar")
    }

    fn from_frac(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Parses "p/q", an integer, or a finite decimal such as "0.25".
    fn parse_exact(text: &str) -> Option<Self> {
        let text = text.trim();
        if let Ok(v) = text.parse::<Self>() {
            return Some(v);
        }
        let (int_part, frac_part) = text.split_once('.')?;
        let negative = int_part.starts_with('-');
        let digits = format!("{}{}", int_part.trim_start_matches(['-', '+']), frac_part);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let num = Self::from_str(&digits).ok()?;
        let mut den = Self::one();
        for _ in 0..frac_part.len() {
            den = den * Self::from_int(10);
        }
        let v = num / den;
        Some(if negative { -v } else { v })
    }
}

impl<T> ExactScalar for T where
    T: Clone + Ord + Hash + Num + Signed + FromPrimitive + ToPrimitive + FromStr + Debug + Display
{
}

/// A length in `(0, +∞]`; infinity is only ever compared for equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Length<S> {
    Finite(S),
    Infinite,
}

impl<S> Length<S> {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Length::Infinite)
    }
}

impl<S: ExactScalar> Length<S> {
    pub fn parse(text: &str) -> Option<Self> {
        if text.trim() == "inf" {
            Some(Length::Infinite)
        } else {
            S::parse_exact(text).map(Length::Finite)
        }
    }
}

impl<S: Display> Display for Length<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Length::Finite(v) => v.fmt(f),
            Length::Infinite => f.write_str("inf"),
        }
    }
}

/// Renders a scalar the way the JSON formats expect: "p/q", or "n" for integers.
pub fn format_exact<S: ExactScalar>(v: &S) -> String {
    v.to_string()
}
