use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::ExactScalar;
use crate::semiring::Tropical;

/// Exponent vector `(i, j)` of a monomial `x^i y^j`.
pub type LatticePoint = (i64, i64);

/// A tropical polynomial `max_{(i,j) ∈ V} (a_ij + i·x + j·y)` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropicalPolynomial<S> {
    terms: BTreeMap<LatticePoint, S>,
}

impl<S: ExactScalar> TropicalPolynomial<S> {
    pub fn new(terms: impl IntoIterator<Item = (LatticePoint, S)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for ((i, j), a) in terms {
            if i < 0 || j < 0 {
                return Err(Error::invalid(format!("negative exponent ({i}, {j})")));
            }
            if map.insert((i, j), a).is_some() {
                return Err(Error::invalid(format!("duplicate monomial ({i}, {j})")));
            }
        }
        if map.is_empty() {
            return Err(Error::invalid("polynomial has empty support"));
        }
        Ok(TropicalPolynomial { terms: map })
    }

    /// All monomials of total degree at most `d`, with the given coefficient function.
    pub fn dense(d: i64, mut coeff: impl FnMut(i64, i64) -> S) -> Self {
        let terms = (0..=d).flat_map(|i| (0..=d - i).map(move |j| (i, j)));
        let terms: Vec<_> = terms.map(|(i, j)| ((i, j), coeff(i, j))).collect();
        TropicalPolynomial::new(terms).expect("dense support is valid")
    }

    /// Parses one monomial per line as `i j a_ij`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse { line: line_no, message };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(parse_err(format!("expected `i j a_ij`, got {} fields", fields.len())));
            }
            let i: i64 = fields[0].parse().map_err(|_| parse_err(format!("bad exponent `{}`", fields[0])))?;
            let j: i64 = fields[1].parse().map_err(|_| parse_err(format!("bad exponent `{}`", fields[1])))?;
            if i < 0 || j < 0 {
                return Err(parse_err("exponents must be non-negative".into()));
            }
            let a = S::parse_exact(fields[2]).ok_or_else(|| parse_err(format!("bad coefficient `{}`", fields[2])))?;
            if terms.insert((i, j), a).is_some() {
                return Err(parse_err(format!("duplicate monomial ({i}, {j})")));
            }
        }
        if terms.is_empty() {
            return Err(Error::Parse { line: text.lines().count().max(1), message: "no monomials".into() });
        }
        Ok(TropicalPolynomial { terms })
    }

    pub fn to_text(&self) -> String {
        self.terms.iter().map(|((i, j), a)| format!("{i} {j} {a}\n")).collect()
    }

    pub fn terms(&self) -> impl Iterator<Item = (LatticePoint, &S)> {
        self.terms.iter().map(|(&p, a)| (p, a))
    }

    pub fn support(&self) -> Vec<LatticePoint> {
        self.terms.keys().copied().collect()
    }

    pub fn coefficient(&self, p: LatticePoint) -> Option<&S> {
        self.terms.get(&p)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value of the monomial at `p` on the point `(x, y)`.
    pub fn monomial_value(&self, p: LatticePoint, x: &S, y: &S) -> Option<S> {
        self.terms.get(&p).map(|a| a.clone() + S::from_int(p.0) * x.clone() + S::from_int(p.1) * y.clone())
    }

    pub fn evaluate(&self, x: &S, y: &S) -> Tropical<S> {
        self.terms
            .keys()
            .map(|&p| Tropical::Finite(self.monomial_value(p, x, y).expect("own monomial")))
            .fold(Tropical::NegInfinity, |acc, v| acc + v)
    }

    /// Monomials attaining the maximum at `(x, y)`.
    pub fn dominant_monomials(&self, x: &S, y: &S) -> Vec<LatticePoint> {
        let values: Vec<(LatticePoint, S)> =
            self.terms.keys().map(|&p| (p, self.monomial_value(p, x, y).expect("own monomial"))).collect();
        let best = values.iter().map(|(_, v)| v).max().expect("non-empty").clone();
        values.into_iter().filter(|(_, v)| *v == best).map(|(p, _)| p).collect()
    }

    /// `a_ij ↦ a_ij + c` for every monomial.
    pub fn shifted(&self, c: &S) -> Self {
        TropicalPolynomial { terms: self.terms.iter().map(|(&p, a)| (p, a.clone() + c.clone())).collect() }
    }

    /// `d` when the Newton polygon is the triangle `(0,0), (d,0), (0,d)`.
    pub fn degree(&self) -> Option<u64> {
        let d = self.terms.keys().map(|&(i, j)| i + j).max()?;
        if d < 1 {
            return None;
        }
        let hull = super::subdivision::convex_hull(&self.support());
        let mut expected = vec![(0, 0), (d, 0), (0, d)];
        let mut got = hull;
        expected.sort_unstable();
        got.sort_unstable();
        (got == expected).then_some(d as u64)
    }
}
