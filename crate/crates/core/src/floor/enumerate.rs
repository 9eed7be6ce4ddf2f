use std::collections::BTreeMap;

use super::canon::{canonical_form, CanonicalForm};
use super::{DiagramEdge, FloorDiagram};
use crate::error::{Error, Result};

/// Capacity guard for enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_degree: u64,
    pub max_genus: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_degree: 6, max_genus: 4 }
    }
}

impl Limits {
    pub fn check(&self, d: u64, g: u64) -> Result<()> {
        if d == 0 {
            return Err(Error::invalid("degree must be positive"));
        }
        if d > self.max_degree || g > self.max_genus {
            return Err(Error::Capacity(format!(
                "(d, g) = ({d}, {g}) exceeds the limits d <= {}, g <= {}",
                self.max_degree, self.max_genus
            )));
        }
        Ok(())
    }
}

/// Largest genus of a plane curve of degree `d`.
pub(crate) fn max_genus(d: u64) -> u64 {
    (d - 1) * d.saturating_sub(2) / 2
}

/// All floor diagrams of degree `d` and genus `g` up to isomorphism, under the
/// default [`Limits`], ordered by canonical form.
pub fn enumerate_diagrams(d: u64, g: u64) -> Result<Vec<FloorDiagram>> {
    enumerate_diagrams_with(d, g, Limits::default())
}

pub fn enumerate_diagrams_with(d: u64, g: u64, limits: Limits) -> Result<Vec<FloorDiagram>> {
    limits.check(d, g)?;
    if g > max_genus(d) {
        return Ok(Vec::new());
    }
    let mut gen = Generator {
        d: d as usize,
        budget: d as usize - 1 + g as usize,
        incoming: vec![0; d as usize],
        sources_at: vec![0; d as usize],
        edges: Vec::new(),
        found: BTreeMap::new(),
        genus: g,
    };
    gen.floor(0, d as usize);
    Ok(gen.found.into_values().collect())
}

/// Builds labeled diagrams whose floors `0..d` are already in topological
/// order: floor-to-floor edges always go from a lower to a higher index.
struct Generator {
    d: usize,
    /// Number of floor-to-floor edges, `d − 1 + g`.
    budget: usize,
    incoming: Vec<u64>,
    sources_at: Vec<u64>,
    edges: Vec<(usize, usize, u64)>,
    found: BTreeMap<CanonicalForm, FloorDiagram>,
    genus: u64,
}

impl Generator {
    fn floor(&mut self, i: usize, sources_left: usize) {
        if i == self.d {
            if sources_left == 0 && self.edges.len() == self.budget {
                self.finish();
            }
            return;
        }
        for a in 0..=sources_left {
            let inflow = self.incoming[i] + a as u64;
            if inflow == 0 {
                continue;
            }
            let out = inflow - 1;
            if i + 1 == self.d && out > 0 {
                break;
            }
            self.sources_at[i] = a as u64;
            self.distribute(i, out, (i + 1, 1), sources_left - a);
        }
        self.sources_at[i] = 0;
    }

    /// Splits weight `rest` leaving floor `i` into edges `(target, weight)`
    /// listed in nondecreasing order starting at `min`.
    fn distribute(&mut self, i: usize, rest: u64, min: (usize, u64), sources_left: usize) {
        if rest == 0 {
            self.floor(i + 1, sources_left);
            return;
        }
        if self.edges.len() == self.budget {
            return;
        }
        let (j0, w0) = min;
        for j in j0..self.d {
            let start = if j == j0 { w0 } else { 1 };
            for w in start..=rest {
                self.edges.push((i, j, w));
                self.incoming[j] += w;
                self.distribute(i, rest - w, (j, w), sources_left);
                self.incoming[j] -= w;
                self.edges.pop();
            }
        }
    }

    fn finish(&mut self) {
        let mut sources = vec![false; self.d];
        let mut edges = Vec::new();
        for (floor, &count) in self.sources_at.iter().enumerate() {
            for _ in 0..count {
                edges.push(DiagramEdge { from: sources.len(), to: floor, weight: 1 });
                sources.push(true);
            }
        }
        edges.extend(self.edges.iter().map(|&(from, to, weight)| DiagramEdge { from, to, weight }));
        let candidate = FloorDiagram { degree: self.d as u64, genus: self.genus, sources, edges };
        if !candidate.is_connected() {
            return;
        }
        debug_assert!(candidate.validate().is_ok());
        let (form, _) = canonical_form(&candidate);
        if !self.found.contains_key(&form) {
            let canonical = form.to_diagram(self.genus);
            self.found.insert(form, canonical);
        }
    }
}
