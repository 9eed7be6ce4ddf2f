use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::canon::automorphism_count;
use super::enumerate::{enumerate_diagrams_with, Limits};
use super::{Element, FloorDiagram};
use crate::error::{Error, Result};

/// Posets larger than this are not counted.
pub const MAX_MARKING_ELEMENTS: usize = 32;

/// [`markings_of`] refuses diagrams with more linear extensions than this.
pub const MAX_LINEAR_EXTENSIONS: u128 = 2_000_000;

/// A floor diagram with an increasing bijection from points to `M(D)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedFloorDiagram {
    diagram: FloorDiagram,
    /// `order[k]` is the element marked by point `k` (0-based, lowest first).
    order: Vec<Element>,
}

impl MarkedFloorDiagram {
    pub fn new(diagram: FloorDiagram, order: Vec<Element>) -> Result<Self> {
        let poset = Poset::of(&diagram);
        let mut seen = vec![false; poset.elements.len()];
        if order.len() != seen.len() {
            return Err(Error::invalid(format!("marking has {} entries, expected {}", order.len(), seen.len())));
        }
        let mut placed = 0u64;
        for x in &order {
            let k =
                *poset.index.get(x).ok_or_else(|| Error::invalid(format!("{x:?} is not an element of the diagram")))?;
            if std::mem::replace(&mut seen[k], true) {
                return Err(Error::invalid(format!("{x:?} is marked twice")));
            }
            if poset.below[k] & !placed != 0 {
                return Err(Error::MarkingIncompatible(format!("{x:?} is marked before an element below it")));
            }
            placed |= 1 << k;
        }
        Ok(MarkedFloorDiagram { diagram, order })
    }

    pub fn diagram(&self) -> &FloorDiagram {
        &self.diagram
    }

    pub fn order(&self) -> &[Element] {
        &self.order
    }

    /// Point index marking `x`.
    pub fn position(&self, x: Element) -> Option<usize> {
        self.order.iter().position(|&y| y == x)
    }
}

/// Each edge as `(tail position or 0 for a source, head position, own position, weight)`.
fn labeled_encoding(d: &FloorDiagram, pos: &HashMap<Element, usize>) -> Vec<(usize, usize, usize, u64)> {
    let mut code: Vec<_> = d
        .edges()
        .iter()
        .enumerate()
        .map(|(k, e)| {
            let tail = if d.is_source(e.from) { 0 } else { pos[&Element::Floor(e.from)] };
            (tail, pos[&Element::Floor(e.to)], pos[&Element::Edge(k)], e.weight)
        })
        .collect();
    code.sort_unstable();
    code
}

struct Poset {
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
    /// Bitmask of the elements covered by each element.
    below: Vec<u64>,
}

impl Poset {
    fn of(d: &FloorDiagram) -> Self {
        let elements = d.elements();
        let index: HashMap<Element, usize> = elements.iter().enumerate().map(|(k, &x)| (x, k)).collect();
        let mut below = vec![0u64; elements.len()];
        if elements.len() <= 64 {
            for (lo, hi) in d.cover_relations() {
                below[index[&hi]] |= 1 << index[&lo];
            }
        }
        Poset { elements, index, below }
    }

    fn full(&self) -> u64 {
        if self.elements.len() == 64 {
            u64::MAX
        } else {
            (1 << self.elements.len()) - 1
        }
    }

    fn extensions_from(&self, placed: u64, memo: &mut HashMap<u64, u128>) -> u128 {
        if placed == self.full() {
            return 1;
        }
        if let Some(&n) = memo.get(&placed) {
            return n;
        }
        let mut total = 0;
        for k in 0..self.elements.len() {
            if placed & (1 << k) == 0 && self.below[k] & !placed == 0 {
                total += self.extensions_from(placed | (1 << k), memo);
            }
        }
        memo.insert(placed, total);
        total
    }
}

fn checked_size(d: &FloorDiagram) -> Result<()> {
    if d.marking_size() > MAX_MARKING_ELEMENTS {
        return Err(Error::Capacity(format!(
            "marking poset has {} elements, limit is {MAX_MARKING_ELEMENTS}",
            d.marking_size()
        )));
    }
    Ok(())
}

/// Number of linear extensions of `M(D)`, by dynamic programming over downsets.
pub fn count_linear_extensions(d: &FloorDiagram) -> Result<BigUint> {
    checked_size(d)?;
    Ok(BigUint::from(Poset::of(d).extensions_from(0, &mut HashMap::new())))
}

/// Number of marked diagrams over `d` up to isomorphism.
///
/// Automorphisms act freely on linear extensions, so this is the number of
/// linear extensions divided by `|Aut(D)|`.
pub fn count_markings(d: &FloorDiagram) -> Result<BigUint> {
    let extensions = count_linear_extensions(d)?;
    let aut = automorphism_count(d);
    assert!((&extensions % &aut).is_zero(), "automorphisms must act freely on markings");
    Ok(extensions / aut)
}

/// One representative of each isomorphism class of markings of `d`, ordered
/// by their encoding.
pub fn markings_of(d: &FloorDiagram) -> Result<Vec<MarkedFloorDiagram>> {
    let total = count_linear_extensions(d)?;
    if total.to_u128().is_none_or(|n| n > MAX_LINEAR_EXTENSIONS) {
        return Err(Error::Capacity(format!(
            "{total} linear extensions exceed the enumeration limit {MAX_LINEAR_EXTENSIONS}"
        )));
    }
    let poset = Poset::of(d);
    let mut found = BTreeMap::new();
    let mut order = Vec::with_capacity(poset.elements.len());
    let mut pos = HashMap::new();
    walk(d, &poset, 0, &mut order, &mut pos, &mut found);
    Ok(found.into_values().map(|order| MarkedFloorDiagram { diagram: d.clone(), order }).collect())
}

type Found = BTreeMap<Vec<(usize, usize, usize, u64)>, Vec<Element>>;

fn walk(
    d: &FloorDiagram,
    poset: &Poset,
    placed: u64,
    order: &mut Vec<Element>,
    pos: &mut HashMap<Element, usize>,
    found: &mut Found,
) {
    if placed == poset.full() {
        found.entry(labeled_encoding(d, pos)).or_insert_with(|| order.clone());
        return;
    }
    for k in 0..poset.elements.len() {
        if placed & (1 << k) == 0 && poset.below[k] & !placed == 0 {
            let x = poset.elements[k];
            order.push(x);
            pos.insert(x, order.len());
            walk(d, poset, placed | (1 << k), order, pos, found);
            pos.remove(&x);
            order.pop();
        }
    }
}

/// All marked floor diagrams of degree `d` and genus `g` up to isomorphism,
/// grouped by diagram in canonical order.
pub fn enumerate_marked(d: u64, g: u64) -> Result<Vec<MarkedFloorDiagram>> {
    enumerate_marked_with(d, g, Limits::default())
}

pub fn enumerate_marked_with(d: u64, g: u64, limits: Limits) -> Result<Vec<MarkedFloorDiagram>> {
    let mut out = Vec::new();
    for diagram in enumerate_diagrams_with(d, g, limits)? {
        out.extend(markings_of(&diagram)?);
    }
    Ok(out)
}
