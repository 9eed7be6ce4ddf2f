use num_bigint::BigUint;
use num_traits::One;

use super::FloorDiagram;

/// Isomorphism-invariant encoding of a floor diagram: per canonical floor the
/// number of sources attached to it, and the sorted list of floor-to-floor
/// edges `(from, to, weight)` in canonical positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub sources_at: Vec<u64>,
    pub edges: Vec<(usize, usize, u64)>,
}

impl CanonicalForm {
    /// The diagram in canonical labeling: floors `0..d`, then sources in the
    /// order of the floors they feed; source edges precede floor edges.
    pub fn to_diagram(&self, genus: u64) -> FloorDiagram {
        let d = self.sources_at.len();
        let mut sources = vec![false; d];
        let mut edges = Vec::new();
        for (floor, &count) in self.sources_at.iter().enumerate() {
            for _ in 0..count {
                let s = sources.len();
                sources.push(true);
                edges.push(super::DiagramEdge { from: s, to: floor, weight: 1 });
            }
        }
        edges.extend(self.edges.iter().map(|&(from, to, weight)| super::DiagramEdge { from, to, weight }));
        FloorDiagram::new(d as u64, genus, sources, edges).expect("canonical form of a valid diagram")
    }
}

/// Per-floor data that any isomorphism must preserve.
type FloorInvariant = (u64, Vec<u64>, Vec<u64>);

fn floor_invariant(d: &FloorDiagram, v: usize) -> FloorInvariant {
    let mut from_sources = 0;
    let mut inw = Vec::new();
    let mut outw = Vec::new();
    for e in d.edges() {
        if e.to == v {
            if d.is_source(e.from) {
                from_sources += 1;
            } else {
                inw.push(e.weight);
            }
        }
        if e.from == v {
            outw.push(e.weight);
        }
    }
    inw.sort_unstable();
    outw.sort_unstable();
    (from_sources, inw, outw)
}

/// Canonical form of `d` together with the number of floor permutations that
/// realize it (the order of the automorphism group acting on floors).
///
/// Floors are first split into classes by [`FloorInvariant`]; the search then
/// tries every bijection onto canonical positions that respects the classes.
pub fn canonical_form(d: &FloorDiagram) -> (CanonicalForm, u64) {
    let floors = d.floors();
    let k = floors.len();
    let mut index = vec![usize::MAX; d.vertex_count()];
    for (i, &v) in floors.iter().enumerate() {
        index[v] = i;
    }
    let invariants: Vec<FloorInvariant> = floors.iter().map(|&v| floor_invariant(d, v)).collect();
    let mut slots: Vec<&FloorInvariant> = invariants.iter().collect();
    slots.sort();
    let sources_at: Vec<u64> = invariants.iter().map(|inv| inv.0).collect();
    let floor_edges: Vec<(usize, usize, u64)> =
        d.edges().iter().filter(|e| !d.is_source(e.from)).map(|e| (index[e.from], index[e.to], e.weight)).collect();

    let mut best: Option<CanonicalForm> = None;
    let mut hits = 0u64;
    let mut position = vec![usize::MAX; k];
    let mut used = vec![false; k];
    search(&slots, &invariants, 0, &mut position, &mut used, &mut |position| {
        let mut at = vec![0; k];
        for (floor, &p) in position.iter().enumerate() {
            at[p] = sources_at[floor];
        }
        let mut edges: Vec<_> = floor_edges.iter().map(|&(a, b, w)| (position[a], position[b], w)).collect();
        edges.sort_unstable();
        let form = CanonicalForm { sources_at: at, edges };
        match &best {
            Some(b) if form > *b => {}
            Some(b) if form == *b => hits += 1,
            _ => {
                best = Some(form);
                hits = 1;
            }
        }
    });
    (best.expect("at least the identity labeling"), hits)
}

/// Assigns canonical positions `slot..` to floors of the matching class.
fn search(
    slots: &[&FloorInvariant],
    invariants: &[FloorInvariant],
    slot: usize,
    position: &mut [usize],
    used: &mut [bool],
    emit: &mut impl FnMut(&[usize]),
) {
    if slot == slots.len() {
        emit(position);
        return;
    }
    for floor in 0..invariants.len() {
        if used[floor] || invariants[floor] != *slots[slot] {
            continue;
        }
        used[floor] = true;
        position[floor] = slot;
        search(slots, invariants, slot + 1, position, used, emit);
        used[floor] = false;
    }
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Order of the automorphism group of `d` acting on floors, edges and sources:
/// floor symmetries, times permutations of sources feeding the same floor,
/// times permutations of parallel floor edges of equal weight.
pub fn automorphism_count(d: &FloorDiagram) -> BigUint {
    let (form, floor_symmetries) = canonical_form(d);
    let mut total = BigUint::from(floor_symmetries);
    for &a in &form.sources_at {
        total *= factorial(a);
    }
    let mut k = 0;
    while k < form.edges.len() {
        let run = form.edges[k..].iter().take_while(|e| **e == form.edges[k]).count();
        total *= factorial(run as u64);
        k += run;
    }
    total
}
