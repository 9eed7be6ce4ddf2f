use super::MetricGraph;
use crate::error::{Error, Result};
use crate::scalar::{ExactScalar, Length};

/// Inputs larger than this are rejected by [`is_isometric`].
pub const MAX_ISOMETRY_VERTICES: usize = 12;

/// Whether two metric graphs are isometric, respecting marked and puncture flags.
///
/// Unflagged 2-valent vertices are erased first, so subdividing an edge does
/// not change the answer. The search is exhaustive over vertex bijections,
/// pruned by valence, flags and incident length multisets.
pub fn is_isometric<S: ExactScalar>(g1: &MetricGraph<S>, g2: &MetricGraph<S>) -> Result<bool> {
    for g in [g1, g2] {
        if g.vertices().len() > MAX_ISOMETRY_VERTICES {
            return Err(Error::Capacity(format!(
                "isometry test is limited to {MAX_ISOMETRY_VERTICES} vertices, got {}",
                g.vertices().len()
            )));
        }
    }
    let (a, b) = (Profile::of(&g1.smoothed()), Profile::of(&g2.smoothed()));
    if a.n != b.n || a.edge_count != b.edge_count {
        return Ok(false);
    }
    let mut signatures_a: Vec<_> = a.signature.clone();
    let mut signatures_b: Vec<_> = b.signature.clone();
    signatures_a.sort();
    signatures_b.sort();
    if signatures_a != signatures_b {
        return Ok(false);
    }
    let mut image = vec![usize::MAX; a.n];
    let mut taken = vec![false; b.n];
    Ok(extend(&a, &b, 0, &mut image, &mut taken))
}

type Signature<S> = (usize, bool, bool, Vec<Length<S>>, Vec<Length<S>>);

struct Profile<S> {
    n: usize,
    edge_count: usize,
    /// Sorted lengths of the edges between each ordered pair of vertices.
    between: Vec<Vec<Vec<Length<S>>>>,
    /// (valence, marked, puncture, loop lengths, incident non-loop lengths)
    signature: Vec<Signature<S>>,
}

impl<S: ExactScalar> Profile<S> {
    fn of(g: &MetricGraph<S>) -> Self {
        let n = g.vertices().len();
        let mut between = vec![vec![Vec::new(); n]; n];
        for e in g.edges() {
            between[e.a][e.b].push(e.length.clone());
            if !e.is_loop() {
                between[e.b][e.a].push(e.length.clone());
            }
        }
        for row in &mut between {
            for cell in row.iter_mut() {
                cell.sort();
            }
        }
        let signature = (0..n)
            .map(|v| {
                let flags = g.vertices()[v];
                let mut incident: Vec<Length<S>> =
                    (0..n).filter(|&w| w != v).flat_map(|w| between[v][w].iter().cloned()).collect();
                incident.sort();
                (g.valence(v), flags.marked, flags.puncture, between[v][v].clone(), incident)
            })
            .collect();
        Profile { n, edge_count: g.edges().len(), between, signature }
    }
}

fn extend<S: ExactScalar>(a: &Profile<S>, b: &Profile<S>, v: usize, image: &mut [usize], taken: &mut [bool]) -> bool {
    if v == a.n {
        return true;
    }
    for w in 0..b.n {
        if taken[w] || a.signature[v] != b.signature[w] {
            continue;
        }
        let consistent = (0..v).all(|u| a.between[v][u] == b.between[w][image[u]]);
        if !consistent {
            continue;
        }
        image[v] = w;
        taken[w] = true;
        if extend(a, b, v + 1, image, taken) {
            return true;
        }
        taken[w] = false;
    }
    image[v] = usize::MAX;
    false
}
