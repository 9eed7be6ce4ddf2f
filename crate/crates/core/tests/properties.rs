mod common;

use std::collections::HashMap;

use common::{metric_graph, modification_point, polynomial, q, relabeled};
use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tropical::floor::{
    count_markings, enumerate_diagrams, enumerate_marked, gw_count, kontsevich_oracle, Element, FloorDiagram,
};
use tropical::metric::is_isometric;
use tropical::plane::{check_balancing, corner_locus, dual_subdivision, region_monomials, EdgeKind};
use tropical::reconstruct::{incidence_check, reconstruct, stretched_config};
use tropical::semiring::{
    free_energy, free_energy_by_fold, projective_equal, subtropical_add, Dequantization, EnergySpectrum,
    TropicalProjectivePoint,
};
use tropical::{Configuration, Rational, Tropical, TropicalValue};

fn value() -> impl Strategy<Value = TropicalValue> {
    prop_oneof![
        1 => Just(Tropical::NegInfinity),
        6 => (-1000i64..1000, 1i64..50).prop_map(|(n, d)| Tropical::Finite(Rational::new(n, d))),
    ]
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #[test]
    fn semiring_axioms(a in value(), b in value(), c in value()) {
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(a + a, a);
        prop_assert_eq!(a + Tropical::NegInfinity, a);
        prop_assert_eq!(a * Tropical::NegInfinity, Tropical::NegInfinity);
        prop_assert_eq!(a * Tropical::Finite(q(0)), a);
    }

    #[test]
    fn subtropical_shift_and_bounds(x in -300.0f64..300.0, y in -300.0f64..300.0, z in -300.0f64..300.0,
                                    t in prop::sample::select(vec![2.0, 10.0, 1e6, 0.5, 0.1, 1.5, 0.9])) {
        let t = Dequantization::new(t).unwrap();
        let lhs = subtropical_add(x, y, t) + z;
        let rhs = subtropical_add(x + z, y + z, t);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(rhs.abs()).max(1.0));
        let s = subtropical_add(x, y, t);
        let log2 = (2.0f64.ln() / t.ln_t()).abs();
        let slack = 1e-12 * s.abs().max(1.0);
        if t.is_max_like() {
            prop_assert!(s - x.max(y) >= -slack && s - x.max(y) <= log2 + slack);
        } else {
            prop_assert!(x.min(y) - s >= -slack && x.min(y) - s <= log2 + slack);
        }
    }

    #[test]
    fn free_energy_is_a_fold(mut levels in prop::collection::vec(-50.0f64..50.0, 1..8), temp in 0.01f64..20.0) {
        levels.sort_by(f64::total_cmp);
        let spectrum = EnergySpectrum::new(levels.clone(), temp).unwrap();
        let (a, b) = (free_energy(&spectrum), free_energy_by_fold(&spectrum));
        prop_assert!((a - b).abs() <= 1e-10 * a.abs().max(1.0));
        prop_assert!(a <= levels[0] + 1e-12);
        prop_assert!(a >= levels[0] - temp * (levels.len() as f64).ln() - 1e-9);
    }

    #[test]
    fn projective_equality_is_an_equivalence(p in prop::collection::vec(value(), 3), l1 in -20i64..20, l2 in -20i64..20) {
        prop_assume!(p.iter().any(|v| !v.is_neg_infinity()));
        let shift = |l: i64| TropicalProjectivePoint::new(p.iter().map(|&v| v * Tropical::Finite(q(l))).collect()).unwrap();
        let (a, b, c) = (TropicalProjectivePoint::new(p.clone()).unwrap(), shift(l1), shift(l2));
        prop_assert!(projective_equal(&a, &a));
        prop_assert!(projective_equal(&a, &b) && projective_equal(&b, &a));
        prop_assert!(projective_equal(&b, &c) && projective_equal(&a, &c));
    }

    #[test]
    fn corner_loci_are_balanced(seed in any::<u64>()) {
        let f = polynomial(&mut rng(seed), 4);
        let c = corner_locus(&f);
        prop_assert!(c.validate().is_ok());
        prop_assert!(check_balancing(&c).is_empty());
        let sub = dual_subdivision(&f);
        let cells: i64 = sub.two_cells().map(|c| c.doubled_area()).sum();
        prop_assert_eq!(cells, if sub.dimension() == 2 { sub.newton_doubled_area() } else { 0 });
        prop_assert_eq!(c.vertices.len(), sub.two_cells().count());
        // rays, counted with weight, add up to the lattice perimeter of the Newton polygon
        let rays: u64 = c.ends().iter().map(|(_, w)| w).sum();
        let n = sub.newton_polygon.len();
        let perimeter: i64 = if n >= 3 {
            (0..n).map(|k| {
                let (a, b) = (sub.newton_polygon[k], sub.newton_polygon[(k + 1) % n]);
                num_integer::gcd(b.0 - a.0, b.1 - a.1)
            }).sum()
        } else if n == 2 {
            2 * num_integer::gcd(sub.newton_polygon[1].0 - sub.newton_polygon[0].0, sub.newton_polygon[1].1 - sub.newton_polygon[0].1)
        } else { 0 };
        prop_assert_eq!(rays as i64, perimeter);
    }

    #[test]
    fn scaling_coefficients_keeps_the_curve(seed in any::<u64>(), c in -30i64..30) {
        let f = polynomial(&mut rng(seed), 3);
        prop_assert_eq!(corner_locus(&f), corner_locus(&f.shifted(&q(c))));
    }

    #[test]
    fn evaluation_is_convex(seed in any::<u64>(), px in -20i64..20, py in -20i64..20, qx in -20i64..20, qy in -20i64..20, l in 0i64..=8) {
        let f = polynomial(&mut rng(seed), 4);
        let lam = Rational::new(l, 8);
        let one = q(1) - lam;
        let mid = f.evaluate(&(lam * q(px) + one * q(qx)), &(lam * q(py) + one * q(qy)));
        let (a, b) = (f.evaluate(&q(px), &q(py)), f.evaluate(&q(qx), &q(qy)));
        let bound = lam * *a.finite().unwrap() + one * *b.finite().unwrap();
        prop_assert!(*mid.finite().unwrap() <= bound);
    }

    #[test]
    fn regions_are_dominated_by_their_monomial(seed in any::<u64>()) {
        let f = polynomial(&mut rng(seed), 3);
        let sub = dual_subdivision(&f);
        let regions = region_monomials(&f);
        prop_assert_eq!(regions.len(), sub.vertices().len());
        for r in regions {
            prop_assert_eq!(f.dominant_monomials(&r.sample.x, &r.sample.y), vec![r.monomial]);
        }
    }

    #[test]
    fn small_grid_oracle(seed in any::<u64>()) {
        let f = polynomial(&mut rng(seed), 2);
        let report = common::grid_oracle(&f, &corner_locus(&f), 40);
        prop_assert_eq!(report.false_flags, 0);
        prop_assert_eq!(report.missed, 0);
    }

    #[test]
    fn modification_keeps_genus_and_punctures(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = metric_graph(&mut r);
        let x = modification_point(&mut r, &g);
        let (m, tau) = g.modify(&x).unwrap();
        prop_assert_eq!(m.genus(), g.genus());
        prop_assert_eq!(m.puncture_count(), g.puncture_count());
        prop_assert_eq!(m.marked_count(), g.marked_count());
        prop_assert!(is_isometric(&m.contract(&tau).unwrap(), &g).unwrap());
        let y = modification_point(&mut r, &m);
        let (mm, _) = m.modify(&y).unwrap();
        prop_assert_eq!(mm.genus(), g.genus());
        prop_assert_eq!(mm.edges().len(), g.edges().len() + 2 + usize::from(matches!(x, tropical::metric::GraphPoint::OnEdge { .. })) + usize::from(matches!(y, tropical::metric::GraphPoint::OnEdge { .. })));
    }

    #[test]
    fn minimal_models(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = metric_graph(&mut r);
        prop_assume!(g.genus() >= 1 || g.marked_count() >= 2);
        let min = g.minimal_model().unwrap();
        prop_assert_eq!(min.genus(), g.genus());
        prop_assert!(is_isometric(&min.minimal_model().unwrap(), &min).unwrap());
        let (m, _) = g.modify(&modification_point(&mut r, &g)).unwrap();
        prop_assert!(is_isometric(&m.minimal_model().unwrap(), &min).unwrap());
    }

    #[test]
    fn isometry_is_an_equivalence(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = metric_graph(&mut r);
        let h = relabeled(&mut r, &g);
        let k = relabeled(&mut r, &h);
        prop_assert!(is_isometric(&g, &g).unwrap());
        prop_assert!(is_isometric(&g, &h).unwrap() && is_isometric(&h, &g).unwrap());
        prop_assert!(is_isometric(&h, &k).unwrap() && is_isometric(&g, &k).unwrap());
        let other = metric_graph(&mut r);
        prop_assert_eq!(is_isometric(&g, &other).unwrap(), is_isometric(&other, &g).unwrap());
    }

    #[test]
    fn reconstruction_through_any_seed(seed in any::<u64>(), pick in 0usize..9) {
        let md = &enumerate_marked(3, 0).unwrap()[pick];
        let cfg: Configuration = stretched_config(8, seed);
        let c = reconstruct(md, &cfg).unwrap();
        prop_assert!(incidence_check(&c, &cfg));
        prop_assert!(check_balancing(&c).is_empty());
        prop_assert_eq!(c.degree(), Some(3));
        let elevators = c.edges.iter().filter(|e| e.primitive == (0, 1) && e.is_bounded()).count();
        let downward = c.edges.iter().filter(|e| e.primitive == (0, -1) && matches!(e.kind, EdgeKind::Ray { .. })).count();
        prop_assert_eq!((elevators, downward), (2, 3));
    }
}

/// Marked diagrams up to isomorphism, by trying every bijection onto `M(D)`.
fn brute_force_markings(d: &FloorDiagram) -> usize {
    let elements = d.elements();
    let relations = d.cover_relations();
    let mut seen = std::collections::HashSet::new();
    let mut perm: Vec<usize> = (0..elements.len()).collect();
    permutations(&mut perm, 0, &mut |perm| {
        let pos: HashMap<Element, usize> = perm.iter().enumerate().map(|(k, &i)| (elements[i], k + 1)).collect();
        if relations.iter().all(|(lo, hi)| pos[lo] < pos[hi]) {
            let mut code: Vec<(usize, usize, usize, u64)> = d
                .edges()
                .iter()
                .enumerate()
                .map(|(k, e)| {
                    let tail = if d.is_source(e.from) { 0 } else { pos[&Element::Floor(e.from)] };
                    (tail, pos[&Element::Floor(e.to)], pos[&Element::Edge(k)], e.weight)
                })
                .collect();
            code.sort_unstable();
            seen.insert(code);
        }
    });
    seen.len()
}

fn permutations(v: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        visit(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, visit);
        v.swap(k, i);
    }
}

#[test]
fn marking_counts_match_brute_force() {
    let mut checked = 0;
    for (d, g) in [(1, 0), (2, 0), (3, 0), (3, 1)] {
        for diagram in enumerate_diagrams(d, g).unwrap() {
            assert!(diagram.marking_size() <= 10);
            assert_eq!(count_markings(&diagram).unwrap().to_usize().unwrap(), brute_force_markings(&diagram));
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 1 + 3 + 1);
}

#[test]
fn every_diagram_satisfies_the_axioms() {
    for (d, g) in [(1, 0), (2, 0), (3, 0), (3, 1), (4, 0), (4, 1), (4, 2), (4, 3), (5, 0), (5, 2)] {
        for diagram in enumerate_diagrams(d, g).unwrap() {
            assert!(diagram.validate().is_ok());
            assert_eq!(diagram.vertex_count() as u64, 2 * d);
            assert_eq!(diagram.edges().len() as u64, 2 * d - 1 + g);
            assert_eq!(diagram.betti_number(), g);
            let divergence: u64 = diagram.floors().iter().map(|&v| diagram.flow(v).0 - diagram.flow(v).1).sum();
            assert_eq!(divergence, d);
        }
    }
}

#[test]
fn markings_start_minimal_and_end_maximal() {
    for (d, g) in [(3, 0), (4, 1)] {
        for md in enumerate_marked(d, g).unwrap() {
            let relations = md.diagram().cover_relations();
            let (first, last) = (md.order()[0], *md.order().last().unwrap());
            assert!(relations.iter().all(|(_, hi)| *hi != first));
            assert!(relations.iter().all(|(lo, _)| *lo != last));
        }
    }
}

#[test]
fn counts_match_the_recursion() {
    for d in 1..=5u64 {
        assert_eq!(gw_count(d, 0).unwrap(), kontsevich_oracle(d).to_biguint().unwrap());
    }
}

#[test]
fn genus_beyond_the_maximum_is_empty() {
    for (d, g) in [(1, 1), (2, 1), (3, 2), (4, 4)] {
        assert!(enumerate_diagrams(d, g).unwrap().is_empty());
        assert_eq!(gw_count(d, g).unwrap(), BigUint::zero());
    }
}

#[test]
fn distinct_markings_give_distinct_curves() {
    let cfg: Configuration = stretched_config(11, 5);
    let curves: Vec<_> =
        enumerate_marked(4, 0).unwrap().iter().take(40).map(|md| reconstruct(md, &cfg).unwrap()).collect();
    for (i, c) in curves.iter().enumerate() {
        assert!(incidence_check(c, &cfg));
        assert_eq!(c.degree(), Some(4));
        assert!(curves[..i].iter().all(|o| o != c));
    }
}
