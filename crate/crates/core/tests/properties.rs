use std::sync::Arc;

use proptest::prelude::*;

use twodist::coloring::{brute_force_count, is_k_colorable, solve, Outcome, SolveOptions};
use twodist::embeddings::{k4_spectrum, Label, K4_EDGES};
use twodist::exactnum::{FieldElement, Tower};
use twodist::geometry::{dist2, lattice_dist2, lattice_to_point, rotate_about, LatticeCoord, Point, Qrt33};
use twodist::graphs::{catalog, from_json, to_json, AbstractGraph, CatalogId, TwoDistGraph};
use twodist::spindle::spindle;

fn tower() -> Arc<Tower> {
    Tower::from_decls(&[("s2", "2"), ("s3", "3"), ("s5", "5")]).unwrap()
}

/// An element with small rational coefficients on all eight monomials.
fn element() -> impl Strategy<Value = FieldElement> {
    prop::collection::vec((-20i64..=20, 1i64..=6), 8).prop_map(|cs| {
        let t = tower();
        let g: Vec<FieldElement> = ["s2", "s3", "s5"].iter().map(|n| t.generator(n).unwrap()).collect();
        let mut x = FieldElement::zero(&t);
        for (mask, (n, d)) in cs.into_iter().enumerate() {
            let mut m = FieldElement::from_ratio(&t, n, d);
            for (i, gi) in g.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    m = m * gi;
                }
            }
            x = x + m;
        }
        x
    })
}

fn coord() -> impl Strategy<Value = LatticeCoord> {
    (-12i64..=12, -12i64..=12, -12i64..=12, -12i64..=12).prop_map(|(a, b, c, d)| LatticeCoord::new(a, b, c, d))
}

fn small_graph(max_n: usize) -> impl Strategy<Value = AbstractGraph> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            AbstractGraph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in element(), b in element(), c in element()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &a), &FieldElement::zero(a.tower()));
        if !a.is_zero() {
            let inv = a.inverse().unwrap();
            prop_assert!((&a * &inv).is_one());
        }
    }

    #[test]
    fn square_roots_of_squares(a in element()) {
        let sq = a.square();
        let r = sq.sqrt_in_field().unwrap().expect("a square has a root");
        prop_assert_eq!(r.square(), sq);
        prop_assert!(r.signum() >= 0);
    }

    #[test]
    fn sign_agrees_with_enclosure(a in element()) {
        let i = a.interval(96);
        match a.signum() {
            1 => prop_assert!(!i.is_negative() && i.hi() > num_traits::Zero::zero()),
            -1 => prop_assert!(!i.is_positive() && i.lo() < num_traits::Zero::zero()),
            _ => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn lattice_distances_match_exact(u in coord(), v in coord()) {
        let exact = dist2(&lattice_to_point(&u), &lattice_to_point(&v)).unwrap();
        prop_assert_eq!(Qrt33::from_element(&exact), Some(lattice_dist2(&u, &v)));
    }

    #[test]
    fn rotations_are_isometries(
        (m, n) in (1i64..8, 1i64..8).prop_filter("m != n", |(m, n)| m != n),
        p in coord(), q in coord(), pivot in coord(),
    ) {
        // cos, sin from the Pythagorean triple (m^2 - n^2, 2mn, m^2 + n^2)
        let t = Tower::lattice();
        let h = m * m + n * n;
        let cos = FieldElement::from_ratio(&t, m * m - n * n, h);
        let sin = FieldElement::from_ratio(&t, 2 * m * n, h);
        let (p, q, c) = (lattice_to_point(&p), lattice_to_point(&q), lattice_to_point(&pivot));
        let rp = rotate_about(&c, &cos, &sin, &p).unwrap();
        let rq = rotate_about(&c, &cos, &sin, &q).unwrap();
        prop_assert_eq!(dist2(&rp, &rq).unwrap(), dist2(&p, &q).unwrap());
        prop_assert_eq!(dist2(&rp, &c).unwrap(), dist2(&p, &c).unwrap());
    }

    #[test]
    fn edge_sets_survive_rotation(
        coords in prop::collection::btree_set((-6i64..=6, -6i64..=6, -6i64..=6, -6i64..=6), 2..10),
        (m, n) in (1i64..6, 1i64..6).prop_filter("m != n", |(m, n)| m != n),
    ) {
        let t = Tower::lattice();
        let pts: Vec<Point> = coords.iter().map(|&(a, b, c, d)| lattice_to_point(&LatticeCoord::new(a, b, c, d))).collect();
        let d2 = FieldElement::from_int(&t, 3);
        let g = TwoDistGraph::build(pts.clone(), d2.clone()).unwrap();
        let h = m * m + n * n;
        let cos = FieldElement::from_ratio(&t, m * m - n * n, h);
        let sin = FieldElement::from_ratio(&t, 2 * m * n, h);
        let o = Point::origin(&t);
        let turned: Vec<Point> = pts.iter().map(|p| rotate_about(&o, &cos, &sin, p).unwrap()).collect();
        let r = TwoDistGraph::build(turned, d2).unwrap();
        prop_assert_eq!(g.unit_edges(), r.unit_edges());
        prop_assert_eq!(g.d_edges(), r.d_edges());
    }

    #[test]
    fn lattice_graphs_round_trip_through_json(
        coords in prop::collection::btree_set((-9i64..=9, -9i64..=9, -9i64..=9, -9i64..=9), 1..12),
    ) {
        let t = Tower::lattice();
        let coords: Vec<LatticeCoord> = coords.into_iter().map(|(a, b, c, d)| LatticeCoord::new(a, b, c, d)).collect();
        let g = TwoDistGraph::from_lattice(coords, FieldElement::from_ratio(&t, 4, 3)).unwrap();
        let back = from_json(&to_json(&g)).unwrap();
        prop_assert_eq!(back.points(), g.points());
        prop_assert_eq!(back.unit_edges(), g.unit_edges());
        prop_assert_eq!(back.d_edges(), g.d_edges());
    }

    #[test]
    fn solver_agrees_with_enumeration(g in small_graph(9), k in 1usize..=4) {
        let count = brute_force_count(&g, k).unwrap();
        let r = is_k_colorable(&g, k, &[]).unwrap();
        prop_assert_eq!(r.is_colorable(), count > 0);
        if let Some(c) = r.coloring() {
            prop_assert!(g.is_proper(c));
            prop_assert!(c.iter().all(|&x| x < k));
        }
    }

    #[test]
    fn colorability_is_monotone_in_k(g in small_graph(10), k in 1usize..=5) {
        if is_k_colorable(&g, k, &[]).unwrap().is_colorable() {
            prop_assert!(is_k_colorable(&g, k + 1, &[]).unwrap().is_colorable());
        }
    }

    #[test]
    fn precolorings_are_respected(g in small_graph(9), v in 0usize..9, c in 0usize..4) {
        let v = v % g.len();
        let opts = SolveOptions { precolor: vec![(v, c)], budget: None };
        let r = solve(&g, 4, &opts).unwrap();
        // fixing one vertex never changes colorability, since colors can be permuted
        prop_assert_eq!(r.is_colorable(), brute_force_count(&g, 4).unwrap() > 0);
        if let Outcome::Colorable(col) = r.result {
            prop_assert_eq!(col[v], c);
            prop_assert!(g.is_proper(&col));
        }
    }
}

#[test]
fn solver_agrees_with_enumeration_on_small_catalog_graphs() {
    for id in CatalogId::ALL {
        let g = catalog(id).unwrap();
        if g.len() > 13 {
            continue;
        }
        for k in 3..=5 {
            let count = brute_force_count(g.abstract_graph(), k).unwrap();
            let r = is_k_colorable(g.abstract_graph(), k, &[]).unwrap();
            assert_eq!(r.is_colorable(), count > 0, "{id} at k = {k}");
            if let Some(c) = r.coloring() {
                assert!(g.abstract_graph().is_proper(c), "{id} at k = {k}");
            }
        }
    }
}

#[test]
fn spindle_keeps_the_seed_and_bridges_at_the_forbidden_distance() {
    for id in [CatalogId::Root3K5e, CatalogId::Root6K5e, CatalogId::Exotic13] {
        let g = catalog(id).unwrap();
        let s = spindle(&g, 0, 1, &FieldElement::one(g.tower())).unwrap();
        let pts = s.graph.points();
        for (i, p) in g.points().iter().enumerate() {
            assert_eq!(&pts[i], &p.embed(s.graph.tower()).unwrap());
        }
        assert_eq!(s.image_of[0], 0);
        let (a, b) = s.bridged;
        assert!(dist2(&pts[a], &pts[b]).unwrap().is_one());
        for &(u, v) in g.unit_edges() {
            assert!(s.graph.abstract_graph().has_edge(s.image_of[u], s.image_of[v]));
        }
        for &(u, v) in g.d_edges() {
            assert!(s.graph.abstract_graph().has_edge(s.image_of[u], s.image_of[v]));
        }
    }
}

#[test]
fn k4_spectrum_is_stable_under_relabeling() {
    let s = k4_spectrum();
    let mut perms = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|x| p.contains(&x)) {
                        perms.push(p);
                    }
                }
            }
        }
    }
    assert_eq!(perms.len(), 24);
    let index = |i: usize, j: usize| K4_EDGES.iter().position(|&e| e == (i.min(j), i.max(j))).unwrap();
    for p in perms {
        for sol in &s.solutions {
            let mut moved = [Label::Unit; 6];
            for (e, &(i, j)) in K4_EDGES.iter().enumerate() {
                moved[index(p[i], p[j])] = sol.labels[e];
            }
            assert!(
                s.solutions.iter().any(|o| o.labels == moved && o.t.same_as(&sol.t)),
                "relabeled {} missing",
                sol.labeling()
            );
        }
    }
}
