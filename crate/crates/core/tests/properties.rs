mod common;

use std::collections::BTreeSet;

use brooks_color::brooks::{
    brooks_list_color, brooks_list_color_with_stats, build_branch_pair, check_hypotheses, extend_around_cycle,
    ResidualLists,
};
use brooks_color::chordal::{
    chordality_certificate, clique_number_from_peo, find_hole_from_witness, greedy_color_along, verify_peo,
    ChordalityCertificate, Hole,
};
use brooks_color::generate::{generate, random_lists, GeneratorConfig, Model};
use brooks_color::graph::named;
use brooks_color::oracle::{brute_force_list_color, verify_coloring, BruteForceOutcome, DEFAULT_NODE_LIMIT};
use brooks_color::{Color, Graph, ListAssignment, Vertex};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn gen(model: Model, n: u32, delta: usize, seed: u64, p: f64) -> Graph {
    generate(&GeneratorConfig {
        n,
        delta,
        model,
        seed,
        palette: 1,
        list_size: 0,
        edge_probability: p,
    })
    .unwrap()
    .graph
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (1u32..=9, 2usize..=8, any::<u64>(), 0.1f64..0.9).prop_map(|(n, d, s, p)| gen(Model::GnpCapped, n, d, s, p))
}

fn chordal_graph(max_n: u32) -> impl Strategy<Value = Graph> {
    (1u32..=max_n, 1usize..=8, any::<u64>()).prop_map(|(n, d, s)| gen(Model::ChordalSimplicial, n, d, s, 0.0))
}

#[test]
fn petersen_hole_matches_girth() {
    let p = named::petersen();
    let shortest = common::chordless_cycle_sets(&p).iter().map(BTreeSet::len).min();
    assert_eq!(shortest, Some(5));
    let ChordalityCertificate::Hole(h) = chordality_certificate(&p).unwrap() else {
        panic!("Petersen graph has holes");
    };
    assert_eq!(h.len(), 5);
}

#[test]
fn k4_minus_edge_witness_has_no_path() {
    let g = Graph::with_vertex_count(4, [(1, 2), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
    let blocked: BTreeSet<Vertex> = [2, 4].into();
    assert!(!common::path_exists_avoiding(&g, 1, 3, &blocked));
    assert_eq!(find_hole_from_witness(&g, 2, 1, 3), Ok(None));
}

#[test]
fn extend_examples_agree_with_enumeration() {
    let c4 = named::cycle(4);
    let hole = Hole::new(&c4, vec![1, 2, 3, 4]).unwrap();
    let cases: [[&[Color]; 4]; 2] = [[&[1, 2], &[2, 3], &[1, 2], &[1, 2]], [&[1, 2, 3]; 4]];
    for lists in cases {
        let star: ResidualLists = lists
            .iter()
            .enumerate()
            .map(|(i, l)| (i as Vertex + 1, l.iter().copied().collect()))
            .collect();
        let phi = extend_around_cycle(&hole, &star).unwrap();
        assert_eq!(phi.iter().collect::<Vec<_>>(), vec![(1, 1), (2, 2), (3, 1), (4, 2)]);
        let as_vecs: Vec<Vec<Color>> = lists.iter().map(|l| l.to_vec()).collect();
        assert!(common::cycle_colorable(&as_vecs));
        let uniform = ListAssignment::uniform(&c4, 3);
        let restricted: ListAssignment = (1..=4).map(|v| (v, star.get(v).unwrap().clone())).collect();
        assert!(verify_coloring(&c4, &restricted, &phi).is_ok());
        assert!(verify_coloring(&c4, &uniform, &phi).is_ok());
    }
}

#[test]
fn seeded_totality_with_structure() {
    // Every run must verify, recursion depth is bounded by the vertex count,
    // and some runs must actually branch through holes.
    let mut holes = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut solved = 0;
    let mut seed = 0u64;
    while solved < 1000 {
        seed += 1;
        let delta = 3 + (seed % 4) as usize;
        let n = 5 + (seed * 7 % 40) as u32;
        let g = gen(Model::TreePlusEdges, n, delta, seed, 0.0);
        let lists = random_lists(&g, 2 * delta as u32, delta, &mut rng);
        if !check_hypotheses(&g, &lists).unwrap().is_ok() {
            continue;
        }
        let (phi, stats) = brooks_list_color_with_stats(&g, &lists).unwrap();
        assert!(verify_coloring(&g, &lists, &phi).is_ok());
        assert!(stats.max_depth <= g.vertex_count());
        holes += stats.holes;
        solved += 1;
    }
    assert!(holes > 1000, "hole branch barely exercised: {holes}");
}

#[test]
fn h_branch_is_exercised() {
    let mut h = 0;
    for seed in 0..3000u64 {
        let g = gen(Model::TreePlusEdges, 8 + (seed % 10) as u32, 3, seed, 0.0);
        let lists = ListAssignment::uniform(&g, 3);
        if let Ok((_, stats)) = brooks_list_color_with_stats(&g, &lists) {
            h += stats.h_branches;
        }
    }
    assert!(h > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn certificate_sound_and_complete(g in small_graph()) {
        let cert = chordality_certificate(&g).unwrap();
        prop_assert_eq!(cert.is_chordal(), !common::has_chordless_cycle(&g));
        match cert {
            ChordalityCertificate::Peo(peo) => prop_assert!(verify_peo(&g, peo.order()).is_ok()),
            ChordalityCertificate::Hole(hole) => prop_assert!(Hole::new(&g, hole.vertices().to_vec()).is_ok()),
        }
    }

    #[test]
    fn witness_search_matches_path_enumeration(g in small_graph()) {
        for &v in g.vertices() {
            let nbrs: Vec<Vertex> = g.neighbors(v).unwrap().collect();
            for (i, &u) in nbrs.iter().enumerate() {
                for &w in &nbrs[i + 1..] {
                    if g.has_edge(u, w) {
                        continue;
                    }
                    let blocked: BTreeSet<Vertex> =
                        nbrs.iter().copied().chain([v]).filter(|&x| x != u && x != w).collect();
                    let found = find_hole_from_witness(&g, v, u, w).unwrap();
                    prop_assert_eq!(found.is_some(), common::path_exists_avoiding(&g, u, w, &blocked));
                    if let Some(h) = found {
                        prop_assert!(h.is_valid_in(&g));
                        prop_assert_eq!(&h.vertices()[..2], &[v, u]);
                        prop_assert_eq!(*h.vertices().last().unwrap(), w);
                    }
                }
            }
        }
    }

    #[test]
    fn clique_number_matches_brute_force(g in chordal_graph(10)) {
        let ChordalityCertificate::Peo(peo) = chordality_certificate(&g).unwrap() else {
            return Err(TestCaseError::fail("generator produced a non-chordal graph"));
        };
        prop_assert_eq!(clique_number_from_peo(&g, &peo).unwrap(), common::max_clique(&g));
    }

    #[test]
    fn greedy_along_peo_with_omega_lists(g in chordal_graph(40), seed in any::<u64>()) {
        let ChordalityCertificate::Peo(peo) = chordality_certificate(&g).unwrap() else {
            return Err(TestCaseError::fail("generator produced a non-chordal graph"));
        };
        let omega = clique_number_from_peo(&g, &peo).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let lists = random_lists(&g, 2 * omega as u32 + 1, omega, &mut rng);
        let phi = greedy_color_along(&g, peo.order(), &lists).unwrap();
        prop_assert!(verify_coloring(&g, &lists, &phi).is_ok());
    }

    #[test]
    fn degree_greedy_in_any_order(g in small_graph(), order_seed in any::<u64>(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let lists: ListAssignment = g
            .vertices()
            .iter()
            .map(|&v| {
                let size = g.degree(v).unwrap() + 1;
                let colors = random_lists(&Graph::with_vertex_count(1, []).unwrap(), 12, size, &mut rng)
                    .get(1)
                    .unwrap()
                    .clone();
                (v, colors)
            })
            .collect();
        let mut order = g.vertices().to_vec();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(order_seed));
        let phi = greedy_color_along(&g, &order, &lists).unwrap();
        prop_assert!(verify_coloring(&g, &lists, &phi).is_ok());
    }

    #[test]
    fn extend_matches_exhaustive_search(
        k in 4usize..=6,
        palette in 2i64..=4,
        raw in proptest::collection::vec(proptest::collection::btree_set(1i64..=4, 2..=4), 6),
    ) {
        let lists: Vec<BTreeSet<Color>> = raw
            .into_iter()
            .take(k)
            .map(|s| s.into_iter().map(|c| (c - 1) % palette + 1).collect::<BTreeSet<_>>())
            .collect();
        prop_assume!(lists.iter().all(|l| l.len() >= 2));
        let cycle = named::cycle(k as u32);
        let hole = Hole::new(&cycle, (1..=k as Vertex).collect()).unwrap();
        let star: ResidualLists = lists.iter().enumerate().map(|(i, l)| (i as Vertex + 1, l.clone())).collect();
        // Lists that could come from a proper coloring of a retained triangle.
        let triangle_ok = (0..k).any(|s| {
            let (a, b, c) = (&lists[s], &lists[(s + 1) % k], &lists[(s + 2) % k]);
            a.iter().any(|x| b.iter().any(|y| y != x && c.iter().any(|z| z != x && z != y)))
        });
        let as_vecs: Vec<Vec<Color>> = lists.iter().map(|l| l.iter().copied().collect()).collect();
        let exhaustive = common::cycle_colorable(&as_vecs);
        match extend_around_cycle(&hole, &star) {
            Ok(phi) => {
                prop_assert!(exhaustive);
                let restricted: ListAssignment = lists.iter().enumerate().map(|(i, l)| (i as Vertex + 1, l.clone())).collect();
                prop_assert!(verify_coloring(&cycle, &restricted, &phi).is_ok());
            }
            Err(_) => {
                prop_assert!(!triangle_ok);
                let first = &lists[0];
                prop_assert!(lists.iter().all(|l| l == first && l.len() == 2));
            }
        }
        if triangle_ok {
            prop_assert!(exhaustive);
        }
    }

    #[test]
    fn branch_pair_invariants(seed in any::<u64>(), n in 5u32..40, delta in 3usize..7) {
        let g = gen(Model::TreePlusEdges, n, delta, seed, 0.0);
        if let ChordalityCertificate::Hole(hole) = chordality_certificate(&g).unwrap() {
            let pair = build_branch_pair(&g, &hole).unwrap();
            let x = hole.vertices();
            prop_assert!(!g.has_edge(x[0], x[2]));
            prop_assert!(!g.has_edge(x[1], x[3]));
            prop_assert!(pair.f_graph.has_edge(x[0], x[2]));
            prop_assert!(pair.h_graph.has_edge(x[1], x[3]));
            prop_assert!(pair.f_graph.max_degree() <= g.max_degree());
            prop_assert!(pair.h_graph.max_degree() <= g.max_degree());
            prop_assert!(pair.f_graph.vertex_count() < g.vertex_count());
            prop_assert!(pair.h_graph.vertex_count() < g.vertex_count());
            prop_assert_eq!(pair.f_graph.vertex_count(), g.vertex_count() - (x.len() - 3));
            prop_assert!(pair.f_graph.audit() && pair.h_graph.audit());
        }
    }

    #[test]
    fn solver_is_deterministic(seed in any::<u64>(), n in 5u32..50, delta in 3usize..7) {
        let g = gen(Model::TreePlusEdges, n, delta, seed, 0.0);
        let lists = ListAssignment::uniform(&g, delta);
        let first = brooks_list_color(&g, &lists);
        let second = brooks_list_color(&g, &lists);
        prop_assert_eq!(&first, &second);
        prop_assert_eq!(chordality_certificate(&g).unwrap(), chordality_certificate(&g).unwrap());
    }

    #[test]
    fn oracle_agrees_with_solver(g in small_graph(), seed in any::<u64>()) {
        let delta = g.max_degree().max(3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let lists = random_lists(&g, 2 * delta as u32, delta, &mut rng);
        let oracle = brute_force_list_color(&g, &lists, DEFAULT_NODE_LIMIT);
        if let BruteForceOutcome::Colored(phi) = &oracle {
            prop_assert!(verify_coloring(&g, &lists, phi).is_ok());
        }
        if check_hypotheses(&g, &lists).unwrap().is_ok() {
            prop_assert!(matches!(oracle, BruteForceOutcome::Colored(_)));
            let phi = brooks_list_color(&g, &lists).unwrap();
            prop_assert!(verify_coloring(&g, &lists, &phi).is_ok());
        }
    }
}
