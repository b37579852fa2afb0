//! Finite graphs: model invariants as properties, predicates and the
//! Hamilton pipeline against independent oracles.

mod common;

use clawham::enumerate::{all_graphs, SmallGraph};
use clawham::extension::{finite_hamilton, shortest_cycle_through, verify_certificate, ExtensionCase};
use clawham::generators;
use clawham::io;
use clawham::predicates;
use clawham::separators::minimal_separator_components;
use clawham::{CycleEmbedding, Edge, EdgeSet, FiniteGraph, Vertex, VertexSet};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = FiniteGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let m = pairs.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let edges: Vec<(Vertex, Vertex)> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&p, _)| p).collect();
            FiniteGraph::new(0..n, edges).unwrap()
        })
    })
}

fn arb_graph_and_subset(max_n: usize) -> impl Strategy<Value = (FiniteGraph, VertexSet)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), proptest::collection::vec(any::<bool>(), n)).prop_map(|(g, bits)| {
            let x = bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect();
            (g, x)
        })
    })
}

fn brute_claw(g: &FiniteGraph) -> bool {
    g.vertices().iter().any(|&v| {
        let nb = g.neighbors(v);
        (0..nb.len()).any(|i| {
            (i + 1..nb.len()).any(|j| {
                (j + 1..nb.len())
                    .any(|k| !g.has_edge(nb[i], nb[j]) && !g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k]))
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cut_is_symmetric((g, x) in arb_graph_and_subset(10)) {
        let rest: VertexSet = g.vertex_set().difference(&x).copied().collect();
        prop_assert_eq!(g.cut(&x).unwrap(), g.cut(&rest).unwrap());
    }

    #[test]
    fn cycles_cross_cuts_evenly((g, x) in arb_graph_and_subset(10)) {
        let Some(root) = g.vertices().iter().copied().find(|&v| shortest_cycle_through(&g, v).is_some()) else {
            return Ok(());
        };
        let c = shortest_cycle_through(&g, root).unwrap();
        let cut = g.cut(&x).unwrap();
        prop_assert_eq!(c.edges().intersection(&cut).count() % 2, 0);
    }

    #[test]
    fn claw_predicate_matches_brute_force(g in arb_graph(9)) {
        let report = predicates::is_claw_free(&g);
        prop_assert_eq!(report.holds, !brute_claw(&g));
        if let Some(w) = &report.witness {
            prop_assert!(w.verify(&g));
        }
    }

    #[test]
    fn local_connectivity_witnesses_verify(g in arb_graph(9)) {
        let report = predicates::is_locally_connected(&g);
        let brute = g.vertices().iter().all(|&v| {
            let nb: VertexSet = g.neighbors(v).iter().copied().collect();
            let comps = common::components_without(&g.induced_subgraph(&nb).unwrap(), &VertexSet::new());
            comps.len() <= 1
        });
        prop_assert_eq!(report.holds, brute);
        if let Some(w) = &report.witness {
            prop_assert!(w.verify(&g));
        }
    }

    #[test]
    fn line_graphs_are_claw_free(g in arb_graph(9)) {
        prop_assume!(g.edge_count() > 0);
        let l = generators::line_graph(&g).unwrap();
        prop_assert!(!brute_claw(&l.graph));
        prop_assert_eq!(l.graph.order(), g.edge_count());
        for e in l.graph.edges() {
            let (a, b) = e.ends();
            let (x, y) = (l.edge_of(a).ends(), l.edge_of(b).ends());
            prop_assert!(x.0 == y.0 || x.0 == y.1 || x.1 == y.0 || x.1 == y.1);
        }
    }

    #[test]
    fn formats_round_trip(g in arb_graph(12)) {
        prop_assert_eq!(io::parse_json(&io::to_json(&g)).unwrap(), g.clone());
        // Edge lists cannot carry isolated vertices.
        if g.vertices().iter().all(|&v| g.degree(v) > 0) {
            prop_assert_eq!(io::parse_edge_list(&io::to_edge_list(&g)).unwrap(), g);
        }
    }

    #[test]
    fn hamilton_on_random_class_members(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_class_graph(&mut rng);
        let cert = finite_hamilton(&g).unwrap();
        prop_assert!(common::is_hamilton_cycle(&g, cert.cycle.order()));
        prop_assert!(verify_certificate(&g, &cert).ok);
        for ext in &cert.extension_log {
            prop_assert_eq!(ext.reattach.is_some(), ext.case == ExtensionCase::Two);
        }
    }
}

#[test]
fn oracle_agrees_on_small_families() {
    for (g, hamiltonian) in [
        (generators::complete(5), true),
        (generators::petersen(), false),
        (generators::cube(), true),
        (generators::star(3), false),
        (generators::bowtie(), false),
        (generators::ladder(4), true),
        (generators::path(4), false),
    ] {
        let found = common::hamilton_oracle(&g);
        assert_eq!(found.is_some(), hamiltonian, "{g:?}");
        if let Some(seq) = found {
            assert!(common::is_hamilton_cycle(&g, &seq));
        }
    }
}

#[test]
fn pipeline_matches_oracle_up_to_seven() {
    // Every connected claw-free graph on 3..=7 vertices: the pipeline either
    // refuses at the gate or returns a cycle, and a refused graph that is
    // locally connected never occurs.
    for s in all_graphs(7).iter().filter(|s| s.order() >= 3) {
        let g = s.to_finite();
        if !g.is_connected() || s.has_claw() {
            continue;
        }
        let lc = predicates::is_locally_connected(&g).holds;
        match finite_hamilton(&g) {
            Ok(cert) => {
                assert!(lc);
                assert!(common::is_hamilton_cycle(&g, cert.cycle.order()));
            }
            Err(_) => assert!(!lc, "{g:?}"),
        }
    }
}

#[test]
fn tampered_certificates_fail() {
    let g = generators::line_graph(&generators::complete(5)).unwrap().graph;
    let cert = finite_hamilton(&g).unwrap();
    assert!(!cert.extension_log.is_empty());
    let mut wrong_base = cert.clone();
    let first = &mut wrong_base.extension_log[0];
    let target = first.target;
    first.base = *g
        .vertices()
        .iter()
        .find(|&&v| v != target && !g.has_edge(v, target))
        .unwrap();
    let verdict = verify_certificate(&g, &wrong_base);
    assert!(!verdict.ok);
    let why = verdict.first_failure.unwrap();
    assert!(why.starts_with("step 0"), "{why}");

    let mut short = cert.clone();
    short.extension_log.pop();
    assert!(!verify_certificate(&g, &short).ok);

    let mut other_graph = g.clone();
    let e = cert.cycle.edges().into_iter().next().unwrap();
    let (a, b) = e.ends();
    let keep: Vec<(Vertex, Vertex)> = other_graph
        .edges()
        .filter(|&x| x != Edge::new(a, b))
        .map(Edge::ends)
        .collect();
    other_graph = FiniteGraph::new(g.vertices().iter().copied(), keep).unwrap();
    assert!(!verify_certificate(&other_graph, &cert).ok);
}

#[test]
fn frozen_certificates() {
    // Deterministic choices make the certificates reproducible.
    let oct = generators::octahedron();
    let cert = finite_hamilton(&oct).unwrap();
    assert_eq!(cert.initial.order(), &[0, 2, 4]);
    assert_eq!(cert.extension_log.len(), 3);
    let k33 = generators::complete_multipartite(&[3, 3]);
    assert!(finite_hamilton(&k33).is_err());
}

#[test]
fn separator_components_of_known_graphs() {
    // C_6 squared minus nothing: {0, 3} does not separate, {1, 2, 4, 5} does.
    let c6sq = generators::graph_power(&generators::cycle(6), 2).unwrap();
    assert!(minimal_separator_components(&c6sq, &VertexSet::from([0, 3])).is_err());
    let p6sq = generators::graph_power(&generators::path(6), 2).unwrap();
    let comps = minimal_separator_components(&p6sq, &VertexSet::from([2, 3])).unwrap();
    assert_eq!(comps, vec![VertexSet::from([0, 1]), VertexSet::from([4, 5])]);
}

#[test]
fn small_graph_conversion_round_trips() {
    for s in all_graphs(5) {
        let g = s.to_finite();
        assert_eq!(SmallGraph::from_finite(&g).unwrap(), s);
        let edges: EdgeSet = g.edges().collect();
        assert_eq!(edges.len(), g.edge_count());
    }
    let c = CycleEmbedding::in_graph(&generators::cycle(5), &[0, 1, 2, 3, 4]).unwrap();
    assert_eq!(c.succ(4), 0);
    assert_eq!(c.pred(0), 4);
}
