//! Exhaustive sweeps over small connected graphs.

mod common;

use betweenness::formats::{emit_graph6, parse_graph6};
use betweenness::gated::gate_in;
use betweenness::metric::{classify, for_each_cycle, is_bridged_by_cycles, is_well_bridged_cycle};
use betweenness::transit::AxiomId::{self, *};
use betweenness::verify::{enumerate_connected_graphs, AxiomOracle, GraphFacts};
use betweenness::VertexSet;
use common::Naive;

fn graphs(max_n: usize) -> impl Iterator<Item = betweenness::Graph> {
    (1..=max_n).flat_map(|n| enumerate_connected_graphs(n).unwrap())
}

#[test]
fn graph6_round_trip_all_graphs() {
    let mut count = 0;
    for g in graphs(7) {
        assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
        count += 1;
    }
    assert_eq!(count, 1 + 1 + 4 + 38 + 728 + 26704 + 1866256);
}

#[test]
fn interval_functions_are_geometric() {
    for g in graphs(6) {
        let facts = GraphFacts::new(&g);
        for a in [T1, T2, T3, B1, B2, B3] {
            assert!(facts.holds(a), "{a} on {}", emit_graph6(&g));
        }
        for u in 0..g.n() {
            assert_eq!(facts.interval().get(u, u), VertexSet::singleton(u));
        }
    }
}

const STRUCTURE: [AxiomId; 6] = [IB1, IB2, IB3, IB4, IB5, IB6];

/// ta holds on weakly modular graphs but not on every graph: in C5 the
/// vertices 0, 1, 3 form a metric triangle with one unit side.
fn check_structure(g: &betweenness::Graph) {
    let facts = GraphFacts::new(g);
    for a in STRUCTURE {
        assert!(facts.holds(a), "{a} on {}", emit_graph6(g));
    }
    if facts.weakly_modular() {
        assert!(facts.holds(Ta), "ta on {}", emit_graph6(g));
    }
    assert_eq!(facts.holds(IB7), facts.holds(S2), "{}", emit_graph6(g));
}

#[test]
fn interval_structure_axioms() {
    for g in graphs(7) {
        check_structure(&g);
    }
}

#[test]
fn ta_fails_on_the_five_cycle() {
    let c5 = betweenness::graph::make_cycle(5)
        .unwrap()
        .interval_function()
        .unwrap();
    let report = betweenness::transit::check_axiom(&c5, Ta);
    assert_eq!(report.witness, Some(vec![0, 1, 3]));
}

#[test]
fn bridged_graphs_have_only_well_bridged_cycles() {
    let mut bridged = 0;
    for g in graphs(7) {
        if is_bridged_by_cycles(&g).unwrap().is_some() {
            continue;
        }
        bridged += 1;
        let mut cycles = 0;
        for_each_cycle(&g, |c| {
            cycles += 1;
            assert!(
                is_well_bridged_cycle(&g, c).unwrap(),
                "{c:?} in {}",
                emit_graph6(&g)
            );
            true
        });
        if g.edge_count() >= g.n() {
            assert!(cycles > 0);
        }
    }
    assert!(bridged > 100_000);
}

#[test]
fn gates_are_unique() {
    for g in graphs(6) {
        let d = g.distances();
        let naive = Naive::new(&g);
        for bits in 1..1u64 << g.n() {
            let s = VertexSet::from_bits(bits);
            for y in 0..g.n() {
                let candidates: Vec<usize> = s
                    .iter()
                    .filter(|&x| {
                        s.iter()
                            .all(|t| naive.d[y][x] + naive.d[x][t] == naive.d[y][t])
                    })
                    .collect();
                assert!(candidates.len() <= 1, "{} {s} {y}", emit_graph6(&g));
                assert_eq!(gate_in(&d, y, s), candidates.first().copied());
            }
        }
    }
}

#[test]
fn classification_chain_outside_modular() {
    // the only chain link that can break is modular => weakly modular, on
    // graphs where QC holds but TC does not
    for g in graphs(6) {
        let report = classify(&g).unwrap();
        for (a, b) in report.chain_violations() {
            assert_eq!((a.name(), b.name()), ("modular", "weakly-modular"));
            assert!(report.modular && !report.weakly_modular);
        }
    }
}
