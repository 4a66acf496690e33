//! Worked examples for each public operation, checked through the public API.

mod common;

use betweenness::fixtures::{fixture, load_fixture};
use betweenness::formats::{emit_graph6, parse_constructor, parse_edge_list, parse_graph6};
use betweenness::gated::{gate, gated_amalgam, glue_unchecked, is_gated, AmalgamSpec};
use betweenness::graph::{
    cartesian_product, make_complete, make_cycle, make_path, make_prism, make_wheel,
};
use betweenness::metric::{
    check_qc, check_tc, check_tdc, classify, is_bridged_by_characterization, is_bridged_by_cycles,
    is_weakly_bridged, is_well_bridged_cycle, Condition, GraphClass,
};
use betweenness::pattern::{dominated_five_cycle_check, has_induced, Pattern};
use betweenness::transit::{check_axiom, holds_at, AxiomId};
use betweenness::verify::{enumerate_connected_graphs, minimize_with, Subject};
use betweenness::{Error, Graph, TransitFunction, VertexSet};
use common::Naive;

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().collect()
}

fn is_square(g: &Graph, s: VertexSet) -> bool {
    let vs = s.to_vec();
    vs.len() == 4
        && g.induced(s).edge_count() == 4
        && vs.iter().all(|&v| (g.neighbors(v) & s).len() == 2)
}

#[test]
fn graph6_decoding() {
    // D?{: n = 5, bits 000000 111100 -> (0,4), (1,4), (2,4), (3,4)
    let g = parse_graph6("D?{").unwrap();
    assert_eq!(g.n(), 5);
    assert_eq!(
        g.edges().collect::<Vec<_>>(),
        vec![(0, 4), (1, 4), (2, 4), (3, 4)]
    );
    assert_eq!(emit_graph6(&g), "D?{");

    let k1 = parse_graph6("@").unwrap();
    assert_eq!((k1.n(), k1.edge_count()), (1, 0));
    let k2 = parse_graph6("A_").unwrap();
    assert_eq!((k2.n(), k2.edges().collect::<Vec<_>>()), (2, vec![(0, 1)]));
}

#[test]
fn edge_lists() {
    let p3 = parse_edge_list("n 3\n0 1\n1 2").unwrap();
    assert_eq!(p3, make_path(3).unwrap());
    assert!(parse_edge_list("n 2\n0 0").is_err());
    assert_eq!(
        parse_edge_list("n 4\n0 1\n1 2\n2 3\n3 0").unwrap(),
        make_cycle(4).unwrap()
    );
}

#[test]
fn constructors() {
    let w4 = make_wheel(4).unwrap();
    assert_eq!((w4.n(), w4.edge_count()), (5, 8));
    let c5 = make_cycle(5).unwrap();
    assert!((0..5).all(|v| c5.degree(v) == 2));
    assert_eq!(make_complete(4).unwrap().edge_count(), 6);
    assert_eq!(parse_constructor("wheel:4").unwrap(), w4);
}

#[test]
fn cartesian_products() {
    let prism = cartesian_product(&make_complete(3).unwrap(), &make_complete(2).unwrap()).unwrap();
    assert_eq!((prism.n(), prism.edge_count()), (6, 9));
    assert_eq!(prism, make_prism());

    let h = make_wheel(5).unwrap();
    assert_eq!(
        cartesian_product(&make_complete(1).unwrap(), &h).unwrap(),
        h
    );

    let sq = cartesian_product(&make_path(2).unwrap(), &make_path(2).unwrap()).unwrap();
    assert_eq!(sq.edge_count(), 4);
    assert!((0..4).all(|v| sq.degree(v) == 2) && sq.is_connected());
}

#[test]
fn distances() {
    assert_eq!(make_cycle(8).unwrap().distances().get(0, 4), Some(4));
    let k4 = make_complete(4).unwrap().distances();
    assert!((0..4).all(|u| (0..4).all(|v| u == v || k4.get(u, v) == Some(1))));

    let prism = make_prism();
    let d = prism.distances();
    let naive = Naive::new(&prism);
    let mut far = 0;
    for u in 0..6 {
        for v in 0..6 {
            assert_eq!(d.raw(u, v) as usize, naive.d[u][v]);
            far += usize::from(naive.d[u][v] == 2);
        }
    }
    // each vertex is at distance 2 from the two non-partner vertices of the other triangle
    assert_eq!(far, 12);
    assert_eq!(d.diameter(), Some(2));

    let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    assert!(!two_edges.is_connected());
    assert!(make_cycle(5).unwrap().is_connected());
    assert!(make_complete(1).unwrap().is_connected());
}

#[test]
fn intervals() {
    assert_eq!(
        make_cycle(8).unwrap().interval(0, 3).unwrap(),
        set(&[0, 1, 2, 3])
    );
    assert_eq!(
        make_cycle(4).unwrap().interval(0, 2).unwrap(),
        set(&[0, 1, 2, 3])
    );
    assert_eq!(
        make_wheel(4).unwrap().interval(0, 2).unwrap(),
        set(&[0, 1, 2, 3, 4])
    );

    let p3 = make_path(3).unwrap().interval_function().unwrap();
    assert_eq!(p3.get(0, 2), set(&[0, 1, 2]));
    assert_eq!(p3.get(0, 1), set(&[0, 1]));
    assert_eq!(p3.get(1, 1), set(&[1]));
    let k3 = make_complete(3).unwrap().interval_function().unwrap();
    assert!((0..3).all(|u| (0..3).all(|v| k3.get(u, v) == set(&[u, v]))));
    assert_eq!(
        make_cycle(5).unwrap().interval(0, 2).unwrap(),
        set(&[0, 1, 2])
    );
}

#[test]
fn induced_patterns() {
    assert_eq!(has_induced(&make_cycle(6).unwrap(), Pattern::C4), None);
    assert_eq!(
        has_induced(&make_wheel(5).unwrap(), Pattern::C5),
        Some(set(&[0, 1, 2, 3, 4]))
    );
    let prism = make_prism();
    let face = has_induced(&prism, Pattern::C4).unwrap();
    assert!(is_square(&prism, face));
}

#[test]
fn five_cycle_domination() {
    assert!(!dominated_five_cycle_check(&make_cycle(5).unwrap()));
    assert!(dominated_five_cycle_check(&make_wheel(5).unwrap()));
    for g in [
        make_complete(4).unwrap(),
        make_cycle(6).unwrap(),
        make_path(5).unwrap(),
    ] {
        assert!(dominated_five_cycle_check(&g));
    }
}

#[test]
fn triangle_condition() {
    let w = check_tc(&make_cycle(5).unwrap()).unwrap().unwrap();
    assert_eq!(
        (w.kind, w.apex, w.base.clone()),
        (Condition::TC, 0, vec![2, 3])
    );
    assert_eq!(check_tc(&make_cycle(6).unwrap()).unwrap(), None);
    assert_eq!(
        check_tc(&make_prism().delete_vertex(5).delete_vertex(4)).unwrap(),
        None
    );
    assert_eq!(check_tc(&make_complete(4).unwrap()).unwrap(), None);
}

#[test]
fn quadrangle_condition() {
    let w = check_qc(&make_cycle(6).unwrap()).unwrap().unwrap();
    assert_eq!(w.kind, Condition::QC);
    // base is [v, w, y] with y antipodal to the apex
    let (u, y) = (w.apex, w.base[2]);
    assert_eq!(Naive::new(&make_cycle(6).unwrap()).d[u][y], 3);
    assert_eq!(check_qc(&make_cycle(4).unwrap()).unwrap(), None);
    for n in 1..=7 {
        for g in enumerate_connected_graphs(n).unwrap() {
            if g.edge_count() == n - 1 {
                assert_eq!(check_qc(&g).unwrap(), None, "tree {}", emit_graph6(&g));
            }
        }
    }
}

#[test]
fn triangle_diamond_condition() {
    let prism = make_prism();
    assert!(check_tc(&prism).unwrap().is_none() && check_qc(&prism).unwrap().is_none());
    assert!(check_tdc(&prism).unwrap().is_some());
    assert_eq!(check_tdc(&make_wheel(5).unwrap()).unwrap(), None);
    assert_eq!(check_tdc(&make_cycle(6).unwrap()).unwrap(), None);
}

#[test]
fn classification() {
    let w4 = classify(&make_wheel(4).unwrap()).unwrap();
    assert!(w4.diamond_weakly_modular && !w4.bridged);

    let prism = classify(&make_prism()).unwrap();
    assert!(prism.weakly_modular && !prism.diamond_weakly_modular);

    let k4 = classify(&make_complete(4).unwrap()).unwrap();
    assert!(GraphClass::ALL.iter().all(|&c| k4.verdict(c)));

    let text = w4.to_text();
    assert!(text.contains("diamond-weakly-modular: true"));
    assert!(text.contains("bridged: false"));
}

#[test]
fn isometric_cycles() {
    assert_eq!(
        is_bridged_by_cycles(&make_cycle(6).unwrap())
            .unwrap()
            .map(|c| c.len()),
        Some(6)
    );
    // chordal graphs: fans, complete graphs, a triangulated hexagon
    let fan =
        Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]).unwrap();
    let hex = Graph::from_edges(
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            (0, 2),
            (0, 3),
            (0, 4),
        ],
    )
    .unwrap();
    for g in [fan, hex, make_complete(5).unwrap(), make_path(4).unwrap()] {
        assert_eq!(is_bridged_by_cycles(&g).unwrap(), None);
    }
    // the rim of W5 is an isometric 5-cycle
    let rim = is_bridged_by_cycles(&make_wheel(5).unwrap())
        .unwrap()
        .unwrap();
    assert_eq!(rim.iter().collect::<VertexSet>(), set(&[0, 1, 2, 3, 4]));
}

#[test]
fn bridged_by_characterization() {
    assert!(is_bridged_by_characterization(&make_complete(4).unwrap()).unwrap());
    assert!(!is_bridged_by_characterization(&make_cycle(4).unwrap()).unwrap());
    assert!(!is_bridged_by_characterization(&make_wheel(5).unwrap()).unwrap());
}

#[test]
fn weakly_bridged() {
    assert!(is_weakly_bridged(&make_wheel(5).unwrap()).unwrap());
    assert!(!is_weakly_bridged(&make_wheel(4).unwrap()).unwrap());
    for n in 1..=7 {
        for g in enumerate_connected_graphs(n).unwrap() {
            if is_bridged_by_cycles(&g).unwrap().is_none() {
                assert!(is_weakly_bridged(&g).unwrap(), "{}", emit_graph6(&g));
            }
        }
    }
}

#[test]
fn well_bridged_cycles() {
    assert!(is_well_bridged_cycle(&make_complete(4).unwrap(), &[0, 1, 2]).unwrap());
    assert!(!is_well_bridged_cycle(&make_cycle(6).unwrap(), &[0, 1, 2, 3, 4, 5]).unwrap());
    assert!(!is_well_bridged_cycle(&make_wheel(4).unwrap(), &[0, 1, 2, 3]).unwrap());
}

#[test]
fn transit_axioms_on_examples() {
    let r = load_fixture("j0p-not-j0").unwrap();
    let j0 = check_axiom(&r, AxiomId::J0);
    assert!(!j0.holds);
    // (a, b, c, d) is one failing tuple; the reported one is the lex-first
    assert!(!holds_at(&r, AxiomId::J0, &[0, 1, 2, 3]));
    assert!(j0.witness.unwrap() <= vec![0, 1, 2, 3]);
    assert!(r.satisfies(AxiomId::J0p));

    let ex1 = load_fixture("ex1").unwrap();
    let t1 = check_axiom(&ex1, AxiomId::T1);
    // R(v,u) = {u} misses v
    assert_eq!(t1.witness, Some(vec![1, 0]));
    assert_eq!(ex1.get(0, 1), set(&[0]));
    for a in [
        AxiomId::T2,
        AxiomId::T3,
        AxiomId::B3,
        AxiomId::J0p,
        AxiomId::Ta,
    ] {
        assert!(ex1.satisfies(a), "{a}");
    }

    for g in [
        make_cycle(7).unwrap(),
        make_prism(),
        make_wheel(4).unwrap(),
        make_path(4).unwrap(),
    ] {
        let ig = g.interval_function().unwrap();
        for a in [
            AxiomId::T1,
            AxiomId::T2,
            AxiomId::T3,
            AxiomId::B1,
            AxiomId::B2,
            AxiomId::B3,
        ] {
            assert!(ig.satisfies(a), "{a} on {}", emit_graph6(&g));
        }
    }
}

#[test]
fn underlying_graphs() {
    let g = make_wheel(5).unwrap();
    assert_eq!(g.interval_function().unwrap().underlying_graph(), g);

    let gr = load_fixture("j0p-not-j0").unwrap().underlying_graph();
    // a b c d e = 0 1 2 3 4
    let expected =
        Graph::from_edges(5, &[(0, 4), (0, 1), (1, 4), (1, 2), (2, 4), (2, 3), (3, 4)]).unwrap();
    assert_eq!(gr, expected);

    let mut full = TransitFunction::trivial(3).unwrap();
    for u in 0..3 {
        for v in 0..3 {
            if u != v {
                full.set(u, v, VertexSet::full(3));
            }
        }
    }
    assert_eq!(full.underlying_graph().edge_count(), 0);
}

#[test]
fn interval_function_recognition() {
    assert!(make_cycle(5)
        .unwrap()
        .interval_function()
        .unwrap()
        .equals_interval_function()
        .unwrap());
    // the underlying graph is a fan: a-e-c with a,b,c,d all adjacent to e,
    // and there R(a,c) = {a,b,c,e} is exactly the interval
    let r = load_fixture("j0p-not-j0").unwrap();
    let fan = r.underlying_graph().interval_function().unwrap();
    assert_eq!(fan.get(0, 2), r.get(0, 2));
    assert!(r.equals_interval_function().unwrap());

    let mut full = TransitFunction::trivial(4).unwrap();
    for u in 0..4 {
        for v in 0..4 {
            if u != v {
                full.set(u, v, VertexSet::full(4));
            }
        }
    }
    assert!(matches!(
        full.equals_interval_function(),
        Err(Error::Domain(_))
    ));
}

#[test]
fn named_fixtures() {
    let ex2 = load_fixture("ex2").unwrap();
    // u v x y = 0 1 2 3
    assert_eq!(ex2.get(0, 2), set(&[0, 1, 2]));
    assert_eq!(ex2.get(2, 0), set(&[0, 2]));
    assert!(!ex2.satisfies(AxiomId::T2));
    for a in [
        AxiomId::T1,
        AxiomId::T3,
        AxiomId::B3,
        AxiomId::J0p,
        AxiomId::Ta,
    ] {
        assert!(ex2.satisfies(a), "{a}");
    }

    let e4 = load_fixture("e4").unwrap();
    assert!(!e4.satisfies(AxiomId::Br));
    for a in [
        AxiomId::T1,
        AxiomId::T2,
        AxiomId::T3,
        AxiomId::J0p,
        AxiomId::Ta,
        AxiomId::B3,
    ] {
        assert!(e4.satisfies(a), "{a}");
    }

    let e1 = load_fixture("e1").unwrap();
    assert_eq!(e1.underlying_graph(), make_cycle(8).unwrap());
    for a in [
        AxiomId::T1,
        AxiomId::T2,
        AxiomId::T3,
        AxiomId::Br,
        AxiomId::Ta,
        AxiomId::B3,
    ] {
        assert!(e1.satisfies(a), "{a}");
    }
    // (v1, v3, v4, v6) is a failing tuple for J0'
    assert!(!holds_at(&e1, AxiomId::J0p, &[0, 2, 3, 5]));
    assert!(!e1.satisfies(AxiomId::J0p));

    assert_eq!(fixture("ex3").unwrap().fails, AxiomId::T3);
    let ex3 = load_fixture("ex3").unwrap();
    assert_eq!(check_axiom(&ex3, AxiomId::T3).witness, Some(vec![0]));
    assert_eq!(ex3.get(0, 0), set(&[0, 1]));
    assert!(fixture("nope").is_err());
}

#[test]
fn gates() {
    let c4 = make_cycle(4).unwrap();
    assert_eq!(gate(&c4, 0, set(&[0, 1])).unwrap(), Some(0));
    assert_eq!(gate(&c4, 2, set(&[0, 1])).unwrap(), Some(1));
    let c5 = make_cycle(5).unwrap();
    assert_eq!(gate(&c5, 3, set(&[0, 1])).unwrap(), None);

    let w5 = make_wheel(5).unwrap();
    assert!((0..6).all(|v| is_gated(&w5, VertexSet::singleton(v)).unwrap()));
    assert!(!is_gated(&c5, set(&[0, 1])).unwrap());
}

#[test]
fn amalgams() {
    // no edge of K3 is gated: the third vertex sees both ends at distance 1
    let k3 = make_complete(3).unwrap();
    let spec = AmalgamSpec::new(k3.clone(), k3.clone(), vec![(0, 0), (1, 1)]);
    assert!(gated_amalgam(&spec).is_err());
    let diamond = glue_unchecked(&spec).unwrap();
    assert_eq!((diamond.n(), diamond.edge_count()), (4, 5));
    assert_eq!(
        has_induced(&diamond, Pattern::Diamond),
        Some(VertexSet::full(4))
    );

    let g = make_wheel(5).unwrap();
    let trivial = AmalgamSpec::new(g.clone(), make_complete(1).unwrap(), vec![(5, 0)]);
    assert_eq!(gated_amalgam(&trivial).unwrap(), g);

    // a W5 rim edge is not gated either, so only the unchecked glue exists
    let spec = AmalgamSpec::new(
        make_wheel(5).unwrap(),
        make_complete(4).unwrap(),
        vec![(0, 0), (1, 1)],
    );
    assert!(gated_amalgam(&spec).is_err());
    let glued = glue_unchecked(&spec).unwrap();
    assert_eq!(glued.n(), 8);
    // and that glue leaves the class: K4 hangs off a non-gated edge
    let report = classify(&glued).unwrap();
    assert!(!report.diamond_weakly_modular);

    // along the hub, a gated vertex, the closure property applies
    let spec = AmalgamSpec::new(
        make_wheel(5).unwrap(),
        make_complete(4).unwrap(),
        vec![(5, 0)],
    );
    let glued = gated_amalgam(&spec).unwrap();
    assert_eq!(glued.n(), 9);
    assert!(classify(&glued).unwrap().diamond_weakly_modular);
}

#[test]
fn minimization() {
    // C6 with a pendant path: C6 is the smallest connected piece without TC
    let mut g = make_cycle(6).unwrap();
    let mut big = Graph::empty(8).unwrap();
    for (u, v) in g.edges() {
        big.add_edge(u, v).unwrap();
    }
    big.add_edge(0, 6).unwrap();
    big.add_edge(6, 7).unwrap();
    g = big;
    let qc_fails = |s: &Subject| match s {
        Subject::Graph(h) => check_qc(h).unwrap().is_some(),
        _ => false,
    };
    let Subject::Graph(min) = minimize_with(Subject::Graph(g), qc_fails) else {
        panic!("graph subject expected")
    };
    assert_eq!(min.n(), 6);
    assert_eq!(min.edge_count(), 6);

    let c6 = make_cycle(6).unwrap();
    assert_eq!(
        minimize_with(Subject::Graph(c6.clone()), qc_fails),
        Subject::Graph(c6)
    );

    // as a graph, C8 cannot shrink: every vertex deletion gives a path
    let j0p_fails = |s: &Subject| match s {
        Subject::Graph(h) => !h.interval_function().unwrap().satisfies(AxiomId::J0p),
        Subject::Transit(r) => !r.satisfies(AxiomId::J0p),
        _ => false,
    };
    let c8 = make_cycle(8).unwrap();
    assert_eq!(
        minimize_with(Subject::Graph(c8.clone()), j0p_fails),
        Subject::Graph(c8)
    );
    // as a bare table it can, since restrictions need not be intervals
    let Subject::Transit(min) =
        minimize_with(Subject::Transit(load_fixture("e1").unwrap()), j0p_fails)
    else {
        panic!("transit subject expected")
    };
    assert_eq!(min.n(), 4);
    assert!(!min.satisfies(AxiomId::J0p));
}
