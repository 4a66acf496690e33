//! The fixed corpus of gated amalgams used for the closure campaign.

use std::collections::BTreeSet;

use crate::gated::{is_gated_in, AmalgamSpec};
use crate::graph::{make_complete, make_cycle, make_wheel, Graph};
use crate::pattern::for_each_subset;
use crate::verify::enumerate::enumerate_connected_graphs;
use crate::verify::facts::GraphFacts;
use crate::vertex_set::VertexSet;

/// Largest identified subgraph in the corpus.
pub const MAX_SHARED: usize = 3;

/// Smallest upper-triangle edge mask over all relabelings: a canonical
/// form for isomorphism classes of small graphs.
pub fn canonical_mask(g: &Graph) -> u64 {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut mask = 0u64;
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if g.has_edge(p[i], p[j]) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(mask);
    });
    best
}

fn permute(items: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// One representative per isomorphism class of connected bridged graphs
/// on `3..=max_n` vertices.
pub fn bridged_representatives(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        let mut seen = BTreeSet::new();
        for g in enumerate_connected_graphs(n).expect("small n") {
            if GraphFacts::new(&g).bridged() && seen.insert(canonical_mask(&g)) {
                out.push(g);
            }
        }
    }
    out
}

/// The base graphs: `K2..K5`, `W4`, `W5`, `C4` and every bridged graph up
/// to isomorphism on at most `bridged_max_n` vertices, without repeats.
pub fn base_graphs(bridged_max_n: usize) -> Vec<Graph> {
    let mut out: Vec<Graph> = (2..=5).map(|k| make_complete(k).unwrap()).collect();
    out.push(make_wheel(4).unwrap());
    out.push(make_wheel(5).unwrap());
    out.push(make_cycle(4).unwrap());
    let mut seen: BTreeSet<(usize, u64)> = out.iter().map(|g| (g.n(), canonical_mask(g))).collect();
    for g in bridged_representatives(bridged_max_n) {
        if seen.insert((g.n(), canonical_mask(&g))) {
            out.push(g);
        }
    }
    out
}

/// Gated vertex sets of size `1..=MAX_SHARED`, in subset order.
fn gated_sets(g: &Graph) -> Vec<VertexSet> {
    let d = g.distances();
    let mut out = Vec::new();
    for k in 1..=MAX_SHARED.min(g.n()) {
        for_each_subset(g.n(), k, |s| {
            if is_gated_in(&d, g.vertices(), s) {
                out.push(s);
            }
            true
        });
    }
    out
}

/// Every valid amalgam spec over unordered pairs of diamond-weakly modular
/// base graphs, all gated identified subgraphs of at most three vertices
/// and all isomorphisms between them.
pub fn amalgam_corpus(bridged_max_n: usize) -> Vec<AmalgamSpec> {
    let bases: Vec<Graph> = base_graphs(bridged_max_n)
        .into_iter()
        .filter(|g| GraphFacts::new(g).dwm())
        .collect();
    let gated: Vec<Vec<VertexSet>> = bases.iter().map(gated_sets).collect();
    let mut out = Vec::new();
    for i in 0..bases.len() {
        for j in i..bases.len() {
            for &s1 in &gated[i] {
                for &s2 in gated[j].iter().filter(|s| s.len() == s1.len()) {
                    let a = s1.to_vec();
                    let mut b = s2.to_vec();
                    permute(&mut b, 0, &mut |p| {
                        let iso: Vec<(usize, usize)> =
                            a.iter().copied().zip(p.iter().copied()).collect();
                        let spec = AmalgamSpec::new(bases[i].clone(), bases[j].clone(), iso);
                        if spec.validate().is_ok() {
                            out.push(spec);
                        }
                    });
                }
            }
        }
    }
    out
}
