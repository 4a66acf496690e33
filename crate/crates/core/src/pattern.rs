//! Induced occurrences of small fixed patterns.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// The fixed pattern catalogue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Pattern {
    C4,
    C5,
    /// `C5` plus one chord, i.e. a square with a triangular roof.
    House,
    /// `W4` with one spoke removed.
    W4Minus,
    /// `K4` minus an edge.
    Diamond,
}

impl Pattern {
    pub const ALL: [Pattern; 5] = [
        Pattern::C4,
        Pattern::C5,
        Pattern::House,
        Pattern::W4Minus,
        Pattern::Diamond,
    ];

    /// The patterns whose occurrences must be dominated in a
    /// diamond-weakly modular graph.
    pub const FIVE_VERTEX: [Pattern; 3] = [Pattern::C5, Pattern::House, Pattern::W4Minus];

    pub fn name(self) -> &'static str {
        match self {
            Pattern::C4 => "C4",
            Pattern::C5 => "C5",
            Pattern::House => "house",
            Pattern::W4Minus => "W4-",
            Pattern::Diamond => "diamond",
        }
    }

    /// A representative labelled copy of the pattern.
    pub fn graph(self) -> Graph {
        let edges: &[(usize, usize)] = match self {
            Pattern::C4 => &[(0, 1), (1, 2), (2, 3), (3, 0)],
            Pattern::C5 => &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
            Pattern::House => &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)],
            // rim 0-1-2-3, hub 4, spoke 0-4 removed
            Pattern::W4Minus => &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (2, 4), (3, 4)],
            Pattern::Diamond => &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
        };
        let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap();
        Graph::from_edges(n, edges).expect("static pattern")
    }

    pub fn order(self) -> usize {
        match self {
            Pattern::C4 | Pattern::Diamond => 4,
            _ => 5,
        }
    }

    /// Membership table over all edge masks on `order()` vertices: entry
    /// `m` is true iff the graph with upper-triangle mask `m` is a
    /// relabelling of the pattern.
    fn mask_table(self) -> Vec<bool> {
        let k = self.order();
        let g = self.graph();
        let mut table = vec![false; 1 << (k * (k - 1) / 2)];
        let mut perm: Vec<usize> = (0..k).collect();
        permutations(&mut perm, 0, &mut |p| {
            let mut mask = 0usize;
            let mut bit = 0;
            for j in 1..k {
                for i in 0..j {
                    if g.has_edge(p[i], p[j]) {
                        mask |= 1 << bit;
                    }
                    bit += 1;
                }
            }
            table[mask] = true;
        });
        table
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "c4" => Ok(Pattern::C4),
            "c5" => Ok(Pattern::C5),
            "house" => Ok(Pattern::House),
            "w4-" | "w4_minus" | "w4minus" => Ok(Pattern::W4Minus),
            "diamond" => Ok(Pattern::Diamond),
            _ => Err(Error::Argument(format!("unknown pattern `{s}`"))),
        }
    }
}

fn permutations(items: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Calls `f` on every `k`-subset of `0..n` in increasing bitmask order,
/// stopping early when `f` returns `false`.
pub(crate) fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(VertexSet) -> bool) {
    if k > n {
        return;
    }
    if k == 0 {
        f(VertexSet::EMPTY);
        return;
    }
    let limit = if n == 64 { u64::MAX } else { 1u64 << n };
    let mut s: u64 = (1u64 << k) - 1;
    loop {
        if !f(VertexSet::from_bits(s)) {
            return;
        }
        // Gosper's hack
        let c = s & s.wrapping_neg();
        let r = s.wrapping_add(c);
        if r == 0 || (n < 64 && r >= limit) {
            return;
        }
        s = (((r ^ s) >> 2) / c) | r;
        if n < 64 && s >= limit {
            return;
        }
    }
}

fn induced_mask(g: &Graph, subset: VertexSet) -> usize {
    let vs: Vec<usize> = subset.iter().collect();
    let mut mask = 0usize;
    let mut bit = 0;
    for j in 1..vs.len() {
        for i in 0..j {
            if g.has_edge(vs[i], vs[j]) {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

/// Calls `f` on every vertex set inducing `pattern`; stops when `f` returns
/// `false`.
pub fn for_each_induced(g: &Graph, pattern: Pattern, mut f: impl FnMut(VertexSet) -> bool) {
    let table = pattern.mask_table();
    for_each_subset(g.n(), pattern.order(), |s| {
        if table[induced_mask(g, s)] {
            f(s)
        } else {
            true
        }
    });
}

/// Some vertex set inducing `pattern`, or `None`. Exhaustive over subsets.
pub fn has_induced(g: &Graph, pattern: Pattern) -> Option<VertexSet> {
    let mut found = None;
    for_each_induced(g, pattern, |s| {
        found = Some(s);
        false
    });
    found
}

/// An induced `C5`, house or `W4-` with no outside vertex adjacent to all
/// five of its vertices.
pub fn undominated_five_vertex_pattern(g: &Graph) -> Option<(Pattern, VertexSet)> {
    for p in Pattern::FIVE_VERTEX {
        let mut bad = None;
        for_each_induced(g, p, |s| {
            let dominated = (g.vertices() - s)
                .iter()
                .any(|w| s.is_subset(g.neighbors(w)));
            if !dominated {
                bad = Some((p, s));
            }
            dominated
        });
        if bad.is_some() {
            return bad;
        }
    }
    None
}

/// True iff every induced `C5`, house and `W4-` has a vertex adjacent to
/// all five of its vertices.
pub fn dominated_five_cycle_check(g: &Graph) -> bool {
    undominated_five_vertex_pattern(g).is_none()
}
