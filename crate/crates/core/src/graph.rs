//! Finite simple graphs on at most 64 vertices, with hop distances and the
//! geodesic interval function.

use std::fmt;

use crate::error::{Error, Result};
use crate::transit::TransitFunction;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A finite simple undirected graph over vertices `0..n`.
///
/// Adjacency is stored as one [`VertexSet`] per vertex. The type maintains
/// symmetry and the absence of self-loops.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity(format!(
                "{n} vertices requested, at most {MAX_VERTICES} supported"
            )));
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from an edge bitmask over the upper triangle, pairs
    /// ordered `(0,1), (0,2), (1,2), (0,3), ..` (column-major, as in graph6).
    pub fn from_upper_triangle_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n * n.saturating_sub(1) / 2 <= 64);
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
                bit += 1;
            }
        }
        Graph { adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::Argument(format!(
                "edge ({u}, {v}) out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::Argument(format!("self-loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n() && v < self.n() {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
        }
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            (self.adj[u] - VertexSet::full(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in
    /// ascending order of the original labels.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let old: Vec<usize> = keep.iter().collect();
        let mut new_index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in old.iter().enumerate() {
            new_index[v] = i;
        }
        let adj = old
            .iter()
            .map(|&v| (self.adj[v] & keep).iter().map(|w| new_index[w]).collect())
            .collect();
        Graph { adj }
    }

    /// The graph with vertex `v` deleted (labels above `v` shift down).
    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertices().without(v))
    }

    /// Vertices reachable from `start`.
    pub fn component(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = next - seen;
            seen |= frontier;
        }
        seen
    }

    /// True iff a search from vertex 0 reaches every vertex. The empty graph
    /// counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.component(0) == self.vertices()
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.adj[v] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        stack.push(w);
                    } else if side[w] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn distances(&self) -> DistanceMatrix {
        DistanceMatrix::new(self)
    }

    /// `I(u, v)`: the vertices lying on some shortest `u,v`-path.
    pub fn interval(&self, u: usize, v: usize) -> Result<VertexSet> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.distances().interval(u, v).ok_or_else(|| {
            Error::Domain(format!("vertices {u} and {v} lie in different components"))
        })
    }

    /// The full interval function `I_G` as a transit function.
    pub fn interval_function(&self) -> Result<TransitFunction> {
        if !self.is_connected() {
            return Err(Error::Domain(
                "interval function requires a connected graph".into(),
            ));
        }
        Ok(self.distances().interval_function())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::Argument(format!(
                "vertex {v} out of range for {} vertices",
                self.n()
            )))
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

// ---------------------------------------------------------------------------
// Constructors

/// Cycle `C_k` with vertices `0..k` in cyclic order. Requires `k >= 3`.
pub fn make_cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::Argument(format!("cycle needs k >= 3, got {k}")));
    }
    let mut g = Graph::empty(k)?;
    for i in 0..k {
        g.add_edge(i, (i + 1) % k)?;
    }
    Ok(g)
}

/// Path on `k` vertices `0 - 1 - .. - (k-1)`. Requires `k >= 1`.
pub fn make_path(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::Argument("path needs k >= 1".into()));
    }
    let mut g = Graph::empty(k)?;
    for i in 1..k {
        g.add_edge(i - 1, i)?;
    }
    Ok(g)
}

/// Complete graph `K_k`. Requires `k >= 1`.
pub fn make_complete(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::Argument("complete graph needs k >= 1".into()));
    }
    let mut g = Graph::empty(k)?;
    for j in 1..k {
        for i in 0..j {
            g.add_edge(i, j)?;
        }
    }
    Ok(g)
}

/// Wheel `W_k`: rim `0..k` in cyclic order, hub `k`. Requires `k >= 4`.
pub fn make_wheel(k: usize) -> Result<Graph> {
    if k < 4 {
        return Err(Error::Argument(format!("wheel needs k >= 4, got {k}")));
    }
    let mut g = Graph::empty(k + 1)?;
    for i in 0..k {
        g.add_edge(i, (i + 1) % k)?;
        g.add_edge(i, k)?;
    }
    Ok(g)
}

/// Cartesian product `G □ H`; vertex `(a, b)` gets index `a * h.n() + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.n() * h.n();
    if n > MAX_VERTICES {
        return Err(Error::Capacity(format!(
            "product has {n} vertices, at most {MAX_VERTICES} supported"
        )));
    }
    let idx = |a: usize, b: usize| a * h.n() + b;
    let mut p = Graph::empty(n)?;
    for a in 0..g.n() {
        for (b, b2) in h.edges() {
            p.add_edge(idx(a, b), idx(a, b2))?;
        }
    }
    for (a, a2) in g.edges() {
        for b in 0..h.n() {
            p.add_edge(idx(a, b), idx(a2, b))?;
        }
    }
    Ok(p)
}

/// The prism `K3 □ K2`.
pub fn make_prism() -> Graph {
    cartesian_product(&make_complete(3).unwrap(), &make_complete(2).unwrap()).unwrap()
}

// ---------------------------------------------------------------------------
// Distances

/// All-pairs hop distances.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    /// One breadth-first search per source, frontier-at-a-time on bitsets.
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut d = vec![Self::UNREACHABLE; n * n];
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            let mut seen = VertexSet::singleton(s);
            let mut frontier = seen;
            let mut level = 0;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    row[v] = level;
                    next |= g.neighbors(v);
                }
                frontier = next - seen;
                seen |= frontier;
                level += 1;
            }
        }
        DistanceMatrix { n, d }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Raw distance, [`Self::UNREACHABLE`] for different components.
    #[inline]
    pub fn raw(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.raw(u, v) {
            Self::UNREACHABLE => None,
            d => Some(d),
        }
    }

    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for &x in &self.d {
            if x == Self::UNREACHABLE {
                return None;
            }
            best = best.max(x);
        }
        Some(best)
    }

    /// Vertices at distance exactly `k` from `u`.
    pub fn sphere(&self, u: usize, k: u32) -> VertexSet {
        (0..self.n).filter(|&w| self.raw(u, w) == k).collect()
    }

    /// `{w : d(u,w) + d(w,v) = d(u,v)}`, or `None` if `u` and `v` are in
    /// different components.
    pub fn interval(&self, u: usize, v: usize) -> Option<VertexSet> {
        let duv = self.get(u, v)?;
        let mut set = VertexSet::EMPTY;
        for w in 0..self.n {
            let (a, b) = (self.raw(u, w), self.raw(w, v));
            if a != Self::UNREACHABLE && b != Self::UNREACHABLE && a + b == duv {
                set.insert(w);
            }
        }
        Some(set)
    }

    /// Interval table over all ordered pairs. Only meaningful for connected
    /// graphs; unreachable pairs get the empty set.
    pub fn interval_function(&self) -> TransitFunction {
        let n = self.n;
        let mut table = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                table.push(self.interval(u, v).unwrap_or_default());
            }
        }
        TransitFunction::from_table(n, table).expect("table is total")
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DistanceMatrix(n={})", self.n)?;
        for u in 0..self.n {
            for v in 0..self.n {
                match self.get(u, v) {
                    Some(d) => write!(f, "{d:>3}")?,
                    None => write!(f, "  -")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
