//! Gates, gated sets and gated amalgams.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formats::{emit_graph6, parse_graph6};
use crate::graph::{DistanceMatrix, Graph};
use crate::vertex_set::VertexSet;

fn check_set(g: &Graph, s: VertexSet) -> Result<()> {
    if s.is_empty() {
        return Err(Error::Argument("the set must be nonempty".into()));
    }
    if !s.is_subset(g.vertices()) {
        return Err(Error::Argument(format!(
            "{s} is not a subset of 0..{}",
            g.n()
        )));
    }
    Ok(())
}

fn connected_distances(g: &Graph) -> Result<DistanceMatrix> {
    if !g.is_connected() {
        return Err(Error::Domain("graph is disconnected".into()));
    }
    Ok(g.distances())
}

/// The gate of `y` in `s` with precomputed distances.
///
/// # Panics
/// If two distinct gates exist, which is impossible for a metric.
pub fn gate_in(d: &DistanceMatrix, y: usize, s: VertexSet) -> Option<usize> {
    let mut cand = s;
    for w in s {
        cand &= d.interval(y, w).unwrap_or_default();
        if cand.is_empty() {
            return None;
        }
    }
    assert!(cand.len() <= 1, "vertex {y} has two gates {cand} in {s}");
    cand.first()
}

/// The unique `x` in `s` lying in `I(y,w)` for every `w` in `s`, if any.
pub fn gate(g: &Graph, y: usize, s: VertexSet) -> Result<Option<usize>> {
    check_set(g, s)?;
    if y >= g.n() {
        return Err(Error::Argument(format!("vertex {y} out of range")));
    }
    Ok(gate_in(&connected_distances(g)?, y, s))
}

/// True iff every vertex outside `s` has a gate in `s`.
pub fn is_gated(g: &Graph, s: VertexSet) -> Result<bool> {
    check_set(g, s)?;
    let d = connected_distances(g)?;
    Ok(is_gated_in(&d, g.vertices(), s))
}

pub(crate) fn is_gated_in(d: &DistanceMatrix, all: VertexSet, s: VertexSet) -> bool {
    (all - s).iter().all(|y| gate_in(d, y, s).is_some())
}

/// Two graphs and an isomorphism between induced subgraphs on `S1 ⊆ V(g1)`
/// and `S2 ⊆ V(g2)`, given as pairs `(a, b)` with `a ∈ S1`, `b ∈ S2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmalgamSpec {
    pub g1: Graph,
    pub g2: Graph,
    pub iso: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct AmalgamJson {
    g1: String,
    g2: String,
    iso: Vec<(usize, usize)>,
}

impl AmalgamSpec {
    pub fn new(g1: Graph, g2: Graph, iso: Vec<(usize, usize)>) -> Self {
        AmalgamSpec { g1, g2, iso }
    }

    /// Parses `{"g1": "<graph6>", "g2": "<graph6>", "iso": [[a, b], ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let j: AmalgamJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            offset: 0,
            message: format!("amalgam spec: {e}"),
        })?;
        Ok(AmalgamSpec {
            g1: parse_graph6(&j.g1)?,
            g2: parse_graph6(&j.g2)?,
            iso: j.iso,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&AmalgamJson {
            g1: emit_graph6(&self.g1),
            g2: emit_graph6(&self.g2),
            iso: self.iso.clone(),
        })
        .expect("plain data serializes")
    }

    pub fn s1(&self) -> VertexSet {
        self.iso.iter().map(|&(a, _)| a).collect()
    }

    pub fn s2(&self) -> VertexSet {
        self.iso.iter().map(|&(_, b)| b).collect()
    }

    /// Checks that `iso` is a bijection between in-range vertex sets that
    /// preserves adjacency.
    fn check_isomorphism(&self) -> Result<()> {
        if self.iso.is_empty() {
            return Err(Error::Amalgam("the identified subgraph is empty".into()));
        }
        for &(a, b) in &self.iso {
            if a >= self.g1.n() || b >= self.g2.n() {
                return Err(Error::Amalgam(format!("pair ({a},{b}) out of range")));
            }
        }
        if self.s1().len() != self.iso.len() || self.s2().len() != self.iso.len() {
            return Err(Error::Amalgam("iso is not a bijection".into()));
        }
        for (i, &(a, b)) in self.iso.iter().enumerate() {
            for &(c, d) in &self.iso[i + 1..] {
                if self.g1.has_edge(a, c) != self.g2.has_edge(b, d) {
                    return Err(Error::Amalgam(format!(
                        "iso is not an isomorphism: ({a},{c}) in g1 vs ({b},{d}) in g2"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Full validation: connected inputs, isomorphism, and both sides gated.
    pub fn validate(&self) -> Result<()> {
        self.check_isomorphism()?;
        for (name, g, s) in [("g1", &self.g1, self.s1()), ("g2", &self.g2, self.s2())] {
            if !g.is_connected() {
                return Err(Error::Amalgam(format!("{name} is disconnected")));
            }
            if !is_gated_in(&g.distances(), g.vertices(), s) {
                return Err(Error::Amalgam(format!("{s} is not gated in {name}")));
            }
        }
        Ok(())
    }
}

/// Glues `g2` onto `g1` along `iso` without checking gatedness. `g1` keeps
/// its labels; the unidentified vertices of `g2` follow in ascending order.
pub fn glue_unchecked(spec: &AmalgamSpec) -> Result<Graph> {
    spec.check_isomorphism()?;
    let (n1, n2) = (spec.g1.n(), spec.g2.n());
    let s2 = spec.s2();
    let extra = n2 - s2.len();
    let mut map = vec![usize::MAX; n2];
    for &(a, b) in &spec.iso {
        map[b] = a;
    }
    for (i, b) in (spec.g2.vertices() - s2).iter().enumerate() {
        map[b] = n1 + i;
    }
    let mut g = Graph::empty(n1 + extra)?;
    for (u, v) in spec.g1.edges() {
        g.add_edge(u, v)?;
    }
    for (u, v) in spec.g2.edges() {
        g.add_edge(map[u], map[v])?;
    }
    Ok(g)
}

/// The gated amalgam of `spec.g1` and `spec.g2`.
pub fn gated_amalgam(spec: &AmalgamSpec) -> Result<Graph> {
    spec.validate()?;
    glue_unchecked(spec)
}
