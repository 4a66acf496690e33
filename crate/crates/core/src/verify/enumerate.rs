//! Exhaustive and sampled universes of graphs and transit functions.

use std::ops::Range;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::transit::{AxiomId, TransitFunction};
use crate::vertex_set::VertexSet;

/// Largest `n` for exhaustive labelled graph enumeration.
pub const MAX_ENUMERATED_GRAPH: usize = 7;
/// Largest `n` for exhaustive transit-function enumeration.
pub const MAX_ENUMERATED_TRANSIT: usize = 4;
/// Largest `n` for sampled transit functions.
pub const MAX_SAMPLED_TRANSIT: usize = 6;

/// Number of labelled candidates (edge masks) on `n` vertices.
pub fn graph_mask_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Every connected labelled graph on `n` vertices whose upper-triangle mask
/// lies in `masks`, in increasing mask order.
pub fn connected_graphs_in(n: usize, masks: Range<u64>) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > MAX_ENUMERATED_GRAPH {
        return Err(Error::Capacity(format!(
            "exhaustive enumeration supports 1 <= n <= {MAX_ENUMERATED_GRAPH}, got {n}"
        )));
    }
    let end = masks.end.min(graph_mask_count(n));
    Ok((masks.start..end)
        .map(move |m| Graph::from_upper_triangle_mask(n, m))
        .filter(Graph::is_connected))
}

/// Every connected labelled graph on `n` vertices, each exactly once.
pub fn enumerate_connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    connected_graphs_in(n, 0..u64::MAX)
}

/// Symmetric functions satisfying t1, t2 and t3: each unordered pair
/// `{u,v}` independently maps to a superset of itself.
fn symmetric_from_choices(
    n: usize,
    mut choice: impl FnMut(usize, usize) -> VertexSet,
) -> TransitFunction {
    let mut r = TransitFunction::trivial(n).expect("small n");
    for u in 0..n {
        for v in u + 1..n {
            r.set_symmetric(u, v, VertexSet::pair(u, v) | choice(u, v));
        }
    }
    r
}

/// Size of the symmetric t1/t2/t3 universe on `n` elements.
pub fn transit_universe_size(n: usize) -> u64 {
    let pairs = n * n.saturating_sub(1) / 2;
    1u64 << (pairs * n.saturating_sub(2))
}

/// Every symmetric t1/t2/t3 transit function on `n <= 4` elements that
/// also satisfies `constraints`, exactly once.
pub fn enumerate_transit_functions(
    n: usize,
    constraints: &[AxiomId],
) -> Result<impl Iterator<Item = TransitFunction>> {
    if n > MAX_ENUMERATED_TRANSIT {
        return Err(Error::Capacity(format!(
            "exhaustive transit enumeration supports n <= {MAX_ENUMERATED_TRANSIT}, got {n}"
        )));
    }
    let constraints = constraints.to_vec();
    let free_bits = n.saturating_sub(2);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok((0..transit_universe_size(n))
        .map(move |code| {
            symmetric_from_choices(n, |u, v| {
                let i = pairs.iter().position(|&p| p == (u, v)).unwrap();
                let bits = (code >> (i * free_bits)) & ((1 << free_bits) - 1);
                let others: Vec<usize> = (0..n).filter(|&w| w != u && w != v).collect();
                (0..free_bits)
                    .filter(|&b| bits >> b & 1 == 1)
                    .map(|b| others[b])
                    .collect()
            })
        })
        .filter(move |r| constraints.iter().all(|&a| r.satisfies(a))))
}

/// Deterministic pseudo-random symmetric t1/t2/t3 functions.
///
/// Sample `i` depends only on `(seed, n, i)`, so any index range can be
/// generated independently. Half the samples draw every pair's extra
/// elements at a per-sample density; the other half take the interval
/// function of a random connected graph and perturb up to two pairs,
/// which keeps many samples close to satisfying the geometric axioms.
#[derive(Clone, Debug)]
pub struct TransitSampler {
    n: usize,
    seed: u64,
}

impl TransitSampler {
    pub fn new(n: usize, seed: u64) -> Result<Self> {
        if !(2..=MAX_SAMPLED_TRANSIT).contains(&n) {
            return Err(Error::Capacity(format!(
                "sampling supports 2 <= n <= {MAX_SAMPLED_TRANSIT}, got {n}"
            )));
        }
        Ok(TransitSampler { n, seed })
    }

    pub fn sample(&self, index: u64) -> TransitFunction {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ (self.n as u64) << 56);
        rng.set_stream(index);
        let n = self.n;
        if rng.gen_bool(0.5) {
            let density: f64 = rng.gen();
            symmetric_from_choices(n, |u, v| {
                (0..n)
                    .filter(|&w| w != u && w != v && rng.gen_bool(density))
                    .collect()
            })
        } else {
            let g = random_connected_graph(&mut rng, n);
            let mut r = g.distances().interval_function();
            let flips = rng.gen_range(0..=2);
            for _ in 0..flips {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                let w = rng.gen_range(0..n);
                if u == v || w == u || w == v {
                    continue;
                }
                let s = r.get(u, v);
                let s = if s.contains(w) {
                    s.without(w)
                } else {
                    s.with(w)
                };
                r.set_symmetric(u, v, s);
            }
            r
        }
    }

    pub fn samples(&self, range: Range<u64>) -> impl Iterator<Item = TransitFunction> + '_ {
        range.map(move |i| self.sample(i))
    }
}

/// Random connected graph: a random spanning tree plus random extra edges.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("small n");
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        g.add_edge(order[i], parent).unwrap();
    }
    let density: f64 = rng.gen();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density * 0.6) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}
