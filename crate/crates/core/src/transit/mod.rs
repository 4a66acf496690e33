//! Arbitrary finite transit functions `R: V x V -> 2^V`.
//!
//! The table is stored for every ordered pair, so functions violating
//! symmetry or the diagonal rule are representable; those properties are
//! checked as axioms rather than enforced.

mod axioms;
mod text;

pub use axioms::{check_axiom, check_axioms, holds_at, AxiomId, AxiomReport};
pub use text::{emit_transit, parse_transit};

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone)]
pub struct TransitFunction {
    n: usize,
    table: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl TransitFunction {
    /// The "default" function: `R(u,v) = {u,v}` off the diagonal and
    /// `R(u,u) = {u}`. Its underlying graph is complete.
    pub fn trivial(n: usize) -> Result<Self> {
        check_size(n)?;
        let mut table = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                table.push(VertexSet::pair(u, v));
            }
        }
        Ok(TransitFunction {
            n,
            table,
            labels: None,
        })
    }

    /// Builds a function from a row-major table of `n * n` entries,
    /// entry `u * n + v` being `R(u,v)`.
    pub fn from_table(n: usize, table: Vec<VertexSet>) -> Result<Self> {
        check_size(n)?;
        if table.len() != n * n {
            return Err(Error::Argument(format!(
                "table has {} entries, expected {}",
                table.len(),
                n * n
            )));
        }
        let ground = VertexSet::full(n);
        if let Some(i) = table.iter().position(|s| !s.is_subset(ground)) {
            return Err(Error::Argument(format!(
                "R({},{}) = {} is not a subset of the ground set",
                i / n,
                i % n,
                table[i]
            )));
        }
        Ok(TransitFunction {
            n,
            table,
            labels: None,
        })
    }

    /// Attaches display names for the ground-set elements.
    pub fn with_labels<S: Into<String>>(
        mut self,
        labels: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.n {
            return Err(Error::Argument(format!(
                "{} labels for a ground set of size {}",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> VertexSet {
        self.table[u * self.n + v]
    }

    /// Sets `R(u,v)` for this one order only.
    pub fn set(&mut self, u: usize, v: usize, s: VertexSet) {
        assert!(u < self.n && v < self.n, "pair ({u},{v}) out of range");
        assert!(
            s.is_subset(VertexSet::full(self.n)),
            "{s} outside the ground set"
        );
        self.table[u * self.n + v] = s;
    }

    /// Sets `R(u,v)` and `R(v,u)`.
    pub fn set_symmetric(&mut self, u: usize, v: usize, s: VertexSet) {
        self.set(u, v, s);
        self.set(v, u, s);
    }

    pub fn table(&self) -> &[VertexSet] {
        &self.table
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element: its label if any, else its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn format_set(&self, s: VertexSet) -> String {
        let parts: Vec<String> = s.iter().map(|v| self.label(v)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// `R(u,v) = {u,v}`, read literally (so `u == v` means `R(u,u) = {u}`).
    #[inline]
    pub(crate) fn is_pair(&self, u: usize, v: usize) -> bool {
        self.get(u, v) == VertexSet::pair(u, v)
    }

    /// The graph `G_R`: `uv` is an edge iff `R(u,v) = {u,v}` and
    /// `R(v,u) = {u,v}`.
    pub fn underlying_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("size checked at construction");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.is_pair(u, v) && self.is_pair(v, u) {
                    g.add_edge(u, v).expect("distinct in-range vertices");
                }
            }
        }
        g
    }

    /// True iff `R` is the interval function of `G_R`. Errors when `G_R`
    /// is disconnected.
    pub fn equals_interval_function(&self) -> Result<bool> {
        let g = self.underlying_graph();
        if !g.is_connected() {
            let mut comps = Vec::new();
            let mut seen = VertexSet::EMPTY;
            for v in 0..self.n {
                if !seen.contains(v) {
                    let c = g.component(v);
                    seen |= c;
                    comps.push(self.format_set(c));
                }
            }
            return Err(Error::Domain(format!(
                "underlying graph is disconnected; components {}",
                comps.join(" ")
            )));
        }
        let d = g.distances();
        for u in 0..self.n {
            for v in 0..self.n {
                if d.interval(u, v) != Some(self.get(u, v)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity(format!(
            "{n} elements exceeds the {MAX_VERTICES}-element limit"
        )))
    } else {
        Ok(())
    }
}

impl PartialEq for TransitFunction {
    /// Labels are presentation only and do not take part in equality.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl Eq for TransitFunction {}

impl fmt::Debug for TransitFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "TransitFunction(n = {})", self.n)?;
        for u in 0..self.n {
            for v in 0..self.n {
                let s = self.get(u, v);
                if s != VertexSet::pair(u, v) {
                    writeln!(
                        f,
                        "  R({},{}) = {}",
                        self.label(u),
                        self.label(v),
                        self.format_set(s)
                    )?;
                }
            }
        }
        Ok(())
    }
}
