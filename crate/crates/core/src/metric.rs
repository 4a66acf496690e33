//! Metric conditions (triangle, quadrangle, triangle-diamond) and the
//! graph classes built from them.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formats::emit_graph6;
use crate::graph::{DistanceMatrix, Graph};
use crate::pattern::{has_induced, Pattern};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Condition {
    TC,
    QC,
    TDC,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A failing instance of a metric condition.
///
/// `base` is the edge `[v, w]` for TC and TDC and `[v, w, y]` for QC.
/// For TDC failures caused by an uncovered geodesic-neighbour pair, `pair`
/// is `(x, y)` with `x ~ v` and `y ~ w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionWitness {
    pub kind: Condition,
    pub apex: usize,
    pub base: Vec<usize>,
    pub pair: Option<(usize, usize)>,
    pub missing: String,
}

impl fmt::Display for ConditionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at u={}, base {:?}",
            self.kind, self.apex, self.base
        )?;
        if let Some((x, y)) = self.pair {
            write!(f, ", pair ({x},{y})")?;
        }
        write!(f, ": {}", self.missing)
    }
}

/// How the geodesic neighbours `x`, `y` in the triangle-diamond condition
/// are quantified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TdcReading {
    /// Every pair `(x, y)` needs some `z` adjacent to both (or equal to
    /// one of them).
    #[default]
    Joint,
    /// Every `x` needs some `z` in `N[x]`, and every `y` some `z` in `N[y]`,
    /// not necessarily the same `z`.
    PerNeighbor,
}

/// Distances plus per-source level sets.
pub(crate) struct Metric<'g> {
    pub g: &'g Graph,
    pub d: DistanceMatrix,
    /// `levels[u][k]` = vertices at distance `k` from `u`.
    levels: Vec<Vec<VertexSet>>,
}

impl<'g> Metric<'g> {
    pub fn new(g: &'g Graph) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::Domain("graph is disconnected".into()));
        }
        let d = g.distances();
        let n = g.n();
        let levels = (0..n)
            .map(|u| {
                let mut ls = Vec::new();
                for w in 0..n {
                    let k = d.raw(u, w) as usize;
                    if ls.len() <= k {
                        ls.resize(k + 1, VertexSet::EMPTY);
                    }
                    ls[k].insert(w);
                }
                ls
            })
            .collect();
        Ok(Metric { g, d, levels })
    }

    #[inline]
    fn dist(&self, u: usize, v: usize) -> usize {
        self.d.raw(u, v) as usize
    }

    #[inline]
    fn level(&self, u: usize, k: usize) -> VertexSet {
        self.levels[u].get(k).copied().unwrap_or_default()
    }

    /// Calls `f(u, v, w, k)` for each apex `u` and edge `v < w` with
    /// `d(u,v) = d(u,w) = k >= 2`, stopping at the first `Some`.
    fn triangle_hyp<T>(
        &self,
        mut f: impl FnMut(usize, usize, usize, usize) -> Option<T>,
    ) -> Option<T> {
        let n = self.g.n();
        for u in 0..n {
            for (v, w) in self.g.edges() {
                let k = self.dist(u, v);
                if k >= 2 && k == self.dist(u, w) {
                    if let Some(t) = f(u, v, w, k) {
                        return Some(t);
                    }
                }
            }
        }
        None
    }

    pub fn tc(&self) -> Option<ConditionWitness> {
        self.triangle_hyp(|u, v, w, k| {
            let z = self.g.neighbors(v) & self.g.neighbors(w) & self.level(u, k - 1);
            z.is_empty().then(|| ConditionWitness {
                kind: Condition::TC,
                apex: u,
                base: vec![v, w],
                pair: None,
                missing: format!(
                    "no common neighbour of {v},{w} at distance {} from {u}",
                    k - 1
                ),
            })
        })
    }

    pub fn qc(&self) -> Option<ConditionWitness> {
        let n = self.g.n();
        for u in 0..n {
            for y in 0..n {
                let ky = self.dist(u, y);
                if ky < 3 {
                    continue;
                }
                let k = ky - 1;
                let below = self.g.neighbors(y) & self.level(u, k);
                for v in below {
                    for w in below - VertexSet::full(v + 1) {
                        if self.g.has_edge(v, w) {
                            continue;
                        }
                        // d(v,w) = 2 via y
                        let z = self.g.neighbors(v) & self.g.neighbors(w) & self.level(u, k - 1);
                        if z.is_empty() {
                            return Some(ConditionWitness {
                                kind: Condition::QC,
                                apex: u,
                                base: vec![v, w, y],
                                pair: None,
                                missing: format!(
                                    "no common neighbour of {v},{w} at distance {} from {u}",
                                    k - 1
                                ),
                            });
                        }
                    }
                }
            }
        }
        None
    }

    pub fn tdc(&self, reading: TdcReading) -> Option<ConditionWitness> {
        self.triangle_hyp(|u, v, w, k| {
            let below = self.level(u, k - 1);
            let (nv, nw) = (self.g.neighbors(v), self.g.neighbors(w));
            let zs = nv & nw & below;
            let witness = |pair, missing| ConditionWitness {
                kind: Condition::TDC,
                apex: u,
                base: vec![v, w],
                pair,
                missing,
            };
            if zs.is_empty() {
                return Some(witness(
                    None,
                    format!(
                        "no common neighbour of {v},{w} at distance {} from {u}",
                        k - 1
                    ),
                ));
            }
            let closed = |a: usize| self.g.neighbors(a).with(a);
            match reading {
                TdcReading::Joint => {
                    for x in nv & below {
                        for y in nw & below {
                            if (zs & closed(x) & closed(y)).is_empty() {
                                return Some(witness(
                                    Some((x, y)),
                                    format!("no z in {zs} adjacent to both {x} and {y}"),
                                ));
                            }
                        }
                    }
                }
                TdcReading::PerNeighbor => {
                    for x in nv & below {
                        if !zs.intersects(closed(x)) {
                            return Some(witness(None, format!("no z in {zs} adjacent to {x}")));
                        }
                    }
                    for y in nw & below {
                        if !zs.intersects(closed(y)) {
                            return Some(witness(None, format!("no z in {zs} adjacent to {y}")));
                        }
                    }
                }
            }
            None
        })
    }
}

pub fn check_tc(g: &Graph) -> Result<Option<ConditionWitness>> {
    Ok(Metric::new(g)?.tc())
}

pub fn check_qc(g: &Graph) -> Result<Option<ConditionWitness>> {
    Ok(Metric::new(g)?.qc())
}

pub fn check_tdc(g: &Graph) -> Result<Option<ConditionWitness>> {
    check_tdc_with(g, TdcReading::Joint)
}

pub fn check_tdc_with(g: &Graph, reading: TdcReading) -> Result<Option<ConditionWitness>> {
    Ok(Metric::new(g)?.tdc(reading))
}

// ---------------------------------------------------------------------------
// Cycles

/// Calls `f` on every induced cycle of length at least 4, each once, as a
/// vertex sequence starting at its smallest vertex with the second vertex
/// smaller than the last. Stops when `f` returns `false`.
pub fn for_each_induced_cycle(g: &Graph, mut f: impl FnMut(&[usize]) -> bool) {
    let mut path = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        let allowed = g.vertices() - VertexSet::full(s + 1);
        for a in g.neighbors(s) & allowed {
            path.clear();
            path.extend([s, a]);
            if !extend_induced(g, allowed, &mut path, VertexSet::EMPTY, &mut f) {
                return;
            }
        }
    }
}

/// Grows the induced path `path` (starting at its smallest vertex `s`).
/// `blocked` is the union of neighbourhoods of the path vertices strictly
/// between `s` and the last one.
fn extend_induced(
    g: &Graph,
    allowed: VertexSet,
    path: &mut Vec<usize>,
    blocked: VertexSet,
    f: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let s = path[0];
    let last = *path.last().unwrap();
    let on_path: VertexSet = path.iter().collect();
    for c in (g.neighbors(last) & allowed) - on_path - blocked {
        if g.has_edge(c, s) {
            if path.len() >= 3 && path[1] < c {
                path.push(c);
                let keep = f(path);
                path.pop();
                if !keep {
                    return false;
                }
            }
            continue;
        }
        path.push(c);
        let ok = extend_induced(g, allowed, path, blocked | g.neighbors(last), f);
        path.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// Calls `f` on every cycle (not necessarily induced) of length at least 3,
/// each once, in the same canonical form as [`for_each_induced_cycle`].
pub fn for_each_cycle(g: &Graph, mut f: impl FnMut(&[usize]) -> bool) {
    fn go(
        g: &Graph,
        s: usize,
        allowed: VertexSet,
        path: &mut Vec<usize>,
        on: VertexSet,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        let last = *path.last().unwrap();
        for c in g.neighbors(last) & (allowed - on) {
            if path.len() >= 2 && g.has_edge(c, s) && path[1] < c {
                path.push(c);
                let keep = f(path);
                path.pop();
                if !keep {
                    return false;
                }
            }
            path.push(c);
            let ok = go(g, s, allowed, path, on.with(c), f);
            path.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    let mut path = Vec::new();
    for s in 0..g.n() {
        let allowed = g.vertices() - VertexSet::full(s + 1);
        path.clear();
        path.push(s);
        if !go(g, s, allowed, &mut path, VertexSet::singleton(s), &mut f) {
            return;
        }
    }
}

fn cycle_distance(len: usize, i: usize, j: usize) -> usize {
    let d = i.abs_diff(j);
    d.min(len - d)
}

fn is_isometric(d: &DistanceMatrix, cycle: &[usize]) -> bool {
    let len = cycle.len();
    (0..len).all(|i| {
        (i + 1..len).all(|j| d.raw(cycle[i], cycle[j]) as usize == cycle_distance(len, i, j))
    })
}

/// An isometric cycle of length at least 4, or `None` if the graph is
/// bridged.
pub fn is_bridged_by_cycles(g: &Graph) -> Result<Option<Vec<usize>>> {
    if !g.is_connected() {
        return Err(Error::Domain("graph is disconnected".into()));
    }
    let d = g.distances();
    let limit = 2 * d.diameter().unwrap_or(0) as usize + 1;
    let mut found = None;
    for_each_induced_cycle(g, |c| {
        if c.len() <= limit && is_isometric(&d, c) {
            found = Some(c.to_vec());
            false
        } else {
            true
        }
    });
    Ok(found)
}

/// Weakly modular with no induced `C4` or `C5`.
pub fn is_bridged_by_characterization(g: &Graph) -> Result<bool> {
    let m = Metric::new(g)?;
    Ok(m.tc().is_none()
        && m.qc().is_none()
        && has_induced(g, Pattern::C4).is_none()
        && has_induced(g, Pattern::C5).is_none())
}

/// Weakly modular with no induced `C4`.
pub fn is_weakly_bridged(g: &Graph) -> Result<bool> {
    let m = Metric::new(g)?;
    Ok(m.tc().is_none() && m.qc().is_none() && has_induced(g, Pattern::C4).is_none())
}

/// Every cycle vertex either has adjacent cycle neighbours or lies closer
/// in `g` than along the cycle to one of its antipodes.
pub fn is_well_bridged_cycle(g: &Graph, cycle: &[usize]) -> Result<bool> {
    let len = cycle.len();
    if len < 3 {
        return Err(Error::Argument(format!(
            "a cycle needs at least 3 vertices, got {len}"
        )));
    }
    if let Some(&v) = cycle.iter().find(|&&v| v >= g.n()) {
        return Err(Error::Argument(format!("vertex {v} out of range")));
    }
    if cycle.iter().collect::<VertexSet>().len() != len {
        return Err(Error::Argument("cycle repeats a vertex".into()));
    }
    for i in 0..len {
        let (a, b) = (cycle[i], cycle[(i + 1) % len]);
        if !g.has_edge(a, b) {
            return Err(Error::Argument(format!(
                "{a} and {b} are consecutive but not adjacent"
            )));
        }
    }
    let d = g.distances();
    let far = len / 2;
    Ok((0..len).all(|i| {
        let v = cycle[i];
        let (prev, next) = (cycle[(i + len - 1) % len], cycle[(i + 1) % len]);
        if g.has_edge(prev, next) {
            return true;
        }
        (0..len)
            .filter(|&j| cycle_distance(len, i, j) == far)
            .any(|j| (d.raw(v, cycle[j]) as usize) < far)
    }))
}

// ---------------------------------------------------------------------------
// Classification

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    Modular,
    WeaklyModular,
    DiamondWeaklyModular,
    Bridged,
    WeaklyBridged,
}

impl GraphClass {
    pub const ALL: [GraphClass; 5] = [
        GraphClass::Modular,
        GraphClass::WeaklyModular,
        GraphClass::DiamondWeaklyModular,
        GraphClass::Bridged,
        GraphClass::WeaklyBridged,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Modular => "modular",
            GraphClass::WeaklyModular => "weakly-modular",
            GraphClass::DiamondWeaklyModular => "diamond-weakly-modular",
            GraphClass::Bridged => "bridged",
            GraphClass::WeaklyBridged => "weakly-bridged",
        }
    }
}

/// Why a graph is not in a class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "evidence", rename_all = "snake_case")]
pub enum Evidence {
    Condition(ConditionWitness),
    IsometricCycle {
        cycle: Vec<usize>,
    },
    InducedPattern {
        pattern: Pattern,
        vertices: VertexSet,
    },
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::Condition(w) => write!(f, "{w}"),
            Evidence::IsometricCycle { cycle } => write!(f, "isometric cycle {cycle:?}"),
            Evidence::InducedPattern { pattern, vertices } => {
                write!(f, "induced {pattern} on {vertices}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    pub class: GraphClass,
    pub verdict: bool,
    pub witness: Option<Evidence>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub graph6: String,
    pub modular: bool,
    pub weakly_modular: bool,
    pub diamond_weakly_modular: bool,
    pub bridged: bool,
    pub weakly_bridged: bool,
    pub classes: Vec<ClassVerdict>,
}

impl ClassificationReport {
    pub fn verdict(&self, class: GraphClass) -> bool {
        match class {
            GraphClass::Modular => self.modular,
            GraphClass::WeaklyModular => self.weakly_modular,
            GraphClass::DiamondWeaklyModular => self.diamond_weakly_modular,
            GraphClass::Bridged => self.bridged,
            GraphClass::WeaklyBridged => self.weakly_bridged,
        }
    }

    /// Violations of bridged => weakly bridged => DWM => weakly modular and
    /// modular => weakly modular.
    pub fn chain_violations(&self) -> Vec<(GraphClass, GraphClass)> {
        use GraphClass::*;
        [
            (Bridged, WeaklyBridged),
            (WeaklyBridged, DiamondWeaklyModular),
            (DiamondWeaklyModular, WeaklyModular),
            (Modular, WeaklyModular),
        ]
        .into_iter()
        .filter(|&(a, b)| self.verdict(a) && !self.verdict(b))
        .collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.classes {
            s.push_str(&format!("{}: {}", c.class.name(), c.verdict));
            if let Some(w) = &c.witness {
                s.push_str(&format!("  ({w})"));
            }
            s.push('\n');
        }
        s
    }
}

pub fn classify(g: &Graph) -> Result<ClassificationReport> {
    let m = Metric::new(g)?;
    let tc = m.tc();
    let qc = m.qc();
    let tdc = m.tdc(TdcReading::Joint);
    let cycle = is_bridged_by_cycles(g)?;
    let c4 = has_induced(g, Pattern::C4);

    let cond = |w: &ConditionWitness| Some(Evidence::Condition(w.clone()));
    let modular = ClassVerdict {
        class: GraphClass::Modular,
        verdict: qc.is_none(),
        witness: qc.as_ref().and_then(cond),
    };
    let wm_witness = tc.as_ref().or(qc.as_ref()).and_then(cond);
    let weakly_modular = ClassVerdict {
        class: GraphClass::WeaklyModular,
        verdict: wm_witness.is_none(),
        witness: wm_witness.clone(),
    };
    let dwm_witness = qc.as_ref().or(tdc.as_ref()).and_then(cond);
    let dwm = ClassVerdict {
        class: GraphClass::DiamondWeaklyModular,
        verdict: dwm_witness.is_none(),
        witness: dwm_witness,
    };
    let bridged = ClassVerdict {
        class: GraphClass::Bridged,
        verdict: cycle.is_none(),
        witness: cycle.map(|cycle| Evidence::IsometricCycle { cycle }),
    };
    let wb_witness = wm_witness.or(c4.map(|vertices| Evidence::InducedPattern {
        pattern: Pattern::C4,
        vertices,
    }));
    let weakly_bridged = ClassVerdict {
        class: GraphClass::WeaklyBridged,
        verdict: wb_witness.is_none(),
        witness: wb_witness,
    };

    Ok(ClassificationReport {
        graph6: emit_graph6(g),
        modular: modular.verdict,
        weakly_modular: weakly_modular.verdict,
        diamond_weakly_modular: dwm.verdict,
        bridged: bridged.verdict,
        weakly_bridged: weakly_bridged.verdict,
        classes: vec![modular, weakly_modular, dwm, bridged, weakly_bridged],
    })
}
