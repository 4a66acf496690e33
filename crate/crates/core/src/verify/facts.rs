//! Lazily computed, memoized properties of one graph or one transit
//! function, so that several theorems can share a single sweep.

use std::cell::{Cell, OnceCell};

use crate::graph::Graph;
use crate::metric::{is_bridged_by_cycles, Metric, TdcReading};
use crate::pattern::{dominated_five_cycle_check, has_induced, Pattern};
use crate::transit::{AxiomId, TransitFunction};

/// Axiom verdicts about one transit function, possibly memoized.
pub trait AxiomOracle {
    fn function(&self) -> &TransitFunction;

    fn holds(&self, a: AxiomId) -> bool;

    fn all(&self, axioms: &[AxiomId]) -> bool {
        axioms.iter().all(|&a| self.holds(a))
    }

    /// The first axiom of `axioms` that fails, if any.
    fn first_failing(&self, axioms: &[AxiomId]) -> Option<AxiomId> {
        axioms.iter().copied().find(|&a| !self.holds(a))
    }
}

fn memo(slot: &Cell<Option<bool>>, f: impl FnOnce() -> bool) -> bool {
    if let Some(v) = slot.get() {
        return v;
    }
    let v = f();
    slot.set(Some(v));
    v
}

/// Memoized axiom verdicts for one transit function.
pub struct AxiomCache<'r> {
    r: &'r TransitFunction,
    known: [Cell<Option<bool>>; 21],
}

impl<'r> AxiomCache<'r> {
    pub fn new(r: &'r TransitFunction) -> Self {
        AxiomCache {
            r,
            known: Default::default(),
        }
    }
}

impl AxiomOracle for AxiomCache<'_> {
    fn function(&self) -> &TransitFunction {
        self.r
    }

    fn holds(&self, a: AxiomId) -> bool {
        memo(&self.known[a as usize], || self.r.satisfies(a))
    }
}

/// Memoized metric and structural facts about a connected graph.
pub struct GraphFacts<'g> {
    pub g: &'g Graph,
    metric: Metric<'g>,
    interval: OnceCell<TransitFunction>,
    axioms: [Cell<Option<bool>>; 21],
    tc: OnceCell<bool>,
    qc: OnceCell<bool>,
    tdc: OnceCell<bool>,
    tdc_per_neighbor: OnceCell<bool>,
    isometric_cycle: OnceCell<bool>,
    c4: OnceCell<bool>,
    c5: OnceCell<bool>,
    dominated: OnceCell<bool>,
}

impl<'g> GraphFacts<'g> {
    /// # Panics
    /// If `g` is disconnected.
    pub fn new(g: &'g Graph) -> Self {
        GraphFacts {
            g,
            metric: Metric::new(g).expect("graph facts need a connected graph"),
            interval: OnceCell::new(),
            axioms: Default::default(),
            tc: OnceCell::new(),
            qc: OnceCell::new(),
            tdc: OnceCell::new(),
            tdc_per_neighbor: OnceCell::new(),
            isometric_cycle: OnceCell::new(),
            c4: OnceCell::new(),
            c5: OnceCell::new(),
            dominated: OnceCell::new(),
        }
    }

    pub fn interval(&self) -> &TransitFunction {
        self.interval
            .get_or_init(|| self.metric.d.interval_function())
    }

    pub fn diameter(&self) -> u32 {
        self.metric.d.diameter().unwrap_or(0)
    }

    pub fn tc(&self) -> bool {
        *self.tc.get_or_init(|| self.metric.tc().is_none())
    }

    pub fn qc(&self) -> bool {
        *self.qc.get_or_init(|| self.metric.qc().is_none())
    }

    pub fn tdc(&self) -> bool {
        *self
            .tdc
            .get_or_init(|| self.metric.tdc(TdcReading::Joint).is_none())
    }

    pub fn tdc_per_neighbor(&self) -> bool {
        *self
            .tdc_per_neighbor
            .get_or_init(|| self.metric.tdc(TdcReading::PerNeighbor).is_none())
    }

    pub fn modular(&self) -> bool {
        self.qc()
    }

    pub fn weakly_modular(&self) -> bool {
        self.tc() && self.qc()
    }

    pub fn dwm(&self) -> bool {
        self.qc() && self.tdc()
    }

    pub fn induced_c4(&self) -> bool {
        *self
            .c4
            .get_or_init(|| has_induced(self.g, Pattern::C4).is_some())
    }

    pub fn induced_c5(&self) -> bool {
        *self
            .c5
            .get_or_init(|| has_induced(self.g, Pattern::C5).is_some())
    }

    /// No isometric cycle of length at least 4.
    pub fn bridged(&self) -> bool {
        *self
            .isometric_cycle
            .get_or_init(|| is_bridged_by_cycles(self.g).expect("connected").is_none())
    }

    /// Weakly modular without induced `C4` or `C5`.
    pub fn bridged_by_characterization(&self) -> bool {
        self.weakly_modular() && !self.induced_c4() && !self.induced_c5()
    }

    pub fn weakly_bridged(&self) -> bool {
        self.weakly_modular() && !self.induced_c4()
    }

    /// Every induced `C5`, house and `W4-` has a dominating vertex.
    pub fn dominated(&self) -> bool {
        *self
            .dominated
            .get_or_init(|| dominated_five_cycle_check(self.g))
    }
}

/// Axioms are evaluated on the interval function `I_G`.
impl AxiomOracle for GraphFacts<'_> {
    fn function(&self) -> &TransitFunction {
        self.interval()
    }

    fn holds(&self, a: AxiomId) -> bool {
        memo(&self.axioms[a as usize], || self.interval().satisfies(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_cycle, make_prism, make_wheel};

    #[test]
    fn facts_match_direct_checks() {
        let w5 = make_wheel(5).unwrap();
        let f = GraphFacts::new(&w5);
        // the rim is an isometric C5
        assert!(f.dwm() && f.weakly_bridged() && !f.bridged() && f.dominated());
        let c6 = make_cycle(6).unwrap();
        let f = GraphFacts::new(&c6);
        assert!(!f.qc() && f.tc() && !f.bridged());
        let prism = make_prism();
        let f = GraphFacts::new(&prism);
        assert!(f.weakly_modular() && !f.dwm() && !f.tdc_per_neighbor());
        assert!(f.interval().equals_interval_function().unwrap());
    }

    #[test]
    fn axiom_cache_is_consistent() {
        let r = make_cycle(5).unwrap().interval_function().unwrap();
        let c = AxiomCache::new(&r);
        for a in AxiomId::ALL {
            assert_eq!(c.holds(a), r.satisfies(a));
            assert_eq!(c.holds(a), r.satisfies(a));
        }
        assert_eq!(
            c.first_failing(&[AxiomId::T1, AxiomId::J0p]),
            Some(AxiomId::J0p)
        );
        let c5 = make_cycle(5).unwrap();
        let f = GraphFacts::new(&c5);
        assert!(!f.holds(AxiomId::J0p) && f.holds(AxiomId::B3));
    }
}
