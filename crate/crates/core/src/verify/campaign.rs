//! Theorem campaigns: sweep a universe of graphs or transit functions and
//! collect every instance where a claimed equivalence or implication fails.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fixtures::{fixture, FIXTURES};
use crate::formats::emit_graph6;
use crate::gated::{glue_unchecked, AmalgamSpec};
use crate::graph::{make_prism, Graph};
use crate::metric::{classify, Condition, Evidence, GraphClass};
use crate::transit::{emit_transit, AxiomId, TransitFunction};
use crate::verify::corpus::amalgam_corpus;
use crate::verify::enumerate::{
    connected_graphs_in, enumerate_transit_functions, graph_mask_count, TransitSampler,
    MAX_ENUMERATED_TRANSIT,
};
use crate::verify::facts::{AxiomCache, AxiomOracle, GraphFacts};
use crate::vertex_set::VertexSet;
use AxiomId::*;

/// At most this many violations are kept per report; all are counted.
pub const MAX_LISTED: usize = 100;

/// Bridged graphs up to this order join the amalgam corpus.
pub const CORPUS_BRIDGED_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// `I_G` satisfies J0' iff `G` is diamond-weakly modular.
    Dwm,
    /// The full axiom set characterizes interval functions of DWM graphs.
    DwmAxioms,
    /// Three bridged recognizers agree: isometric cycles, forbidden
    /// subgraphs, and J0' with br.
    Bridged,
    BridgedAxioms,
    /// Weakly bridged iff J0' and br'.
    WeaklyBridged,
    WeaklyBridgedAxioms,
    /// t1, t2, b2, b3, b4, s1, s2 characterize interval functions.
    IntervalAxioms,
    /// Bridged graphs are weakly bridged and diamond-weakly modular.
    BridgedInclusion,
    /// Weakly bridged graphs are diamond-weakly modular.
    WeaklyBridgedInclusion,
    /// DWM graphs are weakly modular and dominate their five-vertex
    /// patterns.
    DwmDomination,
    /// DWM graphs are closed under gated amalgams.
    AmalgamClosure,
    /// J0 ⇒ J0', t3 ∧ br ⇒ br', b3 ⇒ b1.
    Elementary,
    /// J0' and b3 give b2 and a connected underlying graph.
    B2Connected,
    /// b2, b3 and ta give s1 and s2.
    S1S2,
    /// b2 and b3 give a point `x` with `R(x,v) ∩ R(x,w) = {x}`.
    CommonPoint,
    /// Every implication of the transit suite at once.
    Implications,
    /// The prism is weakly modular without TDC.
    Prism,
    /// The catalogued fixtures have their documented profiles.
    Independence,
}

use TheoremId::*;

impl TheoremId {
    pub const ALL: [TheoremId; 18] = [
        Dwm,
        DwmAxioms,
        Bridged,
        BridgedAxioms,
        WeaklyBridged,
        WeaklyBridgedAxioms,
        IntervalAxioms,
        BridgedInclusion,
        WeaklyBridgedInclusion,
        DwmDomination,
        AmalgamClosure,
        Elementary,
        B2Connected,
        S1S2,
        CommonPoint,
        Implications,
        Prism,
        Independence,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Dwm => "T-4.1",
            DwmAxioms => "T-4.2",
            Bridged => "T-5.1",
            BridgedAxioms => "T-5.2",
            WeaklyBridged => "T-5.3",
            WeaklyBridgedAxioms => "T-5.4",
            IntervalAxioms => "T-3.3",
            BridgedInclusion => "L-2.2",
            WeaklyBridgedInclusion => "L-2.3",
            DwmDomination => "P-GDWM",
            AmalgamClosure => "T-2.4",
            Elementary => "P-3.2",
            B2Connected => "T-3.5",
            S1S2 => "L-3.4",
            CommonPoint => "L-s1s2",
            Implications => "IMPL",
            Prism => "X-PRISM",
            Independence => "X-INDEP",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Dwm => "I_G satisfies J0' iff G is diamond-weakly modular",
            DwmAxioms => "R satisfies t1,t2,t3,b3,J0',ta iff G_R is diamond-weakly modular and R = I_{G_R}",
            Bridged => "no isometric cycle >= 4 iff weakly modular without induced C4, C5 iff I_G satisfies J0' and br",
            BridgedAxioms => "R satisfies t1,t2,t3,b3,J0',ta,br iff G_R is bridged and R = I_{G_R}",
            WeaklyBridged => "G is weakly bridged iff I_G satisfies J0' and br'",
            WeaklyBridgedAxioms => "R satisfies t1,t2,t3,b3,J0',ta,br' iff G_R is weakly bridged and R = I_{G_R}",
            IntervalAxioms => "R satisfies t1,t2,b2,b3,b4,s1,s2 iff R = I_{G_R}",
            BridgedInclusion => "bridged implies weakly bridged and diamond-weakly modular",
            WeaklyBridgedInclusion => "weakly bridged implies diamond-weakly modular",
            DwmDomination => "diamond-weakly modular implies weakly modular with dominated C5, house and W4-",
            AmalgamClosure => "gated amalgams of diamond-weakly modular graphs are diamond-weakly modular",
            Elementary => "J0 => J0'; t3 and br => br'; b3 => b1",
            B2Connected => "t1,t2,t3,J0',b3 => b2 and G_R connected",
            S1S2 => "t1,t2,t3,b2,b3,ta => s1 and s2",
            CommonPoint => "t1,t2,t3,b2,b3 => for all u,v,w some x in R(u,v) and R(u,w) has R(x,v) and R(x,w) meeting in {x}",
            Implications => "all transit implications (a)-(g)",
            Prism => "K3 x K2 is weakly modular but violates TDC",
            Independence => "each catalogued fixture has exactly its documented axiom profile",
        }
    }

    fn on_graphs(self) -> bool {
        matches!(
            self,
            Dwm | DwmAxioms
                | Bridged
                | BridgedAxioms
                | WeaklyBridged
                | WeaklyBridgedAxioms
                | IntervalAxioms
                | BridgedInclusion
                | WeaklyBridgedInclusion
                | DwmDomination
        )
    }

    fn on_transit(self) -> bool {
        matches!(
            self,
            DwmAxioms
                | BridgedAxioms
                | WeaklyBridgedAxioms
                | IntervalAxioms
                | Elementary
                | B2Connected
                | S1S2
                | CommonPoint
                | Implications
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.id())
    }
}

/// How much of each universe a campaign may explore.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Graphs on `1..=max_n` vertices are enumerated exhaustively.
    pub max_n: usize,
    /// Sampled transit functions per element count (5 and 6).
    pub samples: u64,
    pub seed: u64,
    /// Worker threads; the result does not depend on this.
    pub threads: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_n: 7,
            samples: 10_000,
            seed: 0,
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

/// The structure a violation is about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subject {
    /// A graph; axioms refer to its interval function.
    Graph(Graph),
    Transit(TransitFunction),
    Amalgam(AmalgamSpec),
    Fixture(&'static str),
}

impl Serialize for Subject {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = serializer.serialize_map(Some(1))?;
        match self {
            Subject::Graph(g) => m.serialize_entry("graph6", &emit_graph6(g))?,
            Subject::Transit(r) => m.serialize_entry("transit", &emit_transit(r))?,
            Subject::Amalgam(spec) => {
                let v: serde_json::Value =
                    serde_json::from_str(&spec.to_json()).expect("spec json is valid");
                m.serialize_entry("amalgam", &v)?
            }
            Subject::Fixture(name) => m.serialize_entry("fixture", name)?,
        }
        m.end()
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Graph(g) => write!(f, "graph {}", emit_graph6(g)),
            Subject::Transit(r) => write!(f, "transit function\n{}", emit_transit(r).trim_end()),
            Subject::Amalgam(spec) => write!(f, "amalgam {}", spec.to_json()),
            Subject::Fixture(name) => write!(f, "fixture {name}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub subject: Subject,
    pub detail: String,
}

impl Violation {
    /// Re-checks the subject from scratch; `Some(detail)` if it still
    /// violates `theorem`.
    pub fn replay(&self, theorem: TheoremId) -> Option<String> {
        check_subject(theorem, &self.subject)
    }
}

/// The universe a report covers, split into homogeneous parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniversePart {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CampaignReport {
    pub theorem: TheoremId,
    pub statement: &'static str,
    pub universe: Vec<UniversePart>,
    /// The first [`MAX_LISTED`] violations in universe order.
    pub violations: Vec<Violation>,
    pub violation_count: u64,
    pub pass: bool,
    pub elapsed_ms: u64,
}

impl CampaignReport {
    fn empty(theorem: TheoremId) -> Self {
        CampaignReport {
            theorem,
            statement: theorem.statement(),
            universe: Vec::new(),
            violations: Vec::new(),
            violation_count: 0,
            pass: true,
            elapsed_ms: 0,
        }
    }

    fn record(&mut self, subject: impl FnOnce() -> Subject, detail: String) {
        self.violation_count += 1;
        self.pass = false;
        if self.violations.len() < MAX_LISTED {
            self.violations.push(Violation {
                subject: subject(),
                detail,
            });
        }
    }

    fn count(&mut self, kind: &'static str, n: Option<usize>, seed: Option<u64>, count: u64) {
        match self
            .universe
            .iter_mut()
            .find(|p| p.kind == kind && p.n == n && p.seed == seed)
        {
            Some(p) => p.count += count,
            None => self.universe.push(UniversePart {
                kind,
                n,
                count,
                seed,
            }),
        }
    }

    /// Appends `later`, which must cover a universe chunk after this one.
    pub fn merge(&mut self, later: CampaignReport) {
        assert_eq!(
            self.theorem, later.theorem,
            "merging reports of different theorems"
        );
        for p in later.universe {
            self.count(p.kind, p.n, p.seed, p.count);
        }
        let room = MAX_LISTED.saturating_sub(self.violations.len());
        self.violations
            .extend(later.violations.into_iter().take(room));
        self.violation_count += later.violation_count;
        self.pass &= later.pass;
        self.elapsed_ms += later.elapsed_ms;
    }

    /// JSON without the timing field, identical across runs with the same
    /// budget.
    pub fn to_json_stable(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().unwrap().remove("elapsed_ms");
        serde_json::to_string_pretty(&v).unwrap()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{}: {}\n  {}\n  universe:",
            self.theorem,
            if self.pass { "pass" } else { "FAIL" },
            self.statement
        );
        for p in &self.universe {
            s.push_str(&format!(" {}", p.kind));
            if let Some(n) = p.n {
                s.push_str(&format!("[n={n}]"));
            }
            s.push_str(&format!("={}", p.count));
        }
        s.push_str(&format!(
            "\n  violations: {} ({} ms)\n",
            self.violation_count, self.elapsed_ms
        ));
        for v in &self.violations {
            s.push_str(&format!(
                "  - {}\n    {}\n",
                v.detail,
                v.subject.to_string().replace('\n', "\n    ")
            ));
        }
        s
    }
}

// ---------------------------------------------------------------------------
// Checks

const WMD_AXIOMS: [AxiomId; 6] = [T1, T2, T3, B3, J0p, Ta];
const MN_AXIOMS: [AxiomId; 7] = [T1, T2, B2, B3, B4, S1, S2];

fn yes(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn is(b: bool) -> &'static str {
    if b {
        "is"
    } else {
        "is not"
    }
}

fn names(axioms: &[AxiomId]) -> String {
    axioms
        .iter()
        .map(|a| a.name())
        .collect::<Vec<_>>()
        .join(",")
}

fn with(base: &[AxiomId], extra: AxiomId) -> Vec<AxiomId> {
    let mut v = base.to_vec();
    v.push(extra);
    v
}

/// `axioms` on `I_G` should hold exactly when `class` holds.
fn graph_axiom_iff(
    f: &GraphFacts,
    axioms: &[AxiomId],
    class: bool,
    class_name: &str,
) -> Option<String> {
    match (f.first_failing(axioms), class) {
        (Some(a), true) => Some(format!("G is {class_name} but I_G violates {a}")),
        (None, false) => Some(format!(
            "I_G satisfies {} but G is not {class_name}",
            names(axioms)
        )),
        _ => None,
    }
}

fn graph_check(t: TheoremId, f: &GraphFacts) -> Option<String> {
    match t {
        Dwm => {
            let (j, d) = (f.holds(J0p), f.dwm());
            (j != d).then(|| {
                format!(
                    "J0' {} on I_G; QC {}, TDC {}",
                    yes(j),
                    yes(f.qc()),
                    yes(f.tdc())
                )
            })
        }
        DwmAxioms => graph_axiom_iff(f, &WMD_AXIOMS, f.dwm(), "diamond-weakly modular"),
        Bridged => {
            let cycles = f.bridged();
            let forbidden = f.bridged_by_characterization();
            let axioms = f.holds(J0p) && f.holds(Br);
            (cycles != forbidden || cycles != axioms).then(|| {
                format!(
                    "no isometric cycle: {cycles}; weakly modular without induced C4/C5: {forbidden}; J0' and br on I_G: {axioms}"
                )
            })
        }
        BridgedAxioms => graph_axiom_iff(f, &with(&WMD_AXIOMS, Br), f.bridged(), "bridged"),
        WeaklyBridged => {
            let (wb, ax) = (f.weakly_bridged(), f.holds(J0p) && f.holds(Brp));
            (wb != ax).then(|| {
                format!(
                    "G {} weakly bridged (TC {}, QC {}, induced C4 {}); J0' {}, br' {} on I_G",
                    is(wb),
                    yes(f.tc()),
                    yes(f.qc()),
                    if f.induced_c4() { "present" } else { "absent" },
                    yes(f.holds(J0p)),
                    yes(f.holds(Brp))
                )
            })
        }
        WeaklyBridgedAxioms => graph_axiom_iff(
            f,
            &with(&WMD_AXIOMS, Brp),
            f.weakly_bridged(),
            "weakly bridged",
        ),
        IntervalAxioms => f
            .first_failing(&MN_AXIOMS)
            .map(|a| format!("I_G violates {a}")),
        BridgedInclusion => {
            if !f.bridged() {
                None
            } else if !f.weakly_bridged() {
                Some("bridged but not weakly bridged".into())
            } else if !f.dwm() {
                Some("bridged but not diamond-weakly modular".into())
            } else {
                None
            }
        }
        WeaklyBridgedInclusion => (f.weakly_bridged() && !f.dwm())
            .then(|| "weakly bridged but not diamond-weakly modular".into()),
        DwmDomination => {
            if !f.dwm() {
                None
            } else if !f.weakly_modular() {
                Some("diamond-weakly modular but TC fails".into())
            } else if !f.dominated() {
                Some("diamond-weakly modular with an undominated C5, house or W4-".into())
            } else {
                None
            }
        }
        _ => None,
    }
}

/// The conclusion "G_R is connected, has `class`, and R = I_{G_R}".
fn transit_class(
    r: &TransitFunction,
    class: impl Fn(&GraphFacts<'_>) -> bool,
    class_name: &str,
) -> Option<String> {
    let g = r.underlying_graph();
    if !g.is_connected() {
        return Some("G_R is disconnected".into());
    }
    let f = GraphFacts::new(&g);
    if f.interval() != r {
        return Some(format!("R differs from I_G for G_R = {}", emit_graph6(&g)));
    }
    (!class(&f)).then(|| format!("G_R = {} is not {class_name}", emit_graph6(&g)))
}

fn transit_axiom_iff(
    c: &AxiomCache,
    axioms: &[AxiomId],
    class: impl Fn(&GraphFacts<'_>) -> bool,
    class_name: &str,
) -> Option<String> {
    if !c.all(axioms) {
        return None;
    }
    transit_class(c.function(), class, class_name)
        .map(|why| format!("R satisfies {} but {why}", names(axioms)))
}

fn interval_equivalence(c: &AxiomCache) -> Option<String> {
    let axioms = c.all(&MN_AXIOMS);
    let equal = c.function().equals_interval_function().unwrap_or(false);
    match (axioms, equal) {
        (true, false) => Some(format!(
            "R satisfies {} but is not the interval function of G_R",
            names(&MN_AXIOMS)
        )),
        (false, true) => Some(format!(
            "R = I_{{G_R}} but violates {}",
            c.first_failing(&MN_AXIOMS).unwrap()
        )),
        _ => None,
    }
}

/// Some `(u,v,w)` without `x ∈ R(u,v) ∩ R(u,w)` such that
/// `R(x,v) ∩ R(x,w) = {x}`.
fn common_point_failure(r: &TransitFunction) -> Option<(usize, usize, usize)> {
    let n = r.n();
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                let ok = (r.get(u, v) & r.get(u, w))
                    .iter()
                    .any(|x| r.get(x, v) & r.get(x, w) == VertexSet::singleton(x));
                if !ok {
                    return Some((u, v, w));
                }
            }
        }
    }
    None
}

/// Implication `label` of the transit suite.
fn implication(label: char, c: &AxiomCache) -> Option<String> {
    let r = c.function();
    let fail =
        |hyp: &[AxiomId], concl: &str| Some(format!("({label}) {} hold but {concl}", names(hyp)));
    match label {
        'a' => (c.holds(J0) && !c.holds(J0p)).then(|| "(a) J0 holds but J0' fails".into()),
        'b' => {
            let hyp = [T1, T2, T3, J0p, B3];
            if !c.all(&hyp) {
                None
            } else if !c.holds(B2) {
                fail(&hyp, "b2 fails")
            } else if !r.underlying_graph().is_connected() {
                fail(&hyp, "G_R is disconnected")
            } else {
                None
            }
        }
        'c' => {
            let hyp = [T1, T2, T3, B2, B3, Ta];
            if !c.all(&hyp) {
                return None;
            }
            c.first_failing(&[S1, S2])
                .and_then(|a| fail(&hyp, &format!("{a} fails")))
        }
        'd' => {
            let hyp = [T1, T2, T3, B2, B3];
            if !c.all(&hyp) {
                return None;
            }
            common_point_failure(r).and_then(|(u, v, w)| {
                fail(
                    &hyp,
                    &format!(
                        "no x in R({u},{v}) and R({u},{w}) has R(x,{v}) and R(x,{w}) meeting in {{x}}"
                    ),
                )
            })
        }
        'e' => (c.holds(T3) && c.holds(Br) && !c.holds(Brp))
            .then(|| "(e) t3,br hold but br' fails".into()),
        'f' => (c.holds(B3) && !c.holds(B1)).then(|| "(f) b3 holds but b1 fails".into()),
        'g' => {
            let hyp = [T1, T2, B2, B3, B4, S1, S2];
            if !c.all(&hyp) {
                return None;
            }
            match r.equals_interval_function() {
                Ok(true) => None,
                Ok(false) => fail(&hyp, "R is not the interval function of G_R"),
                Err(_) => fail(&hyp, "G_R is disconnected"),
            }
        }
        _ => unreachable!("unknown implication {label}"),
    }
}

fn implications(labels: &str, c: &AxiomCache) -> Option<String> {
    labels.chars().find_map(|l| implication(l, c))
}

fn transit_check(t: TheoremId, c: &AxiomCache) -> Option<String> {
    match t {
        DwmAxioms => transit_axiom_iff(
            c,
            &WMD_AXIOMS,
            |f: &GraphFacts| f.dwm(),
            "diamond-weakly modular",
        ),
        BridgedAxioms => transit_axiom_iff(
            c,
            &with(&WMD_AXIOMS, Br),
            |f: &GraphFacts| f.bridged(),
            "bridged",
        ),
        WeaklyBridgedAxioms => transit_axiom_iff(
            c,
            &with(&WMD_AXIOMS, Brp),
            |f: &GraphFacts| f.weakly_bridged(),
            "weakly bridged",
        ),
        IntervalAxioms => interval_equivalence(c),
        Elementary => implications("aef", c),
        B2Connected => implications("b", c),
        S1S2 => implications("c", c),
        CommonPoint => implications("d", c),
        Implications => implications("abcdefg", c),
        _ => None,
    }
}

fn amalgam_check(spec: &AmalgamSpec) -> Option<String> {
    if spec.validate().is_err() {
        return None;
    }
    let (f1, f2) = (GraphFacts::new(&spec.g1), GraphFacts::new(&spec.g2));
    if !f1.dwm() || !f2.dwm() {
        return None;
    }
    let g = glue_unchecked(spec).expect("validated");
    let report = classify(&g).expect("amalgam of connected graphs is connected");
    if report.diamond_weakly_modular {
        return None;
    }
    let witness = report
        .classes
        .iter()
        .find(|c| c.class == GraphClass::DiamondWeaklyModular)
        .and_then(|c| c.witness.as_ref())
        .map_or(String::new(), |w| format!(": {w}"));
    Some(format!(
        "amalgam {} is not diamond-weakly modular{witness}",
        emit_graph6(&g)
    ))
}

fn prism_check(g: &Graph) -> Option<String> {
    let report = classify(g).expect("prism is connected");
    let tdc_witness = report
        .classes
        .iter()
        .filter_map(|c| c.witness.as_ref())
        .any(|w| matches!(w, Evidence::Condition(c) if c.kind == Condition::TDC));
    if !report.weakly_modular {
        Some("not weakly modular".into())
    } else if report.diamond_weakly_modular || !tdc_witness {
        Some("no TDC violation found".into())
    } else {
        None
    }
}

fn fixture_check(name: &str) -> Option<String> {
    let f = fixture(name).ok()?;
    let bad = f.profile_mismatches();
    (!bad.is_empty()).then(|| {
        bad.iter()
            .map(|&(a, documented)| {
                format!(
                    "{a} documented to {} but {}",
                    if documented { "hold" } else { "fail" },
                    if documented { "fails" } else { "holds" }
                )
            })
            .collect::<Vec<_>>()
            .join("; ")
    })
}

/// Checks one subject against one theorem; `Some(detail)` on violation.
pub fn check_subject(t: TheoremId, subject: &Subject) -> Option<String> {
    match subject {
        Subject::Graph(g) if t == Prism => prism_check(g),
        Subject::Graph(g) if g.is_connected() => graph_check(t, &GraphFacts::new(g)),
        Subject::Graph(_) => None,
        Subject::Transit(r) => transit_check(t, &AxiomCache::new(r)),
        Subject::Amalgam(spec) if t == AmalgamClosure => amalgam_check(spec),
        Subject::Fixture(name) if t == Independence => fixture_check(name),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Sweeps

/// Runs `work` over `chunks` on up to `threads` workers and returns the
/// results in chunk order.
fn run_chunks<C: Sync, T: Send>(
    threads: usize,
    chunks: &[C],
    work: impl Fn(&C) -> T + Sync,
) -> Vec<T> {
    let slots: Vec<Mutex<Option<T>>> = chunks.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let worker = || loop {
        let i = next.fetch_add(1, Ordering::Relaxed);
        let Some(chunk) = chunks.get(i) else { break };
        *slots[i].lock().unwrap() = Some(work(chunk));
    };
    let threads = threads.clamp(1, chunks.len().max(1));
    if threads == 1 {
        worker();
    } else {
        std::thread::scope(|s| {
            for _ in 0..threads {
                s.spawn(worker);
            }
        });
    }
    slots
        .into_iter()
        .map(|m| m.into_inner().unwrap().expect("every chunk ran"))
        .collect()
}

fn split(range: Range<u64>, pieces: u64) -> Vec<Range<u64>> {
    let len = range.end - range.start;
    let pieces = pieces.clamp(1, len.max(1));
    (0..pieces)
        .map(|i| range.start + len * i / pieces..range.start + len * (i + 1) / pieces)
        .collect()
}

enum Chunk {
    Graphs { n: usize, masks: Range<u64> },
    TransitExhaustive { n: usize },
    Samples { n: usize, indices: Range<u64> },
}

/// Runs several theorems over one shared sweep of their universes, so each
/// graph or transit function is built (and its facts computed) once.
///
/// Reports come back in the order of `theorems`.
pub fn verify_theorems(theorems: &[TheoremId], budget: &Budget) -> Result<Vec<CampaignReport>> {
    let start = Instant::now();
    if budget.max_n == 0 || budget.max_n > crate::verify::enumerate::MAX_ENUMERATED_GRAPH {
        return Err(Error::Capacity(format!(
            "graph campaigns support 1 <= max_n <= {}, got {}",
            crate::verify::enumerate::MAX_ENUMERATED_GRAPH,
            budget.max_n
        )));
    }
    let graph_ts: Vec<usize> = (0..theorems.len())
        .filter(|&i| theorems[i].on_graphs())
        .collect();
    let transit_ts: Vec<usize> = (0..theorems.len())
        .filter(|&i| theorems[i].on_transit())
        .collect();

    let mut chunks = Vec::new();
    if !graph_ts.is_empty() {
        for n in 1..=budget.max_n {
            // enough chunks to balance load without much merge overhead
            let pieces = (graph_mask_count(n) / 4096).clamp(1, 256);
            for masks in split(0..graph_mask_count(n), pieces) {
                chunks.push(Chunk::Graphs { n, masks });
            }
        }
    }
    if !transit_ts.is_empty() {
        for n in 1..=MAX_ENUMERATED_TRANSIT {
            chunks.push(Chunk::TransitExhaustive { n });
        }
        if budget.samples > 0 {
            for n in [5, 6] {
                for indices in split(0..budget.samples, (budget.samples / 2048).clamp(1, 256)) {
                    chunks.push(Chunk::Samples { n, indices });
                }
            }
        }
    }

    let blank =
        || -> Vec<CampaignReport> { theorems.iter().map(|&t| CampaignReport::empty(t)).collect() };
    let partials = run_chunks(
        budget.threads,
        &chunks,
        |chunk| -> Result<Vec<CampaignReport>> {
            let mut reports = blank();
            match chunk {
                Chunk::Graphs { n, masks } => {
                    let mut count = 0;
                    for g in connected_graphs_in(*n, masks.clone())? {
                        count += 1;
                        let facts = GraphFacts::new(&g);
                        for &i in &graph_ts {
                            if let Some(detail) = graph_check(theorems[i], &facts) {
                                reports[i].record(|| Subject::Graph(g.clone()), detail);
                            }
                        }
                    }
                    for &i in &graph_ts {
                        reports[i].count("connected-graphs", Some(*n), None, count);
                    }
                }
                Chunk::TransitExhaustive { n } => {
                    let mut count = 0;
                    for r in enumerate_transit_functions(*n, &[])? {
                        count += 1;
                        sweep_transit(theorems, &transit_ts, &mut reports, r);
                    }
                    for &i in &transit_ts {
                        reports[i].count("transit-exhaustive", Some(*n), None, count);
                    }
                }
                Chunk::Samples { n, indices } => {
                    let sampler = TransitSampler::new(*n, budget.seed)?;
                    for r in sampler.samples(indices.clone()) {
                        sweep_transit(theorems, &transit_ts, &mut reports, r);
                    }
                    for &i in &transit_ts {
                        reports[i].count(
                            "transit-sampled",
                            Some(*n),
                            Some(budget.seed),
                            indices.end - indices.start,
                        );
                    }
                }
            }
            Ok(reports)
        },
    );

    let mut merged = blank();
    for partial in partials {
        for (m, p) in merged.iter_mut().zip(partial?) {
            m.merge(p);
        }
    }
    for report in merged.iter_mut() {
        match report.theorem {
            AmalgamClosure => {
                let corpus = amalgam_corpus(CORPUS_BRIDGED_N);
                let results = run_chunks(budget.threads, &split(0..corpus.len() as u64, 64), |r| {
                    corpus[r.start as usize..r.end as usize]
                        .iter()
                        .filter_map(|spec| amalgam_check(spec).map(|d| (spec.clone(), d)))
                        .collect::<Vec<_>>()
                });
                for (spec, detail) in results.into_iter().flatten() {
                    report.record(|| Subject::Amalgam(spec), detail);
                }
                report.count("amalgam-corpus", None, None, corpus.len() as u64);
            }
            Prism => {
                let g = make_prism();
                if let Some(detail) = prism_check(&g) {
                    report.record(|| Subject::Graph(g), detail);
                }
                report.count("instance", Some(6), None, 1);
            }
            Independence => {
                for f in &FIXTURES {
                    if let Some(detail) = fixture_check(f.name) {
                        report.record(|| Subject::Fixture(f.name), detail);
                    }
                }
                report.count("fixtures", None, None, FIXTURES.len() as u64);
            }
            _ => {}
        }
    }
    let elapsed = start.elapsed().as_millis() as u64;
    for report in merged.iter_mut() {
        report.elapsed_ms = elapsed;
    }
    Ok(merged)
}

fn sweep_transit(
    theorems: &[TheoremId],
    which: &[usize],
    reports: &mut [CampaignReport],
    r: TransitFunction,
) {
    let cache = AxiomCache::new(&r);
    for &i in which {
        if let Some(detail) = transit_check(theorems[i], &cache) {
            reports[i].record(|| Subject::Transit(r.clone()), detail);
        }
    }
}

/// Runs one campaign.
pub fn verify_theorem(theorem: TheoremId, budget: &Budget) -> Result<CampaignReport> {
    Ok(verify_theorems(&[theorem], budget)?.remove(0))
}
