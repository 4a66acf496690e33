//! Axiom checkers over transit functions.
//!
//! Every axiom is a universally quantified implication over a tuple of
//! ground-set elements (its "roles"). [`check_axiom`] searches tuples in
//! lexicographic order of the roles and reports the first violating one;
//! [`holds_at`] evaluates the axiom body at one tuple and is deliberately
//! written as a literal transcription, independent of the fast search.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::TransitFunction;
use crate::error::Error;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    T1,
    T2,
    T3,
    B1,
    B2,
    B3,
    B4,
    J0,
    J0p,
    Ta,
    S1,
    S2,
    Br,
    Brp,
    IB1,
    IB2,
    IB3,
    IB4,
    IB5,
    IB6,
    IB7,
}

use AxiomId::*;

impl AxiomId {
    pub const ALL: [AxiomId; 21] = [
        T1, T2, T3, B1, B2, B3, B4, J0, J0p, Ta, S1, S2, Br, Brp, IB1, IB2, IB3, IB4, IB5, IB6, IB7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            T1 => "t1",
            T2 => "t2",
            T3 => "t3",
            B1 => "b1",
            B2 => "b2",
            B3 => "b3",
            B4 => "b4",
            J0 => "J0",
            J0p => "J0p",
            Ta => "ta",
            S1 => "s1",
            S2 => "s2",
            Br => "br",
            Brp => "brp",
            IB1 => "IB1",
            IB2 => "IB2",
            IB3 => "IB3",
            IB4 => "IB4",
            IB5 => "IB5",
            IB6 => "IB6",
            IB7 => "IB7",
        }
    }

    /// Names of the quantified elements, in the order witnesses list them.
    pub fn roles(self) -> &'static [&'static str] {
        match self {
            T1 | T2 | IB1 => &["u", "v"],
            T3 => &["u"],
            B1 | B4 | IB2 => &["u", "v", "x"],
            B2 | B3 => &["u", "v", "x", "y"],
            J0 | J0p => &["u", "x", "y", "v"],
            Ta => &["u", "v", "w"],
            S1 | S2 => &["u", "u_bar", "v", "v_bar"],
            Br => &["u", "v", "x", "y", "z"],
            Brp => &["u", "v", "x", "z"],
            IB3 => &["u", "x"],
            IB4 | IB5 => &["u", "v", "w", "x"],
            IB6 | IB7 => &["u", "u'", "v", "v'"],
        }
    }

    pub fn arity(self) -> usize {
        self.roles().len()
    }

    /// Ordered pairs (as role indices) whose values explain a violation.
    fn relevant_pairs(self) -> &'static [(usize, usize)] {
        match self {
            T1 | IB1 => &[(0, 1)],
            T2 | IB2 => &[(0, 1), (1, 0)],
            T3 | IB3 => &[(0, 0)],
            B1 | B2 | IB4 => &[(0, 1), (0, 2)],
            B3 => &[(0, 1), (0, 2), (3, 1)],
            B4 => &[(0, 1), (0, 2), (2, 1)],
            J0 | J0p => &[(0, 2), (1, 3), (0, 3)],
            Ta => &[(0, 1), (0, 2), (1, 2)],
            S1 | IB6 => &[(0, 1), (2, 3), (1, 3), (0, 2)],
            S2 | IB7 => &[(0, 1), (2, 3), (0, 2), (1, 3), (0, 3)],
            Br => &[(2, 3), (2, 0), (1, 3), (0, 1), (2, 4), (3, 4)],
            Brp => &[(0, 2), (2, 1), (0, 1), (2, 3)],
            IB5 => &[(0, 3), (0, 2), (1, 3)],
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim().replace(['\'', '′'], "p");
        AxiomId::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(&t))
            .ok_or_else(|| Error::Argument(format!("unknown axiom `{s}`")))
    }
}

impl Serialize for AxiomId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Outcome of checking one axiom. `witness` is the lexicographically first
/// violating tuple, in role order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub axiom: AxiomId,
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl AxiomReport {
    /// One-line human summary using the function's labels.
    pub fn explain(&self, r: &TransitFunction) -> String {
        let Some(w) = &self.witness else {
            return format!("{}: holds", self.axiom);
        };
        let roles: Vec<String> = self
            .axiom
            .roles()
            .iter()
            .zip(w)
            .map(|(role, &v)| format!("{role}={}", r.label(v)))
            .collect();
        let mut values = Vec::new();
        for &(a, b) in self.axiom.relevant_pairs() {
            let entry = format!(
                "R({},{})={}",
                r.label(w[a]),
                r.label(w[b]),
                r.format_set(r.get(w[a], w[b]))
            );
            if !values.contains(&entry) {
                values.push(entry);
            }
        }
        format!(
            "{}: fails at ({}); {}",
            self.axiom,
            roles.join(", "),
            values.join(", ")
        )
    }
}

pub fn check_axiom(r: &TransitFunction, a: AxiomId) -> AxiomReport {
    let witness = first_violation(r, a);
    AxiomReport {
        axiom: a,
        holds: witness.is_none(),
        witness,
    }
}

pub fn check_axioms(r: &TransitFunction, axioms: &[AxiomId]) -> Vec<AxiomReport> {
    axioms.iter().map(|&a| check_axiom(r, a)).collect()
}

impl TransitFunction {
    pub fn satisfies(&self, a: AxiomId) -> bool {
        first_violation(self, a).is_none()
    }
}

/// Evaluates the body of `a` at one tuple (in role order). Tuples that
/// fall outside the quantifier's domain (e.g. non-distinct elements for
/// J0) hold vacuously.
///
/// # Panics
/// If the tuple has the wrong arity or an element is out of range.
pub fn holds_at(r: &TransitFunction, a: AxiomId, t: &[usize]) -> bool {
    assert_eq!(t.len(), a.arity(), "{a} takes {} elements", a.arity());
    assert!(t.iter().all(|&v| v < r.n()), "element out of range");
    let rv = |p: usize, q: usize| -> Vec<usize> { r.get(p, q).to_vec() };
    let inn = |x: usize, p: usize, q: usize| rv(p, q).contains(&x);
    let eq = |p: usize, q: usize, set: &[usize]| {
        let mut want: Vec<usize> = set.to_vec();
        want.sort_unstable();
        want.dedup();
        rv(p, q) == want
    };
    // R(p,q) = {p,q}
    let pair = |p: usize, q: usize| eq(p, q, &[p, q]);
    let meet = |p: (usize, usize), q: (usize, usize)| -> Vec<usize> {
        let b = rv(q.0, q.1);
        rv(p.0, p.1).into_iter().filter(|x| b.contains(x)).collect()
    };
    let distinct = |vs: &[usize]| (0..vs.len()).all(|i| (i + 1..vs.len()).all(|j| vs[i] != vs[j]));
    match a {
        T1 | IB1 => inn(t[0], t[0], t[1]),
        T2 => rv(t[0], t[1]) == rv(t[1], t[0]),
        T3 => eq(t[0], t[0], &[t[0]]),
        B1 => {
            let (u, v, x) = (t[0], t[1], t[2]);
            !(inn(x, u, v) && x != v) || !inn(v, u, x)
        }
        B2 => {
            let (u, v, x, y) = (t[0], t[1], t[2], t[3]);
            !(inn(x, u, v) && inn(y, u, x)) || inn(y, u, v)
        }
        B3 => {
            let (u, v, x, y) = (t[0], t[1], t[2], t[3]);
            !(inn(x, u, v) && inn(y, u, x)) || inn(x, y, v)
        }
        B4 => {
            let (u, v, x) = (t[0], t[1], t[2]);
            !inn(x, u, v) || meet((u, x), (x, v)) == vec![x]
        }
        J0 => {
            let (u, x, y, v) = (t[0], t[1], t[2], t[3]);
            !distinct(t) || !(inn(x, u, y) && inn(y, x, v)) || inn(x, u, v)
        }
        J0p => {
            let (u, x, y, v) = (t[0], t[1], t[2], t[3]);
            if !distinct(t) || !(inn(x, u, y) && inn(y, x, v)) {
                return true;
            }
            let m = meet((u, y), (x, v));
            let proper_subset = m.iter().all(|z| t.contains(z)) && m.len() < 4;
            !proper_subset || inn(x, u, v)
        }
        Ta => {
            let (u, v, w) = (t[0], t[1], t[2]);
            let hyp = meet((u, v), (u, w)) == vec![u]
                && meet((u, v), (v, w)) == vec![v]
                && meet((u, w), (v, w)) == vec![w]
                && pair(u, v);
            !hyp || (pair(u, w) && pair(v, w))
        }
        S1 | IB6 => {
            let (u, ub, v, vb) = (t[0], t[1], t[2], t[3]);
            let hyp = u != ub
                && v != vb
                && pair(u, ub)
                && pair(v, vb)
                && inn(u, ub, vb)
                && inn(ub, u, v)
                && inn(vb, u, v);
            !hyp || inn(v, ub, vb)
        }
        S2 | IB7 => {
            let (u, ub, v, vb) = (t[0], t[1], t[2], t[3]);
            let hyp = u != ub
                && v != vb
                && pair(u, ub)
                && pair(v, vb)
                && inn(ub, u, v)
                && !inn(v, ub, vb)
                && !inn(vb, u, v);
            !hyp || inn(ub, u, vb)
        }
        Br => {
            let (u, v, x, y, z) = (t[0], t[1], t[2], t[3], t[4]);
            let hyp = pair(x, y) && pair(x, u) && pair(v, y) && inn(z, u, v);
            !hyp || pair(x, z) || pair(y, z)
        }
        Brp => {
            let (u, v, x, z) = (t[0], t[1], t[2], t[3]);
            let hyp = pair(u, x) && pair(x, v) && inn(z, u, v);
            !hyp || pair(x, z)
        }
        IB2 => {
            let (u, v, x) = (t[0], t[1], t[2]);
            !inn(x, u, v) || inn(x, v, u)
        }
        IB3 => {
            let (u, x) = (t[0], t[1]);
            !inn(x, u, u) || x == u
        }
        IB4 => {
            let (u, v, w, x) = (t[0], t[1], t[2], t[3]);
            !(inn(w, u, v) && inn(x, u, w)) || inn(x, u, v)
        }
        IB5 => {
            let (u, v, w, x) = (t[0], t[1], t[2], t[3]);
            !(inn(v, u, x) && inn(w, u, x) && inn(v, u, w)) || inn(w, v, x)
        }
    }
}

/// Per-function lookup tables shared by the fast checkers.
struct Tables<'a> {
    r: &'a TransitFunction,
    n: usize,
    /// `pairs[a] = { b : R(a,b) = {a,b} }`, literal (contains `a` iff `R(a,a) = {a}`).
    pairs: Vec<VertexSet>,
}

impl<'a> Tables<'a> {
    fn new(r: &'a TransitFunction) -> Self {
        let n = r.n();
        let pairs = (0..n)
            .map(|a| (0..n).filter(|&b| r.is_pair(a, b)).collect())
            .collect();
        Tables { r, n, pairs }
    }

    #[inline]
    fn get(&self, p: usize, q: usize) -> VertexSet {
        self.r.get(p, q)
    }

    /// `{ v : b in R(a,v) }` for all `a, b`, indexed `a * n + b`.
    fn inverse(&self) -> Vec<VertexSet> {
        let n = self.n;
        let mut inv = vec![VertexSet::EMPTY; n * n];
        for a in 0..n {
            for v in 0..n {
                for b in self.get(a, v) {
                    inv[a * n + b].insert(v);
                }
            }
        }
        inv
    }

    /// Edge atom for s1/s2 and IB6/IB7: distinct with `R(a,b) = {a,b}`.
    #[inline]
    fn edge(&self, a: usize) -> VertexSet {
        self.pairs[a].without(a)
    }
}

fn first_violation(r: &TransitFunction, a: AxiomId) -> Option<Vec<usize>> {
    let n = r.n();
    let t = Tables::new(r);
    let all = VertexSet::full(n);
    match a {
        T1 | IB1 => {
            for u in 0..n {
                for v in 0..n {
                    if !r.get(u, v).contains(u) {
                        return Some(vec![u, v]);
                    }
                }
            }
            None
        }
        T2 => {
            for u in 0..n {
                for v in 0..n {
                    if r.get(u, v) != r.get(v, u) {
                        return Some(vec![u, v]);
                    }
                }
            }
            None
        }
        T3 => (0..n)
            .find(|&u| r.get(u, u) != VertexSet::singleton(u))
            .map(|u| vec![u]),
        B1 => {
            for u in 0..n {
                for v in 0..n {
                    for x in r.get(u, v).without(v) {
                        if r.get(u, x).contains(v) {
                            return Some(vec![u, v, x]);
                        }
                    }
                }
            }
            None
        }
        B2 | IB4 => {
            for u in 0..n {
                for v in 0..n {
                    let s = r.get(u, v);
                    for x in s {
                        if let Some(y) = (r.get(u, x) - s).first() {
                            return Some(vec![u, v, x, y]);
                        }
                    }
                }
            }
            None
        }
        B3 => {
            for u in 0..n {
                for v in 0..n {
                    for x in r.get(u, v) {
                        for y in r.get(u, x) {
                            if !r.get(y, v).contains(x) {
                                return Some(vec![u, v, x, y]);
                            }
                        }
                    }
                }
            }
            None
        }
        B4 => {
            for u in 0..n {
                for v in 0..n {
                    for x in r.get(u, v) {
                        if r.get(u, x) & r.get(x, v) != VertexSet::singleton(x) {
                            return Some(vec![u, v, x]);
                        }
                    }
                }
            }
            None
        }
        J0 | J0p => {
            let inv = t.inverse();
            for u in 0..n {
                for x in 0..n {
                    if x == u {
                        continue;
                    }
                    // v with x not in R(u,v)
                    let not_ux = all - inv[u * n + x];
                    for y in 0..n {
                        if y == u || y == x || !r.get(u, y).contains(x) {
                            continue;
                        }
                        let quad = VertexSet::pair(u, x).with(y);
                        let cand = (inv[x * n + y] & not_ux) - quad;
                        for v in cand {
                            if a == J0 {
                                return Some(vec![u, x, y, v]);
                            }
                            let m = r.get(u, y) & r.get(x, v);
                            let four = quad.with(v);
                            if m.is_subset(four) && m != four {
                                return Some(vec![u, x, y, v]);
                            }
                        }
                    }
                }
            }
            None
        }
        Ta => {
            for u in 0..n {
                for v in t.pairs[u] {
                    let uv = r.get(u, v);
                    for w in 0..n {
                        let uw = r.get(u, w);
                        let vw = r.get(v, w);
                        if uv & uw == VertexSet::singleton(u)
                            && uv & vw == VertexSet::singleton(v)
                            && uw & vw == VertexSet::singleton(w)
                            && !(t.pairs[u].contains(w) && t.pairs[v].contains(w))
                        {
                            return Some(vec![u, v, w]);
                        }
                    }
                }
            }
            None
        }
        S1 | IB6 => {
            for u in 0..n {
                for ub in t.edge(u) {
                    for v in 0..n {
                        let uv = r.get(u, v);
                        if !uv.contains(ub) {
                            continue;
                        }
                        for vb in t.edge(v) & uv {
                            let s = r.get(ub, vb);
                            if s.contains(u) && !s.contains(v) {
                                return Some(vec![u, ub, v, vb]);
                            }
                        }
                    }
                }
            }
            None
        }
        S2 | IB7 => {
            for u in 0..n {
                for ub in t.edge(u) {
                    for v in 0..n {
                        let uv = r.get(u, v);
                        if !uv.contains(ub) {
                            continue;
                        }
                        for vb in t.edge(v) - uv {
                            if !r.get(ub, vb).contains(v) && !r.get(u, vb).contains(ub) {
                                return Some(vec![u, ub, v, vb]);
                            }
                        }
                    }
                }
            }
            None
        }
        Br => {
            for u in 0..n {
                for v in 0..n {
                    let s = r.get(u, v);
                    if s.is_empty() {
                        continue;
                    }
                    for x in 0..n {
                        if !r.is_pair(x, u) {
                            continue;
                        }
                        for y in t.pairs[x] {
                            if !r.is_pair(v, y) {
                                continue;
                            }
                            if let Some(z) = (s - t.pairs[x] - t.pairs[y]).first() {
                                return Some(vec![u, v, x, y, z]);
                            }
                        }
                    }
                }
            }
            None
        }
        Brp => {
            for u in 0..n {
                for v in 0..n {
                    let s = r.get(u, v);
                    for x in t.pairs[u] {
                        if !r.is_pair(x, v) {
                            continue;
                        }
                        if let Some(z) = (s - t.pairs[x]).first() {
                            return Some(vec![u, v, x, z]);
                        }
                    }
                }
            }
            None
        }
        IB2 => {
            for u in 0..n {
                for v in 0..n {
                    if let Some(x) = (r.get(u, v) - r.get(v, u)).first() {
                        return Some(vec![u, v, x]);
                    }
                }
            }
            None
        }
        IB3 => (0..n).find_map(|u| (r.get(u, u).without(u)).first().map(|x| vec![u, x])),
        IB5 => {
            let inv = t.inverse();
            for u in 0..n {
                for v in 0..n {
                    for w in 0..n {
                        if !r.get(u, w).contains(v) {
                            continue;
                        }
                        let cand = inv[u * n + v] & inv[u * n + w] & !inv[v * n + w];
                        if let Some(x) = cand.first() {
                            return Some(vec![u, v, w, x]);
                        }
                    }
                }
            }
            None
        }
    }
}
