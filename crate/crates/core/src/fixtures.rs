//! The twelve catalogued transit functions used to show that the axioms
//! are independent, each with the axiom profile it is documented to have.

use crate::error::{Error, Result};
use crate::graph::make_cycle;
use crate::transit::{AxiomId, TransitFunction};
use crate::vertex_set::VertexSet;
use AxiomId::*;

#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    /// Axioms documented to hold.
    pub holds: &'static [AxiomId],
    /// The one axiom documented to fail.
    pub fails: AxiomId,
    build: fn() -> TransitFunction,
}

impl Fixture {
    pub fn load(&self) -> TransitFunction {
        (self.build)()
    }

    /// Axioms whose verdict differs from the documented profile, as
    /// `(axiom, documented verdict)`.
    pub fn profile_mismatches(&self) -> Vec<(AxiomId, bool)> {
        let r = self.load();
        let mut out: Vec<(AxiomId, bool)> = self
            .holds
            .iter()
            .filter(|&&a| !r.satisfies(a))
            .map(|&a| (a, true))
            .collect();
        if r.satisfies(self.fails) {
            out.push((self.fails, false));
        }
        out
    }
}

pub const FIXTURES: [Fixture; 12] = [
    Fixture {
        name: "j0p-not-j0",
        description: "J0' holds vacuously while J0 fails",
        holds: &[T1, T2, T3, J0p],
        fails: J0,
        build: j0p_not_j0,
    },
    Fixture {
        name: "ex1",
        description: "R(u,v) = {u}: t1 fails",
        holds: &[T2, T3, B3, J0p, Ta],
        fails: T1,
        build: ex1,
    },
    Fixture {
        name: "ex2",
        description: "asymmetric table: t2 fails",
        holds: &[T1, T3, B3, J0p, Ta],
        fails: T2,
        build: ex2,
    },
    Fixture {
        name: "ex3",
        description: "R(u,u) = {u,v}: t3 fails",
        holds: &[T1, T2, B3, J0p, Ta],
        fails: T3,
        build: ex3,
    },
    Fixture {
        name: "j0p-not",
        description: "six points: J0' fails",
        holds: &[T1, T2, T3, B3, Ta],
        fails: J0p,
        build: j0p_not,
    },
    Fixture {
        name: "ta-not",
        description: "two long pairs: ta fails",
        holds: &[T1, T2, T3, B3, J0p],
        fails: Ta,
        build: ta_not,
    },
    Fixture {
        name: "b3-not",
        description: "R(u,v) = V: b3 fails",
        holds: &[T1, T2, T3, Ta, J0p],
        fails: B3,
        build: b3_not,
    },
    Fixture {
        name: "e1",
        description: "interval function of C8: J0' fails",
        holds: &[T1, T2, T3, Br, Ta, B3],
        fails: J0p,
        build: e1,
    },
    Fixture {
        name: "e2",
        description: "three long pairs: ta fails",
        holds: &[T1, T2, T3, Br, B3, J0p],
        fails: Ta,
        build: e2,
    },
    Fixture {
        name: "e3",
        description: "R(u,v) = V: b3 fails, br holds",
        holds: &[T1, T2, T3, Ta, Br, J0p],
        fails: B3,
        build: b3_not,
    },
    Fixture {
        name: "e4",
        description: "six points: br fails",
        holds: &[T1, T2, T3, Ta, B3, J0p],
        fails: Br,
        build: e4,
    },
    Fixture {
        name: "brp-not",
        description: "R(u,v) = R(x,z) = V: br' fails",
        holds: &[T1, T2, T3, Ta, B3, J0p],
        fails: Brp,
        build: brp_not,
    },
];

pub fn fixture(name: &str) -> Result<&'static Fixture> {
    FIXTURES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

pub fn load_fixture(name: &str) -> Result<TransitFunction> {
    fixture(name).map(Fixture::load)
}

/// Builds a function over single-character labels. `sym` entries set both
/// orders, `ordered` entries one order; everything else is the default
/// `R(a,b) = {a,b}`, `R(a,a) = {a}`.
fn build(labels: &str, sym: &[(&str, &str)], ordered: &[(&str, &str)]) -> TransitFunction {
    let names: Vec<char> = labels.chars().collect();
    let ix = |c: char| names.iter().position(|&m| m == c).expect("known label");
    let set = |s: &str| s.chars().map(ix).collect::<VertexSet>();
    let pair = |p: &str| {
        let mut it = p.chars();
        (ix(it.next().unwrap()), ix(it.next().unwrap()))
    };
    let mut r = TransitFunction::trivial(names.len()).unwrap();
    for &(p, s) in sym {
        let (a, b) = pair(p);
        r.set_symmetric(a, b, set(s));
    }
    for &(p, s) in ordered {
        let (a, b) = pair(p);
        r.set(a, b, set(s));
    }
    r.with_labels(names.iter().map(|c| c.to_string())).unwrap()
}

fn j0p_not_j0() -> TransitFunction {
    build(
        "abcde",
        &[("ac", "abce"), ("ad", "aed"), ("bd", "bcde")],
        &[],
    )
}

fn ex1() -> TransitFunction {
    build("uvxy", &[("uv", "u"), ("uy", "uxy"), ("vy", "vxy")], &[])
}

fn ex2() -> TransitFunction {
    build(
        "uvxy",
        &[("uy", "uvxy")],
        &[("ux", "uvx"), ("xu", "xu"), ("vy", "vxy"), ("yv", "yv")],
    )
}

fn ex3() -> TransitFunction {
    build("uvxy", &[("vx", "vux"), ("vy", "vuy")], &[("uu", "uv")])
}

fn j0p_not() -> TransitFunction {
    build(
        "uvwxyz",
        &[
            ("uv", "uwvz"),
            ("xv", "xwyv"),
            ("xz", "xyuz"),
            ("wz", "wuvz"),
            ("wy", "wxvy"),
        ],
        &[],
    )
}

fn ta_not() -> TransitFunction {
    build("uvwxy", &[("uw", "uxyw"), ("vx", "vywx")], &[])
}

fn b3_not() -> TransitFunction {
    build(
        "uvwxy",
        &[("uy", "uxyw"), ("xv", "xyvw"), ("uv", "uvwxy")],
        &[],
    )
}

fn e1() -> TransitFunction {
    make_cycle(8)
        .unwrap()
        .interval_function()
        .unwrap()
        .with_labels((1..=8).map(|i| format!("v{i}")))
        .unwrap()
}

fn e2() -> TransitFunction {
    build(
        "uvwxy",
        &[("uw", "uyw"), ("vx", "vywx"), ("ux", "uyx")],
        &[],
    )
}

fn e4() -> TransitFunction {
    build(
        "uvxyzw",
        &[
            ("uy", "uxzy"),
            ("uv", "uvzw"),
            ("xv", "xyzv"),
            ("xw", "xwzu"),
            ("wy", "wyzv"),
        ],
        &[],
    )
}

fn brp_not() -> TransitFunction {
    build("uvxz", &[("uv", "uvxz"), ("xz", "uvxz")], &[])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transit::check_axiom;

    #[test]
    fn catalogue_is_complete_and_unique() {
        assert_eq!(FIXTURES.len(), 12);
        for (i, f) in FIXTURES.iter().enumerate() {
            assert!(FIXTURES[..i].iter().all(|g| g.name != f.name));
            assert!(!f.holds.contains(&f.fails));
            assert_eq!(fixture(f.name).unwrap().name, f.name);
        }
        assert_eq!(
            load_fixture("nope").unwrap_err(),
            Error::UnknownFixture("nope".into())
        );
    }

    #[test]
    fn j0_fails_at_abcd() {
        let r = load_fixture("j0p-not-j0").unwrap();
        let rep = check_axiom(&r, J0);
        assert_eq!(rep.witness, Some(vec![0, 1, 2, 3]));
        assert!(r.satisfies(J0p));
    }

    #[test]
    fn ex1_fails_t1_at_vu() {
        let r = load_fixture("ex1").unwrap();
        // v is missing from R(v,u) = {u}
        assert_eq!(check_axiom(&r, T1).witness, Some(vec![1, 0]));
        assert_eq!(r.get(1, 0), VertexSet::singleton(0));
    }

    #[test]
    fn ex2_is_asymmetric() {
        let r = load_fixture("ex2").unwrap();
        assert_ne!(r.get(0, 2), r.get(2, 0));
        assert!(!r.satisfies(T2));
    }

    #[test]
    fn ex3_diagonal() {
        let r = load_fixture("ex3").unwrap();
        let rep = check_axiom(&r, T3);
        assert_eq!(rep.witness, Some(vec![0]));
        assert_eq!(rep.explain(&r), "t3: fails at (u=u); R(u,u)={u,v}");
    }

    #[test]
    fn e1_is_c8_and_fails_j0p() {
        let r = load_fixture("e1").unwrap();
        let rep = check_axiom(&r, J0p);
        assert!(!rep.holds);
        assert_eq!(rep.witness, Some(vec![0, 1, 2, 5]));
        // the tuple (v1, v3, v4, v6) is also a violation, just not the first
        assert!(!crate::transit::holds_at(&r, J0p, &[0, 2, 3, 5]));
    }
}
