//! Plain-text transit-function format.
//!
//! ```text
//! n 4
//! names u v x y        # optional
//! u x : u v x          # sets R(u,x) and R(x,u)
//! x u -> x u           # sets R(x,u) only
//! u u -> u v           # diagonal entries use the same syntax
//! ```
//!
//! Elements are named by index or, after a `names` line, by label. Pairs
//! not listed default to `R(u,v) = {u,v}` and `R(u,u) = {u}`. Later lines
//! override earlier ones.

use super::TransitFunction;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub fn parse_transit(text: &str) -> Result<TransitFunction> {
    let mut r: Option<TransitFunction> = None;
    let mut names: Option<Vec<String>> = None;
    let mut offset = 0;

    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let content = line.split('#').next().unwrap_or("");
        let tokens = tokens(content, start);
        let Some(&(at, head)) = tokens.first() else {
            continue;
        };

        let Some(func) = r.as_mut() else {
            if head != "n" || tokens.len() != 2 {
                return Err(Error::parse(at, "expected header `n <count>`"));
            }
            let n: usize = tokens[1]
                .1
                .parse()
                .map_err(|_| Error::parse(tokens[1].0, "element count must be an integer"))?;
            r = Some(
                TransitFunction::trivial(n)
                    .map_err(|e| Error::parse(tokens[1].0, e.to_string()))?,
            );
            continue;
        };

        if head == "names" {
            if names.is_some() {
                return Err(Error::parse(at, "duplicate `names` line"));
            }
            let list: Vec<String> = tokens[1..].iter().map(|t| t.1.to_string()).collect();
            if list.len() != func.n() {
                return Err(Error::parse(
                    at,
                    format!("{} names for {} elements", list.len(), func.n()),
                ));
            }
            for (i, (pos, name)) in tokens[1..].iter().enumerate() {
                if name.parse::<usize>().is_ok() || list[..i].iter().any(|m| m == name) {
                    return Err(Error::parse(*pos, format!("bad or repeated name `{name}`")));
                }
            }
            names = Some(list);
            continue;
        }

        let sep = tokens
            .iter()
            .position(|t| t.1 == ":" || t.1 == "->")
            .ok_or_else(|| Error::parse(at, "expected `u v : ...` or `u v -> ...`"))?;
        if sep != 2 {
            return Err(Error::parse(
                at,
                "expected exactly two elements before the separator",
            ));
        }
        let resolve = |(pos, tok): (usize, &str)| -> Result<usize> {
            let idx = match tok.parse::<usize>() {
                Ok(i) => Some(i),
                Err(_) => names
                    .as_ref()
                    .and_then(|ns| ns.iter().position(|m| m == tok)),
            };
            match idx {
                Some(i) if i < func.n() => Ok(i),
                Some(i) => Err(Error::parse(
                    pos,
                    format!("element {i} >= n = {}", func.n()),
                )),
                None => Err(Error::parse(pos, format!("unknown element `{tok}`"))),
            }
        };
        let u = resolve(tokens[0])?;
        let v = resolve(tokens[1])?;
        let mut set = VertexSet::EMPTY;
        for &tok in &tokens[3..] {
            set.insert(resolve(tok)?);
        }
        if tokens[2].1 == ":" {
            func.set_symmetric(u, v, set);
        } else {
            func.set(u, v, set);
        }
    }

    let r = r.ok_or_else(|| Error::parse(text.len(), "missing header `n <count>`"))?;
    match names {
        Some(ns) => r.with_labels(ns),
        None => Ok(r),
    }
}

/// Emits the text format, listing only entries that differ from the
/// default. Symmetric entries use `:`.
pub fn emit_transit(r: &TransitFunction) -> String {
    let n = r.n();
    let mut s = format!("n {n}\n");
    if let Some(labels) = r.labels() {
        s.push_str(&format!("names {}\n", labels.join(" ")));
    }
    let name = |v: usize| r.label(v);
    let body = |set: VertexSet| set.iter().map(name).collect::<Vec<_>>().join(" ");
    let line = |u: usize, v: usize, sep: &str, set: VertexSet| {
        let b = body(set);
        if b.is_empty() {
            format!("{} {} {sep}\n", name(u), name(v))
        } else {
            format!("{} {} {sep} {b}\n", name(u), name(v))
        }
    };
    for u in 0..n {
        if r.get(u, u) != VertexSet::singleton(u) {
            s.push_str(&line(u, u, "->", r.get(u, u)));
        }
        for v in u + 1..n {
            let (a, b) = (r.get(u, v), r.get(v, u));
            let default = VertexSet::pair(u, v);
            if a == b {
                if a != default {
                    s.push_str(&line(u, v, ":", a));
                }
            } else {
                if a != default {
                    s.push_str(&line(u, v, "->", a));
                }
                if b != default {
                    s.push_str(&line(v, u, "->", b));
                }
            }
        }
    }
    s
}

fn tokens(line: &str, base: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut pos = 0;
    for tok in line.split_whitespace() {
        let at = line[pos..].find(tok).map_or(pos, |i| pos + i);
        out.push((base + at, tok));
        pos = at + tok.len();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_cycle;

    #[test]
    fn defaults_and_overrides() {
        let r = parse_transit("n 3\n0 2 : 0 1 2\n2 0 -> 2 0\n1 1 -> 1 2\n").unwrap();
        assert_eq!(r.get(0, 2), VertexSet::full(3));
        assert_eq!(r.get(2, 0), VertexSet::pair(0, 2));
        assert_eq!(r.get(1, 1), VertexSet::pair(1, 2));
        assert_eq!(r.get(0, 1), VertexSet::pair(0, 1));
        assert_eq!(r.get(0, 0), VertexSet::singleton(0));
    }

    #[test]
    fn names_resolve() {
        let r = parse_transit("n 3 # three\nnames a b c\na c : a b c\n").unwrap();
        assert_eq!(r.get(2, 0), VertexSet::full(3));
        assert_eq!(r.label(1), "b");
    }

    #[test]
    fn round_trip() {
        let mut r = make_cycle(6).unwrap().interval_function().unwrap();
        r.set(3, 1, VertexSet::EMPTY);
        r.set(4, 4, VertexSet::pair(4, 5));
        assert_eq!(parse_transit(&emit_transit(&r)).unwrap(), r);
        let named = r
            .clone()
            .with_labels(["a", "b", "c", "d", "e", "f"])
            .unwrap();
        let back = parse_transit(&emit_transit(&named)).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.labels(), named.labels());
    }

    #[test]
    fn error_offsets() {
        let err = parse_transit("n 2\n0 5 : 0\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                offset: 6,
                message: "element 5 >= n = 2".into()
            }
        );
        assert!(matches!(
            parse_transit("0 1 : 0 1"),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(parse_transit(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_transit("n 2\n0 1 0\n"),
            Err(Error::Parse { offset: 4, .. })
        ));
        assert!(matches!(
            parse_transit("n 2\nnames a\n"),
            Err(Error::Parse { .. })
        ));
    }
}
