//! Resolving `--graph`, `--transit` and `--spec` arguments.

use std::io::Read;
use std::path::Path;

use betweenness::fixtures::load_fixture;
use betweenness::formats::{is_constructor, parse_constructor, parse_edge_list, parse_graph6};
use betweenness::gated::AmalgamSpec;
use betweenness::transit::parse_transit;
use betweenness::{Graph, TransitFunction};

fn read_source(arg: &str) -> Result<String, String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(arg).map_err(|e| format!("reading {arg}: {e}"))
    }
}

/// A single whitespace-free token is graph6; anything else is an edge list.
fn parse_graph_text(text: &str) -> betweenness::Result<Graph> {
    let t = text.trim();
    let t = t.strip_prefix(">>graph6<<").unwrap_or(t);
    if !t.is_empty() && !t.contains(char::is_whitespace) {
        parse_graph6(t)
    } else {
        parse_edge_list(text)
    }
}

/// A constructor expression, `-` for stdin, a file path, or an inline
/// graph6 string, tried in that order.
pub fn load_graph(arg: &str) -> Result<Graph, String> {
    let from = |what: &str, r: betweenness::Result<Graph>| r.map_err(|e| format!("{what}: {e}"));
    if is_constructor(arg) {
        from(arg, parse_constructor(arg))
    } else if arg == "-" || Path::new(arg).is_file() {
        from(arg, parse_graph_text(&read_source(arg)?))
    } else {
        from(&format!("graph6 `{arg}`"), parse_graph6(arg))
    }
}

/// A file in the transit text format, `-` for stdin, or a catalogued
/// fixture as `fixtures/NAME` or `fixture:NAME`.
pub fn load_transit(arg: &str) -> Result<TransitFunction, String> {
    if arg == "-" || Path::new(arg).is_file() {
        return parse_transit(&read_source(arg)?).map_err(|e| format!("{arg}: {e}"));
    }
    let name = arg
        .strip_prefix("fixtures/")
        .or_else(|| arg.strip_prefix("fixture:"));
    match name {
        Some(name) => load_fixture(name).map_err(|e| e.to_string()),
        None => Err(format!("{arg}: no such file")),
    }
}

/// Inline JSON, `-` for stdin, or a path to a JSON file.
pub fn load_spec(arg: &str) -> Result<AmalgamSpec, String> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        read_source(arg)?
    };
    AmalgamSpec::from_json(&text).map_err(|e| e.to_string())
}

/// Parses `1,4, 5` into vertex indices.
pub fn parse_list(arg: &str) -> Result<Vec<usize>, String> {
    arg.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| format!("`{s}` is not a vertex index"))
        })
        .collect()
}
