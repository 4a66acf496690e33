//! Plain-Rust implementations behind the wasm exports. Everything takes and
//! returns strings so the JavaScript side stays trivial.

use serde_json::json;

use betweenness::formats::{emit_graph6, is_constructor, parse_constructor, parse_graph6};
use betweenness::metric::classify;
use betweenness::transit::{check_axioms, AxiomId};
use betweenness::Graph;

/// Largest graph the page will edit; the drawing gets crowded beyond it.
pub const MAX_ORDER: usize = 16;

fn graph(graph6: &str) -> Result<Graph, String> {
    let g = parse_graph6(graph6.trim()).map_err(|e| e.to_string())?;
    if g.n() > MAX_ORDER {
        return Err(format!("the demo handles at most {MAX_ORDER} vertices"));
    }
    Ok(g)
}

pub fn load(expr: &str) -> Result<String, String> {
    let g = if is_constructor(expr) {
        parse_constructor(expr).map_err(|e| e.to_string())?
    } else {
        graph(expr)?
    };
    if g.n() > MAX_ORDER {
        return Err(format!("the demo handles at most {MAX_ORDER} vertices"));
    }
    Ok(emit_graph6(&g))
}

pub fn toggle_edge(graph6: &str, u: usize, v: usize) -> Result<String, String> {
    let mut g = graph(graph6)?;
    if g.has_edge(u, v) {
        g.remove_edge(u, v);
    } else {
        g.add_edge(u, v).map_err(|e| e.to_string())?;
    }
    Ok(emit_graph6(&g))
}

pub fn describe(graph6: &str) -> Result<String, String> {
    let g = graph(graph6)?;
    Ok(json!({
        "n": g.n(),
        "edges": g.edges().collect::<Vec<_>>(),
        "connected": g.is_connected(),
    })
    .to_string())
}

pub fn interval(graph6: &str, u: usize, v: usize) -> Result<String, String> {
    let g = graph(graph6)?;
    let set = g.interval(u, v).map_err(|e| e.to_string())?;
    let d = g.distances();
    let layers: Vec<(usize, u32)> = set.iter().map(|x| (x, d.raw(u, x))).collect();
    Ok(json!({ "u": u, "v": v, "distance": d.raw(u, v), "vertices": layers }).to_string())
}

pub fn analyze(graph6: &str) -> Result<String, String> {
    let g = graph(graph6)?;
    let report = classify(&g).map_err(|e| e.to_string())?;
    let r = g.interval_function().map_err(|e| e.to_string())?;
    let axioms: Vec<_> = check_axioms(&r, &AxiomId::ALL)
        .into_iter()
        .map(
            |rep| json!({ "axiom": rep.axiom, "holds": rep.holds, "explanation": rep.explain(&r) }),
        )
        .collect();
    Ok(json!({ "classification": report, "axioms": axioms }).to_string())
}
