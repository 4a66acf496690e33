//! Browser bindings: the page keeps a graph as a graph6 string and calls
//! these functions to edit it, highlight intervals and classify it.

use wasm_bindgen::prelude::*;

pub mod api;

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

/// Graph6 for a constructor expression such as `wheel:5`, or a graph6
/// string passed through after validation.
#[wasm_bindgen]
pub fn load(expr: &str) -> Result<String, JsValue> {
    js(api::load(expr))
}

/// Adds the edge `uv` if absent, removes it otherwise.
#[wasm_bindgen]
pub fn toggle_edge(graph6: &str, u: usize, v: usize) -> Result<String, JsValue> {
    js(api::toggle_edge(graph6, u, v))
}

/// `{"n": .., "edges": [[u, v], ..]}`.
#[wasm_bindgen]
pub fn describe(graph6: &str) -> Result<String, JsValue> {
    js(api::describe(graph6))
}

/// The vertices on shortest `u`-`v` paths, with their distance from `u`.
#[wasm_bindgen]
pub fn interval(graph6: &str, u: usize, v: usize) -> Result<String, JsValue> {
    js(api::interval(graph6, u, v))
}

/// Classification report plus axiom verdicts on the interval function.
#[wasm_bindgen]
pub fn analyze(graph6: &str) -> Result<String, JsValue> {
    js(api::analyze(graph6))
}
