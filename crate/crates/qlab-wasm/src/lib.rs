//! Browser demo bindings: three interactive views over unit-quadrance
//! graphs, each returning a JSON payload the static page renders onto a
//! canvas. The payload builders in the `views` module are plain Rust, so
//! `cargo test` exercises them without a browser.

mod views;

use wasm_bindgen::prelude::*;

fn to_js<T>(result: Result<T, String>) -> Result<T, JsValue> {
    result.map_err(|e| JsValue::from_str(&e))
}

/// D_q with a seeded greedy colouring: vertices, edges, unit circle,
/// colour classes.
#[wasm_bindgen]
pub fn graph_view(q: u32, seed: u32) -> Result<String, JsValue> {
    to_js(views::graph_view(q as u64, seed as u64))
}

/// The adjacency spectrum with the sqrt(q) / 2*sqrt(q) envelopes and the
/// ratio-theta and Hoffman bounds.
#[wasm_bindgen]
pub fn spectrum_view(q: u32) -> Result<String, JsValue> {
    to_js(views::spectrum_view(q as u64))
}

/// Two circles at quadrances i, j with centers at quadrance k apart:
/// their point sets, the brute-force intersection, and the square-class
/// prediction.
#[wasm_bindgen]
pub fn circle_view(q: u32, i: u32, j: u32, k: u32) -> Result<String, JsValue> {
    to_js(views::circle_view(q as u64, i as u64, j as u64, k as u64))
}
