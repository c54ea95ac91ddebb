//! Browser bindings: each export takes an edge list and returns JSON.
//!
//! The `*_json` functions hold the logic so they can be tested natively.

use serde_json::json;
use wasm_bindgen::prelude::*;

use toricrank::complex::{self, DimensionSet};
use toricrank::ideal::{self, GDegree, GeneratorOptions};
use toricrank::{invariants, Graph};

/// Keeps a stray paste from freezing the tab.
const MAX_EDGES: usize = 21;

fn graph(text: &str) -> Result<Graph, String> {
    let g = Graph::parse(text).map_err(|e| e.to_string())?;
    if g.m() > MAX_EDGES {
        return Err(format!("{} edges; the demo stops at {MAX_EDGES}", g.m()));
    }
    Ok(g)
}

fn edges(g: &Graph) -> Vec<[usize; 2]> {
    g.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect()
}

pub fn analyze_json(text: &str) -> Result<String, String> {
    let g = graph(text)?;
    let r = invariants::report(&g, None).map_err(|e| e.to_string())?;
    Ok(json!({ "n": g.n(), "edges": edges(&g), "report": r }).to_string())
}

pub fn complex_json(text: &str, j: &str) -> Result<String, String> {
    let g = graph(text)?;
    let j: DimensionSet = j.parse().map_err(|e: toricrank::Error| e.to_string())?;
    let d = complex::build_delta(&g, complex::DEFAULT_MAX_FACE_CARD).map_err(|e| e.to_string())?;
    let dump = complex::dump(&d, &[j]).map_err(|e| e.to_string())?;
    let labels: Vec<Vec<String>> =
        d.vertices.iter().map(|s| s.0.iter().map(|&e| g.edge_label(e)).collect()).collect();
    Ok(json!({ "n": g.n(), "edges": edges(&g), "labels": labels, "complex": dump }).to_string())
}

pub fn fiber_json(text: &str, degree: &str) -> Result<String, String> {
    let g = graph(text)?;
    let b = GDegree::parse(degree, g.n()).map_err(|e| e.to_string())?;
    let set = ideal::minimal_generating_set(&g, &GeneratorOptions::default()).map_err(|e| e.to_string())?;
    let fiber = ideal::enumerate_fiber(&g, &b).map_err(|e| e.to_string())?;
    if fiber.members.len() > 500 {
        return Err(format!("fiber has {} monomials; the demo draws at most 500", fiber.members.len()));
    }
    let fiber = ideal::fiber_graph(fiber, &set.binomials());
    let members: Vec<String> = fiber.members.iter().map(|x| x.format(&g)).collect();
    let gens: Vec<String> = set.generators.iter().map(|x| x.binomial.format(&g)).collect();
    Ok(json!({
        "members": members,
        "moves": fiber.adjacency,
        "connected": fiber.connected,
        "generators": gens,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn analyze(text: &str) -> Result<String, JsValue> {
    analyze_json(text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn complex(text: &str, j: &str) -> Result<String, JsValue> {
    complex_json(text, j).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn fiber(text: &str, degree: &str) -> Result<String, JsValue> {
    fiber_json(text, degree).map_err(|e| JsValue::from_str(&e))
}
