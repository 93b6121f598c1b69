//! Browser bindings. Every function takes plain strings or numbers and
//! returns a JSON string, so the page needs no bundler.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use coverreg_core::graph::Graph;
use coverreg_core::ideal::cover_ideal;
use coverreg_core::oracle::predict::{self, MultipartiteRange};
use coverreg_core::resolution::{betti_table, BettiOptions, BettiTable, Field};
use coverreg_core::spec::IdealSpec;
use coverreg_core::Error;

fn js_err(e: Error) -> JsValue {
    JsValue::from_str(&e.to_string())
}

fn options(field: u32) -> Result<BettiOptions, JsValue> {
    let field = Field::from_characteristic(field as u64).map_err(js_err)?;
    Ok(BettiOptions::with_field(field))
}

fn compute(spec_json: &str, field: u32) -> Result<(IdealSpec, BettiTable), JsValue> {
    let spec = IdealSpec::from_json(spec_json).map_err(js_err)?;
    let ideal = spec.build().map_err(js_err)?;
    let table = betti_table(&ideal, &options(field)?).map_err(js_err)?;
    Ok((spec, table))
}

fn parse_parts(parts: &str) -> Result<Vec<usize>, JsValue> {
    parts
        .split(',')
        .map(|p| p.trim())
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| JsValue::from_str(&format!("bad part size '{p}'")))
        })
        .collect()
}

/// Betti table of `R/I` for an ideal spec, with the invariants read off it.
#[wasm_bindgen]
pub fn betti(spec_json: &str, field: u32) -> Result<String, JsValue> {
    let (spec, t) = compute(spec_json, field)?;
    let reg = t.regularity();
    let out = json!({
        "spec": spec,
        "grid": t.to_grid(),
        "entries": t.entries(),
        "betti_vector": t.betti_vector(),
        "reg": reg.ideal,
        "reg_quotient": reg.quotient,
        "pdim": t.pdim(),
        "depth": t.depth(),
        "linear": t.is_linear(),
        "field": t.field().characteristic(),
    });
    Ok(out.to_string())
}

/// Reduced Hilbert series of `R/I` and the first coefficients of its expansion.
#[wasm_bindgen]
pub fn hilbert(spec_json: &str, field: u32, terms: u32) -> Result<String, JsValue> {
    let (_, t) = compute(spec_json, field)?;
    let h = t.hilbert_series();
    let out = json!({
        "numerator": h.reduced_numerator.to_string(),
        "numerator_coeffs": h.reduced_numerator.coeffs(),
        "pole_order": h.dimension(),
        "weights": h.denominator_degrees,
        "series": h.expand(terms as usize),
    });
    Ok(out.to_string())
}

fn prediction(parts: &[usize], s: usize) -> Value {
    if parts.len() == 2 {
        let (m, n) = (parts[0].min(parts[1]), parts[0].max(parts[1]));
        return match predict::predict_reg_complete_bipartite(m, n, s) {
            Ok(v) => json!({ "value": v, "status": "theorem" }),
            Err(_) => Value::Null,
        };
    }
    let formula = match predict::multipartite_max_formula(parts, s) {
        Ok(v) => v,
        Err(_) => return Value::Null,
    };
    let status = match predict::multipartite_range(parts.len(), s) {
        Some(MultipartiteRange::Theorem) => "theorem",
        Some(MultipartiteRange::Conjecture) => "conjecture",
        None => "outside stated range",
    };
    json!({ "value": formula, "status": status })
}

/// `reg(J^s)` from the engine against the closed-form prediction for the
/// complete multipartite graph with the given part sizes, `s = 1..=max_s`.
#[wasm_bindgen]
pub fn regularity_curve(parts: &str, max_s: u32, field: u32) -> Result<String, JsValue> {
    let parts = parse_parts(parts)?;
    let g = Graph::complete_multipartite(&parts).map_err(js_err)?;
    let j = cover_ideal(&g, true).map_err(js_err)?;
    let opts = options(field)?;
    let mut points = Vec::new();
    for s in 1..=max_s.max(1) {
        let engine = match j.power(s).and_then(|p| betti_table(&p, &opts)) {
            Ok(t) => json!(t.regularity().ideal),
            Err(e) if e.is_resource_cap() => json!(format!("skipped: {e}")),
            Err(e) => return Err(js_err(e)),
        };
        points.push(json!({
            "s": s,
            "engine": engine,
            "predicted": prediction(&parts, s as usize),
        }));
    }
    Ok(json!({ "parts": parts, "points": points }).to_string())
}
