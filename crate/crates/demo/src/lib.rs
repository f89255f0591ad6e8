//! WebAssembly bindings behind `www/index.html`. Each exported function
//! returns a JSON string; the `*_json` functions hold the logic and are
//! usable (and tested) without a browser.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use hopflab::builders::{Construction, GroupTable};
use hopflab::ff::{Fe, Field, Modulus};
use hopflab::indicators::indicator_table;
use hopflab::io;
use hopflab::pipeline::{analyze, Analysis, PipelineOptions};
use hopflab::HopfAlgebra;

fn build(group: &str, construction: &str, p: u32, k: u32) -> Result<HopfAlgebra, String> {
    let g = GroupTable::by_name(group).map_err(|e| e.to_string())?;
    let c: Construction = construction.parse().map_err(|e: hopflab::Error| e.to_string())?;
    let f = Field::new(p as u64, k as usize, Modulus::Auto).map_err(|e| e.to_string())?;
    c.build(&g, &f).map_err(|e| e.to_string())
}

fn run(h: &HopfAlgebra) -> Result<Analysis, String> {
    let opts = PipelineOptions {
        extend_field: true,
        ..Default::default()
    };
    analyze(h, opts).map_err(|e| e.to_string())
}

fn values(f: &Field, v: &[Fe]) -> Value {
    json!(v.iter().map(|&x| f.format(x)).collect::<Vec<_>>())
}

/// Indicator table `nu_n(V_i)` for `n` in `from..=to`.
pub fn indicators_json(group: &str, construction: &str, p: u32, k: u32, from: i32, to: i32) -> Result<String, String> {
    if from > to || to - from > 24 {
        return Err("choose a range of at most 25 values".into());
    }
    let a = run(&build(group, construction, p, k)?)?;
    let h = &a.algebra;
    let f = h.field();
    let t = indicator_table(h, &a.integrals, &a.wedderburn, (from as i64, to as i64)).map_err(|e| e.to_string())?;
    let rows: Vec<Value> = t
        .rows
        .iter()
        .zip(&a.wedderburn.dims)
        .map(|(r, d)| json!({"dim": d, "values": values(f, r)}))
        .collect();
    Ok(json!({
        "field": f.to_string(),
        "dim": h.dim(),
        "n": t.ns().collect::<Vec<_>>(),
        "rows": rows,
        "regular": values(f, &t.regular_row),
    })
    .to_string())
}

/// Block sizes, Schur elements and the element `u`.
pub fn blocks_json(group: &str, construction: &str, p: u32, k: u32) -> Result<String, String> {
    let a = run(&build(group, construction, p, k)?)?;
    let f = a.algebra.field();
    let wd = &a.wedderburn;
    let blocks: Vec<Value> = (0..wd.len())
        .map(|i| json!({"dim": wd.dims[i], "schur": f.format(wd.schur[i]), "character": values(f, &wd.characters[i])}))
        .collect();
    Ok(json!({
        "field": f.to_string(),
        "dim": a.algebra.dim(),
        "u": values(f, &a.integrals.u),
        "eps_of_integral": f.format(a.integrals.eps_of_integral),
        "blocks": blocks,
    })
    .to_string())
}

/// Parses a `hopf v1` document and runs every identity check on it.
pub fn verify_text_json(text: &str) -> Result<String, String> {
    let h = io::parse_hopf(text).map_err(|e| e.to_string())?;
    let a = run(&h)?;
    let report = a.identity_suite((-4, 6)).map_err(|e| e.to_string())?;
    Ok(json!({
        "dim": h.dim(),
        "field": a.algebra.field().to_string(),
        "passed": report.all_passed(),
        "checks": report.checks,
    })
    .to_string())
}

/// Serialized `hopf v1` text for a built-in construction.
pub fn algebra_text(group: &str, construction: &str, p: u32, k: u32) -> Result<String, String> {
    Ok(io::serialize_hopf(&build(group, construction, p, k)?))
}

fn js<T>(r: Result<T, String>) -> Result<T, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn indicators(group: &str, construction: &str, p: u32, k: u32, from: i32, to: i32) -> Result<String, JsValue> {
    js(indicators_json(group, construction, p, k, from, to))
}

#[wasm_bindgen]
pub fn blocks(group: &str, construction: &str, p: u32, k: u32) -> Result<String, JsValue> {
    js(blocks_json(group, construction, p, k))
}

#[wasm_bindgen]
pub fn verify_text(text: &str) -> Result<String, JsValue> {
    js(verify_text_json(text))
}

#[wasm_bindgen]
pub fn example_text(group: &str, construction: &str, p: u32, k: u32) -> Result<String, JsValue> {
    js(algebra_text(group, construction, p, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_indicators() {
        let v: Value = serde_json::from_str(&indicators_json("s3", "group", 7, 1, 1, 3).unwrap()).unwrap();
        assert_eq!(v["rows"].as_array().unwrap().len(), 3);
        assert_eq!(v["regular"][1], "[4]");
    }

    #[test]
    fn small_field_is_extended() {
        let v: Value = serde_json::from_str(&blocks_json("c3", "group", 5, 1).unwrap()).unwrap();
        assert!(v["field"].as_str().unwrap().starts_with("GF(5^2"));
        assert_eq!(v["blocks"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn verifies_pasted_text() {
        let text = algebra_text("c2", "double", 5, 1).unwrap();
        let v: Value = serde_json::from_str(&verify_text_json(&text).unwrap()).unwrap();
        assert_eq!(v["passed"], true);
        assert!(verify_text_json("hopf v1\n").is_err());
    }

    #[test]
    fn bad_input_is_an_error() {
        assert!(indicators_json("s3", "group", 3, 1, 1, 3).is_err());
        assert!(indicators_json("s3", "group", 7, 1, 1, 100).is_err());
        assert!(blocks_json("nope", "group", 7, 1).is_err());
    }
}
