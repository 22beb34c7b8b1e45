//! WebAssembly bindings for the browser page in `www/`. The plain functions
//! do the work and are tested natively; the `wasm_*` wrappers only convert
//! errors.

use std::f64::consts::PI;
use std::fmt::Write;

use onerel::primitivity::{cut_vertex_condition, f2_necessary_condition, whitehead_minimize};
use onerel::{parse_word, parse_word_inferred, CyclicWord, Letter, Presentation, WhiteheadGraph};
use serde_json::json;
use wasm_bindgen::prelude::*;

const SIZE: f64 = 360.0;
const RADIUS: f64 = 140.0;

fn position(k: usize, count: usize) -> (f64, f64) {
    let angle = 2.0 * PI * k as f64 / count as f64 - PI / 2.0;
    (SIZE / 2.0 + RADIUS * angle.cos(), SIZE / 2.0 + RADIUS * angle.sin())
}

/// SVG drawing of the Whitehead graph of `word`, cut vertices in red.
/// Parallel edges fan out as quadratic curves.
pub fn whitehead_svg(word: &str, cyclic: bool) -> Result<String, String> {
    let w = parse_word_inferred(word, 2).map_err(|e| e.to_string())?;
    let graph = if cyclic { WhiteheadGraph::of_cyclic(&CyclicWord::new(&w)) } else { WhiteheadGraph::of_word(&w) };
    let vertices: Vec<Letter> = Letter::all(graph.rank()).collect();
    let at = |v: Letter| position(vertices.iter().position(|&u| u == v).unwrap(), vertices.len());
    let cut = graph.cut_vertices();

    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {SIZE} {SIZE}\" width=\"{SIZE}\" height=\"{SIZE}\">\n"
    );
    for (&(a, b), &m) in graph.edges() {
        let ((x1, y1), (x2, y2)) = (at(a), at(b));
        let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
        let len = (x2 - x1).hypot(y2 - y1).max(1.0);
        let (nx, ny) = (-(y2 - y1) / len, (x2 - x1) / len);
        for k in 0..m {
            let bend = (k as f64 - (m - 1) as f64 / 2.0) * 18.0;
            let _ = writeln!(
                svg,
                "  <path d=\"M{x1:.1} {y1:.1} Q{:.1} {:.1} {x2:.1} {y2:.1}\" fill=\"none\" stroke=\"#555\"/>",
                mx + 2.0 * bend * nx,
                my + 2.0 * bend * ny
            );
        }
    }
    for &v in &vertices {
        let (x, y) = at(v);
        let fill = if cut.contains(&v) { "#d33" } else if graph.degree(v) == 0 { "#ddd" } else { "#48c" };
        let _ = writeln!(svg, "  <circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"14\" fill=\"{fill}\"/>");
        let _ = writeln!(
            svg,
            "  <text x=\"{x:.1}\" y=\"{:.1}\" text-anchor=\"middle\" font-size=\"12\" fill=\"#fff\">{v}</text>",
            y + 4.0
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Hypothesis report for the relator as JSON.
pub fn check_relator(rank: usize, relator: &str) -> Result<String, String> {
    let r = parse_word(relator, rank).map_err(|e| e.to_string())?;
    let p = Presentation::new(rank, r).map_err(|e| e.to_string())?;
    let report = p.hypothesis_check();
    let failed: Vec<String> = report.failed.iter().map(|f| f.to_string()).collect();
    let mut value = serde_json::to_value(&report).map_err(|e| e.to_string())?;
    value["passed"] = json!(report.passed());
    value["failed_text"] = json!(failed);
    Ok(value.to_string())
}

/// Primitivity verdict, minimal form and the two necessary conditions.
pub fn primitivity(word: &str) -> Result<String, String> {
    let w = parse_word_inferred(word, 2).map_err(|e| e.to_string())?;
    if w.is_empty() {
        return Err("the empty word is not primitive".into());
    }
    let trace = whitehead_minimize(&w);
    let core = w.cyclic_reduce().core;
    let cut = cut_vertex_condition(&core).ok();
    let f2 = if w.rank() == 2 { f2_necessary_condition(&core).ok() } else { None };
    Ok(json!({
        "word": w.to_string(),
        "rank": w.rank(),
        "primitive": trace.minimal.len() == 1,
        "minimal": trace.minimal.to_string(),
        "steps": trace.steps.iter().map(|s| s.length).collect::<Vec<_>>(),
        "cut_vertex_condition": cut,
        "f2_condition": f2,
    })
    .to_string())
}

#[wasm_bindgen(js_name = whiteheadSvg)]
pub fn wasm_whitehead_svg(word: &str, cyclic: bool) -> Result<String, JsValue> {
    whitehead_svg(word, cyclic).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = checkRelator)]
pub fn wasm_check_relator(rank: usize, relator: &str) -> Result<String, JsValue> {
    check_relator(rank, relator).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = primitivity)]
pub fn wasm_primitivity(word: &str) -> Result<String, JsValue> {
    primitivity(word).map_err(|e| JsValue::from_str(&e))
}
