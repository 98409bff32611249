//! Thin browser bindings. Each exported function has a plain Rust twin
//! returning `Result<_, String>` so it can be tested natively.

use schroder_core::bijection::{encode, psi};
use schroder_core::enumeration::series;
use schroder_core::render::render_svg;
use schroder_core::{parse_partition, parse_path, PathClass, Pattern};
use wasm_bindgen::prelude::*;

/// Largest input the page accepts; keeps the SVG readable.
pub const MAX_INPUT: usize = 60;
pub const MAX_ORDER: usize = 60;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drawn {
    pub path: String,
    pub svg: String,
}

fn check_len(n: usize) -> Result<(), String> {
    if n > MAX_INPUT {
        return Err(format!("input has {n} letters; the demo accepts at most {MAX_INPUT}"));
    }
    Ok(())
}

pub fn encode_partition(text: &str, pattern: &str) -> Result<Drawn, String> {
    let pattern: Pattern = pattern.parse().map_err(|e: schroder_core::Error| e.to_string())?;
    let pi = parse_partition(text).map_err(|e| e.to_string())?;
    check_len(pi.len())?;
    let path = encode(&pi, pattern).map_err(|e| e.to_string())?;
    Ok(Drawn { path: path.to_string(), svg: render_svg(&path) })
}

pub fn psi_path(text: &str) -> Result<Drawn, String> {
    let path = parse_path(text, PathClass::UhFree).map_err(|e| e.to_string())?;
    check_len(path.len())?;
    let image = psi(&path).map_err(|e| e.to_string())?;
    Ok(Drawn { path: image.to_string(), svg: render_svg(&image) })
}

pub fn series_coefficients(kind: &str, order: usize) -> Result<Vec<String>, String> {
    if order > MAX_ORDER {
        return Err(format!("order {order} exceeds {MAX_ORDER}"));
    }
    let kind = kind.parse().map_err(|e: schroder_core::Error| e.to_string())?;
    Ok(series(kind, order).coefficients.iter().map(|c| c.to_string()).collect())
}

#[wasm_bindgen]
pub struct Rendered {
    path: String,
    svg: String,
}

#[wasm_bindgen]
impl Rendered {
    #[wasm_bindgen(getter)]
    pub fn path(&self) -> String {
        self.path.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn svg(&self) -> String {
        self.svg.clone()
    }
}

impl From<Drawn> for Rendered {
    fn from(d: Drawn) -> Self {
        Rendered { path: d.path, svg: d.svg }
    }
}

#[wasm_bindgen(js_name = encodePartition)]
pub fn encode_partition_js(text: &str, pattern: &str) -> Result<Rendered, JsError> {
    encode_partition(text, pattern).map(Rendered::from).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = psiPath)]
pub fn psi_path_js(text: &str) -> Result<Rendered, JsError> {
    psi_path(text).map(Rendered::from).map_err(|e| JsError::new(&e))
}

/// Coefficients as decimal strings; they outgrow JS numbers quickly.
#[wasm_bindgen(js_name = seriesCoefficients)]
pub fn series_coefficients_js(kind: &str, order: usize) -> Result<Vec<String>, JsError> {
    series_coefficients(kind, order).map_err(|e| JsError::new(&e))
}
