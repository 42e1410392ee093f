//! Browser bindings: draw tropical curves and painted complexes of planar
//! configurations, and lay out multiplihedra.

use tropaint::geometry::{parse_rational, Vector};
use tropaint::io::{parse_configuration, parse_vector, to_json, LatticeJson};
use tropaint::multiplihedra::{multiplihedron_lattice, painted_trees};
use tropaint::painting::{paint, PaintSpec};
use tropaint::subdivision::Lifting;
use tropaint::svg::{hasse_svg, painted_svg as draw_painted, tropical_svg as draw_tropical, BBox};
use tropaint::tropical::dual_complex;
use tropaint::{Error, Result};
use wasm_bindgen::prelude::*;

fn lifting(n: usize, text: &str) -> Result<Lifting> {
    let eta = Lifting(parse_vector(text)?);
    if eta.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: eta.len() });
    }
    Ok(eta)
}

fn bbox(text: &str) -> Result<Option<BBox>> {
    if text.trim().is_empty() {
        Ok(None)
    } else {
        BBox::parse(text).map(Some)
    }
}

/// SVG of the tropical curve with coefficients `eta`; `bbox` may be empty.
pub fn render_tropical(config_json: &str, eta: &str, bbox_text: &str) -> Result<String> {
    let config = parse_configuration(config_json)?;
    let (p, _) = dual_complex(&config, &lifting(config.len(), eta)?)?;
    draw_tropical(&p, None, bbox(bbox_text)?)
}

/// SVG of the painted complex for level `c` and point `alpha`.
pub fn render_painted(config_json: &str, eta: &str, c: &str, alpha: &str, bbox_text: &str) -> Result<String> {
    let config = parse_configuration(config_json)?;
    let spec =
        PaintSpec { eta: lifting(config.len(), eta)?, c: parse_rational(c)?, alpha: Vector::new(parse_vector(alpha)?) };
    let (p, _) = dual_complex(&config, &spec.eta)?;
    draw_painted(&paint(&p, &spec)?, bbox(bbox_text)?)
}

/// Hasse diagram of the painted trees with `m` leaves.
pub fn render_multiplihedron(m: usize) -> Result<String> {
    Ok(hasse_svg(&multiplihedron_lattice(m)?))
}

/// Face lattice of the painted trees with `m` leaves as JSON, plus the vertex labels.
pub fn describe_multiplihedron(m: usize) -> Result<String> {
    let lattice = multiplihedron_lattice(m)?;
    let vertices: Vec<String> = painted_trees(m)?.iter().filter(|t| t.is_binary()).map(|t| t.to_string()).collect();
    Ok(format!(
        "{{\"vertices\": {},\n\"lattice\": {}}}\n",
        to_json(&vertices).trim_end(),
        to_json(&LatticeJson::of(&lattice)).trim_end()
    ))
}

fn js(r: Result<String>) -> std::result::Result<String, JsError> {
    r.map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub fn tropical_svg(config_json: &str, eta: &str, bbox: &str) -> std::result::Result<String, JsError> {
    js(render_tropical(config_json, eta, bbox))
}

#[wasm_bindgen]
pub fn painted_svg(
    config_json: &str,
    eta: &str,
    c: &str,
    alpha: &str,
    bbox: &str,
) -> std::result::Result<String, JsError> {
    js(render_painted(config_json, eta, c, alpha, bbox))
}

#[wasm_bindgen]
pub fn multiplihedron_svg(m: usize) -> std::result::Result<String, JsError> {
    js(render_multiplihedron(m))
}

#[wasm_bindgen]
pub fn multiplihedron_json(m: usize) -> std::result::Result<String, JsError> {
    js(describe_multiplihedron(m))
}
