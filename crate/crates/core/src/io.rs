//! JSON documents. Rationals are always written as strings such as `"-3/2"`.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::config::{sign_vector, PointConfiguration};
use crate::error::{Error, Result};
use crate::geometry::{parse_rational, AffineFunctional, Rational, Vector};
use crate::multiplihedra::MultiplihedronReport;
use crate::painting::{PaintSpec, PaintedComplex};
use crate::painting_polytope::TheoremReport;
use crate::secondary::{FaceLattice, GkzVector};
use crate::subdivision::{Lifting, Subdivision};
use crate::tropical::TropicalComplex;

/// A rational that serializes as a string and reads strings or integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q(pub Rational);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        struct QVisitor;
        impl Visitor<'_> for QVisitor {
            type Value = Q;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational as a string like \"-3/2\" or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Q, E> {
                parse_rational(v).map(Q).map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Q, E> {
                Ok(Q(Rational::from_integer(v.into())))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Q, E> {
                Ok(Q(Rational::from_integer(v.into())))
            }
        }
        d.deserialize_any(QVisitor)
    }
}

fn qs(v: &[Rational]) -> Vec<Q> {
    v.iter().cloned().map(Q).collect()
}

fn unq(v: Vec<Q>) -> Vec<Rational> {
    v.into_iter().map(|q| q.0).collect()
}

/// Two-space indented JSON with arrays of scalars kept on one line, and a
/// trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("documents serialize");
    let mut s = String::new();
    write_value(&mut s, &v, 0);
    s.push('\n');
    s
}

fn write_value(s: &mut String, v: &Value, indent: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            s.push_str(&format!("[{}]", parts.join(", ")));
        }
        Value::Array(items) => {
            s.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                s.push_str(&pad(indent + 1));
                write_value(s, x, indent + 1);
                s.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            s.push_str(&pad(indent));
            s.push(']');
        }
        Value::Object(map) if map.is_empty() => s.push_str("{}"),
        Value::Object(map) => {
            s.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                s.push_str(&format!("{}{}: ", pad(indent + 1), Value::String(k.clone())));
                write_value(s, x, indent + 1);
                s.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            s.push_str(&pad(indent));
            s.push('}');
        }
        scalar => s.push_str(&scalar.to_string()),
    }
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        let full = e.to_string();
        let message = full.rfind(" at line ").map_or(full.as_str(), |i| &full[..i]);
        Error::Parse(format!("line {}, column {}: {message}", e.line(), e.column()))
    })
}

/// A list of rationals written `[1, -2, 3/4]`, with or without brackets or quotes.
pub fn parse_vector(text: &str) -> Result<Vec<Rational>> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']').trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|t| parse_rational(t.trim().trim_matches('"'))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigurationJson {
    pub points: Vec<Vec<Q>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl ConfigurationJson {
    pub fn of(config: &PointConfiguration) -> Self {
        ConfigurationJson {
            points: config.points().iter().map(|p| qs(p.coords())).collect(),
            labels: Some(config.labels().to_vec()),
        }
    }

    pub fn build(self) -> Result<PointConfiguration> {
        let points: Vec<Vector> = self.points.into_iter().map(|p| Vector::new(unq(p))).collect();
        if let Some(d) = points.first().map(Vector::dim) {
            if let Some(bad) = points.iter().find(|p| p.dim() != d) {
                return Err(Error::DimensionMismatch { expected: d, found: bad.dim() });
            }
        }
        match self.labels {
            Some(labels) => PointConfiguration::with_labels(points, labels),
            None => crate::config::build_configuration(points),
        }
    }
}

pub fn parse_configuration(text: &str) -> Result<PointConfiguration> {
    from_json::<ConfigurationJson>(text)?.build()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineJson {
    pub linear: Vec<Q>,
    pub constant: Q,
}

impl AffineJson {
    fn of(f: &AffineFunctional) -> Self {
        AffineJson { linear: qs(f.linear.coords()), constant: Q(f.constant.clone()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    pub vertices: Vec<usize>,
    pub marks: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub support: Option<AffineJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionJson {
    pub configuration: ConfigurationJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<Vec<Q>>,
    pub cells: Vec<CellJson>,
}

impl SubdivisionJson {
    pub fn of(config: &PointConfiguration, eta: Option<&Lifting>, s: &Subdivision) -> Self {
        SubdivisionJson {
            configuration: ConfigurationJson::of(config),
            eta: eta.map(|e| qs(&e.0)),
            cells: s
                .maximal_cells()
                .iter()
                .map(|c| CellJson {
                    vertices: c.vertices.clone(),
                    marks: c.marks.clone(),
                    support: c.support.as_ref().map(AffineJson::of),
                })
                .collect(),
        }
    }
}

/// A subdivision document back to its configuration and marked cells.
pub fn parse_subdivision(text: &str) -> Result<(PointConfiguration, Subdivision)> {
    let doc: SubdivisionJson = from_json(text)?;
    let config = doc.configuration.build()?;
    let s = Subdivision::from_marks(&config, doc.cells.into_iter().map(|c| c.marks).collect())?;
    Ok((config, s))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    /// Marks of the dual maximal cell.
    pub cell: Vec<usize>,
    pub point: Vec<Q>,
    pub value: Q,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TropicalCellJson {
    pub dim: usize,
    pub marking: Vec<usize>,
    /// Indices into `vertices`.
    pub vertices: Vec<usize>,
    pub rays: Vec<Vec<Q>>,
    pub compact: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TropicalJson {
    pub configuration: ConfigurationJson,
    pub eta: Vec<Q>,
    pub vertices: Vec<VertexJson>,
    pub cells: Vec<TropicalCellJson>,
}

impl TropicalJson {
    pub fn of(p: &TropicalComplex) -> Self {
        TropicalJson {
            configuration: ConfigurationJson::of(&p.config),
            eta: qs(&p.eta.0),
            vertices: p
                .subdivision
                .maximal_cells()
                .iter()
                .enumerate()
                .map(|(i, c)| VertexJson {
                    cell: c.marks.clone(),
                    point: qs(p.vertex_points[i].coords()),
                    value: Q(p.vertex_values[i].clone()),
                    color: None,
                })
                .collect(),
            cells: p
                .cells
                .iter()
                .map(|c| TropicalCellJson {
                    dim: c.dim,
                    marking: c.marking.clone(),
                    vertices: c.vertex_ids.clone(),
                    rays: c.rays.iter().map(|r| qs(r.coords())).collect(),
                    compact: c.is_compact(),
                    color: None,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaintSpecJson {
    pub eta: Vec<Q>,
    pub c: Q,
    pub alpha: Vec<Q>,
}

impl PaintSpecJson {
    pub fn of(spec: &PaintSpec) -> Self {
        PaintSpecJson { eta: qs(&spec.eta.0), c: Q(spec.c.clone()), alpha: qs(spec.alpha.coords()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaintedJson {
    pub spec: PaintSpecJson,
    pub signs: String,
    pub complex: TropicalJson,
}

impl PaintedJson {
    pub fn of(pc: &PaintedComplex) -> Result<Self> {
        let mut complex = TropicalJson::of(&pc.complex);
        for (cell, color) in complex.cells.iter_mut().zip(&pc.colors) {
            cell.color = Some(color.name().to_string());
        }
        for (i, v) in complex.vertices.iter_mut().enumerate() {
            v.color = Some(pc.colors[pc.complex.vertex_cell(i)].name().to_string());
        }
        Ok(PaintedJson {
            spec: PaintSpecJson::of(&pc.spec),
            signs: sign_vector(&pc.complex.config, &pc.spec.alpha)?.to_string(),
            complex,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub rank: usize,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub f_vector: Vec<usize>,
    pub elements: Vec<ElementJson>,
    pub covers: Vec<(usize, usize)>,
}

impl LatticeJson {
    pub fn of(l: &FaceLattice) -> Self {
        LatticeJson {
            f_vector: l.f_vector(),
            elements: l
                .labels
                .iter()
                .zip(&l.ranks)
                .map(|(label, &rank)| ElementJson { rank, label: label.clone() })
                .collect(),
            covers: l.covers.clone(),
        }
    }

    pub fn build(self) -> FaceLattice {
        FaceLattice::new(
            self.elements.iter().map(|e| e.label.clone()).collect(),
            self.elements.iter().map(|e| e.rank).collect(),
            self.covers,
        )
    }
}

pub fn parse_lattice(text: &str) -> Result<FaceLattice> {
    Ok(from_json::<LatticeJson>(text)?.build())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GkzJson {
    pub gkz: Vec<Q>,
    pub cells: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecondaryJson {
    pub configuration: ConfigurationJson,
    pub vertices: Vec<GkzJson>,
    pub lattice: LatticeJson,
}

impl SecondaryJson {
    pub fn of(config: &PointConfiguration, vertices: &[(GkzVector, Subdivision)], lattice: &FaceLattice) -> Self {
        SecondaryJson {
            configuration: ConfigurationJson::of(config),
            vertices: vertices.iter().map(|(g, s)| GkzJson { gkz: qs(&g.0), cells: s.owned_key() }).collect(),
            lattice: LatticeJson::of(lattice),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaintedFaceJson {
    pub rank: usize,
    /// Marked cells of the extension's subdivision.
    pub subdivision: Vec<Vec<usize>>,
    /// Cell markings with their colors.
    pub cells: Vec<(Vec<usize>, String)>,
    pub sample: PaintSpecJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaintingPolytopeJson {
    pub configuration: ConfigurationJson,
    pub alpha: Vec<Q>,
    pub extended: ConfigurationJson,
    pub dimension: usize,
    pub f_vector: Vec<usize>,
    pub vertices_checked: usize,
    pub faces: Vec<PaintedFaceJson>,
    pub covers: Vec<(usize, usize)>,
}

impl PaintingPolytopeJson {
    pub fn of(r: &TheoremReport) -> Self {
        PaintingPolytopeJson {
            configuration: ConfigurationJson::of(&r.extended.base),
            alpha: qs(r.extended.alpha.coords()),
            extended: ConfigurationJson::of(&r.extended.extended),
            dimension: r.dimension(),
            f_vector: r.subdivision_lattice.f_vector(),
            vertices_checked: r.vertices_checked,
            faces: r
                .painted
                .complexes
                .iter()
                .enumerate()
                .map(|(i, pc)| {
                    let (key, colors) = pc.key();
                    PaintedFaceJson {
                        rank: r.painted.ranks[i],
                        subdivision: r.subdivisions.subdivisions[r.correspondence[i]].owned_key(),
                        cells: key.into_iter().zip(colors).map(|(k, c)| (k, c.name().to_string())).collect(),
                        sample: PaintSpecJson::of(&pc.spec),
                    }
                })
                .collect(),
            covers: r.painted.covers.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationJson {
    pub verified: bool,
    pub f_vector: Vec<usize>,
    /// `(painted complex or tree, face of the extension's secondary polytope)`.
    pub isomorphism: Vec<(usize, usize)>,
    pub vertices_checked: usize,
}

impl VerificationJson {
    pub fn of_theorem(r: &TheoremReport) -> Self {
        VerificationJson {
            verified: true,
            f_vector: r.subdivision_lattice.f_vector(),
            isomorphism: r.isomorphism.iter().copied().enumerate().collect(),
            vertices_checked: r.vertices_checked,
        }
    }

    pub fn of_multiplihedron(r: &MultiplihedronReport) -> Self {
        VerificationJson {
            verified: true,
            f_vector: r.tree_lattice.f_vector(),
            isomorphism: r.isomorphism.iter().copied().enumerate().collect(),
            vertices_checked: r.theorem.vertices_checked,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplihedronJson {
    pub m: usize,
    pub alpha: Vec<Q>,
    pub lattice: LatticeJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationJson>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat;

    #[test]
    fn rationals_as_strings() {
        assert_eq!(serde_json::to_string(&Q(rat(-3, 6))).unwrap(), "\"-1/2\"");
        let v: Vec<Q> = serde_json::from_str("[1, \"2/4\", -3]").unwrap();
        assert_eq!(unq(v), vec![rat(1, 1), rat(1, 2), rat(-3, 1)]);
    }

    #[test]
    fn parse_error_position() {
        let err = parse_configuration("{\n  \"points\": [[0, 0],\n  [1 0]]\n}").unwrap_err();
        assert!(matches!(&err, Error::Parse(m) if m.starts_with("line 3, column")), "{err}");
    }

    #[test]
    fn compact_layout() {
        let doc = ConfigurationJson { points: vec![qs(&[rat(1, 2), rat(0, 1)])], labels: None };
        assert_eq!(to_json(&doc), "{\n  \"points\": [\n    [\"1/2\", \"0\"]\n  ]\n}\n");
    }

    #[test]
    fn vector_flags() {
        assert_eq!(parse_vector("[-1, 1/3,\"2\"]").unwrap(), vec![rat(-1, 1), rat(1, 3), rat(2, 1)]);
        assert!(parse_vector("[1, x]").is_err());
    }
}
