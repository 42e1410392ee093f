//! SVG drawings of planar tropical curves, painted complexes and Hasse diagrams.
//! Coordinates are `f64` approximations and only meant for viewing.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geometry::{to_f64, Vector};
use crate::io::parse_vector;
use crate::painting::{Color, PaintedComplex};
use crate::secondary::FaceLattice;
use crate::tropical::TropicalComplex;

const WIDTH: f64 = 480.0;
const NOTE: &str = "<!-- decimal coordinates approximate exact rationals; not authoritative -->";

pub fn color_hex(c: Color) -> &'static str {
    match c {
        Color::Blue => "#1f4fff",
        Color::Purple => "#9b30d0",
        Color::Red => "#d01f1f",
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BBox {
    pub xmin: f64,
    pub ymin: f64,
    pub xmax: f64,
    pub ymax: f64,
}

impl BBox {
    /// From `"xmin,ymin,xmax,ymax"`.
    pub fn parse(text: &str) -> Result<BBox> {
        let v: Vec<f64> = parse_vector(text)?.iter().map(to_f64).collect();
        match v[..] {
            [xmin, ymin, xmax, ymax] if xmin < xmax && ymin < ymax => Ok(BBox { xmin, ymin, xmax, ymax }),
            _ => Err(Error::input("bounding box must be xmin,ymin,xmax,ymax with min < max")),
        }
    }

    /// The vertices with a margin, at least one unit wide.
    pub fn around(points: &[(f64, f64)]) -> BBox {
        let (mut xmin, mut ymin, mut xmax, mut ymax) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        if let Some(&(x, y)) = points.first() {
            (xmin, ymin, xmax, ymax) = (x, y, x, y);
        }
        for &(x, y) in points {
            xmin = xmin.min(x);
            xmax = xmax.max(x);
            ymin = ymin.min(y);
            ymax = ymax.max(y);
        }
        let pad = ((xmax - xmin).max(ymax - ymin) * 0.3).max(1.0);
        BBox { xmin: xmin - pad, ymin: ymin - pad, xmax: xmax + pad, ymax: ymax + pad }
    }

    fn scale(&self) -> f64 {
        WIDTH / (self.xmax - self.xmin)
    }

    fn height(&self) -> f64 {
        (self.ymax - self.ymin) * self.scale()
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        ((x - self.xmin) * self.scale(), (self.ymax - y) * self.scale())
    }
}

fn xy(v: &Vector) -> (f64, f64) {
    (to_f64(&v[0]), to_f64(&v[1]))
}

fn hull(mut pts: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut lower: Vec<(f64, f64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(f64, f64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Vertices of a cell with each ray cut off far outside the box.
fn truncated(p: &TropicalComplex, k: usize, reach: f64) -> Vec<(f64, f64)> {
    let cell = &p.cells[k];
    let mut out: Vec<(f64, f64)> = cell.vertices.iter().map(xy).collect();
    for v in &cell.vertices {
        let (x, y) = xy(v);
        for r in &cell.rays {
            let (rx, ry) = xy(r);
            let len = (rx * rx + ry * ry).sqrt();
            out.push((x + rx / len * reach, y + ry / len * reach));
        }
    }
    out
}

fn fmt2(s: &mut String, (x, y): (f64, f64)) {
    let _ = write!(s, "{x:.3},{y:.3}");
}

/// Draw the complex of a planar configuration, colored when `colors` is given.
pub fn tropical_svg(p: &TropicalComplex, colors: Option<&[Color]>, bbox: Option<BBox>) -> Result<String> {
    if p.dimension() != 2 {
        return Err(Error::input(format!("can only draw planar complexes, not dimension {}", p.dimension())));
    }
    let bbox = bbox.unwrap_or_else(|| BBox::around(&p.vertex_points.iter().map(xy).collect::<Vec<_>>()));
    let reach = 4.0 * ((bbox.xmax - bbox.xmin) + (bbox.ymax - bbox.ymin))
        + p.vertex_points.iter().map(|v| xy(v).0.abs() + xy(v).1.abs()).fold(0.0, f64::max);
    let (w, h) = (WIDTH, bbox.height());
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.3} {h:.3}\">"
    );
    let _ = writeln!(s, "{NOTE}");
    let _ = writeln!(
        s,
        "<defs><clipPath id=\"box\"><rect x=\"0\" y=\"0\" width=\"{w:.3}\" height=\"{h:.3}\"/></clipPath></defs>"
    );
    let _ = writeln!(s, "<rect x=\"0\" y=\"0\" width=\"{w:.3}\" height=\"{h:.3}\" fill=\"white\"/>");
    let _ = writeln!(s, "<g clip-path=\"url(#box)\">");
    let stroke = |k: usize| colors.map_or("#222222", |c| color_hex(c[k]));
    if let Some(c) = colors {
        for (k, cell) in p.cells.iter().enumerate().filter(|(_, c)| c.dim == 2) {
            let poly = hull(truncated(p, k, reach));
            let _ = write!(s, "<polygon fill=\"{}\" fill-opacity=\"0.25\" points=\"", color_hex(c[k]));
            for (i, &q) in poly.iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                fmt2(&mut s, bbox.map(q));
            }
            let _ = writeln!(s, "\"><title>{}</title></polygon>", marking(&cell.marking));
        }
    }
    for (k, cell) in p.cells.iter().enumerate().filter(|(_, c)| c.dim == 1) {
        let pts = truncated(p, k, reach);
        let (a, b) = (bbox.map(pts[0]), bbox.map(pts[pts.len() - 1]));
        let _ = writeln!(
            s,
            "<line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"{}\" stroke-width=\"2.5\"><title>{}</title></line>",
            a.0,
            a.1,
            b.0,
            b.1,
            stroke(k),
            marking(&cell.marking)
        );
    }
    for (k, cell) in p.cells.iter().enumerate().filter(|(_, c)| c.dim == 0) {
        let (x, y) = bbox.map(xy(&cell.vertices[0]));
        let _ = writeln!(
            s,
            "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"5\" fill=\"{}\"><title>{}</title></circle>",
            stroke(k),
            marking(&cell.marking)
        );
    }
    s.push_str("</g>\n</svg>\n");
    Ok(s)
}

pub fn painted_svg(pc: &PaintedComplex, bbox: Option<BBox>) -> Result<String> {
    tropical_svg(&pc.complex, Some(&pc.colors), bbox)
}

fn marking(m: &[usize]) -> String {
    format!("{{{}}}", m.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Layered drawing, rank zero at the bottom.
pub fn hasse_svg(l: &FaceLattice) -> String {
    let f = l.f_vector();
    let widest = f.iter().copied().max().unwrap_or(1).max(1) as f64;
    let (gap_x, gap_y) = (28.0, 90.0);
    let w = widest * gap_x + 40.0;
    let h = f.len().max(1) as f64 * gap_y + 20.0;
    let mut slot = vec![0usize; l.len()];
    let mut seen = vec![0usize; f.len()];
    for i in 0..l.len() {
        slot[i] = seen[l.ranks[i]];
        seen[l.ranks[i]] += 1;
    }
    let pos = |i: usize| {
        let r = l.ranks[i];
        let row = f[r] as f64;
        let x = w / 2.0 + (slot[i] as f64 - (row - 1.0) / 2.0) * gap_x;
        let y = h - 30.0 - r as f64 * gap_y;
        (x, y)
    };
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.1} {h:.1}\">"
    );
    let _ = writeln!(s, "<rect x=\"0\" y=\"0\" width=\"{w:.1}\" height=\"{h:.1}\" fill=\"white\"/>");
    for &(a, b) in &l.covers {
        let ((x1, y1), (x2, y2)) = (pos(a), pos(b));
        let _ = writeln!(
            s,
            "<line x1=\"{x1:.1}\" y1=\"{y1:.1}\" x2=\"{x2:.1}\" y2=\"{y2:.1}\" stroke=\"#888888\" stroke-width=\"1\"/>"
        );
    }
    for i in 0..l.len() {
        let (x, y) = pos(i);
        let _ = writeln!(
            s,
            "<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"6\" fill=\"#333333\"><title>{}</title></circle>",
            escape(&l.labels[i])
        );
    }
    s.push_str("</svg>\n");
    s
}
