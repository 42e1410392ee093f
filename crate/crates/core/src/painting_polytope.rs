//! The extended configuration `A x {0} + {(alpha, 1), (alpha, 2)}` and the
//! correspondence between painted complexes of `A` and regular subdivisions
//! of the extension.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::geometry::{int, rat, Rational, Vector};
use crate::painting::{
    enumerate_painted_with_limits, ray_slope, vertex_value, Color, PaintSpec, PaintedComplex, PaintedPoset,
};
use crate::secondary::{face_lattice_from_poset, FaceLattice};
use crate::subdivision::{enumerate_with_limits, induce_subdivision, refines, Lifting, Limits, SubdivisionPoset};
use crate::tropical::{dual_complex, TropicalComplex};

pub const RHO: &str = "rho";
pub const BETA: &str = "beta";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedConfiguration {
    pub base: PointConfiguration,
    pub alpha: Vector,
    /// Base points `(a, 0)` in order, then `rho = (alpha, 1)` and `beta = (alpha, 2)`.
    pub extended: PointConfiguration,
}

impl ExtendedConfiguration {
    pub fn rho(&self) -> usize {
        self.base.len()
    }

    pub fn beta(&self) -> usize {
        self.base.len() + 1
    }
}

pub fn extend(config: &PointConfiguration, alpha: &Vector) -> Result<ExtendedConfiguration> {
    if alpha.dim() != config.dimension() {
        return Err(Error::DimensionMismatch { expected: config.dimension(), found: alpha.dim() });
    }
    if config.index_of(RHO).is_some() || config.index_of(BETA).is_some() {
        return Err(Error::input("labels rho and beta are reserved for the extension"));
    }
    let mut points: Vec<Vector> = config.points().iter().map(|p| p.extended(Rational::zero())).collect();
    points.push(alpha.extended(int(1)));
    points.push(alpha.extended(int(2)));
    let mut labels = config.labels().to_vec();
    labels.push(RHO.into());
    labels.push(BETA.into());
    let extended = PointConfiguration::with_labels(points, labels)?;
    Ok(ExtendedConfiguration { base: config.clone(), alpha: alpha.clone(), extended })
}

/// `xi(a, 0) = eta(a)` and `xi(rho) = xi(beta) = c`.
pub fn embed_lifting(spec: &PaintSpec) -> Lifting {
    let mut v = spec.eta.0.clone();
    v.push(spec.c.clone());
    v.push(spec.c.clone());
    Lifting(v)
}

/// Inverse of [`embed_lifting`] on its image.
pub fn restrict_lifting(xi: &Lifting) -> Option<(Lifting, Rational)> {
    let n = xi.len();
    if n < 2 || xi.0[n - 1] != xi.0[n - 2] {
        return None;
    }
    Some((Lifting(xi.0[..n - 2].to_vec()), xi.0[n - 1].clone()))
}

/// The vertex of the extended complex over the 0-cell `u`: height `d = g(u)`
/// when nonnegative and `g(u) / 2` otherwise; its marking gains `rho` when red,
/// both when purple, `beta` when blue.
pub fn lifted_vertex(p: &TropicalComplex, u: &Vector, spec: &PaintSpec) -> Result<(Vector, Vec<usize>)> {
    let i = p.vertex_points.iter().position(|v| v == u).ok_or_else(|| Error::input(format!("{u} is not a 0-cell")))?;
    let g = vertex_value(p, i, &spec.alpha, &spec.c);
    let d = if g.is_negative() { &g * rat(1, 2) } else { g.clone() };
    let mut marking = p.subdivision.maximal_cells()[i].marks.clone();
    let (rho, beta) = (p.config.len(), p.config.len() + 1);
    match Color::of(&g) {
        Color::Red => marking.push(rho),
        Color::Purple => marking.extend([rho, beta]),
        Color::Blue => marking.push(beta),
    }
    Ok((u.extended(d), marking))
}

/// Vertices of the extended complex lying over purple 1-cells whose boundary is
/// not entirely purple: the unique zero of `g` on the cell, at height zero.
pub fn extra_vertices(painted: &PaintedComplex) -> Vec<(Vector, Vec<usize>)> {
    let p = &painted.complex;
    let spec = &painted.spec;
    let (rho, beta) = (p.config.len(), p.config.len() + 1);
    let mut out = Vec::new();
    for (k, cell) in p.cells_of_dim(1) {
        if painted.colors[k] != Color::Purple {
            continue;
        }
        let values: Vec<Rational> = cell.vertex_ids.iter().map(|&i| vertex_value(p, i, &spec.alpha, &spec.c)).collect();
        if values.iter().all(Zero::is_zero) {
            continue;
        }
        let u = if cell.is_compact() {
            let (v0, v1) = (&cell.vertices[0], &cell.vertices[1]);
            let t = &values[0] / (&values[0] - &values[1]);
            v0.add(&v1.sub(v0).scale(&t))
        } else {
            let slope = ray_slope(&p.config, cell.ray_facets[0], &spec.alpha);
            cell.vertices[0].add(&cell.rays[0].scale(&(-&values[0] / slope)))
        };
        let mut marking = cell.marking.clone();
        marking.extend([rho, beta]);
        out.push((u.extended(Rational::zero()), marking));
    }
    out
}

/// Check that the 0-cells of the extended complex for `i(eta, c)` are exactly
/// the lifted vertices plus the extra vertices. Returns the vertex count.
pub fn check_vertex_classification(ext: &ExtendedConfiguration, painted: &PaintedComplex) -> Result<usize> {
    let spec = &painted.spec;
    let (q, _) = dual_complex(&ext.extended, &embed_lifting(spec))?;
    let actual: BTreeSet<(Vector, Vec<usize>)> = (0..q.vertex_points.len())
        .map(|i| (q.vertex_points[i].clone(), q.subdivision.maximal_cells()[i].marks.clone()))
        .collect();
    let mut expected = BTreeSet::new();
    for u in &painted.complex.vertex_points {
        let (v, m) = lifted_vertex(&painted.complex, u, spec)?;
        let d = &v[v.dim() - 1];
        let color = Color::of(&vertex_value(
            &painted.complex,
            painted.complex.vertex_points.iter().position(|w| w == u).expect("0-cell"),
            &spec.alpha,
            &spec.c,
        ));
        if Color::of(d) != color {
            return Err(Error::Verification(format!("height {d} at {u} disagrees with color {color}")));
        }
        expected.insert((v, m));
    }
    expected.extend(extra_vertices(painted));
    if actual != expected {
        return Err(Error::Verification(format!(
            "extended vertices {:?} differ from the predicted {:?}",
            actual, expected
        )));
    }
    Ok(actual.len())
}

pub fn painted_lattice(poset: &PaintedPoset) -> FaceLattice {
    let labels = poset
        .complexes
        .iter()
        .map(|p| {
            let (key, colors) = p.key();
            let cells: Vec<String> = key
                .iter()
                .zip(&colors)
                .map(|(c, col)| {
                    format!("{}:{}", c.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(","), col.name())
                })
                .collect();
            cells.join(" | ")
        })
        .collect();
    FaceLattice::new(labels, poset.ranks.clone(), poset.covers.clone())
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub extended: ExtendedConfiguration,
    pub painted: PaintedPoset,
    pub subdivisions: SubdivisionPoset,
    pub painted_lattice: FaceLattice,
    pub subdivision_lattice: FaceLattice,
    /// Painted complex `i` corresponds to subdivision `correspondence[i]` of the extension.
    pub correspondence: Vec<usize>,
    /// The correspondence, checked to preserve ranks and covers.
    pub isomorphism: Vec<usize>,
    pub vertices_checked: usize,
}

impl TheoremReport {
    /// Dimension of the painting polytope.
    pub fn dimension(&self) -> usize {
        self.subdivision_lattice.f_vector().len().saturating_sub(1)
    }

    pub fn vertex_count(&self) -> usize {
        self.subdivision_lattice.f_vector().first().copied().unwrap_or(0)
    }
}

/// Enumerate painted complexes of `(config, alpha)` and regular subdivisions of
/// the extension, and check that the embedding of liftings induces an order
/// isomorphism between them together with the predicted vertex structure.
pub fn verify_main_theorem(config: &PointConfiguration, alpha: &Vector) -> Result<TheoremReport> {
    verify_main_theorem_with_limits(config, alpha, Limits::default())
}

pub fn verify_main_theorem_with_limits(
    config: &PointConfiguration,
    alpha: &Vector,
    limits: Limits,
) -> Result<TheoremReport> {
    let ext = extend(config, alpha)?;
    let painted = enumerate_painted_with_limits(config, alpha, limits)?;
    let subdivisions = enumerate_with_limits(&ext.extended, limits)?;
    let painted_lattice = painted_lattice(&painted);
    let subdivision_lattice = face_lattice_from_poset(&subdivisions);

    let mut correspondence = Vec::with_capacity(painted.len());
    let mut vertices_checked = 0;
    for p in &painted.complexes {
        let s = induce_subdivision(&ext.extended, &embed_lifting(&p.spec))?;
        let j = subdivisions.index_of(&s).ok_or_else(|| {
            Error::Verification(format!("subdivision {:?} of the extension was not enumerated", s.owned_key()))
        })?;
        if subdivisions.ranks[j] != painted.ranks[correspondence.len()] {
            return Err(Error::Verification(format!("rank mismatch at {:?}", p.key())));
        }
        correspondence.push(j);
        vertices_checked += check_vertex_classification(&ext, p)?;
    }
    let images: BTreeSet<usize> = correspondence.iter().copied().collect();
    if images.len() != painted.len() || images.len() != subdivisions.len() {
        return Err(Error::Verification(format!(
            "{} painted complexes map onto {} of {} subdivisions",
            painted.len(),
            images.len(),
            subdivisions.len()
        )));
    }
    for i in 0..painted.len() {
        for j in 0..painted.len() {
            let a = painted.below(i, j);
            let b =
                refines(&subdivisions.subdivisions[correspondence[i]], &subdivisions.subdivisions[correspondence[j]])?;
            if a != b {
                return Err(Error::Verification(format!(
                    "order differs between painted complexes {i}, {j} and their subdivisions"
                )));
            }
        }
    }
    let mapped: BTreeSet<(usize, usize)> =
        painted_lattice.covers.iter().map(|&(a, b)| (correspondence[a], correspondence[b])).collect();
    if mapped != subdivision_lattice.covers.iter().copied().collect() {
        return Err(Error::Verification("the correspondence does not preserve covers".into()));
    }
    let isomorphism = correspondence.clone();
    Ok(TheoremReport {
        extended: ext,
        painted,
        subdivisions,
        painted_lattice,
        subdivision_lattice,
        correspondence,
        isomorphism,
        vertices_checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::build_configuration;

    fn quad() -> PointConfiguration {
        build_configuration([[0, 0], [1, 0], [0, 1], [-1, 0], [-1, -1]].iter().map(|c| Vector::from_ints(c)).collect())
            .unwrap()
    }

    fn spec(c: Rational) -> PaintSpec {
        PaintSpec { eta: Lifting::from_ints(&[-1, 0, 0, 0, 0]), c, alpha: Vector::new(vec![rat(1, 3), rat(1, 3)]) }
    }

    #[test]
    fn extension_shape() {
        let ext = extend(&quad(), &Vector::new(vec![rat(1, 3), rat(1, 3)])).unwrap();
        assert_eq!(ext.extended.len(), 7);
        assert_eq!(ext.extended.dimension(), 3);
        assert_eq!(ext.extended.point(ext.beta()), &Vector::new(vec![rat(1, 3), rat(1, 3), int(2)]));
        let xi = embed_lifting(&spec(int(-1)));
        assert_eq!(restrict_lifting(&xi), Some((spec(int(-1)).eta, int(-1))));
    }

    #[test]
    fn lifted_vertex_heights() {
        let s = spec(int(-1));
        let (p, _) = dual_complex(&quad(), &s.eta).unwrap();
        let (v, m) = lifted_vertex(&p, &Vector::from_ints(&[-1, -1]), &s).unwrap();
        assert_eq!(v[2], rat(2, 3));
        assert!(m.contains(&5) && !m.contains(&6));
        let (v, m) = lifted_vertex(&p, &Vector::from_ints(&[1, -1]), &s).unwrap();
        assert!(v[2].is_zero() && m.contains(&5) && m.contains(&6));
        let (v, m) = lifted_vertex(&p, &Vector::from_ints(&[1, 0]), &s).unwrap();
        assert_eq!(v[2], rat(-1, 6));
        assert!(m.contains(&6) && !m.contains(&5));
        assert!(lifted_vertex(&p, &Vector::from_ints(&[0, 0]), &s).is_err());
    }

    #[test]
    fn vertex_classification_on_star() {
        let ext = extend(&quad(), &spec(int(0)).alpha).unwrap();
        for c in [rat(-3, 2), int(-1), rat(-1, 2), rat(-1, 3), int(1)] {
            let s = spec(c);
            let (p, _) = dual_complex(&quad(), &s.eta).unwrap();
            let painted = crate::painting::paint(&p, &s).unwrap();
            check_vertex_classification(&ext, &painted).unwrap();
        }
    }

    #[test]
    fn segment_theorem() {
        let seg = build_configuration(vec![Vector::from_ints(&[0]), Vector::from_ints(&[1])]).unwrap();
        let report = verify_main_theorem(&seg, &Vector::new(vec![rat(1, 2)])).unwrap();
        assert_eq!(report.subdivision_lattice.f_vector(), vec![2, 1]);
    }
}
