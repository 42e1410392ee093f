//! Tropical polynomials `f(u) = min_a u(a) + eta(a)` and their dual complexes.

use std::collections::BTreeMap;

use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::geometry::{Rational, Vector};
use crate::subdivision::{induce_subdivision, Lifting, Subdivision};

#[derive(Clone, Debug)]
pub struct TropicalPolynomial<'a> {
    pub config: &'a PointConfiguration,
    pub eta: &'a Lifting,
}

impl TropicalPolynomial<'_> {
    /// The minimum and the indices attaining it.
    pub fn evaluate(&self, u: &Vector) -> (Rational, Vec<usize>) {
        let values: Vec<Rational> = self.config.points().iter().zip(&self.eta.0).map(|(a, h)| u.dot(a) + h).collect();
        let min = values.iter().min().expect("nonempty configuration").clone();
        let argmin = (0..values.len()).filter(|&i| values[i] == min).collect();
        (min, argmin)
    }
}

/// A cell `conv(vertices) + cone(rays)` of the dual complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalCell {
    pub vertices: Vec<Vector>,
    /// Primitive inward facet normals of `Q`.
    pub rays: Vec<Vector>,
    /// Points of `A` attaining the minimum on the whole cell.
    pub marking: Vec<usize>,
    pub dim: usize,
    /// Maximal cells of the subdivision whose dual vertices span this cell.
    pub vertex_ids: Vec<usize>,
    /// Facets of `Q` whose normals are the rays.
    pub ray_facets: Vec<usize>,
    /// Index of the dual cell in the subdivision.
    pub dual: usize,
}

impl TropicalCell {
    pub fn is_compact(&self) -> bool {
        self.rays.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct TropicalComplex {
    pub config: PointConfiguration,
    pub eta: Lifting,
    pub subdivision: Subdivision,
    /// Sorted by dimension, then marking.
    pub cells: Vec<TropicalCell>,
    /// For maximal cell `i` of the subdivision: the dual vertex `g_i` and `f(g_i)`.
    pub vertex_points: Vec<Vector>,
    pub vertex_values: Vec<Rational>,
}

impl TropicalComplex {
    pub fn dimension(&self) -> usize {
        self.config.dimension()
    }

    pub fn polynomial(&self) -> TropicalPolynomial<'_> {
        TropicalPolynomial { config: &self.config, eta: &self.eta }
    }

    pub fn cells_of_dim(&self, d: usize) -> impl Iterator<Item = (usize, &TropicalCell)> {
        self.cells.iter().enumerate().filter(move |(_, c)| c.dim == d)
    }

    /// Index of the 0-cell dual to maximal cell `i`.
    pub fn vertex_cell(&self, i: usize) -> usize {
        self.cells.iter().position(|c| c.dim == 0 && c.vertex_ids == [i]).expect("vertex cell exists")
    }

    pub fn index_of_marking(&self, marking: &[usize]) -> Option<usize> {
        self.cells.iter().position(|c| c.marking == marking)
    }

    /// Whether cell `b` is a face of cell `a`.
    pub fn is_face(&self, b: usize, a: usize) -> bool {
        let (mb, ma) = (&self.cells[b].marking, &self.cells[a].marking);
        ma.iter().all(|m| mb.contains(m))
    }

    /// A point in the relative interior of cell `k`.
    pub fn interior_point(&self, k: usize) -> Vector {
        let c = &self.cells[k];
        let n = self.dimension();
        let mut p = Vector::zeros(n);
        for v in &c.vertices {
            p = p.add(v);
        }
        p = p.scale(&Rational::new(1.into(), (c.vertices.len() as i64).into()));
        for r in &c.rays {
            p = p.add(r);
        }
        p
    }
}

/// The subdivision induced by `eta` and its dual tropical complex.
pub fn dual_complex(config: &PointConfiguration, eta: &Lifting) -> Result<(TropicalComplex, Subdivision)> {
    let s = induce_subdivision(config, eta)?;
    let n = config.dimension();
    let mut vertex_points = Vec::with_capacity(s.maximal_cells().len());
    let mut vertex_values = Vec::with_capacity(s.maximal_cells().len());
    for cell in s.maximal_cells() {
        let support = cell.support.as_ref().expect("induced cells carry supports");
        vertex_points.push(support.linear.clone());
        vertex_values.push(support.constant.clone());
    }
    let mut cells: Vec<TropicalCell> = s
        .cells()
        .iter()
        .enumerate()
        .map(|(k, c)| TropicalCell {
            vertices: c.maximal.iter().map(|&i| vertex_points[i].clone()).collect(),
            rays: c.boundary_facets.iter().map(|&f| config.facets()[f].normal.clone()).collect(),
            marking: c.marks.clone(),
            dim: n - c.dim,
            vertex_ids: c.maximal.clone(),
            ray_facets: c.boundary_facets.clone(),
            dual: k,
        })
        .collect();
    cells.sort_by(|a, b| (a.dim, &a.marking).cmp(&(b.dim, &b.marking)));
    let complex = TropicalComplex {
        config: config.clone(),
        eta: eta.clone(),
        subdivision: s.clone(),
        cells,
        vertex_points,
        vertex_values,
    };
    Ok((complex, s))
}

/// Match cells of two complexes with the same dual subdivision by marking.
/// Entry `k` is the index in `p2` of cell `k` of `p1`.
pub fn isotopy_map(p1: &TropicalComplex, p2: &TropicalComplex) -> Result<Vec<usize>> {
    if p1.subdivision != p2.subdivision {
        return Err(Error::NotIsotopic(format!(
            "{:?} vs {:?}",
            p1.subdivision.owned_key(),
            p2.subdivision.owned_key()
        )));
    }
    let by_marking: BTreeMap<&[usize], usize> =
        p2.cells.iter().enumerate().map(|(i, c)| (c.marking.as_slice(), i)).collect();
    p1.cells
        .iter()
        .map(|c| {
            by_marking
                .get(c.marking.as_slice())
                .copied()
                .ok_or_else(|| Error::NotIsotopic(format!("no cell with marking {:?}", c.marking)))
        })
        .collect()
}

/// The corner locus: cells of positive codimension whose marking has at least two points.
pub fn hypersurface(p: &TropicalComplex) -> Vec<&TropicalCell> {
    let n = p.dimension();
    p.cells.iter().filter(|c| c.dim < n && c.marking.len() >= 2).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::build_configuration;
    use crate::geometry::int;

    fn quad() -> PointConfiguration {
        build_configuration([[0, 0], [1, 0], [0, 1], [-1, 0], [-1, -1]].iter().map(|c| Vector::from_ints(c)).collect())
            .unwrap()
    }

    #[test]
    fn evaluation() {
        let q = quad();
        let eta = Lifting::from_ints(&[-1, 0, 0, 0, 0]);
        let f = TropicalPolynomial { config: &q, eta: &eta };
        assert_eq!(f.evaluate(&Vector::from_ints(&[-1, -1])), (int(-1), vec![0, 1, 2]));
        assert_eq!(f.evaluate(&Vector::from_ints(&[1, 0])), (int(-1), vec![0, 3, 4]));
    }

    #[test]
    fn star_dual_vertices() {
        let q = quad();
        let (p, s) = dual_complex(&q, &Lifting::from_ints(&[-1, 0, 0, 0, 0])).unwrap();
        let mut verts: Vec<Vector> = p.cells_of_dim(0).map(|(_, c)| c.vertices[0].clone()).collect();
        verts.sort();
        let mut expected: Vec<Vector> =
            [[-1, -1], [1, -1], [1, 0], [-1, 2]].iter().map(|c| Vector::from_ints(c)).collect();
        expected.sort();
        assert_eq!(verts, expected);
        for (i, g) in p.vertex_points.iter().enumerate() {
            assert_eq!(p.polynomial().evaluate(g).0, p.vertex_values[i]);
        }
        let h = hypersurface(&p);
        assert_eq!(h.iter().filter(|c| c.dim == 1 && c.is_compact()).count(), 4);
        assert_eq!(h.iter().filter(|c| c.dim == 1 && !c.is_compact()).count(), 4);
        assert_eq!(s.maximal_cells().len(), 4);
    }

    #[test]
    fn isotopy() {
        let q = quad();
        let eta = Lifting::from_ints(&[-1, 0, 0, 0, 0]);
        let (p1, _) = dual_complex(&q, &eta).unwrap();
        let (p2, _) = dual_complex(&q, &eta.scale(&int(2))).unwrap();
        let map = isotopy_map(&p1, &p2).unwrap();
        assert_eq!(map, (0..p1.cells.len()).collect::<Vec<_>>());
        let (p3, _) = dual_complex(&q, &Lifting::from_ints(&[-1, 1, 0, 2, 0])).unwrap();
        assert!(matches!(isotopy_map(&p1, &p3), Err(Error::NotIsotopic(_))));
    }
}
