//! Beneath-beyond on homogeneous generators.
//!
//! Every hull computation in the crate is phrased as "facets of a pointed,
//! full-dimensional cone generated by finitely many vectors": a polytope
//! `conv(P)` becomes `cone{(p, 1)}`, and the lifted polyhedron of a regular
//! subdivision becomes `cone{(a, h(a), 1)} + cone{(0, -1, 0)}`. The engine
//! keeps a simplicial boundary; a generator is inserted only when it lies
//! strictly beyond some facet, so coplanar inputs never produce degenerate
//! simplices. Coplanar generators are recovered afterwards by grouping
//! simplicial facets by their (primitive) normal and testing every generator
//! against it.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Signed, Zero};

use super::linalg::{nullspace, rank};
use super::{affine_rank, primitive_integer, AffineFunctional, Rational, Vector};
use crate::error::{Error, Result};

struct SimplicialFacet {
    verts: Vec<usize>,
    normal: Vec<Rational>,
}

struct Engine<'a> {
    gens: &'a [Vec<Rational>],
    interior: Vec<Rational>,
    facets: Vec<SimplicialFacet>,
    simplices: Vec<Vec<usize>>,
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

impl<'a> Engine<'a> {
    fn start(gens: &'a [Vec<Rational>]) -> Result<Self> {
        let d = gens.first().map_or(0, Vec::len);
        let mut initial: Vec<usize> = Vec::new();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            rows.push(g.clone());
            if rank(&rows) == rows.len() {
                initial.push(i);
                if initial.len() == d {
                    break;
                }
            } else {
                rows.pop();
            }
        }
        if initial.len() < d {
            return Err(Error::Degenerate(format!("generators span dimension {} of {d}", initial.len())));
        }
        let mut interior = vec![Rational::zero(); d];
        for &i in &initial {
            for (x, g) in interior.iter_mut().zip(&gens[i]) {
                *x += g;
            }
        }
        let mut engine = Engine { gens, interior, facets: Vec::new(), simplices: vec![initial.clone()] };
        for skip in 0..initial.len() {
            let verts: Vec<usize> = initial.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v).collect();
            let f = engine.facet(verts);
            engine.facets.push(f);
        }
        for i in 0..gens.len() {
            if !initial.contains(&i) {
                engine.insert(i);
            }
        }
        Ok(engine)
    }

    fn facet(&self, mut verts: Vec<usize>) -> SimplicialFacet {
        verts.sort_unstable();
        let d = self.interior.len();
        let rows: Vec<Vec<Rational>> = verts.iter().map(|&v| self.gens[v].clone()).collect();
        let ns = nullspace(&rows, d);
        debug_assert_eq!(ns.len(), 1, "facet generators must be independent");
        let mut normal = ns.into_iter().next().expect("nonempty nullspace");
        if dot(&normal, &self.interior).is_negative() {
            for x in normal.iter_mut() {
                *x = -x.clone();
            }
        }
        SimplicialFacet { verts, normal }
    }

    fn insert(&mut self, p: usize) {
        let g = &self.gens[p];
        let (visible, hidden): (Vec<_>, Vec<_>) =
            std::mem::take(&mut self.facets).into_iter().partition(|f| dot(&f.normal, g).is_negative());
        self.facets = hidden;
        if visible.is_empty() {
            return;
        }
        let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
        for f in &visible {
            for skip in 0..f.verts.len() {
                let ridge: Vec<usize> =
                    f.verts.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v).collect();
                *ridges.entry(ridge).or_insert(0) += 1;
            }
            let mut s = f.verts.clone();
            s.push(p);
            s.sort_unstable();
            self.simplices.push(s);
        }
        let mut horizon: Vec<Vec<usize>> = ridges.into_iter().filter(|(_, c)| *c == 1).map(|(r, _)| r).collect();
        horizon.sort();
        for mut ridge in horizon {
            ridge.push(p);
            let f = self.facet(ridge);
            self.facets.push(f);
        }
    }
}

/// A facet of a pointed cone: inward primitive normal `w` (so `w . g >= 0` on
/// every generator) and the generators with `w . g = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeFacet {
    pub normal: Vec<Rational>,
    pub members: Vec<usize>,
}

/// Facets of the full-dimensional pointed cone spanned by `gens`, sorted by member list.
pub fn cone_facets(gens: &[Vec<Rational>]) -> Result<Vec<ConeFacet>> {
    let engine = Engine::start(gens)?;
    let mut grouped: BTreeMap<Vec<Rational>, ()> = BTreeMap::new();
    for f in &engine.facets {
        grouped.insert(primitive_integer(&f.normal), ());
    }
    let mut out: Vec<ConeFacet> = grouped
        .into_keys()
        .map(|normal| {
            let members = gens.iter().enumerate().filter(|(_, g)| dot(&normal, g).is_zero()).map(|(i, _)| i).collect();
            ConeFacet { normal, members }
        })
        .collect();
    out.sort_by(|a, b| a.members.cmp(&b.members));
    Ok(out)
}

/// Placing triangulation of a full-dimensional point set, inserting points in
/// index order. Points inside the current hull are skipped. Each simplex is a
/// sorted list of point indices; the list is sorted.
pub fn placing_triangulation(points: &[Vector]) -> Result<Vec<Vec<usize>>> {
    let gens: Vec<Vec<Rational>> = points.iter().map(|p| p.extended(Rational::one()).into_coords()).collect();
    let engine = Engine::start(&gens)?;
    let mut s = engine.simplices;
    for x in s.iter_mut() {
        x.sort_unstable();
    }
    s.sort();
    Ok(s)
}

/// An upper facet `h <= g(x) - c` of a lifted point set, with the indices of the
/// lifted points lying on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperFacet {
    pub support: AffineFunctional,
    pub points: Vec<usize>,
}

/// Compact upper facets of `conv{(x, r) : r <= h(x)}` for lifted points `(x, h)`.
///
/// Every lifted point satisfies `support(x) >= h` with equality exactly on the
/// returned index set. Vertical facets are dropped.
pub fn upper_hull_facets(lifted: &[(Vector, Rational)]) -> Result<Vec<UpperFacet>> {
    let first = lifted.first().ok_or_else(|| Error::input("no lifted points"))?;
    let n = first.0.dim();
    let projections: Vec<Vector> = lifted.iter().map(|(x, _)| x.clone()).collect();
    let r = affine_rank(&projections)?;
    if r < n || lifted.len() < n + 1 {
        return Err(Error::Degenerate(format!("projected points span dimension {r}, need {n}")));
    }
    let mut gens: Vec<Vec<Rational>> = Vec::with_capacity(lifted.len() + 1);
    let mut ray = vec![Rational::zero(); n + 2];
    ray[n] = -Rational::one();
    gens.push(ray);
    for (x, h) in lifted {
        let mut g = x.coords().to_vec();
        g.push(h.clone());
        g.push(Rational::one());
        gens.push(g);
    }
    let mut out = Vec::new();
    for f in cone_facets(&gens)? {
        let wh = &f.normal[n];
        if wh.is_zero() {
            continue;
        }
        debug_assert!(wh.is_negative());
        let scale = -wh.recip();
        let linear = Vector::new(f.normal[..n].iter().map(|w| w * &scale).collect());
        let constant = &f.normal[n + 1] / wh;
        let points = f.members.iter().filter(|&&m| m > 0).map(|&m| m - 1).collect();
        out.push(UpperFacet { support: AffineFunctional::new(linear, constant), points });
    }
    out.sort_by(|a, b| a.points.cmp(&b.points));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::int;

    fn lift(pts: &[(&[i64], i64)]) -> Vec<(Vector, Rational)> {
        pts.iter().map(|(x, h)| (Vector::from_ints(x), int(*h))).collect()
    }

    #[test]
    fn flat_simplex_is_one_facet() {
        let l = lift(&[(&[0, 0], 0), (&[1, 0], 0), (&[0, 1], 0)]);
        let f = upper_hull_facets(&l).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].points, vec![0, 1, 2]);
        assert!(f[0].support.linear.is_zero());
    }

    #[test]
    fn square_with_one_low_corner_splits_on_diagonal() {
        let l = lift(&[(&[0, 0], 0), (&[1, 0], 0), (&[1, 1], 0), (&[0, 1], -1)]);
        let f = upper_hull_facets(&l).unwrap();
        let sets: Vec<_> = f.iter().map(|x| x.points.clone()).collect();
        assert_eq!(sets, vec![vec![0, 1, 2], vec![0, 2, 3]]);
    }

    #[test]
    fn degenerate_projection_is_rejected() {
        let l = lift(&[(&[0, 0], 0), (&[1, 1], 3), (&[2, 2], 0)]);
        assert!(matches!(upper_hull_facets(&l), Err(Error::Degenerate(_))));
    }

    #[test]
    fn square_facets_and_placing() {
        let pts: Vec<Vector> = [[0, 0], [1, 0], [1, 1], [0, 1]].iter().map(|c| Vector::from_ints(c)).collect();
        let gens: Vec<Vec<Rational>> = pts.iter().map(|p| p.extended(int(1)).into_coords()).collect();
        let f = cone_facets(&gens).unwrap();
        let sets: Vec<_> = f.iter().map(|x| x.members.clone()).collect();
        assert_eq!(sets, vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);
        let t = placing_triangulation(&pts).unwrap();
        assert_eq!(t, vec![vec![0, 1, 2], vec![0, 2, 3]]);
    }

    #[test]
    fn placing_skips_interior_points() {
        let pts: Vec<Vector> = [[0, 0], [4, 0], [0, 4], [1, 1]].iter().map(|c| Vector::from_ints(c)).collect();
        assert_eq!(placing_triangulation(&pts).unwrap(), vec![vec![0, 1, 2]]);
    }
}
