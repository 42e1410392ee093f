//! Marked polytopes `(Q, A)` with facet data, and sign vectors of a marked point.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{affine_rank, cone_facets, Rational, Vector};

/// An inward facet inequality `normal(x) >= offset`, with the points of `A` on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vector,
    pub offset: Rational,
    pub points: Vec<usize>,
}

impl Facet {
    /// `normal(x) - offset`; nonnegative on `Q`.
    pub fn slack(&self, x: &Vector) -> Rational {
        self.normal.dot(x) - &self.offset
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    points: Vec<Vector>,
    labels: Vec<String>,
    dimension: usize,
    facets: Vec<Facet>,
}

pub fn build_configuration(points: Vec<Vector>) -> Result<PointConfiguration> {
    let labels = (0..points.len()).map(|i| format!("a{i}")).collect();
    PointConfiguration::with_labels(points, labels)
}

impl PointConfiguration {
    pub fn with_labels(points: Vec<Vector>, labels: Vec<String>) -> Result<Self> {
        let first = points.first().ok_or_else(|| Error::input("configuration has no points"))?;
        let dimension = first.dim();
        if dimension == 0 {
            return Err(Error::input("points must have positive dimension"));
        }
        if labels.len() != points.len() {
            return Err(Error::input(format!("{} labels for {} points", labels.len(), points.len())));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::input(format!("duplicate label {l:?}")));
            }
        }
        let rank = affine_rank(&points)?;
        for i in 0..points.len() {
            for j in 0..i {
                if points[i] == points[j] {
                    return Err(Error::DuplicatePoint(j, i));
                }
            }
        }
        if rank < dimension {
            return Err(Error::RankDeficient { rank, dimension });
        }
        let facets = compute_facets(&points, dimension)?;
        Ok(PointConfiguration { points, labels, dimension, facets })
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Vector {
        &self.points[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Indices of the points that are vertices of `Q`.
    pub fn vertices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| {
                let on: Vec<&Facet> = self.facets.iter().filter(|f| f.points.contains(&i)).collect();
                let normals: Vec<Vec<Rational>> = on.iter().map(|f| f.normal.coords().to_vec()).collect();
                crate::geometry::rank(&normals) == self.dimension
            })
            .collect()
    }

    /// Whether `x` lies in `Q`.
    pub fn contains(&self, x: &Vector) -> bool {
        self.facets.iter().all(|f| !f.slack(x).is_negative())
    }

    /// Indices of facets containing every point in `subset`.
    pub fn facets_containing(&self, subset: &[usize]) -> Vec<usize> {
        (0..self.facets.len()).filter(|&k| subset.iter().all(|p| self.facets[k].points.contains(p))).collect()
    }
}

fn compute_facets(points: &[Vector], n: usize) -> Result<Vec<Facet>> {
    let gens: Vec<Vec<Rational>> = points.iter().map(|p| p.extended(Rational::one()).into_coords()).collect();
    let mut facets: Vec<Facet> = cone_facets(&gens)?
        .into_iter()
        .map(|cf| {
            let normal = Vector::new(cf.normal[..n].to_vec()).primitive();
            let k = (0..n).find(|&k| !normal[k].is_zero()).expect("facet normal is nonzero");
            let offset = -(&cf.normal[n] * &normal[k] / &cf.normal[k]);
            Facet { normal, offset, points: cf.members }
        })
        .collect();
    if n == 2 {
        facets = counterclockwise(points, facets);
    }
    Ok(facets)
}

/// Polygon edges in counterclockwise order, starting with the edge that ends at
/// the lowest-indexed vertex.
fn counterclockwise(points: &[Vector], facets: Vec<Facet>) -> Vec<Facet> {
    // Each edge's vertices are the two extreme points along it; orient them so Q lies to the left.
    let oriented: Vec<(usize, usize)> = facets
        .iter()
        .map(|f| {
            let dir = Vector::new(vec![f.normal[1].clone(), -f.normal[0].clone()]);
            let from = *f.points.iter().min_by(|&&a, &&b| dir.dot(&points[a]).cmp(&dir.dot(&points[b]))).unwrap();
            let to = *f.points.iter().max_by(|&&a, &&b| dir.dot(&points[a]).cmp(&dir.dot(&points[b]))).unwrap();
            (from, to)
        })
        .collect();
    let start_vertex = oriented.iter().map(|&(a, _)| a).min().unwrap();
    let mut order = Vec::with_capacity(facets.len());
    let mut cur = oriented.iter().position(|&(_, b)| b == start_vertex).unwrap();
    for _ in 0..facets.len() {
        order.push(cur);
        let next_from = oriented[cur].1;
        cur = oriented.iter().position(|&(a, _)| a == next_from).unwrap();
    }
    let mut slots: Vec<Option<Facet>> = facets.into_iter().map(Some).collect();
    order.into_iter().map(|i| slots[i].take().unwrap()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        if r.is_positive() {
            Sign::Plus
        } else if r.is_negative() {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignVector(pub Vec<Sign>);

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", s.symbol())?;
        }
        write!(f, ")")
    }
}

/// `+` where `alpha` violates the facet inequality, `0` on the hyperplane, `-` inside.
pub fn sign_vector(config: &PointConfiguration, alpha: &Vector) -> Result<SignVector> {
    if alpha.dim() != config.dimension() {
        return Err(Error::DimensionMismatch { expected: config.dimension(), found: alpha.dim() });
    }
    Ok(SignVector(config.facets().iter().map(|f| Sign::of(&(&f.offset - f.normal.dot(alpha)))).collect()))
}

/// A marked polytope is a marked simplex when its dimension is one less than its mark count.
pub fn is_marked_simplex(polytope: &[Vector], marks: &[Vector]) -> bool {
    match affine_rank(polytope) {
        Ok(d) => d + 1 == marks.len(),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat;

    fn pts(c: &[&[i64]]) -> Vec<Vector> {
        c.iter().map(|x| Vector::from_ints(x)).collect()
    }

    #[test]
    fn quadrilateral_with_interior_origin() {
        let q = build_configuration(pts(&[&[0, 0], &[1, 0], &[0, 1], &[-1, 0], &[-1, -1]])).unwrap();
        assert_eq!(q.facets().len(), 4);
        assert_eq!(q.vertices(), vec![1, 2, 3, 4]);
        for f in q.facets() {
            assert!(!f.points.contains(&0));
            for p in q.points() {
                assert!(!f.slack(p).is_negative());
            }
        }
        let s = sign_vector(&q, &Vector::new(vec![rat(1, 3), rat(1, 3)])).unwrap();
        assert!(s.0.iter().all(|&x| x == Sign::Minus));
    }

    #[test]
    fn polygon_facets_are_counterclockwise() {
        let q = build_configuration(pts(&[&[0, 0], &[2, 0], &[2, 2], &[0, 2]])).unwrap();
        let sets: Vec<_> = q.facets().iter().map(|f| f.points.clone()).collect();
        assert_eq!(sets, vec![vec![0, 3], vec![0, 1], vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn bipyramid_sign_vector() {
        let q = build_configuration(pts(&[&[1, 0, 0], &[0, 1, 0], &[-1, -1, 0], &[0, 0, 1], &[0, 0, -1]])).unwrap();
        assert_eq!(q.vertices(), vec![0, 1, 2, 3, 4]);
        assert_eq!(q.facets().len(), 6);
        let s = sign_vector(&q, &Vector::new(vec![rat(1, 2), rat(1, 3), rat(1, 2)])).unwrap();
        let plus: Vec<_> = (0..6).filter(|&k| s.0[k] == Sign::Plus).map(|k| q.facets()[k].points.clone()).collect();
        assert_eq!(plus, vec![vec![0, 1, 3]]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(build_configuration(pts(&[&[0, 0], &[1, 0], &[0, 0]])), Err(Error::DuplicatePoint(0, 2)));
        assert_eq!(
            build_configuration(pts(&[&[0, 0], &[1, 1], &[2, 2]])),
            Err(Error::RankDeficient { rank: 1, dimension: 2 })
        );
    }

    #[test]
    fn marked_simplices() {
        let tri = pts(&[&[0, 0], &[3, 0], &[0, 3]]);
        assert!(is_marked_simplex(&tri, &tri));
        let mut marks = tri.clone();
        marks.push(Vector::from_ints(&[1, 1]));
        assert!(!is_marked_simplex(&tri, &marks));
        let seg = pts(&[&[0], &[2]]);
        assert!(!is_marked_simplex(&seg, &pts(&[&[0], &[1], &[2]])));
    }
}
