//! Regular subdivisions induced by liftings, secondary cones, refinement, and
//! enumeration of every coherent subdivision of a small configuration.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::hash::{Hash, Hasher};

use num_traits::{One, Signed, Zero};

use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::geometry::{
    affine_basis, affine_rank, barycentric, cone_facets, lp_feasible_strict, nullspace, placing_triangulation,
    primitive_integer, rank, simplex_normalized_volume, upper_hull_facets, AffineFunctional, Rational, Vector,
};

/// A height `eta(a)` for every point of the configuration, in point order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lifting(pub Vec<Rational>);

impl Lifting {
    pub fn zeros(n: usize) -> Self {
        Lifting(vec![Rational::zero(); n])
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Lifting(values.iter().map(|&v| crate::geometry::int(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    pub fn scale(&self, k: &Rational) -> Lifting {
        Lifting(self.0.iter().map(|x| x * k).collect())
    }

    pub fn as_vector(&self) -> Vector {
        Vector::new(self.0.clone())
    }

    fn check(&self, config: &PointConfiguration) -> Result<()> {
        if self.len() != config.len() {
            return Err(Error::input(format!(
                "lifting has {} values but the configuration has {} points",
                self.len(),
                config.len()
            )));
        }
        Ok(())
    }
}

/// A maximal cell: the vertices of its polytope, its marks, and (for cells
/// induced by a lifting) the affine support `g - c` with `g(a) - c >= -eta(a)`
/// on all points and equality exactly on the marks.
#[derive(Clone, Debug)]
pub struct MarkedCell {
    pub vertices: Vec<usize>,
    pub marks: Vec<usize>,
    pub support: Option<AffineFunctional>,
}

/// Any cell of a subdivision (a face of some maximal cell).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub marks: Vec<usize>,
    pub vertices: Vec<usize>,
    pub dim: usize,
    /// Indices of the maximal cells containing this cell.
    pub maximal: Vec<usize>,
    /// Indices of the facets of `Q` containing this cell.
    pub boundary_facets: Vec<usize>,
}

impl Cell {
    pub fn is_boundary(&self) -> bool {
        !self.boundary_facets.is_empty()
    }
}

/// A subdivision of a marked polytope. Two subdivisions are equal when their
/// maximal marked cells coincide.
#[derive(Clone, Debug)]
pub struct Subdivision {
    npoints: usize,
    dimension: usize,
    maximal: Vec<MarkedCell>,
    cells: Vec<Cell>,
}

impl PartialEq for Subdivision {
    fn eq(&self, other: &Self) -> bool {
        self.npoints == other.npoints && self.key() == other.key()
    }
}

impl Eq for Subdivision {}

impl Hash for Subdivision {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl Subdivision {
    /// Assemble a subdivision from maximal cells given by their marks. Cell
    /// faces are computed; the cells are not checked against each other (see
    /// [`validate_subdivision`]).
    pub fn from_marks(config: &PointConfiguration, marks: Vec<Vec<usize>>) -> Result<Self> {
        let cells = marks
            .into_iter()
            .map(|mut m| {
                m.sort_unstable();
                m.dedup();
                if m.iter().any(|&i| i >= config.len()) {
                    return Err(Error::input("cell mark out of range"));
                }
                Ok(MarkedCell { vertices: Vec::new(), marks: m, support: None })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::assemble(config, cells)
    }

    fn assemble(config: &PointConfiguration, mut maximal: Vec<MarkedCell>) -> Result<Self> {
        let n = config.dimension();
        maximal.sort_by(|a, b| a.marks.cmp(&b.marks));
        let mut by_marks: BTreeMap<Vec<usize>, Cell> = BTreeMap::new();
        for (ci, cell) in maximal.iter_mut().enumerate() {
            let pts: Vec<Vector> = cell.marks.iter().map(|&i| config.point(i).clone()).collect();
            if affine_rank(&pts)? != n {
                return Err(Error::input(format!("cell {:?} is not full-dimensional", cell.marks)));
            }
            for face in cell_faces(config, &cell.marks)? {
                let entry = by_marks.entry(face.clone()).or_insert_with(|| Cell {
                    marks: face.clone(),
                    vertices: Vec::new(),
                    dim: 0,
                    maximal: Vec::new(),
                    boundary_facets: Vec::new(),
                });
                entry.maximal.push(ci);
            }
        }
        let singletons: BTreeSet<usize> = by_marks.keys().filter(|k| k.len() == 1).map(|k| k[0]).collect();
        let mut cells: Vec<Cell> = by_marks
            .into_values()
            .map(|mut c| {
                let pts: Vec<Vector> = c.marks.iter().map(|&i| config.point(i).clone()).collect();
                c.dim = affine_rank(&pts).expect("nonempty cell");
                c.vertices = c.marks.iter().copied().filter(|m| singletons.contains(m)).collect();
                c.boundary_facets = config.facets_containing(&c.marks);
                c
            })
            .collect();
        cells.sort_by(|a, b| (a.dim, &a.marks).cmp(&(b.dim, &b.marks)));
        for cell in maximal.iter_mut() {
            let c = cells.iter().find(|c| c.marks == cell.marks).expect("maximal cell present");
            cell.vertices = c.vertices.clone();
        }
        Ok(Subdivision { npoints: config.len(), dimension: n, maximal, cells })
    }

    pub fn maximal_cells(&self) -> &[MarkedCell] {
        &self.maximal
    }

    /// All cells, sorted by dimension and then marks.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cells_of_dim(&self, d: usize) -> impl Iterator<Item = (usize, &Cell)> {
        self.cells.iter().enumerate().filter(move |(_, c)| c.dim == d)
    }

    pub fn cell_index(&self, marks: &[usize]) -> Option<usize> {
        self.cells.iter().position(|c| c.marks == marks)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn npoints(&self) -> usize {
        self.npoints
    }

    /// Sorted mark sets of the maximal cells; the identity of the subdivision.
    pub fn key(&self) -> Vec<&[usize]> {
        self.maximal.iter().map(|c| c.marks.as_slice()).collect()
    }

    pub fn owned_key(&self) -> Vec<Vec<usize>> {
        self.maximal.iter().map(|c| c.marks.clone()).collect()
    }

    /// Whether `b` is a face of `a` in this subdivision (cell indices).
    pub fn is_face(&self, b: usize, a: usize) -> bool {
        let (cb, ca) = (&self.cells[b], &self.cells[a]);
        cb.marks.iter().all(|m| ca.marks.contains(m))
    }
}

/// Mark sets of all nonempty faces of the marked cell `conv(marks)`.
fn cell_faces(config: &PointConfiguration, marks: &[usize]) -> Result<Vec<Vec<usize>>> {
    let gens: Vec<Vec<Rational>> =
        marks.iter().map(|&i| config.point(i).extended(Rational::one()).into_coords()).collect();
    let facets: Vec<Vec<usize>> =
        cone_facets(&gens)?.into_iter().map(|f| f.members.into_iter().map(|j| marks[j]).collect()).collect();
    let mut all: BTreeSet<Vec<usize>> = facets.iter().cloned().collect();
    let mut frontier: Vec<Vec<usize>> = facets.clone();
    while let Some(f) = frontier.pop() {
        for g in &facets {
            let meet: Vec<usize> = f.iter().copied().filter(|x| g.contains(x)).collect();
            if !meet.is_empty() && all.insert(meet.clone()) {
                frontier.push(meet);
            }
        }
    }
    all.insert(marks.to_vec());
    Ok(all.into_iter().collect())
}

/// The regular subdivision induced by `eta`: project the compact upper facets
/// of the lift `a -> (a, -eta(a))`.
pub fn induce_subdivision(config: &PointConfiguration, eta: &Lifting) -> Result<Subdivision> {
    eta.check(config)?;
    let lifted: Vec<(Vector, Rational)> =
        config.points().iter().zip(&eta.0).map(|(p, h)| (p.clone(), -h.clone())).collect();
    let maximal = upper_hull_facets(&lifted)?
        .into_iter()
        .map(|f| MarkedCell { vertices: Vec::new(), marks: f.points, support: Some(f.support) })
        .collect();
    Subdivision::assemble(config, maximal)
}

/// `s1` refines `s2`: each maximal cell of `s1` sits inside a maximal cell of
/// `s2` with its marks among that cell's marks.
pub fn refines(s1: &Subdivision, s2: &Subdivision) -> Result<bool> {
    if s1.npoints != s2.npoints || s1.dimension != s2.dimension {
        return Err(Error::input("subdivisions of different configurations"));
    }
    Ok(s1.maximal.iter().all(|c| s2.maximal.iter().any(|d| c.marks.iter().all(|m| d.marks.contains(m)))))
}

pub fn is_triangulation(s: &Subdivision) -> bool {
    s.maximal.iter().all(|c| c.marks.len() == s.dimension + 1)
}

/// Check the defining conditions of a subdivision exactly: faces of cells are
/// cells (by construction), two maximal cells meet in a common face, and the
/// cells cover `Q`.
pub fn validate_subdivision(config: &PointConfiguration, s: &Subdivision) -> Result<()> {
    let n = config.dimension();
    for (i, a) in s.maximal.iter().enumerate() {
        for b in &s.maximal[i + 1..] {
            let common: Vec<usize> = a.marks.iter().copied().filter(|m| b.marks.contains(m)).collect();
            if !common.is_empty() && s.cell_index(&common).is_none() {
                return Err(Error::input(format!("cells {:?} and {:?} meet outside a common face", a.marks, b.marks)));
            }
            // An affine functional >= 0 on a, <= 0 on b, vanishing exactly on the common marks.
            let unknown = |p: &Vector, flip: bool| {
                let mut c = p.coords().to_vec();
                c.push(Rational::one());
                let f = AffineFunctional::linear(Vector::new(c));
                if flip {
                    f.negated()
                } else {
                    f
                }
            };
            let mut strict = Vec::new();
            let mut eq = Vec::new();
            for &m in &a.marks {
                let f = unknown(config.point(m), false);
                if common.contains(&m) {
                    eq.push(f);
                } else {
                    strict.push(f);
                }
            }
            for &m in &b.marks {
                if !common.contains(&m) {
                    strict.push(unknown(config.point(m), true));
                }
            }
            if lp_feasible_strict(&strict, &[], &eq, n + 1)?.is_none() {
                return Err(Error::input(format!("cells {:?} and {:?} overlap", a.marks, b.marks)));
            }
        }
    }
    let total = volume(config, &(0..config.len()).collect::<Vec<_>>())?;
    let mut sum = Rational::zero();
    for c in &s.maximal {
        sum += volume(config, &c.marks)?;
    }
    if sum != total {
        return Err(Error::input(format!("cells cover volume {sum} of {total}")));
    }
    Ok(())
}

/// Normalized volume of `conv` of the given points.
pub fn volume(config: &PointConfiguration, indices: &[usize]) -> Result<Rational> {
    let pts: Vec<Vector> = indices.iter().map(|&i| config.point(i).clone()).collect();
    let mut v = Rational::zero();
    for simplex in placing_triangulation(&pts)? {
        let verts: Vec<Vector> = simplex.iter().map(|&i| pts[i].clone()).collect();
        v += simplex_normalized_volume(&verts)?;
    }
    Ok(v)
}

/// The relatively open cone of liftings inducing a fixed subdivision, as
/// linear equalities and strict inequalities on `R^A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondaryCone {
    pub ambient: usize,
    pub equalities: Vec<AffineFunctional>,
    pub strict: Vec<AffineFunctional>,
}

impl SecondaryCone {
    pub fn contains(&self, eta: &Lifting) -> bool {
        let x = eta.as_vector();
        self.equalities.iter().all(|f| f.eval(&x).is_zero()) && self.strict.iter().all(|f| f.eval(&x).is_positive())
    }

    pub fn contains_in_closure(&self, eta: &Lifting) -> bool {
        let x = eta.as_vector();
        self.equalities.iter().all(|f| f.eval(&x).is_zero()) && self.strict.iter().all(|f| !f.eval(&x).is_negative())
    }

    /// Rank of the equality system; zero exactly for triangulations.
    pub fn codimension(&self) -> usize {
        let rows: Vec<Vec<Rational>> = self.equalities.iter().map(|f| f.linear.coords().to_vec()).collect();
        rank(&rows)
    }
}

/// For every maximal cell with basis `B` among its marks, and every other
/// point `a` with affine coordinates `lambda` over `B`, the functional
/// `eta(a) - sum lambda_v eta(v)` vanishes on marks and is positive elsewhere.
fn cone_system(config: &PointConfiguration, s: &Subdivision) -> Result<SecondaryCone> {
    let npts = config.len();
    let mut equalities = BTreeSet::new();
    let mut strict = BTreeSet::new();
    for cell in &s.maximal {
        let mark_pts: Vec<&Vector> = cell.marks.iter().map(|&i| config.point(i)).collect();
        let basis: Vec<usize> = affine_basis(&mark_pts).into_iter().map(|j| cell.marks[j]).collect();
        let basis_pts: Vec<&Vector> = basis.iter().map(|&i| config.point(i)).collect();
        for a in 0..npts {
            if basis.contains(&a) {
                continue;
            }
            let lambda = barycentric(&basis_pts, config.point(a))
                .ok_or_else(|| Error::input("cell does not span the configuration"))?;
            let mut coef = vec![Rational::zero(); npts];
            coef[a] = Rational::one();
            for (v, l) in basis.iter().zip(&lambda) {
                coef[*v] -= l;
            }
            let coef = primitive_integer(&coef);
            if cell.marks.contains(&a) {
                equalities.insert(coef);
            } else {
                strict.insert(coef);
            }
        }
    }
    let wrap = |c: Vec<Rational>| AffineFunctional::linear(Vector::new(c));
    Ok(SecondaryCone {
        ambient: npts,
        equalities: equalities.into_iter().map(wrap).collect(),
        strict: strict.into_iter().map(wrap).collect(),
    })
}

/// H-representation of the open secondary cone of `s`, with a certificate that
/// it is nonempty and induces `s`.
pub fn secondary_cone(config: &PointConfiguration, s: &Subdivision) -> Result<SecondaryCone> {
    Ok(certified_cone(config, s)?.0)
}

/// The secondary cone together with a lifting in its relative interior.
pub fn certified_cone(config: &PointConfiguration, s: &Subdivision) -> Result<(SecondaryCone, Lifting)> {
    let cone = cone_system(config, s)?;
    let sample = lp_feasible_strict(&cone.strict, &[], &cone.equalities, config.len())?
        .ok_or_else(|| Error::NoCertificate(format!("{:?}", s.owned_key())))?;
    let eta = Lifting(sample.into_coords());
    if induce_subdivision(config, &eta)? != *s {
        return Err(Error::NoCertificate(format!("{:?} is not a subdivision", s.owned_key())));
    }
    Ok((cone, eta))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_triangulations: usize,
    pub max_cells: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_triangulations: 5_000, max_cells: 50_000 }
    }
}

/// Coherent subdivisions under refinement. Element `i` has rank `ranks[i]`
/// (zero for triangulations) and a lifting `samples[i]` in its open cone.
#[derive(Clone, Debug)]
pub struct SubdivisionPoset {
    pub subdivisions: Vec<Subdivision>,
    pub ranks: Vec<usize>,
    pub samples: Vec<Lifting>,
    /// `(i, j)` when `j` covers `i`, i.e. `i` refines `j` with rank one less.
    pub covers: Vec<(usize, usize)>,
}

impl SubdivisionPoset {
    pub fn len(&self) -> usize {
        self.subdivisions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subdivisions.is_empty()
    }

    pub fn triangulations(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.ranks[i] == 0)
    }

    pub fn index_of(&self, s: &Subdivision) -> Option<usize> {
        self.subdivisions.iter().position(|t| t == s)
    }
}

pub fn enumerate_coherent_subdivisions(config: &PointConfiguration) -> Result<SubdivisionPoset> {
    enumerate_with_limits(config, Limits::default())
}

/// Walk the regular triangulations by flips from a placing triangulation; the
/// faces of each chamber's cone give the coarser subdivisions.
pub fn enumerate_with_limits(config: &PointConfiguration, limits: Limits) -> Result<SubdivisionPoset> {
    let npts = config.len();
    let all_pts: Vec<&Vector> = config.points().iter().collect();
    let basis = affine_basis(&all_pts);
    let free: Vec<usize> = (0..npts).filter(|i| !basis.contains(i)).collect();
    let d = free.len();

    let mut found: HashMap<Vec<Vec<usize>>, (Subdivision, Lifting, usize)> = HashMap::new();
    let trivial_eta = Lifting::zeros(npts);
    let trivial = induce_subdivision(config, &trivial_eta)?;
    found.insert(trivial.owned_key(), (trivial, trivial_eta, d));

    if d > 0 {
        let placing = placing_triangulation(config.points())?;
        let seed = Subdivision::from_marks(config, placing)?;
        let (_, seed_eta) = certified_cone(config, &seed)?;
        let seed = induce_subdivision(config, &seed_eta)?;
        let mut visited: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
        visited.insert(seed.owned_key());
        let mut queue = VecDeque::from([seed]);
        while let Some(t) = queue.pop_front() {
            for (face, eta, face_dim) in chamber_faces(config, &t, &free)? {
                let key = face.owned_key();
                if face_dim + 1 == d && !is_triangulation(&face) {
                    let next = flip(config, &t, &face)?;
                    if visited.insert(next.owned_key()) {
                        if visited.len() > limits.max_triangulations {
                            return Err(Error::ResourceCap {
                                what: "triangulations".into(),
                                limit: limits.max_triangulations,
                            });
                        }
                        queue.push_back(next);
                    }
                }
                found.entry(key).or_insert((face, eta, d - face_dim));
                if found.len() > limits.max_cells {
                    return Err(Error::ResourceCap { what: "subdivisions".into(), limit: limits.max_cells });
                }
            }
        }
    }

    let mut items: Vec<(Subdivision, Lifting, usize)> = found.into_values().collect();
    items.sort_by(|a, b| (a.2, a.0.key()).cmp(&(b.2, b.0.key())));
    let mut covers = Vec::new();
    for i in 0..items.len() {
        for j in 0..items.len() {
            if items[j].2 == items[i].2 + 1 && refines(&items[i].0, &items[j].0)? {
                covers.push((i, j));
            }
        }
    }
    let mut subdivisions = Vec::with_capacity(items.len());
    let mut samples = Vec::with_capacity(items.len());
    let mut ranks = Vec::with_capacity(items.len());
    for (s, e, r) in items {
        subdivisions.push(s);
        samples.push(e);
        ranks.push(r);
    }
    Ok(SubdivisionPoset { subdivisions, ranks, samples, covers })
}

/// Every face of the closed cone of triangulation `t`, modulo the lineality
/// space (liftings vanishing on an affine basis), with a relative-interior
/// sample and the face dimension.
fn chamber_faces(
    config: &PointConfiguration,
    t: &Subdivision,
    free: &[usize],
) -> Result<Vec<(Subdivision, Lifting, usize)>> {
    let npts = config.len();
    let cone = cone_system(config, t)?;
    let mut constraints: Vec<Vec<Rational>> = cone
        .strict
        .iter()
        .map(|f| primitive_integer(&free.iter().map(|&i| f.linear[i].clone()).collect::<Vec<_>>()))
        .collect();
    constraints.sort();
    constraints.dedup();
    // Extreme rays of {x : c . x >= 0} are the facet normals of the cone spanned by the constraints.
    let rays = cone_facets(&constraints)?;
    let nrays = rays.len();
    let mut ray_sets: BTreeSet<Vec<usize>> = BTreeSet::new();
    let per_constraint: Vec<Vec<usize>> =
        (0..constraints.len()).map(|k| (0..nrays).filter(|&r| rays[r].members.contains(&k)).collect()).collect();
    ray_sets.insert((0..nrays).collect());
    let mut frontier: Vec<Vec<usize>> = vec![(0..nrays).collect()];
    while let Some(f) = frontier.pop() {
        for g in &per_constraint {
            let meet: Vec<usize> = f.iter().copied().filter(|x| g.contains(x)).collect();
            if ray_sets.insert(meet.clone()) {
                frontier.push(meet);
            }
        }
    }
    ray_sets.insert(Vec::new());
    let mut out = Vec::with_capacity(ray_sets.len());
    for set in ray_sets {
        let mut x = vec![Rational::zero(); npts];
        for &r in &set {
            for (k, &i) in free.iter().enumerate() {
                x[i] += &rays[r].normal[k];
            }
        }
        let dims: Vec<Vec<Rational>> = set.iter().map(|&r| rays[r].normal.clone()).collect();
        let face_dim = rank(&dims);
        let eta = Lifting(x);
        let s = induce_subdivision(config, &eta)?;
        out.push((s, eta, face_dim));
    }
    Ok(out)
}

/// The triangulation across the wall `face` from `t`: each circuit cell of the
/// wall swaps its triangulation.
fn flip(config: &PointConfiguration, t: &Subdivision, face: &Subdivision) -> Result<Subdivision> {
    let n = config.dimension();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for wall_cell in face.maximal_cells() {
        let inside: Vec<Vec<usize>> = t
            .maximal_cells()
            .iter()
            .filter(|c| c.marks.iter().all(|m| wall_cell.marks.contains(m)))
            .map(|c| c.marks.clone())
            .collect();
        if wall_cell.marks.len() == n + 1 {
            cells.extend(inside);
            continue;
        }
        if wall_cell.marks.len() != n + 2 {
            return Err(Error::Degenerate(format!("wall cell {:?} is not a circuit cell", wall_cell.marks)));
        }
        let m = &wall_cell.marks;
        let cols: Vec<Vec<Rational>> = (0..=n)
            .map(|row| {
                m.iter().map(|&i| if row < n { config.point(i)[row].clone() } else { Rational::one() }).collect()
            })
            .collect();
        let dep = nullspace(&cols, m.len());
        if dep.len() != 1 {
            return Err(Error::Degenerate(format!("wall cell {:?} has no unique dependence", m)));
        }
        let family = |positive: bool| -> Vec<Vec<usize>> {
            let mut f: Vec<Vec<usize>> = m
                .iter()
                .enumerate()
                .filter(|(j, _)| if positive { dep[0][*j].is_positive() } else { dep[0][*j].is_negative() })
                .map(|(j, _)| m.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, &x)| x).collect())
                .collect();
            f.sort();
            f
        };
        let (plus, minus) = (family(true), family(false));
        let mut current = inside;
        current.sort();
        if current == plus {
            cells.extend(minus);
        } else if current == minus {
            cells.extend(plus);
        } else {
            return Err(Error::Degenerate(format!("triangulation does not refine wall cell {:?}", m)));
        }
    }
    let candidate = Subdivision::from_marks(config, cells)?;
    let (_, eta) = certified_cone(config, &candidate)?;
    induce_subdivision(config, &eta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::build_configuration;

    fn config(c: &[&[i64]]) -> PointConfiguration {
        build_configuration(c.iter().map(|x| Vector::from_ints(x)).collect()).unwrap()
    }

    fn quad() -> PointConfiguration {
        config(&[&[0, 0], &[1, 0], &[0, 1], &[-1, 0], &[-1, -1]])
    }

    fn square() -> PointConfiguration {
        config(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]])
    }

    #[test]
    fn four_triangle_example() {
        let s = induce_subdivision(&quad(), &Lifting::from_ints(&[-1, 1, 0, 2, 0])).unwrap();
        assert_eq!(s.owned_key(), vec![vec![0, 1, 2], vec![0, 1, 4], vec![0, 2, 4], vec![2, 3, 4]]);
        assert!(is_triangulation(&s));
        validate_subdivision(&quad(), &s).unwrap();
    }

    #[test]
    fn star_triangulation() {
        let q = quad();
        let s = induce_subdivision(&q, &Lifting::from_ints(&[-1, 0, 0, 0, 0])).unwrap();
        assert_eq!(s.owned_key(), vec![vec![0, 1, 2], vec![0, 1, 4], vec![0, 2, 3], vec![0, 3, 4]]);
        let cone = secondary_cone(&q, &s).unwrap();
        assert!(cone.contains(&Lifting::from_ints(&[-1, 0, 0, 0, 0])));
        assert_eq!(cone.codimension(), 0);
        let trivial = induce_subdivision(&q, &Lifting::zeros(5)).unwrap();
        assert_eq!(trivial.owned_key(), vec![vec![0, 1, 2, 3, 4]]);
        assert!(refines(&s, &trivial).unwrap());
        assert!(!refines(&trivial, &s).unwrap());
        assert!(!is_triangulation(&trivial));
    }

    #[test]
    fn square_enumeration() {
        let sq = square();
        let poset = enumerate_coherent_subdivisions(&sq).unwrap();
        assert_eq!(poset.len(), 3);
        assert_eq!(poset.triangulations().count(), 2);
        assert_eq!(poset.covers.len(), 2);
        let (a, b) = (&poset.subdivisions[0], &poset.subdivisions[1]);
        assert!(!refines(a, b).unwrap() && !refines(b, a).unwrap());
    }

    #[test]
    fn simplex_has_full_space_cone() {
        let tri = config(&[&[0, 0], &[1, 0], &[0, 1]]);
        let s = induce_subdivision(&tri, &Lifting::zeros(3)).unwrap();
        let cone = secondary_cone(&tri, &s).unwrap();
        assert!(cone.strict.is_empty() && cone.equalities.is_empty());
        assert_eq!(enumerate_coherent_subdivisions(&tri).unwrap().len(), 1);
    }

    #[test]
    fn cells_and_boundary() {
        let s = induce_subdivision(&quad(), &Lifting::from_ints(&[-1, 0, 0, 0, 0])).unwrap();
        assert_eq!(s.cells_of_dim(0).count(), 5);
        assert_eq!(s.cells_of_dim(1).count(), 8);
        assert_eq!(s.cells_of_dim(2).count(), 4);
        assert_eq!(s.cells().iter().filter(|c| c.dim == 1 && c.is_boundary()).count(), 4);
    }

    #[test]
    fn incoherent_cells_have_no_certificate() {
        let sq = square();
        let bogus = Subdivision::from_marks(&sq, vec![vec![0, 1, 2]]).unwrap();
        assert!(matches!(secondary_cone(&sq, &bogus), Err(Error::NoCertificate(_))));
        assert!(validate_subdivision(&sq, &bogus).is_err());
    }
}

#[cfg(test)]
mod enumeration_tests {
    use super::*;
    use crate::config::build_configuration;

    fn rank_counts(c: &[&[i64]]) -> Vec<usize> {
        let cfg = build_configuration(c.iter().map(|x| Vector::from_ints(x)).collect()).unwrap();
        let p = enumerate_coherent_subdivisions(&cfg).unwrap();
        let top = *p.ranks.iter().max().unwrap();
        (0..=top).map(|r| p.ranks.iter().filter(|&&x| x == r).count()).collect()
    }

    #[test]
    fn polygons_and_bipyramid() {
        assert_eq!(rank_counts(&[&[0, 0], &[2, 0], &[3, 2], &[1, 3], &[-1, 1]]), vec![5, 5, 1]);
        assert_eq!(rank_counts(&[&[3, 9], &[2, 4], &[1, 1], &[0, 0], &[-1, 1], &[-2, 4]]), vec![14, 21, 9, 1]);
        assert_eq!(rank_counts(&[&[1, 0, 0], &[0, 1, 0], &[-1, -1, 0], &[0, 0, 1], &[0, 0, -1]]), vec![2, 1]);
        assert_eq!(rank_counts(&[&[0, 0], &[1, 0], &[0, 1], &[-1, 0], &[-1, -1]]).len(), 3);
    }
}
