//! Painted tropical complexes: the sign of `f(u) - u(alpha) - c` on each cell.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::config::{sign_vector, PointConfiguration, Sign, SignVector};
use crate::error::{Error, Result};
use crate::geometry::{affine_basis, barycentric, lp_feasible_strict, rank, AffineFunctional, Rational, Vector};
use crate::parallel::par_map;
use crate::subdivision::{certified_cone, enumerate_with_limits, Lifting, Limits, SecondaryCone};
use crate::tropical::{dual_complex, TropicalComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Purple,
    Blue,
}

impl Color {
    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Purple => "purple",
            Color::Blue => "blue",
        }
    }

    pub fn from_name(s: &str) -> Option<Color> {
        match s {
            "red" => Some(Color::Red),
            "purple" => Some(Color::Purple),
            "blue" => Some(Color::Blue),
            _ => None,
        }
    }

    /// Red for positive, purple for zero, blue for negative.
    pub fn of(value: &Rational) -> Color {
        match Sign::of(value) {
            Sign::Plus => Color::Red,
            Sign::Zero => Color::Purple,
            Sign::Minus => Color::Blue,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaintSpec {
    pub eta: Lifting,
    pub c: Rational,
    pub alpha: Vector,
}

#[derive(Clone, Debug)]
pub struct PaintedComplex {
    pub complex: TropicalComplex,
    /// One color per cell of `complex`, in cell order.
    pub colors: Vec<Color>,
    pub spec: PaintSpec,
}

impl PaintedComplex {
    /// Colors of the 0-cells, indexed by maximal cell of the subdivision.
    pub fn vertex_colors(&self) -> Vec<Color> {
        (0..self.complex.vertex_points.len()).map(|i| self.colors[self.complex.vertex_cell(i)]).collect()
    }

    /// Identity of the painted complex up to isotopy.
    pub fn key(&self) -> (Vec<Vec<usize>>, Vec<Color>) {
        (self.complex.subdivision.owned_key(), self.vertex_colors())
    }
}

/// `g(u) = f(u) - u(alpha) - c` at the dual vertex of maximal cell `i`.
pub fn vertex_value(p: &TropicalComplex, i: usize, alpha: &Vector, c: &Rational) -> Rational {
    &p.vertex_values[i] - p.vertex_points[i].dot(alpha) - c
}

/// Rate of change of `g` along the ray of facet `k`: `d_k - nu_k(alpha)`.
pub fn ray_slope(config: &PointConfiguration, k: usize, alpha: &Vector) -> Rational {
    let f = &config.facets()[k];
    &f.offset - f.normal.dot(alpha)
}

fn color_of_cell(vertex_values: &[Rational], slopes: &[Rational]) -> Color {
    let lo = vertex_values.iter().min().expect("cell has a vertex");
    let hi = vertex_values.iter().max().expect("cell has a vertex");
    let up = slopes.iter().any(Signed::is_positive);
    let down = slopes.iter().any(Signed::is_negative);
    if lo == hi && !up && !down {
        return Color::of(lo);
    }
    // The values on the relative interior form the open interval (lo, hi), unbounded where rays climb or fall.
    let negative = down || lo.is_negative();
    let positive = up || hi.is_positive();
    match (negative, positive) {
        (true, true) => Color::Purple,
        (false, _) => Color::Red,
        (true, false) => Color::Blue,
    }
}

/// Color every cell by the exact range of `g` on its relative interior.
pub fn paint(p: &TropicalComplex, spec: &PaintSpec) -> Result<PaintedComplex> {
    if spec.alpha.dim() != p.dimension() {
        return Err(Error::DimensionMismatch { expected: p.dimension(), found: spec.alpha.dim() });
    }
    if spec.eta != p.eta {
        let induced = crate::subdivision::induce_subdivision(&p.config, &spec.eta)?;
        if induced != p.subdivision {
            return Err(Error::input("the lifting does not induce this complex"));
        }
    }
    let (q, _) = dual_complex(&p.config, &spec.eta)?;
    let values: Vec<Rational> = (0..q.vertex_points.len()).map(|i| vertex_value(&q, i, &spec.alpha, &spec.c)).collect();
    let slopes: Vec<Rational> = (0..q.config.facets().len()).map(|k| ray_slope(&q.config, k, &spec.alpha)).collect();
    let colors = q
        .cells
        .iter()
        .map(|cell| {
            let vv: Vec<Rational> = cell.vertex_ids.iter().map(|&i| values[i].clone()).collect();
            let ss: Vec<Rational> = cell.ray_facets.iter().map(|&k| slopes[k].clone()).collect();
            color_of_cell(&vv, &ss)
        })
        .collect();
    Ok(PaintedComplex { complex: q, colors, spec: spec.clone() })
}

/// Extend a coloring of the 0-cells (indexed by maximal cell) to every cell,
/// using only vertex colors and the asymptotic signs of the rays.
pub fn colors_from_vertices(
    p: &TropicalComplex,
    vertex_colors: &[Color],
    signs: &SignVector,
    alpha: &Vector,
) -> Result<Vec<Color>> {
    if vertex_colors.len() != p.vertex_points.len() {
        return Err(Error::input(format!(
            "{} vertex colors for {} vertices",
            vertex_colors.len(),
            p.vertex_points.len()
        )));
    }
    if signs.0.len() != p.config.facets().len() {
        return Err(Error::input("sign vector length differs from the facet count"));
    }
    check_threshold(p, vertex_colors, alpha)?;
    Ok(p.cells
        .iter()
        .map(|cell| {
            let has = |c: Color| cell.vertex_ids.iter().any(|&i| vertex_colors[i] == c);
            let ray = |s: Sign| cell.ray_facets.iter().any(|&k| signs.0[k] == s);
            let high = has(Color::Red) || ray(Sign::Plus);
            let low = has(Color::Blue) || ray(Sign::Minus);
            match (high, low) {
                (true, true) => Color::Purple,
                (true, false) => Color::Red,
                (false, true) => Color::Blue,
                (false, false) => Color::Purple,
            }
        })
        .collect())
}

/// Some `c` must separate the vertex values `f(v) - v(alpha)` as the colors say.
fn check_threshold(p: &TropicalComplex, vertex_colors: &[Color], alpha: &Vector) -> Result<()> {
    let zero = Rational::zero();
    let offsets: Vec<Rational> = (0..vertex_colors.len()).map(|i| vertex_value(p, i, alpha, &zero)).collect();
    let of = |c: Color| -> Vec<&Rational> {
        (0..offsets.len()).filter(|&i| vertex_colors[i] == c).map(|i| &offsets[i]).collect()
    };
    let (red, purple, blue) = (of(Color::Red), of(Color::Purple), of(Color::Blue));
    let ok = if let Some(&t) = purple.first() {
        purple.iter().all(|&x| x == t) && red.iter().all(|&x| x > t) && blue.iter().all(|&x| x < t)
    } else {
        match (red.iter().min(), blue.iter().max()) {
            (Some(r), Some(b)) => b < r,
            _ => true,
        }
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Inconsistent("no level c separates the vertex colors".into()))
    }
}

/// For a 0-cell: affine weights `b_i` over a basis of its marking with
/// `sum b_i a_i = alpha`, and the functional `b_p(eta, c) = sum b_i eta(a_i) - c`,
/// which equals `g` at the vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaintingConstraint {
    pub vertex: usize,
    pub basis: Vec<usize>,
    pub coefficients: Vec<Rational>,
    pub functional: AffineFunctional,
}

pub fn painting_constraints(p: &TropicalComplex, alpha: &Vector) -> Result<Vec<PaintingConstraint>> {
    let npts = p.config.len();
    p.subdivision
        .maximal_cells()
        .iter()
        .enumerate()
        .map(|(i, cell)| {
            let pts: Vec<&Vector> = cell.marks.iter().map(|&m| p.config.point(m)).collect();
            let basis: Vec<usize> = affine_basis(&pts).into_iter().map(|j| cell.marks[j]).collect();
            let basis_pts: Vec<&Vector> = basis.iter().map(|&m| p.config.point(m)).collect();
            let coefficients =
                barycentric(&basis_pts, alpha).ok_or_else(|| Error::input("marking does not span the space"))?;
            let mut lin = vec![Rational::zero(); npts + 1];
            for (m, b) in basis.iter().zip(&coefficients) {
                lin[*m] = b.clone();
            }
            lin[npts] = -Rational::one();
            Ok(PaintingConstraint {
                vertex: i,
                basis,
                coefficients,
                functional: AffineFunctional::linear(Vector::new(lin)),
            })
        })
        .collect()
}

/// A relatively open cone in `R^A x R` of pairs `(eta, c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaintingCone {
    pub ambient: usize,
    pub equalities: Vec<AffineFunctional>,
    pub strict: Vec<AffineFunctional>,
}

impl PaintingCone {
    fn point(eta: &Lifting, c: &Rational) -> Vector {
        let mut x = eta.0.clone();
        x.push(c.clone());
        Vector::new(x)
    }

    pub fn contains(&self, eta: &Lifting, c: &Rational) -> bool {
        let x = Self::point(eta, c);
        self.equalities.iter().all(|f| f.eval(&x).is_zero()) && self.strict.iter().all(|f| f.eval(&x).is_positive())
    }

    pub fn contains_in_closure(&self, eta: &Lifting, c: &Rational) -> bool {
        let x = Self::point(eta, c);
        self.equalities.iter().all(|f| f.eval(&x).is_zero()) && self.strict.iter().all(|f| !f.eval(&x).is_negative())
    }

    pub fn sample(&self) -> Result<Option<(Lifting, Rational)>> {
        Ok(lp_feasible_strict(&self.strict, &[], &self.equalities, self.ambient)?.map(|x| {
            let mut v = x.into_coords();
            let c = v.pop().expect("c coordinate");
            (Lifting(v), c)
        }))
    }

    pub fn codimension(&self) -> usize {
        let rows: Vec<Vec<Rational>> = self.equalities.iter().map(|f| f.linear.coords().to_vec()).collect();
        rank(&rows)
    }
}

fn padded(cone: &SecondaryCone) -> (Vec<AffineFunctional>, Vec<AffineFunctional>) {
    (cone.equalities.iter().map(|f| f.padded(1)).collect(), cone.strict.iter().map(|f| f.padded(1)).collect())
}

fn add_vertex_constraint(
    eq: &mut Vec<AffineFunctional>,
    strict: &mut Vec<AffineFunctional>,
    constraint: &PaintingConstraint,
    color: Color,
) {
    match color {
        Color::Red => strict.push(constraint.functional.clone()),
        Color::Purple => eq.push(constraint.functional.clone()),
        Color::Blue => strict.push(constraint.functional.negated()),
    }
}

/// The secondary-cone conditions of the underlying subdivision together with
/// the sign of `b_p` at each 0-cell: positive when red, zero when purple,
/// negative when blue.
pub fn painting_cone(painted: &PaintedComplex, alpha: &Vector) -> Result<PaintingCone> {
    let p = &painted.complex;
    let (cone, _) = certified_cone(&p.config, &p.subdivision)?;
    let (mut equalities, mut strict) = padded(&cone);
    let colors = painted.vertex_colors();
    for k in painting_constraints(p, alpha)? {
        add_vertex_constraint(&mut equalities, &mut strict, &k, colors[k.vertex]);
    }
    Ok(PaintingCone { ambient: p.config.len() + 1, equalities, strict })
}

/// All painted complexes of `(config, alpha)` ordered by the face relation of
/// their cones: `i` below `j` when the cone of `j` lies in the closure of the
/// cone of `i`. Rank zero elements have full-dimensional cones.
#[derive(Clone, Debug)]
pub struct PaintedPoset {
    pub complexes: Vec<PaintedComplex>,
    pub cones: Vec<PaintingCone>,
    pub ranks: Vec<usize>,
    pub covers: Vec<(usize, usize)>,
}

impl PaintedPoset {
    pub fn len(&self) -> usize {
        self.complexes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.complexes.is_empty()
    }

    /// Whether element `i` lies below element `j` (or equals it).
    pub fn below(&self, i: usize, j: usize) -> bool {
        let s = &self.complexes[j].spec;
        self.cones[i].contains_in_closure(&s.eta, &s.c)
    }
}

pub fn enumerate_painted_complexes(config: &PointConfiguration, alpha: &Vector) -> Result<PaintedPoset> {
    enumerate_painted_with_limits(config, alpha, Limits::default())
}

pub fn enumerate_painted_with_limits(
    config: &PointConfiguration,
    alpha: &Vector,
    limits: Limits,
) -> Result<PaintedPoset> {
    sign_vector(config, alpha)?;
    let subdivisions = enumerate_with_limits(config, limits)?;
    let per_subdivision = par_map(&subdivisions.samples, |eta| paintings_over(config, eta, alpha));
    let mut items: Vec<(PaintedComplex, PaintingCone, usize)> = Vec::new();
    for batch in per_subdivision {
        items.extend(batch?);
        if items.len() > limits.max_cells {
            return Err(Error::ResourceCap { what: "painted complexes".into(), limit: limits.max_cells });
        }
    }
    items.sort_by(|a, b| a.2.cmp(&b.2).then_with(|| a.0.key().cmp(&b.0.key())));
    let mut complexes = Vec::with_capacity(items.len());
    let mut cones = Vec::with_capacity(items.len());
    let mut ranks = Vec::with_capacity(items.len());
    for (p, k, r) in items {
        complexes.push(p);
        cones.push(k);
        ranks.push(r);
    }
    let mut poset = PaintedPoset { complexes, cones, ranks, covers: Vec::new() };
    for i in 0..poset.len() {
        for j in 0..poset.len() {
            if poset.ranks[j] == poset.ranks[i] + 1 && poset.below(i, j) {
                poset.covers.push((i, j));
            }
        }
    }
    Ok(poset)
}

/// Every realizable coloring of the complex of one subdivision: a search over
/// 0-cell colors with an exact feasibility test at each step.
fn paintings_over(
    config: &PointConfiguration,
    eta: &Lifting,
    alpha: &Vector,
) -> Result<Vec<(PaintedComplex, PaintingCone, usize)>> {
    let (p, s) = dual_complex(config, eta)?;
    let (cone, _) = certified_cone(config, &s)?;
    let base = padded(&cone);
    let constraints = painting_constraints(&p, alpha)?;
    let mut out = Vec::new();
    let mut stack: Vec<Vec<Color>> = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        let (mut eq, mut strict) = base.clone();
        for (k, &col) in prefix.iter().enumerate() {
            add_vertex_constraint(&mut eq, &mut strict, &constraints[k], col);
        }
        let cone = PaintingCone { ambient: config.len() + 1, equalities: eq, strict };
        let Some((eta, c)) = cone.sample()? else {
            continue;
        };
        if prefix.len() < constraints.len() {
            for col in [Color::Blue, Color::Purple, Color::Red] {
                let mut next = prefix.clone();
                next.push(col);
                stack.push(next);
            }
            continue;
        }
        let (q, _) = dual_complex(config, &eta)?;
        let painted = paint(&q, &PaintSpec { eta, c, alpha: alpha.clone() })?;
        debug_assert_eq!(painted.vertex_colors(), prefix);
        let rank = cone.codimension();
        out.push((painted, cone, rank));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::build_configuration;
    use crate::geometry::{int, rat};

    fn quad() -> PointConfiguration {
        build_configuration([[0, 0], [1, 0], [0, 1], [-1, 0], [-1, -1]].iter().map(|c| Vector::from_ints(c)).collect())
            .unwrap()
    }

    fn third() -> Vector {
        Vector::new(vec![rat(1, 3), rat(1, 3)])
    }

    fn star(c: Rational) -> PaintedComplex {
        let q = quad();
        let eta = Lifting::from_ints(&[-1, 0, 0, 0, 0]);
        let (p, _) = dual_complex(&q, &eta).unwrap();
        paint(&p, &PaintSpec { eta, c, alpha: third() }).unwrap()
    }

    fn vertex_color_at(p: &PaintedComplex, at: &[i64]) -> Color {
        let target = Vector::from_ints(at);
        let i = p.complex.vertex_points.iter().position(|v| *v == target).unwrap();
        p.colors[p.complex.vertex_cell(i)]
    }

    #[test]
    fn star_vertex_colors() {
        let p = star(int(-1));
        assert_eq!(vertex_color_at(&p, &[1, -1]), Color::Purple);
        assert_eq!(vertex_color_at(&p, &[-1, -1]), Color::Red);
        assert_eq!(vertex_color_at(&p, &[1, 0]), Color::Blue);
        assert_eq!(vertex_color_at(&p, &[-1, 2]), Color::Blue);
    }

    #[test]
    fn extreme_levels() {
        let low = star(rat(-3, 2));
        assert!(low.vertex_colors().iter().all(|&c| c == Color::Red));
        for (k, cell) in low.complex.cells.iter().enumerate() {
            if !cell.is_compact() && cell.dim == 1 {
                assert_eq!(low.colors[k], Color::Purple);
            }
        }
        let high = star(int(10));
        assert!(high.colors.iter().all(|&c| c == Color::Blue));
    }

    #[test]
    fn reconstruction_matches() {
        let q = quad();
        for c in [rat(-3, 2), int(-1), rat(-1, 3), int(0), rat(-2, 3)] {
            let p = star(c);
            let signs = sign_vector(&q, &third()).unwrap();
            assert_eq!(colors_from_vertices(&p.complex, &p.vertex_colors(), &signs, &third()).unwrap(), p.colors);
        }
    }

    #[test]
    fn inconsistent_vertex_colors() {
        let p = star(int(-1));
        let mut colors = p.vertex_colors();
        for c in colors.iter_mut() {
            *c = match *c {
                Color::Red => Color::Blue,
                Color::Blue => Color::Red,
                x => x,
            };
        }
        let signs = sign_vector(&quad(), &third()).unwrap();
        assert!(matches!(colors_from_vertices(&p.complex, &colors, &signs, &third()), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn cone_round_trip() {
        let p = star(int(-1));
        let cone = painting_cone(&p, &third()).unwrap();
        assert!(cone.contains(&p.spec.eta, &p.spec.c));
        let (eta, c) = cone.sample().unwrap().unwrap();
        let (q, _) = dual_complex(&quad(), &eta).unwrap();
        let again = paint(&q, &PaintSpec { eta, c, alpha: third() }).unwrap();
        assert_eq!(again.key(), p.key());
        let all_red = painting_cone(&star(rat(-3, 2)), &third()).unwrap();
        let eta = Lifting::from_ints(&[-1, 0, 0, 0, 0]);
        assert!(all_red.contains(&eta, &rat(-7, 5)));
        assert!(!all_red.contains(&eta, &rat(-4, 3)));
    }

    #[test]
    fn segment_paintings_form_a_path() {
        let seg = build_configuration(vec![Vector::from_ints(&[0]), Vector::from_ints(&[1])]).unwrap();
        let poset = enumerate_painted_complexes(&seg, &Vector::new(vec![rat(1, 2)])).unwrap();
        assert_eq!(poset.len(), 3);
        assert_eq!(poset.ranks, vec![0, 0, 1]);
        assert_eq!(poset.covers.len(), 2);
    }
}
