//! GKZ vectors, secondary polytope vertices, and ranked face lattices.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt::Write as _;

use num_traits::Zero;

use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::geometry::{simplex_normalized_volume, Rational, Vector};
use crate::subdivision::{enumerate_with_limits, is_triangulation, Limits, Subdivision, SubdivisionPoset};

/// Per point: total normalized volume of the simplices containing it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GkzVector(pub Vec<Rational>);

impl GkzVector {
    pub fn total(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn pair(&self, eta: &[Rational]) -> Rational {
        self.0.iter().zip(eta).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
    }
}

pub fn gkz_vector(config: &PointConfiguration, t: &Subdivision) -> Result<GkzVector> {
    if !is_triangulation(t) {
        return Err(Error::NotTriangulation);
    }
    let mut phi = vec![Rational::zero(); config.len()];
    for cell in t.maximal_cells() {
        let verts: Vec<Vector> = cell.marks.iter().map(|&i| config.point(i).clone()).collect();
        let vol = simplex_normalized_volume(&verts)?;
        for &m in &cell.marks {
            phi[m] += &vol;
        }
    }
    Ok(GkzVector(phi))
}

/// GKZ vectors of all coherent triangulations, checked to be pairwise distinct.
pub fn secondary_polytope_vertices(config: &PointConfiguration) -> Result<Vec<(GkzVector, Subdivision)>> {
    vertices_of(config, &enumerate_with_limits(config, Limits::default())?)
}

pub fn vertices_of(config: &PointConfiguration, poset: &SubdivisionPoset) -> Result<Vec<(GkzVector, Subdivision)>> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for i in poset.triangulations() {
        let t = &poset.subdivisions[i];
        let phi = gkz_vector(config, t)?;
        if !seen.insert(phi.clone()) {
            return Err(Error::Verification(format!("two triangulations share the GKZ vector {:?}", phi.0)));
        }
        out.push((phi, t.clone()));
    }
    Ok(out)
}

/// A ranked poset given by its Hasse diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    pub labels: Vec<String>,
    pub ranks: Vec<usize>,
    /// `(lower, upper)` cover pairs, sorted.
    pub covers: Vec<(usize, usize)>,
}

impl FaceLattice {
    pub fn new(labels: Vec<String>, ranks: Vec<usize>, mut covers: Vec<(usize, usize)>) -> Self {
        covers.sort_unstable();
        covers.dedup();
        FaceLattice { labels, ranks, covers }
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Element counts per rank.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.ranks.iter().copied().max().map_or(0, |r| r + 1);
        (0..top).map(|r| self.ranks.iter().filter(|&&x| x == r).count()).collect()
    }

    pub fn upper(&self, i: usize) -> Vec<usize> {
        self.covers.iter().filter(|c| c.0 == i).map(|c| c.1).collect()
    }

    pub fn lower(&self, i: usize) -> Vec<usize> {
        self.covers.iter().filter(|c| c.1 == i).map(|c| c.0).collect()
    }

    /// Elements below or equal to `i`.
    pub fn down_set(&self, i: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([i]);
        let mut queue = VecDeque::from([i]);
        while let Some(x) = queue.pop_front() {
            for y in self.lower(x) {
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Graded check: every cover raises the rank by exactly one.
    pub fn is_graded(&self) -> bool {
        self.covers.iter().all(|&(a, b)| self.ranks[b] == self.ranks[a] + 1)
    }

    /// Hasse diagram in DOT, ranks as horizontal layers.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{name}\" {{");
        let _ = writeln!(s, "  rankdir=BT;");
        let _ = writeln!(s, "  node [shape=box, fontsize=10];");
        for r in 0..self.f_vector().len() {
            let _ = write!(s, "  {{ rank=same;");
            for i in (0..self.len()).filter(|&i| self.ranks[i] == r) {
                let _ = write!(s, " n{i};");
            }
            let _ = writeln!(s, " }}");
        }
        for i in 0..self.len() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", self.labels[i].replace('"', "\\\""));
        }
        for &(a, b) in &self.covers {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
        s.push_str("}\n");
        s
    }
}

fn mark_label(key: &[Vec<usize>]) -> String {
    key.iter().map(|c| c.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",")).collect::<Vec<_>>().join(" | ")
}

/// The face lattice of the secondary polytope: triangulations at rank zero,
/// the trivial subdivision on top, covers by refinement.
pub fn face_lattice_from_poset(poset: &SubdivisionPoset) -> FaceLattice {
    FaceLattice::new(
        poset.subdivisions.iter().map(|s| mark_label(&s.owned_key())).collect(),
        poset.ranks.clone(),
        poset.covers.clone(),
    )
}

struct Shape {
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    ranks: Vec<usize>,
    covers: HashSet<(usize, usize)>,
}

impl Shape {
    fn of(l: &FaceLattice) -> Shape {
        let mut up = vec![Vec::new(); l.len()];
        let mut down = vec![Vec::new(); l.len()];
        for &(a, b) in &l.covers {
            up[a].push(b);
            down[b].push(a);
        }
        Shape { up, down, ranks: l.ranks.clone(), covers: l.covers.iter().copied().collect() }
    }

    fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.up[i].iter().chain(&self.down[i]).copied()
    }
}

/// A rank- and cover-preserving bijection from `l1` to `l2`, if one exists.
pub fn lattice_isomorphic(l1: &FaceLattice, l2: &FaceLattice) -> Option<Vec<usize>> {
    if l1.len() != l2.len() || l1.covers.len() != l2.covers.len() || l1.f_vector() != l2.f_vector() {
        return None;
    }
    let (a, b) = (Shape::of(l1), Shape::of(l2));
    let (ca, cb) = refine_colors(&a, &b);
    let mut sorted_a = ca.clone();
    let mut sorted_b = cb.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return None;
    }
    // Visit order: breadth first from the highest ranks so each element after a
    // component's first is adjacent to an earlier one.
    let mut order = Vec::with_capacity(l1.len());
    let mut placed = vec![false; l1.len()];
    let mut starts: Vec<usize> = (0..l1.len()).collect();
    starts.sort_by_key(|&i| (std::cmp::Reverse(l1.ranks[i]), i));
    for s in starts {
        if placed[s] {
            continue;
        }
        placed[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for y in a.neighbors(x) {
                if !placed[y] {
                    placed[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; l1.len()];
    let mut inverse = vec![usize::MAX; l2.len()];
    if extend(&a, &b, (&ca, &cb), &order, 0, &mut map, &mut inverse) {
        Some(map)
    } else {
        None
    }
}

/// Colors of both posets refined jointly by rank and the colors of covering
/// and covered elements, until the partition is stable.
fn refine_colors(a: &Shape, b: &Shape) -> (Vec<usize>, Vec<usize>) {
    let mut ca: Vec<usize> = a.ranks.clone();
    let mut cb: Vec<usize> = b.ranks.clone();
    let mut classes = 0;
    loop {
        let key = |s: &Shape, c: &[usize], i: usize| {
            let mut up: Vec<usize> = s.up[i].iter().map(|&j| c[j]).collect();
            let mut down: Vec<usize> = s.down[i].iter().map(|&j| c[j]).collect();
            up.sort_unstable();
            down.sort_unstable();
            (c[i], up, down)
        };
        let ka: Vec<_> = (0..ca.len()).map(|i| key(a, &ca, i)).collect();
        let kb: Vec<_> = (0..cb.len()).map(|i| key(b, &cb, i)).collect();
        let ids: BTreeMap<_, usize> = ka
            .iter()
            .chain(&kb)
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, k)| (k, i))
            .collect();
        ca = ka.iter().map(|k| ids[k]).collect();
        cb = kb.iter().map(|k| ids[k]).collect();
        if ids.len() == classes {
            return (ca, cb);
        }
        classes = ids.len();
    }
}

fn extend(
    a: &Shape,
    b: &Shape,
    colors: (&[usize], &[usize]),
    order: &[usize],
    k: usize,
    map: &mut [usize],
    inverse: &mut [usize],
) -> bool {
    let Some(&x) = order.get(k) else {
        return true;
    };
    let anchor = a.neighbors(x).find(|&y| map[y] != usize::MAX);
    let candidates: Vec<usize> = match anchor {
        Some(y) => b.neighbors(map[y]).collect(),
        None => (0..b.ranks.len()).collect(),
    };
    for cand in candidates {
        if inverse[cand] != usize::MAX || colors.1[cand] != colors.0[x] {
            continue;
        }
        let consistent = a.neighbors(x).all(|y| {
            let fy = map[y];
            fy == usize::MAX
                || b.covers.contains(&(fy, cand)) == a.covers.contains(&(y, x))
                    && b.covers.contains(&(cand, fy)) == a.covers.contains(&(x, y))
        }) && b.neighbors(cand).all(|z| {
            // Mapped neighbors of the candidate must be images of neighbors of x.
            let y = inverse[z];
            y == usize::MAX || a.covers.contains(&(y, x)) || a.covers.contains(&(x, y))
        });
        if !consistent {
            continue;
        }
        map[x] = cand;
        inverse[cand] = x;
        if extend(a, b, colors, order, k + 1, map, inverse) {
            return true;
        }
        map[x] = usize::MAX;
        inverse[cand] = usize::MAX;
    }
    false
}
