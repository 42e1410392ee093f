//! Polygons with a marked point below one edge: rooted planar trees, painted
//! trees, edge length realization, and the multiplihedron.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::config::{build_configuration, sign_vector, PointConfiguration, Sign};
use crate::error::{Error, Result};
use crate::geometry::{int, rat, Rational, Vector};
use crate::painting::{paint, Color, PaintSpec, PaintedComplex};
use crate::painting_polytope::{verify_main_theorem_with_limits, TheoremReport};
use crate::secondary::FaceLattice;
use crate::subdivision::{certified_cone, Lifting, Limits, Subdivision};
use crate::tropical::{dual_complex, TropicalComplex};

/// Largest leaf count accepted by the enumerations.
pub const MAX_LEAVES: usize = 6;

/// The `(m+1)`-gon with vertices `a_i = (m - 2i, -(m - 2i)^2)`, counterclockwise.
pub fn ngon_configuration(m: usize) -> Result<PointConfiguration> {
    if m < 2 {
        return Err(Error::input(format!("a polygon needs m >= 2, got {m}")));
    }
    let points = (0..=m)
        .map(|i| {
            let x = m as i64 - 2 * i as i64;
            Vector::from_ints(&[x, -x * x])
        })
        .collect();
    build_configuration(points)
}

/// `m` for a polygon whose points `a_0 .. a_m` are its vertices in
/// counterclockwise order.
pub fn polygon_size(config: &PointConfiguration) -> Result<usize> {
    let not_polygon = || Error::input("expected the vertices of a polygon labelled counterclockwise");
    if config.dimension() != 2 || config.len() < 3 {
        return Err(not_polygon());
    }
    let m = config.len() - 1;
    let f = config.facets();
    if f.len() != m + 1 || f[0].points != [0, m] || (1..=m).any(|k| f[k].points != [k - 1, k]) {
        return Err(not_polygon());
    }
    Ok(m)
}

/// Pairs of non-adjacent vertices.
pub fn diagonals(m: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..=m {
        for j in i + 2..=m {
            if !(i == 0 && j == m) {
                out.push((i, j));
            }
        }
    }
    out
}

fn on_line(a: &Vector, b: &Vector, x: &Vector) -> bool {
    let (d, e) = (b.sub(a), x.sub(a));
    (&d[0] * &e[1] - &d[1] * &e[0]).is_zero()
}

/// Sign vector `(+, -, ..., -)` and no diagonal line through `alpha`.
pub fn check_admissible(config: &PointConfiguration, alpha: &Vector) -> Result<()> {
    let m = polygon_size(config)?;
    let s = sign_vector(config, alpha)?;
    if s.0[0] != Sign::Plus || s.0[1..].iter().any(|&x| x != Sign::Minus) {
        return Err(Error::input(format!("sign vector {s} is not (+, -, ..., -)")));
    }
    for (i, j) in diagonals(m) {
        if on_line(config.point(i), config.point(j), alpha) {
            return Err(Error::input(format!("alpha lies on the line through a{i} and a{j}")));
        }
    }
    Ok(())
}

/// A point just outside the edge `a_m a_0`, off every diagonal line.
pub fn admissible_alpha(config: &PointConfiguration) -> Result<Vector> {
    let m = polygon_size(config)?;
    let (a0, am) = (config.point(0), config.point(m));
    let mid = a0.add(am).scale(&rat(1, 2));
    let normal = &config.facets()[0].normal;
    let along = a0.sub(am);
    let shifts = [rat(0, 1), rat(1, 3), rat(-1, 3), rat(1, 5), rat(-1, 5), rat(1, 7), rat(-1, 7)];
    let mut eps = Rational::one();
    for _ in 0..64 {
        eps /= int(2);
        for x in &shifts {
            let alpha = mid.sub(&normal.scale(&eps)).add(&along.scale(&(x * &eps)));
            if check_admissible(config, &alpha).is_ok() {
                return Ok(alpha);
            }
        }
    }
    Err(Error::Degenerate("no admissible point found near the base edge".into()))
}

/// What hangs below a node of a [`RootedPlanarTree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Node(usize),
    /// The half-edge dual to `a_i a_{i+1}`.
    Leaf(usize),
}

/// The 0- and 1-cells of a tropical curve dual to a polygon subdivision,
/// directed from the root half-edge (dual to `a_0 a_m`) to the leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedPlanarTree {
    /// Node `k` is dual to maximal cell `k`; its sorted vertex indices.
    pub nodes: Vec<Vec<usize>>,
    /// Compact edges as `(parent, child)`.
    pub edges: Vec<(usize, usize)>,
    pub root: usize,
    /// `leaves[i]` carries the half-edge dual to `a_i a_{i+1}`.
    pub leaves: Vec<usize>,
}

impl RootedPlanarTree {
    /// Vertices `(first, last)` of node `k`: the diagonal dual to its in-edge.
    pub fn span(&self, k: usize) -> (usize, usize) {
        let v = &self.nodes[k];
        (v[0], v[v.len() - 1])
    }

    /// Children in planar order.
    pub fn children(&self, k: usize) -> Vec<Slot> {
        self.nodes[k]
            .windows(2)
            .map(|w| {
                if w[1] == w[0] + 1 {
                    Slot::Leaf(w[0])
                } else {
                    let c = (0..self.nodes.len()).find(|&c| self.span(c) == (w[0], w[1])).expect("child exists");
                    Slot::Node(c)
                }
            })
            .collect()
    }

    /// Hops from the root node.
    pub fn depth(&self, k: usize) -> usize {
        let mut d = 0;
        let mut cur = k;
        while let Some(&(p, _)) = self.edges.iter().find(|e| e.1 == cur) {
            d += 1;
            cur = p;
        }
        d
    }
}

pub fn tree_of_complex(p: &TropicalComplex) -> Result<RootedPlanarTree> {
    let m = polygon_size(&p.config)?;
    let nodes: Vec<Vec<usize>> = p.subdivision.maximal_cells().iter().map(|c| c.marks.clone()).collect();
    let span = |v: &Vec<usize>| (v[0], v[v.len() - 1]);
    let by_span: BTreeMap<(usize, usize), usize> = nodes.iter().enumerate().map(|(k, v)| (span(v), k)).collect();
    if by_span.len() != nodes.len() {
        return Err(Error::input("cells do not form a polygon dissection"));
    }
    let root = *by_span.get(&(0, m)).ok_or_else(|| Error::input("no cell contains the base edge"))?;
    let mut edges = Vec::new();
    let mut leaves = vec![usize::MAX; m];
    for (k, v) in nodes.iter().enumerate() {
        for w in v.windows(2) {
            if w[1] == w[0] + 1 {
                leaves[w[0]] = k;
            } else {
                let c = *by_span.get(&(w[0], w[1])).ok_or_else(|| Error::input("dangling diagonal"))?;
                edges.push((k, c));
            }
        }
    }
    let compact = p.cells.iter().filter(|c| c.dim == 1 && c.is_compact()).count();
    if compact != edges.len() || leaves.contains(&usize::MAX) {
        return Err(Error::input("1-skeleton is not a tree over the polygon"));
    }
    for &(a, b) in &edges {
        let d = [span(&nodes[b]).0, span(&nodes[b]).1];
        let cell = p.index_of_marking(&d).ok_or_else(|| Error::input("missing edge cell"))?;
        let mut ids = p.cells[cell].vertex_ids.clone();
        ids.sort_unstable();
        if ids != [a.min(b), a.max(b)] {
            return Err(Error::input("edge cell does not join its nodes"));
        }
    }
    Ok(RootedPlanarTree { nodes, edges, root, leaves })
}

/// A planar rooted tree whose edges are painted or not. Each node stores the
/// paint of the edge above it; leaves are unpainted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PaintedTree {
    Leaf,
    Node { painted: bool, children: Vec<PaintedTree> },
}

impl PaintedTree {
    pub fn node(painted: bool, children: Vec<PaintedTree>) -> Self {
        PaintedTree::Node { painted, children }
    }

    /// Paint of the edge entering this subtree.
    pub fn painted(&self) -> bool {
        matches!(self, PaintedTree::Node { painted: true, .. })
    }

    pub fn leaves(&self) -> usize {
        match self {
            PaintedTree::Leaf => 1,
            PaintedTree::Node { children, .. } => children.iter().map(PaintedTree::leaves).sum(),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            PaintedTree::Leaf => 0,
            PaintedTree::Node { children, .. } => 1 + children.iter().map(PaintedTree::node_count).sum::<usize>(),
        }
    }

    pub fn is_bivalent(&self) -> bool {
        matches!(self, PaintedTree::Node { children, .. } if children.len() == 1)
    }

    /// Binary in the painted sense: a vertex of the multiplihedron.
    pub fn is_binary(&self) -> bool {
        match self {
            PaintedTree::Leaf => true,
            PaintedTree::Node { painted, children } => {
                let ok = match children.len() {
                    1 => true,
                    2 => *painted == children[0].painted(),
                    _ => false,
                };
                ok && children.iter().all(PaintedTree::is_binary)
            }
        }
    }

    /// Root painted, leaves unpainted, and every node of an allowed kind.
    pub fn validate(&self) -> Result<()> {
        if !self.painted() {
            return Err(Error::InvalidTree(format!("{self}: the root must be painted")));
        }
        self.validate_below()
    }

    fn validate_below(&self) -> Result<()> {
        let PaintedTree::Node { painted, children } = self else {
            return Ok(());
        };
        let bad = |why: &str| Err(Error::InvalidTree(format!("{self}: {why}")));
        match children.len() {
            0 => return bad("node without children"),
            1 if !*painted || children[0].painted() => {
                return bad("bivalent node must switch from painted to unpainted")
            }
            1 => {}
            _ => {
                let same = children.iter().all(|c| c.painted() == *painted);
                let switch = *painted && children.iter().all(|c| !c.painted());
                if !same && !switch {
                    return bad("mixed paint at a node");
                }
            }
        }
        children.iter().try_for_each(PaintedTree::validate_below)
    }

    /// Every tree obtained by one contraction.
    pub fn contractions(&self) -> Vec<PaintedTree> {
        let PaintedTree::Node { painted, children } = self else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for (j, ch) in children.iter().enumerate() {
            if let PaintedTree::Node { painted: q, children: g } = ch {
                let mergeable = g.len() >= 2 && (!q || g.iter().all(PaintedTree::painted));
                if mergeable {
                    let mut merged = children[..j].to_vec();
                    merged.extend(g.iter().cloned());
                    merged.extend(children[j + 1..].iter().cloned());
                    out.push(PaintedTree::node(*painted, merged));
                }
            }
        }
        let paint_line_below = *painted
            && children.len() >= 2
            && children.iter().all(|c| match c {
                PaintedTree::Node { painted: true, children: g } => g.iter().all(|x| !x.painted()),
                _ => false,
            });
        if paint_line_below {
            let merged = children
                .iter()
                .flat_map(|c| match c {
                    PaintedTree::Node { children: g, .. } => g.clone(),
                    PaintedTree::Leaf => unreachable!(),
                })
                .collect();
            out.push(PaintedTree::node(true, merged));
        }
        for (j, ch) in children.iter().enumerate() {
            for sub in ch.contractions() {
                let mut next = children.clone();
                next[j] = sub;
                out.push(PaintedTree::node(*painted, next));
            }
        }
        out
    }

    /// Internal nodes other than bivalent ones, in preorder.
    fn dissection(&self, m: usize) -> Result<Vec<TreeNode>> {
        let mut out = Vec::new();
        let end = visit(self, 0, 0, &mut out);
        if end != m {
            return Err(Error::InvalidTree(format!("{self} has {end} leaves, expected {m}")));
        }
        Ok(out)
    }
}

impl fmt::Display for PaintedTree {
    /// `x` is a leaf, `(..)` an unpainted node, `[..]` a painted one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PaintedTree::Leaf => write!(f, "x"),
            PaintedTree::Node { painted, children } => {
                let (open, close) = if *painted { ('[', ']') } else { ('(', ')') };
                write!(f, "{open}")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "{close}")
            }
        }
    }
}

struct TreeNode {
    vertices: Vec<usize>,
    color: Color,
    depth: usize,
}

fn visit(t: &PaintedTree, start: usize, depth: usize, out: &mut Vec<TreeNode>) -> usize {
    match t {
        PaintedTree::Leaf => start + 1,
        PaintedTree::Node { children, .. } if children.len() == 1 => visit(&children[0], start, depth, out),
        PaintedTree::Node { painted, children } => {
            let slot = out.len();
            out.push(TreeNode { vertices: Vec::new(), color: Color::Blue, depth });
            let mut vertices = vec![start];
            for c in children {
                let end = visit(c, vertices[vertices.len() - 1], depth + 1, out);
                vertices.push(end);
            }
            out[slot].vertices = vertices;
            out[slot].color = match (*painted, children.iter().all(PaintedTree::painted)) {
                (false, _) => Color::Blue,
                (true, true) => Color::Red,
                (true, false) => Color::Purple,
            };
            vertices_end(&out[slot])
        }
    }
}

fn vertices_end(n: &TreeNode) -> usize {
    n.vertices[n.vertices.len() - 1]
}

/// Red edges become painted, blue unpainted, and purple edges are split by a
/// bivalent node.
pub fn painted_tree_of(pc: &PaintedComplex) -> Result<PaintedTree> {
    let p = &pc.complex;
    let tree = tree_of_complex(p)?;
    let m = tree.leaves.len();
    let color_of = |marking: [usize; 2]| -> Result<Color> {
        let k =
            p.index_of_marking(&marking).ok_or_else(|| Error::input(format!("no cell with marking {marking:?}")))?;
        Ok(pc.colors[k])
    };
    fn build(
        pc: &PaintedComplex,
        tree: &RootedPlanarTree,
        edge: Color,
        head: Slot,
        color_of: &dyn Fn([usize; 2]) -> Result<Color>,
    ) -> Result<PaintedTree> {
        let inner = match head {
            Slot::Leaf(i) => {
                if edge == Color::Red {
                    return Err(Error::InvalidTree(format!("leaf half-edge {i} is red")));
                }
                PaintedTree::Leaf
            }
            Slot::Node(k) => {
                let painted = edge == Color::Red;
                let children = tree
                    .children(k)
                    .into_iter()
                    .map(|s| {
                        let marking = match s {
                            Slot::Leaf(i) => [i, i + 1],
                            Slot::Node(c) => {
                                let (a, b) = tree.span(c);
                                [a, b]
                            }
                        };
                        build(pc, tree, color_of(marking)?, s, color_of)
                    })
                    .collect::<Result<Vec<_>>>()?;
                let expected = match (painted, children.iter().all(PaintedTree::painted)) {
                    (false, _) => Color::Blue,
                    (true, true) => Color::Red,
                    (true, false) => Color::Purple,
                };
                let actual = pc.colors[pc.complex.vertex_cell(k)];
                if actual != expected {
                    return Err(Error::InvalidTree(format!("node {k} is {actual} but its edges imply {expected}")));
                }
                PaintedTree::node(painted, children)
            }
        };
        Ok(if edge == Color::Purple { PaintedTree::node(true, vec![inner]) } else { inner })
    }
    let t = build(pc, &tree, color_of([0, m])?, Slot::Node(tree.root), &color_of)?;
    t.validate()?;
    Ok(t)
}

/// Target lengths for the compact edges of a polygon tree, keyed by the dual
/// diagonal `(i, j)`, with the hop count from the root node to the upper end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLengthTarget {
    pub lengths: BTreeMap<(usize, usize), Rational>,
    pub hops: BTreeMap<(usize, usize), usize>,
}

impl EdgeLengthTarget {
    pub fn new(lengths: BTreeMap<(usize, usize), Rational>, hops: BTreeMap<(usize, usize), usize>) -> Result<Self> {
        if let Some((e, l)) = lengths.iter().find(|(_, l)| !l.is_positive()) {
            return Err(Error::input(format!("length {l} for edge {e:?} is not positive")));
        }
        Ok(EdgeLengthTarget { lengths, hops })
    }

    /// Hop counts taken from `tree`.
    pub fn for_tree(tree: &RootedPlanarTree, lengths: BTreeMap<(usize, usize), Rational>) -> Result<Self> {
        let hops = tree.edges.iter().map(|&(a, b)| (tree.span(b), tree.depth(a))).collect();
        Self::new(lengths, hops)
    }
}

/// `|G(q) - G(q')|` for the endpoints of the edge dual to diagonal `d`,
/// where `G(u) = f(u) - u(beta)`.
pub fn edge_value(p: &TropicalComplex, d: (usize, usize), beta: &Vector) -> Result<Rational> {
    let k = p.index_of_marking(&[d.0, d.1]).ok_or_else(|| Error::input(format!("no edge dual to {d:?}")))?;
    let ids = &p.cells[k].vertex_ids;
    if ids.len() != 2 {
        return Err(Error::input(format!("{d:?} is not an interior diagonal")));
    }
    let g = |i: usize| &p.vertex_values[i] - p.vertex_points[i].dot(beta);
    Ok((g(ids[0]) - g(ids[1])).abs())
}

/// A lifting isotopic to `p` whose compact edges have the target values exactly.
pub fn realize_edge_lengths(p: &TropicalComplex, beta: &Vector, target: &EdgeLengthTarget) -> Result<Lifting> {
    let m = polygon_size(&p.config)?;
    for (i, j) in diagonals(m) {
        if on_line(p.config.point(i), p.config.point(j), beta) {
            return Err(Error::input(format!("beta lies on the line through a{i} and a{j}")));
        }
    }
    let tree = tree_of_complex(p)?;
    let mut order: Vec<(usize, usize)> = tree.edges.iter().map(|&(_, b)| tree.span(b)).collect();
    let wanted: BTreeSet<(usize, usize)> = order.iter().copied().collect();
    if wanted != target.lengths.keys().copied().collect() {
        return Err(Error::input("targets must cover exactly the compact edges"));
    }
    // Leaves first: narrower diagonals lie further from the root.
    order.sort_by_key(|&(a, b)| (b - a, a));

    let mut lambda = Rational::one();
    for &d in &order {
        let f = edge_value(p, d, beta)?;
        let bound = &target.lengths[&d] / (int(2) * &f);
        if bound < lambda {
            lambda = bound;
        }
    }
    let mut eta = p.eta.scale(&lambda);
    for &d in &order {
        let (q, _) = dual_complex(&p.config, &eta)?;
        let f0 = edge_value(&q, d, beta)?;
        let bend = bend_across(&p.config, d);
        let trial = Lifting(eta.0.iter().zip(&bend).map(|(e, b)| e + b).collect());
        let (q1, _) = dual_complex(&p.config, &trial)?;
        let gain = edge_value(&q1, d, beta)? - &f0;
        if !gain.is_positive() {
            return Err(Error::Verification(format!("bending across {d:?} does not lengthen its edge")));
        }
        let s = (&target.lengths[&d] - f0) / gain;
        eta = Lifting(eta.0.iter().zip(&bend).map(|(e, b)| e + &s * b).collect());
    }
    let (q, s) = dual_complex(&p.config, &eta)?;
    if s != p.subdivision {
        return Err(Error::Verification("realized lifting changed the subdivision".into()));
    }
    for &d in &order {
        if edge_value(&q, d, beta)? != target.lengths[&d] {
            return Err(Error::Verification(format!("edge {d:?} missed its target")));
        }
    }
    Ok(eta)
}

/// `max(0, L)` on the points, with `L` affine, zero on the diagonal and
/// positive on the vertices strictly between its ends.
fn bend_across(config: &PointConfiguration, (i, j): (usize, usize)) -> Vec<Rational> {
    let (a, b) = (config.point(i), config.point(j));
    let dir = b.sub(a);
    let mut normal = Vector::new(vec![-dir[1].clone(), dir[0].clone()]);
    if normal.dot(&config.point(i + 1).sub(a)).is_negative() {
        normal = normal.scale(&int(-1));
    }
    config.points().iter().map(|x| normal.dot(&x.sub(a)).max(Rational::zero())).collect()
}

/// Check that `G = f - alpha` strictly decreases from parent to child.
pub fn check_decreasing(p: &TropicalComplex, alpha: &Vector) -> Result<()> {
    let tree = tree_of_complex(p)?;
    let g = |i: usize| &p.vertex_values[i] - p.vertex_points[i].dot(alpha);
    for &(a, b) in &tree.edges {
        if g(a) <= g(b) {
            return Err(Error::Verification(format!("G does not decrease from node {a} to node {b}")));
        }
    }
    let s = sign_vector(&p.config, alpha)?;
    if s.0[0] != Sign::Plus || s.0[1..].iter().any(|&x| x != Sign::Minus) {
        return Err(Error::Verification(format!("half-edge slopes {s} are not (+, -, ..., -)")));
    }
    Ok(())
}

/// A painting of a polygon whose painted tree is `t`, with respect to
/// `ngon_configuration(m)` and `admissible_alpha`.
pub fn realize_painted_tree(t: &PaintedTree, m: usize) -> Result<PaintSpec> {
    let config = ngon_configuration(m)?;
    let alpha = admissible_alpha(&config)?;
    realize_painted_tree_in(&config, &alpha, t)
}

pub fn realize_painted_tree_in(config: &PointConfiguration, alpha: &Vector, t: &PaintedTree) -> Result<PaintSpec> {
    t.validate()?;
    let m = polygon_size(config)?;
    check_admissible(config, alpha)?;
    let nodes = t.dissection(m)?;
    let cells: Vec<Vec<usize>> = nodes.iter().map(|n| n.vertices.clone()).collect();
    let s = Subdivision::from_marks(config, cells)?;
    let (_, seed) = certified_cone(config, &s)?;
    let (p, _) = dual_complex(config, &seed)?;

    let mm = int(m as i64);
    let mut lengths = BTreeMap::new();
    let mut hops = BTreeMap::new();
    for n in &nodes[1..] {
        let span = (n.vertices[0], vertices_end(n));
        let parent_depth = n.depth - 1;
        let l = match n.color {
            Color::Red => Rational::one() / &mm,
            Color::Purple => Rational::one() - int(parent_depth as i64) / &mm,
            Color::Blue => int(2),
        };
        lengths.insert(span, l);
        hops.insert(span, parent_depth);
    }
    let eta = realize_edge_lengths(&p, alpha, &EdgeLengthTarget::new(lengths, hops)?)?;
    let (q, _) = dual_complex(config, &eta)?;
    let root = q
        .subdivision
        .maximal_cells()
        .iter()
        .position(|c| c.marks == nodes[0].vertices)
        .expect("root cell survives realization");
    let top = match nodes[0].color {
        Color::Red => int(1),
        Color::Purple => int(0),
        Color::Blue => int(-1),
    };
    let c = &q.vertex_values[root] - q.vertex_points[root].dot(alpha) - top;
    Ok(PaintSpec { eta, c, alpha: alpha.clone() })
}

/// All painted trees with `m` leaves, in a fixed order.
pub fn painted_trees(m: usize) -> Result<Vec<PaintedTree>> {
    if m == 0 {
        return Err(Error::input("a painted tree needs at least one leaf"));
    }
    if m > MAX_LEAVES {
        return Err(Error::ResourceCap { what: "leaves".into(), limit: MAX_LEAVES });
    }
    let mut memo = HashMap::new();
    Ok(trees_with(m, true, &mut memo))
}

fn compositions(k: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            if cur.len() >= 2 {
                out.push(cur.clone());
            }
            return;
        }
        for part in 1..=left {
            cur.push(part);
            go(left - part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, &mut Vec::new(), &mut out);
    out
}

fn forests(
    parts: &[usize],
    painted: bool,
    memo: &mut HashMap<(usize, bool), Vec<PaintedTree>>,
) -> Vec<Vec<PaintedTree>> {
    let mut acc: Vec<Vec<PaintedTree>> = vec![Vec::new()];
    for &k in parts {
        let options = trees_with(k, painted, memo);
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |t| {
                    let mut next = prefix.clone();
                    next.push(t.clone());
                    next
                })
            })
            .collect();
    }
    acc
}

fn trees_with(k: usize, painted: bool, memo: &mut HashMap<(usize, bool), Vec<PaintedTree>>) -> Vec<PaintedTree> {
    if let Some(v) = memo.get(&(k, painted)) {
        return v.clone();
    }
    let mut out = Vec::new();
    if painted {
        for t in trees_with(k, false, memo) {
            out.push(PaintedTree::node(true, vec![t]));
        }
        for parts in compositions(k) {
            for f in forests(&parts, true, memo) {
                out.push(PaintedTree::node(true, f));
            }
            for f in forests(&parts, false, memo) {
                out.push(PaintedTree::node(true, f));
            }
        }
    } else if k == 1 {
        out.push(PaintedTree::Leaf);
    } else {
        for parts in compositions(k) {
            for f in forests(&parts, false, memo) {
                out.push(PaintedTree::node(false, f));
            }
        }
    }
    memo.insert((k, painted), out.clone());
    out
}

/// Painted trees with `m` leaves ordered by contraction, binary trees at rank zero.
/// Element `i` is `painted_trees(m)[i]`.
pub fn multiplihedron_lattice(m: usize) -> Result<FaceLattice> {
    let trees = painted_trees(m)?;
    let index: HashMap<&PaintedTree, usize> = trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut covers = Vec::new();
    for (i, t) in trees.iter().enumerate() {
        for c in t.contractions() {
            let j = *index
                .get(&c)
                .ok_or_else(|| Error::InvalidTree(format!("contraction {c} of {t} is not a painted tree")))?;
            covers.push((i, j));
        }
    }
    // Contractions remove nodes, so more nodes means lower in the order.
    let mut order: Vec<usize> = (0..trees.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(trees[i].node_count()));
    let mut ranks = vec![0usize; trees.len()];
    for &i in &order {
        for &(a, b) in covers.iter().filter(|c| c.0 == i) {
            ranks[b] = ranks[b].max(ranks[a] + 1);
        }
    }
    let lattice = FaceLattice::new(trees.iter().map(|t| t.to_string()).collect(), ranks, covers);
    if !lattice.is_graded() {
        return Err(Error::Verification(format!("contraction poset for m = {m} is not graded")));
    }
    Ok(lattice)
}

#[derive(Clone, Debug)]
pub struct MultiplihedronReport {
    pub m: usize,
    pub alpha: Vector,
    pub theorem: TheoremReport,
    pub trees: Vec<PaintedTree>,
    pub tree_lattice: FaceLattice,
    /// Painted complex `i` has painted tree `tree_of[i]`.
    pub tree_of: Vec<usize>,
    /// Tree `t` corresponds to face `isomorphism[t]` of the painting polytope.
    pub isomorphism: Vec<usize>,
}

/// Compare the painting polytope of the `(m+1)`-gon with the poset of painted
/// trees, through the explicit map and through an abstract isomorphism, and
/// round-trip every tree through a realization.
pub fn verify_multiplihedron_theorem(m: usize) -> Result<MultiplihedronReport> {
    verify_multiplihedron_with_limits(m, Limits::default())
}

pub fn verify_multiplihedron_with_limits(m: usize, limits: Limits) -> Result<MultiplihedronReport> {
    let config = ngon_configuration(m)?;
    let alpha = admissible_alpha(&config)?;
    let trees = painted_trees(m)?;
    let tree_lattice = multiplihedron_lattice(m)?;
    let theorem = verify_main_theorem_with_limits(&config, &alpha, limits)?;
    let index: HashMap<&PaintedTree, usize> = trees.iter().enumerate().map(|(i, t)| (t, i)).collect();

    let mut tree_of = Vec::with_capacity(theorem.painted.len());
    for pc in &theorem.painted.complexes {
        check_decreasing(&pc.complex, &alpha)?;
        let t = painted_tree_of(pc)?;
        tree_of.push(*index.get(&t).ok_or_else(|| Error::Verification(format!("{t} is not enumerated")))?);
    }
    let distinct: BTreeSet<usize> = tree_of.iter().copied().collect();
    if distinct.len() != trees.len() || tree_of.len() != trees.len() {
        return Err(Error::Verification(format!(
            "{} painted complexes reach {} of {} painted trees",
            tree_of.len(),
            distinct.len(),
            trees.len()
        )));
    }
    let mapped: BTreeSet<(usize, usize)> =
        theorem.painted.covers.iter().map(|&(a, b)| (tree_of[a], tree_of[b])).collect();
    let expected: BTreeSet<(usize, usize)> = tree_lattice.covers.iter().copied().collect();
    if mapped != expected {
        let extra: Vec<_> = mapped.symmetric_difference(&expected).take(3).collect();
        return Err(Error::Verification(format!("cover relations differ, e.g. {extra:?}")));
    }
    for t in &trees {
        let spec = realize_painted_tree_in(&config, &alpha, t)?;
        let (p, _) = dual_complex(&config, &spec.eta)?;
        let back = painted_tree_of(&paint(&p, &spec)?)?;
        if &back != t {
            return Err(Error::Verification(format!("{t} realizes as {back}")));
        }
    }
    let mut isomorphism = vec![0; trees.len()];
    for (i, &t) in tree_of.iter().enumerate() {
        isomorphism[t] = theorem.correspondence[i];
    }
    if (0..trees.len()).any(|t| tree_lattice.ranks[t] != theorem.subdivision_lattice.ranks[isomorphism[t]]) {
        return Err(Error::Verification("tree ranks differ from face dimensions".into()));
    }
    Ok(MultiplihedronReport { m, alpha, theorem, trees, tree_lattice, tree_of, isomorphism })
}
