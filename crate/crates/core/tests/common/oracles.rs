//! Slow, direct reference computations used to cross-check the library.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};
use tropaint::config::PointConfiguration;
use tropaint::geometry::{AffineFunctional, Rational, Vector};
use tropaint::subdivision::Lifting;

/// Gaussian elimination; `None` when `a` is singular.
pub fn solve_square(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, v)| {
            let mut r = row.clone();
            r.push(v.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Marked maximal cells of the subdivision induced by `eta`, found by testing
/// the hyperplane through every affinely independent `(d+1)`-subset of the
/// lifted points `(a, -eta(a))`.
pub fn brute_force_cells(config: &PointConfiguration, eta: &Lifting) -> BTreeSet<Vec<usize>> {
    let d = config.dimension();
    let pts = config.points();
    let mut cells = BTreeSet::new();
    for s in subsets(pts.len(), d + 1) {
        // Unknowns (g, c) with g(a) - c = -eta(a).
        let a: Vec<Vec<Rational>> = s
            .iter()
            .map(|&i| {
                let mut row = pts[i].coords().to_vec();
                row.push(-Rational::one());
                row
            })
            .collect();
        let b: Vec<Rational> = s.iter().map(|&i| -eta.0[i].clone()).collect();
        let Some(sol) = solve_square(&a, &b) else { continue };
        let g = Vector::new(sol[..d].to_vec());
        let c = sol[d].clone();
        let slack: Vec<Rational> = (0..pts.len()).map(|i| g.dot(&pts[i]) - &c + &eta.0[i]).collect();
        if slack.iter().all(|x| !x.is_negative()) {
            cells.insert((0..pts.len()).filter(|&i| slack[i].is_zero()).collect());
        }
    }
    cells
}

/// Feasibility of `strict > 0, weak >= 0, eq = 0` by Fourier-Motzkin elimination.
pub fn fourier_motzkin(
    strict: &[AffineFunctional],
    weak: &[AffineFunctional],
    eq: &[AffineFunctional],
    dim: usize,
) -> bool {
    // Rows are (coefficients, constant term, strict) meaning coeffs.x - constant (>|>=) 0.
    let mut rows: Vec<(Vec<Rational>, Rational, bool)> = Vec::new();
    for f in strict {
        rows.push((f.linear.coords().to_vec(), f.constant.clone(), true));
    }
    for f in weak {
        rows.push((f.linear.coords().to_vec(), f.constant.clone(), false));
    }
    for f in eq {
        rows.push((f.linear.coords().to_vec(), f.constant.clone(), false));
        rows.push((f.linear.coords().iter().map(|x| -x).collect(), -f.constant.clone(), false));
    }
    for v in (0..dim).rev() {
        let (mut lower, mut upper, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            if r.0[v].is_positive() {
                lower.push(r);
            } else if r.0[v].is_negative() {
                upper.push(r);
            } else {
                rest.push(r);
            }
        }
        for (lc, lk, ls) in &lower {
            for (uc, uk, us) in &upper {
                // Positive combination cancelling variable v.
                let (p, q) = (-uc[v].clone(), lc[v].clone());
                let coeffs: Vec<Rational> = lc.iter().zip(uc).map(|(a, b)| a * &p + b * &q).collect();
                rest.push((coeffs, lk * &p + uk * &q, *ls || *us));
            }
        }
        rows = rest;
        for r in &mut rows {
            r.0.truncate(v);
        }
        rows.sort();
        rows.dedup();
    }
    rows.iter().all(|(_, k, s)| {
        let value = -k.clone();
        if *s {
            value.is_positive()
        } else {
            !value.is_negative()
        }
    })
}

/// Sets of pairwise non-crossing diagonals of a convex `k`-gon, as sorted pairs.
pub fn polygon_dissections(k: usize) -> Vec<BTreeSet<(usize, usize)>> {
    let diagonals: Vec<(usize, usize)> =
        (0..k).flat_map(|i| (i + 2..k).map(move |j| (i, j))).filter(|&(i, j)| !(i == 0 && j == k - 1)).collect();
    let crosses =
        |(a, b): (usize, usize), (c, d): (usize, usize)| (a < c && c < b && b < d) || (c < a && a < d && d < b);
    let mut out = vec![BTreeSet::new()];
    for &d in &diagonals {
        let mut extra = Vec::new();
        for s in &out {
            if s.iter().all(|&e| !crosses(d, e)) {
                let mut t = s.clone();
                t.insert(d);
                extra.push(t);
            }
        }
        out.extend(extra);
    }
    out
}

/// Diagonals used by a subdivision of a convex polygon whose points are
/// labelled in convex order.
pub fn diagonals_of(cells: &[Vec<usize>], k: usize) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for cell in cells {
        for i in 0..cell.len() {
            let (a, b) = (cell[i], cell[(i + 1) % cell.len()]);
            let (a, b) = (a.min(b), a.max(b));
            if b - a != 1 && !(a == 0 && b == k - 1) {
                out.insert((a, b));
            }
        }
    }
    out
}

fn catalan(n: usize) -> u64 {
    let mut c = 1u64;
    for i in 0..n as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// Painted binary trees with `n` leaves: a bivalent node over an unpainted
/// binary tree, or a painted binary node over two painted binary trees.
pub fn painted_binary_trees(n: usize) -> u64 {
    let mut a = vec![0u64; n + 1];
    for k in 1..=n {
        a[k] = catalan(k - 1) + (1..k).map(|j| a[j] * a[k - j]).sum::<u64>();
    }
    a[n]
}

/// Cell count per dimension of a convex polygon's dissection poset.
pub fn dissection_f_vector(k: usize) -> Vec<usize> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for s in polygon_dissections(k) {
        *counts.entry(k - 3 - s.len()).or_default() += 1;
    }
    counts.into_values().collect()
}

/// Keys of generic painted complexes found by sweeping the free coordinates
/// of the lifting over a grid (the rest pinned to zero on an affine basis) and
/// every threshold `c` between consecutive vertex values. Generic means the
/// subdivision is a triangulation and no vertex sits at level `c`.
pub fn swept_generic_paintings(
    config: &PointConfiguration,
    alpha: &Vector,
    free: &[usize],
    grid: &[Rational],
) -> BTreeSet<(Vec<Vec<usize>>, Vec<String>)> {
    use tropaint::painting::{paint, PaintSpec};
    use tropaint::subdivision::is_triangulation;
    use tropaint::tropical::dual_complex;

    let mut found = BTreeSet::new();
    let mut index = vec![0usize; free.len()];
    loop {
        let mut eta = Lifting::zeros(config.len());
        for (k, &i) in free.iter().enumerate() {
            eta.0[i] = grid[index[k]].clone();
        }
        let (p, s) = dual_complex(config, &eta).unwrap();
        if is_triangulation(&s) {
            let mut levels: Vec<Rational> =
                (0..p.vertex_points.len()).map(|i| &p.vertex_values[i] - p.vertex_points[i].dot(alpha)).collect();
            levels.sort();
            levels.dedup();
            let two = Rational::from_integer(2.into());
            let mut cs = vec![&levels[0] - Rational::one(), &levels[levels.len() - 1] + Rational::one()];
            cs.extend(levels.windows(2).map(|w| (&w[0] + &w[1]) / &two));
            for c in cs {
                let pc = paint(&p, &PaintSpec { eta: eta.clone(), c, alpha: alpha.clone() }).unwrap();
                let (key, colors) = pc.key();
                found.insert((key, colors.iter().map(|c| c.name().to_string()).collect()));
            }
        }
        let mut k = 0;
        loop {
            if k == free.len() {
                return found;
            }
            index[k] += 1;
            if index[k] < grid.len() {
                break;
            }
            index[k] = 0;
            k += 1;
        }
    }
}
