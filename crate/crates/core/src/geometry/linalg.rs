use num_traits::{One, Signed, Zero};

use super::{Rational, Vector};
use crate::error::{Error, Result};

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref(rows: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                let pivot = rows[r].clone();
                for (x, p) in rows[i][col..ncols].iter_mut().zip(&pivot[col..ncols]) {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : rows * x = 0}` in `R^ncols`.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Some solution of `a x = b`, if the system is consistent.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, ncols + 1);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = m[r][ncols].clone();
    }
    Some(x)
}

pub fn determinant(square: &[Vec<Rational>]) -> Rational {
    let n = square.len();
    let mut m = square.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= &m[col][col];
        let inv = m[col][col].recip();
        for i in col + 1..n {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] * &inv;
            let pivot = m[col].clone();
            for (x, p) in m[i][col..n].iter_mut().zip(&pivot[col..n]) {
                *x -= &factor * p;
            }
        }
    }
    det
}

fn check_dims(points: &[Vector]) -> Result<usize> {
    let first = points.first().ok_or_else(|| Error::input("empty point list"))?;
    let d = first.dim();
    for p in points {
        if p.dim() != d {
            return Err(Error::DimensionMismatch { expected: d, found: p.dim() });
        }
    }
    Ok(d)
}

/// Dimension of the affine hull of a nonempty point list.
pub fn affine_rank(points: &[Vector]) -> Result<usize> {
    check_dims(points)?;
    let base = &points[0];
    let diffs: Vec<Vec<Rational>> = points[1..].iter().map(|p| p.sub(base).into_coords()).collect();
    Ok(rank(&diffs))
}

/// Greedy affinely independent subset (indices into `points`), scanning in order.
/// Because independence is a matroid, this is the lexicographically first basis
/// of the affine hull.
pub fn affine_basis(points: &[&Vector]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let row = p.extended(Rational::one()).into_coords();
        rows.push(row);
        if rank(&rows) == rows.len() {
            chosen.push(i);
        } else {
            rows.pop();
        }
    }
    chosen
}

/// Affine coordinates of `target` with respect to `basis` (sum to one), when
/// `target` lies in the affine hull. Unique when the basis is independent.
pub fn barycentric(basis: &[&Vector], target: &Vector) -> Option<Vec<Rational>> {
    let d = target.dim();
    let k = basis.len();
    let mut a = vec![vec![Rational::zero(); k]; d + 1];
    for (j, p) in basis.iter().enumerate() {
        for i in 0..d {
            a[i][j] = p[i].clone();
        }
        a[d][j] = Rational::one();
    }
    let mut b = target.coords().to_vec();
    b.push(Rational::one());
    solve(&a, &b)
}

/// `|det|` of the edge matrix: the unit simplex has volume one.
pub fn simplex_normalized_volume(simplex: &[Vector]) -> Result<Rational> {
    let d = check_dims(simplex)?;
    if simplex.len() != d + 1 {
        return Err(Error::input(format!(
            "a simplex in dimension {d} needs {} vertices, got {}",
            d + 1,
            simplex.len()
        )));
    }
    let base = &simplex[0];
    let m: Vec<Vec<Rational>> = simplex[1..].iter().map(|p| p.sub(base).into_coords()).collect();
    let det = determinant(&m);
    if det.is_zero() {
        return Err(Error::DegenerateSimplex);
    }
    Ok(det.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{int, rat};

    fn v(c: &[i64]) -> Vector {
        Vector::from_ints(c)
    }

    #[test]
    fn affine_rank_examples() {
        assert_eq!(affine_rank(&[v(&[0, 0])]).unwrap(), 0);
        assert_eq!(affine_rank(&[v(&[0, 0]), v(&[1, 0]), v(&[0, 1]), v(&[1, 1])]).unwrap(), 2);
        assert_eq!(affine_rank(&[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[-1, -1, 0])]).unwrap(), 2);
        assert_eq!(affine_rank(&[v(&[0, 0]), v(&[1, 0, 0])]), Err(Error::DimensionMismatch { expected: 2, found: 3 }));
    }

    #[test]
    fn volumes() {
        let unit = [v(&[0, 0]), v(&[1, 0]), v(&[0, 1])];
        assert_eq!(simplex_normalized_volume(&unit).unwrap(), int(1));
        let twice = [v(&[0, 0]), v(&[2, 0]), v(&[0, 2])];
        assert_eq!(simplex_normalized_volume(&twice).unwrap(), int(4));
        let skew = [v(&[0, 0]), v(&[1, 0]), v(&[-1, -1])];
        assert_eq!(simplex_normalized_volume(&skew).unwrap(), int(1));
        let flat = [v(&[0, 0]), v(&[1, 1]), v(&[2, 2])];
        assert_eq!(simplex_normalized_volume(&flat), Err(Error::DegenerateSimplex));
    }

    #[test]
    fn nullspace_and_solve() {
        let rows = vec![vec![int(1), int(1), int(1)]];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for n in &ns {
            assert!((n[0].clone() + &n[1] + &n[2]).is_zero());
        }
        let a = vec![vec![int(2), int(0)], vec![int(0), int(4)]];
        assert_eq!(solve(&a, &[int(1), int(1)]).unwrap(), vec![rat(1, 2), rat(1, 4)]);
        let inconsistent = vec![vec![int(1)], vec![int(1)]];
        assert!(solve(&inconsistent, &[int(0), int(1)]).is_none());
    }

    #[test]
    fn barycentric_coordinates() {
        let (a, b, c) = (v(&[0, 0]), v(&[1, 0]), v(&[0, 1]));
        let lam = barycentric(&[&a, &b, &c], &Vector::new(vec![rat(1, 3), rat(1, 3)])).unwrap();
        assert_eq!(lam, vec![rat(1, 3), rat(1, 3), rat(1, 3)]);
        let pts = [&a, &b, &v(&[2, 0]), &c];
        assert_eq!(affine_basis(&pts), vec![0, 1, 3]);
    }

    #[test]
    fn determinant_sign() {
        let m = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(determinant(&m), int(-1));
    }
}
