//! Exact two-phase simplex with Bland's rule.

use num_traits::{One, Signed, Zero};

use super::{AffineFunctional, Rational, Vector};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Relation {
    Le,
    Ge,
    Eq,
}

/// `maximize objective . x` over free variables `x` subject to the rows.
pub(crate) struct LinearProgram {
    pub nvars: usize,
    pub rows: Vec<(Vec<Rational>, Relation, Rational)>,
    pub objective: Vec<Rational>,
}

#[derive(Debug, PartialEq)]
pub(crate) enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { x: Vec<Rational>, value: Rational },
}

struct Tableau {
    a: Vec<Vec<Rational>>,
    b: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.a[row][col].recip();
        for x in self.a[row].iter_mut() {
            *x *= &inv;
        }
        self.b[row] *= &inv;
        for i in 0..self.a.len() {
            if i == row || self.a[i][col].is_zero() {
                continue;
            }
            let factor = self.a[i][col].clone();
            for j in 0..self.a[i].len() {
                if !self.a[row][j].is_zero() {
                    let delta = &factor * &self.a[row][j];
                    self.a[i][j] -= delta;
                }
            }
            let delta = &factor * &self.b[row];
            self.b[i] -= delta;
        }
        self.basis[row] = col;
    }

    /// Maximize `cost . y` over columns flagged in `allowed`. Returns false if unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: &[bool]) -> bool {
        let ncols = cost.len();
        loop {
            let mut entering = None;
            for j in 0..ncols {
                if !allowed[j] || self.basis.contains(&j) {
                    continue;
                }
                let mut reduced = cost[j].clone();
                for (i, &bi) in self.basis.iter().enumerate() {
                    if !cost[bi].is_zero() && !self.a[i][j].is_zero() {
                        reduced -= &cost[bi] * &self.a[i][j];
                    }
                }
                if reduced.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(col) = entering else {
                return true;
            };
            let mut leaving: Option<(usize, Rational)> = None;
            for i in 0..self.a.len() {
                if self.a[i][col].is_positive() {
                    let ratio = &self.b[i] / &self.a[i][col];
                    let better = match &leaving {
                        None => true,
                        Some((r, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*r]),
                    };
                    if better {
                        leaving = Some((i, ratio));
                    }
                }
            }
            let Some((row, _)) = leaving else {
                return false;
            };
            self.pivot(row, col);
        }
    }
}

impl LinearProgram {
    pub fn solve(&self) -> LpOutcome {
        let n = self.nvars;
        let m = self.rows.len();
        // Columns: x+ (n), x- (n), one slack/surplus per inequality, one artificial per Ge/Eq row.
        let n_slack = self.rows.iter().filter(|r| r.1 != Relation::Eq).count();
        let mut normalized: Vec<(Vec<Rational>, Relation, Rational)> = Vec::with_capacity(m);
        for (coef, rel, rhs) in &self.rows {
            if rhs.is_negative() {
                let flipped = match rel {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
                normalized.push((coef.iter().map(|c| -c.clone()).collect(), flipped, -rhs.clone()));
            } else {
                normalized.push((coef.clone(), *rel, rhs.clone()));
            }
        }
        let n_art = normalized.iter().filter(|r| r.1 != Relation::Le).count();
        let ncols = 2 * n + n_slack + n_art;
        let art_start = 2 * n + n_slack;
        let mut a = vec![vec![Rational::zero(); ncols]; m];
        let mut b = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let (mut slack, mut art) = (2 * n, art_start);
        for (i, (coef, rel, rhs)) in normalized.iter().enumerate() {
            for j in 0..n {
                a[i][j] = coef[j].clone();
                a[i][n + j] = -coef[j].clone();
            }
            match rel {
                Relation::Le => {
                    a[i][slack] = Rational::one();
                    basis.push(slack);
                    slack += 1;
                }
                Relation::Ge => {
                    a[i][slack] = -Rational::one();
                    slack += 1;
                    a[i][art] = Rational::one();
                    basis.push(art);
                    art += 1;
                }
                Relation::Eq => {
                    a[i][art] = Rational::one();
                    basis.push(art);
                    art += 1;
                }
            }
            b.push(rhs.clone());
        }
        let mut t = Tableau { a, b, basis };

        if n_art > 0 {
            let cost: Vec<Rational> =
                (0..ncols).map(|j| if j >= art_start { -Rational::one() } else { Rational::zero() }).collect();
            let all = vec![true; ncols];
            t.optimize(&cost, &all);
            let infeasibility: Rational = t
                .basis
                .iter()
                .enumerate()
                .filter(|(_, &bj)| bj >= art_start)
                .fold(Rational::zero(), |acc, (i, _)| acc + &t.b[i]);
            if infeasibility.is_positive() {
                return LpOutcome::Infeasible;
            }
            // Drive zero-valued artificials out of the basis; drop redundant rows.
            let mut i = 0;
            while i < t.a.len() {
                if t.basis[i] >= art_start {
                    if let Some(j) = (0..art_start).find(|&j| !t.a[i][j].is_zero()) {
                        t.pivot(i, j);
                    } else {
                        t.a.remove(i);
                        t.b.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
                i += 1;
            }
        }

        let mut cost = vec![Rational::zero(); ncols];
        for j in 0..n {
            cost[j] = self.objective[j].clone();
            cost[n + j] = -self.objective[j].clone();
        }
        let allowed: Vec<bool> = (0..ncols).map(|j| j < art_start).collect();
        if !t.optimize(&cost, &allowed) {
            return LpOutcome::Unbounded;
        }
        let mut y = vec![Rational::zero(); ncols];
        for (i, &bi) in t.basis.iter().enumerate() {
            y[bi] = t.b[i].clone();
        }
        let x: Vec<Rational> = (0..n).map(|j| &y[j] - &y[n + j]).collect();
        let value = x.iter().zip(&self.objective).fold(Rational::zero(), |acc, (xi, ci)| acc + xi * ci);
        LpOutcome::Optimal { x, value }
    }
}

/// Find `x` with `strict(x) > 0`, `weak(x) >= 0` and `equalities(x) = 0`.
///
/// Strict inequalities are handled by maximizing a common slack `s <= 1` with
/// `strict_i(x) >= s`; the system is feasible iff the optimum is positive.
pub fn lp_feasible_strict(
    strict: &[AffineFunctional],
    weak: &[AffineFunctional],
    equalities: &[AffineFunctional],
    dim: usize,
) -> Result<Option<Vector>> {
    for f in strict.iter().chain(weak).chain(equalities) {
        if f.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: f.dim() });
        }
    }
    let with_slack = !strict.is_empty();
    let nvars = dim + usize::from(with_slack);
    let row = |f: &AffineFunctional, slack: i64| {
        let mut c = f.linear.coords().to_vec();
        if with_slack {
            c.push(Rational::from_integer(slack.into()));
        }
        c
    };
    let mut rows = Vec::new();
    for f in strict {
        rows.push((row(f, -1), Relation::Ge, f.constant.clone()));
    }
    for f in weak {
        rows.push((row(f, 0), Relation::Ge, f.constant.clone()));
    }
    for f in equalities {
        rows.push((row(f, 0), Relation::Eq, f.constant.clone()));
    }
    let mut objective = vec![Rational::zero(); nvars];
    if with_slack {
        let mut cap = vec![Rational::zero(); nvars];
        cap[dim] = Rational::one();
        rows.push((cap, Relation::Le, Rational::one()));
        objective[dim] = Rational::one();
    }
    let lp = LinearProgram { nvars, rows, objective };
    match lp.solve() {
        LpOutcome::Optimal { x, value } => {
            if with_slack && !value.is_positive() {
                Ok(None)
            } else {
                Ok(Some(Vector::new(x[..dim].to_vec())))
            }
        }
        LpOutcome::Infeasible => Ok(None),
        LpOutcome::Unbounded => unreachable!("objective is bounded by the slack cap"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{int, rat};

    fn f(lin: &[i64], k: i64) -> AffineFunctional {
        AffineFunctional::new(Vector::from_ints(lin), int(k))
    }

    #[test]
    fn open_interval_interior() {
        let x = lp_feasible_strict(&[f(&[1], 0), f(&[-1], -1)], &[], &[], 1).unwrap().unwrap();
        assert_eq!(x[0], rat(1, 2));
    }

    #[test]
    fn contradictory_pair() {
        assert!(lp_feasible_strict(&[f(&[1], 0), f(&[-1], 0)], &[], &[], 1).unwrap().is_none());
    }

    #[test]
    fn weak_and_equalities() {
        // x + y = 1, x >= 0, y >= 0, x - y > 0
        let x = lp_feasible_strict(&[f(&[1, -1], 0)], &[f(&[1, 0], 0), f(&[0, 1], 0)], &[f(&[1, 1], 1)], 2)
            .unwrap()
            .unwrap();
        assert_eq!(&x[0] + &x[1], int(1));
        assert!(x[0] > x[1]);
        assert!(!x[1].is_negative());
        // x = 0 and x > 0
        assert!(lp_feasible_strict(&[f(&[1], 0)], &[], &[f(&[1], 0)], 1).unwrap().is_none());
    }

    #[test]
    fn plain_lp() {
        // max x + y s.t. x <= 2, y <= 3, x + y <= 4
        let lp = LinearProgram {
            nvars: 2,
            rows: vec![
                (vec![int(1), int(0)], Relation::Le, int(2)),
                (vec![int(0), int(1)], Relation::Le, int(3)),
                (vec![int(1), int(1)], Relation::Le, int(4)),
            ],
            objective: vec![int(1), int(1)],
        };
        match lp.solve() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, int(4)),
            other => panic!("{other:?}"),
        }
        let unbounded =
            LinearProgram { nvars: 1, rows: vec![(vec![int(1)], Relation::Ge, int(0))], objective: vec![int(1)] };
        assert_eq!(unbounded.solve(), LpOutcome::Unbounded);
    }

    #[test]
    fn dimension_mismatch() {
        assert!(matches!(lp_feasible_strict(&[f(&[1, 1], 0)], &[], &[], 1), Err(Error::DimensionMismatch { .. })));
    }
}
