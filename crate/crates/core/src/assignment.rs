//! Maximum-weight perfect assignment over exact rationals.
//!
//! Classic O(n³) Hungarian method with row/column potentials, run on negated
//! weights. Forbidden cells are priced with a penalty large enough that any
//! assignment using one is worse than every feasible assignment.

use num_traits::{Signed, Zero};

use crate::scalar::Rational;

/// Solve `max Σ w[i][σ(i)]` over permutations σ using only `Some` cells.
///
/// Returns the optimal weight and the assignment `row -> column`, or `None`
/// when no permutation avoids the forbidden cells.
pub fn max_weight_assignment(weights: &[Vec<Option<Rational>>]) -> Option<(Rational, Vec<usize>)> {
    let n = weights.len();
    if n == 0 {
        return Some((Rational::zero(), Vec::new()));
    }
    let max_abs = weights
        .iter()
        .flatten()
        .flatten()
        .map(|w| w.abs())
        .max()
        .unwrap_or_else(Rational::zero);
    let penalty = Rational::from_integer(2 * n as i128) * (max_abs + Rational::from_integer(1));
    let cost: Vec<Vec<Rational>> = weights
        .iter()
        .map(|row| row.iter().map(|w| w.map_or(penalty, |w| -w)).collect())
        .collect();

    let assignment = hungarian_min(&cost);
    let mut total = Rational::zero();
    for (i, &j) in assignment.iter().enumerate() {
        total += weights[i][j]?;
    }
    Some((total, assignment))
}

fn hungarian_min(cost: &[Vec<Rational>]) -> Vec<usize> {
    let n = cost.len();
    let zero = Rational::zero();
    let mut u = vec![zero; n + 1];
    let mut v = vec![zero; n + 1];
    // p[j]: row (1-based) matched to column j; p[0] is the row being inserted.
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];

    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0usize;
        let mut minv: Vec<Option<Rational>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta: Option<Rational> = None;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if minv[j].is_none_or(|m| cur < m) {
                    minv[j] = Some(cur);
                    way[j] = j0;
                }
                let mj = minv[j].expect("set above");
                if delta.is_none_or(|d| mj < d) {
                    delta = Some(mj);
                    j1 = j;
                }
            }
            let delta = delta.expect("an unused column remains");
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else if let Some(m) = minv[j].as_mut() {
                    *m -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut assignment = vec![0usize; n];
    for j in 1..=n {
        assignment[p[j] - 1] = j - 1;
    }
    assignment
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(rows: &[&[Option<i128>]]) -> Vec<Vec<Option<Rational>>> {
        rows.iter()
            .map(|r| r.iter().map(|x| x.map(Rational::from_integer)).collect())
            .collect()
    }

    #[test]
    fn picks_the_heavier_diagonal() {
        let (total, sigma) = max_weight_assignment(&w(&[&[Some(0), Some(1)], &[Some(2), Some(0)]])).unwrap();
        assert_eq!(total, Rational::from_integer(3));
        assert_eq!(sigma, vec![1, 0]);
    }

    #[test]
    fn respects_forbidden_cells() {
        let (total, sigma) =
            max_weight_assignment(&w(&[&[Some(5), None], &[Some(100), Some(1)]])).unwrap();
        assert_eq!(total, Rational::from_integer(6));
        assert_eq!(sigma, vec![0, 1]);
        assert!(max_weight_assignment(&w(&[&[None, None], &[None, Some(0)]])).is_none());
    }

    #[test]
    fn agrees_with_enumeration_on_a_3x3() {
        let table = w(&[
            &[Some(4), Some(-2), Some(7)],
            &[Some(3), None, Some(1)],
            &[Some(-5), Some(6), Some(0)],
        ]);
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let best = perms
            .iter()
            .filter_map(|p| {
                p.iter()
                    .enumerate()
                    .map(|(i, &j)| table[i][j])
                    .sum::<Option<Rational>>()
            })
            .max()
            .unwrap();
        assert_eq!(max_weight_assignment(&table).unwrap().0, best);
    }
}
