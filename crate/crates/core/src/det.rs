//! Supertropical determinant (permanent), computed by two independent engines.
//!
//! `det` expands over all permutations; `det_assignment` solves a maximum
//! weight assignment on ν-values and decides ghostness from the optimal
//! assignment's entries plus a uniqueness probe that forbids each optimal cell
//! in turn and re-solves.

use serde::Serialize;

use crate::assignment::max_weight_assignment;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{GroupValue, Rational, Scalar};

/// Largest size handled by the permutation expansion.
pub const EXPANSION_CAP: usize = 8;

/// Sizes up to this use the expansion engine inside other algorithms.
const EXPANSION_PREFERRED: usize = 6;

/// Determinant value together with the permutations attaining its ν-value.
///
/// `witnesses[k][i]` is the column picked in row `i` by the `k`-th witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DetResult {
    pub value: Scalar,
    pub witnesses: Vec<Vec<usize>>,
}

impl DetResult {
    /// Whether some witness runs through a ghost entry of `a`.
    pub fn has_ghost_factor(&self, a: &Matrix) -> bool {
        self.witnesses
            .iter()
            .any(|sigma| sigma.iter().enumerate().any(|(i, &j)| a.get(i, j).is_ghost()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Engine {
    #[default]
    Expand,
    Assign,
}

impl std::str::FromStr for Engine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "expand" => Ok(Engine::Expand),
            "assign" => Ok(Engine::Assign),
            other => Err(Error::Parse(format!("unknown engine `{other}`"))),
        }
    }
}

pub fn det_with(a: &Matrix, engine: Engine) -> Result<DetResult> {
    match engine {
        Engine::Expand => det(a),
        Engine::Assign => det_assignment(a),
    }
}

/// Determinant value, picking the cheaper engine for the size.
pub fn det_value(a: &Matrix) -> Result<Scalar> {
    if a.rows() <= EXPANSION_PREFERRED {
        Ok(det(a)?.value)
    } else {
        Ok(det_assignment(a)?.value)
    }
}

/// Full permutation expansion, `n ≤ 8`.
pub fn det(a: &Matrix) -> Result<DetResult> {
    let n = a.require_square("determinant")?;
    if n > EXPANSION_CAP {
        return Err(Error::Capacity {
            what: "expansion size",
            got: n,
            limit: EXPANSION_CAP,
        });
    }
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut best: Option<GroupValue> = None;
    let mut witnesses: Vec<Vec<usize>> = Vec::new();
    let mut ghost_hit = false;
    loop {
        let term: Scalar = sigma.iter().enumerate().map(|(i, &j)| a.get(i, j)).product();
        if let Some(q) = term.nu_value() {
            if best.is_none_or(|b| q > b) {
                best = Some(q);
                witnesses.clear();
                ghost_hit = false;
            }
            if best == Some(q) {
                witnesses.push(sigma.clone());
                ghost_hit |= term.is_ghost();
            }
        }
        if !next_permutation(&mut sigma) {
            break;
        }
    }
    let value = match best {
        None => Scalar::Zero,
        Some(q) if witnesses.len() > 1 || ghost_hit => Scalar::Ghost(q),
        Some(q) => Scalar::Tangible(q),
    };
    Ok(DetResult { value, witnesses })
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).expect("pivot exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Assignment-based engine for any size.
pub fn det_assignment(a: &Matrix) -> Result<DetResult> {
    let n = a.require_square("determinant")?;
    let mut weights: Vec<Vec<Option<Rational>>> = (0..n)
        .map(|i| (0..n).map(|j| a.get(i, j).nu_value().map(|q| q.0)).collect())
        .collect();
    let Some((optimum, sigma)) = max_weight_assignment(&weights) else {
        return Ok(DetResult {
            value: Scalar::Zero,
            witnesses: Vec::new(),
        });
    };
    let ghost_factor = sigma.iter().enumerate().any(|(i, &j)| a.get(i, j).is_ghost());
    let mut witnesses = vec![sigma.clone()];
    for (i, &j) in sigma.iter().enumerate() {
        let saved = weights[i][j].take();
        if let Some((alt, alt_sigma)) = max_weight_assignment(&weights) {
            if alt == optimum && !witnesses.contains(&alt_sigma) {
                witnesses.push(alt_sigma);
            }
        }
        weights[i][j] = saved;
    }
    let q = GroupValue(optimum);
    let value = if witnesses.len() > 1 || ghost_factor {
        Scalar::Ghost(q)
    } else {
        Scalar::Tangible(q)
    };
    Ok(DetResult { value, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::m;
    use crate::scalar::s;

    #[test]
    fn expansion_examples() {
        assert_eq!(det(&m("0 -inf; -inf 0")).unwrap().value, Scalar::ONE);
        assert_eq!(det(&m("0 0; 0 0")).unwrap().value, s("0g"));
        let r = det(&m("0 1; 2 0")).unwrap();
        assert_eq!(r.value, s("3"));
        assert_eq!(r.witnesses, vec![vec![1, 0]]);
        assert!(det(&m("1 2")).is_err());
        assert!(matches!(det(&Matrix::identity(9)), Err(Error::Capacity { .. })));
    }

    #[test]
    fn assignment_examples() {
        assert_eq!(det_assignment(&m("0 1; 2 0")).unwrap().value, s("3"));
        let tie = det_assignment(&m("1 2; 3 4")).unwrap();
        assert_eq!(tie.value, s("5g"));
        assert_eq!(tie.witnesses.len(), 2);
        assert_eq!(det_assignment(&m("-inf -inf; -inf 0")).unwrap().value, Scalar::Zero);
        assert_eq!(det(&m("-inf -inf; -inf 0")).unwrap().value, Scalar::Zero);
        assert_eq!(det_assignment(&Matrix::identity(9)).unwrap().value, Scalar::ONE);
    }

    #[test]
    fn ghost_factor_on_unique_optimum() {
        let a = m("3g -inf; 0 1");
        let r = det(&a).unwrap();
        assert_eq!(r.value, s("4g"));
        assert_eq!(r.witnesses.len(), 1);
        assert!(r.has_ghost_factor(&a));
        assert_eq!(det_assignment(&a).unwrap().value, s("4g"));
    }

    #[test]
    fn permutation_walk_is_complete() {
        let mut p = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 24);
    }
}
