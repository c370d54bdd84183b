//! Exhaustive engines that share no code with the production algorithms.

use crate::det::DetResult;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{GroupValue, Scalar};
use crate::vector::{lin_comb, Vector};

/// Largest size accepted by [`brute_force_det`].
pub const BRUTE_CAP: usize = 8;

/// `Σ_σ Π_i a_{i,σ(i)}` over all permutations (Heap's algorithm), with the
/// permutations attaining the top ν-value listed in lexicographic order.
pub fn brute_force_det(a: &Matrix) -> Result<DetResult> {
    if !a.is_square() {
        return Err(Error::Shape(format!(
            "determinant of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    if n > BRUTE_CAP {
        return Err(Error::Capacity {
            what: "brute-force size",
            got: n,
            limit: BRUTE_CAP,
        });
    }
    let mut terms: Vec<(Vec<usize>, Scalar)> = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    heap(n, &mut perm, &mut |p| {
        let mut term = Scalar::ONE;
        for (i, &j) in p.iter().enumerate() {
            term = term * a.get(i, j);
        }
        terms.push((p.to_vec(), term));
    });
    let value: Scalar = terms.iter().map(|(_, t)| *t).sum();
    let mut witnesses: Vec<Vec<usize>> = match value.nu_value() {
        None => Vec::new(),
        Some(top) => terms
            .into_iter()
            .filter(|(_, t)| t.nu_value() == Some(top))
            .map(|(p, _)| p)
            .collect(),
    };
    witnesses.sort();
    Ok(DetResult { value, witnesses })
}

fn heap(k: usize, p: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        visit(p);
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, p, visit);
        if k.is_multiple_of(2) {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
    heap(k - 1, p, visit);
}

/// Largest number of coefficient tuples [`dependence_search`] will try.
pub const SEARCH_LIMIT: usize = 1 << 20;

/// Look for tangible-or-zero coefficients, not all zero, with ν-values from
/// `grid`, whose combination of `vectors` is a ghost vector. A witness proves
/// dependence; `None` proves nothing.
pub fn dependence_search(vectors: &[Vector], grid: &[GroupValue]) -> Result<Option<Vec<Scalar>>> {
    if vectors.is_empty() || grid.is_empty() {
        return Ok(None);
    }
    let choices: Vec<Scalar> = std::iter::once(Scalar::Zero)
        .chain(grid.iter().map(|&g| Scalar::Tangible(g)))
        .collect();
    let k = vectors.len();
    let total = (choices.len() as u128).checked_pow(k as u32);
    if total.is_none_or(|t| t > SEARCH_LIMIT as u128) {
        return Err(Error::Capacity {
            what: "dependence search space",
            got: total.map_or(usize::MAX, |t| t.min(usize::MAX as u128) as usize),
            limit: SEARCH_LIMIT,
        });
    }
    let mut digits = vec![0usize; k];
    loop {
        // Odometer step; the all-zero tuple is skipped by starting past it.
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(None);
            }
            digits[pos] += 1;
            if digits[pos] < choices.len() {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
        let coeffs: Vec<Scalar> = digits.iter().map(|&d| choices[d]).collect();
        if lin_comb(&coeffs, vectors)?.is_ghost() {
            return Ok(Some(coeffs));
        }
    }
}
