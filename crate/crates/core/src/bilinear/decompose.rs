use serde::Serialize;

use super::gram_schmidt::{accepts, gs_step};
use super::BilinearForm;
use crate::error::{Error, Result};
use crate::matrix::independent;
use crate::scalar::{GroupValue, Scalar};
use crate::vector::Vector;

/// Split of a base into an anisotropic part and an alternate part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    /// Pairwise g-orthogonal, nonisotropic, pairwise Cauchy-Schwartz.
    pub aniso: Vec<Vector>,
    /// g-isotropic vectors, each g-orthogonal to every anisotropic vector.
    pub alternate: Vec<Vector>,
    /// `(i, k)` with `aniso[i]` and `alternate[k]` forming a Cauchy-Schwartz
    /// pair. Reported, not required: a ghost norm on the alternate side
    /// routinely dominates the cross terms.
    pub cauchy_schwartz_cross: Vec<(usize, usize)>,
}

/// Decompose the span of an independent base under a supertropically
/// symmetric form.
pub fn decompose(form: &BilinearForm, base: &[Vector]) -> Result<Decomposition> {
    form.require_symmetric("decomposition")?;
    for b in base {
        form.check(b)?;
    }
    if !independent(base)? {
        return Err(Error::precondition("decomposition needs an independent base"));
    }

    let mut aniso: Vec<Vector> = Vec::new();
    let mut pending: Vec<&Vector> = Vec::new();
    for v in base {
        let corrected = gs_step(form, &aniso, v)?.corrected;
        if accepts(form, &aniso, &corrected)? {
            aniso.push(corrected);
            continue;
        }
        if let Some(rescued) = rescue(form, &aniso, v)? {
            aniso.push(rescued);
            continue;
        }
        pending.push(v);
    }

    // Later acceptances change the correction of earlier leftovers, so
    // re-run them until nothing moves.
    loop {
        let mut moved = false;
        let mut still = Vec::new();
        for v in pending {
            let corrected = gs_step(form, &aniso, v)?.corrected;
            if accepts(form, &aniso, &corrected)? {
                aniso.push(corrected);
                moved = true;
            } else {
                still.push(v);
            }
        }
        pending = still;
        if !moved {
            break;
        }
    }

    let alternate = pending
        .into_iter()
        .map(|v| gs_step(form, &aniso, v).map(|r| r.corrected))
        .collect::<Result<Vec<_>>>()?;
    let mut cauchy_schwartz_cross = Vec::new();
    for (i, a) in aniso.iter().enumerate() {
        for (k, z) in alternate.iter().enumerate() {
            if form.is_cauchy_schwartz(a, z)? {
                cauchy_schwartz_cross.push((i, k));
            }
        }
    }
    Ok(Decomposition {
        aniso,
        alternate,
        cauchy_schwartz_cross,
    })
}

/// Replace `v` by `β w_j + v` for the first anisotropic `w_j` forming a
/// Cauchy-Schwartz pair with `v`, with `β` large enough to make the sum
/// nonisotropic, and keep it if its correction is accepted.
fn rescue(form: &BilinearForm, aniso: &[Vector], v: &Vector) -> Result<Option<Vector>> {
    for w in aniso {
        if !form.is_cauchy_schwartz(v, w)? {
            continue;
        }
        let a11 = form.norm(v)?;
        let a22 = form.norm(w)?;
        let alpha = form.eval(v, w)? + form.eval(w, v)?;
        let mut bound = alpha.checked_div(a22.tangible_lift()?)? + Scalar::ONE;
        if !alpha.is_zero() {
            bound = bound + a11.checked_div(alpha.tangible_lift()?)?;
        }
        let nu = bound.nu_value().unwrap_or(GroupValue::ZERO);
        let beta = Scalar::Tangible(nu + GroupValue::from_int(1));
        let candidate = w.scale(beta).add(v)?;
        let corrected = gs_step(form, aniso, &candidate)?.corrected;
        return Ok(if accepts(form, aniso, &corrected)? {
            Some(corrected)
        } else {
            None
        });
    }
    Ok(None)
}

/// Violated postconditions of a decomposition; empty when it is valid.
pub fn check_decomposition(
    form: &BilinearForm,
    base: &[Vector],
    d: &Decomposition,
) -> Result<Vec<String>> {
    let mut problems = Vec::new();
    if d.aniso.len() + d.alternate.len() != base.len() {
        problems.push(format!(
            "{} + {} vectors for a base of {}",
            d.aniso.len(),
            d.alternate.len(),
            base.len()
        ));
    }
    for (i, a) in d.aniso.iter().enumerate() {
        if !form.norm(a)?.is_tangible() {
            problems.push(format!("aniso[{i}] is g-isotropic"));
        }
        for (j, b) in d.aniso.iter().enumerate().skip(i + 1) {
            if !form.eval(a, b)?.is_ghost_or_zero() || !form.eval(b, a)?.is_ghost_or_zero() {
                problems.push(format!("aniso[{i}] and aniso[{j}] are not g-orthogonal"));
            }
            if !form.is_cauchy_schwartz(a, b)? {
                problems.push(format!("aniso[{i}] and aniso[{j}] are not Cauchy-Schwartz"));
            }
        }
        for (k, z) in d.alternate.iter().enumerate() {
            if !form.eval(a, z)?.is_ghost_or_zero() || !form.eval(z, a)?.is_ghost_or_zero() {
                problems.push(format!("aniso[{i}] and alternate[{k}] are not g-orthogonal"));
            }
        }
    }
    for (k, z) in d.alternate.iter().enumerate() {
        if !form.norm(z)?.is_ghost_or_zero() {
            problems.push(format!("alternate[{k}] is not g-isotropic"));
        }
    }
    Ok(problems)
}
