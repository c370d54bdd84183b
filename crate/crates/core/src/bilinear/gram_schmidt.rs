use serde::Serialize;

use super::BilinearForm;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::vector::Vector;

/// Outcome of one Gram-Schmidt correction `v ↦ v + Σ c_j b_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GsResult {
    pub projected: Vector,
    pub corrected: Vector,
    /// Indices `j` maximizing `(⟨v,b_j⟩ + ⟨b_j,v⟩)² / ⟨b_j,b_j⟩` in ν.
    pub dominant: Vec<usize>,
}

fn check_orthogonal_family(form: &BilinearForm, base: &[Vector]) -> Result<Vec<Scalar>> {
    let mut norms = Vec::with_capacity(base.len());
    for (j, b) in base.iter().enumerate() {
        let q = form.norm(b)?;
        if !q.is_tangible() {
            return Err(Error::precondition(format!(
                "base vector {j} is g-isotropic (⟨b,b⟩ = {q})"
            )));
        }
        norms.push(q);
    }
    for i in 0..base.len() {
        for j in 0..base.len() {
            if i != j && !form.eval(&base[i], &base[j])?.is_ghost_or_zero() {
                return Err(Error::precondition(format!(
                    "base vectors {i} and {j} are not g-orthogonal"
                )));
            }
        }
    }
    Ok(norms)
}

/// Correct `v` against a g-orthogonal family of nonisotropic vectors.
pub fn gs_step(form: &BilinearForm, base: &[Vector], v: &Vector) -> Result<GsResult> {
    form.require_symmetric("Gram-Schmidt")?;
    form.check(v)?;
    let norms = check_orthogonal_family(form, base)?;
    let mut projected = Vector::zeros(v.dim());
    let mut best = Scalar::Zero;
    let mut dominant = Vec::new();
    for (j, (b, &beta)) in base.iter().zip(&norms).enumerate() {
        let c = form.eval(v, b)?.checked_div(beta)?;
        projected = projected.add(&b.scale(c))?;
        let weight = (form.eval(v, b)? + form.eval(b, v)?).square().checked_div(beta)?;
        if weight.is_zero() {
            continue;
        }
        match weight.nu_cmp(best) {
            std::cmp::Ordering::Greater => {
                best = weight;
                dominant = vec![j];
            }
            std::cmp::Ordering::Equal => dominant.push(j),
            std::cmp::Ordering::Less => {}
        }
    }
    let corrected = v.add(&projected)?;
    Ok(GsResult {
        projected,
        corrected,
        dominant,
    })
}

/// `⟨v,v⟩ + Σ_j ⟨v,b_j⟩(⟨v,b_j⟩ + ⟨b_j,v⟩) / ⟨b_j,b_j⟩`, which equals the
/// norm of the corrected vector whenever the family is weakly Cauchy-Schwartz.
pub fn gs0_rhs(form: &BilinearForm, base: &[Vector], v: &Vector) -> Result<Scalar> {
    let mut acc = form.norm(v)?;
    for b in base {
        let vb = form.eval(v, b)?;
        acc = acc + (vb * (vb + form.eval(b, v)?)).checked_div(form.norm(b)?)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GramSchmidt {
    /// Normalized, pairwise g-orthogonal, pairwise Cauchy-Schwartz.
    pub orthogonal: Vec<Vector>,
    /// Inputs whose correction was g-isotropic or failed Cauchy-Schwartz.
    pub leftover: Vec<Vector>,
}

/// Run [`gs_step`] over `vs` in order, keeping the corrections that stay
/// nonisotropic and Cauchy-Schwartz with everything accepted so far.
pub fn gram_schmidt(form: &BilinearForm, vs: &[Vector]) -> Result<GramSchmidt> {
    let mut orthogonal: Vec<Vector> = Vec::new();
    let mut leftover = Vec::new();
    for v in vs {
        let corrected = gs_step(form, &orthogonal, v)?.corrected;
        if accepts(form, &orthogonal, &corrected)? {
            orthogonal.push(form.normalize(&corrected)?);
        } else {
            leftover.push(v.clone());
        }
    }
    Ok(GramSchmidt {
        orthogonal,
        leftover,
    })
}

pub(crate) fn accepts(form: &BilinearForm, family: &[Vector], w: &Vector) -> Result<bool> {
    if !form.norm(w)?.is_tangible() {
        return Ok(false);
    }
    for b in family {
        if !form.is_cauchy_schwartz(w, b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::m;
    use crate::scalar::s;
    use crate::vector::v;

    #[test]
    fn step_against_standard_vector() {
        let f = BilinearForm::standard(2);
        let r = gs_step(&f, &[v("0 -inf")], &v("1 2")).unwrap();
        assert_eq!(r.projected, v("1 -inf"));
        assert_eq!(r.corrected, v("1g 2"));
        assert_eq!(r.dominant, vec![0]);
        assert!(f.eval(&r.corrected, &v("0 -inf")).unwrap().is_ghost_or_zero());
    }

    #[test]
    fn step_with_empty_family_is_identity() {
        let f = BilinearForm::standard(2);
        let r = gs_step(&f, &[], &v("1 2")).unwrap();
        assert_eq!(r.corrected, v("1 2"));
        assert!(r.dominant.is_empty());
    }

    #[test]
    fn step_rejects_isotropic_or_skew_families() {
        let hyp = BilinearForm::new(m("-inf 0; 0 -inf")).unwrap();
        assert!(gs_step(&hyp, &[v("0 -inf")], &v("1 2")).is_err());
        let f = BilinearForm::new(m("0 1; 1 0")).unwrap();
        let e = [Vector::unit(2, 0), Vector::unit(2, 1)];
        assert!(gs_step(&f, &e, &v("1 2")).is_err());
    }

    #[test]
    fn gs0_equality_on_example() {
        let f = BilinearForm::new(m("0 -1g; -1g 1")).unwrap();
        let base = [v("0 -inf")];
        let x = v("2 1");
        let r = gs_step(&f, &base, &x).unwrap();
        assert_eq!(f.norm(&r.corrected).unwrap(), gs0_rhs(&f, &base, &x).unwrap());
    }

    #[test]
    fn gram_schmidt_standard_plane() {
        let f = BilinearForm::standard(2);
        let r = gram_schmidt(&f, &[v("0 -inf"), v("1 2")]).unwrap();
        // The correction (1g, 2) is accepted and then normalized by ⟨w,w⟩ = 4.
        assert_eq!(r.orthogonal, vec![v("0 -inf"), v("-1g 0")]);
        assert!(r.leftover.is_empty());
        assert_eq!(f.norm(&r.orthogonal[1]).unwrap(), s("0"));
    }

    #[test]
    fn gram_schmidt_sets_isotropic_inputs_aside() {
        let hyp = BilinearForm::new(m("-inf 0; 0 -inf")).unwrap();
        let r = gram_schmidt(&hyp, &[v("0 -inf"), v("-inf 0")]).unwrap();
        assert!(r.orthogonal.is_empty());
        assert_eq!(r.leftover.len(), 2);
    }
}
