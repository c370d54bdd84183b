//! Strict bilinear forms given by Gram matrices.
//!
//! `⟨v, w⟩ = Σ_{i,j} v_i g_ij w_j`, always evaluated by the full expansion.

mod decompose;
mod gram_schmidt;
mod strip;

pub use decompose::{check_decomposition, decompose, Decomposition};
pub use gram_schmidt::{gram_schmidt, gs0_rhs, gs_step, GramSchmidt, GsResult};
pub use strip::{isotropic_strip, StripResult};

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{independent, Matrix};
use crate::oracle::sample::{trial_rng, Sampler};
use crate::scalar::Scalar;
use crate::vector::{lin_comb, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BilinearForm {
    gram: Matrix,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Result<Self> {
        gram.require_square("Gram matrix")?;
        Ok(BilinearForm { gram })
    }

    /// The form with identity Gram matrix (the scalar product).
    pub fn standard(n: usize) -> Self {
        BilinearForm {
            gram: Matrix::identity(n),
        }
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    fn check(&self, v: &Vector) -> Result<()> {
        if v.dim() != self.dim() {
            return Err(Error::shape(format!(
                "vector of dimension {} for a form of dimension {}",
                v.dim(),
                self.dim()
            )));
        }
        Ok(())
    }

    pub fn eval(&self, v: &Vector, w: &Vector) -> Result<Scalar> {
        self.check(v)?;
        self.check(w)?;
        let n = self.dim();
        let mut acc = Scalar::Zero;
        for i in 0..n {
            for j in 0..n {
                acc = acc + v[i] * self.gram.get(i, j) * w[j];
            }
        }
        Ok(acc)
    }

    /// `Q_B(v) = ⟨v, v⟩`.
    pub fn norm(&self, v: &Vector) -> Result<Scalar> {
        self.eval(v, v)
    }

    pub fn gram_of(&self, vs: &[Vector]) -> Result<Matrix> {
        if vs.is_empty() {
            return Err(Error::shape("Gram matrix of an empty family"));
        }
        let k = vs.len();
        let mut g = Matrix::identity(k);
        for i in 0..k {
            for j in 0..k {
                g.set(i, j, self.eval(&vs[i], &vs[j])?);
            }
        }
        Ok(g)
    }

    pub fn is_isotropic(&self, v: &Vector) -> Result<bool> {
        Ok(self.norm(v)?.is_ghost_or_zero())
    }

    pub fn classify_vector(&self, v: &Vector) -> Result<VectorClass> {
        let value = self.norm(v)?;
        Ok(VectorClass {
            value,
            isotropic: value.is_ghost_or_zero(),
            normal: value == Scalar::ONE,
        })
    }

    /// Scale `v` by `⟨v, v⟩^{-1/2}` so that the result is normal.
    pub fn normalize(&self, v: &Vector) -> Result<Vector> {
        let value = self.norm(v)?;
        if !value.is_tangible() {
            return Err(Error::Domain(format!(
                "cannot normalize a g-isotropic vector (⟨v,v⟩ = {value})"
            )));
        }
        Ok(v.scale(value.sqrt().inv()?))
    }

    /// `g_ij + g_ji ∈ G₀` for all `i, j`, which for strict forms is
    /// equivalent to `⟨v,w⟩ + ⟨w,v⟩ ∈ G₀` for all `v, w`.
    pub fn is_supertropically_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| (self.gram.get(i, j) + self.gram.get(j, i)).is_ghost_or_zero()))
    }

    pub(crate) fn require_symmetric(&self, what: &str) -> Result<()> {
        if !self.is_supertropically_symmetric() {
            return Err(Error::precondition(format!(
                "{what} needs a supertropically symmetric form"
            )));
        }
        Ok(())
    }

    /// Every base vector g-isotropic, plus a spot check on seeded tangible
    /// combinations of the base.
    pub fn is_alternate(&self, base: &[Vector]) -> Result<bool> {
        self.require_symmetric("alternation test")?;
        for b in base {
            if !self.is_isotropic(b)? {
                return Ok(false);
            }
        }
        if base.is_empty() {
            return Ok(true);
        }
        let sampler = Sampler::default();
        for index in 0..ALTERNATE_SPOT_CHECKS {
            let rng = &mut trial_rng(ALTERNATE_SPOT_SEED, index);
            let coeffs: Vec<Scalar> = base
                .iter()
                .map(|_| if rng.gen_bool(0.2) { Scalar::Zero } else { sampler.tangible(rng) })
                .collect();
            if !self.is_isotropic(&lin_comb(&coeffs, base)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn pair_class(&self, v: &Vector, w: &Vector) -> Result<PairClass> {
        let vv = self.eval(v, v)?;
        let ww = self.eval(w, w)?;
        let vw = self.eval(v, w)?;
        let wv = self.eval(w, v)?;
        Ok(PairClass::from_gram(vv, vw, wv, ww))
    }

    /// `⟨v,v⟩⟨w,w⟩ >_ν ⟨v,w⟩² + ⟨w,v⟩²`.
    pub fn is_cauchy_schwartz(&self, v: &Vector, w: &Vector) -> Result<bool> {
        Ok(self.pair_class(v, w)?.cauchy_schwartz)
    }

    /// `|G(vs)| ∈ G₀`, with the nondegeneracy hypothesis and the rank verdict
    /// reported alongside.
    pub fn gram_dependent(&self, vs: &[Vector]) -> Result<GramDependence> {
        let det = crate::det::det_value(&self.gram_of(vs)?)?;
        let mut degenerate = false;
        for s in vs.iter().filter(|s| !s.is_ghost()) {
            degenerate |= self.radical_member(vs, s)?;
        }
        Ok(GramDependence {
            det,
            dependent: det.is_ghost_or_zero(),
            degenerate,
            independent_by_rank: independent(vs)?,
        })
    }

    /// `⟨v, s⟩ ∈ G₀` for every spanner `s`.
    pub fn radical_member(&self, spanners: &[Vector], v: &Vector) -> Result<bool> {
        for s in spanners {
            if !self.eval(v, s)?.is_ghost_or_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

const ALTERNATE_SPOT_CHECKS: u64 = 16;
const ALTERNATE_SPOT_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VectorClass {
    pub value: Scalar,
    pub isotropic: bool,
    pub normal: bool,
}

/// Orthogonality, compatibility and Cauchy-Schwartz flags of a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairClass {
    pub left_orthogonal: bool,
    pub right_orthogonal: bool,
    pub compatible: bool,
    pub strictly_compatible: bool,
    pub weakly_cauchy_schwartz: bool,
    pub cauchy_schwartz: bool,
    pub corner_singular: bool,
}

impl PairClass {
    /// Flags from the 2×2 Gram entries `⟨v,v⟩, ⟨v,w⟩, ⟨w,v⟩, ⟨w,w⟩`.
    pub fn from_gram(vv: Scalar, vw: Scalar, wv: Scalar, ww: Scalar) -> Self {
        use std::cmp::Ordering::*;
        let diag = vv + ww;
        let cross = vw + wv;
        let compat = diag.nu_cmp(cross);
        let cs = (vv * ww).nu_cmp(vw.square() + wv.square());
        PairClass {
            left_orthogonal: vw.is_ghost_or_zero(),
            right_orthogonal: wv.is_ghost_or_zero(),
            compatible: compat != Less,
            strictly_compatible: compat == Greater || (compat == Equal && vv.nu_cmp(ww) == Equal),
            weakly_cauchy_schwartz: cs != Less,
            cauchy_schwartz: cs == Greater,
            corner_singular: corner_singular(vv, vw, wv, ww),
        }
    }
}

/// Gram `[[a, b], [c, d]]` ν-matched to `[[α, αβ], [αβ, αβ²]]`.
fn corner_singular(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> bool {
    let Some(alpha) = a.nu_value() else {
        // α = 𝟘 forces the whole pattern to vanish.
        return [b, c, d].iter().all(|x| x.is_zero());
    };
    match b.nu_value() {
        // β = 𝟘.
        None => c.is_zero() && d.is_zero(),
        Some(ab) => {
            let beta = ab - alpha;
            c.nu_value() == Some(ab) && d.nu_value() == Some(ab + beta)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GramDependence {
    pub det: Scalar,
    pub dependent: bool,
    /// Some non-ghost spanner lies in the radical of the span, so the
    /// dependence theorem's hypothesis is not met.
    pub degenerate: bool,
    pub independent_by_rank: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::m;
    use crate::scalar::s;
    use crate::vector::v;

    fn form(text: &str) -> BilinearForm {
        BilinearForm::new(m(text)).unwrap()
    }

    #[test]
    fn eval_examples() {
        let id = BilinearForm::standard(2);
        assert_eq!(id.eval(&v("0 -inf"), &v("-inf 0")).unwrap(), Scalar::Zero);
        assert_eq!(form("-inf 0; 0 -inf").norm(&v("0 0")).unwrap(), s("0g"));
        assert_eq!(form("-inf 0; -inf -inf").norm(&v("0 0")).unwrap(), s("0"));
        assert!(id.eval(&v("0"), &v("0 0")).is_err());
        assert!(BilinearForm::new(m("0 1")).is_err());
    }

    #[test]
    fn eval_is_bilinear_on_combinations() {
        let f = form("1 -2g 0; 3 -inf 1; 0g 2 -1");
        let vs = [v("0 1 -inf"), v("2g -1 0"), v("-inf 3 1")];
        let coeffs = [s("1"), s("-2"), s("0g")];
        let w = v("1 0 -3");
        let lhs = f.eval(&lin_comb(&coeffs, &vs).unwrap(), &w).unwrap();
        let rhs: Scalar = coeffs
            .iter()
            .zip(&vs)
            .map(|(&c, x)| c * f.eval(x, &w).unwrap())
            .sum();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn gram_of_examples() {
        let id = BilinearForm::standard(2);
        let base = [Vector::unit(2, 0), Vector::unit(2, 1)];
        assert_eq!(id.gram_of(&base).unwrap(), Matrix::identity(2));
        let hyp = form("-inf 0; 0 -inf");
        assert_eq!(hyp.gram_of(&base).unwrap(), m("-inf 0; 0 -inf"));
        assert_eq!(id.gram_of(&[v("0 0"), v("1 -inf")]).unwrap(), m("0g 1; 1 2"));
    }

    #[test]
    fn classify_examples() {
        let id = BilinearForm::standard(2);
        let c = id.classify_vector(&Vector::unit(2, 0)).unwrap();
        assert!(!c.isotropic && c.normal);
        assert!(form("-inf 0; 0 -inf").classify_vector(&Vector::unit(2, 0)).unwrap().isotropic);
        let c = id.classify_vector(&v("0 0")).unwrap();
        assert!(c.isotropic);
        assert_eq!(c.value, s("0g"));
    }

    #[test]
    fn normalize_examples() {
        let id = BilinearForm::standard(2);
        assert_eq!(id.normalize(&Vector::unit(2, 0)).unwrap(), Vector::unit(2, 0));
        let n = id.normalize(&v("4 -inf")).unwrap();
        assert_eq!(n, v("0 -inf"));
        assert_eq!(id.norm(&n).unwrap(), Scalar::ONE);
        let odd = id.normalize(&v("3 1")).unwrap();
        assert_eq!(id.norm(&odd).unwrap(), Scalar::ONE);
        assert!(form("-inf 0; 0 -inf").normalize(&Vector::unit(2, 0)).is_err());
    }

    #[test]
    fn symmetry_examples() {
        assert!(form("1 2; 2 5").is_supertropically_symmetric());
        assert!(!form("-inf 0; -inf -inf").is_supertropically_symmetric());
        assert!(form("1 3; 3g 2").is_supertropically_symmetric());
    }

    #[test]
    fn alternate_examples() {
        let base = [Vector::unit(2, 0), Vector::unit(2, 1)];
        assert!(form("-inf 0; 0 -inf").is_alternate(&base).unwrap());
        assert!(!BilinearForm::standard(2).is_alternate(&base).unwrap());
        assert!(form("0g 1g; 1g 2g").is_alternate(&base).unwrap());
        assert!(form("-inf 0; -inf -inf").is_alternate(&base).is_err());
    }

    #[test]
    fn pair_class_examples() {
        let (e1, e2) = (Vector::unit(2, 0), Vector::unit(2, 1));
        let p = BilinearForm::standard(2).pair_class(&e1, &e2).unwrap();
        assert!(p.cauchy_schwartz && p.weakly_cauchy_schwartz);
        assert!(p.compatible && p.strictly_compatible);
        assert!(p.left_orthogonal && p.right_orthogonal);

        let p = form("-inf 0; 0 -inf").pair_class(&e1, &e2).unwrap();
        assert!(!p.weakly_cauchy_schwartz && !p.cauchy_schwartz);

        let p = form("0 2; 2 0").pair_class(&e1, &e2).unwrap();
        assert!(!p.compatible && !p.weakly_cauchy_schwartz);
    }

    #[test]
    fn corner_singular_pattern() {
        // α = 1, β = 2: [[1, 3], [3, 5]] up to ν.
        assert!(PairClass::from_gram(s("1"), s("3g"), s("3"), s("5")).corner_singular);
        assert!(!PairClass::from_gram(s("1"), s("3"), s("3"), s("4")).corner_singular);
        assert!(PairClass::from_gram(s("1"), Scalar::Zero, Scalar::Zero, Scalar::Zero).corner_singular);
        assert!(!PairClass::from_gram(Scalar::Zero, s("0"), s("0"), Scalar::Zero).corner_singular);
    }

    #[test]
    fn gram_dependence_examples() {
        let id = BilinearForm::standard(2);
        let r = id.gram_dependent(&[Vector::unit(2, 0), Vector::unit(2, 1)]).unwrap();
        assert!(!r.dependent && r.independent_by_rank);
        let r = id.gram_dependent(&[v("0 0"), v("0 0")]).unwrap();
        assert!(r.dependent && !r.independent_by_rank);
        // 2×2 case: ghost determinant iff ⟨v,w⟩⟨w,v⟩ ⊨ ⟨v,v⟩⟨w,w⟩.
        let f = form("1 2; 2 3");
        let (e1, e2) = (Vector::unit(2, 0), Vector::unit(2, 1));
        let r = f.gram_dependent(&[e1.clone(), e2.clone()]).unwrap();
        let vw_wv = f.eval(&e1, &e2).unwrap() * f.eval(&e2, &e1).unwrap();
        let vv_ww = f.norm(&e1).unwrap() * f.norm(&e2).unwrap();
        assert!(r.dependent);
        assert!(vw_wv.ghost_surpasses(vv_ww));
    }

    #[test]
    fn radical_examples() {
        let f = form("3 1; 0 2");
        let base = [Vector::unit(2, 0), Vector::unit(2, 1)];
        assert!(f.radical_member(&base, &v("1g -inf")).unwrap());
        assert!(!BilinearForm::standard(2).radical_member(&base, &base[0]).unwrap());
        assert!(form("0 -inf; -inf 0g").radical_member(&base, &base[1]).unwrap());
    }
}
