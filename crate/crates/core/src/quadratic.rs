//! Quasilinear quadratic forms.
//!
//! A [`QuadraticForm`] is either backed by a bilinear form, `Q(v) = ⟨v,v⟩`,
//! or given diagonally by values `q_i` on a base, `Q(v) = Σ v_i² q_i`.

use serde::Serialize;

use crate::bilinear::BilinearForm;
use crate::error::{Error, Result};
use crate::matrix::{independent, Matrix};
use crate::oracle::sample::{trial_rng, Sampler};
use crate::scalar::Scalar;
use crate::vector::Vector;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum QuadraticForm {
    FormBacked { form: BilinearForm },
    Diagonal { q: Vec<Scalar> },
}

impl QuadraticForm {
    pub fn from_form(form: BilinearForm) -> Self {
        QuadraticForm::FormBacked { form }
    }

    pub fn diagonal(q: Vec<Scalar>) -> Result<Self> {
        if q.is_empty() {
            return Err(Error::shape("diagonal quadratic form of dimension 0"));
        }
        Ok(QuadraticForm::Diagonal { q })
    }

    pub fn dim(&self) -> usize {
        match self {
            QuadraticForm::FormBacked { form } => form.dim(),
            QuadraticForm::Diagonal { q } => q.len(),
        }
    }

    pub fn eval(&self, v: &Vector) -> Result<Scalar> {
        match self {
            QuadraticForm::FormBacked { form } => form.norm(v),
            QuadraticForm::Diagonal { q } => {
                if v.dim() != q.len() {
                    return Err(Error::shape(format!(
                        "vector of dimension {} for a quadratic form of dimension {}",
                        v.dim(),
                        q.len()
                    )));
                }
                Ok(v.iter().zip(q).map(|(&x, &qi)| x.square() * qi).sum())
            }
        }
    }

    /// Values `Q(e_i)` on the standard base.
    pub fn base_values(&self) -> Vec<Scalar> {
        match self {
            QuadraticForm::Diagonal { q } => q.clone(),
            QuadraticForm::FormBacked { form } => (0..form.dim())
                .map(|i| form.gram().get(i, i))
                .collect(),
        }
    }
}

/// `Q(v)`.
pub fn q_eval(q: &QuadraticForm, v: &Vector) -> Result<Scalar> {
    q.eval(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Quasilinearity {
    Strict,
    Quasilinear,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasilinearityReport {
    pub verdict: Quasilinearity,
    /// Pairs examined; zero when the verdict is analytic.
    pub trials: u64,
    pub seed: u64,
    /// First pair on which `Q(v+w) = Q(v)+Q(w)` failed.
    pub witness: Option<(Vector, Vector)>,
}

/// Classify `Q` by comparing `Q(v+w)` with `Q(v)+Q(w)`. Diagonal forms are
/// strict by construction; form-backed ones are probed on standard base
/// pairs first and then on `trials` seeded random pairs.
pub fn quasilinearity_check(q: &QuadraticForm, trials: u64, seed: u64) -> Result<QuasilinearityReport> {
    let QuadraticForm::FormBacked { form } = q else {
        return Ok(QuasilinearityReport {
            verdict: Quasilinearity::Strict,
            trials: 0,
            seed,
            witness: None,
        });
    };
    let n = form.dim();
    let mut pairs: Vec<(Vector, Vector)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((Vector::unit(n, i), Vector::unit(n, j)));
        }
    }
    let sampler = Sampler::default();
    for index in 0..trials {
        let rng = &mut trial_rng(seed, index);
        pairs.push((sampler.vector(rng, n), sampler.vector(rng, n)));
    }

    let mut verdict = Quasilinearity::Strict;
    let mut witness = None;
    let mut examined = 0;
    for (v, w) in pairs {
        examined += 1;
        let lhs = q.eval(&v.add(&w)?)?;
        let rhs = q.eval(&v)? + q.eval(&w)?;
        if lhs == rhs {
            continue;
        }
        let this = if lhs.ghost_surpasses(rhs) {
            Quasilinearity::Quasilinear
        } else {
            Quasilinearity::Neither
        };
        if witness.is_none() || this == Quasilinearity::Neither {
            witness = Some((v, w));
        }
        verdict = this;
        if this == Quasilinearity::Neither {
            break;
        }
    }
    Ok(QuasilinearityReport {
        verdict,
        trials: examined,
        seed,
        witness,
    })
}

/// Random pairs used when a form-backed `Q` must be certified strict.
const STRICTNESS_TRIALS: u64 = 64;

fn require_strict(q: &QuadraticForm) -> Result<()> {
    let report = quasilinearity_check(q, STRICTNESS_TRIALS, 0)?;
    if report.verdict != Quasilinearity::Strict {
        return Err(Error::precondition(format!(
            "quadratic form is not strictly quasilinear (verdict {:?})",
            report.verdict
        )));
    }
    Ok(())
}

/// `B_Q` with Gram entries `√(Q(e_i) Q(e_j))`.
pub fn form_from_q(q: &QuadraticForm) -> Result<BilinearForm> {
    if matches!(q, QuadraticForm::FormBacked { .. }) {
        require_strict(q)?;
    }
    let values = q.base_values();
    let n = values.len();
    BilinearForm::new(Matrix::from_fn(n, n, |i, j| (values[i] * values[j]).sqrt()))
}

/// Diagonal form together with the base its values refer to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalConversion {
    pub form: QuadraticForm,
    pub base: Vec<Vector>,
}

/// Rewrite `Q` diagonally on the standard base. Form-backed inputs must come
/// from a supertropically symmetric form and pass the strictness check.
pub fn to_diagonal(q: &QuadraticForm) -> Result<DiagonalConversion> {
    if let QuadraticForm::FormBacked { form } = q {
        form.require_symmetric("diagonal conversion")?;
        require_strict(q)?;
    }
    let n = q.dim();
    Ok(DiagonalConversion {
        form: QuadraticForm::Diagonal { q: q.base_values() },
        base: (0..n).map(|i| Vector::unit(n, i)).collect(),
    })
}

/// The plane with Gram `[[𝟘, a], [a, 𝟘]]`.
pub fn hyperbolic_plane(a: Scalar) -> Result<BilinearForm> {
    if !a.is_tangible() {
        return Err(Error::Domain(format!("hyperbolic plane needs a tangible entry, got {a}")));
    }
    BilinearForm::new(Matrix::from_fn(2, 2, |i, j| if i == j { Scalar::Zero } else { a }))
}

/// Both vectors g-isotropic and `Q(b₁+b₂) >_ν Q(b₁) + Q(b₂)`.
pub fn is_hyperbolic_plane(form: &BilinearForm, b1: &Vector, b2: &Vector) -> Result<bool> {
    if !independent(&[b1.clone(), b2.clone()])? {
        return Err(Error::precondition("hyperbolic plane test needs an independent pair"));
    }
    let q1 = form.norm(b1)?;
    let q2 = form.norm(b2)?;
    if !q1.is_ghost_or_zero() || !q2.is_ghost_or_zero() {
        return Ok(false);
    }
    Ok(form.norm(&b1.add(b2)?)?.nu_cmp(q1 + q2).is_gt())
}

pub fn orthogonal_sum(q1: &QuadraticForm, q2: &QuadraticForm) -> Result<QuadraticForm> {
    match (q1, q2) {
        (QuadraticForm::Diagonal { q: a }, QuadraticForm::Diagonal { q: b }) => {
            Ok(QuadraticForm::Diagonal { q: a.iter().chain(b).copied().collect() })
        }
        (QuadraticForm::FormBacked { form: f }, QuadraticForm::FormBacked { form: g }) => {
            let (n, k) = (f.dim(), g.dim());
            let gram = Matrix::from_fn(n + k, n + k, |i, j| match (i < n, j < n) {
                (true, true) => f.gram().get(i, j),
                (false, false) => g.gram().get(i - n, j - n),
                _ => Scalar::Zero,
            });
            Ok(QuadraticForm::FormBacked { form: BilinearForm::new(gram)? })
        }
        _ => Err(Error::precondition(
            "orthogonal sum of a diagonal and a form-backed quadratic form; convert one first",
        )),
    }
}
