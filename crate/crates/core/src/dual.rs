//! Linear functionals, dual bases of closed bases, and matrix maps.
//!
//! A base `b_1, …, b_n` is carried as the matrix `A` whose columns are the
//! `b_j`. Functionals are row vectors. The dual base of a closed base takes
//! `ε_i` to be row `i` of `A^∇∇`, so that `ε_i(b_j)` is entry `(i, j)` of
//! `A^∇∇ A`, which for closed `A` is the quasi-identity `A^∇ A`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::oracle::sample::{trial_rng, Sampler};
use crate::scalar::Scalar;
use crate::vector::Vector;

/// Linear functional `v ↦ Σ_j row_j · v_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Functional {
    pub row: Vector,
}

impl Functional {
    pub fn new(row: Vector) -> Self {
        Functional { row }
    }

    /// Coordinate functional `e_iᵀ`.
    pub fn coordinate(dim: usize, i: usize) -> Self {
        Functional::new(Vector::unit(dim, i))
    }

    pub fn apply(&self, v: &Vector) -> Result<Scalar> {
        self.row.dot(v)
    }

    /// The functional as a single-row matrix.
    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_fn(1, self.row.dim(), |_, j| self.row[j])
    }
}

/// Dual base `{ε_i}` of a closed base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBase {
    pub functionals: Vec<Functional>,
    pub source: Matrix,
}

/// `L̃_A(v) = I_A v`.
pub fn project_closed(a: &Matrix, v: &Vector) -> Result<Vector> {
    a.quasi_identity()?.mul_vec(v)
}

/// `L_A(v) = A^∇∇ v`.
pub fn lower(a: &Matrix, v: &Vector) -> Result<Vector> {
    a.double_pseudo()?.mul_vec(v)
}

pub fn dual_base(a: &Matrix) -> Result<DualBase> {
    a.nonsingular_det()?;
    if !a.is_closed_base()? {
        return Err(Error::precondition(
            "dual base needs a closed base (I_A A = A); pass close(A) instead",
        ));
    }
    let dd = a.double_pseudo()?;
    Ok(DualBase {
        functionals: dd.row_vectors().into_iter().map(Functional::new).collect(),
        source: a.clone(),
    })
}

impl DualBase {
    pub fn len(&self) -> usize {
        self.functionals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functionals.is_empty()
    }

    /// The matrix whose rows are the functionals.
    pub fn row_matrix(&self) -> Matrix {
        let rows: Vec<Vector> = self.functionals.iter().map(|f| f.row.clone()).collect();
        Matrix::from_columns(&rows)
            .expect("dual base is nonempty")
            .transpose()
    }

    /// `[ε_i(b_j)]`.
    pub fn eval_matrix(&self) -> Result<Matrix> {
        dual_eval_matrix(self)
    }

    /// The bilinear grid `[b_iᵀ A^∇∇ b_j]`. It agrees with [`dual_eval_matrix`]
    /// only in special cases (for instance the standard base).
    pub fn bilinear_grid(&self) -> Result<Matrix> {
        let a = &self.source;
        a.transpose().mul(&a.double_pseudo()?)?.mul(a)
    }
}

pub fn dual_eval_matrix(d: &DualBase) -> Result<Matrix> {
    let base = d.source.columns();
    let n = d.len();
    let mut grid = Matrix::identity(n);
    for (i, f) in d.functionals.iter().enumerate() {
        for (j, b) in base.iter().enumerate() {
            grid.set(i, j, f.apply(b)?);
        }
    }
    Ok(grid)
}

pub fn dual_rank(d: &DualBase) -> Result<usize> {
    d.row_matrix().rank()
}

/// `M v ∈ H₀`.
pub fn ghost_kernel_contains(m: &Matrix, v: &Vector) -> Result<bool> {
    Ok(m.mul_vec(v)?.is_ghost())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum MonicVerdict {
    /// Nonsingular matrix: no tangible vector lands in the ghost kernel.
    Proved,
    /// Sampling found nothing; this proves nothing.
    NoCounterexample { trials: usize },
    /// A non-ghost vector mapped into `H₀`.
    Refuted { witness: Vector },
}

impl MonicVerdict {
    pub fn holds(&self) -> bool {
        !matches!(self, MonicVerdict::Refuted { .. })
    }
}

/// Ghost-monic test for `v ↦ M v`: exact for nonsingular `M`, refutation-only
/// otherwise. Candidates are the all-`𝟙` vector, tangible lifts of the
/// adjoint's columns, then `trials` seeded random tangible vectors.
pub fn is_ghost_monic(m: &Matrix, trials: usize, seed: u64) -> Result<MonicVerdict> {
    let n = m.require_square("ghost-monic test")?;
    if m.nonsingular_det().is_ok() {
        return Ok(MonicVerdict::Proved);
    }
    let mut candidates = vec![Vector::new(vec![Scalar::ONE; n])];
    for col in m.adjoint()?.columns() {
        let lifted = Vector::new(
            col.iter()
                .map(|x| x.tangible_lift().unwrap_or(Scalar::Zero))
                .collect(),
        );
        if lifted.is_tangible() {
            candidates.push(lifted);
        }
    }
    let sampler = Sampler::default();
    for index in 0..trials {
        candidates.push(sampler.tangible_vector(&mut trial_rng(seed, index as u64), n));
    }
    for v in candidates {
        if ghost_kernel_contains(m, &v)? {
            return Ok(MonicVerdict::Refuted { witness: v });
        }
    }
    Ok(MonicVerdict::NoCounterexample { trials })
}

pub fn is_tropically_onto(m: &Matrix) -> Result<bool> {
    let n = m.require_square("tropically-onto test")?;
    Ok(m.rank()? == n)
}

/// `v**(f) = f(v)`.
pub fn double_dual_eval(v: &Vector, f: &Functional) -> Result<Scalar> {
    f.apply(v)
}

/// The matrix whose columns are `Φ(b_j) = (ε_1(b_j), …, ε_n(b_j))`.
pub fn double_dual_matrix(d: &DualBase) -> Result<Matrix> {
    let columns = d
        .source
        .columns()
        .iter()
        .map(|b| {
            d.functionals
                .iter()
                .map(|f| double_dual_eval(b, f))
                .collect::<Result<Vec<_>>>()
                .map(Vector::new)
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_columns(&columns)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapAxiomReport {
    pub trials: usize,
    pub seed: u64,
    /// Description of the first violated axiom, if any.
    pub counterexample: Option<String>,
}

impl MapAxiomReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Sample the supertropical-map axioms for `v ↦ M v`.
pub fn check_map_axioms(m: &Matrix, trials: usize, seed: u64) -> Result<MapAxiomReport> {
    let sampler = Sampler::default();
    let n = m.cols();
    let mut counterexample = None;
    for index in 0..trials {
        let rng = &mut trial_rng(seed, index as u64);
        let v = sampler.vector(rng, n);
        let w = sampler.vector(rng, n);
        let alpha = sampler.tangible(rng);
        let a = sampler.ghost(rng);

        let lhs = m.mul_vec(&v.add(&w)?)?;
        let rhs = m.mul_vec(&v)?.add(&m.mul_vec(&w)?)?;
        let scaled = m.mul_vec(&v.scale(alpha))?;
        let ghost_scaled = m.mul_vec(&v.scale(a))?;
        let image = m.mul_vec(&v)?;

        let failure = if !lhs.ghost_surpasses(&rhs)? {
            Some(format!("M(v+w) does not surpass Mv+Mw for v=({v}), w=({w})"))
        } else if lhs != rhs {
            Some(format!("M(v+w) != Mv+Mw for v=({v}), w=({w})"))
        } else if scaled != image.scale(alpha) {
            Some(format!("M(αv) != αMv for α={alpha}, v=({v})"))
        } else if !ghost_scaled.ghost_surpasses(&image.scale(a))? {
            Some(format!("M(av) does not surpass aMv for a={a}, v=({v})"))
        } else {
            None
        };
        if let Some(msg) = failure {
            counterexample = Some(format!("trial {index}: {msg}"));
            break;
        }
    }
    Ok(MapAxiomReport {
        trials,
        seed,
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::m;
    use crate::scalar::s;
    use crate::vector::v;

    #[test]
    fn apply_examples() {
        assert_eq!(Functional::coordinate(2, 0).apply(&v("3 5")).unwrap(), s("3"));
        assert_eq!(Functional::new(v("0 0")).apply(&v("2 2")).unwrap(), s("2g"));
        assert_eq!(Functional::new(v("1g -inf")).apply(&v("4 7")).unwrap(), s("5g"));
        assert!(Functional::new(v("0")).apply(&v("1 2")).is_err());
    }

    #[test]
    fn project_closed_examples() {
        let id = Matrix::identity(2);
        assert_eq!(project_closed(&id, &v("3 -1g")).unwrap(), v("3 -1g"));
        let a = m("0 1; 2 0");
        for col in a.close().unwrap().columns() {
            assert_eq!(project_closed(&a, &col).unwrap(), col);
        }
        let got = project_closed(&a, &v("0 -inf")).unwrap();
        assert_eq!(got, v("0 -1g"));
        assert_eq!(got, a.quasi_identity().unwrap().column(0));
        let twice = project_closed(&a, &got).unwrap();
        assert_eq!(twice, got);
        assert!(project_closed(&m("1 2; 3 4"), &v("0 0")).is_err());
    }

    #[test]
    fn lower_examples() {
        assert_eq!(lower(&Matrix::identity(2), &v("5 4")).unwrap(), v("5 4"));
        assert_eq!(lower(&m("2 -inf; -inf 3"), &v("5 4")).unwrap(), v("3 1"));
        let a = m("0 1; 2 0");
        let closed = a.close().unwrap();
        for col in closed.columns() {
            assert_eq!(lower(&closed, &col).unwrap(), lower(&closed, &project_closed(&closed, &col).unwrap()).unwrap());
        }
    }

    #[test]
    fn dual_base_of_identity_is_coordinates() {
        let d = dual_base(&Matrix::identity(3)).unwrap();
        for (i, f) in d.functionals.iter().enumerate() {
            assert_eq!(*f, Functional::coordinate(3, i));
        }
        assert_eq!(dual_eval_matrix(&d).unwrap(), Matrix::identity(3));
        assert_eq!(d.bilinear_grid().unwrap(), Matrix::identity(3));
        assert_eq!(dual_rank(&d).unwrap(), 3);
    }

    #[test]
    fn dual_base_of_closed_2x2() {
        let closed = m("0 1; 2 0").close().unwrap();
        assert_eq!(closed, m("0g 1; 2 0g"));
        let d = dual_base(&closed).unwrap();
        let grid = dual_eval_matrix(&d).unwrap();
        assert_eq!(grid, m("0 -2g; -1g 0"));
        assert_eq!(grid, closed.quasi_identity().unwrap());
        assert_eq!(dual_rank(&d).unwrap(), 2);
    }

    #[test]
    fn dual_base_rejects_open_and_singular() {
        assert!(matches!(dual_base(&m("0 1; 2 0")), Err(Error::Precondition(_))));
        assert!(matches!(dual_base(&m("1 2; 3 4")), Err(Error::Singular { .. })));
    }

    #[test]
    fn diagonal_bases_give_unit_diagonal() {
        let d = dual_base(&m("2 -inf; -inf 3")).unwrap();
        assert_eq!(dual_eval_matrix(&d).unwrap(), Matrix::identity(2));
        // The bilinear reading of ε_i(b_j) would put 2 and 3 on the diagonal.
        assert_eq!(d.bilinear_grid().unwrap(), m("2 -inf; -inf 3"));
    }

    #[test]
    fn ghost_kernel_examples() {
        let any = m("3 -1; 0g 2");
        assert!(ghost_kernel_contains(&any, &v("4g -inf")).unwrap());
        assert!(!ghost_kernel_contains(&Matrix::identity(2), &v("3 -inf")).unwrap());
        assert!(ghost_kernel_contains(&m("0 0; 0 0"), &v("1 1")).unwrap());
    }

    #[test]
    fn ghost_monic_examples() {
        assert_eq!(is_ghost_monic(&m("0 1; 2 0"), 10, 1).unwrap(), MonicVerdict::Proved);
        assert_eq!(is_ghost_monic(&Matrix::identity(3), 0, 1).unwrap(), MonicVerdict::Proved);
        let verdict = is_ghost_monic(&m("0 0; 0 0"), 1, 1).unwrap();
        assert_eq!(verdict, MonicVerdict::Refuted { witness: v("0 0") });
        assert!(!verdict.holds());
    }

    #[test]
    fn onto_examples() {
        assert!(is_tropically_onto(&Matrix::identity(2)).unwrap());
        assert!(!is_tropically_onto(&m("1 2; 3 4")).unwrap());
        assert!(is_tropically_onto(&m("0 1; 2 0")).unwrap());
    }

    #[test]
    fn double_dual_examples() {
        for i in 0..3 {
            for j in 0..3 {
                let got = double_dual_eval(&Vector::unit(3, j), &Functional::coordinate(3, i)).unwrap();
                assert_eq!(got, if i == j { Scalar::ONE } else { Scalar::Zero });
            }
        }
        assert_eq!(double_dual_eval(&v("3 5"), &Functional::new(v("0 0"))).unwrap(), s("5"));
        let d = dual_base(&m("0g 1; 2 0g")).unwrap();
        let phi = double_dual_matrix(&d).unwrap();
        assert_eq!(phi, m("0 -2g; -1g 0"));
        assert_eq!(phi.rank().unwrap(), 2);
    }

    #[test]
    fn matrix_maps_satisfy_the_axioms() {
        for a in [m("0 1; 2 0"), m("1 2; 3 4"), m("0g -inf 3; 1 2 -1g")] {
            let report = check_map_axioms(&a, 50, 3).unwrap();
            assert!(report.passed(), "{:?}", report.counterexample);
        }
    }
}
