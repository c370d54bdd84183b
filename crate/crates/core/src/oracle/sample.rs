//! Seeded samplers. Every value is a pure function of `(seed, index)`.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{GroupValue, Scalar};
use crate::vector::Vector;

/// Generator for trial `index` under `seed`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Distribution knobs shared by all samplers.
#[derive(Clone, Debug)]
pub struct Sampler {
    /// Inclusive integer range of ν-values.
    pub lo: i64,
    pub hi: i64,
    pub ghost_density: f64,
    pub zero_density: f64,
    pub max_retries: usize,
}

impl Default for Sampler {
    fn default() -> Self {
        Sampler {
            lo: -10,
            hi: 10,
            ghost_density: 0.2,
            zero_density: 0.15,
            max_retries: 1000,
        }
    }
}

impl Sampler {
    pub fn value<R: Rng>(&self, rng: &mut R) -> GroupValue {
        GroupValue::from_int(rng.gen_range(self.lo..=self.hi))
    }

    /// Mixed tangible / ghost / zero scalar.
    pub fn scalar<R: Rng>(&self, rng: &mut R) -> Scalar {
        let roll: f64 = rng.gen();
        if roll < self.zero_density {
            Scalar::Zero
        } else if roll < self.zero_density + self.ghost_density {
            Scalar::Ghost(self.value(rng))
        } else {
            Scalar::Tangible(self.value(rng))
        }
    }

    pub fn tangible<R: Rng>(&self, rng: &mut R) -> Scalar {
        Scalar::Tangible(self.value(rng))
    }

    pub fn ghost<R: Rng>(&self, rng: &mut R) -> Scalar {
        Scalar::Ghost(self.value(rng))
    }

    /// Tangible or zero.
    pub fn tangible_or_zero<R: Rng>(&self, rng: &mut R) -> Scalar {
        if rng.gen::<f64>() < self.zero_density {
            Scalar::Zero
        } else {
            self.tangible(rng)
        }
    }

    pub fn vector<R: Rng>(&self, rng: &mut R, dim: usize) -> Vector {
        Vector::new((0..dim).map(|_| self.scalar(rng)).collect())
    }

    /// Vector with every entry tangible.
    pub fn tangible_vector<R: Rng>(&self, rng: &mut R, dim: usize) -> Vector {
        Vector::new((0..dim).map(|_| self.tangible(rng)).collect())
    }

    pub fn matrix<R: Rng>(&self, rng: &mut R, rows: usize, cols: usize) -> Matrix {
        let cells: Vec<Scalar> = (0..rows * cols).map(|_| self.scalar(rng)).collect();
        Matrix::from_fn(rows, cols, |i, j| cells[i * cols + j])
    }

    /// Square matrix of tangible-or-zero entries with tangible determinant.
    pub fn nonsingular<R: Rng>(&self, rng: &mut R, n: usize) -> Result<Matrix> {
        for _ in 0..self.max_retries {
            let cells: Vec<Scalar> = (0..n * n).map(|_| self.tangible_or_zero(rng)).collect();
            let a = Matrix::from_fn(n, n, |i, j| cells[i * n + j]);
            if a.nonsingular_det().is_ok() {
                return Ok(a);
            }
        }
        Err(Error::Domain(format!(
            "no nonsingular {n}x{n} sample after {} retries",
            self.max_retries
        )))
    }

    /// Symmetric Gram matrix (`g_ij = g_ji`) with mixed entries.
    pub fn symmetric_gram<R: Rng>(&self, rng: &mut R, n: usize) -> Matrix {
        let mut g = Matrix::identity(n);
        for i in 0..n {
            for j in i..n {
                let x = self.scalar(rng);
                g.set(i, j, x);
                g.set(j, i, x);
            }
        }
        g
    }

    /// `close(A)` for a sampled nonsingular tangible `A`.
    pub fn closed_base<R: Rng>(&self, rng: &mut R, n: usize) -> Result<Matrix> {
        self.nonsingular(rng, n)?.close()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleKind {
    Scalar,
    TangibleScalar,
    Vector,
    Matrix,
    NonsingularMatrix,
    SymmetricGram,
    ClosedBase,
}

impl std::str::FromStr for SampleKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "scalar" => SampleKind::Scalar,
            "tangible-scalar" => SampleKind::TangibleScalar,
            "vector" => SampleKind::Vector,
            "matrix" => SampleKind::Matrix,
            "nonsingular-matrix" => SampleKind::NonsingularMatrix,
            "symmetric-gram" => SampleKind::SymmetricGram,
            "closed-base" => SampleKind::ClosedBase,
            other => return Err(Error::Parse(format!("unknown sample kind `{other}`"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Sample {
    Scalar(Scalar),
    Vector(Vector),
    Matrix(Matrix),
}

/// Cap on any sampled side length.
pub const SAMPLE_CAP: usize = 10;

/// Draw one value of `kind` with `shape = (rows, cols)`; vectors use `rows`.
pub fn sample(kind: SampleKind, shape: (usize, usize), seed: u64, index: u64) -> Result<Sample> {
    let (rows, cols) = shape;
    for got in [rows, cols] {
        if got == 0 || got > SAMPLE_CAP {
            return Err(Error::Capacity {
                what: "sample shape",
                got,
                limit: SAMPLE_CAP,
            });
        }
    }
    let sampler = Sampler::default();
    let rng = &mut trial_rng(seed, index);
    Ok(match kind {
        SampleKind::Scalar => Sample::Scalar(sampler.scalar(rng)),
        SampleKind::TangibleScalar => Sample::Scalar(sampler.tangible(rng)),
        SampleKind::Vector => Sample::Vector(sampler.vector(rng, rows)),
        SampleKind::Matrix => Sample::Matrix(sampler.matrix(rng, rows, cols)),
        SampleKind::NonsingularMatrix => Sample::Matrix(sampler.nonsingular(rng, rows)?),
        SampleKind::SymmetricGram => Sample::Matrix(sampler.symmetric_gram(rng, rows)),
        SampleKind::ClosedBase => Sample::Matrix(sampler.closed_base(rng, rows)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed_and_index() {
        let a = sample(SampleKind::TangibleScalar, (1, 1), 11, 3).unwrap();
        assert_eq!(a, sample(SampleKind::TangibleScalar, (1, 1), 11, 3).unwrap());
        let m1 = sample(SampleKind::Matrix, (3, 4), 5, 0).unwrap();
        let m2 = sample(SampleKind::Matrix, (3, 4), 5, 1).unwrap();
        assert_ne!(m1, m2);
    }

    #[test]
    fn nonsingular_samples_have_tangible_det() {
        for index in 0..20 {
            let Sample::Matrix(a) = sample(SampleKind::NonsingularMatrix, (3, 3), 7, index).unwrap() else {
                panic!("expected a matrix");
            };
            assert!(a.det().unwrap().value.is_tangible());
        }
    }

    #[test]
    fn symmetric_gram_is_symmetric() {
        let Sample::Matrix(g) = sample(SampleKind::SymmetricGram, (2, 2), 7, 0).unwrap() else {
            panic!("expected a matrix");
        };
        assert_eq!(g.get(0, 1), g.get(1, 0));
        assert_eq!(g, g.transpose());
    }

    #[test]
    fn closed_bases_are_closed() {
        for index in 0..30 {
            let Sample::Matrix(a) = sample(SampleKind::ClosedBase, (4, 4), 9, index).unwrap() else {
                panic!("expected a matrix");
            };
            assert!(a.is_closed_base().unwrap(), "{a}");
        }
    }

    #[test]
    fn shape_cap() {
        assert!(sample(SampleKind::Matrix, (11, 2), 0, 0).is_err());
    }
}
