use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense vector over the semifield.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn new(entries: Vec<Scalar>) -> Self {
        Vector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Scalar::Zero; dim])
    }

    /// The `i`-th standard base vector `e_i` of `F^(dim)`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Scalar::ONE;
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = &Scalar> {
        self.0.iter()
    }

    pub(crate) fn check_dim(&self, other: &Vector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::shape(format!(
                "vector dimensions {} and {} differ",
                self.dim(),
                other.dim()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.check_dim(other)?;
        Ok(Vector(
            self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect(),
        ))
    }

    pub fn scale(&self, a: Scalar) -> Vector {
        Vector(self.0.iter().map(|&x| a * x).collect())
    }

    /// `v^ν = v + v`.
    pub fn nu(&self) -> Vector {
        Vector(self.0.iter().map(|x| x.nu()).collect())
    }

    /// Member of the standard ghost subspace `H₀ = eV`.
    pub fn is_ghost(&self) -> bool {
        self.0.iter().all(|x| x.is_ghost_or_zero())
    }

    /// All entries tangible or `𝟘`, and at least one nonzero.
    pub fn is_tangible(&self) -> bool {
        self.0.iter().all(|x| !x.is_ghost()) && self.0.iter().any(|x| !x.is_zero())
    }

    /// Entrywise `self ⊨ other`.
    pub fn ghost_surpasses(&self, other: &Vector) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .all(|(&b, &a)| b.ghost_surpasses(a)))
    }

    /// Supertropical dot product `Σ self_i · other_i`.
    pub fn dot(&self, other: &Vector) -> Result<Scalar> {
        self.check_dim(other)?;
        Ok(self.0.iter().zip(&other.0).map(|(&a, &b)| a * b).sum())
    }
}

/// `Σ coeffs_i · vectors_i`, evaluated entrywise.
pub fn lin_comb(coeffs: &[Scalar], vectors: &[Vector]) -> Result<Vector> {
    if coeffs.len() != vectors.len() {
        return Err(Error::shape(format!(
            "{} coefficients for {} vectors",
            coeffs.len(),
            vectors.len()
        )));
    }
    let Some(first) = vectors.first() else {
        return Err(Error::shape("empty linear combination has no dimension"));
    };
    let mut acc = Vector::zeros(first.dim());
    for (&c, v) in coeffs.iter().zip(vectors) {
        acc = acc.add(&v.scale(c))?;
    }
    Ok(acc)
}

impl serde::Serialize for Vector {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(ser)
    }
}

impl From<Vec<Scalar>> for Vector {
    fn from(entries: Vec<Scalar>) -> Self {
        Vector(entries)
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Build a vector from whitespace-separated scalar literals. Test helper.
pub fn v(text: &str) -> Vector {
    Vector(text.split_whitespace().map(crate::scalar::s).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::s;

    #[test]
    fn lin_comb_examples() {
        assert_eq!(lin_comb(&[s("0")], &[v("1 2")]).unwrap(), v("1 2"));
        assert_eq!(
            lin_comb(&[s("0"), s("0")], &[v("0 -inf"), v("0 -inf")]).unwrap(),
            v("0g -inf")
        );
        assert_eq!(
            lin_comb(&[s("1"), s("2")], &[v("0 -inf"), v("-inf 0")]).unwrap(),
            v("1 2")
        );
        assert!(lin_comb(&[s("0")], &[v("1"), v("2")]).is_err());
        assert!(lin_comb(&[s("0"), s("0")], &[v("1"), v("2 3")]).is_err());
    }

    #[test]
    fn lin_comb_matches_entrywise_oracle() {
        let coeffs = [s("1"), s("-2g"), s("3")];
        let vs = [v("0 4 -inf"), v("5 1g 2"), v("-inf 2 -1")];
        let got = lin_comb(&coeffs, &vs).unwrap();
        for i in 0..3 {
            let mut best = Scalar::Zero;
            for (c, vec) in coeffs.iter().zip(&vs) {
                best = best + (*c * vec[i]);
            }
            assert_eq!(got[i], best);
        }
    }

    #[test]
    fn ghost_vector_examples() {
        assert!(v("3g -inf").is_ghost());
        assert!(!v("3g 2").is_ghost());
        assert!(v("-inf -inf").is_ghost());
    }

    #[test]
    fn vec_ghost_surpasses_examples() {
        assert!(v("5g 3").ghost_surpasses(&v("3 3")).unwrap());
        assert!(!v("2g 3").ghost_surpasses(&v("3 3")).unwrap());
        assert!(v("3g 3g").ghost_surpasses(&v("-inf -inf")).unwrap());
        assert!(v("1").ghost_surpasses(&v("1 2")).is_err());
    }
}
