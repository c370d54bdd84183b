//! Dense supertropical matrices: products, adjoints, quasi-inverses,
//! quasi-identities, closed bases and tropical rank.

use std::fmt;

use crate::det::{det_value, DetResult};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::vector::Vector;

/// Largest side length accepted by [`Matrix::rank`].
pub const RANK_CAP: usize = 10;

/// Row-major matrix of scalars.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if nrows == 0 || ncols == 0 {
            return Err(Error::shape("matrix must have at least one row and one column"));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != ncols) {
            return Err(Error::shape(format!(
                "row {} has {} entries, expected {ncols}",
                bad + 1,
                rows[bad].len()
            )));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix `A(B)` whose columns are the given vectors.
    pub fn from_columns(columns: &[Vector]) -> Result<Self> {
        let Some(first) = columns.first() else {
            return Err(Error::shape("no columns given"));
        };
        let n = first.dim();
        if columns.iter().any(|c| c.dim() != n) || n == 0 {
            return Err(Error::shape("columns must share one positive dimension"));
        }
        Ok(Matrix::from_fn(n, columns.len(), |i, j| columns[j][i]))
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { Scalar::ONE } else { Scalar::Zero })
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        Matrix::from_fn(n, n, |i, j| if i == j { entries[i] } else { Scalar::Zero })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector::new(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::new((0..self.rows).map(|i| self.get(i, j)).collect())
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = Scalar> + '_ {
        self.data.iter().copied()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn map(&self, f: impl Fn(Scalar) -> Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn scale(&self, a: Scalar) -> Matrix {
        self.map(|x| a * x)
    }

    /// Submatrix on the given row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]))
    }

    /// Delete one row and one column.
    pub fn minor(&self, skip_row: usize, skip_col: usize) -> Matrix {
        let rows: Vec<usize> = (0..self.rows).filter(|&i| i != skip_row).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&j| j != skip_col).collect();
        self.submatrix(&rows, &cols)
    }

    pub(crate) fn require_square(&self, what: &str) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::shape(format!(
                "{what} needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(self.rows)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum()
        }))
    }

    pub fn mul_vec(&self, v: &Vector) -> Result<Vector> {
        if self.cols != v.dim() {
            return Err(Error::shape(format!(
                "cannot apply a {}x{} matrix to a vector of dimension {}",
                self.rows,
                self.cols,
                v.dim()
            )));
        }
        Ok(Vector::new(
            (0..self.rows)
                .map(|i| (0..self.cols).map(|k| self.get(i, k) * v[k]).sum())
                .collect(),
        ))
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::shape("matrix sum needs equal shapes"));
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) + other.get(i, j)
        }))
    }

    /// Entrywise `self ⊨ other`.
    pub fn ghost_surpasses(&self, other: &Matrix) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(b, a)| b.ghost_surpasses(*a))
    }

    pub fn det(&self) -> Result<DetResult> {
        crate::det::det(self)
    }

    /// `adj(A)`: entry `(i, j)` is the determinant of `A` without row `j` and
    /// column `i`. The adjoint of a 1×1 matrix is `[[𝟙]]`.
    pub fn adjoint(&self) -> Result<Matrix> {
        let n = self.require_square("adjoint")?;
        if n == 1 {
            return Ok(Matrix::identity(1));
        }
        let mut out = Matrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, det_value(&self.minor(j, i))?);
            }
        }
        Ok(out)
    }

    /// The determinant, if tangible; otherwise a `Singular` error.
    pub fn nonsingular_det(&self) -> Result<Scalar> {
        self.require_square("a nonsingular matrix")?;
        let det = det_value(self)?;
        if det.is_tangible() {
            Ok(det)
        } else {
            Err(Error::Singular { det })
        }
    }

    /// `A^∇ = (𝟙/|A|) adj(A)`.
    pub fn pseudo_inverse(&self) -> Result<Matrix> {
        let det = self.nonsingular_det()?;
        Ok(self.adjoint()?.scale(det.inv()?))
    }

    /// `(I_A, I'_A) = (A A^∇, A^∇ A)`.
    pub fn quasi_identities(&self) -> Result<(Matrix, Matrix)> {
        let pinv = self.pseudo_inverse()?;
        Ok((self.mul(&pinv)?, pinv.mul(self)?))
    }

    pub fn quasi_identity(&self) -> Result<Matrix> {
        self.mul(&self.pseudo_inverse()?)
    }

    /// `A^∇∇ = A^∇ A A^∇`.
    pub fn double_pseudo(&self) -> Result<Matrix> {
        let pinv = self.pseudo_inverse()?;
        pinv.mul(&self.mul(&pinv)?)
    }

    /// Multiplicatively idempotent, determinant `𝟙`, and `⊨ I`.
    pub fn is_quasi_identity(&self) -> Result<bool> {
        let n = self.require_square("quasi-identity test")?;
        Ok(self.mul(self)? == *self
            && det_value(self)? == Scalar::ONE
            && self.ghost_surpasses(&Matrix::identity(n)))
    }

    /// `Ā = I_A A`.
    pub fn close(&self) -> Result<Matrix> {
        self.quasi_identity()?.mul(self)
    }

    /// `I_A A = A`.
    pub fn is_closed_base(&self) -> Result<bool> {
        Ok(self.quasi_identity()?.mul(self)? == *self)
    }

    /// Largest `k` such that some `k×k` submatrix has a tangible determinant.
    pub fn rank(&self) -> Result<usize> {
        for (what, got) in [("row count", self.rows), ("column count", self.cols)] {
            if got > RANK_CAP {
                return Err(Error::Capacity {
                    what,
                    got,
                    limit: RANK_CAP,
                });
            }
        }
        for k in (1..=self.rows.min(self.cols)).rev() {
            for rows in combinations(self.rows, k) {
                for cols in combinations(self.cols, k) {
                    if det_value(&self.submatrix(&rows, &cols))?.is_tangible() {
                        return Ok(k);
                    }
                }
            }
        }
        Ok(0)
    }
}

/// Tropical independence via the rank criterion: `k` vectors are independent
/// iff the matrix with these columns has rank `k`.
pub fn independent(vectors: &[Vector]) -> Result<bool> {
    let Some(first) = vectors.first() else {
        return Ok(true);
    };
    if vectors.len() > first.dim() {
        if vectors.iter().any(|v| v.dim() != first.dim()) {
            return Err(Error::shape("vectors must share one dimension"));
        }
        return Ok(false);
    }
    Ok(Matrix::from_columns(vectors)?.rank()? == vectors.len())
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if next[i] < n - k + i {
                next[i] += 1;
                for t in i + 1..k {
                    next[t] = next[t - 1] + 1;
                }
                current = Some(next);
                break;
            }
        }
        Some(out)
    })
}

impl serde::Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        crate::format::matrix_to_json(self).serialize(ser)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{}", self.row(i))?;
        }
        Ok(())
    }
}

/// Build a matrix from `;`-separated rows of scalar literals. Test helper.
pub fn m(text: &str) -> Matrix {
    crate::format::parse_inline(text).unwrap_or_else(|e| panic!("bad matrix `{text}`: {e}"))
}
