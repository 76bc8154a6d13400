//! Dense matrices over a single [`Scalar`] field.

mod charpoly;
mod elim;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::scalar::parse::unify;
use crate::scalar::{FieldTag, Scalar, ScalarError};

pub use charpoly::CharPoly;
pub(crate) use elim::normalize_leading;
pub use elim::{KernelBasis, RowEchelon};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("scalar field mismatch: {0} vs {1}")]
    TagMismatch(FieldTag, FieldTag),
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("not invertible")]
    NotInvertible,
    #[error("rows have unequal lengths")]
    Ragged,
    #[error("characteristic polynomial is limited to n <= {max}, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A row-major `rows x cols` matrix whose entries all share `field`.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldTag,
    entries: Vec<Scalar>,
}

impl Matrix {
    /// Builds a matrix from rows. Entries from different fields are rejected.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Ragged);
        }
        let entries: Vec<Scalar> = rows.into_iter().flatten().collect();
        let field = entries.first().map_or(FieldTag::Rational, Scalar::tag);
        if let Some(bad) = entries.iter().find(|e| e.tag() != field) {
            return Err(LinalgError::TagMismatch(field, bad.tag()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            field,
            entries,
        })
    }

    /// Like [`Matrix::from_rows`] but promotes entries into a common field,
    /// so `[[1, z], [0, -z]]` may mix rational and symbolic entries.
    pub fn from_rows_promoting(rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let mut target: Option<Scalar> = None;
        for e in rows.iter().flatten() {
            target = Some(match target {
                None => e.clone(),
                Some(t) => {
                    let tt = t.tag();
                    unify(t, e.clone()).map_err(|_| LinalgError::TagMismatch(tt, e.tag()))?.0
                }
            });
        }
        let Some(target) = target else {
            return Matrix::from_rows(rows);
        };
        let tag = target.tag();
        let rows = rows
            .into_iter()
            .map(|row| row.into_iter().map(|e| e.promote(tag)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Matrix::from_rows(rows)
    }

    pub fn from_fn(rows: usize, cols: usize, field: FieldTag, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                debug_assert_eq!(e.tag(), field);
                entries.push(e);
            }
        }
        Matrix {
            rows,
            cols,
            field,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize, field: FieldTag) -> Self {
        Matrix::from_fn(rows, cols, field, |_, _| Scalar::zero(field))
    }

    pub fn identity(n: usize, field: FieldTag) -> Self {
        Matrix::from_fn(n, n, field, |i, j| {
            if i == j {
                Scalar::one(field)
            } else {
                Scalar::zero(field)
            }
        })
    }

    pub fn diag(values: &[Scalar]) -> Result<Self, LinalgError> {
        let n = values.len();
        let field = values.first().map_or(FieldTag::Rational, Scalar::tag);
        if let Some(bad) = values.iter().find(|v| v.tag() != field) {
            return Err(LinalgError::TagMismatch(field, bad.tag()));
        }
        Ok(Matrix::from_fn(n, n, field, |i, j| {
            if i == j {
                values[i].clone()
            } else {
                Scalar::zero(field)
            }
        }))
    }

    /// A column vector.
    pub fn column(values: Vec<Scalar>) -> Result<Self, LinalgError> {
        Matrix::from_rows(values.into_iter().map(|v| vec![v]).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        assert_eq!(value.tag(), self.field, "scalar field mismatch");
        self.entries[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Matrix {
        Matrix::from_fn(self.rows, 1, self.field, |i, _| self.get(i, j).clone())
    }

    /// Applies `f` to every entry; the results must share one field.
    pub fn try_map<E>(&self, mut f: impl FnMut(usize, usize, &Scalar) -> Result<Scalar, E>) -> Result<Matrix, E>
    where
        E: From<LinalgError>,
    {
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for j in 0..self.cols {
                row.push(f(i, j, self.get(i, j))?);
            }
            rows.push(row);
        }
        if rows.is_empty() || self.cols == 0 {
            return Ok(self.clone());
        }
        Ok(Matrix::from_rows(rows)?)
    }

    pub fn promote(&self, to: FieldTag) -> Result<Matrix, LinalgError> {
        self.try_map(|_, _, e| e.promote(to).map_err(LinalgError::from))
    }

    fn same_field(&self, other: &Matrix) -> Result<(), LinalgError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(LinalgError::TagMismatch(self.field, other.field))
        }
    }

    fn same_shape(&self, other: &Matrix, op: &'static str) -> Result<(), LinalgError> {
        self.same_field(other)?;
        if self.shape() != other.shape() {
            return Err(LinalgError::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Matrix::from_fn(self.rows, other.cols, self.field, |i, j| {
            let mut acc = Scalar::zero(self.field);
            for k in 0..self.cols {
                let a = self.get(i, k);
                let b = other.get(k, j);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = &acc + &(a * b);
            }
            acc
        }))
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_shape(other, "add")?;
        Ok(Matrix::from_fn(self.rows, self.cols, self.field, |i, j| {
            self.get(i, j) + other.get(i, j)
        }))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_shape(other, "sub")?;
        Ok(Matrix::from_fn(self.rows, self.cols, self.field, |i, j| {
            self.get(i, j) - other.get(i, j)
        }))
    }

    pub fn scale(&self, c: &Scalar) -> Result<Matrix, LinalgError> {
        if c.tag() != self.field {
            return Err(LinalgError::TagMismatch(self.field, c.tag()));
        }
        Ok(Matrix::from_fn(self.rows, self.cols, self.field, |i, j| self.get(i, j) * c))
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, self.field, |i, j| -self.get(i, j))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.field, |i, j| self.get(j, i).clone())
    }

    /// `self - λ·I`.
    pub fn sub_scalar_identity(&self, lambda: &Scalar) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        self.sub(&Matrix::identity(self.rows, self.field).scale(lambda)?)
    }

    pub fn trace(&self) -> Result<Scalar, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        Ok((0..self.rows).fold(Scalar::zero(self.field), |acc, i| &acc + self.get(i, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows, self.field)
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_triangular(&self) -> bool {
        self.is_upper_triangular() || self.is_lower_triangular()
    }

    pub fn diagonal(&self) -> Vec<Scalar> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    /// Kronecker product: the block matrix `(a_ij · b)`.
    pub fn kronecker(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        let (br, bc) = other.shape();
        Ok(Matrix::from_fn(self.rows * br, self.cols * bc, self.field, |i, j| {
            self.get(i / br, j / bc) * other.get(i % br, j % bc)
        }))
    }

    /// Block-diagonal `diag(self, other)`.
    pub fn block_diag(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        let (r, c) = self.shape();
        Ok(Matrix::from_fn(r + other.rows, c + other.cols, self.field, |i, j| {
            match (i < r, j < c) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => other.get(i - r, j - c).clone(),
                _ => Scalar::zero(self.field),
            }
        }))
    }

    /// Keeps the listed rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), self.field, |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Deletes row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> Matrix {
        let rows: Vec<usize> = (0..self.rows).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&j| j != c).collect();
        self.select(&rows, &cols)
    }

    /// Places `other`'s columns to the right of `self`'s.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "hstack",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Matrix::from_fn(self.rows, self.cols + other.cols, self.field, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    /// Places `other`'s rows below `self`'s.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                op: "vstack",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            field: self.field,
            entries,
        })
    }

    /// `p⁻¹ · self · p`.
    pub fn conjugate_by(&self, p: &Matrix) -> Result<Matrix, LinalgError> {
        conjugate(p, self)
    }

    /// True when `other = c·self` for some nonzero scalar `c`.
    pub fn is_scalar_multiple_of(&self, other: &Matrix) -> bool {
        if self.shape() != other.shape() || self.field != other.field {
            return false;
        }
        let Some(k) = (0..self.entries.len()).find(|&k| !self.entries[k].is_zero()) else {
            return other.is_zero();
        };
        if other.entries[k].is_zero() {
            return false;
        }
        let Ok(c) = other.entries[k].try_div(&self.entries[k]) else {
            return false;
        };
        self.entries.iter().zip(&other.entries).all(|(a, b)| &(a * &c) == b)
    }

    pub fn to_latex(&self) -> String {
        let mut out = format!("\\left[\n\\begin{{array}}{{{}}}\n", "c".repeat(self.cols));
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(Scalar::to_latex).collect();
            out.push_str(&row.join(" & "));
            if i + 1 < self.rows {
                out.push_str(" \\\\");
            }
            out.push('\n');
        }
        out.push_str("\\end{array}\n\\right]");
        out
    }
}

/// `p⁻¹ · m · p`.
pub fn conjugate(p: &Matrix, m: &Matrix) -> Result<Matrix, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare(m.rows, m.cols));
    }
    if p.shape() != m.shape() {
        return Err(LinalgError::DimensionMismatch {
            op: "conjugate",
            left: p.shape(),
            right: m.shape(),
        });
    }
    p.inverse()?.mul(m)?.mul(p)
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0))
            .collect();
        for (i, row) in cells.iter().enumerate() {
            let padded: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            write!(f, "[ {} ]", padded.join("  "))?;
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    field: Option<FieldTag>,
    entries: Vec<Vec<Scalar>>,
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            field: Some(self.field),
            entries: self.to_rows(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = MatrixJson::deserialize(deserializer)?;
        if raw.entries.len() != raw.rows || raw.entries.iter().any(|r| r.len() != raw.cols) {
            return Err(D::Error::custom(format!(
                "entries do not match the declared {}x{} shape",
                raw.rows, raw.cols
            )));
        }
        let m = match raw.field {
            Some(tag) => {
                let rows = raw
                    .entries
                    .into_iter()
                    .map(|row| row.into_iter().map(|e| e.promote(tag)).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(D::Error::custom)?;
                let mut m = Matrix::from_rows(rows).map_err(D::Error::custom)?;
                m.field = tag;
                m
            }
            None => Matrix::from_rows_promoting(raw.entries).map_err(D::Error::custom)?,
        };
        Ok(m)
    }
}

/// Builds a matrix from rows of anything convertible into [`Scalar`],
/// promoting into a common field. Panics on incompatible entries.
#[macro_export]
macro_rules! matrix {
    ($([$($e:expr),* $(,)?]),* $(,)?) => {
        $crate::linalg::Matrix::from_rows_promoting(vec![$(vec![$($crate::scalar::Scalar::from($e)),*]),*])
            .expect("matrix! entries must share a field")
    };
}
