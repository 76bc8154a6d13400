//! Gauss-Jordan elimination: echelon form, rank, inverse, kernel, determinant.
//!
//! Exact fields pivot on the first nonzero entry in row order. The float
//! field uses partial pivoting by magnitude and treats entries below
//! `epsilon · (1 + max |a_ij|)` as zero.

use crate::scalar::{float_epsilon, FieldTag, Scalar};

use super::{LinalgError, Matrix};

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

/// A basis of a null space, as column vectors whose first nonzero entry is 1.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct KernelBasis {
    pub vectors: Vec<Matrix>,
}

impl KernelBasis {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Matrix> {
        self.vectors.iter()
    }
}

impl IntoIterator for KernelBasis {
    type Item = Matrix;
    type IntoIter = std::vec::IntoIter<Matrix>;
    fn into_iter(self) -> Self::IntoIter {
        self.vectors.into_iter()
    }
}

struct Work {
    rows: Vec<Vec<Scalar>>,
    field: FieldTag,
    tol: f64,
}

impl Work {
    fn new(m: &Matrix) -> Self {
        let tol = if m.field() == FieldTag::Float {
            let max = m.entries().iter().map(Scalar::magnitude).fold(0.0, f64::max);
            float_epsilon() * (1.0 + max)
        } else {
            0.0
        };
        Work {
            rows: m.to_rows(),
            field: m.field(),
            tol,
        }
    }

    fn negligible(&self, x: &Scalar) -> bool {
        match self.field {
            FieldTag::Float => x.magnitude() <= self.tol,
            _ => x.is_zero(),
        }
    }

    fn find_pivot(&self, col: usize, from: usize) -> Option<usize> {
        let candidates = (from..self.rows.len()).filter(|&r| !self.negligible(&self.rows[r][col]));
        if self.field == FieldTag::Float {
            candidates.max_by(|&a, &b| {
                self.rows[a][col]
                    .magnitude()
                    .total_cmp(&self.rows[b][col].magnitude())
            })
        } else {
            candidates.min()
        }
    }

    /// row[target] -= factor · row[source]
    fn eliminate(&mut self, target: usize, source: usize, factor: &Scalar) {
        let src = self.rows[source].clone();
        for (t, s) in self.rows[target].iter_mut().zip(&src) {
            if !s.is_zero() {
                *t = &*t - &(factor * s);
            }
        }
    }

    fn into_matrix(self) -> Matrix {
        let zero = Scalar::zero(self.field);
        let tol = self.tol;
        let field = self.field;
        let rows: Vec<Vec<Scalar>> = self
            .rows
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| {
                        if field == FieldTag::Float && x.magnitude() <= tol {
                            zero.clone()
                        } else {
                            x
                        }
                    })
                    .collect()
            })
            .collect();
        let cols = rows.first().map_or(0, Vec::len);
        Matrix::from_fn(rows.len(), cols, field, |i, j| rows[i][j].clone())
    }
}

impl Matrix {
    /// Reduced row echelon form.
    pub fn rref(&self) -> RowEchelon {
        let mut w = Work::new(self);
        let (nr, nc) = self.shape();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..nc {
            if r == nr {
                break;
            }
            let Some(p) = w.find_pivot(c, r) else {
                continue;
            };
            w.rows.swap(r, p);
            let inv = w.rows[r][c].inv().expect("pivot is nonzero");
            for x in w.rows[r].iter_mut() {
                *x = &*x * &inv;
            }
            w.rows[r][c] = Scalar::one(w.field);
            for i in 0..nr {
                if i != r && !w.negligible(&w.rows[i][c]) {
                    let factor = w.rows[i][c].clone();
                    w.eliminate(i, r, &factor);
                    w.rows[i][c] = Scalar::zero(w.field);
                }
            }
            pivots.push(c);
            r += 1;
        }
        RowEchelon {
            matrix: w.into_matrix(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Exact inverse via Gauss-Jordan on `[M | I]`.
    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows(), self.cols()));
        }
        let n = self.rows();
        let aug = self.hstack(&Matrix::identity(n, self.field()))?;
        let ech = aug.rref();
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return Err(LinalgError::NotInvertible);
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Ok(ech.matrix.select(&rows, &cols))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows()
    }

    /// Basis of `{v : M v = 0}` read off the reduced echelon form.
    pub fn kernel(&self) -> KernelBasis {
        let ech = self.rref();
        let field = self.field();
        let n = self.cols();
        let free = (0..n).filter(|c| !ech.pivots.contains(c));
        let vectors = free
            .map(|f| {
                let mut v = vec![Scalar::zero(field); n];
                v[f] = Scalar::one(field);
                for (i, &p) in ech.pivots.iter().enumerate() {
                    v[p] = -ech.matrix.get(i, f);
                }
                normalize_leading(&mut v);
                Matrix::from_fn(n, 1, field, |i, _| v[i].clone())
            })
            .collect();
        KernelBasis { vectors }
    }

    /// Determinant by elimination.
    pub fn det(&self) -> Result<Scalar, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows(), self.cols()));
        }
        let mut w = Work::new(self);
        let n = self.rows();
        let mut det = Scalar::one(w.field);
        for c in 0..n {
            let Some(p) = w.find_pivot(c, c) else {
                return Ok(Scalar::zero(w.field));
            };
            if p != c {
                w.rows.swap(p, c);
                det = -&det;
            }
            let pivot = w.rows[c][c].clone();
            let inv = pivot.inv()?;
            for i in c + 1..n {
                if !w.negligible(&w.rows[i][c]) {
                    let factor = &w.rows[i][c] * &inv;
                    w.eliminate(i, c, &factor);
                }
            }
            det = &det * &pivot;
        }
        Ok(det)
    }
}

/// Scales a vector so its first nonzero entry is 1.
pub(crate) fn normalize_leading(v: &mut [Scalar]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        let inv = lead.inv().expect("nonzero");
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse::parse_scalar;

    fn m(rows: &[&[&str]]) -> Matrix {
        Matrix::from_rows_promoting(
            rows.iter()
                .map(|r| r.iter().map(|e| parse_scalar(e).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn inverse_of_burau_diagonalizer() {
        let p = m(&[&["-(z+1)", "0"], &["1", "1"]]);
        let expected = m(&[&["-1/(z+1)", "0"], &["1/(z+1)", "1"]]);
        let inv = p.inverse().unwrap();
        assert_eq!(inv, expected);
        assert!(p.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn inverse_of_identity_and_singular_input() {
        let i = Matrix::identity(3, FieldTag::Rational);
        assert_eq!(i.inverse().unwrap(), i);
        // burau sigma_2 at z = 0
        let b0 = m(&[&["1", "0"], &["0", "0"]]);
        assert_eq!(b0.inverse().unwrap_err().to_string(), "not invertible");
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(Matrix::identity(3, FieldTag::RatFunc).kernel().is_empty());
    }

    #[test]
    fn kernel_vectors_are_normalized_and_annihilated() {
        let a = m(&[&["1", "2", "3"], &["2", "4", "6"]]);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in k.iter() {
            assert!(a.mul(v).unwrap().is_zero());
            assert!(v.entries().iter().find(|x| !x.is_zero()).unwrap().is_one());
        }
    }

    #[test]
    fn determinant_matches_two_by_two_formula() {
        let a = m(&[&["-z", "0"], &["1", "1"]]);
        assert_eq!(a.det().unwrap(), parse_scalar("-z").unwrap());
        let b = m(&[&["0", "1"], &["1", "0"]]);
        assert_eq!(b.det().unwrap(), Scalar::from(-1));
    }

    #[test]
    fn float_elimination_uses_tolerance() {
        let a = m(&[&["1.0", "2.0"], &["2.0", "4.0000000000001"]]);
        assert_eq!(a.rank(), 1);
        let b = m(&[&["1e-12", "1.0"], &["1.0", "1.0"]]);
        let inv = b.inverse().unwrap();
        assert!(b.mul(&inv).unwrap().is_identity());
    }
}
