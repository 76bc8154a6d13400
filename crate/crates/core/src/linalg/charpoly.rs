use std::fmt;

use crate::scalar::{FieldTag, Scalar};

use super::{LinalgError, Matrix};

const MAX_DIM: usize = 4;

/// `det(t·I − M)` as ascending coefficients in `t`, over the matrix's field.
#[derive(Clone, Debug, PartialEq)]
pub struct CharPoly {
    pub coeffs: Vec<Scalar>,
}

type TPoly = Vec<Scalar>;

fn tpoly_add(a: &TPoly, b: &TPoly, field: FieldTag) -> TPoly {
    let n = a.len().max(b.len());
    let zero = Scalar::zero(field);
    (0..n)
        .map(|k| a.get(k).unwrap_or(&zero) + b.get(k).unwrap_or(&zero))
        .collect()
}

fn tpoly_mul(a: &TPoly, b: &TPoly, field: FieldTag) -> TPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Scalar::zero(field); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// Laplace expansion along the first row of a matrix of polynomials.
fn det(m: &[Vec<TPoly>], field: FieldTag) -> TPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc: TPoly = Vec::new();
    for j in 0..n {
        if m[0][j].iter().all(Scalar::is_zero) {
            continue;
        }
        let minor: Vec<Vec<TPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let mut term = tpoly_mul(&m[0][j], &det(&minor, field), field);
        if j % 2 == 1 {
            term = term.iter().map(|x| -x).collect();
        }
        acc = tpoly_add(&acc, &term, field);
    }
    acc
}

impl Matrix {
    /// Characteristic polynomial by cofactor expansion, for `n <= 4`.
    pub fn char_poly(&self) -> Result<CharPoly, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows(), self.cols()));
        }
        let n = self.rows();
        if n > MAX_DIM {
            return Err(LinalgError::TooLarge { n, max: MAX_DIM });
        }
        let field = self.field();
        if n == 0 {
            return Ok(CharPoly {
                coeffs: vec![Scalar::one(field)],
            });
        }
        let entries: Vec<Vec<TPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = -self.get(i, j);
                        if i == j {
                            vec![c, Scalar::one(field)]
                        } else {
                            vec![c]
                        }
                    })
                    .collect()
            })
            .collect();
        let mut coeffs = det(&entries, field);
        coeffs.resize(n + 1, Scalar::zero(field));
        Ok(CharPoly { coeffs })
    }
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                k => format!("t^{k}"),
            };
            terms.push(match (mono.is_empty(), c.is_one()) {
                (true, _) => format!("({c})"),
                (false, true) => mono,
                (false, false) => format!("({c})*{mono}"),
            });
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&terms.join(" + "))
    }
}
