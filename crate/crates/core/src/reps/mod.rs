//! Representations of braid groups as tuples of generator matrices.

mod families;
mod spec;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize};
use thiserror::Error;

use crate::linalg::{LinalgError, Matrix};
use crate::scalar::{evaluate, FieldTag, Scalar, ScalarError};

pub use families::{
    burau3, burau3_diag, burau_diagonalizer, mu, mu_pascal, pascal_intertwiner, standard_s3,
    tensor_square_diagonalizer, theorem1_i, theorem1_ii, xi,
};
pub use spec::{FamilySpec, SpecError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RepError {
    #[error("braid index must be at least 2, got {0}")]
    BraidIndex(usize),
    #[error("B{braid_index} needs {expected} generator images, got {got}")]
    ImageCount {
        braid_index: usize,
        expected: usize,
        got: usize,
    },
    #[error("generator images must be square matrices of one size")]
    Shape,
    #[error("generator images must share one scalar field")]
    FieldMismatch,
    #[error("not invertible: image of generator {generator}")]
    NotInvertible { generator: usize },
    #[error("excluded parameter: {0}")]
    ExcludedParameter(String),
    #[error("f must be nonzero; fg is forced")]
    ZeroF,
    #[error("braid index mismatch: B{0} vs B{1}")]
    BraidIndexMismatch(usize, usize),
    #[error("constructed matrices violate the braid relations ({0})")]
    RelationViolated(String),
    #[error("pole at specialization point in generator {generator}, entry ({row}, {col})")]
    Pole { generator: usize, row: usize, col: usize },
    #[error("{0} representation has no symbolic parameter to specialize")]
    NotSymbolic(FieldTag),
    #[error("{0}")]
    Check(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Where a representation came from: a family name and its parameters.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub family: String,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
}

impl Meta {
    pub fn new(family: impl Into<String>) -> Self {
        Meta {
            family: family.into(),
            params: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }
}

/// Written in spec style: `burau(z)`, `tensor(mu(z), xi(-z))`,
/// `thm1_i(2; f=1)`.
impl fmt::Display for Meta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NESTED: [&str; 4] = ["rep", "of", "left", "right"];
        f.write_str(&self.family)?;
        if self.params.is_empty() {
            return Ok(());
        }
        let mut positional: Vec<&str> = NESTED.iter().filter_map(|k| self.params.get(*k)).map(String::as_str).collect();
        let mut keyed: Vec<String> = Vec::new();
        for (k, v) in &self.params {
            if NESTED.contains(&k.as_str()) {
                continue;
            }
            if k == "z" && positional.is_empty() {
                positional.push(v);
            } else {
                keyed.push(format!("{k}={v}"));
            }
        }
        write!(f, "({}", positional.join(", "))?;
        if !keyed.is_empty() {
            let sep = if positional.is_empty() { "" } else { "; " };
            write!(f, "{sep}{}", keyed.join(", "))?;
        }
        f.write_str(")")
    }
}

/// A representation of `B_n`: one invertible square matrix per generator
/// `σ_1 … σ_{n-1}`, all of one size and over one field.
///
/// Construction checks shape, field and invertibility. The braid relations
/// are checked by the named constructors and on demand for raw input
/// (see [`crate::analysis::verify_braid_relations`]).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Representation {
    braid_index: usize,
    images: Vec<Matrix>,
    meta: Meta,
}

impl Representation {
    pub fn new(braid_index: usize, images: Vec<Matrix>, meta: Meta) -> Result<Self, RepError> {
        if braid_index < 2 {
            return Err(RepError::BraidIndex(braid_index));
        }
        if images.len() != braid_index - 1 {
            return Err(RepError::ImageCount {
                braid_index,
                expected: braid_index - 1,
                got: images.len(),
            });
        }
        let first = &images[0];
        if !first.is_square() || images.iter().any(|m| m.shape() != first.shape()) {
            return Err(RepError::Shape);
        }
        if images.iter().any(|m| m.field() != first.field()) {
            return Err(RepError::FieldMismatch);
        }
        if let Some(i) = images.iter().position(|m| !m.is_invertible()) {
            return Err(RepError::NotInvertible { generator: i + 1 });
        }
        Ok(Representation {
            braid_index,
            images,
            meta,
        })
    }

    pub fn braid_index(&self) -> usize {
        self.braid_index
    }

    pub fn dim(&self) -> usize {
        self.images[0].rows()
    }

    pub fn field(&self) -> FieldTag {
        self.images[0].field()
    }

    pub fn images(&self) -> &[Matrix] {
        &self.images
    }

    /// Image of `σ_i`, 1-based.
    pub fn generator(&self, i: usize) -> &Matrix {
        &self.images[i - 1]
    }

    pub fn meta(&self) -> &Meta {
        &self.meta
    }

    pub fn with_meta(mut self, meta: Meta) -> Self {
        self.meta = meta;
        self
    }

    /// Image of a braid word. `k > 0` stands for `σ_k`, `k < 0` for `σ_k⁻¹`;
    /// the word is read left to right.
    pub fn image_of_word(&self, word: &[i32]) -> Result<Matrix, RepError> {
        let mut acc = Matrix::identity(self.dim(), self.field());
        for &letter in word {
            let k = letter.unsigned_abs() as usize;
            if k == 0 || k >= self.braid_index {
                return Err(RepError::Check(format!("generator {letter} out of range for B{}", self.braid_index)));
            }
            let m = if letter > 0 {
                self.generator(k).clone()
            } else {
                self.generator(k).inverse()?
            };
            acc = acc.mul(&m)?;
        }
        Ok(acc)
    }

    fn compatible(&self, other: &Representation) -> Result<(), RepError> {
        if self.braid_index != other.braid_index {
            return Err(RepError::BraidIndexMismatch(self.braid_index, other.braid_index));
        }
        if self.field() != other.field() {
            return Err(RepError::FieldMismatch);
        }
        Ok(())
    }

    fn map_images(
        &self,
        meta: Meta,
        mut f: impl FnMut(&Matrix) -> Result<Matrix, RepError>,
    ) -> Result<Representation, RepError> {
        let images = self.images.iter().map(&mut f).collect::<Result<Vec<_>, _>>()?;
        Representation::new(self.braid_index, images, meta)
    }

    /// Generatorwise Kronecker product.
    pub fn tensor(&self, other: &Representation) -> Result<Representation, RepError> {
        self.compatible(other)?;
        let meta = Meta::new("tensor").with("left", &self.meta).with("right", &other.meta);
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| a.kronecker(b))
            .collect::<Result<Vec<_>, _>>()?;
        Representation::new(self.braid_index, images, meta)
    }

    /// Generatorwise block-diagonal sum.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation, RepError> {
        self.compatible(other)?;
        let meta = Meta::new("direct_sum").with("left", &self.meta).with("right", &other.meta);
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| a.block_diag(b))
            .collect::<Result<Vec<_>, _>>()?;
        Representation::new(self.braid_index, images, meta)
    }

    /// Tensor with the one-dimensional representation sending every
    /// generator to `c`.
    pub fn tensor_onedim(&self, c: &Scalar) -> Result<Representation, RepError> {
        let c = c.promote(self.field())?;
        if c.is_zero() {
            return Err(RepError::NotInvertible { generator: 1 });
        }
        let meta = Meta::new("tensor_onedim").with("rep", &self.meta).with("c", &c);
        self.map_images(meta, |m| Ok(m.scale(&c)?))
    }

    /// Contragredient: every image replaced by its inverse transpose.
    pub fn dual(&self) -> Result<Representation, RepError> {
        let meta = Meta::new("dual").with("rep", &self.meta);
        self.map_images(meta, |m| Ok(m.inverse()?.transpose()))
    }

    /// Change of basis: every image `M` becomes `p⁻¹ M p`.
    pub fn conjugate(&self, p: &Matrix) -> Result<Representation, RepError> {
        let p_inv = p.inverse()?;
        let meta = self.meta.clone();
        self.map_images(meta, |m| Ok(p_inv.mul(m)?.mul(p)?))
    }

    /// Substitutes `point` for `z` in every entry.
    ///
    /// Symbolic entries are evaluated; rational entries are carried into the
    /// point's field. A pole is reported with the offending entry (1-based).
    pub fn specialize(&self, point: &Scalar) -> Result<Representation, RepError> {
        let tag = point.tag();
        match self.field() {
            FieldTag::RatFunc | FieldTag::Rational => {}
            other => return Err(RepError::NotSymbolic(other)),
        }
        let meta = Meta::new("specialize").with("rep", &self.meta).with("z", point);
        let mut images = Vec::with_capacity(self.images.len());
        for (g, m) in self.images.iter().enumerate() {
            let image = m.try_map(|i, j, e| -> Result<Scalar, RepError> {
                let pole = || RepError::Pole {
                    generator: g + 1,
                    row: i + 1,
                    col: j + 1,
                };
                match e {
                    Scalar::RatFunc(r) => evaluate(r, point).map_err(|err| match err {
                        ScalarError::Pole => pole(),
                        other => other.into(),
                    }),
                    other => Ok(other.promote(tag)?),
                }
            })?;
            images.push(image);
        }
        Representation::new(self.braid_index, images, meta).map_err(|e| match e {
            RepError::NotInvertible { generator } => RepError::Check(format!(
                "specialized image of generator {generator} is singular"
            )),
            other => other,
        })
    }

    /// Restricts to rows/columns `idx` of every image. The caller must know
    /// the coordinate subspace is invariant and complemented.
    pub fn block(&self, idx: &[usize], meta: Meta) -> Result<Representation, RepError> {
        self.map_images(meta, |m| Ok(m.select(idx, idx)))
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} : B{} -> GL{}({})", self.meta, self.braid_index, self.dim(), self.field())?;
        for (i, m) in self.images.iter().enumerate() {
            writeln!(f, "sigma_{} ->", i + 1)?;
            writeln!(f, "{m}")?;
        }
        Ok(())
    }
}

impl<'de> Deserialize<'de> for Representation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        #[derive(Deserialize)]
        struct Raw {
            braid_index: usize,
            images: Vec<Matrix>,
            #[serde(default)]
            meta: Option<Meta>,
        }
        let raw = Raw::deserialize(deserializer)?;
        // images may have been written with different field hints
        let mut images = raw.images;
        if let Some(top) = images.iter().map(Matrix::field).max() {
            if images.iter().any(|m| m.field() != top) {
                images = images
                    .iter()
                    .map(|m| m.promote(top))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(D::Error::custom)?;
            }
        }
        let meta = raw.meta.unwrap_or_else(|| Meta::new("raw"));
        Representation::new(raw.braid_index, images, meta).map_err(D::Error::custom)
    }
}
