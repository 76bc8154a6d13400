//! Structural questions about a representation: do the braid relations
//! hold, which lines are invariant, does it split, and how do two
//! representations compare.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{normalize_leading, LinalgError, Matrix};
use crate::reps::{xi, Meta, RepError, Representation};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("spectrum requires triangular form; conjugate first")]
    NotTriangular,
    #[error("no 1-dim invariant subspace")]
    NoInvariantLine,
    #[error("no invariant complement found (possible non-semisimple extension)")]
    NoComplement,
    #[error("undecided: only 1-dim invariant tests implemented (dimension {0})")]
    Undecided(usize),
    #[error("representations are not comparable: {0}")]
    Incomparable(String),
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationKind {
    FarCommutation,
    Braid,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelationCheck {
    pub kind: RelationKind,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub relations_checked: Vec<RelationCheck>,
    pub overall: bool,
}

fn word_name(word: &[usize]) -> String {
    word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
}

fn product(r: &Representation, word: &[usize]) -> Option<Matrix> {
    let mut it = word.iter();
    let mut acc = r.generator(*it.next()?).clone();
    for &g in it {
        acc = acc.mul(r.generator(g)).ok()?;
    }
    Some(acc)
}

/// Checks `σ_i σ_j = σ_j σ_i` for `|i − j| ≥ 2` and
/// `σ_{i+1} σ_i σ_{i+1} = σ_i σ_{i+1} σ_i` by matrix equality.
pub fn verify_braid_relations(r: &Representation) -> VerificationReport {
    let k = r.braid_index() - 1;
    let mut checks = Vec::new();
    for i in 1..=k {
        for j in i + 2..=k {
            let (lhs, rhs) = (vec![i, j], vec![j, i]);
            checks.push(RelationCheck {
                kind: RelationKind::FarCommutation,
                holds: product(r, &lhs) == product(r, &rhs),
                lhs: word_name(&lhs),
                rhs: word_name(&rhs),
            });
        }
    }
    for i in 1..k {
        let (lhs, rhs) = (vec![i + 1, i, i + 1], vec![i, i + 1, i]);
        checks.push(RelationCheck {
            kind: RelationKind::Braid,
            holds: product(r, &lhs) == product(r, &rhs),
            lhs: word_name(&lhs),
            rhs: word_name(&rhs),
        });
    }
    let overall = checks.iter().all(|c| c.holds);
    VerificationReport {
        relations_checked: checks,
        overall,
    }
}

/// Distinct diagonal entries of a triangular matrix.
pub fn spectrum_of_triangular(m: &Matrix) -> Result<Vec<Scalar>, AnalysisError> {
    if !m.is_triangular() {
        return Err(AnalysisError::NotTriangular);
    }
    let mut out: Vec<Scalar> = Vec::new();
    for d in m.diagonal() {
        if !out.contains(&d) {
            out.push(d);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `M v = λ v` for every image `M`.
    Right,
    /// `vᵀ M = λ vᵀ` for every image `M`.
    Left,
}

/// A common eigenvector of all generator images, stored as a column.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantLine {
    pub eigenvalue: Scalar,
    pub vector: Matrix,
    pub side: Side,
}

impl InvariantLine {
    /// Re-checks the defining equations against `r`.
    pub fn holds_for(&self, r: &Representation) -> bool {
        r.images().iter().all(|m| {
            let m = match self.side {
                Side::Right => m.clone(),
                Side::Left => m.transpose(),
            };
            match (m.mul(&self.vector), self.vector.scale(&self.eigenvalue)) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            }
        })
    }
}

fn side_images(r: &Representation, side: Side) -> Vec<Matrix> {
    match side {
        Side::Right => r.images().to_vec(),
        Side::Left => r.images().iter().map(Matrix::transpose).collect(),
    }
}

/// Basis of `{v : M v = λ v for all M}`.
fn common_eigenspace(images: &[Matrix], lambda: &Scalar) -> Result<Vec<Matrix>, AnalysisError> {
    let mut stacked = images[0].sub_scalar_identity(lambda)?;
    for m in &images[1..] {
        stacked = stacked.vstack(&m.sub_scalar_identity(lambda)?)?;
    }
    Ok(stacked.kernel().vectors)
}

/// Common eigenvectors on the chosen side.
///
/// Candidate eigenvalues come from the first triangular generator image.
/// The braid relation forces one shared eigenvalue on a one-dimensional
/// subrepresentation, so each candidate `λ` is tested against all images at
/// once. If the common eigenspace for `λ` has dimension above one, a basis
/// of it is returned.
pub fn common_invariant_lines(r: &Representation, side: Side) -> Result<Vec<InvariantLine>, AnalysisError> {
    let images = side_images(r, side);
    let tri = images
        .iter()
        .find(|m| m.is_triangular())
        .ok_or(AnalysisError::NotTriangular)?;
    let mut lines = Vec::new();
    for lambda in spectrum_of_triangular(tri)? {
        for vector in common_eigenspace(&images, &lambda)? {
            lines.push(InvariantLine {
                eigenvalue: lambda.clone(),
                vector,
                side,
            });
        }
    }
    Ok(lines)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Irreducibility {
    pub irreducible: bool,
    pub reason: String,
    pub witness: Option<InvariantLine>,
}

/// Decides irreducibility for dimension at most 3.
///
/// A 2-dim representation is reducible exactly when it has an invariant
/// line. A 3-dim one may instead have an invariant plane, which is the
/// kernel of a left invariant line, so both sides are searched.
pub fn is_irreducible(r: &Representation) -> Result<Irreducibility, AnalysisError> {
    let dim = r.dim();
    if dim > 3 {
        return Err(AnalysisError::Undecided(dim));
    }
    if dim == 1 {
        return Ok(Irreducibility {
            irreducible: true,
            reason: "one-dimensional".into(),
            witness: None,
        });
    }
    let sides: &[Side] = if dim == 2 { &[Side::Right] } else { &[Side::Right, Side::Left] };
    for &side in sides {
        if let Some(line) = common_invariant_lines(r, side)?.into_iter().next() {
            let reason = match side {
                Side::Right => format!("invariant line with eigenvalue {}", line.eigenvalue),
                Side::Left => format!(
                    "invariant hyperplane (kernel of a left eigenvector, eigenvalue {})",
                    line.eigenvalue
                ),
            };
            return Ok(Irreducibility {
                irreducible: false,
                reason,
                witness: Some(line),
            });
        }
    }
    Ok(Irreducibility {
        irreducible: true,
        reason: if dim == 2 {
            "no common eigenvector".into()
        } else {
            "no common eigenvector on either side".into()
        },
        witness: None,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecompositionReport {
    /// Columns: the invariant line, then a basis of its invariant complement.
    pub basis_change: Matrix,
    pub blocks: Vec<Representation>,
    /// The right line that was split off and the left line whose kernel is
    /// the complement.
    pub witnesses: Vec<InvariantLine>,
}

fn dot(u: &Matrix, v: &Matrix) -> Result<Scalar, AnalysisError> {
    Ok(u.transpose().mul(v)?.get(0, 0).clone())
}

fn is_block_diagonal(m: &Matrix) -> bool {
    (1..m.rows()).all(|i| m.get(i, 0).is_zero() && m.get(0, i).is_zero())
}

/// Splits off a one-dimensional summand with an explicit invariant complement.
///
/// For a right invariant line `L` (eigenvalue `λ`) and a left invariant line
/// `u` with `u(L) ≠ 0`, the hyperplane `ker u` is invariant and meets `L`
/// trivially. The basis change `[L | ker u]` then block-diagonalizes every
/// image, which is verified exactly before returning.
pub fn split_once(r: &Representation) -> Result<DecompositionReport, AnalysisError> {
    let rights = common_invariant_lines(r, Side::Right)?;
    if rights.is_empty() {
        return Err(AnalysisError::NoInvariantLine);
    }
    let transposed = side_images(r, Side::Left);
    for right in rights {
        let lefts = common_eigenspace(&transposed, &right.eigenvalue)?;
        let Some(u) = lefts
            .into_iter()
            .find(|u| dot(u, &right.vector).is_ok_and(|d| !d.is_zero()))
        else {
            continue;
        };
        let complement = u.transpose().kernel();
        let mut basis = right.vector.clone();
        for w in complement.iter() {
            basis = basis.hstack(w)?;
        }
        let conj = r.conjugate(&basis)?;
        if !conj.images().iter().all(is_block_diagonal) {
            return Err(AnalysisError::Internal("basis change is not block-diagonal".into()));
        }
        let n = r.dim();
        let rest: Vec<usize> = (1..n).collect();
        let line_block = xi(&right.eigenvalue, r.braid_index())?;
        let first = conj.block(&[0], line_block.meta().clone())?;
        if first.images() != line_block.images() {
            return Err(AnalysisError::Internal("line block differs from xi".into()));
        }
        let complement_meta = Meta::new("complement").with("of", r.meta()).with("dim", n - 1);
        let second = conj.block(&rest, complement_meta)?;
        let left = InvariantLine {
            eigenvalue: right.eigenvalue.clone(),
            vector: u,
            side: Side::Left,
        };
        return Ok(DecompositionReport {
            basis_change: basis,
            blocks: vec![first, second],
            witnesses: vec![right, left],
        });
    }
    Err(AnalysisError::NoComplement)
}

/// Repeats [`split_once`] on the trailing block until it no longer splits.
///
/// Every block but the last is one-dimensional. Witnesses from later
/// splits are carried back to the input's coordinates.
pub fn decompose(r: &Representation) -> Result<DecompositionReport, AnalysisError> {
    let mut report = split_once(r)?;
    loop {
        let last = report.blocks.last().expect("split yields blocks");
        if last.dim() < 2 {
            break;
        }
        let Ok(next) = split_once(last) else {
            break;
        };
        let k = report.blocks.len() - 1;
        let field = r.field();
        let q = &report.basis_change;
        let q_inv_t = q.inverse()?.transpose();
        for w in next.witnesses {
            let padded = Matrix::zeros(k, 1, field).vstack(&w.vector)?;
            let vector = match w.side {
                Side::Right => q.mul(&padded)?,
                Side::Left => q_inv_t.mul(&padded)?,
            };
            let mut entries: Vec<Scalar> = (0..vector.rows()).map(|i| vector.get(i, 0).clone()).collect();
            normalize_leading(&mut entries);
            report.witnesses.push(InvariantLine {
                eigenvalue: w.eigenvalue,
                vector: Matrix::column(entries)?,
                side: w.side,
            });
        }
        report.basis_change = q.mul(&Matrix::identity(k, field).block_diag(&next.basis_change)?)?;
        report.blocks.pop();
        report.blocks.extend(next.blocks);
    }
    Ok(report)
}

/// Basis of `{M : M·r1(σ_i) = r2(σ_i)·M for all i}`, as `dim r2 × dim r1`
/// matrices.
pub fn intertwiners(r1: &Representation, r2: &Representation) -> Result<Vec<Matrix>, AnalysisError> {
    if r1.braid_index() != r2.braid_index() {
        return Err(AnalysisError::Incomparable(format!(
            "braid index {} vs {}",
            r1.braid_index(),
            r2.braid_index()
        )));
    }
    if r1.field() != r2.field() {
        return Err(AnalysisError::Incomparable(format!("field {} vs {}", r1.field(), r2.field())));
    }
    let (d1, d2) = (r1.dim(), r2.dim());
    let field = r1.field();
    let unknowns = d1 * d2;
    let mut system: Vec<Vec<Scalar>> = Vec::new();
    for (a, b) in r1.images().iter().zip(r2.images()) {
        for i in 0..d2 {
            for j in 0..d1 {
                // (M a)_{ij} - (b M)_{ij} = 0, unknown M_{ik} at index i*d1 + k
                let mut row = vec![Scalar::zero(field); unknowns];
                for k in 0..d1 {
                    row[i * d1 + k] = &row[i * d1 + k] + a.get(k, j);
                }
                for k in 0..d2 {
                    row[k * d1 + j] = &row[k * d1 + j] - b.get(i, k);
                }
                system.push(row);
            }
        }
    }
    let system = Matrix::from_rows(system)?;
    Ok(system
        .kernel()
        .into_iter()
        .map(|v| Matrix::from_fn(d2, d1, field, |i, k| v.get(i * d1 + k, 0).clone()))
        .collect())
}

#[derive(Debug, Clone, Copy)]
pub struct IsoOptions {
    pub seed: u64,
    pub trials: usize,
}

pub const DEFAULT_SEED: u64 = 7;
pub const DEFAULT_TRIALS: usize = 32;

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions {
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Isomorphism {
    /// `conjugator · r1(σ) = r2(σ) · conjugator` and `conjugator` is invertible.
    Isomorphic { conjugator: Matrix },
    NotIsomorphic { reason: String },
    /// The intertwiner space is nonzero but no sampled element was invertible.
    Undecided { trials: usize, intertwiner_dim: usize },
}

impl Isomorphism {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, Isomorphism::Isomorphic { .. })
    }
}

/// Decides whether two representations are conjugate.
///
/// Generator characteristic polynomials give a quick exact rejection. Then
/// the intertwiner space is searched for an invertible element: directly
/// when it is one-dimensional, otherwise by sampling seeded random integer
/// combinations. Exact arithmetic rules out false positives; an unlucky
/// search reports `Undecided` rather than a false negative.
pub fn is_isomorphic(r1: &Representation, r2: &Representation, opts: IsoOptions) -> Result<Isomorphism, AnalysisError> {
    if r1.dim() != r2.dim() {
        return Ok(Isomorphism::NotIsomorphic {
            reason: format!("dimensions {} and {} differ", r1.dim(), r2.dim()),
        });
    }
    if r1.dim() <= 4 {
        for (i, (a, b)) in r1.images().iter().zip(r2.images()).enumerate() {
            if r1.field() == r2.field() && a.char_poly()? != b.char_poly()? {
                return Ok(Isomorphism::NotIsomorphic {
                    reason: format!("characteristic polynomials of generator {} differ", i + 1),
                });
            }
        }
    }
    let basis = intertwiners(r1, r2)?;
    match basis.len() {
        0 => Ok(Isomorphism::NotIsomorphic {
            reason: "no nonzero intertwiner".into(),
        }),
        1 if basis[0].is_invertible() => Ok(Isomorphism::Isomorphic {
            conjugator: basis[0].clone(),
        }),
        1 => Ok(Isomorphism::NotIsomorphic {
            reason: "the only intertwiners are singular".into(),
        }),
        n => {
            if let Some(m) = basis.iter().find(|m| m.is_invertible()) {
                return Ok(Isomorphism::Isomorphic { conjugator: m.clone() });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            let field = r1.field();
            for _ in 0..opts.trials {
                let mut acc = Matrix::zeros(r2.dim(), r1.dim(), field);
                for m in &basis {
                    let c = Scalar::from_int(rng.gen_range(-16..=16), field);
                    acc = acc.add(&m.scale(&c)?)?;
                }
                if acc.is_invertible() {
                    return Ok(Isomorphism::Isomorphic { conjugator: acc });
                }
            }
            Ok(Isomorphism::Undecided {
                trials: opts.trials,
                intertwiner_dim: n,
            })
        }
    }
}

#[cfg(test)]
mod tests;
