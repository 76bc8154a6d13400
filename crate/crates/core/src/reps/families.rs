//! Named representations of B3 and the change-of-basis matrices relating them.
//!
//! Every constructor takes its parameter as a [`Scalar`], so the same code
//! builds the symbolic family over `Q(z)` and its specializations over `Q`,
//! `Q(ω)` or the floats.

use crate::analysis::verify_braid_relations;
use crate::linalg::Matrix;
use crate::scalar::{FieldTag, Scalar};

use super::{Meta, RepError, Representation};

fn int(n: i64, tag: FieldTag) -> Scalar {
    Scalar::from_int(n, tag)
}

fn rows(entries: Vec<Vec<Scalar>>) -> Result<Matrix, RepError> {
    Ok(Matrix::from_rows(entries)?)
}

/// Rejects `z` when it equals one of `excluded`.
fn exclude(z: &Scalar, excluded: &[i64], family: &str) -> Result<(), RepError> {
    for &v in excluded {
        if (z - &int(v, z.tag())).is_zero() {
            let allowed: Vec<String> = excluded.iter().map(i64::to_string).collect();
            return Err(RepError::ExcludedParameter(format!(
                "{family} requires z not in {{{}}}, got z = {z}",
                allowed.join(", ")
            )));
        }
    }
    Ok(())
}

fn checked(rep: Representation) -> Result<Representation, RepError> {
    let report = verify_braid_relations(&rep);
    if report.overall {
        Ok(rep)
    } else {
        Err(RepError::RelationViolated(rep.meta().to_string()))
    }
}

/// One-dimensional `ξ(z)` of `B_n`: every generator acts by `z`.
pub fn xi(z: &Scalar, n: usize) -> Result<Representation, RepError> {
    if z.is_zero() {
        return Err(RepError::NotInvertible { generator: 1 });
    }
    let image = Matrix::diag(std::slice::from_ref(z))?;
    let mut meta = Meta::new("xi").with("z", z);
    if n != 3 {
        meta = meta.with("n", n);
    }
    Representation::new(n, vec![image; n.saturating_sub(1)], meta)
}

/// Diagonal-σ₁ family: `σ₁ ↦ diag(−z, 1)` and
/// `σ₂ ↦ [[1/(z+1), f], [g, −z²/(z+1)]]` with `fg = z(z²+z+1)/(z+1)²`.
///
/// Only `f` is stored; `g` is derived from it. The locus `z² + z + 1 = 0`
/// is allowed here and left to the irreducibility test.
pub fn theorem1_i(z: &Scalar, f: &Scalar) -> Result<Representation, RepError> {
    exclude(z, &[0, -1], "thm1_i")?;
    let t = z.tag();
    let f = f.promote(t)?;
    if f.is_zero() {
        return Err(RepError::ZeroF);
    }
    let one = int(1, t);
    let zp1 = z + &one;
    let zp1_inv = zp1.inv()?;
    let z2 = z * z;
    let fg = &(z * &(&(&z2 + z) + &one)) * &(&zp1_inv * &zp1_inv);
    let g = &fg * &f.inv()?;
    let s1 = Matrix::diag(&[-z, one.clone()])?;
    let s2 = rows(vec![vec![zp1_inv.clone(), f.clone()], vec![g, -&(&z2 * &zp1_inv)]])?;
    let meta = Meta::new("thm1_i").with("z", z).with("f", &f);
    checked(Representation::new(3, vec![s1, s2], meta)?)
}

/// Jordan-σ₁ family: `σ₁ ↦ [[1, z], [0, 1]]`,
/// `σ₂ ↦ [[e, z(e−1)²], [−1/z, 2−e]]`.
pub fn theorem1_ii(z: &Scalar, e: &Scalar) -> Result<Representation, RepError> {
    exclude(z, &[0], "thm1_ii")?;
    let t = z.tag();
    let e = e.promote(t)?;
    let one = int(1, t);
    let em1 = &e - &one;
    let s1 = rows(vec![vec![one.clone(), z.clone()], vec![int(0, t), one.clone()]])?;
    let s2 = rows(vec![
        vec![e.clone(), z * &(&em1 * &em1)],
        vec![-&z.inv()?, &int(2, t) - &e],
    ])?;
    let meta = Meta::new("thm1_ii").with("z", z).with("e", &e);
    checked(Representation::new(3, vec![s1, s2], meta)?)
}

/// The Burau representation `β(z)` of B3.
pub fn burau3(z: &Scalar) -> Result<Representation, RepError> {
    exclude(z, &[0], "burau")?;
    let t = z.tag();
    let (zero, one) = (int(0, t), int(1, t));
    let s1 = rows(vec![vec![-z, zero.clone()], vec![one.clone(), one.clone()]])?;
    let s2 = rows(vec![vec![one, z.clone()], vec![zero, -z]])?;
    checked(Representation::new(3, vec![s1, s2], Meta::new("burau").with("z", z))?)
}

/// `P = [[−(z+1), 0], [1, 1]]`, which diagonalizes the Burau `σ₁`.
pub fn burau_diagonalizer(z: &Scalar) -> Result<Matrix, RepError> {
    let t = z.tag();
    let one = int(1, t);
    rows(vec![vec![-&(z + &one), int(0, t)], vec![one.clone(), one]])
}

/// The Burau representation in the basis where `σ₁` is diagonal.
///
/// Needs `z ≠ −1` (the diagonalizer is singular there); `z = 1` is fine.
pub fn burau3_diag(z: &Scalar) -> Result<Representation, RepError> {
    exclude(z, &[0, -1], "burau_diag")?;
    let t = z.tag();
    let one = int(1, t);
    let zp1_inv = (z + &one).inv()?;
    let z2 = z * z;
    let s1 = Matrix::diag(&[-z, one.clone()])?;
    let s2 = rows(vec![
        vec![zp1_inv.clone(), -&(z * &zp1_inv)],
        vec![-&(&(&(&z2 + z) + &one) * &zp1_inv), -&(&z2 * &zp1_inv)],
    ])?;
    checked(Representation::new(3, vec![s1, s2], Meta::new("burau_diag").with("z", z))?)
}

/// The three-dimensional summand `μ(z)` of the Burau tensor square, with
/// `σ₁` diagonal.
pub fn mu(z: &Scalar) -> Result<Representation, RepError> {
    exclude(z, &[0, -1], "mu")?;
    let t = z.tag();
    let one = int(1, t);
    let two = int(2, t);
    let zp1 = z + &one;
    let w = (&zp1 * &zp1).inv()?; // 1/(z+1)^2
    let z2 = z * z;
    let z3 = &z2 * z;
    let q = &(&z2 + z) + &one; // z^2 + z + 1
    let s1 = Matrix::diag(&[one.clone(), -z, z2.clone()])?;
    let s2 = rows(vec![
        vec![&(&z2 * &z2) * &w, &(&z2 * &q) * &w, &(&q * &q) * &w],
        vec![&(&two * &z3) * &w, &(z * &(&z2 + &one)) * &w, -&(&(&two * &q) * &w)],
        vec![&z2 * &w, -&(z * &w), w.clone()],
    ])?;
    checked(Representation::new(3, vec![s1, s2], Meta::new("mu").with("z", z))?)
}

/// `μ(z)` in the symmetric-square basis, where both generators show
/// binomial (Pascal triangle) coefficients.
pub fn mu_pascal(z: &Scalar) -> Result<Representation, RepError> {
    exclude(z, &[0, -1], "mu_pascal")?;
    let t = z.tag();
    let (zero, one, two) = (int(0, t), int(1, t), int(2, t));
    let z2 = z * z;
    let s1 = rows(vec![
        vec![z2.clone(), zero.clone(), zero.clone()],
        vec![-z, -z, zero.clone()],
        vec![one.clone(), two.clone(), one.clone()],
    ])?;
    let s2 = rows(vec![
        vec![one, &two * z, z2.clone()],
        vec![zero.clone(), -z, -&z2],
        vec![zero.clone(), zero, z2],
    ])?;
    checked(Representation::new(3, vec![s1, s2], Meta::new("mu_pascal").with("z", z))?)
}

/// The 4×4 matrix diagonalizing `σ₁` of the Burau tensor square; its third
/// column spans the one-dimensional invariant line.
pub fn tensor_square_diagonalizer(z: &Scalar) -> Result<Matrix, RepError> {
    let t = z.tag();
    let (zero, one) = (int(0, t), int(1, t));
    let zp1 = z + &one;
    rows(vec![
        vec![zero.clone(), zero.clone(), zero.clone(), &zp1 * &zp1],
        vec![zero.clone(), -&zp1, -&one, -&zp1],
        vec![zero.clone(), zero.clone(), one.clone(), -&zp1],
        vec![one.clone(), one.clone(), zero, one],
    ])
}

/// Intertwiner `X` with `mu(σ)·X = X·mu_pascal(σ)` for both generators.
///
/// Column `j` holds the coordinates of the symmetric tensor `u_j`
/// (`e₁`, `e₂+e₃`, `e₄`) in the diagonalizing basis, with the coordinate
/// along the invariant line dropped.
pub fn pascal_intertwiner(z: &Scalar) -> Result<Matrix, RepError> {
    let t = z.tag();
    let (zero, one) = (int(0, t), int(1, t));
    let sym_basis = rows(vec![
        vec![one.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), one.clone(), zero.clone()],
        vec![zero.clone(), one.clone(), zero.clone()],
        vec![zero.clone(), zero, one],
    ])?;
    let coords = tensor_square_diagonalizer(z)?.inverse()?.mul(&sym_basis)?;
    Ok(coords.select(&[0, 1, 3], &[0, 1, 2]))
}

/// The standard representation of S3 obtained from `β(1)`; both images
/// must square to the identity.
pub fn standard_s3() -> Result<Representation, RepError> {
    let rho = burau3(&Scalar::z())?.specialize(&Scalar::from(1))?;
    for (i, m) in rho.images().iter().enumerate() {
        if !m.mul(m)?.is_identity() {
            return Err(RepError::Check(format!("image of s{} does not square to 1", i + 1)));
        }
    }
    Ok(rho.with_meta(Meta::new("standard_s3")))
}
