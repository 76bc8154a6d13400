//! Reference matrices and vectors, written out as published and parsed from
//! text so they stay independent of the constructors they are checked
//! against.

use braid3::scalar::parse::parse_scalar;
use braid3::{FieldTag, Matrix, Scalar};

fn q(text: &str) -> Scalar {
    parse_scalar(text)
        .and_then(|s| Ok(s.promote(FieldTag::RatFunc)?))
        .unwrap_or_else(|e| panic!("bad reference entry {text}: {e}"))
}

fn m(rows: &[&[&str]]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|e| q(e)).collect()).collect())
        .expect("reference matrix is rectangular")
}

pub fn column(entries: &[&str]) -> Matrix {
    Matrix::column(entries.iter().map(|e| q(e)).collect()).expect("nonempty")
}

pub fn burau_s1() -> Matrix {
    m(&[&["-z", "0"], &["1", "1"]])
}

pub fn burau_s2() -> Matrix {
    m(&[&["1", "z"], &["0", "-z"]])
}

pub fn burau_p() -> Matrix {
    m(&[&["-(z+1)", "0"], &["1", "1"]])
}

pub fn burau_diag_s1() -> Matrix {
    m(&[&["-z", "0"], &["0", "1"]])
}

pub fn burau_diag_s2() -> Matrix {
    m(&[&["1/(z+1)", "-z/(z+1)"], &["-(z^2+z+1)/(z+1)", "-z^2/(z+1)"]])
}

pub fn square_a() -> Matrix {
    m(&[
        &["z^2", "0", "0", "0"],
        &["-z", "-z", "0", "0"],
        &["-z", "0", "-z", "0"],
        &["1", "1", "1", "1"],
    ])
}

pub fn square_b() -> Matrix {
    m(&[
        &["1", "z", "z", "z^2"],
        &["0", "-z", "0", "-z^2"],
        &["0", "0", "-z", "-z^2"],
        &["0", "0", "0", "z^2"],
    ])
}

pub fn square_p() -> Matrix {
    m(&[
        &["0", "0", "0", "z^2 + 2z + 1"],
        &["0", "-z - 1", "-1", "-z - 1"],
        &["0", "0", "1", "-z - 1"],
        &["1", "1", "0", "1"],
    ])
}

pub fn square_a_conj() -> Matrix {
    m(&[&["1", "0", "0", "0"], &["0", "-z", "0", "0"], &["0", "0", "-z", "0"], &["0", "0", "0", "z^2"]])
}

pub fn square_b_conj() -> Matrix {
    m(&[
        &["z^4/(z+1)^2", "z^2/(z+1)^2 (z^2+z+1)", "0", "1/(z+1)^2 (z^2+z+1)^2"],
        &["2 z^3/(z+1)^2", "z (z^2+1)/(z+1)^2", "0", "-2/(z+1)^2 (z^2+z+1)"],
        &["-z^3/(z+1)", "-z/(z+1) (z^2+z+1)", "-z", "1/(z+1) (z^2+z+1)"],
        &["z^2/(z+1)^2", "-z/(z+1)^2", "0", "1/(z+1)^2"],
    ])
}

pub fn mu_c() -> Matrix {
    m(&[&["1", "0", "0"], &["0", "-z", "0"], &["0", "0", "z^2"]])
}

pub fn mu_d() -> Matrix {
    m(&[
        &["z^4/(z+1)^2", "z^2/(z+1)^2 (z^2+z+1)", "1/(z+1)^2 (z^2+z+1)^2"],
        &["2 z^3/(z+1)^2", "z (z^2+1)/(z+1)^2", "-2/(z+1)^2 (z^2+z+1)"],
        &["z^2/(z+1)^2", "-z/(z+1)^2", "1/(z+1)^2"],
    ])
}

/// Eigenvalue of `D` and its eigenvector.
pub fn mu_d_eigenvectors() -> Vec<(Scalar, Matrix)> {
    vec![
        (q("1"), column(&["1", "-2", "1"])),
        (q("-z"), column(&["-(z^2+z+1)/z", "(z^2+1)/z", "1"])),
        (q("z^2"), column(&["(z^4+2z^3+3z^2+2z+1)/z^2", "(2z^2+2z+2)/z", "1"])),
    ]
}

pub fn pascal_s1() -> Matrix {
    m(&[&["z^2", "0", "0"], &["-z", "-z", "0"], &["1", "2", "1"]])
}

pub fn pascal_s2() -> Matrix {
    m(&[&["1", "2z", "z^2"], &["0", "-z", "-z^2"], &["0", "0", "z^2"]])
}

/// `fg` in the diagonal-σ₁ family.
pub fn family_one_fg() -> Scalar {
    q("z(z^2+z+1)/(z+1)^2")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values_parse() {
        assert_eq!(square_b_conj().shape(), (4, 4));
        assert_eq!(mu_d().get(2, 2), &q("1/(z+1)^2"));
        assert_eq!(mu_d_eigenvectors().len(), 3);
        assert!(square_p().is_invertible());
    }
}
