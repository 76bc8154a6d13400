//! Printed matrices, vectors and identities from the published derivation,
//! typed in independently of the constructors and compared exactly.

use braid3::linalg::conjugate;
use num_rational::BigRational;
use braid3::reps::{
    burau3, burau3_diag, burau_diagonalizer, mu, mu_pascal, standard_s3, tensor_square_diagonalizer, theorem1_i,
    theorem1_ii, xi,
};
use braid3::scalar::parse::{parse_ratfunc, parse_scalar};
use braid3::scalar::poly_gcd;
use braid3::{
    common_invariant_lines, intertwiners, is_irreducible, is_isomorphic, split_once, spectrum_of_triangular,
    verify_braid_relations, FieldTag, IsoOptions, Isomorphism, Matrix, Omega, Poly, RatFunc, Scalar, Side,
};

fn s(text: &str) -> Scalar {
    parse_scalar(text).unwrap()
}

fn q(text: &str) -> Scalar {
    s(text).promote(FieldTag::RatFunc).unwrap()
}

fn m(rows: &[&[&str]]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|e| q(e)).collect()).collect()).unwrap()
}

fn col(entries: &[&str]) -> Matrix {
    Matrix::column(entries.iter().map(|e| q(e)).collect()).unwrap()
}

fn z() -> Scalar {
    Scalar::z()
}

fn poly(text: &str) -> Poly {
    let r = parse_ratfunc(text).unwrap();
    assert!(r.denom().is_one());
    r.numer().clone()
}

/// Printed A and B for the Burau tensor square.
fn printed_a() -> Matrix {
    m(&[
        &["z^2", "0", "0", "0"],
        &["-z", "-z", "0", "0"],
        &["-z", "0", "-z", "0"],
        &["1", "1", "1", "1"],
    ])
}

fn printed_b() -> Matrix {
    m(&[
        &["1", "z", "z", "z^2"],
        &["0", "-z", "0", "-z^2"],
        &["0", "0", "-z", "-z^2"],
        &["0", "0", "0", "z^2"],
    ])
}

fn printed_p4() -> Matrix {
    m(&[
        &["0", "0", "0", "z^2 + 2z + 1"],
        &["0", "-z - 1", "-1", "-z - 1"],
        &["0", "0", "1", "-z - 1"],
        &["1", "1", "0", "1"],
    ])
}

fn printed_c() -> Matrix {
    m(&[&["1", "0", "0"], &["0", "-z", "0"], &["0", "0", "z^2"]])
}

fn printed_d() -> Matrix {
    m(&[
        &["z^4/(z+1)^2", "z^2/(z+1)^2 (z^2+z+1)", "1/(z+1)^2 (z^2+z+1)^2"],
        &["2 z^3/(z+1)^2", "z (z^2+1)/(z+1)^2", "-2/(z+1)^2 (z^2+z+1)"],
        &["z^2/(z+1)^2", "-z/(z+1)^2", "1/(z+1)^2"],
    ])
}

// --- scalar ---------------------------------------------------------------

#[test]
fn gcd_examples() {
    assert_eq!(poly_gcd(&poly("z^2 - 1"), &poly("z^2 + 2z + 1")), poly("z + 1"));
    assert_eq!(poly_gcd(&poly("3z^2 - 3"), &Poly::zero()), poly("z^2 - 1"));
    assert_eq!(poly_gcd(&poly("z^2 + z + 1"), &poly("z^3 - 1")), poly("z^2 + z + 1"));
    assert_eq!(poly_gcd(&Poly::zero(), &Poly::zero()), Poly::zero());
}

#[test]
fn normalize_examples() {
    let r = RatFunc::new(poly("z^2 - 1"), poly("z - 1")).unwrap();
    assert_eq!((r.numer(), r.denom()), (&poly("z + 1"), &Poly::one()));
    let r = RatFunc::new(poly("2z"), poly("2")).unwrap();
    assert_eq!((r.numer(), r.denom()), (&poly("z"), &Poly::one()));
    let fg = RatFunc::new(poly("z(z^2 + z + 1)"), poly("(z + 1)^2")).unwrap();
    assert_eq!(fg.denom(), &poly("z^2 + 2z + 1"));
    assert_eq!(fg.numer(), &poly("z^3 + z^2 + z"));
    let err = RatFunc::new(Poly::one(), Poly::zero()).unwrap_err();
    assert_eq!(err.to_string(), "division by zero polynomial");
}

#[test]
fn field_op_examples() {
    assert_eq!(Omega::omega().inv().unwrap(), Omega { a: BigRational::from_integer((-1).into()), b: BigRational::from_integer((-1).into()) });
    let w = Scalar::omega();
    let one = Scalar::one(FieldTag::Omega);
    assert!((&(&(&w * &w) + &w) + &one).is_zero());
    let zp1 = q("z + 1");
    assert!((&zp1.inv().unwrap() * &zp1).is_one());
}

#[test]
fn evaluate_examples() {
    let fg = parse_ratfunc("z(z^2+z+1)/(z+1)^2").unwrap();
    assert_eq!(braid3::scalar::evaluate(&fg, &Scalar::from(1)).unwrap(), s("3/4"));
    assert!(braid3::scalar::evaluate(&fg, &Scalar::omega()).unwrap().is_zero());
    let pole = braid3::scalar::evaluate(&parse_ratfunc("1/(z+1)").unwrap(), &Scalar::from(-1)).unwrap_err();
    assert!(pole.to_string().contains("pole"));
}

// --- linear algebra -------------------------------------------------------

#[test]
fn printed_burau_matrices_satisfy_braid_relation() {
    let a = m(&[&["-z", "0"], &["1", "1"]]);
    let b = m(&[&["1", "z"], &["0", "-z"]]);
    let aba = a.mul(&b).unwrap().mul(&a).unwrap();
    let bab = b.mul(&a).unwrap().mul(&b).unwrap();
    assert_eq!(aba, bab);
    assert!(a.mul(&a.inverse().unwrap()).unwrap().is_identity());
    assert_eq!(Matrix::identity(2, FieldTag::RatFunc).mul(&a).unwrap(), a);
}

#[test]
fn burau_diagonalization_matches_printed_pair() {
    let p = m(&[&["-(z+1)", "0"], &["1", "1"]]);
    assert_eq!(burau_diagonalizer(&z()).unwrap(), p);
    let conj = burau3(&z()).unwrap().conjugate(&p).unwrap();
    assert_eq!(conj.generator(1), &m(&[&["-z", "0"], &["0", "1"]]));
    assert_eq!(
        conj.generator(2),
        &m(&[&["1/(z+1)", "-z/(z+1)"], &["-(z^2+z+1)/(z+1)", "-z^2/(z+1)"]])
    );
    assert_eq!(conj.images(), burau3_diag(&z()).unwrap().images());
}

#[test]
fn burau_is_family_one_with_f_minus_z_over_z_plus_one() {
    let fam = theorem1_i(&z(), &q("-z/(z+1)")).unwrap();
    assert_eq!(fam.images(), burau3_diag(&z()).unwrap().images());
}

#[test]
fn tensor_square_matches_printed_a_and_b() {
    let b = burau3(&z()).unwrap();
    let sq = b.tensor(&b).unwrap();
    assert_eq!(sq.generator(1), &printed_a());
    assert_eq!(sq.generator(2), &printed_b());
}

#[test]
fn tensor_square_conjugation_matches_printed_forms() {
    let p = printed_p4();
    assert_eq!(tensor_square_diagonalizer(&z()).unwrap(), p);
    let a = conjugate(&p, &printed_a()).unwrap();
    assert_eq!(a, Matrix::diag(&[q("1"), q("-z"), q("-z"), q("z^2")]).unwrap());
    let b = conjugate(&p, &printed_b()).unwrap();
    let printed = m(&[
        &["z^4/(z+1)^2", "z^2/(z+1)^2 (z^2+z+1)", "0", "1/(z+1)^2 (z^2+z+1)^2"],
        &["2 z^3/(z+1)^2", "z (z^2+1)/(z+1)^2", "0", "-2/(z+1)^2 (z^2+z+1)"],
        &["-z^3/(z+1)", "-z/(z+1) (z^2+z+1)", "-z", "1/(z+1) (z^2+z+1)"],
        &["z^2/(z+1)^2", "-z/(z+1)^2", "0", "1/(z+1)^2"],
    ]);
    assert_eq!(b, printed);
    let keep = [0, 1, 3];
    assert_eq!(a.select(&keep, &keep), printed_c());
    assert_eq!(b.select(&keep, &keep), printed_d());
}

#[test]
fn mu_constructor_matches_printed_c_and_d() {
    let r = mu(&z()).unwrap();
    assert_eq!(r.generator(1), &printed_c());
    assert_eq!(r.generator(2), &printed_d());
    assert_eq!(r.generator(2).get(2, 2), &q("1/(z+1)^2"));
}

#[test]
fn eigenvectors_of_d_match_printed_vectors() {
    let d = printed_d();
    let cases = [
        ("1", col(&["1", "-2", "1"])),
        ("-z", col(&["-(z^2+z+1)/z", "(z^2+1)/z", "1"])),
        ("z^2", col(&["(z^4+2z^3+3z^2+2z+1)/z^2", "(2z^2+2z+2)/z", "1"])),
    ];
    for (lambda, printed) in cases {
        let lambda = q(lambda);
        let basis = d.sub_scalar_identity(&lambda).unwrap().kernel();
        assert_eq!(basis.len(), 1, "eigenvalue {lambda}");
        let v = &basis.vectors[0];
        assert!(v.get(0, 0).is_one());
        assert!(v.is_scalar_multiple_of(&printed), "eigenvalue {lambda}: {v}");
        // Direct check of the printed vector.
        assert_eq!(d.mul(&printed).unwrap(), printed.scale(&lambda).unwrap());
    }
}

#[test]
fn specialization_at_one_finds_common_fixed_vector() {
    let d1 = mu(&Scalar::from(1)).unwrap().generator(2).clone();
    let eig1 = d1.sub_scalar_identity(&Scalar::from(1)).unwrap().kernel();
    assert_eq!(eig1.len(), 2);
    let to_q = |v: &[i64]| Matrix::column(v.iter().map(|&x| Scalar::from(x)).collect()).unwrap();
    for printed in [to_q(&[1, -2, 1]), to_q(&[9, 6, 1]), to_q(&[3, 0, 1])] {
        assert_eq!(d1.mul(&printed).unwrap(), printed);
    }
    let rep = mu(&z()).unwrap().specialize(&Scalar::from(1)).unwrap();
    let lines = common_invariant_lines(&rep, Side::Right).unwrap();
    assert_eq!(lines.len(), 1);
    assert!(lines[0].eigenvalue.is_one());
    assert!(lines[0].vector.is_scalar_multiple_of(&to_q(&[3, 0, 1])));
}

#[test]
fn pascal_form_matches_printed_matrices() {
    let r = mu_pascal(&z()).unwrap();
    assert_eq!(r.generator(1), &m(&[&["z^2", "0", "0"], &["-z", "-z", "0"], &["1", "2", "1"]]));
    assert_eq!(r.generator(2), &m(&[&["1", "2z", "z^2"], &["0", "-z", "-z^2"], &["0", "0", "z^2"]]));
}

#[test]
fn pascal_form_is_the_tensor_square_on_symmetric_tensors() {
    // Basis u1 = e1, u2 = e2 + e3, u3 = e4 of the symmetric tensors.
    let u = m(&[&["1", "0", "0"], &["0", "1", "0"], &["0", "1", "0"], &["0", "0", "1"]]);
    let pascal = mu_pascal(&z()).unwrap();
    for (big, small) in [printed_a(), printed_b()].iter().zip(pascal.images()) {
        assert_eq!(big.mul(&u).unwrap(), u.mul(small).unwrap());
    }
}

// --- analysis -------------------------------------------------------------

#[test]
fn relation_examples() {
    assert!(verify_braid_relations(&burau3(&z()).unwrap()).overall);
    for n in 2..6 {
        assert!(verify_braid_relations(&xi(&z(), n).unwrap()).overall);
    }
    let a = m(&[&["-z", "0"], &["0", "1"]]);
    let raw = braid3::Representation::new(3, vec![a, Matrix::identity(2, FieldTag::RatFunc)], Default::default())
        .unwrap();
    assert!(!verify_braid_relations(&raw).overall);
}

#[test]
fn spectrum_examples() {
    assert_eq!(
        spectrum_of_triangular(&printed_c()).unwrap(),
        vec![q("1"), q("-z"), q("z^2")]
    );
    assert_eq!(spectrum_of_triangular(&m(&[&["1", "z"], &["0", "1"]])).unwrap(), vec![q("1")]);
    let err = spectrum_of_triangular(&printed_d()).unwrap_err();
    assert_eq!(err.to_string(), "spectrum requires triangular form; conjugate first");
}

#[test]
fn invariant_line_in_diagonal_basis_is_e3() {
    let b = burau3(&z()).unwrap();
    let conj = b.tensor(&b).unwrap().conjugate(&printed_p4()).unwrap();
    let lines = common_invariant_lines(&conj, Side::Right).unwrap();
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0].eigenvalue, q("-z"));
    assert_eq!(lines[0].vector, col(&["0", "0", "1", "0"]));
}

#[test]
fn left_witness_in_diagonal_basis() {
    let b = burau3(&z()).unwrap();
    let conj = b.tensor(&b).unwrap().conjugate(&printed_p4()).unwrap();
    // Oracle: u = (0, z+1, 2, 0) satisfies u·M = −z·u for both images.
    let u = Matrix::from_rows(vec![vec![q("0"), q("z+1"), q("2"), q("0")]]).unwrap();
    for img in conj.images() {
        assert_eq!(u.mul(img).unwrap(), u.scale(&q("-z")).unwrap());
    }
    let report = split_once(&conj).unwrap();
    let left = &report.witnesses[1];
    assert_eq!(left.side, Side::Left);
    assert!(left.vector.is_scalar_multiple_of(&u.transpose()));
}

#[test]
fn tensor_square_splits_with_complement() {
    let b = burau3(&z()).unwrap();
    let sq = b.tensor(&b).unwrap();
    let report = split_once(&sq).unwrap();
    let conj = sq.conjugate(&report.basis_change).unwrap();
    for (g, img) in conj.images().iter().enumerate() {
        for i in 1..4 {
            assert!(img.get(0, i).is_zero() && img.get(i, 0).is_zero());
        }
        let block_trace = (&report.blocks[0].images()[g].trace().unwrap()
            + &report.blocks[1].images()[g].trace().unwrap())
            .clone();
        assert_eq!(block_trace, sq.images()[g].trace().unwrap());
    }
    assert_eq!(report.blocks[0].images(), xi(&q("-z"), 3).unwrap().images());
    assert!(is_isomorphic(&report.blocks[1], &mu(&z()).unwrap(), IsoOptions::default())
        .unwrap()
        .is_isomorphic());
}

#[test]
fn mu_at_one_splits_off_trivial_character() {
    let rep = mu(&Scalar::from(1)).unwrap();
    let report = split_once(&rep).unwrap();
    assert_eq!(report.blocks[0].images(), xi(&Scalar::from(1), 3).unwrap().images());
    let verdict = is_isomorphic(&report.blocks[1], &burau3(&Scalar::from(1)).unwrap(), IsoOptions::default()).unwrap();
    assert!(verdict.is_isomorphic(), "{verdict:?}");
}

#[test]
fn irreducibility_examples() {
    assert!(is_irreducible(&mu(&z()).unwrap()).unwrap().irreducible);
    assert!(!is_irreducible(&mu(&z()).unwrap().specialize(&Scalar::from(1)).unwrap()).unwrap().irreducible);
    let fam = theorem1_i(&Scalar::omega(), &Scalar::one(FieldTag::Omega)).unwrap();
    // Oracle: g = 0 at the cube root, so σ₂ is upper triangular and e1 is
    // an eigenvector of both images with eigenvalue −ω.
    assert!(fam.generator(2).get(1, 0).is_zero());
    let e1 = Matrix::column(vec![Scalar::one(FieldTag::Omega), Scalar::zero(FieldTag::Omega)]).unwrap();
    let minus_w = -&Scalar::omega();
    for img in fam.images() {
        assert_eq!(img.mul(&e1).unwrap(), e1.scale(&minus_w).unwrap());
    }
    assert!(!is_irreducible(&fam).unwrap().irreducible);
}

#[test]
fn schur_example_solves_to_identity() {
    let r = burau3(&z()).unwrap();
    let basis = intertwiners(&r, &r).unwrap();
    assert_eq!(basis.len(), 1);
    // Hand solution for M = [[a,b],[c,d]]: commuting with σ₁ forces b = 0 and
    // d = a + (z+1)c; commuting with σ₂ forces c = 0. So M = a·I.
    assert!(basis[0].is_identity());
}

#[test]
fn intertwiner_to_diagonal_form_contains_diagonalizer() {
    let a = burau3(&z()).unwrap();
    let b = burau3_diag(&z()).unwrap();
    let basis = intertwiners(&a, &b).unwrap();
    assert_eq!(basis.len(), 1);
    // M·β = β'·M is solved by M = P⁻¹.
    let p_inv = burau_diagonalizer(&z()).unwrap().inverse().unwrap();
    assert!(basis[0].is_scalar_multiple_of(&p_inv));
}

#[test]
fn distinct_characters_have_no_intertwiners() {
    let a = xi(&z(), 3).unwrap();
    let b = xi(&q("-z"), 3).unwrap();
    assert!(intertwiners(&a, &b).unwrap().is_empty());
    assert!(!is_isomorphic(&a, &b, IsoOptions::default()).unwrap().is_isomorphic());
}

#[test]
fn family_one_scaling_is_an_isomorphism() {
    let a = theorem1_i(&Scalar::from(2), &Scalar::from(1)).unwrap();
    let b = theorem1_i(&Scalar::from(2), &Scalar::from(5)).unwrap();
    // Oracle: diag(1, 5)⁻¹·σ·diag(1, 5) rescales f by 5 and g by 1/5.
    let t = Matrix::diag(&[Scalar::from(1), Scalar::from(5)]).unwrap();
    assert_eq!(a.conjugate(&t).unwrap().images(), b.images());
    let Isomorphism::Isomorphic { conjugator } = is_isomorphic(&a, &b, IsoOptions::default()).unwrap() else {
        panic!("expected an isomorphism");
    };
    for (x, y) in a.images().iter().zip(b.images()) {
        assert_eq!(conjugator.mul(x).unwrap(), y.mul(&conjugator).unwrap());
    }
}

#[test]
fn mu_is_isomorphic_to_pascal_form() {
    let Isomorphism::Isomorphic { conjugator } =
        is_isomorphic(&mu(&z()).unwrap(), &mu_pascal(&z()).unwrap(), IsoOptions::default()).unwrap()
    else {
        panic!("expected an isomorphism");
    };
    assert!(conjugator.is_invertible());
}

#[test]
fn standard_representation_is_involutive() {
    let rho = standard_s3().unwrap();
    assert_eq!(rho.generator(1), &Matrix::from_rows(vec![vec![s("-1"), s("0")], vec![s("1"), s("1")]]).unwrap());
    assert_eq!(rho.generator(2), &Matrix::from_rows(vec![vec![s("1"), s("1")], vec![s("0"), s("-1")]]).unwrap());
}

#[test]
fn family_two_generic_parameters_are_irreducible() {
    for e in ["0", "1", "2", "-1", "1/3"] {
        let r = theorem1_ii(&z(), &q(e)).unwrap();
        assert!(is_irreducible(&r).unwrap().irreducible, "e = {e}");
    }
}
