use super::*;
use crate::matrix;
use crate::reps::{burau3, burau3_diag, mu, mu_pascal, standard_s3, theorem1_i, theorem1_ii};
use crate::scalar::FieldTag;

fn z() -> Scalar {
    Scalar::z()
}

#[test]
fn burau_relations_hold() {
    let rep = burau3(&z()).unwrap();
    let report = verify_braid_relations(&rep);
    assert!(report.overall);
    assert_eq!(report.relations_checked.len(), 1);
    assert_eq!(report.relations_checked[0].lhs, "s2 s1 s2");
}

#[test]
fn broken_relation_is_detected() {
    let a = matrix![[1, 1], [0, 1]];
    let b = matrix![[2, 0], [0, 1]];
    let rep = Representation::new(3, vec![a, b], Meta::new("raw")).unwrap();
    assert!(!verify_braid_relations(&rep).overall);
}

#[test]
fn spectrum_needs_triangular_input() {
    let m = matrix![[1, 2], [3, 4]];
    assert_eq!(spectrum_of_triangular(&m), Err(AnalysisError::NotTriangular));
    let t = matrix![[2, 5], [0, 2]];
    assert_eq!(spectrum_of_triangular(&t).unwrap(), vec![Scalar::from_int(2, FieldTag::Rational)]);
}

#[test]
fn burau_is_irreducible_generically() {
    let rep = burau3(&z()).unwrap();
    let verdict = is_irreducible(&rep).unwrap();
    assert!(verdict.irreducible);
    assert!(common_invariant_lines(&rep, Side::Right).unwrap().is_empty());
}

#[test]
fn burau_at_primitive_cube_root_is_reducible() {
    // z^2 + z + 1 = 0: the Burau matrices acquire a common eigenvector.
    let rep = burau3(&Scalar::omega()).unwrap();
    let verdict = is_irreducible(&rep).unwrap();
    assert!(!verdict.irreducible);
    assert!(verdict.witness.unwrap().holds_for(&rep));
}

#[test]
fn family_one_at_omega_has_common_eigenvector() {
    let w = Scalar::omega();
    let rep = theorem1_i(&w, &Scalar::from_int(1, FieldTag::Omega)).unwrap();
    let lines = common_invariant_lines(&rep, Side::Right).unwrap();
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0].eigenvalue, -&w);
    assert_eq!(lines[0].vector, Matrix::column(vec![Scalar::one(FieldTag::Omega), Scalar::zero(FieldTag::Omega)]).unwrap());
}

#[test]
fn family_two_is_irreducible_for_generic_e() {
    let e = Scalar::ratio(3, 1);
    let rep = theorem1_ii(&z(), &e).unwrap();
    assert!(is_irreducible(&rep).unwrap().irreducible);
}

#[test]
fn mu_is_irreducible_generically() {
    let rep = mu(&z()).unwrap();
    let verdict = is_irreducible(&rep).unwrap();
    assert!(verdict.irreducible, "{}", verdict.reason);
}

#[test]
fn mu_at_omega_is_reducible() {
    let rep = mu(&Scalar::omega()).unwrap();
    let verdict = is_irreducible(&rep).unwrap();
    assert!(!verdict.irreducible);
    let w2 = Scalar::omega().pow(2).unwrap();
    assert_eq!(verdict.witness.unwrap().eigenvalue, w2);
}

#[test]
fn tensor_square_splits_into_sign_character_and_pascal_block() {
    let b = burau3(&z()).unwrap();
    let sq = b.tensor(&b).unwrap();
    let report = split_once(&sq).unwrap();
    assert_eq!(report.blocks.len(), 2);
    assert_eq!(report.blocks[0].images(), xi(&-&z(), 3).unwrap().images());
    assert_eq!(report.blocks[1].images(), mu_pascal(&z()).unwrap().images());
    for w in &report.witnesses {
        assert!(w.holds_for(&sq));
    }
}

#[test]
fn split_fails_without_invariant_line() {
    let rep = burau3(&z()).unwrap();
    assert_eq!(split_once(&rep).unwrap_err(), AnalysisError::NoInvariantLine);
}

#[test]
fn nonsplit_extension_is_reported() {
    // Unipotent: e1 is invariant but has no invariant complement.
    let a = matrix![[1, 1], [0, 1]];
    let rep = Representation::new(3, vec![a.clone(), a], Meta::new("raw")).unwrap();
    assert!(verify_braid_relations(&rep).overall);
    assert_eq!(split_once(&rep).unwrap_err(), AnalysisError::NoComplement);
}

#[test]
fn intertwiner_space_of_irreducible_is_scalars() {
    let rep = burau3(&z()).unwrap();
    let basis = intertwiners(&rep, &rep).unwrap();
    assert_eq!(basis.len(), 1);
    assert!(basis[0].is_scalar_multiple_of(&Matrix::identity(2, FieldTag::RatFunc)));
}

#[test]
fn diagonalized_burau_is_isomorphic_to_burau() {
    let a = burau3(&z()).unwrap();
    let b = burau3_diag(&z()).unwrap();
    let verdict = is_isomorphic(&a, &b, IsoOptions::default()).unwrap();
    let Isomorphism::Isomorphic { conjugator } = verdict else {
        panic!("expected isomorphic, got {verdict:?}");
    };
    for (x, y) in a.images().iter().zip(b.images()) {
        assert_eq!(conjugator.mul(x).unwrap(), y.mul(&conjugator).unwrap());
    }
}

#[test]
fn mu_and_pascal_form_are_isomorphic() {
    let verdict = is_isomorphic(&mu(&z()).unwrap(), &mu_pascal(&z()).unwrap(), IsoOptions::default()).unwrap();
    assert!(verdict.is_isomorphic());
}

#[test]
fn char_poly_mismatch_rejects_quickly() {
    let a = burau3(&z()).unwrap();
    let b = burau3(&Scalar::z().pow(2).unwrap()).unwrap();
    let verdict = is_isomorphic(&a, &b, IsoOptions::default()).unwrap();
    assert!(matches!(verdict, Isomorphism::NotIsomorphic { .. }));
}

#[test]
fn reducible_sum_has_large_intertwiner_space() {
    let s = standard_s3().unwrap();
    let sum = s.direct_sum(&s).unwrap();
    assert_eq!(intertwiners(&sum, &sum).unwrap().len(), 4);
    assert!(is_isomorphic(&sum, &sum, IsoOptions::default()).unwrap().is_isomorphic());
}

#[test]
fn dimension_four_is_undecided() {
    let b = burau3(&z()).unwrap();
    let sq = b.tensor(&b).unwrap();
    assert_eq!(is_irreducible(&sq).unwrap_err(), AnalysisError::Undecided(4));
}

#[test]
fn full_decomposition_at_one_has_three_blocks() {
    // At z = 1 the tensor square is sign + trivial + standard.
    let b = burau3(&Scalar::from(1)).unwrap();
    let sq = b.tensor(&b).unwrap();
    let report = decompose(&sq).unwrap();
    let dims: Vec<usize> = report.blocks.iter().map(Representation::dim).collect();
    assert_eq!(dims, vec![1, 1, 2]);
    assert_eq!(report.witnesses.len(), 4);
    for w in &report.witnesses {
        assert!(w.holds_for(&sq), "{w:?}");
    }
    let conj = sq.conjugate(&report.basis_change).unwrap();
    for (g, img) in conj.images().iter().enumerate() {
        let mut expected = report.blocks[0].images()[g].clone();
        for blk in &report.blocks[1..] {
            expected = expected.block_diag(&blk.images()[g]).unwrap();
        }
        assert_eq!(img, &expected);
    }
}

#[test]
fn full_decomposition_generic_stops_at_irreducible_block() {
    let b = burau3(&z()).unwrap();
    let sq = b.tensor(&b).unwrap();
    assert_eq!(decompose(&sq).unwrap().blocks.len(), 2);
}
