use num_bigint::BigInt;
use supersinglet_core::ks::catalog::{conway_kochen31, merged_peres, peres24};
use supersinglet_core::ks::{Context, VectorSet};
use supersinglet_core::selftest::{
    assemble_and_solve, general_d_selftest, pqs_constraint_rows, support_restriction_constraints,
    verify_unique_supersinglet, CoefficientVector,
};
use supersinglet_core::supersinglet::Permutation;

fn ctx(set: &VectorSet, m: &[usize]) -> Context {
    Context::new(m.to_vec(), set).unwrap()
}

#[test]
fn variable_counts() {
    assert_eq!(
        support_restriction_constraints(&conway_kochen31())
            .unwrap()
            .variables,
        6
    );
    assert_eq!(
        support_restriction_constraints(&peres24())
            .unwrap()
            .variables,
        24
    );
    assert_eq!(
        support_restriction_constraints(&merged_peres(5).unwrap())
            .unwrap()
            .variables,
        120
    );
}

#[test]
fn ck_rows_and_solution() {
    let ck = conway_kochen31();
    let rows = pqs_constraint_rows(&ck, &ctx(&ck, &[0, 3, 4]), 0).unwrap();
    let row = rows
        .iter()
        .find(|r| r.provenance.iter().any(|p| p.tuple == [0, 3, 3]))
        .unwrap();
    let expect: Vec<BigInt> = [1, 1, 0, 0, 0, 0].into_iter().map(BigInt::from).collect();
    assert_eq!(row.coefficients, expect);
    assert!(pqs_constraint_rows(&ck, &ctx(&ck, &[0, 1, 2]), 0)
        .unwrap()
        .is_empty());

    let (_, sol) = assemble_and_solve(&ck, &[ctx(&ck, &[0, 3, 4]), ctx(&ck, &[1, 5, 6])]).unwrap();
    assert_eq!((sol.rank, sol.nullity), (5, 1));
    let u = verify_unique_supersinglet(&sol.null_basis, 3);
    assert!(u.unique);
    // alpha_012 = -alpha_021 = alpha_120 = -alpha_102 = alpha_201 = -alpha_210
    let w = u.witness.unwrap();
    let a = |p: [usize; 3]| w.get(&Permutation::new(p.to_vec()).unwrap());
    let one = supersinglet_core::Rational::one();
    assert_eq!(a([0, 1, 2]), one);
    assert_eq!(a([0, 2, 1]), -one.clone());
    assert_eq!(a([1, 2, 0]), one);
    assert_eq!(a([1, 0, 2]), -one.clone());
    assert_eq!(a([2, 0, 1]), one);
    assert_eq!(a([2, 1, 0]), -one);
}

#[test]
fn peres_solution() {
    let p = peres24();
    let (system, sol) =
        assemble_and_solve(&p, &[ctx(&p, &[4, 5, 6, 7]), ctx(&p, &[8, 9, 10, 11])]).unwrap();
    assert_eq!(system.variable_count(), 24);
    assert_eq!((sol.rank, sol.nullity), (23, 1));
    let u = verify_unique_supersinglet(&sol.null_basis, 4);
    assert!(u.unique);
    assert_eq!(u.witness.unwrap(), CoefficientVector::levi_civita(4));

    let (_, one) = assemble_and_solve(&p, &[ctx(&p, &[4, 5, 6, 7])]).unwrap();
    assert!(one.nullity > 1);
    assert!(!verify_unique_supersinglet(&one.null_basis, 4).unique);
}

#[test]
fn replacing_a_basis_breaks_uniqueness() {
    let p = peres24();
    // canonical context instead of the second Peres basis adds nothing
    let (_, sol) =
        assemble_and_solve(&p, &[ctx(&p, &[4, 5, 6, 7]), ctx(&p, &[0, 1, 2, 3])]).unwrap();
    assert!(!verify_unique_supersinglet(&sol.null_basis, 4).unique);
}

#[test]
fn general_d() {
    let r4 = general_d_selftest(4, false).unwrap();
    assert_eq!(r4.report.rank, 23);
    assert!(r4.report.unique);
    let r5 = general_d_selftest(5, false).unwrap();
    assert_eq!((r5.report.variables, r5.report.nullity), (120, 1));
    assert!(r5.report.unique);
    assert_eq!(r5.windows.len(), 2);
    assert!(general_d_selftest(3, false).is_err());
}

#[test]
fn general_d6() {
    let r6 = general_d_selftest(6, false).unwrap();
    assert_eq!((r6.report.variables, r6.report.rank), (720, 719));
    assert!(r6.report.unique);
}
