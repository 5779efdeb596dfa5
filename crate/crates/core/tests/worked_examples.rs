use csp_core::cone::{project_universal, ray_family};
use csp_core::schur::{core_quotient_with_beads, mn_character, q_binomial, rsw_evaluate};
use csp_core::sieve::csp_exists;
use csp_core::{BigInt, CspMatrix, CycPoly, Partition, Rejection, Verdict};

fn ints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn sextic_example_has_no_action() {
    let f = CycPoly::from_i64s(6, &[10, 1, 0, 3, 0, 1]).unwrap();
    let d = csp_exists(&f);
    assert_eq!(d.verdict, Verdict::No);
    assert_eq!(d.reason, Some(Rejection::NegativeOrbitCount));
    assert_eq!(d.witness_k, Some(3));
    assert_eq!(d.evaluations.unwrap(), ints(&[8, 12, 5, 12, 8, 15]));
    assert_eq!(d.sieve.unwrap(), ints(&[8, 4, -3, 0, 0, 6]));
}

#[test]
fn q_binomial_sieves_subsets() {
    // [6 choose 2]_q with C_6 rotating 2-subsets of a hexagon: 15 subsets, orbits 6, 6, 3.
    let f = q_binomial(6, 2).reduce_mod(6).unwrap();
    let d = csp_exists(&f);
    assert!(d.is_yes());
    assert_eq!(d.profile.unwrap().counts(), ints(&[0, 0, 3, 0, 0, 12]).as_slice());
}

#[test]
fn seven_part_abacus() {
    let cq = core_quotient_with_beads(&p("5,3,3,2,1,1,1"), 3, 7).unwrap();
    assert_eq!(cq.core, p("5,3,1,1"));
    assert_eq!(cq.quotient, vec![p("1"), p("1"), Partition::empty()]);
}

#[test]
fn characters_and_root_values() {
    // χ^{(2,1)} on the classes 1^3, 2 1, 3.
    assert_eq!(mn_character(&p("2,1"), &[1, 1, 1]).unwrap(), BigInt::from(2));
    assert_eq!(mn_character(&p("2,1"), &[2, 1]).unwrap(), BigInt::from(0));
    assert_eq!(mn_character(&p("2,1"), &[3]).unwrap(), BigInt::from(-1));
    // s_{(2,2)}(1, q, q^2, q^3) = q^2 + q^3 + 3q^4 + 3q^5 + 4q^6 + 3q^7 + 3q^8 + q^9 + q^10.
    assert_eq!(rsw_evaluate(&p("2,2"), 4, 2).unwrap(), BigInt::from(4));
    // (2,1) has a non-empty 2-core, so it vanishes at q = -1.
    assert_eq!(rsw_evaluate(&p("2,1"), 4, 2).unwrap(), BigInt::from(0));
}

#[test]
fn binary_word_matrix_projects() {
    let rows = vec![
        vec![2, 1, 0, 0, 0, 11],
        vec![0, 0, 2, 0, 0, 7],
        vec![0, 0, 0, 0, 0, 11],
        vec![0, 1, 2, 0, 0, 7],
        vec![0, 0, 0, 0, 0, 11],
        vec![0, 0, 2, 0, 0, 7],
    ];
    let a = CspMatrix::from_integer_rows(&rows).unwrap();
    assert!(a.verify());
    let u = project_universal(&a).unwrap();
    let want = CspMatrix::from_integer_rows(&[
        vec![2, 1, 2, 0, 0, 9],
        vec![0, 0, 0, 0, 0, 9],
        vec![0, 0, 2, 0, 0, 9],
        vec![0, 1, 0, 0, 0, 9],
        vec![0, 0, 2, 0, 0, 9],
        vec![0, 0, 0, 0, 0, 9],
    ])
    .unwrap();
    assert_eq!(u, want);
    assert_eq!(u.column_sums(), a.column_sums());
}

#[test]
fn rays_for_two() {
    let rays = ray_family(2).unwrap();
    let want = [
        CspMatrix::from_integer_rows(&[vec![1, 0], vec![0, 0]]).unwrap(),
        CspMatrix::from_integer_rows(&[vec![0, 2], vec![1, 0]]).unwrap(),
        CspMatrix::from_integer_rows(&[vec![0, 2], vec![0, 2]]).unwrap(),
    ];
    assert_eq!(rays, want);
}
