use csp_core::cone::{apply_swap, membership_by_halfspaces, project_universal, swap_decompose};
use csp_core::sieve::build_adhoc_action;
use csp_core::{BigInt, BigRational, CspMatrix, OrbitProfile, Swap, UniversalVector};
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

const SIZES: [usize; 4] = [2, 3, 4, 6];

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// An integer CSP matrix: a universal matrix moved around by unit swaps.
fn csp_matrix() -> impl Strategy<Value = CspMatrix> {
    prop::sample::select(SIZES.to_vec()).prop_flat_map(csp_matrix_of)
}

fn csp_matrix_of(n: usize) -> impl Strategy<Value = CspMatrix> {
    let d = divisors(n).len();
    (
        prop::collection::vec(0usize..4, d),
        prop::collection::vec((0..n, 0..n, 0..d, 0..d), 0..25),
    )
        .prop_map(move |(orbits, moves)| {
            let divs = divisors(n);
            let mut counts = vec![BigInt::zero(); n];
            for (&c, &o) in divs.iter().zip(&orbits) {
                counts[c - 1] = BigInt::from(c * o);
            }
            let profile = OrbitProfile::new(n, counts).unwrap();
            let mut a = UniversalVector::from_profile(&profile).universal_matrix();
            for (i, i2, j, j2) in moves {
                if let Ok(sw) = Swap::unit((i, divs[j]), (i2, divs[j2])) {
                    if let Ok(b) = apply_swap(&a, &sw) {
                        a = b;
                    }
                }
            }
            a
        })
}

fn small_matrix() -> impl Strategy<Value = CspMatrix> {
    prop::sample::select(SIZES.to_vec()).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0i64..3, n), n)
            .prop_map(|rows| CspMatrix::from_integer_rows(&rows).unwrap())
    })
}

fn entry(a: &CspMatrix, i: usize, j: usize) -> usize {
    a.get(i, j).to_integer().to_usize().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn halfspaces_agree_with_verify_on_random_matrices(a in small_matrix()) {
        prop_assert_eq!(membership_by_halfspaces(&a), a.verify());
    }

    #[test]
    fn halfspaces_agree_with_verify_on_csp_matrices(a in csp_matrix()) {
        prop_assert!(a.verify());
        prop_assert!(membership_by_halfspaces(&a));
    }

    /// Orbit sizes from the column sums, statistics from the rows: the ad-hoc
    /// action carrying those statistics has `A` as its matrix.
    #[test]
    fn every_integer_csp_matrix_is_realized(a in csp_matrix()) {
        let n = a.n();
        let counts: Vec<BigInt> = a.column_sums().iter().map(|c| c.to_integer()).collect();
        let act = build_adhoc_action(&OrbitProfile::new(n, counts).unwrap());
        let mut stats: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
        for j in 1..=n {
            for i in 0..n {
                stats[j].extend(std::iter::repeat_n(i as u64, entry(&a, i, j)));
            }
        }
        let mut next = vec![0usize; n + 1];
        let total = act.len().to_usize().unwrap();
        let elements: Vec<(usize, u64)> = (0..total)
            .map(|label| {
                let order = act.order_of(&BigInt::from(label)).unwrap();
                let s = stats[order][next[order]];
                next[order] += 1;
                (order, s)
            })
            .collect();
        prop_assert_eq!(CspMatrix::from_triple(n, elements).unwrap(), a);
    }

    #[test]
    fn decomposition_prefixes_stay_in_the_cone(a in csp_matrix()) {
        let u = project_universal(&a).unwrap();
        let swaps = swap_decompose(&a, &u).unwrap();
        let mut cur = u;
        for sw in &swaps {
            cur = apply_swap(&cur, sw).unwrap();
            prop_assert!(cur.verify());
        }
        prop_assert_eq!(cur, a);
    }

    #[test]
    fn conic_combinations_stay_in_the_cone(
        (a, b) in prop::sample::select(SIZES.to_vec()).prop_flat_map(|n| (csp_matrix_of(n), csp_matrix_of(n))),
        s in 0i64..5,
        t in 1i64..5,
    ) {
        let s = BigRational::new(s.into(), 3.into());
        let t = BigRational::new(1.into(), t.into());
        let c = a.conic_combination(&s, &b, &t).unwrap();
        prop_assert!(c.verify());
        prop_assert!(membership_by_halfspaces(&c));
    }
}
