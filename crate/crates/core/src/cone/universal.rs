use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::CspMatrix;
use crate::error::{Error, Result};
use crate::sieve::OrbitProfile;

/// Column sums `(S_1, …, S_n)` of a universal CSP matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalVector {
    n: usize,
    #[serde(with = "crate::json::rational_vec")]
    s: Vec<BigRational>,
}

impl UniversalVector {
    /// Requires `S_j ≥ 0` and `S_j = 0` for `j ∤ n`.
    pub fn new(n: usize, s: Vec<BigRational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        if s.len() != n {
            return Err(Error::LengthMismatch { expected: n, actual: s.len() });
        }
        for (idx, x) in s.iter().enumerate() {
            let j = idx + 1;
            if x.is_negative() {
                return Err(Error::InvalidUniversalVector(format!("S_{j} is negative")));
            }
            if !n.is_multiple_of(j) && !x.is_zero() {
                return Err(Error::InvalidUniversalVector(format!("S_{j} must be 0 since {j} does not divide {n}")));
            }
        }
        Ok(UniversalVector { n, s })
    }

    /// As [`UniversalVector::new`], additionally requiring `j | S_j`.
    pub fn new_integer(n: usize, s: Vec<BigInt>) -> Result<Self> {
        for (idx, x) in s.iter().enumerate() {
            let j = idx + 1;
            if (x % BigInt::from(j)) != BigInt::zero() {
                return Err(Error::InvalidUniversalVector(format!("{j} does not divide S_{j} = {x}")));
            }
        }
        Self::new(n, s.into_iter().map(BigRational::from_integer).collect())
    }

    pub fn from_i64s(n: usize, s: &[i64]) -> Result<Self> {
        Self::new(n, s.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    pub fn from_profile(p: &OrbitProfile) -> Self {
        UniversalVector {
            n: p.n(),
            s: p.counts().iter().cloned().map(BigRational::from_integer).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `S_j` at position `j - 1`.
    pub fn values(&self) -> &[BigRational] {
        &self.s
    }

    /// `|s| = Σ S_j`.
    pub fn total(&self) -> BigRational {
        self.s.iter().sum()
    }

    pub fn is_integral(&self) -> bool {
        self.s
            .iter()
            .enumerate()
            .all(|(idx, x)| x.is_integer() && (x.numer() % BigInt::from(idx + 1)).is_zero())
    }

    /// The universal matrix: `K_j = S_j / j` in every row `i ≡ 0 (mod n/j)` of column `j`.
    pub fn universal_matrix(&self) -> CspMatrix {
        let n = self.n;
        let mut m = CspMatrix::zeros(n).expect("n is positive");
        for j in (1..=n).filter(|j| n.is_multiple_of(*j)) {
            let k = &self.s[j - 1] / BigRational::from_integer(j.into());
            if k.is_zero() {
                continue;
            }
            for i in (0..n).step_by(n / j) {
                m.set(i, j, k.clone());
            }
        }
        m
    }

    /// `(s ⊠ t)_k = Σ_{ij = k} S_i T_j`, a vector over `mn`.
    pub fn box_product(&self, other: &UniversalVector) -> UniversalVector {
        let mn = self.n * other.n;
        let mut out = vec![BigRational::zero(); mn];
        for (i, a) in self.s.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.s.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                out[(i + 1) * (j + 1) - 1] += a * b;
            }
        }
        UniversalVector { n: mn, s: out }
    }
}

/// The universal matrix with the same column sums as `a`.
pub fn project_universal(a: &CspMatrix) -> Result<CspMatrix> {
    if !a.verify() {
        return Err(Error::NotCsp);
    }
    Ok(UniversalVector::new(a.n(), a.column_sums())?.universal_matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::matrix::tests::{binary_words, int};
    use proptest::prelude::*;

    fn r(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn example_vector() {
        let u = UniversalVector::from_i64s(6, &[2, 2, 6, 0, 0, 54]).unwrap().universal_matrix();
        let want = int(&[
            &[2, 1, 2, 0, 0, 9],
            &[0, 0, 0, 0, 0, 9],
            &[0, 0, 2, 0, 0, 9],
            &[0, 1, 0, 0, 0, 9],
            &[0, 0, 2, 0, 0, 9],
            &[0, 0, 0, 0, 0, 9],
        ]);
        assert_eq!(u, want);
        assert!(u.verify());
        assert_eq!(project_universal(&binary_words()).unwrap(), want);
        assert_eq!(project_universal(&want).unwrap(), want);
    }

    #[test]
    fn trivial_vectors() {
        let u = UniversalVector::from_i64s(4, &[5, 0, 0, 0]).unwrap().universal_matrix();
        assert_eq!(u, int(&[&[5, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]));
        let u = UniversalVector::from_i64s(3, &[0, 0, 3]).unwrap().universal_matrix();
        assert_eq!(u, int(&[&[0, 0, 1], &[0, 0, 1], &[0, 0, 1]]));
    }

    #[test]
    fn invalid_vectors() {
        assert!(UniversalVector::from_i64s(4, &[0, 0, 1, 0]).is_err());
        assert!(UniversalVector::from_i64s(2, &[-1, 0]).is_err());
        assert!(UniversalVector::new_integer(4, vec![0.into(), 1.into(), 0.into(), 0.into()]).is_err());
        assert!(UniversalVector::from_i64s(2, &[1]).is_err());
        let e = int(&[&[0, 0], &[1, 0]]);
        assert!(matches!(project_universal(&e), Err(Error::NotCsp)));
    }

    #[test]
    fn box_examples() {
        let one = UniversalVector::from_i64s(1, &[1]).unwrap();
        let t = UniversalVector::from_i64s(6, &[2, 2, 6, 0, 0, 54]).unwrap();
        assert_eq!(one.box_product(&t), t);
        let s = UniversalVector::from_i64s(2, &[0, 2]).unwrap();
        let t = UniversalVector::from_i64s(3, &[0, 0, 3]).unwrap();
        let st = s.box_product(&t);
        assert_eq!(st, UniversalVector::from_i64s(6, &[0, 0, 0, 0, 0, 6]).unwrap());
    }

    fn vector(n: usize) -> impl Strategy<Value = UniversalVector> {
        prop::collection::vec(0i64..5, n).prop_map(move |v| {
            let s: Vec<i64> = v
                .iter()
                .enumerate()
                .map(|(idx, &x)| if n.is_multiple_of(idx + 1) { x * (idx as i64 + 1) } else { 0 })
                .collect();
            UniversalVector::from_i64s(n, &s).unwrap()
        })
    }

    fn any_vector() -> impl Strategy<Value = UniversalVector> {
        (1usize..7).prop_flat_map(vector)
    }

    proptest! {
        #[test]
        fn universal_matrices_verify(s in any_vector()) {
            let u = s.universal_matrix();
            prop_assert!(u.verify());
            prop_assert_eq!(u.column_sums(), s.values().to_vec());
            prop_assert_eq!(project_universal(&u).unwrap(), u.clone());
            // R_i = Σ_{j : (n/j) | i} S_j / j
            let n = s.n();
            for (i, ri) in u.row_sums().into_iter().enumerate() {
                let want: BigRational = (1..=n)
                    .filter(|j| n % j == 0 && i % (n / j) == 0)
                    .map(|j| &s.values()[j - 1] / r(j as i64))
                    .sum();
                prop_assert_eq!(ri, want);
            }
        }

        #[test]
        fn box_product_laws(a in any_vector(), b in any_vector(), c in any_vector()) {
            let ab = a.box_product(&b);
            prop_assert_eq!(ab.total(), a.total() * b.total());
            prop_assert_eq!(&ab, &b.box_product(&a));
            prop_assert_eq!(ab.box_product(&c), a.box_product(&b.box_product(&c)));
            prop_assert!(ab.is_integral());
            prop_assert!(UniversalVector::new(ab.n(), ab.values().to_vec()).is_ok());
            prop_assert!(ab.universal_matrix().verify());
        }
    }
}
