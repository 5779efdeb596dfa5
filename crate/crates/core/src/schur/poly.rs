use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exactroots::CycPoly;

/// Dense integer polynomial in `q`, indexed by exponent, without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<crate::json::JsonInt>", into = "Vec<crate::json::JsonInt>")]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: usize, c: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        Self::new(coeffs)
    }

    /// `[k]_q = 1 + q + … + q^{k-1}`.
    pub fn q_integer(k: usize) -> Self {
        Self::new(vec![BigInt::one(); k])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Multiplies by `1 - q^h` in place.
    pub fn mul_one_minus_qh(&mut self, h: usize) {
        if self.is_zero() || h == 0 {
            *self = Self::zero();
            return;
        }
        let len = self.coeffs.len();
        self.coeffs.resize(len + h, BigInt::zero());
        for i in (h..len + h).rev() {
            let sub = self.coeffs[i - h].clone();
            self.coeffs[i] -= sub;
        }
        *self = Self::new(std::mem::take(&mut self.coeffs));
    }

    /// Divides by `1 - q^h`, returning `None` if the division is not exact.
    pub fn div_one_minus_qh(&self, h: usize) -> Option<Self> {
        if h == 0 {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let len = self.coeffs.len();
        if len <= h {
            return None;
        }
        // N = (1 - q^h) R gives R_i = N_i + R_{i-h}.
        let mut r: Vec<BigInt> = Vec::with_capacity(len - h);
        for i in 0..len - h {
            let mut v = self.coeffs[i].clone();
            if i >= h {
                v += &r[i - h];
            }
            r.push(v);
        }
        // The top h coefficients of N must equal -R_{i-h}.
        for i in len - h..len {
            let mut v = self.coeffs[i].clone();
            if i >= h {
                v += &r[i - h];
            }
            if !v.is_zero() {
                return None;
            }
        }
        Some(Self::new(r))
    }

    /// Exact division by `[k]_q`, `None` if inexact.
    pub fn div_q_integer(&self, k: usize) -> Option<Self> {
        let mut t = self.clone();
        t.mul_one_minus_qh(1);
        t.div_one_minus_qh(k)
    }

    /// Coefficient-wise reduction modulo `q^n - 1`.
    pub fn reduce_mod(&self, n: usize) -> crate::error::Result<CycPoly> {
        CycPoly::reduce(&self.coeffs, n)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl From<Vec<crate::json::JsonInt>> for IntPolynomial {
    fn from(v: Vec<crate::json::JsonInt>) -> Self {
        Self::new(v.into_iter().map(|x| x.0).collect())
    }
}

impl From<IntPolynomial> for Vec<crate::json::JsonInt> {
    fn from(p: IntPolynomial) -> Self {
        p.coeffs.into_iter().map(crate::json::JsonInt).collect()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, abs) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || i == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        Ok(())
    }
}

/// Gaussian binomial `[n choose k]_q`; zero when `k > n`.
pub fn q_binomial(n: usize, k: usize) -> IntPolynomial {
    if k > n {
        return IntPolynomial::zero();
    }
    let k = k.min(n - k);
    // prod_{i=1..k} (1 - q^{n-k+i}) / (1 - q^i), each partial quotient is a q-binomial.
    let mut p = IntPolynomial::one();
    for i in 1..=k {
        p.mul_one_minus_qh(n - k + i);
        p = p
            .div_one_minus_qh(i)
            .expect("partial products of a q-binomial are polynomials");
    }
    p
}

/// MacMahon's `q`-Catalan number `[2n choose n]_q / [n+1]_q`.
pub fn q_catalan(n: usize) -> IntPolynomial {
    q_binomial(2 * n, n)
        .div_q_integer(n + 1)
        .expect("q-Catalan numbers are polynomials")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Subset-sum generating function of `k`-subsets of `{0..n-1}`, shifted so the minimum is 0.
    fn q_binomial_by_subsets(n: usize, k: usize) -> IntPolynomial {
        let mut acc = vec![0i64; k * n.saturating_sub(k) + 1];
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let s: usize = (0..n).filter(|i| mask >> i & 1 == 1).sum();
            acc[s - k * (k.saturating_sub(1)) / 2] += 1;
        }
        IntPolynomial::from_i64s(&acc)
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(q_binomial(4, 2), IntPolynomial::from_i64s(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(7, 0), IntPolynomial::one());
        assert_eq!(q_binomial(2, 3), IntPolynomial::zero());
        for n in 0..10 {
            for k in 0..=n {
                assert_eq!(q_binomial(n, k), q_binomial_by_subsets(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(q_catalan(2), IntPolynomial::from_i64s(&[1, 0, 1]));
        assert_eq!(q_catalan(3), IntPolynomial::from_i64s(&[1, 0, 1, 1, 1, 0, 1]));
        let at_one: Vec<BigInt> = (0..8).map(|n| q_catalan(n).value_at_one()).collect();
        let want: Vec<BigInt> = [1, 1, 2, 5, 14, 42, 132, 429].map(BigInt::from).into();
        assert_eq!(at_one, want);
    }

    #[test]
    fn catalan_matches_dyck_path_major_index() {
        // Dyck words as up=0/down=1; sum of descent positions i where w_i=1 and w_{i+1}=0.
        for n in 1..7 {
            let mut acc = vec![0i64; n * n + 1];
            for mask in 0u32..(1 << (2 * n)) {
                if mask.count_ones() as usize != n {
                    continue;
                }
                let mut h = 0i32;
                let mut ok = true;
                for i in 0..2 * n {
                    h += if mask >> i & 1 == 1 { -1 } else { 1 };
                    if h < 0 {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    continue;
                }
                let maj: usize = (0..2 * n - 1)
                    .filter(|&i| mask >> i & 1 == 1 && mask >> (i + 1) & 1 == 0)
                    .map(|i| i + 1)
                    .sum();
                acc[maj] += 1;
            }
            assert_eq!(q_catalan(n), IntPolynomial::from_i64s(&acc), "n={n}");
        }
    }

    #[test]
    fn inexact_division_detected() {
        let p = IntPolynomial::from_i64s(&[1, 1, 1]);
        assert!(p.div_one_minus_qh(2).is_none());
        assert!(p.div_q_integer(2).is_none());
        assert_eq!(p.div_q_integer(3), Some(IntPolynomial::one()));
    }

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::from_i64s(&[10, 1, 0, 3, 0, 1]).to_string(), "10 + q + 3q^3 + q^5");
        assert_eq!(IntPolynomial::from_i64s(&[0, -1, 2]).to_string(), "-q + 2q^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    proptest! {
        #[test]
        fn one_minus_qh_round_trip(c in prop::collection::vec(-50i64..50, 0..12), h in 1usize..6) {
            let p = IntPolynomial::from_i64s(&c);
            let mut t = p.clone();
            t.mul_one_minus_qh(h);
            prop_assert_eq!(t.div_one_minus_qh(h), Some(p));
        }

        #[test]
        fn product_evaluates_as_product(a in prop::collection::vec(-9i64..9, 0..6),
                                        b in prop::collection::vec(-9i64..9, 0..6),
                                        x in -4i64..4) {
            let (pa, pb) = (IntPolynomial::from_i64s(&a), IntPolynomial::from_i64s(&b));
            let x = BigInt::from(x);
            prop_assert_eq!((&pa * &pb).eval(&x), pa.eval(&x) * pb.eval(&x));
            prop_assert_eq!((&pa + &pb).eval(&x), pa.eval(&x) + pb.eval(&x));
        }
    }
}
