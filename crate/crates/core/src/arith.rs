//! Small number-theoretic helpers shared by every module.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

static DIVISORS: OnceLock<RwLock<HashMap<usize, Arc<[usize]>>>> = OnceLock::new();

/// Divisors of `n` in increasing order. Results are cached per `n`.
///
/// `divisors(0)` is empty.
pub fn divisors(n: usize) -> Arc<[usize]> {
    let cache = DIVISORS.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(d) = cache.read().expect("divisor cache poisoned").get(&n) {
        return Arc::clone(d);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    let divs: Arc<[usize]> = small.into();
    cache
        .write()
        .expect("divisor cache poisoned")
        .insert(n, Arc::clone(&divs));
    divs
}

/// The classical Möbius function. `mobius(0)` is defined as 0.
pub fn mobius(k: usize) -> i32 {
    if k == 0 {
        return 0;
    }
    let mut k = k;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= k {
        if k.is_multiple_of(p) {
            k /= p;
            if k.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if k > 1 {
        sign = -sign;
    }
    sign
}

/// `gcd(n, i)` with the convention `gcd(n, 0) = n`.
pub fn gcd(a: usize, b: usize) -> usize {
    a.gcd(&b)
}

pub fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= p {
        if p.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial coefficient with a possibly negative upper index; `binom(n, k) = 0`
/// whenever `n < k` or `n < 0`, and `binom(n, -1) = 0`.
pub fn binomial_signed(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k || n < 0 {
        return BigInt::zero();
    }
    BigInt::from(binomial(n as u64, k as u64))
}

/// Dirichlet-style Möbius inversion over divisors: `out[k] = Σ_{j|k} μ(k/j) values[j]`
/// for `k = 1..=len` (both slices are 1-based through an offset of one).
pub fn mobius_invert(values: &[BigInt]) -> Vec<BigInt> {
    (1..=values.len())
        .map(|k| {
            divisors(k).iter().fold(BigInt::zero(), |acc, &j| {
                match mobius(k / j) {
                    0 => acc,
                    1 => acc + &values[j - 1],
                    _ => acc - &values[j - 1],
                }
            })
        })
        .collect()
}

/// Divisor partial sums: `out[k] = Σ_{j|k} values[j]` for `k = 1..=len`.
pub fn divisor_sums(values: &[BigInt]) -> Vec<BigInt> {
    (1..=values.len())
        .map(|k| {
            divisors(k)
                .iter()
                .fold(BigInt::zero(), |acc, &j| acc + &values[j - 1])
        })
        .collect()
}
