//! Integer polynomials modulo `q^n - 1` and their values at `n`-th roots of unity.
//!
//! A polynomial of degree `< n` takes integer values at every `n`-th root of
//! unity exactly when its coefficients satisfy `a_j = a_{gcd(n, j)}`. Such
//! polynomials form a free module with the two divisor-indexed bases
//!
//! * `g_d = Σ_{gcd(j, n) = d} q^j`
//! * `h_d = 1 + q^d + q^{2d} + … + q^{n-d}`
//!
//! and `h_d(ω_n^k)` is `n/d` when `(n/d) | k` and `0` otherwise, which gives
//! every evaluation in pure integer arithmetic.
//!
//! Exponent `0` belongs to divisor `n` throughout, since `gcd(n, 0) = n`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{divisors, gcd, mobius};
use crate::error::{Error, Result};
use crate::json::bigint_vec;

/// `f(q) mod q^n - 1`, stored as `n` coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CycPolyRepr", into = "CycPolyRepr")]
pub struct CycPoly {
    n: usize,
    coeffs: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct CycPolyRepr {
    n: usize,
    #[serde(with = "bigint_vec")]
    coeffs: Vec<BigInt>,
}

impl TryFrom<CycPolyRepr> for CycPoly {
    type Error = Error;
    fn try_from(r: CycPolyRepr) -> Result<Self> {
        CycPoly::new(r.n, r.coeffs)
    }
}

impl From<CycPoly> for CycPolyRepr {
    fn from(p: CycPoly) -> Self {
        CycPolyRepr { n: p.n, coeffs: p.coeffs }
    }
}

impl CycPoly {
    /// Wraps an already-reduced coefficient vector of length exactly `n`.
    pub fn new(n: usize, coeffs: Vec<BigInt>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        if coeffs.len() != n {
            return Err(Error::LengthMismatch { expected: n, actual: coeffs.len() });
        }
        Ok(CycPoly { n, coeffs })
    }

    /// Folds exponents modulo `n`: `coeffs[i] = Σ_{j ≡ i (mod n)} raw[j]`.
    pub fn reduce(raw: &[BigInt], n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        let mut coeffs = vec![BigInt::zero(); n];
        for (j, c) in raw.iter().enumerate() {
            coeffs[j % n] += c;
        }
        Ok(CycPoly { n, coeffs })
    }

    pub fn from_i64s(n: usize, coeffs: &[i64]) -> Result<Self> {
        let raw: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        Self::reduce(&raw, n)
    }

    /// The basis element `h_d`. `d` must divide `n`.
    pub fn h_basis(n: usize, d: usize) -> Self {
        assert!(d > 0 && n.is_multiple_of(d), "{d} does not divide {n}");
        let coeffs = (0..n)
            .map(|j| if j % d == 0 { BigInt::one() } else { BigInt::zero() })
            .collect();
        CycPoly { n, coeffs }
    }

    /// The basis element `g_d`. `d` must divide `n`.
    pub fn g_basis(n: usize, d: usize) -> Self {
        assert!(d > 0 && n.is_multiple_of(d), "{d} does not divide {n}");
        let coeffs = (0..n)
            .map(|j| if gcd(n, j) == d { BigInt::one() } else { BigInt::zero() })
            .collect();
        CycPoly { n, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `f(1)`, the sum of the coefficients.
    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// First exponent `j` with `a_j ≠ a_{gcd(n, j)}`, if any.
    pub fn first_violation(&self) -> Option<usize> {
        (1..self.n).find(|&j| self.coeffs[j] != self.coeffs[gcd(self.n, j) % self.n])
    }

    /// Whether `f(ω_n^k)` is an integer for every `k`.
    pub fn is_integral_at_roots(&self) -> bool {
        self.first_violation().is_none()
    }

    fn check_member(&self) -> Result<()> {
        match self.first_violation() {
            None => Ok(()),
            Some(index) => Err(Error::NotInModule { n: self.n, index }),
        }
    }

    /// Coordinates in both divisor bases.
    pub fn to_divisor_bases(&self) -> Result<DivisorDecomp> {
        self.check_member()?;
        let n = self.n;
        let coeffs_g: BTreeMap<usize, BigInt> = divisors(n)
            .iter()
            .map(|&d| (d, self.coeffs[d % n].clone()))
            .collect();
        // g_d = Σ_{d | r | n} μ(r/d) h_r, so the h-coordinate of r collects μ(r/d) a_d.
        let coeffs_h = divisors(n)
            .iter()
            .map(|&r| {
                let c = divisors(r).iter().fold(BigInt::zero(), |acc, &d| {
                    match mobius(r / d) {
                        0 => acc,
                        1 => acc + &coeffs_g[&d],
                        _ => acc - &coeffs_g[&d],
                    }
                });
                (r, c)
            })
            .collect();
        Ok(DivisorDecomp { n, coeffs_h, coeffs_g })
    }

    /// `(f(ω_n^1), …, f(ω_n^n))`, exactly.
    pub fn eval_table(&self) -> Result<EvalTable> {
        Ok(self.to_divisor_bases()?.eval_table())
    }
}

/// Coordinates of a member of `M(n)` in the `g_d` and `h_d` bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorDecomp {
    pub n: usize,
    pub coeffs_h: BTreeMap<usize, BigInt>,
    pub coeffs_g: BTreeMap<usize, BigInt>,
}

impl DivisorDecomp {
    pub fn reconstruct_from_h(&self) -> CycPoly {
        let mut coeffs = vec![BigInt::zero(); self.n];
        for (&d, c) in &self.coeffs_h {
            for j in (0..self.n).step_by(d) {
                coeffs[j] += c;
            }
        }
        CycPoly { n: self.n, coeffs }
    }

    pub fn reconstruct_from_g(&self) -> CycPoly {
        let coeffs = (0..self.n)
            .map(|j| self.coeffs_g[&gcd(self.n, j)].clone())
            .collect();
        CycPoly { n: self.n, coeffs }
    }

    /// `values[k] = Σ_{d | n, (n/d) | k} c_d · n/d`.
    pub fn eval_table(&self) -> EvalTable {
        let n = self.n;
        let values = (1..=n)
            .map(|k| {
                self.coeffs_h
                    .iter()
                    .filter(|(&d, _)| k % (n / d) == 0)
                    .fold(BigInt::zero(), |acc, (&d, c)| acc + c * BigInt::from(n / d))
            })
            .collect();
        EvalTable { n, values }
    }
}

/// Exact values `f(ω_n^k)` for `k = 1..=n`; `values[0]` holds `k = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "EvalTableRepr", into = "EvalTableRepr")]
pub struct EvalTable {
    n: usize,
    values: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct EvalTableRepr {
    n: usize,
    #[serde(with = "bigint_vec")]
    values: Vec<BigInt>,
}

impl TryFrom<EvalTableRepr> for EvalTable {
    type Error = Error;
    fn try_from(r: EvalTableRepr) -> Result<Self> {
        EvalTable::new(r.n, r.values)
    }
}

impl From<EvalTable> for EvalTableRepr {
    fn from(t: EvalTable) -> Self {
        EvalTableRepr { n: t.n, values: t.values }
    }
}

impl EvalTable {
    pub fn new(n: usize, values: Vec<BigInt>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        if values.len() != n {
            return Err(Error::LengthMismatch { expected: n, actual: values.len() });
        }
        Ok(EvalTable { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// `f(ω_n^k)` for `1 ≤ k ≤ n`.
    pub fn at(&self, k: usize) -> &BigInt {
        &self.values[k - 1]
    }

    /// Whether `values[k] = values[gcd(n, k)]` for all `k`, which holds for
    /// every table produced from a member of `M(n)`.
    pub fn is_gcd_invariant(&self) -> bool {
        (1..=self.n).all(|k| self.at(k) == self.at(gcd(self.n, k)))
    }

    pub fn into_values(self) -> Vec<BigInt> {
        self.values
    }
}

/// A polynomial in `m` variables with degree `< n_i` in variable `i`.
///
/// Coefficients are stored densely in row-major order, the last variable
/// varying fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    moduli: Vec<usize>,
    coeffs: Vec<BigInt>,
}

impl MultiPoly {
    pub fn new(moduli: Vec<usize>, coeffs: Vec<BigInt>) -> Result<Self> {
        if moduli.contains(&0) {
            return Err(Error::ZeroModulus);
        }
        let len: usize = moduli.iter().product();
        if coeffs.len() != len {
            return Err(Error::LengthMismatch { expected: len, actual: coeffs.len() });
        }
        Ok(MultiPoly { moduli, coeffs })
    }

    pub fn zero(moduli: Vec<usize>) -> Result<Self> {
        let len = moduli.iter().product();
        Self::new(moduli, vec![BigInt::zero(); len])
    }

    /// `∏_i h^{(i)}_{d_i}(q_i)`.
    pub fn h_product(moduli: &[usize], ds: &[usize]) -> Self {
        let mut map = BTreeMap::new();
        map.insert(ds.to_vec(), BigInt::one());
        Self::from_h_coefficients(moduli, &map)
    }

    pub fn moduli(&self) -> &[usize] {
        &self.moduli
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn offset(&self, idx: &[usize]) -> usize {
        idx.iter()
            .zip(&self.moduli)
            .fold(0, |acc, (&i, &n)| acc * n + i)
    }

    fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.moduli.len()];
        for (slot, &n) in idx.iter_mut().zip(&self.moduli).rev() {
            *slot = flat % n;
            flat /= n;
        }
        idx
    }

    pub fn get(&self, idx: &[usize]) -> &BigInt {
        &self.coeffs[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: BigInt) {
        let o = self.offset(idx);
        self.coeffs[o] = value;
    }

    /// Multi-index with each exponent replaced by `gcd(n_i, e_i) mod n_i`.
    fn canonical(&self, idx: &[usize]) -> Vec<usize> {
        idx.iter()
            .zip(&self.moduli)
            .map(|(&e, &n)| gcd(n, e) % n)
            .collect()
    }

    /// Integer-valued at all points `(ω_{n_1}^{j_1}, …, ω_{n_m}^{j_m})`.
    ///
    /// Slices along every axis must agree with the slice at `gcd(n_i, k)`,
    /// which is the same as every coefficient matching its canonical index.
    pub fn is_integral_at_roots(&self) -> bool {
        (0..self.coeffs.len()).all(|flat| {
            let idx = self.unflatten(flat);
            self.coeffs[flat] == *self.get(&self.canonical(&idx))
        })
    }

    /// Coordinates in the product basis `{∏ h^{(i)}_{d_i}}`, keyed by `(d_1, …, d_m)`.
    pub fn decompose(&self) -> Result<BTreeMap<Vec<usize>, BigInt>> {
        if let Some(flat) = (0..self.coeffs.len()).find(|&flat| {
            let idx = self.unflatten(flat);
            self.coeffs[flat] != *self.get(&self.canonical(&idx))
        }) {
            let idx = self.unflatten(flat);
            let axis = idx
                .iter()
                .zip(&self.moduli)
                .position(|(&e, &n)| e != gcd(n, e) % n)
                .unwrap_or(0);
            return Err(Error::NotInModule { n: self.moduli[axis], index: idx[axis] });
        }
        // g-coordinates a_{d_1..d_m}, then Möbius inversion along each axis in turn.
        let axes: Vec<Vec<usize>> = self.moduli.iter().map(|&n| divisors(n).to_vec()).collect();
        let mut coords: BTreeMap<Vec<usize>, BigInt> = cartesian(&axes)
            .into_iter()
            .map(|ds| {
                let idx: Vec<usize> = ds.iter().zip(&self.moduli).map(|(&d, &n)| d % n).collect();
                let v = self.get(&idx).clone();
                (ds, v)
            })
            .collect();
        for axis in 0..self.moduli.len() {
            let mut next = BTreeMap::new();
            for ds in coords.keys() {
                let r = ds[axis];
                let mut acc = BigInt::zero();
                for &d in divisors(r).iter() {
                    let mut key = ds.clone();
                    key[axis] = d;
                    match mobius(r / d) {
                        0 => {}
                        1 => acc += &coords[&key],
                        _ => acc -= &coords[&key],
                    }
                }
                next.insert(ds.clone(), acc);
            }
            coords = next;
        }
        Ok(coords)
    }

    pub fn from_h_coefficients(moduli: &[usize], coeffs: &BTreeMap<Vec<usize>, BigInt>) -> Self {
        let mut p = MultiPoly::zero(moduli.to_vec()).expect("positive moduli");
        for flat in 0..p.coeffs.len() {
            let idx = p.unflatten(flat);
            let mut acc = BigInt::zero();
            for (ds, c) in coeffs {
                if ds.iter().zip(&idx).all(|(&d, &e)| e % d == 0) {
                    acc += c;
                }
            }
            p.coeffs[flat] = acc;
        }
        p
    }

    /// `f(ω_{n_1}^{k_1}, …, ω_{n_m}^{k_m})` through the product basis.
    pub fn evaluate(&self, ks: &[usize]) -> Result<BigInt> {
        let coeffs = self.decompose()?;
        Ok(coeffs.iter().fold(BigInt::zero(), |acc, (ds, c)| {
            let mut term = c.clone();
            for ((&d, &n), &k) in ds.iter().zip(&self.moduli).zip(ks) {
                if k % (n / d) == 0 {
                    term *= n / d;
                } else {
                    return acc;
                }
            }
            acc + term
        }))
    }
}

fn cartesian(axes: &[Vec<usize>]) -> Vec<Vec<usize>> {
    axes.iter().fold(vec![Vec::new()], |acc, axis| {
        acc.into_iter()
            .flat_map(|prefix| {
                axis.iter().map(move |&d| {
                    let mut v = prefix.clone();
                    v.push(d);
                    v
                })
            })
            .collect()
    })
}
