use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::CspMatrix;
use crate::arith::divisors;
use crate::error::{Error, Result};
use crate::linalg::rank;

/// Coefficients `α_{ijk}` of the linear forms `H_k` describing the CSP cone.
///
/// The cone is parametrised by `x_{0,1}` and `x_{i,j}` for rows `i = 0..n`
/// and divisor indices `j = 2..=d`; column `c_j` of the matrix is `n x_{·,j}`
/// and column 1 is `(x_{0,1}, H_1(x), …, H_{n-1}(x))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfSpaceSystem {
    n: usize,
    divisors: Vec<usize>,
    alpha: Vec<i64>,
}

impl HalfSpaceSystem {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        let divs = divisors(n).to_vec();
        let d = divs.len();
        let ni = n as i64;
        let mut alpha = Vec::with_capacity(n * (d - 1) * (n - 1));
        for i in 0..n {
            for &c in &divs[1..] {
                let step = n / c;
                for k in 1..n {
                    let hit = k % step == 0;
                    let v = match (i == k, hit) {
                        (true, true) => -ni + step as i64,
                        (true, false) => -ni,
                        (false, true) => step as i64,
                        (false, false) => 0,
                    };
                    alpha.push(v);
                }
            }
        }
        Ok(HalfSpaceSystem { n, divisors: divs, alpha })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Divisors `c_1 < … < c_d`.
    pub fn divisors(&self) -> &[usize] {
        &self.divisors
    }

    /// `α_{ijk}` for row `i`, divisor index `j ∈ 2..=d` (1-based) and `k ∈ 1..n`.
    pub fn alpha(&self, i: usize, j: usize, k: usize) -> i64 {
        let d = self.divisors.len();
        assert!(i < self.n && (2..=d).contains(&j) && (1..self.n).contains(&k));
        self.alpha[(i * (d - 1) + (j - 2)) * (self.n - 1) + (k - 1)]
    }

    /// Number of parameters, `n(d-1) + 1`.
    pub fn dimension(&self) -> usize {
        self.n * (self.divisors.len() - 1) + 1
    }

    /// Position of `x_{i,j}` in the parameter vector; `x_{0,1}` is at 0.
    pub fn param_index(&self, i: usize, j: usize) -> usize {
        1 + (j - 2) * self.n + i
    }

    /// Coefficients of `H_k` over the parameter vector.
    pub fn h_row(&self, k: usize) -> Vec<BigRational> {
        let mut row = vec![BigRational::zero(); self.dimension()];
        for i in 0..self.n {
            for j in 2..=self.divisors.len() {
                row[self.param_index(i, j)] = BigRational::from_integer(self.alpha(i, j, k).into());
            }
        }
        row
    }

    /// `H_1(x), …, H_{n-1}(x)`.
    pub fn evaluate_h(&self, x: &[BigRational]) -> Vec<BigRational> {
        (1..self.n)
            .map(|k| self.h_row(k).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Reads the parameters off a matrix: `x_{0,1} = a_{0,1}`, `x_{i,j} = a_{i,c_j} / n`.
    pub fn parameters(&self, a: &CspMatrix) -> Result<Vec<BigRational>> {
        if a.n() != self.n {
            return Err(Error::SizeMismatch(a.n(), self.n));
        }
        let inv_n = BigRational::new(1.into(), self.n.into());
        let mut x = vec![BigRational::zero(); self.dimension()];
        x[0] = a.get(0, 1).clone();
        for (jdx, &c) in self.divisors.iter().enumerate().skip(1) {
            for i in 0..self.n {
                x[self.param_index(i, jdx + 1)] = a.get(i, c) * &inv_n;
            }
        }
        Ok(x)
    }

    /// The matrix with parameters `x`; fails if some `H_k(x)` or parameter is negative.
    pub fn matrix_from_parameters(&self, x: &[BigRational]) -> Result<CspMatrix> {
        if x.len() != self.dimension() {
            return Err(Error::LengthMismatch { expected: self.dimension(), actual: x.len() });
        }
        let n = self.n;
        let nn = BigRational::from_integer(n.into());
        let h = self.evaluate_h(x);
        let mut rows = vec![vec![BigRational::zero(); n]; n];
        rows[0][0] = x[0].clone();
        for k in 1..n {
            rows[k][0] = h[k - 1].clone();
        }
        for (jdx, &c) in self.divisors.iter().enumerate().skip(1) {
            for (i, row) in rows.iter_mut().enumerate() {
                row[c - 1] = &x[self.param_index(i, jdx + 1)] * &nn;
            }
        }
        CspMatrix::from_rows(rows)
    }

    /// Membership through the half-space description alone.
    pub fn contains(&self, a: &CspMatrix) -> bool {
        let n = self.n;
        if a.n() != n {
            return false;
        }
        let nondivisor_zero = (1..=n)
            .filter(|j| !n.is_multiple_of(*j))
            .all(|j| (0..n).all(|i| a.get(i, j).is_zero()));
        if !nondivisor_zero {
            return false;
        }
        let x = self.parameters(a).expect("sizes agree");
        // Parameters and column 1 are entries of a non-negative matrix, so only
        // the identities a_{k,1} = H_k(x) remain.
        self.evaluate_h(&x)
            .iter()
            .enumerate()
            .all(|(k, h)| h == a.get(k + 1, 1))
    }
}

pub fn halfspace_system(n: usize) -> Result<HalfSpaceSystem> {
    HalfSpaceSystem::new(n)
}

pub fn membership_by_halfspaces(a: &CspMatrix) -> bool {
    HalfSpaceSystem::new(a.n()).is_ok_and(|h| h.contains(a))
}

/// `n(d-1) + 1` with `d` the number of divisors of `n`.
pub fn cone_dimension(n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    n * (divisors(n).len() - 1) + 1
}

/// Rank of the constraints active at `a`, bounded by `cone_dimension(n) - 1`.
pub fn active_rank(a: &CspMatrix) -> Result<usize> {
    if !a.verify() {
        return Err(Error::NotCsp);
    }
    let sys = HalfSpaceSystem::new(a.n())?;
    let x = sys.parameters(a)?;
    let dim = sys.dimension();
    let mut rows = Vec::new();
    for (p, v) in x.iter().enumerate() {
        if v.is_zero() {
            let mut e = vec![BigRational::zero(); dim];
            e[p] = BigRational::one();
            rows.push(e);
        }
    }
    for (k, h) in sys.evaluate_h(&x).iter().enumerate() {
        if h.is_zero() {
            rows.push(sys.h_row(k + 1));
        }
    }
    Ok(rank(&rows))
}

/// Whether `a` spans an extreme ray: the active constraints have rank `dim - 1`.
pub fn is_extreme(a: &CspMatrix) -> Result<bool> {
    if !a.verify() {
        return Err(Error::NotCsp);
    }
    if a.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    Ok(active_rank(a)? + 1 == cone_dimension(a.n()))
}

/// Extreme rays indexed by a divisor `c` and `I ⊆ {t n / c : 1 ≤ t < c}`.
///
/// The ray has parameters `x_{0,c} = 1` and `x_{i,c} = 1 / (c - |I|)` for `i ∈ I`;
/// for `c = 1` it is `E_{0,1}`.
pub fn ray_family(n: usize) -> Result<Vec<CspMatrix>> {
    let sys = HalfSpaceSystem::new(n)?;
    let mut out = Vec::new();
    for (jdx, &c) in sys.divisors().iter().enumerate() {
        let rows: Vec<usize> = (1..c).map(|t| t * n / c).collect();
        for mask in 0u64..(1u64 << rows.len()) {
            let mut x = vec![BigRational::zero(); sys.dimension()];
            if c == 1 {
                x[0] = BigRational::one();
            } else {
                let chosen: Vec<usize> = (0..rows.len())
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| rows[b])
                    .collect();
                let w = BigRational::new(1.into(), (c - chosen.len()).into());
                x[sys.param_index(0, jdx + 1)] = BigRational::one();
                for i in chosen {
                    x[sys.param_index(i, jdx + 1)] = w.clone();
                }
            }
            out.push(sys.matrix_from_parameters(&x)?);
        }
    }
    Ok(out)
}
