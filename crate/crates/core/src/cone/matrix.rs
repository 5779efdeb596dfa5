use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::exactroots::CycPoly;
use crate::json::JsonRational;

/// Joint distribution of (statistic mod `n`, orbit order) as an `n × n` matrix.
///
/// Rows are residues `0..n`, columns are orders `1..=n`. Entries are
/// non-negative rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CspMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl CspMatrix {
    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(CspMatrix { n, entries: vec![BigRational::zero(); n * n] })
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = rows.len();
        let mut m = Self::zeros(n)?;
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::LengthMismatch { expected: n, actual: row.len() });
            }
            for (j, x) in row.into_iter().enumerate() {
                if x.is_negative() {
                    return Err(Error::NegativeEntry { row: i, col: j + 1 });
                }
                m.entries[i * n + j] = x;
            }
        }
        Ok(m)
    }

    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    /// Counts elements by `(stat mod n, order)`.
    pub fn from_triple<I>(n: usize, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, u64)>,
    {
        let mut m = Self::zeros(n)?;
        for (order, stat) in elements {
            if order == 0 || !n.is_multiple_of(order) {
                return Err(Error::OrderNotDividingN { order, n });
            }
            let i = (stat % n as u64) as usize;
            m.entries[i * n + order - 1] += BigRational::one();
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at row `i` (0-based) and column `j` (1-based).
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j - 1]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.n + j - 1] = v;
    }

    pub(crate) fn check_cell(&self, i: usize, j: usize) -> Result<()> {
        if i >= self.n || j == 0 || j > self.n {
            return Err(Error::CellOutOfRange { row: i, col: j, n: self.n });
        }
        Ok(())
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigRational]> {
        self.entries.chunks(self.n)
    }

    pub fn row_sums(&self) -> Vec<BigRational> {
        self.rows().map(|r| r.iter().sum()).collect()
    }

    /// Column sums, indexed by order `1..=n` at positions `0..n`.
    pub fn column_sums(&self) -> Vec<BigRational> {
        (1..=self.n)
            .map(|j| (0..self.n).map(|i| self.get(i, j)).sum())
            .collect()
    }

    /// `‖A‖`, the sum of all entries.
    pub fn norm(&self) -> BigRational {
        self.entries.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_integer(&self) -> bool {
        self.entries.iter().all(BigRational::is_integer)
    }

    /// `sA + tB` for non-negative `s`, `t`.
    pub fn conic_combination(&self, s: &BigRational, other: &CspMatrix, t: &BigRational) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let entries: Vec<BigRational> = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| s * a + t * b)
            .collect();
        if let Some(pos) = entries.iter().position(Signed::is_negative) {
            return Err(Error::NegativeEntry { row: pos / self.n, col: pos % self.n + 1 });
        }
        Ok(CspMatrix { n: self.n, entries })
    }

    /// Whether the matrix satisfies the CSP condition at every power of the generator.
    ///
    /// Denominators are cleared, the row sums become an integer polynomial in
    /// `q` of degree `< n`, and its exact values at `ω^k` are compared with the
    /// number of entries whose order divides `k`.
    pub fn verify(&self) -> bool {
        let n = self.n;
        let lcm = self
            .entries
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let scale = BigRational::from_integer(lcm);
        let row_poly: Vec<BigInt> = self
            .row_sums()
            .into_iter()
            .map(|r| (r * &scale).to_integer())
            .collect();
        let Ok(poly) = CycPoly::new(n, row_poly) else {
            return false;
        };
        let Ok(table) = poly.eval_table() else {
            return false;
        };
        let cols: Vec<BigInt> = self
            .column_sums()
            .into_iter()
            .map(|c| (c * &scale).to_integer())
            .collect();
        (1..=n).all(|k| {
            let fixed: BigInt = (1..=k).filter(|j| k % j == 0).map(|j| &cols[j - 1]).sum();
            *table.at(k) == fixed
        })
    }

    /// Interchanges rows `i` and `i2`.
    ///
    /// Allowed when `gcd(n, i) = gcd(n, i2)` or the two rows have the same sum.
    pub fn interchange_rows(&self, i: usize, i2: usize) -> Result<Self> {
        self.check_cell(i, 1)?;
        self.check_cell(i2, 1)?;
        let g = |r: usize| gcd(self.n, r);
        let sums = self.row_sums();
        if g(i) != g(i2) && sums[i] != sums[i2] {
            return Err(Error::GcdMismatch(i, i2));
        }
        let mut out = self.clone();
        for j in 1..=self.n {
            out.set(i, j, self.get(i2, j).clone());
            out.set(i2, j, self.get(i, j).clone());
        }
        Ok(out)
    }
}

impl fmt::Display for CspMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(crate::json::format_rational).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for (r, row) in cells.chunks(self.n).enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            f.write_str(&line.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixRepr {
    n: usize,
    rows: Vec<Vec<JsonRational>>,
}

impl Serialize for CspMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            n: self.n,
            rows: self
                .rows()
                .map(|r| r.iter().cloned().map(JsonRational).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CspMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(d)?;
        if repr.rows.len() != repr.n {
            return Err(serde::de::Error::custom(format!(
                "\"n\" is {} but {} rows were given",
                repr.n,
                repr.rows.len()
            )));
        }
        CspMatrix::from_rows(
            repr.rows
                .into_iter()
                .map(|r| r.into_iter().map(|x| x.0).collect())
                .collect(),
        )
        .map_err(serde::de::Error::custom)
    }
}
