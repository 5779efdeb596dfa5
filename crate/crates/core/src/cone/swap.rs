use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::matrix::CspMatrix;
use crate::error::{Error, Result};

/// `δ_a(u, v) = a (E_u + E_v - E_{(v_1, u_2)} - E_{(u_1, v_2)})`.
///
/// Cells are `(row, column)` with 0-based rows and 1-based columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Swap {
    u: (usize, usize),
    v: (usize, usize),
    #[serde(with = "rational")]
    a: BigRational,
}

mod rational {
    use crate::json::JsonRational;
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(a: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        JsonRational(a.clone()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        Ok(JsonRational::deserialize(d)?.0)
    }
}

impl Swap {
    pub fn new(u: (usize, usize), v: (usize, usize), a: BigRational) -> Result<Self> {
        if u.0 == v.0 || u.1 == v.1 {
            return Err(Error::DegenerateSwap);
        }
        Ok(Swap { u, v, a })
    }

    pub fn unit(u: (usize, usize), v: (usize, usize)) -> Result<Self> {
        Self::new(u, v, BigRational::one())
    }

    pub fn u(&self) -> (usize, usize) {
        self.u
    }

    pub fn v(&self) -> (usize, usize) {
        self.v
    }

    pub fn amount(&self) -> &BigRational {
        &self.a
    }

    /// The four cells touched, with their signs.
    fn terms(&self) -> [((usize, usize), bool); 4] {
        let (u, v) = (self.u, self.v);
        [(u, true), (v, true), ((v.0, u.1), false), ((u.0, v.1), false)]
    }
}

/// `A + δ`, rejecting results with a negative entry.
pub fn apply_swap(a: &CspMatrix, sw: &Swap) -> Result<CspMatrix> {
    let mut out = a.clone();
    for ((i, j), plus) in sw.terms() {
        out.check_cell(i, j)?;
        let cur = out.get(i, j).clone();
        let next = if plus { cur + &sw.a } else { cur - &sw.a };
        if next.is_negative() {
            return Err(Error::NegativeEntry { row: i, col: j });
        }
        out.set(i, j, next);
    }
    Ok(out)
}

/// Whether `A + δ` stays non-negative and still satisfies the CSP condition.
pub fn swap_preserves(a: &CspMatrix, sw: &Swap) -> bool {
    apply_swap(a, sw).is_ok_and(|b| b.verify() == a.verify())
}

/// Unit swaps taking `b` to `a`, in an order where every partial sum is non-negative.
///
/// Both matrices must be integral with the same row and column sums.
pub fn swap_decompose(a: &CspMatrix, b: &CspMatrix) -> Result<Vec<Swap>> {
    let n = a.n();
    if n != b.n() {
        return Err(Error::SizeMismatch(n, b.n()));
    }
    if !a.is_integer() || !b.is_integer() {
        return Err(Error::NotInteger);
    }
    if a.row_sums() != b.row_sums() || a.column_sums() != b.column_sums() {
        return Err(Error::MismatchedMargins);
    }
    let to_int = |m: &CspMatrix| -> Vec<BigInt> { m.entries().iter().map(|x| x.to_integer()).collect() };
    let mut cur = to_int(a);
    let target = to_int(b);
    let idx = |i: usize, j: usize| i * n + j - 1;

    let mut found = Vec::new();
    // Peel one unit swap off the current matrix until it reaches the target.
    while let Some(pos) = (0..n * n).find(|&p| cur[p] < target[p]) {
        let (i, j) = (pos / n, pos % n + 1);
        let j2 = (1..=n)
            .find(|&c| cur[idx(i, c)] > target[idx(i, c)])
            .expect("equal row sums force a surplus in the row");
        let i2 = (0..n)
            .find(|&r| cur[idx(r, j)] > target[idx(r, j)])
            .expect("equal column sums force a surplus in the column");
        let sw = Swap::unit((i, j2), (i2, j))?;
        cur[idx(i, j2)] -= 1;
        cur[idx(i2, j)] -= 1;
        cur[idx(i2, j2)] += 1;
        cur[idx(i, j)] += 1;
        found.push(sw);
    }
    debug_assert_eq!(cur, target);
    found.reverse();
    Ok(found)
}

/// `b` plus each prefix of `swaps`, starting with `b` itself.
pub fn prefix_sums(b: &CspMatrix, swaps: &[Swap]) -> Result<Vec<CspMatrix>> {
    let mut out = vec![b.clone()];
    for sw in swaps {
        let next = apply_swap(out.last().expect("non-empty"), sw)?;
        out.push(next);
    }
    Ok(out)
}
