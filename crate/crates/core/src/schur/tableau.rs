use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::partition::Partition;
use super::poly::IntPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HookCell {
    pub row: usize,
    pub col: usize,
    pub hook: usize,
    pub content: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookData {
    pub cells: Vec<HookCell>,
    pub b: usize,
}

impl HookData {
    pub fn hooks(&self) -> impl Iterator<Item = usize> + '_ {
        self.cells.iter().map(|c| c.hook)
    }

    pub fn contents(&self) -> impl Iterator<Item = i64> + '_ {
        self.cells.iter().map(|c| c.content)
    }
}

pub fn hooks_and_contents(lambda: &Partition) -> HookData {
    let conj = lambda.conjugate();
    let cells = lambda
        .cells()
        .map(|(i, j)| HookCell {
            row: i,
            col: j,
            hook: (lambda.part(i) - j) + (conj.part(j) - i) - 1,
            content: j as i64 - i as i64,
        })
        .collect();
    HookData { cells, b: lambda.b_statistic() }
}

/// Number of semistandard tableaux of shape `λ` with entries in `{0,…,m-1}`.
pub fn ssyt_count(lambda: &Partition, m: usize) -> BigInt {
    if lambda.len() > m {
        return BigInt::zero();
    }
    let mut acc = BigRational::one();
    for c in hooks_and_contents(lambda).cells {
        let num = BigInt::from(m as i64 + c.content);
        acc *= BigRational::new(num, BigInt::from(c.hook));
    }
    debug_assert!(acc.is_integer());
    acc.to_integer()
}

/// `s_λ(1, q, …, q^{m-1})` from the hook-content formula, with exact division.
pub fn principal_specialization(lambda: &Partition, m: usize) -> IntPolynomial {
    if lambda.len() > m {
        return IntPolynomial::zero();
    }
    let data = hooks_and_contents(lambda);
    let mut num: Vec<usize> = data.contents().map(|c| (m as i64 + c) as usize).collect();
    let mut den: Vec<usize> = data.hooks().collect();
    num.sort_unstable();
    den.sort_unstable();
    let (num, den) = cancel_sorted(&num, &den);

    let mut p = IntPolynomial::one();
    for a in num {
        p.mul_one_minus_qh(a);
    }
    for h in den {
        p = p
            .div_one_minus_qh(h)
            .unwrap_or_else(|| panic!("inexact division by 1-q^{h} for shape {lambda}, m={m}"));
    }
    p.shift(data.b)
}

/// Removes the common part of two sorted multisets.
fn cancel_sorted(a: &[usize], b: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let (mut i, mut j) = (0, 0);
    let (mut ra, mut rb) = (Vec::new(), Vec::new());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Less => {
                ra.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                rb.push(b[j]);
                j += 1;
            }
        }
    }
    ra.extend_from_slice(&a[i..]);
    rb.extend_from_slice(&b[j..]);
    (ra, rb)
}

/// A filling of a Young diagram, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// `|T|`, the sum of the entries.
    pub fn weight(&self) -> usize {
        self.rows.iter().flatten().sum()
    }
}

/// Every semistandard tableau of shape `λ` with entries in `{0,…,m-1}`.
///
/// Intended as a brute-force reference for small shapes.
pub fn enumerate_ssyt(lambda: &Partition, m: usize) -> Vec<Tableau> {
    let cells: Vec<(usize, usize)> = lambda.cells().collect();
    let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| vec![0; p]).collect();
    let mut out = Vec::new();
    if lambda.len() > m {
        return out;
    }
    fill(&cells, 0, m, &mut rows, &mut out);
    out
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    m: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    let Some(&(i, j)) = cells.get(k) else {
        out.push(Tableau { rows: rows.clone() });
        return;
    };
    let mut lo = if j > 0 { rows[i][j - 1] } else { 0 };
    if i > 0 {
        lo = lo.max(rows[i - 1][j] + 1);
    }
    for v in lo..m {
        rows[i][j] = v;
        fill(cells, k + 1, m, rows, out);
    }
}

/// Every standard tableau of shape `λ`, entries `1..=|λ|`.
pub fn enumerate_syt(lambda: &Partition) -> Vec<Tableau> {
    let n = lambda.size();
    let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| vec![0; p]).collect();
    let mut filled = vec![0usize; lambda.len()];
    let mut out = Vec::new();
    place_syt(lambda, 1, n, &mut filled, &mut rows, &mut out);
    out
}

fn place_syt(
    lambda: &Partition,
    next: usize,
    n: usize,
    filled: &mut Vec<usize>,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if next > n {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    for i in 0..lambda.len() {
        let j = filled[i];
        if j < lambda.part(i) && (i == 0 || filled[i - 1] > j) {
            rows[i][j] = next;
            filled[i] += 1;
            place_syt(lambda, next + 1, n, filled, rows, out);
            filled[i] -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::binomial;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn hook_examples() {
        let one = hooks_and_contents(&p("1"));
        assert_eq!(one.cells, vec![HookCell { row: 0, col: 0, hook: 1, content: 0 }]);
        assert_eq!(one.b, 0);

        let sq = hooks_and_contents(&p("2,2"));
        assert_eq!(sq.hooks().collect::<Vec<_>>(), vec![3, 2, 2, 1]);
        assert_eq!(sq.contents().collect::<Vec<_>>(), vec![0, 1, -1, 0]);
        assert_eq!(sq.b, 2);
    }

    #[test]
    fn rectangle_hooks_follow_row_and_column_distance() {
        for a in 1..6 {
            for b in 1..6 {
                for c in hooks_and_contents(&Partition::rectangle(a, b)).cells {
                    assert_eq!(c.hook, (a - c.col - 1) + (b - c.row - 1) + 1);
                }
            }
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(ssyt_count(&p("2,2"), 2), BigInt::from(1));
        assert_eq!(ssyt_count(&p("2,1"), 3), BigInt::from(8));
        assert_eq!(ssyt_count(&p("1,1,1"), 2), BigInt::zero());
        assert_eq!(enumerate_ssyt(&p("2,1"), 3).len(), 8);
        let one: Vec<_> = enumerate_ssyt(&p("1"), 2).into_iter().map(|t| t.rows).collect();
        assert_eq!(one, vec![vec![vec![0]], vec![vec![1]]]);
        let sq = enumerate_ssyt(&p("2,2"), 2);
        assert_eq!(sq.len(), 1);
        assert_eq!(sq[0].weight(), 2);
    }

    #[test]
    fn rectangle_closed_form() {
        for a in 1..=5usize {
            for b in 1..=5usize {
                for m in 1..=5usize {
                    let mut want = BigRational::one();
                    for j in 0..a {
                        let top = binomial((m + j) as u64, b as u64);
                        let bot = binomial((b + j) as u64, b as u64);
                        want *= BigRational::new(top.into(), bot.into());
                    }
                    assert_eq!(
                        BigRational::from_integer(ssyt_count(&Partition::rectangle(a, b), m)),
                        want,
                        "a={a} b={b} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn specialization_examples() {
        for m in 1..7 {
            assert_eq!(principal_specialization(&p("1"), m), IntPolynomial::q_integer(m));
            for n in 0..6 {
                let row = Partition::rectangle(n, 1);
                assert_eq!(
                    principal_specialization(&row, m),
                    super::super::poly::q_binomial(n + m - 1, n)
                );
            }
        }
        assert_eq!(
            principal_specialization(&p("2,2"), 2),
            IntPolynomial::monomial(2, BigInt::one())
        );
    }

    #[test]
    fn specialization_matches_tableau_sum() {
        for w in 0..=5 {
            for lambda in Partition::all_of_size(w) {
                for m in 1..=4 {
                    let mut acc = vec![0i64; w * m + 1];
                    for t in enumerate_ssyt(&lambda, m) {
                        acc[t.weight()] += 1;
                    }
                    assert_eq!(
                        principal_specialization(&lambda, m),
                        IntPolynomial::from_i64s(&acc),
                        "λ={lambda} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn specialization_at_one_is_count() {
        for w in 0..=6 {
            for lambda in Partition::all_of_size(w) {
                for m in 1..=6 {
                    assert_eq!(
                        principal_specialization(&lambda, m).value_at_one(),
                        ssyt_count(&lambda, m),
                        "λ={lambda} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn standard_tableaux_hook_length() {
        for w in 0..=6usize {
            for lambda in Partition::all_of_size(w) {
                let prod: usize = hooks_and_contents(&lambda).hooks().product();
                let fact: usize = (1..=w).product();
                assert_eq!(enumerate_syt(&lambda).len(), fact / prod, "λ={lambda}");
            }
        }
    }
}
