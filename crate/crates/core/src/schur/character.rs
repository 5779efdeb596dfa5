use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::abacus::beta_set;
use super::partition::Partition;
use crate::error::{Error, Result};

/// `χ^λ` at the class of cycle type `α`, by the Murnaghan–Nakayama rule.
///
/// Strips of size `α_last` are removed first. `α` may be any composition.
pub fn mn_character(lambda: &Partition, alpha: &[usize]) -> Result<BigInt> {
    let total: usize = alpha.iter().sum();
    if total != lambda.size() {
        return Err(Error::WeightMismatch { partition: lambda.size(), cycle_type: total });
    }
    let alpha: Vec<usize> = alpha.iter().copied().filter(|&a| a > 0).collect();
    let mut beads = beta_set(lambda, lambda.len());
    beads.sort_unstable();
    let mut memo = HashMap::new();
    Ok(mn_rec(&mut beads, &alpha, &mut memo))
}

fn mn_rec(
    beads: &mut Vec<usize>,
    alpha: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), BigInt>,
) -> BigInt {
    let Some((&r, rest)) = alpha.split_last() else {
        return BigInt::from(1);
    };
    let key = (beads.clone(), alpha.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    // beads is sorted increasing; sliding x to x-r removes an r-strip whose
    // height is the number of beads strictly between.
    let mut acc = BigInt::zero();
    for idx in 0..beads.len() {
        let x = beads[idx];
        if x < r {
            continue;
        }
        let y = x - r;
        let lo = match beads.binary_search(&y) {
            Ok(_) => continue,
            Err(pos) => pos,
        };
        let height = idx - lo;
        let mut next = beads.clone();
        next.remove(idx);
        next.insert(lo, y);
        let v = mn_rec(&mut next, rest, memo);
        if height % 2 == 0 {
            acc += v;
        } else {
            acc -= v;
        }
    }
    memo.insert(key, acc.clone());
    acc
}

/// Every `μ ⊆ λ` such that `λ/μ` is a border strip of size `r`, with its height.
///
/// Found by direct search over sub-diagrams; intended as a reference.
pub fn border_strips(lambda: &Partition, r: usize) -> Vec<(Partition, usize)> {
    let mut out = Vec::new();
    if r == 0 || r > lambda.size() {
        return out;
    }
    let target = lambda.size() - r;
    let mut cur = Vec::with_capacity(lambda.len());
    subpartitions(lambda, 0, usize::MAX, target, &mut cur, &mut |mu| {
        if let Some(h) = strip_height(lambda, mu) {
            out.push((mu.clone(), h));
        }
    });
    out
}

fn subpartitions(
    lambda: &Partition,
    i: usize,
    max: usize,
    rest: usize,
    cur: &mut Vec<usize>,
    f: &mut dyn FnMut(&Partition),
) {
    if i == lambda.len() {
        if rest == 0 {
            f(&Partition::new(cur.clone()).expect("weakly decreasing by construction"));
        }
        return;
    }
    let cap = lambda.part(i).min(max).min(rest);
    for v in 0..=cap {
        cur.push(v);
        subpartitions(lambda, i + 1, v, rest - v, cur, f);
        cur.pop();
    }
}

/// Height of `λ/μ` when it is a nonempty connected skew shape without a 2×2 block.
fn strip_height(lambda: &Partition, mu: &Partition) -> Option<usize> {
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|i| (mu.part(i)..lambda.part(i)).map(move |j| (i, j)))
        .collect();
    if cells.is_empty() {
        return None;
    }
    let inside = |i: usize, j: usize| j < lambda.part(i) && j >= mu.part(i);
    for &(i, j) in &cells {
        if inside(i + 1, j) && inside(i, j + 1) && inside(i + 1, j + 1) {
            return None;
        }
    }
    // Connectivity by flood fill on edge-adjacent cells.
    let mut seen = vec![cells[0]];
    let mut stack = vec![cells[0]];
    while let Some((i, j)) = stack.pop() {
        let mut nbrs = vec![(i + 1, j), (i, j + 1)];
        if i > 0 {
            nbrs.push((i - 1, j));
        }
        if j > 0 {
            nbrs.push((i, j - 1));
        }
        for (a, b) in nbrs {
            if inside(a, b) && !seen.contains(&(a, b)) {
                seen.push((a, b));
                stack.push((a, b));
            }
        }
    }
    if seen.len() != cells.len() {
        return None;
    }
    let rows: std::collections::BTreeSet<usize> = cells.iter().map(|c| c.0).collect();
    Some(rows.len() - 1)
}

/// Character value by summing signs over all border-strip tableaux, found by skew-shape search.
pub fn mn_character_by_strip_search(lambda: &Partition, alpha: &[usize]) -> BigInt {
    let Some((&r, rest)) = alpha.split_last() else {
        return BigInt::from(i32::from(lambda.is_empty()));
    };
    let mut acc = BigInt::zero();
    for (mu, h) in border_strips(lambda, r) {
        let v = mn_character_by_strip_search(&mu, rest);
        if h % 2 == 0 {
            acc += v;
        } else {
            acc -= v;
        }
    }
    acc
}

/// Removes one `r`-strip through the abacus and returns the result with its height.
#[cfg(test)]
pub(crate) fn strips_by_beads(lambda: &Partition, r: usize) -> Vec<(Partition, usize)> {
    use super::abacus::partition_from_beta;
    let mut beads = beta_set(lambda, lambda.len() + r);
    beads.sort_unstable();
    let mut out = Vec::new();
    for idx in 0..beads.len() {
        let x = beads[idx];
        if x < r {
            continue;
        }
        if let Err(lo) = beads.binary_search(&(x - r)) {
            let mut next = beads.clone();
            next[idx] = x - r;
            out.push((partition_from_beta(&next), idx - lo));
        }
    }
    out
}
