//! Batch sweeps over stretched Schur polynomials.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use csp_core::arith::gcd;
use csp_core::schur::{principal_specialization, rsw_evaluate};
use csp_core::sieve::{csp_exists, decide_from_table};
use csp_core::{BigInt, CspDecision, EvalTable, OrbitProfile, Partition, Rejection, Verdict};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "CSP_THREADS";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridEntry {
    pub shape: Partition,
    pub m: usize,
    pub n: usize,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<Rejection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<OrbitProfile>,
    /// Whether the root-of-unity values from cores and quotients matched the
    /// values read off the reduced polynomial.
    pub paths_agree: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GridSummary {
    pub points: usize,
    pub yes: usize,
    pub no: usize,
    pub path_disagreements: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GridReport {
    pub max_weight: usize,
    pub max_m: usize,
    pub max_n: usize,
    pub entries: Vec<GridEntry>,
    pub summary: GridSummary,
    /// Wall-clock time; kept out of the JSON so reports compare byte for byte.
    #[serde(skip)]
    pub duration: Duration,
}

impl GridReport {
    pub fn all_yes(&self) -> bool {
        self.summary.no == 0 && self.summary.path_disagreements == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Thread count from `CSP_THREADS`, if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&t| t > 0)
}

/// Runs `f` on a pool of `threads` workers, or the global pool when `None`.
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

/// Root-of-unity values of `s_λ(1, q, …, q^{m-1})` at `ω_n^k`, for `k = 1..=n`.
///
/// Where the order `d = n / gcd(n, k)` divides `m` the value comes from the
/// core and quotient of `λ`; otherwise it is read from `f mod q^n - 1`.
/// Returns the decision and whether both paths agreed wherever both apply.
pub fn decide_specialization(lambda: &Partition, m: usize, n: usize) -> Result<(CspDecision, bool)> {
    let f = principal_specialization(lambda, m).reduce_mod(n)?;
    if !f.is_integral_at_roots() {
        return Ok((csp_exists(&f), true));
    }
    let exact = f.eval_table()?;
    let mut by_order: BTreeMap<usize, BigInt> = BTreeMap::new();
    let mut agree = true;
    let mut values = Vec::with_capacity(n);
    for k in 1..=n {
        let d = n / gcd(n, k);
        let v = if m.is_multiple_of(d) {
            match by_order.get(&d) {
                Some(v) => v.clone(),
                None => {
                    let v = rsw_evaluate(lambda, m, d)?;
                    by_order.insert(d, v.clone());
                    v
                }
            }
        } else {
            exact.at(k).clone()
        };
        agree &= &v == exact.at(k);
        values.push(v);
    }
    Ok((decide_from_table(&EvalTable::new(n, values)?), agree))
}

pub fn grid_point(lambda: &Partition, m: usize, n: usize) -> Result<GridEntry> {
    let (d, agree) = decide_specialization(&lambda.scale(n), m, n)?;
    Ok(GridEntry {
        shape: lambda.clone(),
        m,
        n,
        verdict: d.verdict,
        reason: d.reason,
        witness_k: d.witness_k,
        profile: d.profile,
        paths_agree: agree,
    })
}

/// Every `(λ, m, n)` with `|λ| ≤ max_weight` (the empty partition included),
/// `1 ≤ m ≤ max_m` and `1 ≤ n ≤ max_n`, in lexicographic order.
pub fn grid_points(max_weight: usize, max_m: usize, max_n: usize) -> Vec<(Partition, usize, usize)> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        for lambda in Partition::all_of_size(w) {
            for m in 1..=max_m {
                for n in 1..=max_n {
                    out.push((lambda.clone(), m, n));
                }
            }
        }
    }
    out
}

pub fn verify_conjecture_grid(max_weight: usize, max_m: usize, max_n: usize) -> Result<GridReport> {
    verify_conjecture_grid_with_threads(max_weight, max_m, max_n, threads_from_env())
}

pub fn verify_conjecture_grid_with_threads(
    max_weight: usize,
    max_m: usize,
    max_n: usize,
    threads: Option<usize>,
) -> Result<GridReport> {
    let start = Instant::now();
    let points = grid_points(max_weight, max_m, max_n);
    let entries: Vec<GridEntry> = with_threads(threads, || {
        points
            .par_iter()
            .map(|(l, m, n)| grid_point(l, *m, *n))
            .collect::<Result<Vec<_>>>()
    })?;
    let summary = GridSummary {
        points: entries.len(),
        yes: entries.iter().filter(|e| e.verdict == Verdict::Yes).count(),
        no: entries.iter().filter(|e| e.verdict == Verdict::No).count(),
        path_disagreements: entries.iter().filter(|e| !e.paths_agree).count(),
    };
    Ok(GridReport {
        max_weight,
        max_m,
        max_n,
        entries,
        summary,
        duration: start.elapsed(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RectangleEntry {
    pub a: usize,
    pub b: usize,
    pub m: usize,
    pub n: usize,
    pub verdict: Verdict,
    pub paths_agree: bool,
}

/// `s_{(na)^b}(1, q, …, q^{m-1})` for `n | b`, `n | m`, `b < m` and `nab ≤ max_size`.
///
/// `m` runs over the multiples of `n` in `(b, b + 2n]`.
pub fn rectangle_family(max_size: usize) -> Result<Vec<RectangleEntry>> {
    let mut cases = Vec::new();
    for n in 1..=max_size {
        for a in 1..=max_size / n {
            for b in (n..=max_size / (n * a)).step_by(n) {
                for m in (b + n..=b + 2 * n).step_by(n) {
                    cases.push((a, b, m, n));
                }
            }
        }
    }
    cases
        .par_iter()
        .map(|&(a, b, m, n)| {
            let (d, agree) = decide_specialization(&Partition::rectangle(n * a, b), m, n)?;
            Ok(RectangleEntry { a, b, m, n, verdict: d.verdict, paths_agree: agree })
        })
        .collect()
}
