//! Root-of-unity values of the q-Catalan numbers.

use csp_core::arith::{binomial, gcd};
use csp_core::schur::q_catalan;
use csp_core::sieve::csp_exists;
use csp_core::{BigInt, OrbitProfile, Verdict};
use serde::Serialize;

use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalanEntry {
    pub n: usize,
    /// `C_n(ω_n^j)` equals `binom(2g, g)` for `g = gcd(j, n) < n`, and `C_n` at `j = n`.
    pub values_match: bool,
    #[serde(with = "csp_core::json::bigint_vec")]
    pub evaluations: Vec<BigInt>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<OrbitProfile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalanReport {
    pub entries: Vec<CatalanEntry>,
}

impl CatalanReport {
    pub fn all_yes(&self) -> bool {
        self.entries.iter().all(|e| e.values_match && e.verdict == Verdict::Yes)
    }
}

/// The value predicted at `ω_n^j`.
pub fn expected_value(n: usize, j: usize) -> BigInt {
    let g = gcd(j, n);
    let central = BigInt::from(binomial(2 * g as u64, g as u64));
    if g == n {
        central / BigInt::from(n + 1)
    } else {
        central
    }
}

pub fn catalan_sweep(max_n: usize) -> Result<CatalanReport> {
    let mut entries = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let f = q_catalan(n).reduce_mod(n)?;
        let table = f.eval_table()?;
        let values_match = (1..=n).all(|j| *table.at(j) == expected_value(n, j));
        let d = csp_exists(&f);
        entries.push(CatalanEntry {
            n,
            values_match,
            evaluations: table.into_values(),
            verdict: d.verdict,
            profile: d.profile,
        });
    }
    Ok(CatalanReport { entries })
}
