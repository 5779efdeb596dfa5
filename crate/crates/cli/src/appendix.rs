//! Exact checks of three binomial and harmonic-sum inequalities.
//!
//! Fractional powers are cleared by raising both sides to a common integer
//! power, so every comparison is between integers or rationals.

use csp_core::arith::binomial;
use csp_core::{BigInt, BigRational};
use num_traits::Pow;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{CliError, Result};

fn binom(n: usize, k: usize) -> BigInt {
    BigInt::from(binomial(n as u64, k as u64))
}

/// `Σ_{ℓ<ka} 1/(kt+i-ℓ) ≥ Σ_{ℓ<ja} 1/(jt+i-ℓ)` for `a ≤ t`, `j ≤ k`.
pub fn harmonic(a: usize, t: usize, i: usize, j: usize, k: usize) -> Result<bool> {
    if a > t || j > k {
        return Err(CliError::HypothesisViolation(format!(
            "harmonic sums need a ≤ t and j ≤ k (a={a}, t={t}, j={j}, k={k})"
        )));
    }
    let sum = |c: usize| -> BigRational {
        (0..c * a)
            .map(|l| BigRational::new(1.into(), BigInt::from(c * t + i - l)))
            .sum()
    };
    Ok(sum(k) >= sum(j))
}

/// `(binom(kb+i, ka) / binom(ka+i, ka))^{1/k} ≥ (binom(jb+i, ja) / binom(ja+i, ja))^{1/j}`
/// for `a ≤ b` and `1 ≤ j ≤ k`, compared after raising to the power `jk`.
pub fn binomial_ratio(a: usize, b: usize, i: usize, j: usize, k: usize) -> Result<bool> {
    if a > b || j > k || j == 0 {
        return Err(CliError::HypothesisViolation(format!(
            "binomial ratios need a ≤ b and 1 ≤ j ≤ k (a={a}, b={b}, j={j}, k={k})"
        )));
    }
    let lhs = Pow::pow(binom(k * b + i, k * a), j) * Pow::pow(binom(j * a + i, j * a), k);
    let rhs = Pow::pow(binom(j * b + i, j * a), k) * Pow::pow(binom(k * a + i, k * a), j);
    Ok(lhs >= rhs)
}

/// `binom(kb+i, ka) / binom(ka+i, ka) ≥ ((b+a)/(2a))^{ka}` for `1 ≤ a < b`, `0 ≤ i ≤ ka`,
/// compared after multiplying through by `(2a)^{ka}`.
pub fn binomial_lower_bound(a: usize, b: usize, i: usize, k: usize) -> Result<bool> {
    if a == 0 || b <= a || i > k * a {
        return Err(CliError::HypothesisViolation(format!(
            "the lower bound needs 1 ≤ a < b and i ≤ ka (a={a}, b={b}, i={i}, k={k})"
        )));
    }
    let e = k * a;
    let lhs = binom(k * b + i, e) * Pow::pow(BigInt::from(2 * a), e);
    let rhs = binom(e + i, e) * Pow::pow(BigInt::from(b + a), e);
    Ok(lhs >= rhs)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InequalityCheck {
    pub name: String,
    pub samples: usize,
    pub violations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_violation: Option<String>,
}

impl InequalityCheck {
    fn new(name: &str) -> Self {
        InequalityCheck { name: name.into(), ..Default::default() }
    }

    fn record(&mut self, holds: bool, what: impl FnOnce() -> String) {
        self.samples += 1;
        if !holds {
            self.violations += 1;
            if self.first_violation.is_none() {
                self.first_violation = Some(what());
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppendixReport {
    pub grid_max: usize,
    pub random_samples: usize,
    pub random_max: usize,
    pub seed: u64,
    pub checks: Vec<InequalityCheck>,
}

impl AppendixReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.violations == 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AppendixRanges {
    /// Every parameter runs over `0..=grid_max` (subject to the hypotheses).
    pub grid_max: usize,
    /// Extra random samples per inequality, parameters in `0..=random_max`.
    pub random_samples: usize,
    pub random_max: usize,
    pub seed: u64,
}

impl Default for AppendixRanges {
    fn default() -> Self {
        AppendixRanges { grid_max: 6, random_samples: 100, random_max: 20, seed: 0x5eed }
    }
}

pub fn check_appendix_inequalities(r: AppendixRanges) -> Result<AppendixReport> {
    let g = r.grid_max;
    let mut h = InequalityCheck::new("harmonic");
    let mut br = InequalityCheck::new("binomial_ratio");
    let mut lb = InequalityCheck::new("binomial_lower_bound");

    for a in 0..=g {
        for t in a..=g {
            for i in 0..=g {
                for k in 0..=g {
                    for j in 0..=k {
                        h.record(harmonic(a, t, i, j, k)?, || format!("a={a} t={t} i={i} j={j} k={k}"));
                    }
                }
            }
        }
    }
    for a in 0..=g {
        for b in a..=g {
            for i in 0..=g {
                for k in 1..=g {
                    for j in 1..=k {
                        br.record(binomial_ratio(a, b, i, j, k)?, || format!("a={a} b={b} i={i} j={j} k={k}"));
                    }
                }
            }
        }
    }
    for a in 1..=g {
        for b in a + 1..=g {
            for k in 0..=g {
                for i in 0..=(k * a).min(g) {
                    lb.record(binomial_lower_bound(a, b, i, k)?, || format!("a={a} b={b} i={i} k={k}"));
                }
            }
        }
    }

    let mut rng = StdRng::seed_from_u64(r.seed);
    let top = r.random_max.max(2);
    for _ in 0..r.random_samples {
        let a = rng.random_range(0..=top);
        let t = rng.random_range(a..=top);
        let k = rng.random_range(0..=top);
        let j = rng.random_range(0..=k);
        let i = rng.random_range(0..=top);
        h.record(harmonic(a, t, i, j, k)?, || format!("a={a} t={t} i={i} j={j} k={k}"));

        let b = rng.random_range(a..=top);
        let k = rng.random_range(1..=top);
        let j = rng.random_range(1..=k);
        br.record(binomial_ratio(a, b, i, j, k)?, || format!("a={a} b={b} i={i} j={j} k={k}"));

        let a = rng.random_range(1..top);
        let b = rng.random_range(a + 1..=top);
        let i = rng.random_range(0..=(k * a).min(top));
        lb.record(binomial_lower_bound(a, b, i, k)?, || format!("a={a} b={b} i={i} k={k}"));
    }

    Ok(AppendixReport {
        grid_max: g,
        random_samples: r.random_samples,
        random_max: r.random_max,
        seed: r.seed,
        checks: vec![h, br, lb],
    })
}
