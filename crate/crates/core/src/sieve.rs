//! Orbit counts from root-of-unity values, and the existence test for a
//! complementing cyclic action.
//!
//! For an evaluation table `t`, the sieve transform
//! `S_k = Σ_{j|k} μ(k/j) t_j` counts the elements of exact order `k` in any
//! action with fixed-point counts `t`. An action exists iff every value is
//! non-negative and every `S_k` is non-negative; it is then realised by the
//! ad-hoc action that cycles `S_k / k` disjoint blocks of size `k`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{divisor_sums, mobius_invert};
use crate::error::{Error, Result};
use crate::exactroots::{CycPoly, EvalTable};
use crate::json::{bigint_vec, opt_bigint_vec};

/// `(S_1, …, S_n)` for a table over `n`.
pub fn sieve_transform(t: &EvalTable) -> Vec<BigInt> {
    mobius_invert(t.values())
}

/// Inverse of [`sieve_transform`]: `Σ_{j|k} S_j` for each `k`.
pub fn orbit_partial_sums(counts: &[BigInt]) -> Vec<BigInt> {
    divisor_sums(counts)
}

/// Number of elements of each exact order `k = 1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ProfileRepr", into = "ProfileRepr")]
pub struct OrbitProfile {
    n: usize,
    counts: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct ProfileRepr {
    n: usize,
    #[serde(with = "bigint_vec")]
    counts: Vec<BigInt>,
}

impl TryFrom<ProfileRepr> for OrbitProfile {
    type Error = Error;
    fn try_from(r: ProfileRepr) -> Result<Self> {
        OrbitProfile::new(r.n, r.counts)
    }
}

impl From<OrbitProfile> for ProfileRepr {
    fn from(p: OrbitProfile) -> Self {
        ProfileRepr { n: p.n, counts: p.counts }
    }
}

impl OrbitProfile {
    /// Checks `S_k ≥ 0`, `k | S_k`, and `S_k = 0` for `k ∤ n`.
    pub fn new(n: usize, counts: Vec<BigInt>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        if counts.len() != n {
            return Err(Error::LengthMismatch { expected: n, actual: counts.len() });
        }
        for (i, s) in counts.iter().enumerate() {
            let k = i + 1;
            if s.is_negative() {
                return Err(Error::InvalidProfile(format!("S_{k} = {s} is negative")));
            }
            if !s.is_multiple_of(&BigInt::from(k)) {
                return Err(Error::InvalidProfile(format!("S_{k} = {s} is not divisible by {k}")));
            }
            if !n.is_multiple_of(k) && !s.is_zero() {
                return Err(Error::InvalidProfile(format!("S_{k} = {s} but {k} does not divide {n}")));
            }
        }
        Ok(OrbitProfile { n, counts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// `S_k` for `1 ≤ k ≤ n`.
    pub fn count(&self, k: usize) -> &BigInt {
        &self.counts[k - 1]
    }

    pub fn total(&self) -> BigInt {
        self.counts.iter().sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
}

/// Why no complementing action exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rejection {
    /// Some value at a root of unity is not an integer.
    NotInModule,
    /// Some value `f(ω_n^k)` is a negative integer.
    NegativeEvaluation,
    /// Some orbit count `S_k` is negative.
    NegativeOrbitCount,
}

/// Outcome of the existence test.
///
/// `witness_k` is the offending index for a `No`: the exponent breaking
/// `a_j = a_{gcd(n,j)}`, the smallest `k` with `f(ω_n^k) < 0`, or the smallest
/// divisor with `S_k < 0`, depending on `reason`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CspDecision {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<Rejection>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub profile: Option<OrbitProfile>,
    #[serde(with = "opt_bigint_vec", skip_serializing_if = "Option::is_none", default)]
    pub evaluations: Option<Vec<BigInt>>,
    #[serde(with = "opt_bigint_vec", skip_serializing_if = "Option::is_none", default)]
    pub sieve: Option<Vec<BigInt>>,
}

impl CspDecision {
    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }

    fn no(reason: Rejection, k: usize) -> Self {
        CspDecision {
            verdict: Verdict::No,
            reason: Some(reason),
            witness_k: Some(k),
            profile: None,
            evaluations: None,
            sieve: None,
        }
    }
}

/// Decides whether some `C_n`-action complements `p` to a cyclic sieving phenomenon.
pub fn csp_exists(p: &CycPoly) -> CspDecision {
    match p.first_violation() {
        Some(index) => CspDecision::no(Rejection::NotInModule, index),
        None => decide_from_table(&p.eval_table().expect("membership checked")),
    }
}

/// The same decision starting from root-of-unity values.
pub fn decide_from_table(t: &EvalTable) -> CspDecision {
    let evaluations = Some(t.values().to_vec());
    if let Some(k) = (1..=t.n()).find(|&k| t.at(k).is_negative()) {
        return CspDecision { evaluations, ..CspDecision::no(Rejection::NegativeEvaluation, k) };
    }
    let s = sieve_transform(t);
    let n = t.n();
    // A table that no integer polynomial in M(n) produces: orbit counts would
    // fail divisibility or live at non-divisors.
    if let Some(k) = (1..=n).find(|&k| {
        !s[k - 1].is_multiple_of(&BigInt::from(k)) || (!n.is_multiple_of(k) && !s[k - 1].is_zero())
    }) {
        return CspDecision {
            evaluations,
            sieve: Some(s),
            ..CspDecision::no(Rejection::NotInModule, k)
        };
    }
    if let Some(k) = (1..=n).filter(|k| n.is_multiple_of(*k)).find(|&k| s[k - 1].is_negative()) {
        return CspDecision {
            evaluations,
            sieve: Some(s),
            ..CspDecision::no(Rejection::NegativeOrbitCount, k)
        };
    }
    let profile = OrbitProfile::new(n, s.clone())
        .expect("non-negative sieve values of an integral table form a valid profile");
    CspDecision {
        verdict: Verdict::Yes,
        reason: None,
        witness_k: None,
        profile: Some(profile),
        evaluations,
        sieve: Some(s),
    }
}

/// A run of `count` orbits of equal `size` whose labels start at `first_label`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitBlock {
    pub size: usize,
    pub count: BigInt,
    pub first_label: BigInt,
}

/// The ad-hoc action: elements `0..|X|` split into consecutive orbits, each
/// cycled in label order. Orbits are sorted by size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdHocAction {
    n: usize,
    blocks: Vec<OrbitBlock>,
}

/// Builds the action for a profile. Invalid profiles are rejected earlier, by
/// [`OrbitProfile::new`].
pub fn build_adhoc_action(profile: &OrbitProfile) -> AdHocAction {
    let mut next = BigInt::zero();
    let mut blocks = Vec::new();
    for (i, s) in profile.counts.iter().enumerate() {
        if s.is_zero() {
            continue;
        }
        let size = i + 1;
        let count = s / BigInt::from(size);
        blocks.push(OrbitBlock { size, count, first_label: next.clone() });
        next += s;
    }
    AdHocAction { n: profile.n, blocks }
}

impl AdHocAction {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[OrbitBlock] {
        &self.blocks
    }

    /// `|X|`.
    pub fn len(&self) -> BigInt {
        self.blocks.iter().map(|b| &b.count * BigInt::from(b.size)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn orbit_count(&self) -> BigInt {
        self.blocks.iter().map(|b| &b.count).sum()
    }

    fn locate(&self, label: &BigInt) -> Option<(&OrbitBlock, BigInt)> {
        self.blocks.iter().find_map(|b| {
            let offset = label - &b.first_label;
            let span = &b.count * BigInt::from(b.size);
            (!offset.is_negative() && offset < span).then_some((b, offset))
        })
    }

    /// Orbit size of `label`, or `None` outside `0..|X|`.
    pub fn order_of(&self, label: &BigInt) -> Option<usize> {
        self.locate(label).map(|(b, _)| b.size)
    }

    /// Image of `label` under the generator `σ`.
    pub fn apply(&self, label: &BigInt) -> Option<BigInt> {
        let (b, offset) = self.locate(label)?;
        let size = BigInt::from(b.size);
        let start = label - offset.mod_floor(&size);
        let pos = (offset.mod_floor(&size) + 1u32).mod_floor(&size);
        Some(start + pos)
    }

    /// Orbit sizes in label order; only sensible for small sets.
    pub fn orbit_sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().flat_map(|b| {
            std::iter::repeat_n(b.size, b.count.to_usize().expect("orbit count fits in usize"))
        })
    }

    /// `|X^{σ^k}|` for `k = 1..=n`: elements whose orbit size divides `k`.
    pub fn fixed_point_counts(&self) -> Vec<BigInt> {
        (1..=self.n)
            .map(|k| {
                self.blocks
                    .iter()
                    .filter(|b| k % b.size == 0)
                    .map(|b| &b.count * BigInt::from(b.size))
                    .sum()
            })
            .collect()
    }
}
