use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::abacus::core_quotient;
use super::character::mn_character;
use super::partition::Partition;
use super::tableau::ssyt_count;
use crate::error::{Error, Result};

/// `s_λ(1, ω, …, ω^{m-1})` for a primitive `d`-th root of unity `ω`, `d | m`.
///
/// Zero unless the `d`-core is empty; otherwise the sign of `χ^λ` at cycle
/// type `(d, d, …)` times the product of `s_{λ^(i)}(1^{m/d})` over the quotient.
pub fn rsw_evaluate(lambda: &Partition, m: usize, d: usize) -> Result<BigInt> {
    if d == 0 {
        return Err(Error::ZeroRunners);
    }
    if !m.is_multiple_of(d) {
        return Err(Error::DNotDividingM { d, m });
    }
    if lambda.len() > m {
        return Ok(BigInt::zero());
    }
    if d == 1 {
        return Ok(ssyt_count(lambda, m));
    }
    let cq = core_quotient(lambda, d)?;
    if !cq.core.is_empty() {
        return Ok(BigInt::zero());
    }
    let chi = mn_character(lambda, &vec![d; lambda.size() / d])?;
    let mut value: BigInt = cq.quotient.iter().map(|q| ssyt_count(q, m / d)).product();
    if chi.is_negative() {
        value = -value;
    }
    Ok(value)
}
