use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{Error, Result};

/// Bead configuration of a partition on `d` runners.
///
/// Bead `i` (1-based) sits at position `λ_i + m - i`, which is runner
/// `s` and row `t` where `position = s + d t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Abacus {
    d: usize,
    beads: Vec<(usize, usize)>,
}

impl Abacus {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn bead_count(&self) -> usize {
        self.beads.len()
    }

    /// `(runner, row)` for each bead, largest position first.
    pub fn beads(&self) -> &[(usize, usize)] {
        &self.beads
    }

    pub fn positions(&self) -> Vec<usize> {
        self.beads.iter().map(|&(s, t)| s + self.d * t).collect()
    }

    /// Rows occupied on runner `s`, top to bottom.
    pub fn runner(&self, s: usize) -> Vec<usize> {
        let mut rows: Vec<usize> = self
            .beads
            .iter()
            .filter(|b| b.0 == s)
            .map(|b| b.1)
            .collect();
        rows.sort_unstable();
        rows
    }

    pub fn decode(&self) -> Partition {
        partition_from_beta(&self.positions())
    }

    /// The abacus obtained by sliding every bead to the top of its runner.
    pub fn slide_up(&self) -> Abacus {
        let mut beads = Vec::with_capacity(self.beads.len());
        for s in 0..self.d {
            let k = self.beads.iter().filter(|b| b.0 == s).count();
            beads.extend((0..k).map(|t| (s, t)));
        }
        beads.sort_unstable_by_key(|&(s, t)| std::cmp::Reverse(s + self.d * t));
        Abacus { d: self.d, beads }
    }
}

/// Partition whose beta-set (first-column hook lengths plus padding) is `positions`.
pub(crate) fn partition_from_beta(positions: &[usize]) -> Partition {
    let mut pos = positions.to_vec();
    pos.sort_unstable_by(|a, b| b.cmp(a));
    let m = pos.len();
    let parts = pos.iter().enumerate().map(|(i, &x)| x - (m - 1 - i)).collect();
    Partition::new(parts).expect("distinct positions decode to a partition")
}

/// Beta-set of `λ` with `m ≥ l(λ)` beads, decreasing.
pub(crate) fn beta_set(lambda: &Partition, m: usize) -> Vec<usize> {
    (0..m).map(|i| lambda.part(i) + m - 1 - i).collect()
}

pub fn abacus_decompose(lambda: &Partition, d: usize, m_beads: usize) -> Result<Abacus> {
    if d == 0 {
        return Err(Error::ZeroRunners);
    }
    if m_beads < lambda.len() {
        return Err(Error::TooFewBeads { beads: m_beads, parts: lambda.len() });
    }
    let beads = beta_set(lambda, m_beads)
        .into_iter()
        .map(|x| (x % d, x / d))
        .collect();
    Ok(Abacus { d, beads })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreQuotient {
    pub core: Partition,
    pub quotient: Vec<Partition>,
}

impl CoreQuotient {
    pub fn quotient_weight(&self) -> usize {
        self.quotient.iter().map(Partition::size).sum()
    }
}

/// `d`-core and `d`-quotient read off an abacus.
///
/// The bead count is the smallest multiple of `d` that is at least `l(λ)`;
/// the quotient is listed by runner `0..d`.
pub fn core_quotient(lambda: &Partition, d: usize) -> Result<CoreQuotient> {
    if d == 0 {
        return Err(Error::ZeroRunners);
    }
    let m = lambda.len().div_ceil(d) * d;
    core_quotient_with_beads(lambda, d, m)
}

/// As [`core_quotient`], with an explicit bead count.
pub fn core_quotient_with_beads(lambda: &Partition, d: usize, m_beads: usize) -> Result<CoreQuotient> {
    let ab = abacus_decompose(lambda, d, m_beads)?;
    let core = ab.slide_up().decode();
    let quotient = (0..d)
        .map(|s| partition_from_beta(&ab.runner(s)))
        .collect();
    Ok(CoreQuotient { core, quotient })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::character::border_strips;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn seven_part_abacus() {
        let lambda = p("5,3,3,2,1,1,1");
        let ab = abacus_decompose(&lambda, 3, 7).unwrap();
        let mut pos = ab.positions();
        pos.sort_unstable();
        assert_eq!(pos, vec![1, 2, 3, 5, 7, 8, 11]);
        assert_eq!(ab.runner(0), vec![1]);
        assert_eq!(ab.runner(1), vec![0, 2]);
        assert_eq!(ab.runner(2), vec![0, 1, 2, 3]);
        assert_eq!(ab.decode(), lambda);
        let cq = core_quotient_with_beads(&lambda, 3, 7).unwrap();
        assert_eq!(cq.core, p("5,3,1,1"));
        assert_eq!(cq.quotient, vec![p("1"), p("1"), Partition::empty()]);
        assert_eq!(lambda.size(), cq.core.size() + 3 * cq.quotient_weight());
    }

    #[test]
    fn too_few_beads() {
        assert!(matches!(
            abacus_decompose(&p("2,1,1"), 2, 2),
            Err(Error::TooFewBeads { beads: 2, parts: 3 })
        ));
        assert!(matches!(core_quotient(&p("1"), 0), Err(Error::ZeroRunners)));
    }

    #[test]
    fn staircase_is_a_two_core() {
        let cq = core_quotient(&p("2,1"), 2).unwrap();
        assert_eq!(cq.core, p("2,1"));
        assert_eq!(cq.quotient, vec![Partition::empty(), Partition::empty()]);
        assert!(border_strips(&p("2,1"), 2).is_empty());
    }

    #[test]
    fn stretched_rectangle_quotients() {
        for n in 1..=4usize {
            for a in 1..=3usize {
                for b in 0..=2usize {
                    for r in 0..n {
                        let lambda = Partition::rectangle(n * a, n * b + r);
                        let cq = core_quotient(&lambda, n).unwrap();
                        assert!(cq.core.is_empty(), "n={n} a={a} b={b} r={r}");
                        let mut want = vec![Partition::rectangle(a, b); n - r];
                        want.extend(vec![Partition::rectangle(a, b + 1); r]);
                        assert_eq!(cq.quotient, want, "n={n} a={a} b={b} r={r}");
                    }
                }
            }
        }
    }

    #[test]
    fn decode_round_trip_and_core_properties() {
        for w in 0..=8 {
            for lambda in Partition::all_of_size(w) {
                for d in 1..=4 {
                    for extra in 0..3 {
                        let ab = abacus_decompose(&lambda, d, lambda.len() + extra).unwrap();
                        assert_eq!(ab.decode(), lambda);
                    }
                    let cq = core_quotient(&lambda, d).unwrap();
                    assert_eq!(lambda.size(), cq.core.size() + d * cq.quotient_weight());
                    assert!(border_strips(&cq.core, d).is_empty(), "λ={lambda} d={d}");
                    assert!(lambda.contains(&cq.core));
                }
            }
        }
    }

    #[test]
    fn quotient_convention_changes_only_by_rotation() {
        // Adding one bead shifts every position by one, rotating runners.
        for w in 0..=7 {
            for lambda in Partition::all_of_size(w) {
                for d in 1..=4 {
                    let m = lambda.len().div_ceil(d) * d;
                    let base = core_quotient_with_beads(&lambda, d, m).unwrap();
                    for extra in 1..d {
                        let other = core_quotient_with_beads(&lambda, d, m + extra).unwrap();
                        assert_eq!(other.core, base.core);
                        let mut rotated = base.quotient.clone();
                        rotated.rotate_right(extra);
                        assert_eq!(other.quotient, rotated, "λ={lambda} d={d} extra={extra}");
                    }
                }
            }
        }
    }
}
