use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::halfspace::HalfSpaceSystem;
use super::matrix::CspMatrix;
use crate::arith::{binomial, is_prime};
use crate::error::{Error, Result};

fn check_prime(p: usize) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Vertices of the slice `‖A‖ = m` of the prime cone.
///
/// `m E_{0,1}` first, then one vertex per `I ⊆ {1, …, p-1}` (by bitmask): parameters
/// `x_{0,p} = C`, `x_{i,p} = C / (p - |I|)` for `i ∈ I`, with
/// `C = m / (2p - 1 + (p-1)|I| / (p - |I|))`.
pub fn prime_polytope_vertices(p: usize, m: &BigRational) -> Result<Vec<CspMatrix>> {
    check_prime(p)?;
    let sys = HalfSpaceSystem::new(p)?;
    let int = |v: usize| BigRational::from_integer(v.into());
    let mut out = Vec::with_capacity((1 << (p - 1)) + 1);
    let mut x = vec![BigRational::zero(); sys.dimension()];
    x[0] = m.clone();
    out.push(sys.matrix_from_parameters(&x)?);
    for mask in 0u64..(1u64 << (p - 1)) {
        let chosen: Vec<usize> = (1..p).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let free = int(p - chosen.len());
        let denom = int(2 * p - 1) + int((p - 1) * chosen.len()) / &free;
        let c = m / denom;
        let mut x = vec![BigRational::zero(); sys.dimension()];
        x[sys.param_index(0, 2)] = c.clone();
        for i in chosen {
            x[sys.param_index(i, 2)] = &c / &free;
        }
        out.push(sys.matrix_from_parameters(&x)?);
    }
    Ok(out)
}

/// Weak compositions of `total` into `k` parts, each at most `w`.
///
/// Inclusion–exclusion over the parts that exceed `w`.
pub fn bounded_compositions(total: usize, k: usize, w: usize) -> BigInt {
    if k == 0 {
        return BigInt::from(u8::from(total == 0));
    }
    let mut acc = BigInt::zero();
    for j in 0..=k {
        let Some(rest) = total.checked_sub(j * (w + 1)) else {
            break;
        };
        let term = BigInt::from(binomial(k as u64, j as u64))
            * BigInt::from(binomial((rest + k - 1) as u64, (k - 1) as u64));
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Number of integer CSP matrices of size `p` with `‖A‖ = m`.
///
/// Writing `s_i = a_{i,p}`, integrality forces `Σ s_i = pS` with every
/// `s_k ≤ S` for `k ≥ 1`, and the norm becomes `z + (2p-1)S - y` where
/// `y = s_1 + … + s_{p-1}` and `z = a_{0,1}`.
pub fn count_lattice_points(p: usize, m: usize) -> Result<BigInt> {
    check_prime(p)?;
    let mut acc = BigInt::zero();
    for s in 0..=m / p {
        let lo = ((2 * p - 1) * s).saturating_sub(m);
        for y in lo..=(p - 1) * s {
            acc += bounded_compositions(y, p - 1, s);
        }
    }
    Ok(acc)
}

/// Points `(x_{0,1}, x_{0,p}, …, x_{p-1,p})` of non-negative integers with
/// `H_k ≥ 0` and norm `m`, counted by summing over `j = (2p-1)x + (p-1)y`.
pub fn parameter_lattice_count(p: usize, m: usize) -> Result<BigInt> {
    check_prime(p)?;
    let mut acc = BigInt::zero();
    for j in 0..=m {
        // r ranges over integers in [2j/(2p-1), j/(p-1)]
        let r_lo = (2 * j).div_ceil(2 * p - 1);
        let r_hi = j / (p - 1);
        for r in r_lo..=r_hi {
            let y = r * (2 * p - 1) - 2 * j;
            // floor(r - j/p)
            let w = (r * p - j) / p;
            acc += bounded_compositions(y, p - 1, w);
        }
    }
    Ok(acc)
}

/// Every non-negative integer `p × p` matrix with entry sum `m` that verifies.
///
/// Exhaustive over `C(m + p² - 1, m)` matrices.
pub fn brute_force_lattice_points(p: usize, m: usize) -> Result<BigInt> {
    check_prime(p)?;
    let cells = p * p;
    let mut entries = vec![0i64; cells];
    let mut count = BigInt::zero();
    fn go(pos: usize, rest: usize, p: usize, entries: &mut [i64], count: &mut BigInt) {
        if pos + 1 == entries.len() {
            entries[pos] = rest as i64;
            let rows: Vec<Vec<i64>> = entries.chunks(p).map(<[i64]>::to_vec).collect();
            if CspMatrix::from_integer_rows(&rows).expect("non-negative").verify() {
                *count += BigInt::one();
            }
            return;
        }
        for v in 0..=rest {
            entries[pos] = v as i64;
            go(pos + 1, rest - v, p, entries, count);
        }
    }
    go(0, m, p, &mut entries, &mut count);
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::halfspace::{is_extreme, membership_by_halfspaces};

    fn compositions_by_enumeration(total: usize, k: usize, w: usize) -> usize {
        if k == 0 {
            return usize::from(total == 0);
        }
        (0..=w.min(total)).map(|v| compositions_by_enumeration(total - v, k - 1, w)).sum()
    }

    /// Integer parameter points, enumerated directly.
    fn parameter_points_by_enumeration(p: usize, m: usize) -> usize {
        let mut count = 0;
        let mut xs = vec![0usize; p];
        fn go(i: usize, p: usize, m: usize, xs: &mut Vec<usize>, count: &mut usize) {
            if i == p {
                let total: usize = xs.iter().sum();
                if xs[1..].iter().any(|&x| p * x > total) {
                    return;
                }
                // norm without x_{0,1}: (2p-1) x_0 + (p-1) Σ_{k≥1} x_k
                let used = (2 * p - 1) * xs[0] + (p - 1) * xs[1..].iter().sum::<usize>();
                if used <= m {
                    *count += 1;
                }
                return;
            }
            for v in 0..=m {
                xs[i] = v;
                go(i + 1, p, m, xs, count);
            }
        }
        go(0, p, m, &mut xs, &mut count);
        count
    }

    #[test]
    fn compositions() {
        assert_eq!(bounded_compositions(0, 1, 0), BigInt::one());
        assert_eq!(bounded_compositions(1, 0, 3), BigInt::zero());
        assert_eq!(bounded_compositions(0, 0, 0), BigInt::one());
        for total in 0..10 {
            for k in 0..5 {
                for w in 0..5 {
                    assert_eq!(
                        bounded_compositions(total, k, w),
                        BigInt::from(compositions_by_enumeration(total, k, w)),
                        "n={total} k={k} w={w}"
                    );
                }
            }
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_lattice_points(2, 1).unwrap(), BigInt::one());
        assert_eq!(count_lattice_points(2, 2).unwrap(), BigInt::from(2));
        assert!(matches!(count_lattice_points(4, 2), Err(Error::NotPrime(4))));
        for m in 0..=6 {
            assert_eq!(count_lattice_points(3, m).unwrap(), brute_force_lattice_points(3, m).unwrap());
            assert_eq!(count_lattice_points(2, m).unwrap(), brute_force_lattice_points(2, m).unwrap());
        }
        for m in 0..=3 {
            assert_eq!(count_lattice_points(5, m).unwrap(), brute_force_lattice_points(5, m).unwrap());
        }
    }

    #[test]
    fn parameter_points_differ_from_matrices() {
        for p in [2, 3, 5] {
            for m in 0..=8 {
                assert_eq!(
                    parameter_lattice_count(p, m).unwrap(),
                    BigInt::from(parameter_points_by_enumeration(p, m)),
                    "p={p} m={m}"
                );
            }
        }
        assert_eq!(parameter_lattice_count(2, 2).unwrap(), BigInt::one());
        assert_eq!(count_lattice_points(2, 2).unwrap(), BigInt::from(2));
    }

    #[test]
    fn vertices() {
        for p in [2, 3, 5, 7] {
            for m in [1i64, 4, 7] {
                let m = BigRational::from_integer(m.into());
                let vs = prime_polytope_vertices(p, &m).unwrap();
                assert_eq!(vs.len(), (1 << (p - 1)) + 1);
                for v in &vs {
                    assert!(v.verify());
                    assert!(membership_by_halfspaces(v));
                    assert_eq!(v.norm(), m);
                    assert!(is_extreme(v).unwrap());
                }
            }
        }
        let zero = prime_polytope_vertices(3, &BigRational::zero()).unwrap();
        assert!(zero.iter().all(CspMatrix::is_zero));
        // p = 2, I = {1}: C = m/4 in parameters, so column 2 holds m/2 twice.
        let vs = prime_polytope_vertices(2, &BigRational::from_integer(4.into())).unwrap();
        assert_eq!(
            vs[2],
            CspMatrix::from_integer_rows(&[vec![0, 2], vec![0, 2]]).unwrap()
        );
        assert!(matches!(prime_polytope_vertices(6, &BigRational::one()), Err(Error::NotPrime(6))));
    }
}
