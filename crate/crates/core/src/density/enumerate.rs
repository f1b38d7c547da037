use crate::arith::{self, PrimeSieve};
use crate::cyclotomic::{primes_above_seeded, PrimeIdeal};
use crate::error::Result;

/// A rational prime `p != l` whose primes above have norm `p^f <= x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct QualifyingPrime {
    pub norm: u128,
    pub p: u64,
    pub f: u32,
}

/// Qualifying primes ordered by `(norm, p)`.
pub fn qualifying_primes(l: u64, x: u64) -> Result<Vec<QualifyingPrime>> {
    arith::check_odd_prime(l)?;
    let root = x.isqrt();
    let mut out = Vec::new();
    for p in PrimeSieve::new(2, x) {
        if p == l {
            continue;
        }
        if p > root {
            // only split primes can still have norm <= x
            if p % l == 1 {
                out.push(QualifyingPrime { norm: p as u128, p, f: 1 });
            }
            continue;
        }
        let f = arith::multiplicative_order(p, l)?;
        if let Some(norm) = (p as u128).checked_pow(f).filter(|&n| n <= x as u128) {
            out.push(QualifyingPrime { norm, p, f });
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Every prime ideal above every `p != l` with norm at most `x`, ordered by
/// norm, then `p`, then the canonical order of the ideals above `p`.
pub fn enumerate_prime_ideals(l: u64, x: u64) -> Result<impl Iterator<Item = PrimeIdeal>> {
    enumerate_prime_ideals_seeded(l, x, 0)
}

pub fn enumerate_prime_ideals_seeded(
    l: u64,
    x: u64,
    seed: u64,
) -> Result<impl Iterator<Item = PrimeIdeal>> {
    let primes = qualifying_primes(l, x)?;
    Ok(primes.into_iter().flat_map(move |q| {
        primes_above_seeded(q.p, l, seed).expect("qualifying primes are unramified")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn norms(l: u64, x: u64) -> Vec<(u128, u64)> {
        enumerate_prime_ideals(l, x)
            .unwrap()
            .map(|i| (i.norm(), i.p()))
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(norms(3, 10), vec![(4, 2), (7, 7), (7, 7)]);
        assert!(norms(3, 3).is_empty());
        assert_eq!(norms(5, 11), vec![(11, 11); 4]);
    }

    #[test]
    fn l3_up_to_100() {
        let mut expected = Vec::new();
        for p in arith::primes_up_to(100) {
            match p % 3 {
                1 => expected.extend([(p as u128, p), (p as u128, p)]),
                2 if p * p <= 100 => expected.push(((p * p) as u128, p)),
                _ => {}
            }
        }
        expected.sort();
        assert_eq!(norms(3, 100), expected);
    }

    #[test]
    fn ordering_and_uniqueness() {
        let ideals: Vec<PrimeIdeal> = enumerate_prime_ideals(7, 5000).unwrap().collect();
        for w in ideals.windows(2) {
            let key = |i: &PrimeIdeal| (i.norm(), i.p(), i.g().to_vec());
            assert!(key(&w[0]) < key(&w[1]));
        }
        assert!(ideals.iter().all(|i| i.norm() <= 5000 && i.p() != 7));
        // 2 has order 3 mod 7: norm 8, two ideals
        assert_eq!(ideals.iter().filter(|i| i.p() == 2).count(), 2);
    }
}
