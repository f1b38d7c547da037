use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::{One, Pow};

use crate::error::{Error, Result};

/// Inputs above `2^DEFAULT_BOUND_BITS` in absolute value are refused.
pub const DEFAULT_BOUND_BITS: u32 = 96;

const TRIAL_LIMIT: u64 = 1_000_000;

/// A nonzero integer as `sign * prod p^e`, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeFactorization {
    sign: i8,
    factors: Vec<(u128, u32)>,
}

impl PrimeFactorization {
    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn factors(&self) -> &[(u128, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u128> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn exponent_of(&self, p: u128) -> u32 {
        self.factors
            .binary_search_by_key(&p, |&(q, _)| q)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn reconstruct(&self) -> i128 {
        let abs = self
            .factors
            .iter()
            .fold(1u128, |acc, &(p, e)| acc * p.pow(e));
        self.sign as i128 * abs as i128
    }
}

/// Factorization with the default bound of `2^96`.
pub fn factorize(n: i128) -> Result<PrimeFactorization> {
    factorize_bounded(n, DEFAULT_BOUND_BITS)
}

/// Trial division up to 10^6, then Pollard-rho/SQUFOF on the cofactor.
/// Every reported factor is re-verified before returning.
pub fn factorize_bounded(n: i128, bound_bits: u32) -> Result<PrimeFactorization> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let mut rest = n.unsigned_abs();
    if bound_bits < 128 && rest > (1u128 << bound_bits) {
        return Err(Error::FactorBoundExceeded {
            value: n,
            bound_bits,
        });
    }
    let sign = if n < 0 { -1 } else { 1 };
    let mut factors: Vec<(u128, u32)> = Vec::new();

    let mut push = |p: u128, rest: &mut u128| {
        let mut e = 0;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut rest);
    let mut d = 3u64;
    while d <= TRIAL_LIMIT && (d as u128) * (d as u128) <= rest {
        if let Ok(r) = u64::try_from(rest) {
            if r % d == 0 {
                push(d as u128, &mut rest);
            }
        } else if rest.is_multiple_of(d as u128) {
            push(d as u128, &mut rest);
        }
        d += 2;
    }

    if rest > 1 {
        if rest < (d as u128) * (d as u128) {
            factors.push((rest, 1));
        } else {
            for (p, e) in num_prime::nt_funcs::factorize128(rest) {
                factors.push((p, e as u32));
            }
        }
    }
    factors.sort_unstable();

    let out = PrimeFactorization { sign, factors };
    verify(&out, n)?;
    Ok(out)
}

fn verify(fac: &PrimeFactorization, n: i128) -> Result<()> {
    let mut prod = BigUint::one();
    for &(p, e) in &fac.factors {
        let prime = match u64::try_from(p) {
            Ok(p64) => num_prime::nt_funcs::is_prime64(p64),
            Err(_) => num_prime::nt_funcs::is_prime(&p, None).probably(),
        };
        if !prime {
            return Err(Error::InternalDisagreement(format!(
                "factor {p} of {n} failed the primality check"
            )));
        }
        prod *= BigUint::from(p).pow(e);
    }
    if prod != BigUint::from(n.unsigned_abs()) {
        return Err(Error::InternalDisagreement(format!(
            "factorization of {n} does not reconstruct"
        )));
    }
    Ok(())
}

/// The integer `c` with `c^l = n`, if one exists. `l` is odd, so negative
/// `n` may have a (negative) root.
pub fn exact_lth_root(n: i128, l: u32) -> Option<i128> {
    let abs = n.unsigned_abs();
    let root = abs.nth_root(l);
    if root.checked_pow(l) != Some(abs) {
        return None;
    }
    let root = i128::try_from(root).ok()?;
    Some(if n < 0 { -root } else { root })
}

pub fn exact_lth_root_big(n: &BigUint, l: u32) -> Option<BigUint> {
    let root = n.nth_root(l);
    (Pow::pow(&root, l) == *n).then_some(root)
}

/// Splits `n = core * root^l` with `core > 0` and every prime exponent of
/// `core` in `1..l`. The sign of `n` ends up in `root`.
pub fn lth_power_free(n: i128, l: u32) -> Result<(u128, i128)> {
    let fac = factorize(n)?;
    let mut core = 1u128;
    let mut root = 1i128;
    for &(p, e) in fac.factors() {
        core *= p.pow(e % l);
        root *= (p as i128).pow(e / l);
    }
    Ok((core, fac.sign() as i128 * root))
}
