//! Exact integer arithmetic: factorization, l-th powers, orders and
//! arithmetic in finite fields `F_p[X]/(g)`.

mod factor;
mod field;
pub mod poly;
mod sieve;

pub use factor::{
    exact_lth_root, exact_lth_root_big, factorize, factorize_bounded, lth_power_free,
    PrimeFactorization, DEFAULT_BOUND_BITS,
};
pub use field::{ff_pow, FieldElement, FiniteField};
pub use sieve::{primes_up_to, PrimeSieve};

use crate::error::{Error, Result};

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u128, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo the prime `p`. `a` must be nonzero mod `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, (p - 2) as u128, p)
}

pub fn is_prime(n: u64) -> bool {
    num_prime::nt_funcs::is_prime64(n)
}

/// Rejects anything that is not an odd prime.
pub fn check_odd_prime(l: u64) -> Result<()> {
    if l < 3 || !is_prime(l) {
        return Err(Error::InvalidExponent(l));
    }
    Ok(())
}

/// Smallest `f >= 1` with `p^f = 1 (mod l)`: the inertia degree of `p` in
/// the `l`-th cyclotomic field.
pub fn multiplicative_order(p: u64, l: u64) -> Result<u32> {
    let base = p % l;
    if base == 0 {
        return Err(Error::RamifiedPrime { p, l });
    }
    let mut acc = base;
    let mut f = 1u32;
    while acc != 1 {
        acc = mul_mod(acc, base, l);
        f += 1;
    }
    Ok(f)
}
