use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{primes_above, CyclotomicInt, PrimeIdeal};
use crate::arith;
use crate::error::{Error, Result};

/// The exponent `i` in `(alpha/P)_l = z^i`, canonical in `0..l`; `0` is the
/// trivial symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolExponent(u64);

impl SymbolExponent {
    pub fn new(value: u64, l: u64) -> Self {
        SymbolExponent(value % l)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_trivial(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for SymbolExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Kummer's criterion: `alpha^((N(P)-1)/l)` in the residue field, matched
/// against the images of the powers of `z`.
pub fn residue_symbol(alpha: &CyclotomicInt, ideal: &PrimeIdeal) -> Result<SymbolExponent> {
    assert_eq!(alpha.l(), ideal.l(), "element and ideal live in different fields");
    let ev = ideal.evaluator();
    let x = ev.field().element(&alpha.coeffs_mod(ideal.p()));
    ev.exponent_of(&x)
        .map(SymbolExponent)
        .ok_or(Error::SymbolUndefined { p: ideal.p() })
}

/// [`residue_symbol`] for a rational integer.
pub fn residue_symbol_of_integer(a: &BigInt, ideal: &PrimeIdeal) -> Result<SymbolExponent> {
    let residue = a.mod_floor_u64(ideal.p());
    ideal
        .evaluator()
        .exponent_of_scalar(residue)
        .map(SymbolExponent)
        .ok_or(Error::SymbolUndefined { p: ideal.p() })
}

trait ModFloor {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloor for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        let m = BigInt::from(p);
        let r = self % &m;
        let r = if r.is_negative() { r + m } else { r };
        r.to_u64().expect("reduced below p")
    }
}

/// `(alpha / n)_l`: the sum of exponents at every prime ideal dividing
/// `(n)`, counted with multiplicity.
pub fn symbol_over_integer(alpha: &CyclotomicInt, n: i128) -> Result<SymbolExponent> {
    let l = alpha.l();
    arith::check_odd_prime(l)?;
    if n % l as i128 == 0 {
        return Err(Error::NotCoprime { prime: l as u128 });
    }
    let norm = alpha.norm();
    let mut total = 0u64;
    for &(q, v) in arith::factorize(n)?.factors() {
        if (&norm % BigInt::from(q)).is_zero() {
            return Err(Error::NotCoprime { prime: q });
        }
        let q64 = u64::try_from(q).map_err(|_| Error::PrimeTooLarge(q))?;
        for ideal in primes_above(q64, l)? {
            let e = residue_symbol(alpha, &ideal)?.value();
            total = (total + e * (v as u64 % l)) % l;
        }
    }
    Ok(SymbolExponent(total))
}

/// Both sides of Eisenstein reciprocity, `(a/alpha)_l` and `(alpha/a)_l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EisensteinSides {
    pub ideal: PrimeIdeal,
    pub a_over_alpha: SymbolExponent,
    pub alpha_over_a: SymbolExponent,
}

impl EisensteinSides {
    pub fn agree(&self) -> bool {
        self.a_over_alpha == self.alpha_over_a
    }
}

/// Evaluates both sides for a primary `alpha` generating a prime ideal and a
/// rational `a` coprime to `l` and to `N(alpha)`.
pub fn eisenstein_sides(alpha: &CyclotomicInt, a: i128) -> Result<EisensteinSides> {
    let l = alpha.l();
    arith::check_odd_prime(l)?;
    if !alpha.is_primary() {
        return Err(Error::NotPrimary);
    }
    if a % l as i128 == 0 {
        return Err(Error::NotCoprime { prime: l as u128 });
    }
    let norm = alpha.norm();
    let unsupported = || Error::UnsupportedModulus {
        norm: norm.to_string(),
    };
    let norm_i = norm.to_i128().filter(|n| *n != 0).ok_or_else(unsupported)?;
    let fac = arith::factorize(norm_i)?;
    let [(p, e)] = fac.factors() else {
        return Err(unsupported());
    };
    let p = u64::try_from(*p).map_err(|_| unsupported())?;
    if p == l || arith::multiplicative_order(p, l)? != *e {
        return Err(unsupported());
    }
    if a % p as i128 == 0 {
        return Err(Error::NotCoprime { prime: p as u128 });
    }
    let ideal = primes_above(p, l)?
        .into_iter()
        .find(|ideal| {
            let field = ideal.residue_field();
            field.element(&alpha.coeffs_mod(p)).is_zero()
        })
        .ok_or_else(unsupported)?;
    let a_over_alpha = residue_symbol_of_integer(&BigInt::from(a), &ideal)?;
    let alpha_over_a = symbol_over_integer(alpha, a)?;
    Ok(EisensteinSides {
        ideal,
        a_over_alpha,
        alpha_over_a,
    })
}

pub fn eisenstein_check(alpha: &CyclotomicInt, a: i128) -> Result<bool> {
    eisenstein_sides(alpha, a).map(|s| s.agree())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(p: u64, l: u64, g: &[u64]) -> PrimeIdeal {
        primes_above(p, l)
            .unwrap()
            .into_iter()
            .find(|i| i.g() == g)
            .unwrap()
    }

    #[test]
    fn symbol_examples() {
        // z -> 2 mod 7, 2^2 = 4 = image of z^2
        let p7 = ideal(7, 3, &[5, 1]);
        let two = CyclotomicInt::from_integer(3, 2);
        assert_eq!(residue_symbol(&two, &p7).unwrap().value(), 2);
        // conjugate ideal z -> 4: 4 = z^1
        let p7b = ideal(7, 3, &[3, 1]);
        assert_eq!(residue_symbol(&two, &p7b).unwrap().value(), 1);

        let p2 = ideal(2, 3, &[1, 1, 1]);
        assert_eq!(residue_symbol_of_integer(&BigInt::from(3), &p2).unwrap().value(), 0);

        for p in [5u64, 7, 11, 13, 31] {
            for i in primes_above(p, 3).unwrap() {
                assert!(residue_symbol_of_integer(&BigInt::from(8), &i).unwrap().is_trivial());
            }
        }
    }

    #[test]
    fn undefined_inside_ideal() {
        let p7 = ideal(7, 3, &[5, 1]);
        assert_eq!(
            residue_symbol_of_integer(&BigInt::from(14), &p7),
            Err(Error::SymbolUndefined { p: 7 })
        );
        // 1 + 3z vanishes at z = 2 mod 7
        let alpha = CyclotomicInt::new(3, [1, 3]);
        assert!(residue_symbol(&alpha, &p7).is_err());
        assert!(residue_symbol(&alpha, &ideal(7, 3, &[3, 1])).is_ok());
    }

    #[test]
    fn negative_integers() {
        for i in primes_above(13, 3).unwrap() {
            let pos = residue_symbol_of_integer(&BigInt::from(5), &i).unwrap();
            let neg = residue_symbol_of_integer(&BigInt::from(-5), &i).unwrap();
            assert_eq!(pos, neg);
        }
    }

    #[test]
    fn over_integer_examples() {
        let alpha = CyclotomicInt::new(3, [1, 3]);
        assert_eq!(symbol_over_integer(&alpha, 2).unwrap().value(), 2);
        assert_eq!(symbol_over_integer(&alpha, 1).unwrap().value(), 0);
        assert_eq!(
            symbol_over_integer(&alpha, 14),
            Err(Error::NotCoprime { prime: 7 })
        );
        assert_eq!(
            symbol_over_integer(&alpha, 6),
            Err(Error::NotCoprime { prime: 3 })
        );

        // split q: the two conjugate exponents add up
        let beta = CyclotomicInt::new(3, [2, 5]);
        let split: u64 = primes_above(13, 3)
            .unwrap()
            .iter()
            .map(|i| residue_symbol(&beta, i).unwrap().value())
            .sum();
        assert_eq!(symbol_over_integer(&beta, 13).unwrap().value(), split % 3);
        // multiplicity counts
        let once = symbol_over_integer(&beta, 13).unwrap().value();
        assert_eq!(symbol_over_integer(&beta, 169).unwrap().value(), 2 * once % 3);
    }

    #[test]
    fn eisenstein_golden() {
        let alpha = CyclotomicInt::new(3, [1, 3]);
        let sides = eisenstein_sides(&alpha, 2).unwrap();
        assert_eq!(sides.ideal.g(), &[5, 1]);
        assert_eq!(sides.a_over_alpha.value(), 2);
        assert_eq!(sides.alpha_over_a.value(), 2);
        assert!(sides.agree());

        // a rational prime that stays inert, a = 1
        let five = CyclotomicInt::from_integer(3, 5);
        assert!(eisenstein_check(&five, 1).unwrap());
    }

    #[test]
    fn eisenstein_preconditions() {
        let alpha = CyclotomicInt::new(3, [1, 3]);
        assert_eq!(eisenstein_check(&CyclotomicInt::zeta(3), 2), Err(Error::NotPrimary));
        assert_eq!(eisenstein_check(&alpha, 3), Err(Error::NotCoprime { prime: 3 }));
        assert_eq!(eisenstein_check(&alpha, 14), Err(Error::NotCoprime { prime: 7 }));
        // 7 is split, so (7) is not prime
        let seven = CyclotomicInt::from_integer(3, 7);
        assert!(matches!(
            eisenstein_check(&seven, 2),
            Err(Error::UnsupportedModulus { .. })
        ));
    }
}
