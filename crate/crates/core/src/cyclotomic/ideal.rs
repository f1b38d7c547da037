use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{self, poly, FieldElement, FiniteField};
use crate::error::{Error, Result};

/// A prime of `Z[z]` above an unramified rational prime `p`: the kernel of
/// `z -> X` into `F_p[X]/(g)`, where `g` is a monic irreducible factor of
/// `Phi_l` mod `p` of degree `f = ord_l(p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeIdeal {
    l: u64,
    p: u64,
    f: u32,
    g: Vec<u64>,
}

impl PrimeIdeal {
    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn inertia_degree(&self) -> u32 {
        self.f
    }

    /// Coefficients of `g`, lowest degree first (length `f + 1`).
    pub fn g(&self) -> &[u64] {
        &self.g
    }

    pub fn norm(&self) -> u128 {
        (self.p as u128).pow(self.f)
    }

    pub fn residue_field(&self) -> FiniteField {
        FiniteField::new(self.p, self.g.clone())
    }

    /// Precomputes what symbol evaluation at this ideal needs.
    pub fn evaluator(&self) -> SymbolEvaluator {
        SymbolEvaluator::new(self)
    }

    /// `g` rendered as a polynomial in `X` with coefficients in `0..p`.
    pub fn g_string(&self) -> String {
        let mut terms = Vec::new();
        for (i, &c) in self.g.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            terms.push(match i {
                0 => c.to_string(),
                1 => format!("{coef}X"),
                _ => format!("{coef}X^{i}"),
            });
        }
        terms.join(" + ")
    }
}

/// The residue field of a [`PrimeIdeal`] together with the images of
/// `z^0, ..., z^{l-1}` and the Kummer exponent `(N(P) - 1)/l`.
#[derive(Debug, Clone)]
pub struct SymbolEvaluator {
    field: FiniteField,
    exponent: u128,
    roots: Vec<FieldElement>,
}

impl SymbolEvaluator {
    fn new(ideal: &PrimeIdeal) -> Self {
        let field = ideal.residue_field();
        let zeta = field.generator();
        let mut roots = Vec::with_capacity(ideal.l as usize);
        let mut acc = field.one();
        for _ in 0..ideal.l {
            roots.push(acc.clone());
            acc = field.mul(&acc, &zeta);
        }
        SymbolEvaluator {
            exponent: (ideal.norm() - 1) / ideal.l as u128,
            field,
            roots,
        }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// Images of `z^0, ..., z^{l-1}`.
    pub fn roots(&self) -> &[FieldElement] {
        &self.roots
    }

    /// The index `i` with `x^((N-1)/l) = z^i`, or `None` when `x = 0`.
    pub fn exponent_of(&self, x: &FieldElement) -> Option<u64> {
        if x.is_zero() {
            return None;
        }
        let y = self.field.pow(x, self.exponent);
        let i = self
            .roots
            .iter()
            .position(|r| *r == y)
            .expect("x^((N-1)/l) is an l-th root of unity");
        Some(i as u64)
    }

    /// Same as [`Self::exponent_of`] for a residue already in `Z/p`.
    pub fn exponent_of_scalar(&self, a: u64) -> Option<u64> {
        self.exponent_of(&self.field.scalar(a))
    }
}

fn ideal_seed(p: u64, l: u64, seed: u64) -> u64 {
    p.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ l.rotate_left(32) ^ seed
}

/// All prime ideals above `p`, sorted lexicographically on the coefficient
/// list of `g` (lowest degree first).
pub fn primes_above(p: u64, l: u64) -> Result<Vec<PrimeIdeal>> {
    primes_above_seeded(p, l, 0)
}

/// As [`primes_above`]; `seed` only steers the internal random search and
/// never changes the result.
pub fn primes_above_seeded(p: u64, l: u64, seed: u64) -> Result<Vec<PrimeIdeal>> {
    arith::check_odd_prime(l)?;
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let f = arith::multiplicative_order(p, l)?;
    let order = (p as u128)
        .checked_pow(f)
        .ok_or(Error::NormOverflow { p, f })?;
    let mut rng = ChaCha8Rng::seed_from_u64(ideal_seed(p, l, seed));

    let field = if f == 1 {
        FiniteField::prime_field(p)
    } else {
        loop {
            let mut h: Vec<u64> = (0..f).map(|_| rand::Rng::gen_range(&mut rng, 0..p)).collect();
            h.push(1);
            if is_irreducible(&h, p) {
                break FiniteField::new(p, h);
            }
        }
    };

    // an element of exact order l
    let theta = loop {
        let z = field.random(&mut rng);
        if z.is_zero() {
            continue;
        }
        let t = field.pow(&z, (order - 1) / l as u128);
        if !field.is_one(&t) {
            break t;
        }
    };
    let mut theta_pow = Vec::with_capacity(l as usize);
    let mut acc = field.one();
    for _ in 0..l {
        theta_pow.push(acc.clone());
        acc = field.mul(&acc, &theta);
    }

    let mut seen = vec![false; l as usize];
    let mut ideals = Vec::with_capacity(((l - 1) / f as u64) as usize);
    for j in 1..l {
        if seen[j as usize] {
            continue;
        }
        let mut orbit = Vec::with_capacity(f as usize);
        let mut k = j;
        for _ in 0..f {
            seen[k as usize] = true;
            orbit.push(k);
            k = arith::mul_mod(k, p % l, l);
        }
        let g = minimal_polynomial(&field, orbit.iter().map(|&k| &theta_pow[k as usize]));
        ideals.push(PrimeIdeal { l, p, f, g });
    }
    ideals.sort_by(|a, b| a.g.cmp(&b.g));
    Ok(ideals)
}

/// `prod (Y - c)` over the given Frobenius orbit; the coefficients land in
/// `F_p`.
fn minimal_polynomial<'a>(
    field: &FiniteField,
    conjugates: impl Iterator<Item = &'a FieldElement>,
) -> Vec<u64> {
    let mut acc: Vec<FieldElement> = vec![field.one()];
    for c in conjugates {
        let mut next = vec![field.zero(); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i + 1] = field.add(&next[i + 1], a);
            next[i] = field.sub(&next[i], &field.mul(a, c));
        }
        acc = next;
    }
    acc.iter()
        .map(|c| c.as_scalar().expect("orbit product has F_p coefficients"))
        .collect()
}

/// Rabin's test for a monic `h` of degree `f >= 1` over `F_p`.
pub(crate) fn is_irreducible(h: &[u64], p: u64) -> bool {
    let f = h.len() - 1;
    if f == 1 {
        return true;
    }
    let ring = FiniteField::new(p, h.to_vec());
    let x = ring.generator();
    // frob[k] = X^(p^k) mod h
    let mut frob = vec![x.clone()];
    for k in 1..=f {
        let next = ring.pow(&frob[k - 1], p as u128);
        frob.push(next);
    }
    if frob[f] != x {
        return false;
    }
    let as_poly = |e: &FieldElement| {
        let mut v = e.coeffs().to_vec();
        poly::trim(&mut v);
        v
    };
    prime_divisors(f).into_iter().all(|r| {
        let d = poly::sub(&as_poly(&frob[f / r]), &as_poly(&x), p);
        poly::gcd(&d, h, p) == vec![1]
    })
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(ideals: &[PrimeIdeal], p: u64) -> Vec<u64> {
        ideals
            .iter()
            .fold(vec![1], |acc, ideal| poly::mul(&acc, ideal.g(), p))
    }

    #[test]
    fn examples() {
        let above7 = primes_above(7, 3).unwrap();
        let gs: Vec<&[u64]> = above7.iter().map(|i| i.g()).collect();
        assert_eq!(gs, vec![&[3, 1][..], &[5, 1][..]]);
        assert!(above7.iter().all(|i| i.inertia_degree() == 1 && i.norm() == 7));

        let above2 = primes_above(2, 3).unwrap();
        assert_eq!(above2.len(), 1);
        assert_eq!(above2[0].g(), &[1, 1, 1]);
        assert_eq!(above2[0].norm(), 4);

        let above13 = primes_above(13, 3).unwrap();
        let gs: Vec<&[u64]> = above13.iter().map(|i| i.g()).collect();
        // roots 3 and 9: X - 9 = X + 4, X - 3 = X + 10
        assert_eq!(gs, vec![&[4, 1][..], &[10, 1][..]]);
    }

    #[test]
    fn ramified_and_invalid() {
        assert_eq!(primes_above(3, 3), Err(Error::RamifiedPrime { p: 3, l: 3 }));
        assert_eq!(primes_above(9, 3), Err(Error::NotPrime(9)));
        assert_eq!(primes_above(7, 4), Err(Error::InvalidExponent(4)));
    }

    #[test]
    fn factors_multiply_to_phi() {
        for l in [3u64, 5, 7, 11, 13] {
            for p in arith::primes_up_to(300).into_iter().filter(|&p| p != l) {
                let ideals = primes_above(p, l).unwrap();
                let f = arith::multiplicative_order(p, l).unwrap();
                assert_eq!(ideals.len() as u64, (l - 1) / f as u64);
                assert_eq!(product(&ideals, p), poly::cyclotomic(l, p), "l={l} p={p}");
                for w in ideals.windows(2) {
                    assert!(w[0].g() < w[1].g());
                }
                for ideal in &ideals {
                    assert_eq!(ideal.g().len(), f as usize + 1);
                    assert!(is_irreducible(ideal.g(), p));
                    assert_eq!((ideal.norm() - 1) % l as u128, 0);
                    let ev = ideal.evaluator();
                    let mut roots = ev.roots().to_vec();
                    roots.sort();
                    roots.dedup();
                    assert_eq!(roots.len(), l as usize);
                }
            }
        }
    }

    #[test]
    fn result_independent_of_seed() {
        for (p, l) in [(2u64, 7u64), (29, 5), (1_000_003, 3), (3, 11)] {
            let base = primes_above(p, l).unwrap();
            for seed in 1..5 {
                assert_eq!(primes_above_seeded(p, l, seed).unwrap(), base);
            }
        }
    }

    #[test]
    fn degree_one_roots_by_search() {
        // g = X - r for each primitive l-th root r of unity mod p
        for (p, l) in [(31u64, 5u64), (43, 7), (67, 11)] {
            let mut expected: Vec<Vec<u64>> = (2..p)
                .filter(|&r| arith::pow_mod(r, l as u128, p) == 1)
                .map(|r| vec![p - r, 1])
                .collect();
            expected.sort();
            let got: Vec<Vec<u64>> = primes_above(p, l).unwrap().iter().map(|i| i.g().to_vec()).collect();
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn irreducibility_test() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(is_irreducible(&[1, 1, 0, 1], 2));
        assert!(!is_irreducible(&[1, 1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2)); // (X^2+X+1)^2
    }

    #[test]
    fn g_rendering() {
        let above7 = primes_above(7, 3).unwrap();
        assert_eq!(above7[1].g_string(), "X + 5");
        assert_eq!(primes_above(2, 3).unwrap()[0].g_string(), "X^2 + X + 1");
    }
}
