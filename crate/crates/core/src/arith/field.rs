use rand::Rng;

use super::{mul_mod, poly};

/// The quotient ring `F_p[X]/(g)` for a monic `g` of degree `f >= 1`; a
/// field of order `p^f` when `g` is irreducible.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteField {
    p: u64,
    modulus: Vec<u64>,
}

/// Residue class in a [`FiniteField`]: exactly `f` coefficients, each
/// reduced mod `p`, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(Vec<u64>);

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// The element as an `F_p` scalar if it has no `X`-terms.
    pub fn as_scalar(&self) -> Option<u64> {
        self.0[1..].iter().all(|&c| c == 0).then(|| self.0[0])
    }
}

impl FiniteField {
    /// `modulus` is monic, lowest degree first, of degree at least one.
    pub fn new(p: u64, modulus: Vec<u64>) -> Self {
        let mut modulus: Vec<u64> = modulus.into_iter().map(|c| c % p).collect();
        poly::trim(&mut modulus);
        assert!(modulus.len() >= 2, "modulus must have degree >= 1");
        assert_eq!(*modulus.last().unwrap(), 1, "modulus must be monic");
        FiniteField { p, modulus }
    }

    /// The prime field `F_p`, presented as `F_p[X]/(X)`.
    pub fn prime_field(p: u64) -> Self {
        FiniteField::new(p, vec![0, 1])
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// `p^f`, or `None` when it does not fit in a `u128`.
    pub fn order(&self) -> Option<u128> {
        (self.p as u128).checked_pow(self.degree() as u32)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(vec![0; self.degree()])
    }

    pub fn one(&self) -> FieldElement {
        self.scalar(1)
    }

    pub fn scalar(&self, c: u64) -> FieldElement {
        let mut v = vec![0; self.degree()];
        v[0] = c % self.p;
        FieldElement(v)
    }

    /// Class of the polynomial variable `X`.
    pub fn generator(&self) -> FieldElement {
        self.element(&[0, 1])
    }

    /// Reduces an arbitrary coefficient list into the field.
    pub fn element(&self, coeffs: &[u64]) -> FieldElement {
        let reduced: Vec<u64> = coeffs.iter().map(|&c| c % self.p).collect();
        let (_, mut rem) = poly::div_rem(&reduced, &self.modulus, self.p);
        rem.resize(self.degree(), 0);
        FieldElement(rem)
    }

    /// Reduces signed integer coefficients (e.g. of a cyclotomic integer).
    pub fn element_from_signed(&self, coeffs: &[i128]) -> FieldElement {
        let p = self.p as i128;
        let v: Vec<u64> = coeffs.iter().map(|&c| c.rem_euclid(p) as u64).collect();
        self.element(&v)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        FieldElement((0..self.degree()).map(|_| rng.gen_range(0..self.p)).collect())
    }

    pub fn is_one(&self, x: &FieldElement) -> bool {
        x.0[0] == 1 % self.p && x.0[1..].iter().all(|&c| c == 0)
    }

    pub fn add(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        FieldElement(
            x.0.iter()
                .zip(&y.0)
                .map(|(&a, &b)| (a + b) % self.p)
                .collect(),
        )
    }

    pub fn sub(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        FieldElement(
            x.0.iter()
                .zip(&y.0)
                .map(|(&a, &b)| (a + self.p - b) % self.p)
                .collect(),
        )
    }

    pub fn neg(&self, x: &FieldElement) -> FieldElement {
        self.sub(&self.zero(), x)
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let p = self.p;
        let f = self.degree();
        if f == 1 {
            return FieldElement(vec![mul_mod(x.0[0], y.0[0], p)]);
        }
        // schoolbook product, then fold the high part back with X^f = -(g - X^f)
        let mut prod = vec![0u64; 2 * f - 1];
        for (i, &a) in x.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.0.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        for k in (f..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (j, &g) in self.modulus[..f].iter().enumerate() {
                let i = k - f + j;
                prod[i] = (prod[i] + p - mul_mod(c, g, p)) % p;
            }
        }
        prod.truncate(f);
        FieldElement(prod)
    }

    /// Square-and-multiply.
    pub fn pow(&self, x: &FieldElement, mut e: u128) -> FieldElement {
        let mut acc = self.one();
        let mut base = x.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

pub fn ff_pow(field: &FiniteField, x: &FieldElement, e: u128) -> FieldElement {
    field.pow(x, e)
}
