use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An element `c_0 + c_1 z + ... + c_{l-2} z^{l-2}` of `Z[z]`, `z` a
/// primitive `l`-th root of unity. Always stored reduced by `Phi_l(z) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInt {
    l: u64,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInt {
    /// Accepts any number of coefficients; powers `z^k` with `k >= l - 1`
    /// are reduced.
    pub fn new<I, T>(l: u64, coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let l_us = l as usize;
        let mut cyc = vec![BigInt::zero(); l_us];
        for (i, c) in coeffs.into_iter().enumerate() {
            cyc[i % l_us] += c.into();
        }
        Self::from_cyclic(l, cyc)
    }

    pub fn from_integer(l: u64, n: impl Into<BigInt>) -> Self {
        Self::new(l, [n.into()])
    }

    pub fn zeta(l: u64) -> Self {
        Self::new(l, [0, 1])
    }

    pub fn one(l: u64) -> Self {
        Self::from_integer(l, 1)
    }

    /// `cyc` has length `l` (coefficients modulo `z^l - 1`); folds away the
    /// top coefficient using `z^{l-1} = -(1 + ... + z^{l-2})`.
    fn from_cyclic(l: u64, mut cyc: Vec<BigInt>) -> Self {
        let top = cyc.pop().expect("l >= 3");
        if !top.is_zero() {
            for c in cyc.iter_mut() {
                *c -= &top;
            }
        }
        CyclotomicInt { l, coeffs: cyc }
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational integer this element equals, if any.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    /// Image under the automorphism `z -> z^k`, `k` coprime to `l`.
    pub fn conjugate(&self, k: u64) -> Self {
        assert!(!k.is_multiple_of(self.l), "k must be a unit mod l");
        let l_us = self.l as usize;
        let mut cyc = vec![BigInt::zero(); l_us];
        for (i, c) in self.coeffs.iter().enumerate() {
            cyc[(i * k as usize) % l_us] += c;
        }
        Self::from_cyclic(self.l, cyc)
    }

    /// Field norm down to `Q`, as the resultant `Res(Phi_l, A)` where `A` is
    /// the representing polynomial.
    pub fn norm(&self) -> BigInt {
        let mut a = self.coeffs.clone();
        while a.last().is_some_and(Zero::is_zero) {
            a.pop();
        }
        if a.is_empty() {
            return BigInt::zero();
        }
        let phi = vec![BigInt::one(); self.l as usize];
        resultant(&phi, &a)
    }

    /// Congruent to a rational integer modulo `(1 - z)^2`. Expanding around
    /// `z = 1 - pi` gives `sum c_i - (sum i*c_i) pi (mod pi^2)`, and a
    /// rational integer lies in `(pi)` iff `l` divides it.
    pub fn is_primary(&self) -> bool {
        let weighted: BigInt = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigInt::from(i))
            .sum();
        (weighted % BigInt::from(self.l)).is_zero()
    }

    /// Evaluation at `exp(2 pi i / l)` as `(re, im)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let step = std::f64::consts::TAU / self.l as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (i, c)| {
                let c = c.to_f64().unwrap_or(f64::NAN);
                let t = step * i as f64;
                (re + c * t.cos(), im + c * t.sin())
            })
    }

    pub(crate) fn coeffs_mod(&self, p: u64) -> Vec<u64> {
        let m = BigInt::from(p);
        self.coeffs
            .iter()
            .map(|c| {
                let r = c % &m;
                let r = if r.is_negative() { r + &m } else { r };
                r.to_u64().expect("reduced below p")
            })
            .collect()
    }
}

/// Determinant of the Sylvester matrix, by fraction-free (Bareiss)
/// elimination. Coefficients are lowest degree first.
fn resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let n = f.len() - 1;
    let m = g.len() - 1;
    if m == 0 {
        return num_traits::pow(g[0].clone(), n);
    }
    let size = n + m;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for (i, row) in mat.iter_mut().take(m).enumerate() {
        for (k, c) in f.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
    }
    for (j, row) in mat.iter_mut().skip(m).enumerate() {
        for (k, c) in g.iter().rev().enumerate() {
            row[j + k] = c.clone();
        }
    }
    bareiss_det(mat)
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "z")?,
                1 => write!(f, "{a}z")?,
                _ if a.is_one() => write!(f, "z^{i}")?,
                _ => write!(f, "{a}z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn add(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        assert_eq!(self.l, rhs.l);
        CyclotomicInt {
            l: self.l,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn sub(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        assert_eq!(self.l, rhs.l);
        CyclotomicInt {
            l: self.l,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn neg(self) -> CyclotomicInt {
        CyclotomicInt {
            l: self.l,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn mul(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        assert_eq!(self.l, rhs.l);
        let l = self.l as usize;
        let mut cyc = vec![BigInt::zero(); l];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                cyc[(i + j) % l] += a * b;
            }
        }
        CyclotomicInt::from_cyclic(self.l, cyc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CyclotomicInt {
            type Output = CyclotomicInt;

            fn $m(self, rhs: CyclotomicInt) -> CyclotomicInt {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
