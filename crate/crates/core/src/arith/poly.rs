//! Dense polynomials over `Z/p`, coefficients stored lowest degree first.
//! The zero polynomial is the empty vector.

use super::{inv_mod, mul_mod};

pub fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (0..a.len().max(b.len()))
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(&mut out);
    out
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (0..a.len().max(b.len()))
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(&mut out);
    out
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by a nonzero `b`.
pub fn div_rem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = inv_mod(b[db], p);
    let mut rem: Vec<u64> = a.to_vec();
    trim(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![0u64; rem.len() - db];
    for k in (db..rem.len()).rev() {
        let c = mul_mod(rem[k], lead_inv, p);
        if c == 0 {
            continue;
        }
        quot[k - db] = c;
        for (j, &bj) in b[..=db].iter().enumerate() {
            let i = k - db + j;
            rem[i] = (rem[i] + p - mul_mod(c, bj, p)) % p;
        }
    }
    rem.truncate(db);
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

pub fn make_monic(a: &mut [u64], p: u64) {
    if let Some(d) = degree(a) {
        let inv = inv_mod(a[d], p);
        for c in a.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
    }
}

/// Monic gcd.
pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y, p);
        x = y;
        y = r;
    }
    make_monic(&mut x, p);
    x
}

/// `Phi_l = 1 + X + ... + X^(l-1)` reduced mod `p`.
pub fn cyclotomic(l: u64, p: u64) -> Vec<u64> {
    vec![1 % p; l as usize]
}
