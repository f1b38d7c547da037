use num_bigint::BigUint;

use super::InputSet;
use crate::arith::inv_mod;

/// Radicands `b_1..b_t` with pairwise exclusive primes generating the same
/// radical extension as the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    pub l: u64,
    /// Number of raw inputs (width of `transform`).
    pub inputs: usize,
    pub t: usize,
    /// `l`-th-power-free, positive.
    pub b: Vec<BigUint>,
    /// Factorization of each `b_j` over the radicand primes.
    pub b_factors: Vec<Vec<(u128, u32)>>,
    /// `q_j | b_j` and `q_j` divides no other `b_k`.
    pub exclusive_primes: Vec<u128>,
    /// `t x m` over `Z/l`, indexed by raw input position:
    /// `b_j = prod a_i^{E_ji}` up to `l`-th powers of rationals.
    pub transform: Vec<Vec<u64>>,
    /// Raw-indexed relations found along the way (rows that vanished);
    /// together they span every multiplicative relation among the inputs.
    pub relations: Vec<Vec<u64>>,
}

impl ReductionResult {
    /// `l^t`.
    pub fn degree(&self) -> BigUint {
        BigUint::from(self.l).pow(self.t as u32)
    }
}

struct Row {
    exps: Vec<u64>,
    transform: Vec<u64>,
}

impl Row {
    fn is_zero(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// `self <- self + mult * other`, i.e. `b' <- b^mult * b'`.
    fn absorb(&mut self, other: &Row, mult: u64, l: u64) {
        for (a, &b) in self.exps.iter_mut().zip(&other.exps) {
            *a = (*a + mult * b) % l;
        }
        for (a, &b) in self.transform.iter_mut().zip(&other.transform) {
            *a = (*a + mult * b) % l;
        }
    }
}

/// Successive elimination of shared primes. For the current radicand `b`
/// with smallest prime `q` (exponent `r`), every other radicand `b'` with
/// `v_q(b') = r'` is replaced by the `l`-th-power-free part of `b^m b'`,
/// where `m r + r' = 0 (mod l)`. Radicands that become `1` are dropped.
///
/// Runs on exponent vectors mod `l` rather than on the integers themselves.
pub fn reduce_basis(set: &InputSet) -> ReductionResult {
    let l = set.l();
    let primes = set.normalized_primes();
    let m = set.raw_len();

    let mut relations = Vec::new();
    let mut rows: Vec<Row> = Vec::new();
    for i in 0..m {
        let mut transform = vec![0u64; m];
        transform[i] = 1;
        let mut exps = vec![0u64; primes.len()];
        for &(p, e) in set.core_factors(i) {
            exps[primes.binary_search(&p).unwrap()] = e as u64 % l;
        }
        let row = Row { exps, transform };
        if row.is_zero() {
            relations.push(row.transform);
        } else {
            rows.push(row);
        }
    }

    let mut pivots = Vec::new();
    let mut k = 0;
    while k < rows.len() {
        let col = rows[k]
            .exps
            .iter()
            .position(|&e| e != 0)
            .expect("zero rows are removed eagerly");
        let inv = inv_mod(rows[k].exps[col], l);
        let (before, rest) = rows.split_at_mut(k);
        let (pivot, after) = rest.split_first_mut().unwrap();
        for other in before.iter_mut().chain(after.iter_mut()) {
            let r = other.exps[col];
            if r != 0 {
                let mult = (l - r) * inv % l;
                other.absorb(pivot, mult, l);
            }
        }
        pivots.push(col);
        // only later rows can vanish: earlier ones keep their own pivot entry
        let mut i = k + 1;
        while i < rows.len() {
            if rows[i].is_zero() {
                relations.push(rows.remove(i).transform);
            } else {
                i += 1;
            }
        }
        k += 1;
    }

    let b_factors: Vec<Vec<(u128, u32)>> = rows
        .iter()
        .map(|row| {
            primes
                .iter()
                .zip(&row.exps)
                .filter(|(_, &e)| e != 0)
                .map(|(&p, &e)| (p, e as u32))
                .collect()
        })
        .collect();
    let b = b_factors
        .iter()
        .map(|fac| {
            fac.iter()
                .fold(BigUint::from(1u32), |acc, &(p, e)| acc * BigUint::from(p).pow(e))
        })
        .collect();
    ReductionResult {
        l,
        inputs: m,
        t: rows.len(),
        b,
        b_factors,
        exclusive_primes: pivots.iter().map(|&c| primes[c]).collect(),
        transform: rows.into_iter().map(|r| r.transform).collect(),
        relations,
    }
}
