use std::collections::BTreeSet;

use super::root_of_unity_sum;
use super::scan::{scan, ScanSettings, Tally};
use crate::arith::{self, exact_lth_root};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub x: u64,
    pub threads: Option<usize>,
    pub seed: u64,
}

impl ScanOptions {
    pub fn new(x: u64) -> Self {
        ScanOptions {
            x,
            threads: None,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CharacterSumCheckpoint {
    pub x: u64,
    pub ideals: u64,
    pub tallies: Vec<u64>,
    pub re: f64,
    pub im: f64,
    pub magnitude: f64,
    /// `magnitude / ideals`, or `0` for an empty sum.
    pub normalized: f64,
}

/// `sum (n/P)_l` over the prime ideals of norm at most `x` not dividing
/// `n`, as tallies of each exponent plus the resulting complex value.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterSum {
    pub n: i128,
    pub l: u64,
    pub x: u64,
    pub checkpoints: Vec<CharacterSumCheckpoint>,
}

impl CharacterSum {
    /// The final checkpoint (norm bound `x`).
    pub fn total(&self) -> &CharacterSumCheckpoint {
        self.checkpoints.last().expect("at least one checkpoint")
    }
}

#[derive(Debug, Clone)]
struct Counts {
    ideals: u64,
    tallies: Vec<u64>,
}

impl Tally for Counts {
    fn empty(&self) -> Self {
        Counts {
            ideals: 0,
            tallies: vec![0; self.tallies.len()],
        }
    }

    fn merge(&mut self, other: &Self) {
        self.ideals += other.ideals;
        for (a, b) in self.tallies.iter_mut().zip(&other.tallies) {
            *a += b;
        }
    }
}

pub fn character_sum(n: i128, l: u64, x: u64) -> Result<CharacterSum> {
    character_sum_with(n, l, &ScanOptions::new(x))
}

pub fn character_sum_with(n: i128, l: u64, opts: &ScanOptions) -> Result<CharacterSum> {
    arith::check_odd_prime(l)?;
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    if exact_lth_root(n, l as u32).is_some() {
        return Err(Error::LthPower(n.to_string()));
    }
    let excluded: BTreeSet<u128> = arith::factorize(n)?.primes().collect();
    let settings = ScanSettings {
        l,
        x: opts.x,
        threads: opts.threads,
        seed: opts.seed,
    };
    let zero = Counts {
        ideals: 0,
        tallies: vec![0; l as usize],
    };
    let rows = scan(&settings, &excluded, &zero, |counts, ev| {
        let p = ev.field().characteristic();
        let e = ev
            .exponent_of_scalar(n.rem_euclid(p as i128) as u64)
            .expect("primes of n are excluded");
        counts.ideals += 1;
        counts.tallies[e as usize] += 1;
        Ok(())
    })?;
    Ok(CharacterSum {
        n,
        l,
        x: opts.x,
        checkpoints: rows
            .into_iter()
            .map(|(x, c)| {
                let (re, im) = root_of_unity_sum(&c.tallies);
                let magnitude = re.hypot(im);
                CharacterSumCheckpoint {
                    x,
                    ideals: c.ideals,
                    normalized: if c.ideals == 0 { 0.0 } else { magnitude / c.ideals as f64 },
                    tallies: c.tallies,
                    re,
                    im,
                    magnitude,
                }
            })
            .collect(),
    })
}
