//! Density experiments: enumerate primes of `Q(z)` by norm, count those at
//! which every radicand has its prescribed residue symbol, and compare the
//! observed proportion with `1/l^t`.

mod charsum;
mod enumerate;
mod experiment;
mod scan;

pub use charsum::{character_sum, character_sum_with, CharacterSum, CharacterSumCheckpoint, ScanOptions};
pub use enumerate::{
    enumerate_prime_ideals, enumerate_prime_ideals_seeded, qualifying_primes, QualifyingPrime,
};
pub use experiment::{
    density_experiment, density_experiment_with, DensityCheckpoint, DensityOptions, DensityReport,
    SymbolSum,
};
pub use scan::checkpoints;

/// Target symbols `a_i -> z^{r_i}`, one exponent per raw radicand.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TargetAssignment {
    l: u64,
    r: Vec<u64>,
}

impl TargetAssignment {
    /// Exponents are taken mod `l`.
    pub fn new(l: u64, r: impl IntoIterator<Item = i64>) -> Self {
        let r = r.into_iter().map(|x| x.rem_euclid(l as i64) as u64).collect();
        TargetAssignment { l, r }
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn exponents(&self) -> &[u64] {
        &self.r
    }

    pub fn len(&self) -> usize {
        self.r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_empty()
    }
}

/// `sum_k tallies[k] z^k` as a complex number.
pub(crate) fn root_of_unity_sum(tallies: &[u64]) -> (f64, f64) {
    let l = tallies.len() as f64;
    tallies.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, &c)| {
        let t = std::f64::consts::TAU * k as f64 / l;
        (re + c as f64 * t.cos(), im + c as f64 * t.sin())
    })
}
