//! Shared driver: walk the qualifying primes in parallel, evaluate each
//! ideal, and bucket the per-ideal results by checkpoint.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::enumerate::{qualifying_primes, QualifyingPrime};
use crate::cyclotomic::{primes_above_seeded, SymbolEvaluator};
use crate::error::{Error, Result};

/// Integer tallies merged by addition, so any partition of the prime range
/// yields the same totals.
pub(crate) trait Tally: Clone + Send + Sync {
    fn empty(&self) -> Self;
    fn merge(&mut self, other: &Self);
}

#[derive(Debug, Clone)]
pub(crate) struct ScanSettings {
    pub l: u64,
    pub x: u64,
    pub threads: Option<usize>,
    pub seed: u64,
}

/// `10^3, 10^4, ...` strictly below `x`, then `x` itself.
pub fn checkpoints(x: u64) -> Vec<u64> {
    let mut out: Vec<u64> = std::iter::successors(Some(1000u64), |c| c.checked_mul(10))
        .take_while(|&c| c < x)
        .collect();
    out.push(x);
    out
}

/// Returns cumulative tallies, one per checkpoint.
pub(crate) fn scan<T, F>(
    settings: &ScanSettings,
    excluded: &BTreeSet<u128>,
    zero: &T,
    visit: F,
) -> Result<Vec<(u64, T)>>
where
    T: Tally,
    F: Fn(&mut T, &SymbolEvaluator) -> Result<()> + Sync,
{
    let cps = checkpoints(settings.x);
    let primes: Vec<QualifyingPrime> = qualifying_primes(settings.l, settings.x)?
        .into_iter()
        .filter(|q| !excluded.contains(&(q.p as u128)))
        .collect();

    let work = || -> Result<Vec<T>> {
        primes
            .par_chunks(512)
            .map(|chunk| {
                let mut buckets = vec![zero.empty(); cps.len()];
                for q in chunk {
                    let bucket = cps.partition_point(|&c| (c as u128) < q.norm);
                    let ideals = primes_above_seeded(q.p, settings.l, settings.seed)?;
                    for ideal in &ideals {
                        visit(&mut buckets[bucket], &ideal.evaluator())?;
                    }
                }
                Ok(buckets)
            })
            .try_reduce(
                || vec![zero.empty(); cps.len()],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(&b) {
                        x.merge(y);
                    }
                    Ok(a)
                },
            )
    };
    let buckets = match settings.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::InternalDisagreement(format!("thread pool: {e}")))?
            .install(work)?,
        None => work()?,
    };

    let mut acc = zero.empty();
    Ok(cps
        .into_iter()
        .zip(buckets)
        .map(|(c, b)| {
            acc.merge(&b);
            (c, acc.clone())
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checkpoint_ladder() {
        assert_eq!(checkpoints(100), vec![100]);
        assert_eq!(checkpoints(1000), vec![1000]);
        assert_eq!(checkpoints(2_000_000), vec![1000, 10_000, 100_000, 1_000_000, 2_000_000]);
        assert_eq!(checkpoints(1_000_000), vec![1000, 10_000, 100_000, 1_000_000]);
    }
}
