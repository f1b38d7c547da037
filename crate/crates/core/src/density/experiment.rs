use num_bigint::BigUint;

use super::scan::{scan, ScanSettings, Tally};
use super::{root_of_unity_sum, TargetAssignment};
use crate::error::{Error, Result};
use crate::radical::{consistency_check, reduce_basis, translate_targets, InputSet};

#[derive(Debug, Clone)]
pub struct DensityOptions {
    pub x: u64,
    /// Worker threads; `None` uses the global pool. Never affects results.
    pub threads: Option<usize>,
    pub seed: u64,
    /// Also count matches directly on the raw radicands and fail if any
    /// ideal disagrees with the count on the reduced radicands.
    pub verify_translation: bool,
    /// Collect symbol sums for each reduced radicand.
    pub char_sums: bool,
}

impl DensityOptions {
    pub fn new(x: u64) -> Self {
        DensityOptions {
            x,
            threads: None,
            seed: 0,
            verify_translation: false,
            char_sums: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityCheckpoint {
    pub x: u64,
    pub ideals: u64,
    pub matches: u64,
    pub empirical: f64,
}

/// Sum of `(b/P)_l` over the scanned ideals, kept as exact tallies per
/// exponent.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolSum {
    pub n: BigUint,
    pub tallies: Vec<u64>,
    pub re: f64,
    pub im: f64,
    pub magnitude: f64,
    pub normalized: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityReport {
    pub l: u64,
    pub x: u64,
    pub consistent: bool,
    pub t: usize,
    pub b: Vec<BigUint>,
    /// Targets for the reduced radicands; empty when inconsistent.
    pub s: Vec<u64>,
    pub ideals_scanned: u64,
    pub matches: u64,
    pub empirical: f64,
    pub predicted: f64,
    pub char_sums: Option<Vec<SymbolSum>>,
    pub checkpoints: Vec<DensityCheckpoint>,
}

#[derive(Debug, Clone)]
struct ExperimentTally {
    ideals: u64,
    matches: u64,
    mismatches: u64,
    symbols: Vec<Vec<u64>>,
}

impl Tally for ExperimentTally {
    fn empty(&self) -> Self {
        ExperimentTally {
            ideals: 0,
            matches: 0,
            mismatches: 0,
            symbols: vec![vec![0; self.symbols.first().map_or(0, Vec::len)]; self.symbols.len()],
        }
    }

    fn merge(&mut self, other: &Self) {
        self.ideals += other.ideals;
        self.matches += other.matches;
        self.mismatches += other.mismatches;
        for (a, b) in self.symbols.iter_mut().zip(&other.symbols) {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
        }
    }
}

fn ratio(num: u64, den: u64) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

pub fn density_experiment(set: &InputSet, targets: &TargetAssignment, x: u64) -> Result<DensityReport> {
    density_experiment_with(set, targets, &DensityOptions::new(x))
}

/// Counts the prime ideals of norm at most `x`, away from the primes of the
/// radicands, at which `(a_i/P)_l = z^{r_i}` for every `i`. The count runs
/// on the reduced radicands `b_j` with translated targets `s_j`.
pub fn density_experiment_with(
    set: &InputSet,
    targets: &TargetAssignment,
    opts: &DensityOptions,
) -> Result<DensityReport> {
    let l = set.l();
    let consistent = consistency_check(set, targets)?;
    let reduction = reduce_basis(set);
    let s = match (consistent, translate_targets(&reduction, targets)) {
        (true, Ok(s)) => s,
        (false, Err(Error::InconsistentAssignment)) => Vec::new(),
        (_, Err(e @ Error::DimensionMismatch { .. })) => return Err(e),
        (c, other) => {
            return Err(Error::InternalDisagreement(format!(
                "consistency check says {c}, translation gives {other:?}"
            )))
        }
    };
    let t = reduction.t;
    let predicted = 1.0 / (l as f64).powi(t as i32);
    let settings = ScanSettings {
        l,
        x: opts.x,
        threads: opts.threads,
        seed: opts.seed,
    };
    let zero = ExperimentTally {
        ideals: 0,
        matches: 0,
        mismatches: 0,
        symbols: vec![vec![0; l as usize]; if consistent { t } else { 0 }],
    };

    // exponent of each basis prime in each b_j
    let basis_primes = set.normalized_primes();
    let b_exps: Vec<Vec<u64>> = reduction
        .b_factors
        .iter()
        .map(|fac| {
            let mut v = vec![0u64; basis_primes.len()];
            for &(q, e) in fac {
                v[basis_primes.binary_search(&q).unwrap()] = e as u64;
            }
            v
        })
        .collect();
    let raw_targets = targets.exponents();

    let rows = scan(&settings, set.raw_primes(), &zero, |tally, ev| {
        tally.ideals += 1;
        if !consistent {
            return Ok(());
        }
        let p = ev.field().characteristic();
        let prime_syms: Vec<u64> = basis_primes
            .iter()
            .map(|&q| ev.exponent_of_scalar((q % p as u128) as u64).expect("q is excluded"))
            .collect();
        let mut matched = true;
        for (j, exps) in b_exps.iter().enumerate() {
            let e = exps.iter().zip(&prime_syms).map(|(&v, &x)| v * x).sum::<u64>() % l;
            tally.symbols[j][e as usize] += 1;
            matched &= e == s[j];
        }
        if matched {
            tally.matches += 1;
        }
        if opts.verify_translation {
            let direct = set.raw().iter().zip(raw_targets).all(|(&a, &r)| {
                let residue = a.rem_euclid(p as i128) as u64;
                ev.exponent_of_scalar(residue) == Some(r)
            });
            if direct != matched {
                tally.mismatches += 1;
            }
        }
        Ok(())
    })?;

    let (_, total) = rows.last().cloned().expect("at least one checkpoint");
    if total.mismatches > 0 {
        return Err(Error::InternalDisagreement(format!(
            "{} ideals counted differently on raw and reduced radicands",
            total.mismatches
        )));
    }
    let char_sums = (opts.char_sums && consistent).then(|| {
        reduction
            .b
            .iter()
            .zip(&total.symbols)
            .map(|(b, tallies)| {
                let (re, im) = root_of_unity_sum(tallies);
                let magnitude = re.hypot(im);
                SymbolSum {
                    n: b.clone(),
                    tallies: tallies.clone(),
                    re,
                    im,
                    magnitude,
                    normalized: if total.ideals == 0 { 0.0 } else { magnitude / total.ideals as f64 },
                }
            })
            .collect()
    });
    Ok(DensityReport {
        l,
        x: opts.x,
        consistent,
        t,
        b: reduction.b.clone(),
        s,
        ideals_scanned: total.ideals,
        matches: total.matches,
        empirical: ratio(total.matches, total.ideals),
        predicted,
        char_sums,
        checkpoints: rows
            .iter()
            .map(|(c, tally)| DensityCheckpoint {
                x: *c,
                ideals: tally.ideals,
                matches: tally.matches,
                empirical: ratio(tally.matches, tally.ideals),
            })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::residue_symbol_of_integer;
    use crate::density::enumerate_prime_ideals;
    use num_bigint::BigInt;

    fn set(l: u64, a: &[i128]) -> InputSet {
        InputSet::new(l, a.to_vec()).unwrap()
    }

    /// Direct count over the enumerated ideals, evaluating every raw
    /// radicand with the public symbol function.
    fn naive_count(l: u64, a: &[i128], r: &[u64], x: u64) -> (u64, u64) {
        let mut ideals = 0;
        let mut matches = 0;
        for ideal in enumerate_prime_ideals(l, x).unwrap() {
            if a.iter().any(|&ai| ai % ideal.p() as i128 == 0) {
                continue;
            }
            ideals += 1;
            if a.iter().zip(r).all(|(&ai, &ri)| {
                residue_symbol_of_integer(&BigInt::from(ai), &ideal).unwrap().value() == ri
            }) {
                matches += 1;
            }
        }
        (ideals, matches)
    }

    #[test]
    fn matches_naive_count() {
        for (l, a, r) in [
            (3u64, vec![2i128, 5], vec![0u64, 2]),
            (3, vec![12, 18], vec![1, 2]),
            (5, vec![2, 3, 6], vec![1, 3, 4]),
            (7, vec![-10, 21], vec![3, 0]),
        ] {
            let targets = TargetAssignment::new(l, r.iter().map(|&v| v as i64));
            let report = density_experiment(&set(l, &a), &targets, 20_000).unwrap();
            assert!(report.consistent);
            assert_eq!((report.ideals_scanned, report.matches), naive_count(l, &a, &r, 20_000));
        }
    }

    #[test]
    fn inconsistent_counts_nothing() {
        let targets = TargetAssignment::new(3, [1, 1]);
        let report = density_experiment(&set(3, &[12, 18]), &targets, 50_000).unwrap();
        assert!(!report.consistent);
        assert_eq!(report.matches, 0);
        assert!(report.ideals_scanned > 0);
        assert!(report.s.is_empty());
    }

    #[test]
    fn empty_set_matches_everything() {
        let report = density_experiment(&set(3, &[]), &TargetAssignment::new(3, []), 1000).unwrap();
        assert_eq!(report.matches, report.ideals_scanned);
        assert_eq!(report.empirical, 1.0);
        assert_eq!(report.predicted, 1.0);
    }

    #[test]
    fn verify_mode_and_thread_independence() {
        let a = [6i128, 10, 15, 4];
        let s = set(5, &a);
        // symbols realized at a prime above 11 are consistent by construction
        let at = &crate::cyclotomic::primes_above(11, 5).unwrap()[1];
        let targets = TargetAssignment::new(
            5,
            a.iter()
                .map(|&x| residue_symbol_of_integer(&BigInt::from(x), at).unwrap().value() as i64),
        );
        let mut opts = DensityOptions::new(30_000);
        opts.verify_translation = true;
        opts.char_sums = true;
        let base = density_experiment_with(&s, &targets, &opts).unwrap();
        assert!(base.consistent && base.matches > 0);
        for threads in [1, 3, 8] {
            opts.threads = Some(threads);
            assert_eq!(density_experiment_with(&s, &targets, &opts).unwrap(), base);
        }
        let sums = base.char_sums.unwrap();
        assert_eq!(sums.len(), base.t);
        for sum in &sums {
            assert_eq!(sum.tallies.iter().sum::<u64>(), base.ideals_scanned);
        }
    }

    #[test]
    fn dimension_mismatch() {
        let r = density_experiment(&set(3, &[2, 5]), &TargetAssignment::new(3, [0]), 100);
        assert_eq!(r, Err(Error::DimensionMismatch { expected: 2, got: 1 }));
    }

    #[test]
    fn checkpoints_are_cumulative() {
        let targets = TargetAssignment::new(3, [0]);
        let report = density_experiment(&set(3, &[2]), &targets, 100_000).unwrap();
        let xs: Vec<u64> = report.checkpoints.iter().map(|c| c.x).collect();
        assert_eq!(xs, vec![1000, 10_000, 100_000]);
        for w in report.checkpoints.windows(2) {
            assert!(w[0].ideals <= w[1].ideals && w[0].matches <= w[1].matches);
        }
        let last = report.checkpoints.last().unwrap();
        assert_eq!((last.ideals, last.matches), (report.ideals_scanned, report.matches));
        assert!((report.empirical - 1.0 / 3.0).abs() <= 0.03);
    }
}
