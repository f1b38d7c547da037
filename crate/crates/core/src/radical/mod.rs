//! Degree of `Q(a_1^(1/l), ..., a_m^(1/l))` over `Q`, computed both by
//! successive elimination of shared primes and by the rank of the exponent
//! matrix over `Z/l`, with an exhaustive oracle for small inputs.

mod matrix;
mod oracle;
mod reduce;

use std::collections::BTreeSet;

use num_bigint::BigUint;

pub use matrix::{exponent_matrix, rank_and_kernel, ExponentMatrix, KernelBasis};
pub use oracle::{brute_force_kernel, SCALE_GUARD};
pub use reduce::{reduce_basis, ReductionResult};

use crate::arith::{self, lth_power_free};
use crate::density::TargetAssignment;
use crate::error::{Error, Result};

/// The radicands as given, plus their positive `l`-th-power-free cores.
/// Entries whose core is `1` are exact `l`-th powers and are dropped from
/// the normalized view.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputSet {
    l: u64,
    raw: Vec<i128>,
    cores: Vec<u128>,
    core_factors: Vec<Vec<(u128, u32)>>,
    raw_primes: BTreeSet<u128>,
    normalized: Vec<usize>,
}

impl InputSet {
    pub fn new(l: u64, raw: Vec<i128>) -> Result<Self> {
        arith::check_odd_prime(l)?;
        let exp = l as u32;
        let mut cores = Vec::with_capacity(raw.len());
        let mut core_factors = Vec::with_capacity(raw.len());
        let mut raw_primes = BTreeSet::new();
        for &a in &raw {
            let fac = arith::factorize(a)?;
            raw_primes.extend(fac.primes());
            let (core, _) = lth_power_free(a, exp)?;
            cores.push(core);
            core_factors.push(
                fac.factors()
                    .iter()
                    .filter(|&&(_, e)| e % exp != 0)
                    .map(|&(p, e)| (p, e % exp))
                    .collect(),
            );
        }
        let normalized = (0..raw.len()).filter(|&i| cores[i] > 1).collect();
        Ok(InputSet {
            l,
            raw,
            cores,
            core_factors,
            raw_primes,
            normalized,
        })
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn raw(&self) -> &[i128] {
        &self.raw
    }

    pub fn raw_len(&self) -> usize {
        self.raw.len()
    }

    /// Core of raw entry `i`.
    pub fn core(&self, i: usize) -> u128 {
        self.cores[i]
    }

    pub fn core_factors(&self, i: usize) -> &[(u128, u32)] {
        &self.core_factors[i]
    }

    /// Number of normalized (non-dropped) entries.
    pub fn m(&self) -> usize {
        self.normalized.len()
    }

    /// Raw index of each normalized entry.
    pub fn normalized_indices(&self) -> &[usize] {
        &self.normalized
    }

    pub fn normalized_cores(&self) -> impl Iterator<Item = u128> + '_ {
        self.normalized.iter().map(|&i| self.cores[i])
    }

    pub(crate) fn normalized_factors(&self) -> impl Iterator<Item = &[(u128, u32)]> + '_ {
        self.normalized.iter().map(|&i| self.core_factors[i].as_slice())
    }

    /// Raw indices of exact `l`-th powers.
    pub fn dropped(&self) -> Vec<usize> {
        (0..self.raw.len()).filter(|&i| self.cores[i] == 1).collect()
    }

    /// Distinct primes dividing the normalized cores, ascending.
    pub fn normalized_primes(&self) -> Vec<u128> {
        let set: BTreeSet<u128> = self
            .normalized_factors()
            .flat_map(|f| f.iter().map(|&(p, _)| p))
            .collect();
        set.into_iter().collect()
    }

    /// Every prime dividing some raw radicand, including those that only
    /// appear to an exponent divisible by `l`.
    pub fn raw_primes(&self) -> &BTreeSet<u128> {
        &self.raw_primes
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeMethod {
    Reduction,
    Rank,
}

/// Both routes are always run; a mismatch is reported rather than resolved.
pub fn degree(set: &InputSet, method: DegreeMethod) -> Result<BigUint> {
    let reduction = reduce_basis(set);
    let kernel = rank_and_kernel(&exponent_matrix(set));
    if reduction.t != kernel.rank {
        return Err(Error::InternalDisagreement(format!(
            "reduction gives t = {}, matrix rank is {}",
            reduction.t, kernel.rank
        )));
    }
    let exp = match method {
        DegreeMethod::Reduction => reduction.t,
        DegreeMethod::Rank => kernel.rank,
    };
    Ok(BigUint::from(set.l()).pow(exp as u32))
}

/// Whether the assignment `a_i -> z^{r_i}` respects every multiplicative
/// relation among the radicands.
pub fn consistency_check(set: &InputSet, targets: &TargetAssignment) -> Result<bool> {
    check_dims(set.l(), set.raw_len(), targets)?;
    let r = targets.exponents();
    if set.dropped().iter().any(|&i| r[i] != 0) {
        return Ok(false);
    }
    let kernel = rank_and_kernel(&exponent_matrix(set));
    let l = set.l();
    Ok(kernel.basis.iter().all(|c| {
        c.iter()
            .zip(set.normalized_indices())
            .map(|(&ci, &raw)| ci * r[raw])
            .sum::<u64>()
            % l
            == 0
    }))
}

/// Targets `s_j = sum_i E_ji r_i` for the reduced radicands.
pub fn translate_targets(reduction: &ReductionResult, targets: &TargetAssignment) -> Result<Vec<u64>> {
    let l = reduction.l;
    check_dims(l, reduction.inputs, targets)?;
    let r = targets.exponents();
    let dot = |row: &[u64]| row.iter().zip(r).map(|(&e, &x)| e * x).sum::<u64>() % l;
    if reduction.relations.iter().any(|rel| dot(rel) != 0) {
        return Err(Error::InconsistentAssignment);
    }
    Ok(reduction.transform.iter().map(|row| dot(row)).collect())
}

fn check_dims(l: u64, expected: usize, targets: &TargetAssignment) -> Result<()> {
    if targets.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            got: targets.len(),
        });
    }
    assert_eq!(targets.l(), l, "targets built for a different l");
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(l: u64, a: &[i128]) -> InputSet {
        InputSet::new(l, a.to_vec()).unwrap()
    }

    fn targets(l: u64, r: &[i64]) -> TargetAssignment {
        TargetAssignment::new(l, r.iter().copied())
    }

    #[test]
    fn normalization() {
        let s = set(3, &[-8, 96, 5, 27]);
        assert_eq!(s.normalized_indices(), &[1, 2]);
        assert_eq!(s.normalized_cores().collect::<Vec<_>>(), vec![12, 5]);
        assert_eq!(s.dropped(), vec![0, 3]);
        assert_eq!(s.raw_primes().iter().copied().collect::<Vec<_>>(), vec![2, 3, 5]);
        assert_eq!(s.normalized_primes(), vec![2, 3, 5]);
        assert!(InputSet::new(3, vec![0]).is_err());
        assert!(InputSet::new(4, vec![2]).is_err());
    }

    #[test]
    fn degree_examples() {
        let nine = BigUint::from(9u32);
        assert_eq!(degree(&set(3, &[2, 3, 6]), DegreeMethod::Rank).unwrap(), nine);
        assert_eq!(degree(&set(3, &[2, 3, 6]), DegreeMethod::Reduction).unwrap(), nine);
        assert_eq!(degree(&set(5, &[2, 3]), DegreeMethod::Rank).unwrap(), BigUint::from(25u32));
        assert_eq!(degree(&set(3, &[]), DegreeMethod::Reduction).unwrap(), BigUint::from(1u32));
        assert_eq!(degree(&set(3, &[8]), DegreeMethod::Rank).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn consistency_examples() {
        let s = set(3, &[2, 3, 6]);
        assert!(consistency_check(&s, &targets(3, &[1, 1, 2])).unwrap());
        assert!(!consistency_check(&s, &targets(3, &[1, 1, 1])).unwrap());
        let s = set(3, &[2, 3]);
        for a in 0..3 {
            for b in 0..3 {
                assert!(consistency_check(&s, &targets(3, &[a, b])).unwrap());
            }
        }
        assert_eq!(
            consistency_check(&s, &targets(3, &[1])),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        );
        // an exact cube must map to the trivial symbol
        let s = set(3, &[2, 8]);
        assert!(consistency_check(&s, &targets(3, &[1, 0])).unwrap());
        assert!(!consistency_check(&s, &targets(3, &[1, 2])).unwrap());
    }

    #[test]
    fn translate_examples() {
        let s = set(3, &[12, 18]);
        let red = reduce_basis(&s);
        assert_eq!(translate_targets(&red, &targets(3, &[1, 2])).unwrap(), vec![1]);
        assert_eq!(
            translate_targets(&red, &targets(3, &[1, 1])),
            Err(Error::InconsistentAssignment)
        );

        let s = set(5, &[2, 3, 7]);
        let red = reduce_basis(&s);
        assert_eq!(translate_targets(&red, &targets(5, &[4, 0, 2])).unwrap(), vec![4, 0, 2]);

        let red = reduce_basis(&set(3, &[8]));
        assert!(translate_targets(&red, &targets(3, &[0])).unwrap().is_empty());
        assert_eq!(
            translate_targets(&red, &targets(3, &[2])),
            Err(Error::InconsistentAssignment)
        );
    }
}
