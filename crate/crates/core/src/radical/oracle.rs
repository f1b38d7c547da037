use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use super::InputSet;
use crate::arith::exact_lth_root_big;
use crate::error::{Error, Result};

/// Largest number of exponent tuples the exhaustive count will visit.
pub const SCALE_GUARD: u64 = 10_000_000;

/// `|A|`: the number of tuples `0 <= x_i < l` for which the product of the
/// normalized radicands `prod a_i^{x_i}` is an exact `l`-th power, found by
/// exhaustive enumeration with big-integer products.
pub fn brute_force_kernel(set: &InputSet) -> Result<u64> {
    let l = set.l();
    let cores: Vec<BigUint> = set.normalized_cores().map(BigUint::from).collect();
    let m = cores.len();
    match l.checked_pow(m as u32) {
        Some(total) if total <= SCALE_GUARD => {}
        _ => return Err(Error::ScaleGuard { l, m }),
    }
    if m == 0 {
        return Ok(1);
    }
    // powers[i][x] = a_i^x
    let powers: Vec<Vec<BigUint>> = cores
        .iter()
        .map(|a| (0..l as u32).map(|x| a.pow(x)).collect())
        .collect();
    let count = (0..l)
        .into_par_iter()
        .map(|first| {
            let mut tuple = vec![0u64; m];
            tuple[0] = first;
            let mut count = 0u64;
            loop {
                let prod = tuple
                    .iter()
                    .zip(&powers)
                    .fold(BigUint::one(), |acc, (&x, pw)| acc * &pw[x as usize]);
                if exact_lth_root_big(&prod, l as u32).is_some() {
                    count += 1;
                }
                // odometer over positions 1..m
                let mut pos = 1;
                loop {
                    if pos == m {
                        return count;
                    }
                    tuple[pos] += 1;
                    if tuple[pos] < l {
                        break;
                    }
                    tuple[pos] = 0;
                    pos += 1;
                }
            }
        })
        .sum();
    Ok(count)
}
