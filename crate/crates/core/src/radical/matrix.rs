
use super::InputSet;
use crate::arith::inv_mod;

/// Prime exponents of the normalized radicands, reduced mod `l`. Row `i` is
/// the `i`-th normalized entry, column `j` the `j`-th smallest prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentMatrix {
    pub l: u64,
    pub primes: Vec<u128>,
    pub entries: Vec<Vec<u64>>,
}

impl ExponentMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.primes.len()
    }
}

/// Rank of the exponent matrix and a basis of its left kernel, i.e. of the
/// exponent tuples whose product of radicands is an exact `l`-th power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis {
    pub rank: usize,
    pub basis: Vec<Vec<u64>>,
}

pub fn exponent_matrix(set: &InputSet) -> ExponentMatrix {
    let l = set.l();
    let primes = set.normalized_primes();
    let entries = set
        .normalized_factors()
        .map(|fac| {
            let mut row = vec![0u64; primes.len()];
            for &(p, e) in fac {
                let j = primes.binary_search(&p).expect("prime collected above");
                row[j] = e as u64 % l;
            }
            row
        })
        .collect();
    ExponentMatrix { l, primes, entries }
}

/// Gaussian elimination over `Z/l`: pivot on the first nonzero column,
/// taking the smallest eligible row. The kernel basis is returned in
/// reduced row echelon form.
pub fn rank_and_kernel(matrix: &ExponentMatrix) -> KernelBasis {
    let l = matrix.l;
    let m = matrix.rows();
    let n = matrix.cols();
    // [M | I]
    let mut aug: Vec<Vec<u64>> = matrix
        .entries
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v = row.clone();
            v.extend((0..m).map(|k| u64::from(k == i)));
            v
        })
        .collect();
    let rank = row_reduce(&mut aug, n, l);
    let mut basis: Vec<Vec<u64>> = aug[rank..].iter().map(|row| row[n..].to_vec()).collect();
    row_reduce(&mut basis, m, l);
    KernelBasis { rank, basis }
}

/// In-place reduced row echelon form over the first `cols` columns; returns
/// the number of pivots. Whole rows are transformed, so trailing columns act
/// as an augmentation.
pub(crate) fn row_reduce(rows: &mut [Vec<u64>], cols: usize, l: u64) -> usize {
    let mut pivot_row = 0;
    for c in 0..cols {
        let Some(found) = (pivot_row..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = inv_mod(rows[pivot_row][c], l);
        for v in rows[pivot_row].iter_mut() {
            *v = *v * inv % l;
        }
        let pivot = rows[pivot_row].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == pivot_row || row[c] == 0 {
                continue;
            }
            let factor = l - row[c];
            for (v, &pv) in row.iter_mut().zip(&pivot) {
                *v = (*v + factor * pv) % l;
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    pivot_row
}
