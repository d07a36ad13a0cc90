//! Shared oracles for the property suites. Everything here is a deliberate
//! textbook implementation over `Vec<bool>`, independent of the bit-packed
//! paths it cross-checks.

#![allow(dead_code)]

use aiforge::boolfun::TruthTable;
use rand::rngs::StdRng;
use rand::Rng;

/// Pascal's triangle in u128, rows 0..=max.
pub fn pascal(max: usize) -> Vec<Vec<u128>> {
    let mut t: Vec<Vec<u128>> = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let mut row = vec![1u128; n + 1];
        for k in 1..n {
            row[k] = t[n - 1][k - 1] + t[n - 1][k];
        }
        t.push(row);
    }
    t
}

/// Plain Gaussian elimination rank over GF(2) on a dense bool matrix.
pub fn naive_rank(matrix: &[Vec<bool>]) -> usize {
    let mut m: Vec<Vec<bool>> = matrix.to_vec();
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut next_row = 0;
    for c in 0..cols {
        let Some(pivot) = (next_row..rows).find(|&i| m[i][c]) else {
            continue;
        };
        m.swap(next_row, pivot);
        for i in 0..rows {
            if i != next_row && m[i][c] {
                let (head, tail) = m.split_at_mut(next_row.max(i));
                let (a, b) = if i > next_row {
                    (&head[next_row], &mut tail[0])
                } else {
                    (&tail[0], &mut head[i])
                };
                for j in 0..cols {
                    b[j] ^= a[j];
                }
            }
        }
        rank += 1;
        next_row += 1;
        if next_row == rows {
            break;
        }
    }
    rank
}

/// Does `f` (given as 2^n output bits, index = input mask) have a nonzero
/// annihilator of degree at most `e`? Decided by rank of the full dense
/// monomial-evaluation system.
pub fn naive_has_annihilator(f_bits: &[bool], n: usize, e: usize) -> bool {
    let size = 1u64 << n;
    let monomials: Vec<u64> = (0..size).filter(|b| b.count_ones() as usize <= e).collect();
    let rows: Vec<Vec<bool>> = (0..size)
        .filter(|&a| f_bits[a as usize])
        .map(|a| monomials.iter().map(|&b| a & b == b).collect())
        .collect();
    naive_rank(&rows) < monomials.len()
}

/// Exact algebraic immunity by exhaustive degree search on both sides.
pub fn naive_ai(f_bits: &[bool], n: usize) -> usize {
    let fc: Vec<bool> = f_bits.iter().map(|&b| !b).collect();
    for e in 0..=n {
        if naive_has_annihilator(f_bits, n, e) || naive_has_annihilator(&fc, n, e) {
            return e;
        }
    }
    unreachable!("one side always has an annihilator by degree n");
}

pub fn tt_to_bools(tt: &TruthTable) -> Vec<bool> {
    (0..tt.num_points()).map(|m| tt.get(m)).collect()
}

pub fn tt_from_bools(n: usize, bits: &[bool]) -> TruthTable {
    TruthTable::from_fn(n, |m| bits[m as usize]).unwrap()
}

pub fn random_bits(rng: &mut StdRng, len: usize) -> Vec<bool> {
    (0..len).map(|_| rng.random()).collect()
}
