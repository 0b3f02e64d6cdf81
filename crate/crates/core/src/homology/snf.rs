//! Smith normal form over the integers and exact rational rank.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntegerMatrix;

/// Result of [`smith_normal_form`]: `u * m * v = diag(divisors, 0, ...)`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub divisors: Vec<BigInt>,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }
}

/// Smith normal form with unimodular transforms.
///
/// Pivots are chosen by least absolute value and reduced by Euclidean
/// division until the pivot row and column clear; a pivot that fails to
/// divide the remaining block absorbs the offending row and the loop
/// restarts, which yields the divisibility chain directly.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (rows, cols) = m.shape();
    let mut a = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);
    let mut divisors = Vec::new();

    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = min_abs_entry(&a, t..rows, t..cols) else {
            break;
        };
        a.swap_rows(t, pr);
        u.swap_rows(t, pr);
        a.swap_cols(t, pc);
        v.swap_cols(t, pc);

        loop {
            let mut clean = true;
            for r in t + 1..rows {
                if a.get(r, t).is_zero() {
                    continue;
                }
                let k = -a.get(r, t).div_floor(a.get(t, t));
                a.add_row_multiple(r, t, &k);
                u.add_row_multiple(r, t, &k);
                clean &= a.get(r, t).is_zero();
            }
            for c in t + 1..cols {
                if a.get(t, c).is_zero() {
                    continue;
                }
                let k = -a.get(t, c).div_floor(a.get(t, t));
                a.add_col_multiple(c, t, &k);
                v.add_col_multiple(c, t, &k);
                clean &= a.get(t, c).is_zero();
            }
            if !clean {
                // A remainder smaller than the pivot is left; move it in.
                let (pr, pc) = min_abs_in_cross(&a, t, rows, cols);
                a.swap_rows(t, pr);
                u.swap_rows(t, pr);
                a.swap_cols(t, pc);
                v.swap_cols(t, pc);
                continue;
            }
            let pivot = a.get(t, t).clone();
            let offender = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !a.get(r, c).is_multiple_of(&pivot)));
            match offender {
                Some(r) => {
                    let one = BigInt::from(1);
                    a.add_row_multiple(t, r, &one);
                    u.add_row_multiple(t, r, &one);
                }
                None => break,
            }
        }

        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
        divisors.push(a.get(t, t).clone());
        t += 1;
    }

    SmithForm { divisors, u, v }
}

fn min_abs_entry(
    a: &IntegerMatrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for r in rows {
        for c in cols.clone() {
            let x = a.get(r, c);
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(br, bc)| x.abs() < a.get(br, bc).abs()) {
                best = Some((r, c));
            }
        }
    }
    best
}

fn min_abs_in_cross(a: &IntegerMatrix, t: usize, rows: usize, cols: usize) -> (usize, usize) {
    let mut best = (t, t);
    let consider = |r: usize, c: usize, best: &mut (usize, usize)| {
        let x = a.get(r, c);
        if !x.is_zero() && x.abs() < a.get(best.0, best.1).abs() {
            *best = (r, c);
        }
    };
    for r in t + 1..rows {
        consider(r, t, &mut best);
    }
    for c in t + 1..cols {
        consider(t, c, &mut best);
    }
    best
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn rational_rank(m: &IntegerMatrix) -> usize {
    let (rows, cols) = m.shape();
    let mut a: Vec<Vec<BigInt>> = (0..rows).map(|r| m.row(r).to_vec()).collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let val = (&a[rank][c] * &a[r][k] - &a[r][c] * &a[rank][k]) / &prev;
                a[r][k] = val;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}
