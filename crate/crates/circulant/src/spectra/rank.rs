//! Fraction-free integer rank by Bareiss elimination.
//!
//! The one-step fraction-free update keeps every intermediate entry an exact
//! minor of the input matrix, so the rank over the rationals is decided in
//! pure integer arithmetic with no pivoting tolerance.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank of an integer matrix over the rationals.
pub fn integer_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut denom = BigInt::one();
    let mut col = 0;
    while rank < rows && col < cols {
        // Any nonzero pivot works; pick the smallest magnitude to slow entry growth.
        let pivot_row = (rank..rows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].magnitude().clone());
        let Some(pivot_row) = pivot_row else {
            col += 1;
            continue;
        };
        m.swap(rank, pivot_row);
        let (upper, lower) = m.split_at_mut(rank + 1);
        let pivot_line = &upper[rank];
        let pivot = pivot_line[col].clone();
        for row in lower.iter_mut() {
            let factor = row[col].clone();
            for j in col..cols {
                let value = &pivot * &row[j] - &factor * &pivot_line[j];
                row[j] = exact_div(value, &denom);
            }
        }
        denom = pivot;
        rank += 1;
        col += 1;
    }
    rank
}

fn exact_div(value: BigInt, denom: &BigInt) -> BigInt {
    debug_assert!(
        (&value % denom).is_zero(),
        "fraction-free elimination produced a non-divisible entry"
    );
    value / denom
}
