//! Exact spectral power sums.
//!
//! `p_t = trace(A^t) = sum_j lambda_j^t` is an integer: `n` times the number
//! of closed `t`-walks at any fixed vertex. Since powers of a circulant
//! matrix are circulant, the whole computation is a repeated circular
//! convolution of the first row with the 0/1 indicator of the connection
//! set — `O(n * |S|)` big-integer additions per power, no multiplications.

use crate::graph::CirculantGraph;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// The exact integer power sums `p_1, ..., p_m` of a graph's adjacency
/// spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSums {
    sums: Vec<BigInt>,
}

impl PowerSums {
    /// `p_t` for `1 <= t <= m`.
    pub fn get(&self, t: usize) -> &BigInt {
        &self.sums[t - 1]
    }

    pub fn max_power(&self) -> usize {
        self.sums.len()
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.sums
    }

    /// The even-indexed subsequence `p_2, p_4, ...`.
    pub fn even(&self) -> Vec<BigInt> {
        self.sums.iter().skip(1).step_by(2).cloned().collect()
    }
}

impl Serialize for PowerSums {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.sums.len()))?;
        for p in &self.sums {
            seq.serialize_element(&p.to_string())?;
        }
        seq.end()
    }
}

/// Computes `p_1, ..., p_m` exactly.
pub fn power_sums(g: &CirculantGraph, m: usize) -> PowerSums {
    assert!(m >= 1, "need at least one power");
    let n = g.n();
    let support: Vec<usize> = g.connection_set().elements().to_vec();
    // row = first row of A^t, starting at t = 1.
    let mut row: Vec<BigInt> = vec![BigInt::zero(); n];
    for &h in &support {
        row[h] = BigInt::from(1);
    }
    let mut sums = Vec::with_capacity(m);
    sums.push(&row[0] * n);
    let mut next = vec![BigInt::zero(); n];
    for _ in 2..=m {
        for x in next.iter_mut() {
            x.set_zero();
        }
        for (i, target) in next.iter_mut().enumerate() {
            for &h in &support {
                *target += &row[(i + n - h) % n];
            }
        }
        std::mem::swap(&mut row, &mut next);
        sums.push(&row[0] * n);
    }
    PowerSums { sums }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn first_sums_of_spec_examples() {
        let g = CirculantGraph::from_generators(12, &[1, 2]).unwrap();
        let p = power_sums(&g, 4);
        assert_eq!(p.get(1), &big(0)); // no loops
        assert_eq!(p.get(2), &big(48)); // n * degree
        let c5 = CirculantGraph::from_generators(5, &[1]).unwrap();
        assert_eq!(power_sums(&c5, 3).get(3), &big(0)); // no triangles
    }

    #[test]
    fn matches_dense_matrix_powers() {
        // Independent route: naive dense matrix powers over i64.
        let g = CirculantGraph::from_generators(9, &[1, 3, 4]).unwrap();
        let n = g.n();
        let a = g.adjacency();
        let mut m = a.clone();
        let p = power_sums(&g, 6);
        for t in 1..=6 {
            let trace: i64 = (0..n).map(|i| m[i][i]).sum();
            assert_eq!(p.get(t), &big(trace), "t = {t}");
            let mut next = vec![vec![0i64; n]; n];
            for i in 0..n {
                for k in 0..n {
                    if m[i][k] != 0 {
                        for j in 0..n {
                            next[i][j] += m[i][k] * a[k][j];
                        }
                    }
                }
            }
            m = next;
        }
    }

    #[test]
    fn even_subsequence() {
        let g = CirculantGraph::from_generators(6, &[1]).unwrap();
        let p = power_sums(&g, 6);
        let even = p.even();
        assert_eq!(even.len(), 3);
        assert_eq!(even[0], *p.get(2));
        assert_eq!(even[2], *p.get(6));
    }
}
