//! Circulant graphs on an odd prime number of vertices.
//!
//! At odd prime order the multiplier maps `i -> q*i mod p` generate every
//! permutation similarity between cospectral circulant adjacency matrices, so
//! a multiplier search is a complete isomorphism decision there. The module
//! also reconstructs a connection set from the first row of a squared
//! adjacency matrix and verifies exhaustively that singular cospectrality
//! forces isomorphism at a given prime.

use crate::error::{Error, Result};
use crate::graph::{CirculantGraph, ConnectionSet};
use crate::par;
use crate::spectra::power_sums;
use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;
use std::collections::BTreeMap;

/// Trial-division primality for the orders this crate works at.
pub fn is_odd_prime(n: usize) -> bool {
    if n < 3 || n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The vertex relabeling `i -> q*i mod p` realizing multiplier similarity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplierPermutation {
    pub p: usize,
    pub q: usize,
    images: Vec<usize>,
}

impl MultiplierPermutation {
    pub fn images(&self) -> &[usize] {
        &self.images
    }
}

/// Builds the permutation `sigma(i) = q*i mod p` for an odd prime `p` and
/// `1 <= q <= p-1`.
pub fn turner_permutation(p: usize, q: usize) -> Result<MultiplierPermutation> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if q == 0 || q >= p {
        return Err(Error::ParamOutOfRange(format!(
            "multiplier must lie in 1..={}, got {q}",
            p - 1
        )));
    }
    let images = (0..p).map(|i| (q * i) % p).collect();
    Ok(MultiplierPermutation { p, q, images })
}

/// Least `q` with `q * S1 = S2 (mod n)` as sets, over the units of `Z_n`.
///
/// A returned multiplier certifies isomorphism for any order; absence proves
/// non-isomorphism only at odd prime order.
pub fn unit_multiplier(g1: &CirculantGraph, g2: &CirculantGraph) -> Option<usize> {
    if g1.n() != g2.n() {
        return None;
    }
    let n = g1.n();
    let s1 = g1.connection_set().elements();
    let s2 = g2.connection_set().elements();
    if s1.len() != s2.len() {
        return None;
    }
    if s1.is_empty() {
        return Some(1);
    }
    (1..n)
        .filter(|q| q.gcd(&n) == 1)
        .find(|&q| {
            let mut mapped: Vec<usize> = s1.iter().map(|&h| (q * h) % n).collect();
            mapped.sort_unstable();
            mapped == s2
        })
}

/// Multiplier isomorphism test restricted to odd prime order.
pub fn multiplier_isomorphic(g1: &CirculantGraph, g2: &CirculantGraph) -> Result<Option<usize>> {
    if g1.n() != g2.n() {
        return Err(Error::OrderMismatch(g1.n(), g2.n()));
    }
    if !is_odd_prime(g1.n()) {
        return Err(Error::NotOddPrime(g1.n()));
    }
    Ok(unit_multiplier(g1, g2))
}

/// Recovers the connection set from the first row of `A^2` on odd order `n`:
/// the neighbors of vertex 0 are exactly the `x = j * 2^{-1} mod n` with
/// `row[j]` odd. Odd order makes `2x = j` uniquely solvable; even orders are
/// rejected rather than given ad-hoc semantics.
pub fn reconstruct_from_square(n: usize, square_row: &[u64]) -> Result<ConnectionSet> {
    if n < 2 {
        return Err(Error::OrderTooSmall(n));
    }
    if n % 2 == 0 {
        return Err(Error::OddOrder(n));
    }
    if square_row.len() != n {
        return Err(Error::ParamOutOfRange(format!(
            "square row must have length {n}, got {}",
            square_row.len()
        )));
    }
    for j in 1..n {
        if square_row[j] != square_row[n - j] {
            return Err(Error::AsymmetricSquareRow);
        }
    }
    let inv2 = (n + 1) / 2; // 2 * (n+1)/2 = n + 1 = 1 mod n
    let mut generators = Vec::new();
    for (j, &walks) in square_row.iter().enumerate() {
        if walks % 2 == 1 {
            let x = (j * inv2) % n;
            if x == 0 {
                return Err(Error::InvalidSquareRow);
            }
            generators.push(x);
        }
    }
    let set = ConnectionSet::new(n, &generators)?;
    // The generators must already be symmetric; a closure that grows them
    // means the row was not a valid walk-count row.
    if set.len() != generators.len() {
        return Err(Error::InvalidSquareRow);
    }
    Ok(set)
}

/// Report of an exhaustive singular-cospectrality / isomorphism sweep at odd
/// prime order `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScImpliesIsoReport {
    pub p: usize,
    pub num_sets: usize,
    pub num_signature_groups: usize,
    pub pairs_checked: u64,
    pub violations: Vec<ScViolation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScViolation {
    pub set1: Vec<usize>,
    pub set2: Vec<usize>,
}

/// Enumerates all `2^{(p-1)/2}` symmetric connection sets on `Z_p`, groups
/// them by the exact even-power-sum signature `(p_2, ..., p_{2p})`, and
/// checks that every pair inside a group admits a multiplier isomorphism.
pub fn verify_sc_implies_iso(p: usize) -> Result<ScImpliesIsoReport> {
    const MAX_HALF: usize = 24;
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let half = (p - 1) / 2;
    if half > MAX_HALF {
        return Err(Error::ParamOutOfRange(format!(
            "exhaustive sweep caps at p = {}, got {p}",
            2 * MAX_HALF + 1
        )));
    }
    let graphs: Vec<CirculantGraph> = (0u64..1 << half)
        .map(|mask| {
            let gens: Vec<usize> = (1..=half).filter(|a| mask >> (a - 1) & 1 == 1).collect();
            CirculantGraph::from_generators(p, &gens).expect("generators are valid")
        })
        .collect();
    let signatures: Vec<Vec<BigInt>> =
        par::map_slice(&graphs, |g| power_sums(g, 2 * p).even());

    let mut groups: BTreeMap<&[BigInt], Vec<usize>> = BTreeMap::new();
    for (i, sig) in signatures.iter().enumerate() {
        groups.entry(sig.as_slice()).or_default().push(i);
    }
    let mut pairs_checked = 0u64;
    let mut violations = Vec::new();
    for members in groups.values() {
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                pairs_checked += 1;
                if unit_multiplier(&graphs[i], &graphs[j]).is_none() {
                    violations.push(ScViolation {
                        set1: graphs[i].connection_set().elements().to_vec(),
                        set2: graphs[j].connection_set().elements().to_vec(),
                    });
                }
            }
        }
    }
    Ok(ScImpliesIsoReport {
        p,
        num_sets: graphs.len(),
        num_signature_groups: groups.len(),
        pairs_checked,
        violations,
    })
}
