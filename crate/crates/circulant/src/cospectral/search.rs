//! Exhaustive NCSC search over symmetric connection sets.
//!
//! Sets are canonicalized by their sorted element list and enumerated in
//! lexicographic order; pairs follow the induced lexicographic order. With
//! the `parallel` feature the per-set invariants and per-pair verdicts are
//! computed on rayon, collected in index order, so output is byte-identical
//! for any worker count.

use super::{verdict_from, GraphInvariants, TriState};
use crate::error::{Error, Result};
use crate::graph::{CirculantGraph, ConnectionSet};
use crate::par;
use crate::PrecisionBudget;
use serde::Serialize;

/// One NCSC pair found by the search, in the newline-delimited wire format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchRecord {
    pub n: usize,
    pub set1: Vec<usize>,
    pub set2: Vec<usize>,
    pub cospectral: bool,
    pub sc: bool,
    pub same_inertia: bool,
    pub isomorphic: TriState,
}

/// Trailing summary of a search run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    pub n: usize,
    pub sets: usize,
    pub pairs_checked: u64,
    pub ncsc_found: usize,
    pub truncated: bool,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// NCSC pairs in deterministic enumeration order.
    pub records: Vec<SearchRecord>,
    pub summary: SearchSummary,
}

/// All nonempty symmetric connection sets on `Z_n` with at most `max_s`
/// generator pairs (the self-inverse element `n/2` is allowed on top and not
/// counted), sorted lexicographically by element list.
pub fn enumerate_symmetric_sets(n: usize, max_s: usize) -> Result<Vec<ConnectionSet>> {
    if n < 2 {
        return Err(Error::OrderTooSmall(n));
    }
    // Paired generators live in 1..=(n-1)/2.
    let paired: Vec<usize> = (1..n).filter(|&a| 2 * a < n).collect();
    let max_s = max_s.min(paired.len());
    let mut count: u64 = 0;
    let mut binom: u64 = 1;
    for t in 0..=max_s as u64 {
        if t > 0 {
            binom = binom.saturating_mul(paired.len() as u64 - t + 1) / t;
        }
        count = count.saturating_add(binom);
    }
    let with_half = if n % 2 == 0 { 2 } else { 1 };
    if count.saturating_mul(with_half) > 2_000_000 {
        return Err(Error::ParamOutOfRange(format!(
            "enumeration of {} sets exceeds the supported size",
            count.saturating_mul(with_half)
        )));
    }

    let mut sets = Vec::new();
    let mut choice: Vec<usize> = Vec::new();
    fn recurse(
        paired: &[usize],
        start: usize,
        remaining: usize,
        n: usize,
        choice: &mut Vec<usize>,
        sets: &mut Vec<ConnectionSet>,
    ) {
        if !choice.is_empty() {
            sets.push(ConnectionSet::new(n, choice).expect("generators are valid"));
            if n % 2 == 0 {
                let mut with_half = choice.clone();
                with_half.push(n / 2);
                sets.push(ConnectionSet::new(n, &with_half).expect("generators are valid"));
            }
        } else if n % 2 == 0 {
            sets.push(ConnectionSet::new(n, &[n / 2]).expect("generators are valid"));
        }
        if remaining == 0 {
            return;
        }
        for i in start..paired.len() {
            choice.push(paired[i]);
            recurse(paired, i + 1, remaining - 1, n, choice, sets);
            choice.pop();
        }
    }
    recurse(&paired, 0, max_s, n, &mut choice, &mut sets);
    sets.sort();
    sets.dedup();
    Ok(sets)
}

/// Enumerates all pairs of distinct symmetric sets with at most `max_s`
/// generator pairs, classifies each, and returns every NCSC pair found.
/// Classification stops after `pair_budget` pairs; the summary flags the
/// truncation.
pub fn search_ncsc(n: usize, max_s: usize, pair_budget: u64) -> Result<SearchOutcome> {
    search_ncsc_with(n, max_s, pair_budget, PrecisionBudget::default())
}

pub fn search_ncsc_with(
    n: usize,
    max_s: usize,
    pair_budget: u64,
    budget: PrecisionBudget,
) -> Result<SearchOutcome> {
    if n < 4 {
        return Err(Error::ParamOutOfRange(format!(
            "search requires n >= 4, got {n}"
        )));
    }
    let sets = enumerate_symmetric_sets(n, max_s)?;
    let invariants: Vec<Result<GraphInvariants>> = par::map_slice(&sets, |set| {
        GraphInvariants::compute(CirculantGraph::new(set.clone()), budget)
    });
    let mut cached = Vec::with_capacity(invariants.len());
    for inv in invariants {
        cached.push(inv?);
    }

    let total_pairs = (cached.len() as u64) * (cached.len() as u64 - 1) / 2;
    let to_check = total_pairs.min(pair_budget);
    let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(to_check as usize);
    'outer: for i in 0..cached.len() {
        for j in i + 1..cached.len() {
            if pairs.len() as u64 >= to_check {
                break 'outer;
            }
            pairs.push((i as u32, j as u32));
        }
    }

    let verdicts = par::map_slice(&pairs, |&(i, j)| {
        verdict_from(&cached[i as usize], &cached[j as usize])
    });
    let mut records = Vec::new();
    for (&(i, j), verdict) in pairs.iter().zip(&verdicts) {
        if verdict.is_ncsc() {
            records.push(SearchRecord {
                n,
                set1: cached[i as usize].graph.connection_set().elements().to_vec(),
                set2: cached[j as usize].graph.connection_set().elements().to_vec(),
                cospectral: verdict.cospectral,
                sc: verdict.singularly_cospectral,
                same_inertia: verdict.same_inertia,
                isomorphic: verdict.isomorphic,
            });
        }
    }
    let summary = SearchSummary {
        n,
        sets: cached.len(),
        pairs_checked: to_check,
        ncsc_found: records.len(),
        truncated: to_check < total_pairs,
    };
    Ok(SearchOutcome { records, summary })
}
