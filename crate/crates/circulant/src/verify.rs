//! Batch verification suites over parameter grids.
//!
//! Each suite sweeps a family of statements at a caller-chosen scale and
//! returns a [`CheckReport`]: how many individual checks ran and a
//! description of every violation (none are expected). Sweeps are
//! data-parallel over the outer grid; violation lists are merged in grid
//! order, so reports are deterministic.

use crate::cospectral::{
    family_lemma21, family_thm31, family_thm32, family_thm44, is_cospectral,
    is_singularly_cospectral, lambda1_bounds_check, odd_eigen_identity_check, pk_nk_closed_form,
    sign_lemma_checks,
};
use crate::error::Result;
use crate::par;
use crate::prime::{is_odd_prime, verify_sc_implies_iso};
use crate::spectra::{inertia, inertia_odd_index_signs, power_sums, Sign};
use serde::Serialize;
use std::ops::RangeInclusive;

/// Outcome of one verification suite.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub checks: u64,
    pub violations: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn merge(name: &str, parts: Vec<(u64, Vec<String>)>) -> Self {
        let mut checks = 0;
        let mut violations = Vec::new();
        for (c, mut v) in parts {
            checks += c;
            violations.append(&mut v);
        }
        CheckReport { name: name.to_string(), checks, violations }
    }
}

fn ks(range: RangeInclusive<usize>) -> Vec<usize> {
    range.collect()
}

/// Every complement-shift pair with up to `max_subset` generators drawn from
/// `{1..k-1}` is singularly cospectral (exact integer decision).
pub fn lemma21_soundness(k_range: RangeInclusive<usize>, max_subset: usize) -> CheckReport {
    let grid = ks(k_range);
    let parts = par::map_slice(&grid, |&k| {
        let mut checks = 0;
        let mut violations = Vec::new();
        let pool: Vec<usize> = (1..k).collect();
        let mut subset: Vec<usize> = Vec::new();
        // All nonempty subsets of {1..k-1} with size <= max_subset.
        fn walk(
            pool: &[usize],
            start: usize,
            left: usize,
            k: usize,
            subset: &mut Vec<usize>,
            checks: &mut u64,
            violations: &mut Vec<String>,
        ) {
            if !subset.is_empty() {
                *checks += 1;
                match family_lemma21(2 * k, subset) {
                    Ok((g1, g2)) => match is_singularly_cospectral(&g1, &g2) {
                        Ok(true) => {}
                        Ok(false) => violations.push(format!(
                            "k={k} generators {subset:?}: complement-shift pair is not singularly cospectral"
                        )),
                        Err(e) => violations.push(format!("k={k} {subset:?}: {e}")),
                    },
                    Err(e) => violations.push(format!("k={k} {subset:?}: {e}")),
                }
            }
            if left == 0 {
                return;
            }
            for i in start..pool.len() {
                subset.push(pool[i]);
                walk(pool, i + 1, left - 1, k, subset, checks, violations);
                subset.pop();
            }
        }
        walk(&pool, 0, max_subset, k, &mut subset, &mut checks, &mut violations);
        (checks, violations)
    });
    CheckReport::merge("lemma21-soundness", parts)
}

/// The `{1,2}` vs `{k-2,k-1}` pair has different inertias, certified.
pub fn distinct_inertia(k_range: RangeInclusive<usize>) -> CheckReport {
    let grid = ks(k_range);
    let parts = par::map_slice(&grid, |&k| {
        let mut violations = Vec::new();
        match family_thm31(k).and_then(|(g1, g2)| Ok((inertia(&g1)?, inertia(&g2)?))) {
            Ok((i1, i2)) => {
                if i1 == i2 {
                    violations.push(format!("k={k}: inertias coincide at {i1:?}"));
                }
            }
            Err(e) => violations.push(format!("k={k}: {e}")),
        }
        (1, violations)
    });
    CheckReport::merge("distinct-inertia", parts)
}

/// Closed-form `P_k`/`N_k` equal certified sign counts of the odd-indexed
/// eigenvalues, `P_k < N_k`, and `P_k + N_k + zeros = k`.
pub fn closed_form_counts(k_range: RangeInclusive<usize>) -> CheckReport {
    let grid = ks(k_range);
    let parts = par::map_slice(&grid, |&k| {
        let mut violations = Vec::new();
        let mut run = || -> Result<()> {
            let (g1, _) = family_thm31(k)?;
            let signs = inertia_odd_index_signs(&g1)?;
            let p = signs.iter().filter(|&&s| s == Sign::Positive).count();
            let n = signs.iter().filter(|&&s| s == Sign::Negative).count();
            let z = signs.iter().filter(|&&s| s == Sign::Zero).count();
            let (pc, nc) = pk_nk_closed_form(k)?;
            if (p, n) != (pc, nc) {
                violations.push(format!(
                    "k={k}: certified counts ({p},{n}) differ from closed form ({pc},{nc})"
                ));
            }
            if p + n + z != k {
                violations.push(format!("k={k}: sign counts {p}+{n}+{z} do not sum to k"));
            }
            if pc >= nc {
                violations.push(format!("k={k}: expected P_k < N_k, got {pc} >= {nc}"));
            }
            Ok(())
        };
        if let Err(e) = run() {
            violations.push(format!("k={k}: {e}"));
        }
        (1, violations)
    });
    CheckReport::merge("closed-form-counts", parts)
}

/// The `k = 4*alpha + 9`, `s = 2*alpha + 4` pairs have equal inertia.
pub fn same_inertia_family(alpha_range: RangeInclusive<usize>) -> CheckReport {
    let grid = ks(alpha_range);
    let parts = par::map_slice(&grid, |&alpha| {
        let mut violations = Vec::new();
        let (g1, g2) = family_thm32(alpha);
        match (inertia(&g1), inertia(&g2)) {
            (Ok(i1), Ok(i2)) => {
                if i1 != i2 {
                    violations.push(format!("alpha={alpha}: inertias {i1:?} vs {i2:?} differ"));
                }
            }
            (Err(e), _) | (_, Err(e)) => violations.push(format!("alpha={alpha}: {e}")),
        }
        (1, violations)
    });
    CheckReport::merge("same-inertia-family", parts)
}

/// Every `{1..s}` vs `{k-s..k-1}` pair with `2 <= s <= k-3` is singularly
/// cospectral, not cospectral, and differs in some odd power sum.
pub fn ncsc_families(k_range: RangeInclusive<usize>) -> CheckReport {
    let grid: Vec<(usize, usize)> = ks(k_range)
        .into_iter()
        .flat_map(|k| (2..=k.saturating_sub(3)).map(move |s| (k, s)))
        .collect();
    let parts = par::map_slice(&grid, |&(k, s)| {
        let mut violations = Vec::new();
        let mut run = || -> Result<()> {
            let (g1, g2) = family_thm44(k, s)?;
            if !is_singularly_cospectral(&g1, &g2)? {
                violations.push(format!("k={k} s={s}: pair is not singularly cospectral"));
            }
            if is_cospectral(&g1, &g2)? {
                violations.push(format!("k={k} s={s}: pair is unexpectedly cospectral"));
            }
            let n = g1.n();
            let p1 = power_sums(&g1, 2 * n);
            let p2 = power_sums(&g2, 2 * n);
            let odd_differs = (1..=2 * n)
                .step_by(2)
                .any(|t| p1.get(t) != p2.get(t));
            if !odd_differs {
                violations.push(format!("k={k} s={s}: all odd power sums agree"));
            }
            Ok(())
        };
        if let Err(e) = run() {
            violations.push(format!("k={k} s={s}: {e}"));
        }
        (1, violations)
    });
    CheckReport::merge("ncsc-families", parts)
}

/// Strict eigenvalue bounds `s/k(2k-2s-1) < lambda_1 < 7s/(2k)(k-s-1/2)`.
pub fn lambda1_bounds(k_range: RangeInclusive<usize>) -> CheckReport {
    let grid: Vec<(usize, usize)> = ks(k_range)
        .into_iter()
        .flat_map(|k| (2..=(k - 1) / 2).map(move |s| (k, s)))
        .collect();
    let parts = par::map_slice(&grid, |&(k, s)| {
        let mut violations = Vec::new();
        match lambda1_bounds_check(k, s) {
            Ok(true) => {}
            Ok(false) => violations.push(format!("k={k} s={s}: bound violated")),
            Err(e) => violations.push(format!("k={k} s={s}: {e}")),
        }
        (1, violations)
    });
    CheckReport::merge("lambda1-bounds", parts)
}

/// `U_{2s}(cos(j*pi/n)) >= -(s+1)/2` across the grid.
pub fn u2s_bound(s_range: RangeInclusive<usize>, k_range: RangeInclusive<usize>) -> CheckReport {
    let grid: Vec<(usize, usize)> = s_range
        .flat_map(|s| ks(k_range.clone()).into_iter().map(move |k| (s, k)))
        .collect();
    let parts = par::map_slice(&grid, |&(s, k)| {
        let mut checks = 0;
        let mut violations = Vec::new();
        for j in 2..=k - 1 {
            checks += 1;
            match crate::chebyshev::u2s_lower_bound_check(s as u32, 2 * k, j) {
                Ok(true) => {}
                Ok(false) => violations.push(format!("s={s} k={k} j={j}: bound violated")),
                Err(e) => violations.push(format!("s={s} k={k} j={j}: {e}")),
            }
        }
        (checks, violations)
    });
    CheckReport::merge("u2s-lower-bound", parts)
}

/// Sign facts `lambda_1 > 0`, `beta_1 < 0`, `lambda_k + lambda_1 > 0` and the
/// exact odd-index identity across the `(k, s, j)` grid.
pub fn sign_and_identity(k_range: RangeInclusive<usize>) -> CheckReport {
    let grid: Vec<(usize, usize)> = ks(k_range)
        .into_iter()
        .flat_map(|k| (2..=(k - 1) / 2).map(move |s| (k, s)))
        .collect();
    let parts = par::map_slice(&grid, |&(k, s)| {
        let mut checks = 0;
        let mut violations = Vec::new();
        checks += 1;
        match sign_lemma_checks(k, s) {
            Ok(true) => {}
            Ok(false) => violations.push(format!("k={k} s={s}: sign facts violated")),
            Err(e) => violations.push(format!("k={k} s={s}: {e}")),
        }
        for j in 0..=(k - 1) / 2 {
            checks += 1;
            match odd_eigen_identity_check(k, s, j) {
                Ok(true) => {}
                Ok(false) => {
                    violations.push(format!("k={k} s={s} j={j}: odd-index identity violated"))
                }
                Err(e) => violations.push(format!("k={k} s={s} j={j}: {e}")),
            }
        }
        (checks, violations)
    });
    CheckReport::merge("signs-and-identity", parts)
}

/// Exhaustive singular-cospectrality vs isomorphism sweep at every odd prime
/// up to `max_p`.
pub fn sc_implies_iso_suite(max_p: usize) -> CheckReport {
    let primes: Vec<usize> = (3..=max_p).filter(|&p| is_odd_prime(p)).collect();
    let parts = par::map_slice(&primes, |&p| {
        let mut violations = Vec::new();
        let mut checks = 0;
        match verify_sc_implies_iso(p) {
            Ok(report) => {
                checks = report.pairs_checked.max(1);
                for v in report.violations {
                    violations.push(format!(
                        "p={p}: sets {:?} and {:?} are singularly cospectral but admit no multiplier",
                        v.set1, v.set2
                    ));
                }
            }
            Err(e) => violations.push(format!("p={p}: {e}")),
        }
        (checks, violations)
    });
    CheckReport::merge("sc-implies-iso", parts)
}
