//! Cospectrality deciders, pair classification, and the built-in families of
//! noncospectral singularly cospectral (NCSC) circulant graph pairs.
//!
//! All spectral comparisons are exact: cospectrality is equality of the power
//! sums `p_1..p_n` (equivalently of characteristic polynomials), singular
//! cospectrality is equality of the even power sums `p_2..p_{2n}` — the same
//! thing as `char(A^2)` agreeing — and the nonzero-|spectrum| comparison
//! strips the exact nullities before comparing. No floating-point multisets
//! are ever compared.

mod search;

pub use search::{
    enumerate_symmetric_sets, search_ncsc, search_ncsc_with, SearchOutcome, SearchRecord,
    SearchSummary,
};

use crate::error::{Error, Result};
use crate::graph::{CirculantGraph, ConnectionSet};
use crate::poly::IntPolynomial;
use crate::spectra::{
    self, char_poly_from_power_sums, eigenvalue_sign_with, eigenvalues_equal_exact,
    eigenvalues_sum_is_zero, power_sums, Inertia, PowerSums, Sign,
};
use crate::PrecisionBudget;
use num_bigint::BigInt;
use serde::Serialize;
use std::cmp::Ordering;

/// Three-valued isomorphism answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

/// Classification of a pair of circulant graphs on the same vertex count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub isomorphic: TriState,
    pub cospectral: bool,
    pub singularly_cospectral: bool,
    pub same_inertia: bool,
}

impl PairVerdict {
    /// Singularly cospectral but not cospectral.
    pub fn is_ncsc(&self) -> bool {
        self.singularly_cospectral && !self.cospectral
    }

    /// Coarse class used by scripting front ends.
    pub fn class(&self) -> VerdictClass {
        if self.isomorphic == TriState::Yes {
            VerdictClass::Isomorphic
        } else if self.cospectral {
            VerdictClass::Cospectral
        } else if self.is_ncsc() {
            VerdictClass::Ncsc
        } else {
            VerdictClass::Unrelated
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictClass {
    Isomorphic,
    Cospectral,
    Ncsc,
    Unrelated,
}

/// Exact spectral comparison certificates for a pair of graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralComparison {
    /// `p_1..p_n` agree, i.e. equal characteristic polynomials.
    pub cospectral: bool,
    /// `p_2, p_4, ..., p_{2n}` agree, i.e. `char(A1^2) = char(A2^2)`.
    pub even_power_sums_equal: bool,
    /// `char(A1^2)/x^{d1} = char(A2^2)/x^{d2}` after stripping the exact
    /// nullities — the nonzero singular values coincide as multisets.
    pub equal_nonzero_abs_spectrum: bool,
    pub nullities: (usize, usize),
}

/// Per-graph exact invariants, computed once and reused across comparisons.
pub(crate) struct GraphInvariants {
    pub(crate) graph: CirculantGraph,
    sums: PowerSums,
    nullity: usize,
    reduced_square_char: IntPolynomial,
    inertia: Inertia,
}

impl GraphInvariants {
    pub(crate) fn compute(graph: CirculantGraph, budget: PrecisionBudget) -> Result<Self> {
        let n = graph.n();
        let sums = power_sums(&graph, 2 * n);
        let nullity = spectra::nullity(&graph);
        let square_char = char_poly_from_power_sums(n, &sums.even());
        // A symmetric matrix and its square share a kernel, so the nullity
        // strips off exactly.
        let reduced_square_char = square_char
            .shift_down(nullity)
            .expect("char(A^2) must be divisible by x^nullity");
        let inertia = spectra::inertia_with(&graph, budget)?;
        Ok(GraphInvariants { graph, sums, nullity, reduced_square_char, inertia })
    }
}

pub(crate) fn compare_invariants(a: &GraphInvariants, b: &GraphInvariants) -> SpectralComparison {
    let n = a.graph.n();
    let cospectral = a.sums.as_slice()[..n] == b.sums.as_slice()[..n];
    let even_power_sums_equal = a.sums.even() == b.sums.even();
    let equal_nonzero_abs_spectrum = a.reduced_square_char == b.reduced_square_char;
    // For graphs of equal order the two singular-cospectrality readings
    // coincide; keep both routes and insist they agree.
    debug_assert_eq!(even_power_sums_equal, equal_nonzero_abs_spectrum);
    SpectralComparison {
        cospectral,
        even_power_sums_equal,
        equal_nonzero_abs_spectrum,
        nullities: (a.nullity, b.nullity),
    }
}

pub(crate) fn verdict_from(a: &GraphInvariants, b: &GraphInvariants) -> PairVerdict {
    let cmp = compare_invariants(a, b);
    let isomorphic = match crate::prime::unit_multiplier(&a.graph, &b.graph) {
        Some(_) => TriState::Yes,
        // At odd prime order the multiplier search is complete: cospectral
        // circulants always admit one, and isomorphic graphs are cospectral.
        None if crate::prime::is_odd_prime(a.graph.n()) => TriState::No,
        None => TriState::Unknown,
    };
    PairVerdict {
        isomorphic,
        cospectral: cmp.cospectral,
        singularly_cospectral: cmp.equal_nonzero_abs_spectrum,
        same_inertia: a.inertia == b.inertia,
    }
}

fn check_same_order(g1: &CirculantGraph, g2: &CirculantGraph) -> Result<()> {
    if g1.n() != g2.n() {
        return Err(Error::OrderMismatch(g1.n(), g2.n()));
    }
    Ok(())
}

/// Exact cospectrality: equal power sums `p_1..p_n`, equivalently equal
/// characteristic polynomials.
pub fn is_cospectral(g1: &CirculantGraph, g2: &CirculantGraph) -> Result<bool> {
    check_same_order(g1, g2)?;
    let n = g1.n();
    Ok(power_sums(g1, n) == power_sums(g2, n))
}

/// Exact singular cospectrality: equal even power sums `p_2..p_{2n}`.
///
/// This also forces equal zero multiplicities; for same-order graphs it is
/// equivalent to the nonzero-|spectrum| comparison in
/// [`compare_spectra`].
pub fn is_singularly_cospectral(g1: &CirculantGraph, g2: &CirculantGraph) -> Result<bool> {
    check_same_order(g1, g2)?;
    let n = g1.n();
    Ok(power_sums(g1, 2 * n).even() == power_sums(g2, 2 * n).even())
}

/// Full certificate comparison: cospectrality, both singular-cospectrality
/// readings, and the exact nullities.
pub fn compare_spectra(g1: &CirculantGraph, g2: &CirculantGraph) -> Result<SpectralComparison> {
    check_same_order(g1, g2)?;
    let a = GraphInvariants::compute(g1.clone(), PrecisionBudget::default())?;
    let b = GraphInvariants::compute(g2.clone(), PrecisionBudget::default())?;
    Ok(compare_invariants(&a, &b))
}

/// Classifies a pair: cospectral / singularly cospectral / same inertia, and
/// isomorphism where decidable (always at odd prime order, by multiplier
/// search elsewhere).
pub fn classify_pair(g1: &CirculantGraph, g2: &CirculantGraph) -> Result<PairVerdict> {
    classify_pair_with(g1, g2, PrecisionBudget::default())
}

pub fn classify_pair_with(
    g1: &CirculantGraph,
    g2: &CirculantGraph,
    budget: PrecisionBudget,
) -> Result<PairVerdict> {
    check_same_order(g1, g2)?;
    let a = GraphInvariants::compute(g1.clone(), budget)?;
    let b = GraphInvariants::compute(g2.clone(), budget)?;
    Ok(verdict_from(&a, &b))
}

/// Validated parameters for the built-in pair families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyParams {
    /// Arbitrary generators on even order, paired with their complement shift.
    Lemma21 { n: usize, generators: Vec<usize> },
    /// `{1, 2}` against `{k-2, k-1}` on `n = 2k`, `k >= 6` (distinct inertia).
    Thm31 { k: usize },
    /// `k = 4*alpha + 9`, `s = 2*alpha + 4` (same inertia).
    Thm32 { alpha: usize },
    /// `{1..s}` against `{k-s..k-1}` for `2 <= s <= k-3` (NCSC).
    Thm44 { k: usize, s: usize },
}

impl FamilyParams {
    pub fn construct(&self) -> Result<(CirculantGraph, CirculantGraph)> {
        match self {
            FamilyParams::Lemma21 { n, generators } => family_lemma21(*n, generators),
            FamilyParams::Thm31 { k } => family_thm31(*k),
            FamilyParams::Thm32 { alpha } => Ok(family_thm32(*alpha)),
            FamilyParams::Thm44 { k, s } => family_thm44(*k, *s),
        }
    }
}

/// Pairs a connection set on even order with its complement shift; the two
/// graphs are always singularly cospectral.
pub fn family_lemma21(n: usize, generators: &[usize]) -> Result<(CirculantGraph, CirculantGraph)> {
    let s1 = ConnectionSet::new(n, generators)?;
    let s2 = s1.complement_shift()?;
    Ok((CirculantGraph::new(s1), CirculantGraph::new(s2)))
}

/// The distinct-inertia pair `{1,2,2k-2,2k-1}` / `{k-2,k-1,k+1,k+2}` on
/// `n = 2k` vertices; requires `k >= 6`.
pub fn family_thm31(k: usize) -> Result<(CirculantGraph, CirculantGraph)> {
    if k < 6 {
        return Err(Error::ParamOutOfRange(format!(
            "family thm31 requires k >= 6, got {k}"
        )));
    }
    family_lemma21(2 * k, &[1, 2])
}

/// The same-inertia pair with `k = 4*alpha + 9`, `s = 2*alpha + 4`:
/// generators `{1..s}` against `{k-s..k-1}` on `n = 2k`.
pub fn family_thm32(alpha: usize) -> (CirculantGraph, CirculantGraph) {
    let k = 4 * alpha + 9;
    let s = 2 * alpha + 4;
    family_thm44(k, s).expect("family parameters are in range by construction")
}

/// The NCSC pair `{1..s}` / `{k-s..k-1}` on `n = 2k`; requires `k >= 6` and
/// `2 <= s <= k-3`.
pub fn family_thm44(k: usize, s: usize) -> Result<(CirculantGraph, CirculantGraph)> {
    if k < 6 {
        return Err(Error::ParamOutOfRange(format!(
            "family thm44 requires k >= 6, got {k}"
        )));
    }
    if !(2..=k - 3).contains(&s) {
        return Err(Error::ParamOutOfRange(format!(
            "family thm44 requires 2 <= s <= k-3 = {}, got s = {s}",
            k - 3
        )));
    }
    let generators: Vec<usize> = (1..=s).collect();
    family_lemma21(2 * k, &generators)
}

/// Closed-form counts of positive (`P_k`) and negative (`N_k`) odd-indexed
/// eigenvalues for the [`family_thm31`] pair.
pub fn pk_nk_closed_form(k: usize) -> Result<(usize, usize)> {
    if k < 6 {
        return Err(Error::ParamOutOfRange(format!(
            "closed forms require k >= 6, got {k}"
        )));
    }
    let k_i = k as i64;
    let low = (k_i + 3) / 6;
    let high = (5 * k_i + 3) / 6;
    let p = k_i + low - high - i64::from(k % 6 == 3);
    let n = high - low
        - if k % 6 == 3 {
            2
        } else if k % 2 == 1 {
            1
        } else {
            0
        };
    debug_assert!(p >= 0 && n >= 0);
    Ok((p as usize, n as usize))
}

/// Consecutive-generator graph `{1..s}` on `n = 2k`.
fn consecutive_graph(k: usize, s: usize) -> CirculantGraph {
    let gens: Vec<usize> = (1..=s).collect();
    CirculantGraph::from_generators(2 * k, &gens).expect("valid by construction")
}

fn check_ks_range(k: usize, s: usize) -> Result<()> {
    if k < 6 {
        return Err(Error::ParamOutOfRange(format!("requires k >= 6, got {k}")));
    }
    if !(2..=(k - 1) / 2).contains(&s) {
        return Err(Error::ParamOutOfRange(format!(
            "requires 2 <= s <= (k-1)/2 = {}, got s = {s}",
            (k - 1) / 2
        )));
    }
    Ok(())
}

/// Verifies the strict bounds
/// `s/k * (2k - 2s - 1) < lambda_1 < 7s/(2k) * (k - s - 1/2)`
/// with `lambda_1` certified to an interval of width at most `10^-12`.
pub fn lambda1_bounds_check(k: usize, s: usize) -> Result<bool> {
    lambda1_bounds_check_with(k, s, PrecisionBudget::default())
}

pub fn lambda1_bounds_check_with(k: usize, s: usize, budget: PrecisionBudget) -> Result<bool> {
    check_ks_range(k, s)?;
    let g = consecutive_graph(k, s);
    let (k_i, s_i) = (k as i64, s as i64);
    let lower = (BigInt::from(s_i * (2 * k_i - 2 * s_i - 1)), BigInt::from(k_i));
    let upper = (BigInt::from(7 * s_i * (2 * k_i - 2 * s_i - 1)), BigInt::from(4 * k_i));
    let width_num = BigInt::from(1);
    let width_den = BigInt::from(10u64.pow(12));
    let index = spectra::EigenIndex::new(1, g.n()).unwrap();
    for prec in budget.steps() {
        let iv = spectra::eigenvalue_fourier(&g, index, prec);
        let lo_cmp = iv.cmp_ratio(&lower.0, &lower.1);
        let hi_cmp = iv.cmp_ratio(&upper.0, &upper.1);
        if lo_cmp == Some(Ordering::Less) || hi_cmp == Some(Ordering::Greater) {
            return Ok(false);
        }
        if lo_cmp == Some(Ordering::Greater)
            && hi_cmp == Some(Ordering::Less)
            && iv.width_le_ratio(&width_num, &width_den)
        {
            return Ok(true);
        }
    }
    Err(Error::PrecisionExhausted { cap: budget.cap })
}

/// Exact check of the odd-index identity: `lambda_{2j+1}` over `{1..s}`
/// equals `lambda_{2j+1}` over `{1..k-s-1}` on `n = 2k`.
pub fn odd_eigen_identity_check(k: usize, s: usize, j: usize) -> Result<bool> {
    check_ks_range(k, s)?;
    if 2 * j > k - 1 {
        return Err(Error::ParamOutOfRange(format!(
            "requires 0 <= j <= (k-1)/2 = {}, got j = {j}",
            (k - 1) / 2
        )));
    }
    let g1 = consecutive_graph(k, s);
    let g2 = consecutive_graph(k, k - s - 1);
    Ok(eigenvalues_equal_exact(&g1, 2 * j + 1, &g2, 2 * j + 1))
}

/// Certified sign facts on the `{1..s}` / `{k-s..k-1}` pair:
/// `lambda_1 > 0`, `beta_1 < 0`, and `lambda_k + lambda_1 > 0`.
pub fn sign_lemma_checks(k: usize, s: usize) -> Result<bool> {
    sign_lemma_checks_with(k, s, PrecisionBudget::default())
}

pub fn sign_lemma_checks_with(k: usize, s: usize, budget: PrecisionBudget) -> Result<bool> {
    check_ks_range(k, s)?;
    // s <= (k-1)/2 <= k-3 for k >= 6, so the pair constructor cannot fail.
    let (g1, g2) = family_thm44(k, s)?;
    if eigenvalue_sign_with(&g1, 1, budget)? != Sign::Positive {
        return Ok(false);
    }
    if eigenvalue_sign_with(&g2, 1, budget)? != Sign::Negative {
        return Ok(false);
    }
    // lambda_k + lambda_1 > 0: exact-zero test first, interval sign after.
    if eigenvalues_sum_is_zero(&g1, k, &g1, 1) {
        return Ok(false);
    }
    let idx1 = spectra::EigenIndex::new(1, g1.n()).unwrap();
    let idxk = spectra::EigenIndex::new(k, g1.n()).unwrap();
    for prec in budget.steps() {
        let sum = spectra::eigenvalue_fourier(&g1, idx1, prec)
            .add(&spectra::eigenvalue_fourier(&g1, idxk, prec));
        match sum.sign() {
            Some(Ordering::Greater) => return Ok(true),
            Some(_) => return Ok(false),
            None => continue,
        }
    }
    Err(Error::PrecisionExhausted { cap: budget.cap })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, gens: &[usize]) -> CirculantGraph {
        CirculantGraph::from_generators(n, gens).unwrap()
    }

    #[test]
    fn cospectrality_spec_examples() {
        let g = graph(12, &[1, 2]);
        assert!(is_cospectral(&g, &g).unwrap());
        let h = graph(12, &[4, 5]);
        assert!(!is_cospectral(&g, &h).unwrap());
        // Two drawings of the 5-cycle.
        assert!(is_cospectral(&graph(5, &[1]), &graph(5, &[2])).unwrap());
        assert!(matches!(
            is_cospectral(&g, &graph(10, &[1])),
            Err(Error::OrderMismatch(12, 10))
        ));
    }

    #[test]
    fn singular_cospectrality_spec_examples() {
        let g = graph(12, &[1, 2]);
        let h = graph(12, &[4, 5]);
        assert!(is_singularly_cospectral(&g, &h).unwrap());
        assert!(!is_singularly_cospectral(&graph(12, &[1]), &graph(12, &[2])).unwrap());
        assert!(is_singularly_cospectral(&g, &g).unwrap());
    }

    #[test]
    fn comparison_certificates_are_consistent() {
        let g = graph(12, &[1, 2]);
        let h = graph(12, &[4, 5]);
        let cmp = compare_spectra(&g, &h).unwrap();
        assert!(!cmp.cospectral);
        assert!(cmp.even_power_sums_equal);
        assert!(cmp.equal_nonzero_abs_spectrum);
        assert_eq!(cmp.nullities, (3, 3));
    }

    #[test]
    fn classify_spec_examples() {
        let v = classify_pair(&graph(12, &[1, 2]), &graph(12, &[4, 5])).unwrap();
        assert_eq!(
            v,
            PairVerdict {
                isomorphic: TriState::Unknown,
                cospectral: false,
                singularly_cospectral: true,
                same_inertia: false,
            }
        );
        assert!(v.is_ncsc());
        assert_eq!(v.class(), VerdictClass::Ncsc);

        let (g1, g2) = family_thm32(0);
        let v = classify_pair(&g1, &g2).unwrap();
        assert!(v.singularly_cospectral && !v.cospectral && v.same_inertia);

        let v = classify_pair(&graph(5, &[1]), &graph(5, &[2])).unwrap();
        assert_eq!(
            v,
            PairVerdict {
                isomorphic: TriState::Yes,
                cospectral: true,
                singularly_cospectral: true,
                same_inertia: true,
            }
        );
        assert_eq!(v.class(), VerdictClass::Isomorphic);
    }

    #[test]
    fn classify_is_symmetric() {
        let g = graph(12, &[1, 2]);
        let h = graph(12, &[4, 5]);
        assert_eq!(classify_pair(&g, &h).unwrap(), classify_pair(&h, &g).unwrap());
    }

    #[test]
    fn family_constructors_match_spec() {
        let (g1, g2) = family_lemma21(12, &[1, 2]).unwrap();
        assert_eq!(g1.connection_set().elements(), &[1, 2, 10, 11]);
        assert_eq!(g2.connection_set().elements(), &[4, 5, 7, 8]);

        let (g1, g2) = family_lemma21(14, &[1, 3]).unwrap();
        assert_eq!(g1.connection_set().elements(), &[1, 3, 11, 13]);
        assert_eq!(g2.connection_set().elements(), &[4, 6, 8, 10]);
        assert!(is_singularly_cospectral(&g1, &g2).unwrap());

        let (g1, g2) = family_thm31(7).unwrap();
        assert_eq!(g1.connection_set().elements(), &[1, 2, 12, 13]);
        assert_eq!(g2.connection_set().elements(), &[5, 6, 8, 9]);

        assert!(matches!(family_thm31(5), Err(Error::ParamOutOfRange(_))));

        let (g1, g2) = family_thm32(0);
        assert_eq!(g1.n(), 18);
        assert_eq!(g1.connection_set().generators(), vec![1, 2, 3, 4]);
        assert_eq!(g2.connection_set().generators(), vec![5, 6, 7, 8]);
        let (g1, _) = family_thm32(1);
        assert_eq!(g1.n(), 26);
        assert_eq!(g1.connection_set().generators(), (1..=6).collect::<Vec<_>>());

        // thm44 at (6, 2) reproduces the thm31 pair.
        let (a1, a2) = family_thm44(6, 2).unwrap();
        let (b1, b2) = family_thm31(6).unwrap();
        assert_eq!((a1, a2), (b1, b2));
        assert!(family_thm44(6, 4).is_err());
        assert!(family_thm44(5, 2).is_err());
    }

    #[test]
    fn thm44_pair_is_ncsc_at_k10_s7() {
        let (g1, g2) = family_thm44(10, 7).unwrap();
        assert!(is_singularly_cospectral(&g1, &g2).unwrap());
        assert!(!is_cospectral(&g1, &g2).unwrap());
    }

    #[test]
    fn thm31_inertia_differs_at_k13() {
        let (g1, g2) = family_thm31(13).unwrap();
        assert_ne!(spectra::inertia(&g1).unwrap(), spectra::inertia(&g2).unwrap());
    }

    #[test]
    fn closed_forms_spec_values() {
        assert_eq!(pk_nk_closed_form(6).unwrap(), (2, 4));
        assert_eq!(pk_nk_closed_form(9).unwrap(), (2, 4));
        assert!(pk_nk_closed_form(5).is_err());
        for k in 6..=60 {
            let (p, n) = pk_nk_closed_form(k).unwrap();
            assert!(p < n, "k = {k}");
        }
    }

    #[test]
    fn lambda1_bounds_spec_points() {
        assert!(lambda1_bounds_check(6, 2).unwrap());
        assert!(lambda1_bounds_check(9, 4).unwrap());
        assert!(lambda1_bounds_check(60, 29).unwrap());
        assert!(lambda1_bounds_check(6, 3).is_err());
    }

    #[test]
    fn odd_identity_spec_points() {
        assert!(odd_eigen_identity_check(6, 2, 0).unwrap());
        assert!(odd_eigen_identity_check(9, 4, 2).unwrap());
        assert!(odd_eigen_identity_check(13, 3, 5).unwrap());
        assert!(odd_eigen_identity_check(6, 2, 3).is_err());
    }

    #[test]
    fn sign_lemmas_spec_points() {
        assert!(sign_lemma_checks(6, 2).unwrap());
        assert!(sign_lemma_checks(9, 4).unwrap());
        assert!(sign_lemma_checks(20, 9).unwrap());
    }
}
