//! Eigenvalues of circulant graphs by independent routes, exact integer
//! certificates, and certified inertia.
//!
//! Numeric values come from certified interval evaluation of cosine sums
//! (the root-of-unity formula) or Chebyshev closed forms; integer facts —
//! power sums, characteristic polynomials, matrix rank, exact zero tests —
//! come from big-integer arithmetic. An eigenvalue is declared zero only on
//! exact evidence, never because an interval is merely small.

mod newton;
mod powers;
mod rank;
mod zeros;

pub use newton::char_poly_from_power_sums;
pub use powers::{power_sums, PowerSums};
pub use rank::integer_rank;
pub use zeros::{
    eigenvalue_is_zero, eigenvalues_equal_exact, eigenvalues_sum_is_zero, zero_eigenvalue_flags,
};

use crate::error::{Error, Result};
use crate::graph::CirculantGraph;
use crate::interval::Interval;
use crate::poly::IntPolynomial;
use crate::PrecisionBudget;
use num_bigint::BigInt;
use serde::Serialize;
use std::cmp::Ordering;

/// A validated eigenvalue index `j` in `{0, ..., n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EigenIndex {
    j: usize,
    n: usize,
}

impl EigenIndex {
    pub fn new(j: usize, n: usize) -> Result<Self> {
        if j >= n {
            return Err(Error::ParamOutOfRange(format!(
                "eigenvalue index {j} out of range 0..{n}"
            )));
        }
        Ok(EigenIndex { j, n })
    }

    pub fn j(&self) -> usize {
        self.j
    }
}

/// Certified sign of an eigenvalue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    Positive,
    Zero,
    Negative,
}

/// The inertia triple: counts of positive, negative and zero eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Serialize for Inertia {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (self.positive, self.negative, self.zero).serialize(serializer)
    }
}

/// All `n` eigenvalues evaluated at a fixed working precision.
///
/// Values are stored in index order; `values[j] == values[n-j]` holds by
/// construction, `values[0]` is the degree.
#[derive(Clone, Debug, Serialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub precision: u32,
}

impl Spectrum {
    pub fn compute(g: &CirculantGraph, precision: u32) -> Self {
        let n = g.n();
        let mut values = vec![0.0; n];
        for j in 0..=n / 2 {
            let v = fourier_interval(g, j, precision).to_f64();
            values[j] = v;
            if j != 0 {
                values[n - j] = v;
            }
        }
        Spectrum { values, precision }
    }
}

/// Interval enclosure of `lambda_j = sum_{h in S} cos(2*pi*j*h/n)`, summing
/// the generator half-set as paired cosines.
fn fourier_interval(g: &CirculantGraph, j: usize, prec: u32) -> Interval {
    let n = g.n();
    let mut acc = Interval::zero(prec);
    for a in g.connection_set().generators() {
        if 2 * a == n {
            // The self-inverse element contributes cos(pi*j) once.
            acc = acc.add(&Interval::exact_int(if j % 2 == 0 { 1 } else { -1 }, prec));
        } else {
            let m = (j * a) % n;
            acc = acc.add(&Interval::cos_pi_frac(2 * m as u64, n as u64, prec).mul_i64(2));
        }
    }
    acc
}

/// Eigenvalue by the root-of-unity sum, certified at `prec` bits.
pub fn eigenvalue_fourier(g: &CirculantGraph, index: EigenIndex, prec: u32) -> Interval {
    assert_eq!(index.n, g.n(), "index was validated against a different order");
    fourier_interval(g, index.j, prec)
}

/// Eigenvalue through Chebyshev closed forms: `2 * sum_h T_{a_h}(X_j)` with
/// `X_j = cos(2*pi*j/n)`. For a consecutive run of generators the
/// second-kind form `U_{2 a_s}(Y_j) - U_{2(a_1 - 1)}(Y_j)` with
/// `Y_j = cos(pi*j/n)` is evaluated as well and the two enclosures are
/// checked against each other.
///
/// Graphs containing the self-inverse generator `n/2` are rejected.
pub fn eigenvalue_chebyshev(g: &CirculantGraph, index: EigenIndex, prec: u32) -> Result<Interval> {
    assert_eq!(index.n, g.n(), "index was validated against a different order");
    let n = g.n();
    if g.connection_set().has_self_inverse() {
        return Err(Error::SelfInverseGenerator(n / 2));
    }
    let j = index.j;
    let gens = g.connection_set().generators();
    let x = Interval::cos_pi_frac(2 * j as u64, n as u64, prec);
    let mut acc = Interval::zero(prec);
    for &a in &gens {
        acc = acc.add(&crate::chebyshev::cheb_t(a as u32, &x));
    }
    let t_form = acc.mul_i64(2);
    let consecutive = !gens.is_empty() && gens.windows(2).all(|w| w[1] == w[0] + 1);
    if consecutive {
        let y = Interval::cos_pi_frac(j as u64, n as u64, prec);
        let (a1, a_s) = (gens[0] as i64, *gens.last().unwrap() as i64);
        let u_form = crate::chebyshev::cheb_u(2 * a_s, &y).sub(&crate::chebyshev::cheb_u(2 * (a1 - 1), &y));
        assert!(
            t_form.overlaps(&u_form),
            "first- and second-kind eigenvalue forms disagree at j = {j}"
        );
    }
    Ok(t_form)
}

/// Exact nullity: `n - rank(A)` by fraction-free integer elimination.
pub fn nullity(g: &CirculantGraph) -> usize {
    let m: Vec<Vec<BigInt>> = g
        .adjacency()
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    g.n() - integer_rank(m)
}

/// Monic characteristic polynomial of the adjacency matrix, recovered from
/// exact power sums through Newton's identities.
pub fn char_poly(g: &CirculantGraph) -> IntPolynomial {
    let n = g.n();
    char_poly_from_power_sums(n, power_sums(g, n).as_slice())
}

/// Characteristic polynomial of `A^2`, from the even power sums of `A`.
pub fn char_poly_of_square(g: &CirculantGraph) -> IntPolynomial {
    let n = g.n();
    char_poly_from_power_sums(n, &power_sums(g, 2 * n).even())
}

/// Certified inertia with default precision schedule.
pub fn inertia(g: &CirculantGraph) -> Result<Inertia> {
    inertia_with(g, PrecisionBudget::default())
}

/// Certified inertia.
///
/// The zero count is `n - rank(A)`, exact. Signs come from interval
/// refinement: precision doubles until the number of enclosures still
/// straddling zero matches the exact nullity, at which point the straddlers
/// are precisely the zero eigenvalues and everything else carries a certified
/// sign.
pub fn inertia_with(g: &CirculantGraph, budget: PrecisionBudget) -> Result<Inertia> {
    let n = g.n();
    let delta = nullity(g);
    // Work on half the indices; lambda_j = lambda_{n-j} exactly.
    let half: Vec<(usize, usize)> = (0..=n / 2)
        .map(|j| (j, if j == 0 || (n % 2 == 0 && j == n / 2) { 1 } else { 2 }))
        .collect();
    let mut signs: Vec<Option<Ordering>> = vec![None; half.len()];
    let mut last_intervals: Vec<Option<Interval>> = vec![None; half.len()];
    let mut done = false;
    for prec in budget.steps() {
        let mut straddle = 0;
        for (slot, &(j, mult)) in half.iter().enumerate() {
            if signs[slot].is_some() {
                continue;
            }
            let iv = fourier_interval(g, j, prec);
            match iv.sign() {
                Some(s) => signs[slot] = Some(s),
                None => straddle += mult,
            }
            last_intervals[slot] = Some(iv);
        }
        debug_assert!(straddle >= delta, "certified a sign for a zero eigenvalue");
        if straddle == delta {
            done = true;
            break;
        }
    }
    if !done {
        return Err(Error::PrecisionExhausted { cap: budget.cap });
    }
    let mut positive = 0;
    let mut negative = 0;
    for (slot, &(_, mult)) in half.iter().enumerate() {
        match signs[slot] {
            Some(Ordering::Greater) => positive += mult,
            Some(Ordering::Less) => negative += mult,
            _ => {}
        }
    }
    debug_assert_eq!(positive + negative, n - delta);
    // Trace consistency: the interval sum over all indices must contain 0.
    if cfg!(debug_assertions) {
        let prec = last_intervals
            .iter()
            .flatten()
            .map(Interval::prec)
            .min()
            .unwrap_or(budget.start);
        let mut total = Interval::zero(prec);
        for (slot, &(_, mult)) in half.iter().enumerate() {
            if let Some(iv) = &last_intervals[slot] {
                total = total.add(&iv.with_prec(prec).mul_i64(mult as i64));
            }
        }
        debug_assert!(total.contains_zero(), "eigenvalue sum drifted away from zero");
    }
    Ok(Inertia { positive, negative, zero: delta })
}

/// Certified sign of a single eigenvalue. Zero is decided by the exact
/// root-of-unity vanishing test; nonzero signs by interval refinement.
pub fn eigenvalue_sign_with(g: &CirculantGraph, j: usize, budget: PrecisionBudget) -> Result<Sign> {
    if eigenvalue_is_zero(g, j) {
        return Ok(Sign::Zero);
    }
    for prec in budget.steps() {
        match fourier_interval(g, j, prec).sign() {
            Some(Ordering::Greater) => return Ok(Sign::Positive),
            Some(Ordering::Less) => return Ok(Sign::Negative),
            _ => continue,
        }
    }
    Err(Error::PrecisionExhausted { cap: budget.cap })
}

pub fn eigenvalue_sign(g: &CirculantGraph, j: usize) -> Result<Sign> {
    eigenvalue_sign_with(g, j, PrecisionBudget::default())
}

/// Certified signs of the odd-indexed eigenvalues `lambda_1, lambda_3, ...,
/// lambda_{2k-1}` of a graph on `n = 2k` vertices, in that order.
pub fn inertia_odd_index_signs(g: &CirculantGraph) -> Result<Vec<Sign>> {
    inertia_odd_index_signs_with(g, PrecisionBudget::default())
}

pub fn inertia_odd_index_signs_with(g: &CirculantGraph, budget: PrecisionBudget) -> Result<Vec<Sign>> {
    let n = g.n();
    if n % 2 != 0 {
        return Err(Error::OddOrder(n));
    }
    let k = n / 2;
    let mut out = vec![Sign::Zero; k];
    for r in 1..=k {
        let j = 2 * r - 1;
        // Mirror symmetry: j and n - j are both odd; reuse the earlier half.
        if j > k {
            out[r - 1] = out[k - r]; // index of r' = k - r + 1
            continue;
        }
        out[r - 1] = eigenvalue_sign_with(g, j, budget)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_PRECISION as P;

    fn graph(n: usize, gens: &[usize]) -> CirculantGraph {
        CirculantGraph::from_generators(n, gens).unwrap()
    }

    fn idx(j: usize, n: usize) -> EigenIndex {
        EigenIndex::new(j, n).unwrap()
    }

    #[test]
    fn fourier_spec_values() {
        let g = graph(12, &[1, 2]);
        // lambda_0 = |S| = 4 exactly.
        let l0 = eigenvalue_fourier(&g, idx(0, 12), P);
        assert_eq!(l0.cmp_ratio_i64(4, 1), Some(Ordering::Equal));
        // lambda_6 = -2(s_o - s_e) = 0.
        let l6 = eigenvalue_fourier(&g, idx(6, 12), P);
        assert!(l6.contains_zero() && l6.width_le_pow2(-100));
        // lambda_1 = sqrt(3) + 1 (dense-eigensolver derived).
        let l1 = eigenvalue_fourier(&g, idx(1, 12), P);
        assert!((l1.to_f64() - 2.732_050_807_568_877).abs() < 1e-12);
    }

    #[test]
    fn chebyshev_route_matches_fourier() {
        let g = graph(12, &[1, 2]);
        for j in 0..12 {
            let a = eigenvalue_fourier(&g, idx(j, 12), P);
            let b = eigenvalue_chebyshev(&g, idx(j, 12), P).unwrap();
            assert!(a.overlaps(&b), "j = {j}");
        }
        // n=18, consecutive 1..4, j=0 gives 2s = 8.
        let g = graph(18, &[1, 2, 3, 4]);
        let v = eigenvalue_chebyshev(&g, idx(0, 18), P).unwrap();
        assert_eq!(v.cmp_ratio_i64(8, 1), Some(Ordering::Equal));
        // n=12 j=3: 2cos(pi/2) + 2cos(pi) = -2.
        let g = graph(12, &[1, 2]);
        let v = eigenvalue_chebyshev(&g, idx(3, 12), P).unwrap();
        assert!((v.to_f64() + 2.0).abs() < 1e-20);
    }

    #[test]
    fn chebyshev_route_rejects_self_inverse() {
        let g = graph(8, &[1, 4]);
        assert!(matches!(
            eigenvalue_chebyshev(&g, idx(1, 8), P),
            Err(Error::SelfInverseGenerator(4))
        ));
        // The Fourier route handles it fine: lambda_0 = 3.
        let v = eigenvalue_fourier(&g, idx(0, 8), P);
        assert_eq!(v.cmp_ratio_i64(3, 1), Some(Ordering::Equal));
    }

    #[test]
    fn spectrum_is_symmetric_with_degree_head() {
        let g = graph(12, &[1, 2]);
        let s = Spectrum::compute(&g, P);
        assert_eq!(s.values[0], 4.0);
        for j in 1..12 {
            assert_eq!(s.values[j], s.values[12 - j]);
        }
        let total: f64 = s.values.iter().sum();
        assert!(total.abs() < 1e-9);
    }

    #[test]
    fn char_poly_spec_examples() {
        assert_eq!(char_poly(&graph(3, &[1])).to_string(), "x^3 - 3x - 2");
        assert_eq!(char_poly(&graph(2, &[1])).to_string(), "x^2 - 1");
        assert_eq!(char_poly(&graph(4, &[1])).to_string(), "x^4 - 4x^2");
        assert_eq!(char_poly(&graph(5, &[1])).to_string(), "x^5 - 5x^3 + 5x - 2");
    }

    #[test]
    fn inertia_spec_examples() {
        let i = inertia(&graph(12, &[1, 2])).unwrap();
        assert_eq!(i, Inertia { positive: 3, negative: 6, zero: 3 });
        let i = inertia(&graph(12, &[4, 5])).unwrap();
        assert_eq!(i, Inertia { positive: 5, negative: 4, zero: 3 });
        let i = inertia(&graph(3, &[1])).unwrap();
        assert_eq!(i, Inertia { positive: 1, negative: 2, zero: 0 });
    }

    #[test]
    fn inertia_of_empty_graph() {
        let g = CirculantGraph::new(crate::ConnectionSet::new(6, &[]).unwrap());
        let i = inertia(&g).unwrap();
        assert_eq!(i, Inertia { positive: 0, negative: 0, zero: 6 });
    }

    #[test]
    fn odd_index_signs_spec_example() {
        let signs = inertia_odd_index_signs(&graph(12, &[1, 2])).unwrap();
        use Sign::*;
        assert_eq!(signs, vec![Positive, Negative, Negative, Negative, Negative, Positive]);
        let p = signs.iter().filter(|&&s| s == Positive).count();
        let n = signs.iter().filter(|&&s| s == Negative).count();
        assert_eq!((p, n), (2, 4));
    }

    #[test]
    fn odd_index_signs_only_for_even_orders() {
        assert!(matches!(
            inertia_odd_index_signs(&graph(9, &[1])),
            Err(Error::OddOrder(9))
        ));
    }

    #[test]
    fn nullity_matches_exact_zero_flags() {
        for (n, gens) in [(12usize, vec![1usize, 2]), (12, vec![4, 5]), (9, vec![1, 3]), (8, vec![1, 4]), (10, vec![2, 5])] {
            let g = graph(n, &gens);
            let by_rank = nullity(&g);
            let by_flags = zero_eigenvalue_flags(&g).iter().filter(|&&z| z).count();
            assert_eq!(by_rank, by_flags, "n = {n}, gens = {gens:?}");
        }
    }

    #[test]
    fn eigen_index_validation() {
        assert!(EigenIndex::new(11, 12).is_ok());
        assert!(EigenIndex::new(12, 12).is_err());
    }
}
