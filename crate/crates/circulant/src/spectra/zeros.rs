//! Exact vanishing tests for integer combinations of roots of unity.
//!
//! Every circulant eigenvalue is `P(w^j)` for the integer polynomial
//! `P(x) = sum_{h in S} x^h` and `w = exp(2*pi*i/n)`. Such a value is zero
//! exactly when the corresponding cyclotomic polynomial divides the combo
//! polynomial, which turns "is this eigenvalue zero" and "are these two
//! eigenvalues equal" into integer polynomial arithmetic with no tolerance.

use crate::graph::CirculantGraph;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

/// Coefficients (ascending) of the cyclotomic polynomial `Phi_d`, cached
/// process-wide.
pub(crate) fn cyclotomic(d: usize) -> Arc<Vec<BigInt>> {
    static CACHE: Mutex<BTreeMap<usize, Arc<Vec<BigInt>>>> = Mutex::new(BTreeMap::new());
    assert!(d >= 1);
    if let Some(hit) = CACHE.lock().unwrap().get(&d) {
        return hit.clone();
    }
    // Phi_d = (x^d - 1) / prod over proper divisors e | d of Phi_e.
    let mut value: Vec<BigInt> = vec![BigInt::zero(); d + 1];
    value[0] = BigInt::from(-1);
    value[d] = BigInt::from(1);
    for e in 1..d {
        if d % e == 0 {
            let factor = cyclotomic(e);
            value = exact_poly_div(&value, &factor);
        }
    }
    let arc = Arc::new(value);
    CACHE.lock().unwrap().insert(d, arc.clone());
    arc
}

/// Exact quotient of `num` by the monic polynomial `den`.
fn exact_poly_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let (q, r) = poly_div_rem(num, den);
    debug_assert!(r.iter().all(Zero::is_zero), "division was not exact");
    q
}

/// Long division by a monic divisor; returns `(quotient, remainder)`.
fn poly_div_rem(num: &[BigInt], den: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let dd = den.len() - 1;
    debug_assert!(den[dd] == BigInt::from(1), "divisor must be monic");
    let mut rem: Vec<BigInt> = num.to_vec();
    if rem.len() <= dd {
        return (vec![BigInt::zero()], rem);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut rem[i]);
        for (k, dc) in den.iter().enumerate().take(dd) {
            let idx = i - dd + k;
            rem[idx] = &rem[idx] - &c * dc;
        }
        quot[i - dd] = c;
    }
    rem.truncate(dd.max(1));
    (quot, rem)
}

/// Decides exactly whether `sum c * w^e = 0` for `w = exp(2*pi*i/n)`, given
/// the terms as `(exponent, coefficient)` pairs.
pub(crate) fn root_sum_is_zero(n: usize, terms: &[(usize, i64)]) -> bool {
    assert!(n >= 1);
    let mut counts = vec![0i64; n];
    for &(e, c) in terms {
        counts[e % n] += c;
    }
    if counts.iter().all(|&c| c == 0) {
        return true;
    }
    // All live exponents share a factor g with n, so the sum is a polynomial
    // in the primitive (n/g)-th root w^g; vanishing is divisibility by
    // Phi_{n/g}.
    let g = counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .fold(n, |acc, (e, _)| acc.gcd(&e));
    let order = n / g;
    let mut compact = vec![BigInt::zero(); order];
    for (e, &c) in counts.iter().enumerate() {
        if c != 0 {
            compact[e / g] += c;
        }
    }
    let phi = cyclotomic(order);
    let (_, rem) = poly_div_rem(&compact, &phi);
    rem.iter().all(Zero::is_zero)
}

/// Exact test: is the eigenvalue at index `j` zero?
pub fn eigenvalue_is_zero(g: &CirculantGraph, j: usize) -> bool {
    let n = g.n();
    let terms: Vec<(usize, i64)> = g
        .connection_set()
        .elements()
        .iter()
        .map(|&h| ((j * h) % n, 1))
        .collect();
    root_sum_is_zero(n, &terms)
}

/// Exact test: does `lambda_{j1}` of `g1` equal `lambda_{j2}` of `g2`?
/// Both graphs must share the same order.
pub fn eigenvalues_equal_exact(g1: &CirculantGraph, j1: usize, g2: &CirculantGraph, j2: usize) -> bool {
    debug_assert_eq!(g1.n(), g2.n());
    let n = g1.n();
    let mut terms: Vec<(usize, i64)> = Vec::with_capacity(g1.degree() + g2.degree());
    for &h in g1.connection_set().elements() {
        terms.push(((j1 * h) % n, 1));
    }
    for &h in g2.connection_set().elements() {
        terms.push(((j2 * h) % n, -1));
    }
    root_sum_is_zero(n, &terms)
}

/// Exact test: does `lambda_{j1}` of `g1` plus `lambda_{j2}` of `g2` vanish?
/// Both graphs must share the same order.
pub fn eigenvalues_sum_is_zero(g1: &CirculantGraph, j1: usize, g2: &CirculantGraph, j2: usize) -> bool {
    debug_assert_eq!(g1.n(), g2.n());
    let n = g1.n();
    let mut terms: Vec<(usize, i64)> = Vec::with_capacity(g1.degree() + g2.degree());
    for &h in g1.connection_set().elements() {
        terms.push(((j1 * h) % n, 1));
    }
    for &h in g2.connection_set().elements() {
        terms.push(((j2 * h) % n, 1));
    }
    root_sum_is_zero(n, &terms)
}

/// Zero/nonzero flags for all `n` eigenvalue indices.
///
/// Whether `lambda_j` vanishes depends only on the multiplicative order of
/// `w^j`, so the test runs once per divisor of `n`.
pub fn zero_eigenvalue_flags(g: &CirculantGraph) -> Vec<bool> {
    let n = g.n();
    let mut per_divisor: BTreeMap<usize, bool> = BTreeMap::new();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let terms: Vec<(usize, i64)> = g
            .connection_set()
            .elements()
            .iter()
            .map(|&h| (h % d, 1))
            .collect();
        per_divisor.insert(d, root_sum_is_zero(d.max(1), &terms));
    }
    (0..n).map(|j| per_divisor[&(n / n.gcd(&j))]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic(1), coeffs(&[-1, 1]));
        assert_eq!(*cyclotomic(2), coeffs(&[1, 1]));
        assert_eq!(*cyclotomic(3), coeffs(&[1, 1, 1]));
        assert_eq!(*cyclotomic(4), coeffs(&[1, 0, 1]));
        assert_eq!(*cyclotomic(6), coeffs(&[1, -1, 1]));
        assert_eq!(*cyclotomic(12), coeffs(&[1, 0, -1, 0, 1]));
        // First index with a coefficient of magnitude 2.
        assert!(cyclotomic(105).iter().any(|c| c.magnitude() == &2u32.into()));
    }

    #[test]
    fn vanishing_sums() {
        // 1 + w + w^2 + ... + w^{n-1} = 0.
        let terms: Vec<(usize, i64)> = (0..7).map(|e| (e, 1)).collect();
        assert!(root_sum_is_zero(7, &terms));
        // w^2 + w^10 = 2cos(pi/3) = 1 at n = 12, not zero.
        assert!(!root_sum_is_zero(12, &[(2, 1), (10, 1)]));
        // w^3 + w^9 = 2cos(pi/2) = 0 at n = 12.
        assert!(root_sum_is_zero(12, &[(3, 1), (9, 1)]));
        // Empty is zero.
        assert!(root_sum_is_zero(5, &[]));
    }

    #[test]
    fn zero_flags_match_known_spectrum() {
        // n=12, S={1,2,10,11}: zeros exactly at j = 2, 6, 10.
        let g = CirculantGraph::from_generators(12, &[1, 2]).unwrap();
        let flags = zero_eigenvalue_flags(&g);
        let expected: Vec<bool> = (0..12).map(|j| j == 2 || j == 6 || j == 10).collect();
        assert_eq!(flags, expected);
        assert!(!eigenvalue_is_zero(&g, 1));
        assert!(eigenvalue_is_zero(&g, 6));
    }

    #[test]
    fn equality_test_agrees_with_numeric_identity() {
        // lambda_1 over {1,2} equals lambda_1 over {1,2,3} at n = 12.
        let g1 = CirculantGraph::from_generators(12, &[1, 2]).unwrap();
        let g2 = CirculantGraph::from_generators(12, &[1, 2, 3]).unwrap();
        assert!(eigenvalues_equal_exact(&g1, 1, &g2, 1));
        assert!(!eigenvalues_equal_exact(&g1, 1, &g2, 2));
        assert!(eigenvalues_equal_exact(&g1, 1, &g1, 11)); // mirror symmetry
    }
}
