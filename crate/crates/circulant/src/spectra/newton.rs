//! Newton's identities: from power sums to the characteristic polynomial.

use crate::poly::IntPolynomial;
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

type Rat = Ratio<BigInt>;

/// Recovers the monic degree-`n` polynomial whose roots have the given power
/// sums `p_1, ..., p_n`.
///
/// The recursion `m * e_m = sum_{i=1..m} (-1)^{i-1} e_{m-i} p_i` runs over
/// exact rationals; every coefficient of a characteristic polynomial of an
/// integer matrix is an integer, so a non-integer result signals an
/// arithmetic bug and panics.
pub fn char_poly_from_power_sums(n: usize, sums: &[BigInt]) -> IntPolynomial {
    assert!(sums.len() >= n, "need p_1..p_{n}");
    let mut elem: Vec<Rat> = Vec::with_capacity(n + 1);
    elem.push(Rat::one()); // e_0
    for m in 1..=n {
        let mut acc = Rat::zero();
        for i in 1..=m {
            let term = &elem[m - i] * Rat::from(sums[i - 1].clone());
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        elem.push(acc / Rat::from(BigInt::from(m)));
    }
    // char(x) = sum_m (-1)^m e_m x^{n-m}, monic.
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (m, e) in elem.iter().enumerate() {
        assert!(
            e.denom().is_one(),
            "Newton's identities produced a non-integer coefficient; power sums are inconsistent"
        );
        let mut value = e.numer().clone();
        if m % 2 == 1 {
            value = -value;
        }
        coeffs[n - m] = value;
    }
    IntPolynomial::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn triangle_char_poly() {
        // Roots 2, -1, -1: p = (0, 6, 6).
        let p = char_poly_from_power_sums(3, &[big(0), big(6), big(6)]);
        assert_eq!(p.to_string(), "x^3 - 3x - 2");
    }

    #[test]
    fn single_edge_char_poly() {
        // Roots 1, -1: p = (0, 2).
        let p = char_poly_from_power_sums(2, &[big(0), big(2)]);
        assert_eq!(p.to_string(), "x^2 - 1");
    }

    #[test]
    #[should_panic(expected = "non-integer coefficient")]
    fn inconsistent_sums_panic() {
        // p_1 = 1, p_2 = 0 would need e_2 = 1/2.
        char_poly_from_power_sums(2, &[big(1), big(0)]);
    }
}
