//! Chebyshev polynomials of the first and second kind.
//!
//! Evaluation always goes through the three-term recurrences
//! `T_{m+1} = 2x T_m - T_{m-1}` and `U_{m+1} = 2x U_m - U_{m-1}` on certified
//! intervals; the trigonometric closed forms `T_m(cos t) = cos(mt)` and
//! `U_m(cos t) = sin((m+1)t)/sin(t)` are reserved for tests as the
//! independent oracle.

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::PrecisionBudget;
use std::cmp::Ordering;

/// Which kind of Chebyshev polynomial an identity refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebKind {
    First,
    Second,
}

/// `T_n(x)` by the first-kind recurrence, at the precision of `x`.
pub fn cheb_t(n: u32, x: &Interval) -> Interval {
    let prec = x.prec();
    match n {
        0 => Interval::one(prec),
        1 => x.clone(),
        _ => {
            let two_x = x.mul_i64(2);
            let mut prev = Interval::one(prec);
            let mut cur = x.clone();
            for _ in 1..n {
                let next = two_x.mul(&cur).sub(&prev);
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// `U_n(x)` by the second-kind recurrence, with `U_{-1} := 0`.
///
/// Degrees below -1 are rejected.
pub fn cheb_u(n: i64, x: &Interval) -> Interval {
    assert!(n >= -1, "second-kind degree must be >= -1, got {n}");
    let prec = x.prec();
    match n {
        -1 => Interval::zero(prec),
        0 => Interval::one(prec),
        _ => {
            let two_x = x.mul_i64(2);
            let mut prev = Interval::one(prec);
            let mut cur = two_x.clone();
            for _ in 1..n {
                let next = two_x.mul(&cur).sub(&prev);
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// Checks `U_{2s}(Y_j) >= -(s+1)/2` at `Y_j = cos(j*pi/n)` for even `n = 2k`,
/// `2 <= j <= k-1` and `s >= 2`, refining precision until the comparison is
/// certified one way or the other.
pub fn u2s_lower_bound_check(s: u32, n: usize, j: usize) -> Result<bool> {
    u2s_lower_bound_check_with(s, n, j, PrecisionBudget::default())
}

pub fn u2s_lower_bound_check_with(s: u32, n: usize, j: usize, budget: PrecisionBudget) -> Result<bool> {
    if n % 2 != 0 {
        return Err(Error::OddOrder(n));
    }
    let k = n / 2;
    if s < 2 {
        return Err(Error::ParamOutOfRange(format!("s must be at least 2, got {s}")));
    }
    if !(2..=k - 1).contains(&j) {
        return Err(Error::ParamOutOfRange(format!(
            "index j must lie in 2..={}, got {j}",
            k - 1
        )));
    }
    for prec in budget.steps() {
        let y = Interval::cos_pi_frac(j as u64, n as u64, prec);
        let value = cheb_u(2 * s as i64, &y);
        match value.cmp_ratio_i64(-(s as i64 + 1), 2) {
            Some(Ordering::Greater) | Some(Ordering::Equal) => return Ok(true),
            Some(Ordering::Less) => return Ok(false),
            None => continue,
        }
    }
    Err(Error::PrecisionExhausted { cap: budget.cap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_PRECISION as P;

    fn ratio(num: i64, den: i64) -> Interval {
        Interval::from_ratio_i64(num, den, P)
    }

    #[test]
    fn t_base_cases() {
        // T_0 = 1 for any x.
        let x = ratio(37, 100);
        assert_eq!(cheb_t(0, &x).cmp_ratio_i64(1, 1), Some(Ordering::Equal));
        assert_eq!(cheb_t(1, &x), x);
    }

    #[test]
    fn t2_at_half_is_exact() {
        // T_2(1/2) = 2*(1/4) - 1 = -1/2, exact in dyadic arithmetic.
        let x = ratio(1, 2);
        assert_eq!(cheb_t(2, &x).cmp_ratio_i64(-1, 2), Some(Ordering::Equal));
    }

    #[test]
    fn t7_at_cos_pi_over_7() {
        // Oracle: T_n(cos t) = cos(nt), so T_7(cos(pi/7)) = cos(pi) = -1.
        let x = Interval::cos_pi_frac(1, 7, P);
        let t = cheb_t(7, &x);
        let diff = t.sub(&Interval::exact_int(-1, P));
        assert!(diff.contains_zero());
        assert!(diff.width_le_pow2(-100));
    }

    #[test]
    fn u_base_cases() {
        let x = ratio(9, 10);
        assert_eq!(cheb_u(-1, &x).cmp_ratio_i64(0, 1), Some(Ordering::Equal));
        assert_eq!(cheb_u(0, &x).cmp_ratio_i64(1, 1), Some(Ordering::Equal));
        // U_2(1/2) = 4*(1/4) - 1 = 0.
        assert_eq!(cheb_u(2, &ratio(1, 2)).cmp_ratio_i64(0, 1), Some(Ordering::Equal));
    }

    #[test]
    #[should_panic(expected = "degree must be >= -1")]
    fn u_rejects_degree_below_minus_one() {
        cheb_u(-2, &ratio(1, 2));
    }

    #[test]
    fn u5_at_cos_pi_over_5() {
        // Oracle sin(6*pi/5)/sin(pi/5): sin(6*pi/5) = -sin(pi/5), so the
        // value is exactly -1.
        let x = Interval::cos_pi_frac(1, 5, P);
        let u = cheb_u(5, &x);
        let diff = u.sub(&Interval::exact_int(-1, P));
        assert!(diff.contains_zero());
        assert!(diff.width_le_pow2(-100));
        // Cross-check the trigonometric oracle itself at lower stakes:
        // sin(6*pi/5) = -sin(pi/5) brackets the same quotient.
        let num = Interval::sin_pi_frac(1, 5, P).neg();
        let den_times_u = Interval::sin_pi_frac(1, 5, P).mul(&u);
        assert!(num.sub(&den_times_u).contains_zero());
    }

    #[test]
    fn u2s_bound_spec_points() {
        assert!(u2s_lower_bound_check(2, 12, 2).unwrap());
        assert!(u2s_lower_bound_check(4, 20, 9).unwrap());
        assert!(u2s_lower_bound_check(2, 12, 5).unwrap());
    }

    #[test]
    fn u2s_bound_rejects_bad_ranges() {
        assert!(matches!(u2s_lower_bound_check(2, 13, 2), Err(Error::OddOrder(13))));
        assert!(u2s_lower_bound_check(2, 12, 1).is_err());
        assert!(u2s_lower_bound_check(2, 12, 6).is_err());
        assert!(u2s_lower_bound_check(1, 12, 2).is_err());
    }

    #[test]
    fn first_kind_from_second_kind() {
        // T_n = (U_n - U_{n-2}) / 2 for n >= 2.
        for n in 2..=20u32 {
            let x = ratio(3, 7);
            let lhs = cheb_t(n, &x).mul_i64(2);
            let rhs = cheb_u(n as i64, &x).sub(&cheb_u(n as i64 - 2, &x));
            assert!(lhs.sub(&rhs).contains_zero(), "n = {n}");
        }
    }
}
