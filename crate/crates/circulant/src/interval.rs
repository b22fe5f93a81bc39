//! Fixed-point interval arithmetic over arbitrary-precision integers.
//!
//! An [`Interval`] stores certified lower and upper bounds of a real number
//! as big-integer mantissas at a shared binary scale: the pair `(lo, hi)` at
//! precision `p` represents the set `[lo / 2^p, hi / 2^p]`. All operations
//! round outward, so the true result of a computation is always contained in
//! the computed interval. Sign decisions taken from an interval that excludes
//! zero are therefore rigorous, which is what the eigenvalue certification in
//! [`crate::spectra`] relies on.
//!
//! The only transcendental entry points are [`Interval::pi`] and the
//! evaluation of cosines at rational multiples of pi, which is all the
//! spectral formulas need: every circulant eigenvalue is a finite sum of
//! `cos(2*pi*m/n)` terms.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::sync::Mutex;

/// Extra mantissa bits carried internally so that rounding noise stays well
/// below the precision the caller asked for.
const GUARD_BITS: u32 = 32;

/// A closed real interval `[lo, hi] * 2^{-prec}` with outward rounding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

fn shr_floor(x: &BigInt, k: u32) -> BigInt {
    // BigInt's shift rounds toward negative infinity, i.e. floor.
    x >> k
}

fn shr_ceil(x: &BigInt, k: u32) -> BigInt {
    -((-x) >> k)
}

fn div_floor_big(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::div_floor(a, b)
}

fn div_ceil_big(a: &BigInt, b: &BigInt) -> BigInt {
    -num_integer::Integer::div_floor(&-a, b)
}

impl Interval {
    fn new(lo: BigInt, hi: BigInt, prec: u32) -> Self {
        debug_assert!(lo <= hi, "interval bounds out of order");
        Interval { lo, hi, prec }
    }

    /// The exact point interval for an integer.
    pub fn exact_int(v: i64, prec: u32) -> Self {
        let m = BigInt::from(v) << prec;
        Interval::new(m.clone(), m, prec)
    }

    /// Tightest interval containing `num/den` at the given precision. `den` must be positive.
    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u32) -> Self {
        assert!(den.is_positive(), "denominator must be positive");
        let scaled = num << prec;
        Interval::new(div_floor_big(&scaled, den), div_ceil_big(&scaled, den), prec)
    }

    /// Convenience form of [`Interval::from_ratio`] for machine integers.
    pub fn from_ratio_i64(num: i64, den: i64, prec: u32) -> Self {
        Interval::from_ratio(&BigInt::from(num), &BigInt::from(den), prec)
    }

    pub fn zero(prec: u32) -> Self {
        Interval::new(BigInt::zero(), BigInt::zero(), prec)
    }

    pub fn one(prec: u32) -> Self {
        Interval::exact_int(1, prec)
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// Re-scale to a different precision, rounding outward when shrinking.
    pub fn with_prec(&self, prec: u32) -> Self {
        match prec.cmp(&self.prec) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => {
                let k = prec - self.prec;
                Interval::new(&self.lo << k, &self.hi << k, prec)
            }
            Ordering::Less => {
                let k = self.prec - prec;
                Interval::new(shr_floor(&self.lo, k), shr_ceil(&self.hi, k), prec)
            }
        }
    }

    pub fn add(&self, other: &Interval) -> Self {
        debug_assert_eq!(self.prec, other.prec);
        Interval::new(&self.lo + &other.lo, &self.hi + &other.hi, self.prec)
    }

    pub fn sub(&self, other: &Interval) -> Self {
        debug_assert_eq!(self.prec, other.prec);
        Interval::new(&self.lo - &other.hi, &self.hi - &other.lo, self.prec)
    }

    pub fn neg(&self) -> Self {
        Interval::new(-&self.hi, -&self.lo, self.prec)
    }

    pub fn mul(&self, other: &Interval) -> Self {
        debug_assert_eq!(self.prec, other.prec);
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap();
        let hi = candidates.iter().max().unwrap();
        Interval::new(shr_floor(lo, self.prec), shr_ceil(hi, self.prec), self.prec)
    }

    pub fn mul_i64(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        let (a, b) = (&self.lo * &c, &self.hi * &c);
        if c.is_negative() {
            Interval::new(b, a, self.prec)
        } else {
            Interval::new(a, b, self.prec)
        }
    }

    pub fn div_u64(&self, d: u64) -> Self {
        assert!(d > 0);
        let d = BigInt::from(d);
        Interval::new(div_floor_big(&self.lo, &d), div_ceil_big(&self.hi, &d), self.prec)
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Certified sign: `Greater` if the whole interval is positive, `Less` if
    /// negative, `None` if it straddles zero.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else {
            None
        }
    }

    /// Certified comparison against the rational `num/den` (`den > 0`):
    /// `Greater` means every point of the interval exceeds it.
    pub fn cmp_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Ordering> {
        assert!(den.is_positive());
        let target = num << self.prec;
        if &self.lo * den > target {
            Some(Ordering::Greater)
        } else if &self.hi * den < target {
            Some(Ordering::Less)
        } else if self.lo == self.hi && &self.lo * den == target {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn cmp_ratio_i64(&self, num: i64, den: i64) -> Option<Ordering> {
        self.cmp_ratio(&BigInt::from(num), &BigInt::from(den))
    }

    /// True when `hi - lo <= num/den` (`den > 0`).
    pub fn width_le_ratio(&self, num: &BigInt, den: &BigInt) -> bool {
        assert!(den.is_positive());
        (&self.hi - &self.lo) * den <= (num << self.prec)
    }

    /// True when the width is at most `2^e`.
    pub fn width_le_pow2(&self, e: i32) -> bool {
        let w = &self.hi - &self.lo;
        let shifted = self.prec as i64 + e as i64;
        if shifted >= 0 {
            w <= (BigInt::one() << (shifted as u64))
        } else {
            (w << ((-shifted) as u64)) <= BigInt::one()
        }
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        debug_assert_eq!(self.prec, other.prec);
        self.lo <= other.hi && other.lo <= self.hi
    }

    fn scaled_to_f64(m: &BigInt, prec: u32) -> f64 {
        let bits = m.bits() as i64;
        let excess = bits - 64;
        if excess > 0 {
            let shifted: BigInt = m >> (excess as u64);
            shifted.to_f64().unwrap() * 2f64.powi((excess - prec as i64) as i32)
        } else {
            m.to_f64().unwrap() * 2f64.powi(-(prec as i32))
        }
    }

    /// Midpoint as the closest `f64`.
    pub fn to_f64(&self) -> f64 {
        let mid = &self.lo + &self.hi;
        Self::scaled_to_f64(&mid, self.prec + 1)
    }

    pub fn lo_f64(&self) -> f64 {
        Self::scaled_to_f64(&self.lo, self.prec)
    }

    pub fn hi_f64(&self) -> f64 {
        Self::scaled_to_f64(&self.hi, self.prec)
    }

    /// Largest absolute value of the endpoints, as a mantissa at `self.prec`.
    fn mag_hi(&self) -> BigInt {
        self.lo.abs().max(self.hi.abs())
    }

    /// Enclosure of pi. Mantissas are cached at the highest precision computed
    /// so far, so repeated calls at the same or lower precision are cheap.
    pub fn pi(prec: u32) -> Self {
        static CACHE: Mutex<Option<(u32, BigInt, BigInt)>> = Mutex::new(None);
        let mut guard = CACHE.lock().unwrap();
        let need = prec + GUARD_BITS;
        let recompute = match &*guard {
            Some((p, _, _)) => *p < need,
            None => true,
        };
        if recompute {
            // Machin: pi = 16*atan(1/5) - 4*atan(1/239).
            let work = need.max(256) + GUARD_BITS;
            let (a5_lo, a5_hi) = atan_inv_scaled(5, work);
            let (a239_lo, a239_hi) = atan_inv_scaled(239, work);
            let lo = a5_lo * 16 - a239_hi * 4;
            let hi = a5_hi * 16 - a239_lo * 4;
            *guard = Some((work, lo, hi));
        }
        let (p, lo, hi) = guard.as_ref().unwrap();
        Interval::new(lo.clone(), hi.clone(), *p).with_prec(prec)
    }

    /// Enclosure of `cos(pi * num / den)` for `den >= 1`.
    pub fn cos_pi_frac(num: u64, den: u64, prec: u32) -> Self {
        assert!(den >= 1);
        // Reduce using cos(2*pi - x) = cos(x) and cos(pi - x) = -cos(x) until
        // the angle lies in [0, pi/2].
        let mut t = num % (2 * den);
        if t > den {
            t = 2 * den - t;
        }
        let negate = 2 * t > den;
        if negate {
            t = den - t;
        }
        let work = prec + GUARD_BITS;
        let theta = Interval::pi(work).mul_i64(t as i64).div_u64(den);
        let mut c = cos_reduced(&theta, work);
        if negate {
            c = c.neg();
        }
        c.with_prec(prec)
    }

    /// Enclosure of `sin(pi * num / den)` for `0 <= num <= den`, via the
    /// cofunction identity `sin(x) = cos(pi/2 - x)`.
    pub fn sin_pi_frac(num: u64, den: u64, prec: u32) -> Self {
        assert!(num <= den && den >= 1);
        let diff = if 2 * num >= den { 2 * num - den } else { den - 2 * num };
        Interval::cos_pi_frac(diff, 2 * den, prec)
    }
}

/// Certified `atan(1/x) * 2^bits` as an integer bracket, by the alternating
/// Leibniz series with exact integer powers. Each term is floored once, so the
/// accumulated rounding is below one ulp per term.
fn atan_inv_scaled(x: u64, bits: u32) -> (BigInt, BigInt) {
    let one = BigInt::one() << bits;
    let x = BigInt::from(x);
    let xx = &x * &x;
    let mut xpow = x.clone();
    let mut acc = BigInt::zero();
    let mut k: u64 = 0;
    let mut terms: u64 = 0;
    loop {
        let term = div_floor_big(&one, &((2 * k + 1) * &xpow));
        if term.is_zero() {
            break;
        }
        if k % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
        xpow *= &xx;
        k += 1;
        terms += 1;
    }
    // Truncation is below one ulp once terms vanish; flooring loses at most
    // one ulp per term.
    let slack = BigInt::from(terms + 2);
    (&acc - &slack, &acc + &slack)
}

/// Taylor series for cos on an enclosure of an angle in [0, pi/2].
fn cos_reduced(theta: &Interval, prec: u32) -> Interval {
    if theta.lo.is_zero() && theta.hi.is_zero() {
        return Interval::one(prec);
    }
    let theta2 = theta.mul(theta);
    let mut sum = Interval::one(prec);
    let mut term = Interval::one(prec);
    let cutoff = BigInt::one();
    let mut k: u64 = 1;
    loop {
        term = term.mul(&theta2).div_u64((2 * k - 1) * (2 * k));
        let mag = term.mag_hi();
        if k % 2 == 1 {
            sum = sum.sub(&term);
        } else {
            sum = sum.add(&term);
        }
        // Once terms decrease (k >= 1 here since theta^2 < 2.5 < (2k+1)(2k+2)),
        // the tail of the alternating series is bounded by the next term.
        if mag <= cutoff {
            let pad = Interval::new(-&mag - 1, mag + 1, prec);
            return sum.add(&pad);
        }
        k += 1;
        assert!(k < 100_000, "cosine series failed to converge");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_brackets_reference_value() {
        let pi = Interval::pi(128);
        assert!(pi.lo_f64() <= std::f64::consts::PI);
        assert!(pi.hi_f64() >= std::f64::consts::PI);
        assert!(pi.width_le_pow2(-120));
    }

    #[test]
    fn pi_reaches_high_precision() {
        let pi = Interval::pi(4096);
        assert!(pi.width_le_pow2(-4090));
        // Lower precision afterwards still served from cache.
        let pi64 = Interval::pi(64);
        assert!((pi64.to_f64() - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn cosine_special_angles() {
        // cos(0) = 1 and cos(pi) = -1 are exact through the reductions.
        let c0 = Interval::cos_pi_frac(0, 7, 128);
        assert_eq!(c0.cmp_ratio_i64(1, 1), Some(Ordering::Equal));
        let cpi = Interval::cos_pi_frac(7, 7, 128);
        assert_eq!(cpi.cmp_ratio_i64(-1, 1), Some(Ordering::Equal));
        // cos(pi/3) = 1/2.
        let c = Interval::cos_pi_frac(1, 3, 128);
        assert!(c.with_prec(128).sub(&Interval::from_ratio_i64(1, 2, 128)).contains_zero());
        assert!(c.width_le_pow2(-120));
        // cos(pi/2) straddles zero tightly.
        let c = Interval::cos_pi_frac(1, 2, 128);
        assert!(c.contains_zero());
        assert!(c.width_le_pow2(-120));
    }

    #[test]
    fn cosine_matches_f64_reference() {
        for (num, den) in [(1u64, 7u64), (3, 11), (5, 9), (13, 17), (29, 30), (7, 4), (9, 5)] {
            let c = Interval::cos_pi_frac(num, den, 96);
            let reference = (std::f64::consts::PI * num as f64 / den as f64).cos();
            assert!(
                (c.to_f64() - reference).abs() < 1e-12,
                "cos(pi*{num}/{den}): {} vs {reference}",
                c.to_f64()
            );
        }
    }

    #[test]
    fn sine_matches_f64_reference() {
        for (num, den) in [(1u64, 7u64), (2, 5), (5, 9), (13, 17), (1, 2)] {
            let s = Interval::sin_pi_frac(num, den, 96);
            let reference = (std::f64::consts::PI * num as f64 / den as f64).sin();
            assert!((s.to_f64() - reference).abs() < 1e-12);
        }
    }

    #[test]
    fn arithmetic_encloses_true_values() {
        let a = Interval::from_ratio_i64(1, 3, 64);
        let b = Interval::from_ratio_i64(-2, 7, 64);
        let prod = a.mul(&b);
        assert!((prod.to_f64() - (1.0 / 3.0) * (-2.0 / 7.0)).abs() < 1e-15);
        assert!(prod.sign() == Some(Ordering::Less));
        let sum = a.add(&b);
        assert!((sum.to_f64() - (1.0 / 3.0 - 2.0 / 7.0)).abs() < 1e-15);
        assert_eq!(sum.cmp_ratio_i64(1, 21), None); // exactly 1/21 lies inside
        assert_eq!(sum.cmp_ratio_i64(1, 22), Some(Ordering::Greater));
        assert_eq!(sum.cmp_ratio_i64(1, 20), Some(Ordering::Less));
    }

    #[test]
    fn rescaling_is_outward() {
        let a = Interval::from_ratio_i64(1, 3, 200);
        let b = a.with_prec(40);
        assert!(b.lo_f64() <= 1.0 / 3.0 && 1.0 / 3.0 <= b.hi_f64());
        let c = b.with_prec(200);
        assert!(c.lo_f64() <= 1.0 / 3.0 && 1.0 / 3.0 <= c.hi_f64());
    }
}
