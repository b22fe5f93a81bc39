//! Integer polynomials, stored dense with ascending coefficients.

use crate::interval::Interval;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::fmt;

/// A polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`; the vector always carries
/// `degree + 1` entries, so monic degree-`n` characteristic polynomials keep
/// their full length even with zero coefficients inside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a polynomial needs at least one coefficient");
        IntPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().unwrap()
    }

    pub fn is_monic(&self) -> bool {
        *self.leading() == BigInt::from(1)
    }

    /// Divides by `x^k`, or returns `None` if any of the `k` lowest
    /// coefficients is nonzero.
    pub fn shift_down(&self, k: usize) -> Option<IntPolynomial> {
        if k > self.degree() || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPolynomial::from_coeffs(self.coeffs[k..].to_vec()))
    }

    /// Horner evaluation on a certified interval.
    pub fn eval_interval(&self, x: &Interval) -> Interval {
        let prec = x.prec();
        let mut acc = Interval::zero(prec);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&Interval::from_ratio(c, &BigInt::from(1), prec));
        }
        acc
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && self.degree() > 0 {
                continue;
            }
            let mag = c.magnitude();
            if first {
                if c.sign() == num_bigint::Sign::Minus {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.sign() == num_bigint::Sign::Minus {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let one = mag == &1u32.into();
            match i {
                0 => write!(f, "{mag}")?,
                1 => {
                    if one {
                        write!(f, "x")?
                    } else {
                        write!(f, "{mag}x")?
                    }
                }
                _ => {
                    if one {
                        write!(f, "x^{i}")?
                    } else {
                        write!(f, "{mag}x^{i}")?
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// Coefficients go out as decimal strings so that consumers never overflow.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}
