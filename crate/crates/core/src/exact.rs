//! Exact binary values and the wide-integer reference product.
//!
//! Used by `mul --compare-oracle` and the self-test suites. The reference
//! product is a single native 128-bit multiply of the full significands, so
//! it shares nothing with the Karatsuba-Urdhva path.

use std::cmp::Ordering;
use std::fmt;

use crate::word::{ModeConfig, Word67, MANTISSA_FIELD_BITS};

/// `(-1)^negative * significand * 2^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactValue {
    pub negative: bool,
    pub significand: u128,
    pub exponent: i32,
}

impl ExactValue {
    pub const ZERO: ExactValue = ExactValue {
        negative: false,
        significand: 0,
        exponent: 0,
    };

    /// Value of a finite operand given in a mode's format, using all 52
    /// stored mantissa bits.
    pub fn from_fields(sign: u8, exponent_field: u32, mantissa52: u64, cfg: &ModeConfig) -> Self {
        let hidden = if exponent_field == 0 {
            0
        } else {
            1u128 << MANTISSA_FIELD_BITS
        };
        ExactValue {
            negative: sign == 1,
            significand: hidden | mantissa52 as u128,
            exponent: exponent_field.max(1) as i32 - cfg.bias - MANTISSA_FIELD_BITS as i32,
        }
        .normalized()
    }

    /// Value of a finite result word (Normal, Denormal or Zero).
    pub fn from_word(word: Word67, cfg: &ModeConfig) -> Self {
        Self::from_fields(word.sign(), word.exponent_field(), word.mantissa_field(), cfg)
    }

    /// Strips trailing zero bits so equal values compare equal.
    pub fn normalized(self) -> Self {
        if self.significand == 0 {
            return ExactValue {
                negative: self.negative,
                ..Self::ZERO
            };
        }
        let tz = self.significand.trailing_zeros();
        ExactValue {
            negative: self.negative,
            significand: self.significand >> tz,
            exponent: self.exponent + tz as i32,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.significand == 0
    }

    /// Bit length of the significand.
    pub fn precision(&self) -> u32 {
        128 - self.significand.leading_zeros()
    }

    /// Exact product. Both significands must fit in 64 bits.
    pub fn mul(&self, other: &ExactValue) -> ExactValue {
        assert!(self.precision() <= 64 && other.precision() <= 64);
        ExactValue {
            negative: self.negative != other.negative,
            significand: self.significand * other.significand,
            exponent: self.exponent + other.exponent,
        }
        .normalized()
    }

    /// Rounds toward zero to at most `bits` significant bits.
    pub fn truncate_to(&self, bits: u32) -> ExactValue {
        let excess = self.precision().saturating_sub(bits);
        ExactValue {
            negative: self.negative,
            significand: self.significand >> excess,
            exponent: self.exponent + excess as i32,
        }
        .normalized()
    }

    /// Power of two of the leading bit.
    pub fn leading_exponent(&self) -> i32 {
        self.exponent + self.precision() as i32 - 1
    }

    pub fn to_f64(&self) -> f64 {
        let excess = self.precision().saturating_sub(64);
        let sig = (self.significand >> excess) as u64 as f64;
        let v = sig * 2f64.powi(self.exponent + excess as i32);
        if self.negative {
            -v
        } else {
            v
        }
    }

    fn magnitude_cmp(&self, other: &ExactValue) -> Ordering {
        if self.is_zero() || other.is_zero() {
            return self.significand.cmp(&other.significand);
        }
        self.leading_exponent().cmp(&other.leading_exponent()).then_with(|| {
            let (a, b) = align(self, other).expect("same leading exponent aligns");
            a.cmp(&b)
        })
    }
}

/// Significands of both values shifted to a common exponent, if that fits
/// in 128 bits.
fn align(a: &ExactValue, b: &ExactValue) -> Option<(u128, u128)> {
    let base = a.exponent.min(b.exponent);
    let up = |v: &ExactValue| {
        let shift = (v.exponent - base) as u32;
        (shift < 128 && v.significand.leading_zeros() >= shift).then(|| v.significand << shift)
    };
    Some((up(a)?, up(b)?))
}

/// `|approx - exact| / |exact|`, computed from exactly aligned integers.
pub fn relative_error(approx: &ExactValue, exact: &ExactValue) -> f64 {
    if exact.is_zero() {
        return if approx.is_zero() { 0.0 } else { f64::INFINITY };
    }
    if approx.negative != exact.negative && !approx.is_zero() {
        return 1.0 + approx.to_f64().abs() / exact.to_f64().abs();
    }
    match align(approx, exact) {
        Some((a, e)) => a.abs_diff(e) as f64 / e as f64,
        None => ((approx.to_f64() - exact.to_f64()) / exact.to_f64()).abs(),
    }
}

pub fn absolute_error(approx: &ExactValue, exact: &ExactValue) -> f64 {
    (approx.to_f64() - exact.to_f64()).abs()
}

impl PartialOrd for ExactValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(
            match (self.negative && !self.is_zero(), other.negative && !other.is_zero()) {
                (false, false) => self.magnitude_cmp(other),
                (true, true) => other.magnitude_cmp(self),
                (true, false) => Ordering::Less,
                (false, true) => Ordering::Greater,
            },
        )
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.negative { "-" } else { "" };
        write!(f, "{sign}{:#x}*2^{}", self.significand, self.exponent)
    }
}
