//! Mode resolution, the auto-mode precision heuristic and input truncation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{decode_word, mode_config, DecodedWord, ModeConfig, ModeId, Word67, MANTISSA_FIELD_BITS};

/// How input mantissas are shortened to the mode width.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum RoundingPolicy {
    #[default]
    Truncate,
    NearestEven,
}

impl fmt::Display for RoundingPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RoundingPolicy::Truncate => "truncate",
            RoundingPolicy::NearestEven => "nearest-even",
        })
    }
}

impl FromStr for RoundingPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "truncate" => Ok(RoundingPolicy::Truncate),
            "nearest-even" => Ok(RoundingPolicy::NearestEven),
            _ => Err(format!(
                "unknown rounding policy {s:?} (expected truncate or nearest-even)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModeResolution {
    /// Never `Auto`.
    pub mode: ModeId,
    pub auto_chosen: bool,
    /// Significant-bit counts found by the heuristic; zero outside auto mode.
    pub per_operand_bits: (u32, u32),
}

/// Resolves the operating mode of a pair of words.
///
/// Mode bits are compared before any format check, so a pair with differing
/// modes always reports `ModeMismatch`.
pub fn resolve_mode(a: Word67, b: Word67) -> Result<ModeResolution> {
    let mode_a = ModeId::from_bits(a.mode_bits())?;
    let mode_b = ModeId::from_bits(b.mode_bits())?;
    if mode_a != mode_b {
        return Err(Error::ModeMismatch { a: mode_a, b: mode_b });
    }
    if mode_a != ModeId::Auto {
        return Ok(ModeResolution {
            mode: mode_a,
            auto_chosen: false,
            per_operand_bits: (0, 0),
        });
    }
    let (ma, mb) = (a.mantissa_field(), b.mantissa_field());
    Ok(ModeResolution {
        mode: auto_select(ma, mb),
        auto_chosen: true,
        per_operand_bits: (significant_width(ma), significant_width(mb)),
    })
}

/// Number of significant stored mantissa bits, counted from bit 51.
///
/// The significant prefix ends at the last 1-bit that is followed by at least
/// six zeros or by the end of the field. The lowest set bit always satisfies
/// that, so the prefix runs through the lowest 1-bit. The hidden bit is not
/// counted.
pub fn significant_width(mantissa: u64) -> u32 {
    let mantissa = mantissa & ((1 << MANTISSA_FIELD_BITS) - 1);
    if mantissa == 0 {
        0
    } else {
        MANTISSA_FIELD_BITS - mantissa.trailing_zeros()
    }
}

/// Smallest mode that holds the wider of the two significant prefixes.
pub fn auto_select(mant_a: u64, mant_b: u64) -> ModeId {
    match significant_width(mant_a).max(significant_width(mant_b)) {
        w if w < 8 => ModeId::M2,
        w if w < 16 => ModeId::M3,
        w if w < 23 => ModeId::M4,
        w if w < 36 => ModeId::M5,
        _ => ModeId::M6,
    }
}

/// A mantissa shortened to the mode width.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Truncated {
    /// The kept bits, right-aligned.
    pub mantissa: u64,
    /// 1 when rounding carried out of the kept bits.
    pub exponent_increment: u32,
}

/// Keeps the high `keep` bits of a `field_width`-bit fraction.
///
/// On a round-up carry out of the kept bits the significand becomes the next
/// power of two: the kept fraction is zero and the exponent goes up by one.
pub fn round_field(field: u64, field_width: u32, keep: u32, policy: RoundingPolicy) -> Truncated {
    assert!(keep <= field_width && field_width <= 63);
    let dropped = field_width - keep;
    let kept = field >> dropped;
    if dropped == 0 || policy == RoundingPolicy::Truncate {
        return Truncated {
            mantissa: kept,
            exponent_increment: 0,
        };
    }
    let guard = (field >> (dropped - 1)) & 1 == 1;
    let sticky = field & ((1 << (dropped - 1)) - 1) != 0;
    let round_up = guard && (sticky || kept & 1 == 1);
    if !round_up {
        return Truncated {
            mantissa: kept,
            exponent_increment: 0,
        };
    }
    let bumped = kept + 1;
    if bumped >> keep != 0 {
        Truncated {
            mantissa: 0,
            exponent_increment: 1,
        }
    } else {
        Truncated {
            mantissa: bumped,
            exponent_increment: 0,
        }
    }
}

/// Shortens a 52-bit stored mantissa to the mode's width. A no-op in M6.
pub fn truncate_operand(mantissa: u64, cfg: &ModeConfig, policy: RoundingPolicy) -> Truncated {
    round_field(mantissa, MANTISSA_FIELD_BITS, cfg.mantissa_width, policy)
}

/// Sign, biased exponent and 52-bit mantissa of a decoded word, expressed in
/// the resolved mode's format.
///
/// Explicit-mode words are already in their mode's format. Auto-mode words
/// carry a double-precision exponent; when a custom mode is chosen it is
/// rebiased to the 8-bit format (0 and all-ones are preserved).
pub fn operand_in_mode(d: &DecodedWord, resolved: ModeId) -> Result<(u8, u32, u64)> {
    let cfg = mode_config(resolved)?;
    if d.mode != ModeId::Auto || resolved == ModeId::M6 {
        return Ok((d.sign, d.exponent_field, d.mantissa_field));
    }
    let double = mode_config(ModeId::M6)?;
    let exponent = match d.exponent_field {
        0 => 0,
        e if e == double.exp_all_ones => cfg.exp_all_ones,
        e => {
            let rebiased = e as i32 - double.bias + cfg.bias;
            if rebiased < 1 || rebiased >= cfg.exp_all_ones as i32 {
                return Err(Error::ExponentOutOfRange {
                    mode: resolved,
                    exponent: e,
                });
            }
            rebiased as u32
        }
    };
    Ok((d.sign, exponent, d.mantissa_field))
}

/// Decodes both words and resolves their common mode.
pub fn decode_pair(a: Word67, b: Word67) -> Result<(ModeResolution, DecodedWord, DecodedWord)> {
    let resolution = resolve_mode(a, b)?;
    Ok((resolution, decode_word(a)?, decode_word(b)?))
}
