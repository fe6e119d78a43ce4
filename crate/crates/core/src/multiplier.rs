//! The floating-point multiply pipeline.
//!
//! resolve mode -> truncate inputs -> sign XOR -> exponent add ->
//! Karatsuba-Urdhva significand product -> normalize -> classify -> encode.

use std::fmt;

use crate::error::Result;
use crate::karatsuba::karatsuba;
use crate::mode::{decode_pair, operand_in_mode, truncate_operand, RoundingPolicy};
use crate::word::{encode_word, mode_config, significand_of, FpOperand, ModeConfig, ModeId, Word67};

/// Exception classification of a product. Exactly one applies to a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flag {
    Zero,
    Infinity,
    NaN,
    Denormal,
    Normal,
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flag::Zero => "Zero",
            Flag::Infinity => "Infinity",
            Flag::NaN => "NaN",
            Flag::Denormal => "Denormal",
            Flag::Normal => "Normal",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductResult {
    /// Result encoded in the resolved mode, with that mode in bits 66..64.
    pub word: Word67,
    pub flag: Flag,
    /// 1 when the significand product was in [2, 4) and shifted right.
    pub norm_shift: u32,
    pub resolved_mode: ModeId,
    pub auto_chosen: bool,
}

pub fn sign_mul(s1: u8, s2: u8) -> u8 {
    s1 ^ s2
}

/// Biased exponent of the product, before any range handling.
pub fn exponent_add(e1: u32, e2: u32, cfg: &ModeConfig) -> i32 {
    e1 as i32 + e2 as i32 - cfg.bias
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub mantissa: u64,
    pub exponent: i32,
    pub norm_shift: u32,
}

/// Normalizes the product of two `(m+1)`-bit significands in [1, 4).
///
/// Bits below the kept fraction are dropped (round toward zero).
pub fn normalize(p: u128, e: i32, m: u32) -> Normalized {
    debug_assert!(p >> (2 * m + 2) == 0);
    let frac_mask = (1u128 << m) - 1;
    if (p >> (2 * m + 1)) & 1 == 1 {
        Normalized {
            mantissa: ((p >> (m + 1)) & frac_mask) as u64,
            exponent: e + 1,
            norm_shift: 1,
        }
    } else {
        Normalized {
            mantissa: ((p >> m) & frac_mask) as u64,
            exponent: e,
            norm_shift: 0,
        }
    }
}

pub fn classify(e: i32, mantissa: u64, cfg: &ModeConfig) -> Flag {
    match (e, mantissa) {
        (e, 0) if e <= 0 => Flag::Zero,
        (e, _) if e <= 0 => Flag::Denormal,
        (e, 0) if e >= cfg.exp_all_ones as i32 => Flag::Infinity,
        (e, _) if e >= cfg.exp_all_ones as i32 => Flag::NaN,
        _ => Flag::Normal,
    }
}

/// Operand kinds that bypass the arithmetic path.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Zero,
    Finite,
    Infinity,
    NaN,
}

fn kind_of(exponent: u32, mantissa52: u64, cfg: &ModeConfig) -> Kind {
    match (exponent, mantissa52) {
        (0, 0) => Kind::Zero,
        (e, 0) if e == cfg.exp_all_ones => Kind::Infinity,
        (e, _) if e == cfg.exp_all_ones => Kind::NaN,
        _ => Kind::Finite,
    }
}

struct Encoder {
    mode: ModeId,
    cfg: ModeConfig,
    sign: u8,
    auto_chosen: bool,
}

impl Encoder {
    fn finish(&self, flag: Flag, exponent: u32, mantissa: u64, norm_shift: u32) -> ProductResult {
        let word = encode_word(self.mode, self.sign, exponent, mantissa << self.cfg.mantissa_shift())
            .expect("result fields fit the resolved mode");
        ProductResult {
            word,
            flag,
            norm_shift,
            resolved_mode: self.mode,
            auto_chosen: self.auto_chosen,
        }
    }

    fn special(&self, flag: Flag) -> ProductResult {
        match flag {
            Flag::Zero => self.finish(flag, 0, 0, 0),
            Flag::Infinity => self.finish(flag, self.cfg.exp_all_ones, 0, 0),
            // quiet NaN: top fraction bit set
            Flag::NaN => self.finish(flag, self.cfg.exp_all_ones, 1 << (self.cfg.mantissa_width - 1), 0),
            _ => unreachable!("not a special result"),
        }
    }
}

/// Multiplies two words.
///
/// Fails with `ModeMismatch` when the mode bits differ, and with the decode
/// errors of either word.
pub fn multiply(a: Word67, b: Word67, rounding: RoundingPolicy) -> Result<ProductResult> {
    let (resolution, da, db) = decode_pair(a, b)?;
    let mode = resolution.mode;
    let cfg = mode_config(mode)?;
    let (sa, ea, ma) = operand_in_mode(&da, mode)?;
    let (sb, eb, mb) = operand_in_mode(&db, mode)?;

    let enc = Encoder {
        mode,
        cfg,
        sign: sign_mul(sa, sb),
        auto_chosen: resolution.auto_chosen,
    };

    let (ka, kb) = (kind_of(ea, ma, &cfg), kind_of(eb, mb, &cfg));
    match (ka, kb) {
        (Kind::NaN, _) | (_, Kind::NaN) => return Ok(enc.special(Flag::NaN)),
        (Kind::Infinity, Kind::Zero) | (Kind::Zero, Kind::Infinity) => return Ok(enc.special(Flag::NaN)),
        (Kind::Infinity, _) | (_, Kind::Infinity) => return Ok(enc.special(Flag::Infinity)),
        (Kind::Zero, _) | (_, Kind::Zero) => return Ok(enc.special(Flag::Zero)),
        (Kind::Finite, Kind::Finite) => {}
    }

    let operand = |sign, exponent, mantissa52| {
        let t = truncate_operand(mantissa52, &cfg, rounding);
        FpOperand {
            sign,
            exponent_field: exponent + t.exponent_increment,
            mantissa_field: t.mantissa,
            mode,
        }
    };
    let (oa, ob) = (operand(sa, ea, ma), operand(sb, eb, mb));
    let m = cfg.mantissa_width;
    let product = karatsuba(significand_of(&oa, &cfg), significand_of(&ob, &cfg), m + 1);
    if product == 0 {
        // a denormal whose surviving fraction bits were all truncated away
        return Ok(enc.special(Flag::Zero));
    }

    // a zero exponent field scales like the smallest normal exponent
    let effective = |op: &FpOperand| op.exponent_field.max(1);
    let mut exponent = exponent_add(effective(&oa), effective(&ob), &cfg);

    // Only denormal operands give a product below 2^(2m); shift those left
    // until the leading one sits at the binary point.
    let mut product = product;
    let leading = 127 - product.leading_zeros();
    if leading < 2 * m {
        let shift = 2 * m - leading;
        product <<= shift;
        exponent -= shift as i32;
    }

    let n = normalize(product, exponent, m);
    let flag = classify(n.exponent, n.mantissa, &cfg);
    Ok(match flag {
        Flag::Zero | Flag::Infinity => enc.finish(
            flag,
            if flag == Flag::Zero { 0 } else { cfg.exp_all_ones },
            0,
            n.norm_shift,
        ),
        Flag::Denormal => enc.finish(flag, 0, n.mantissa, n.norm_shift),
        Flag::NaN => enc.finish(flag, cfg.exp_all_ones, n.mantissa, n.norm_shift),
        Flag::Normal => enc.finish(flag, n.exponent as u32, n.mantissa, n.norm_shift),
    })
}
