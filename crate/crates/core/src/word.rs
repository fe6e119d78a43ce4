//! The 67-bit operand word and the per-mode number formats.
//!
//! Layout, MSB first:
//!
//! ```text
//!  66   64 63  62        52 51                      0
//! +-------+---+------------+-------------------------+
//! | mode  | s |  exponent  |        mantissa         |
//! +-------+---+------------+-------------------------+
//!     3     1       11                52
//! ```
//!
//! The low 64 bits are laid out exactly like an IEEE-754 double. Custom
//! precision modes (M2..M5) use only the low 8 bits of the exponent field
//! and keep their `m` significant mantissa bits in the high end of the
//! 52-bit mantissa field.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const WORD_BITS: u32 = 67;
pub const EXPONENT_FIELD_BITS: u32 = 11;
pub const MANTISSA_FIELD_BITS: u32 = 52;

const SIGN_SHIFT: u32 = 63;
const MODE_SHIFT: u32 = 64;
const EXPONENT_MASK: u128 = (1 << EXPONENT_FIELD_BITS) - 1;
const MANTISSA_MASK: u128 = (1 << MANTISSA_FIELD_BITS) - 1;

/// Number of hex digits in the textual form of a word.
pub const HEX_DIGITS: usize = 17;

/// A raw 67-bit word. Only the low 67 bits of the backing integer are ever set.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word67(u128);

impl Word67 {
    pub const MASK: u128 = (1 << WORD_BITS) - 1;

    pub fn new(raw: u128) -> Result<Self> {
        if raw & !Self::MASK != 0 {
            return Err(Error::FieldOverflow {
                field: "word",
                value: raw,
                width: WORD_BITS,
            });
        }
        Ok(Word67(raw))
    }

    /// Wraps a raw IEEE-754 double bit pattern with the given mode bits.
    pub fn from_f64_bits(mode: ModeId, bits: u64) -> Self {
        Word67(((mode.bits() as u128) << MODE_SHIFT) | bits as u128)
    }

    #[inline]
    pub fn raw(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn mode_bits(self) -> u8 {
        (self.0 >> MODE_SHIFT) as u8 & 0b111
    }

    #[inline]
    pub fn sign(self) -> u8 {
        (self.0 >> SIGN_SHIFT) as u8 & 1
    }

    #[inline]
    pub fn exponent_field(self) -> u32 {
        ((self.0 >> MANTISSA_FIELD_BITS) & EXPONENT_MASK) as u32
    }

    #[inline]
    pub fn mantissa_field(self) -> u64 {
        (self.0 & MANTISSA_MASK) as u64
    }

    /// The low 64 bits, i.e. the embedded double-precision pattern.
    #[inline]
    pub fn low64(self) -> u64 {
        self.0 as u64
    }
}

impl fmt::Debug for Word67 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word67({self})")
    }
}

impl fmt::Display for Word67 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:017x}", self.0)
    }
}

impl FromStr for Word67 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason| Error::ParseWord {
            text: s.to_string(),
            reason,
        };
        if s.len() != HEX_DIGITS {
            return Err(err("expected exactly 17 hex digits"));
        }
        if !s.bytes().all(|b| b.is_ascii_hexdigit()) {
            return Err(err("non-hex character"));
        }
        let raw = u128::from_str_radix(s, 16).map_err(|_| err("non-hex character"))?;
        Word67::new(raw).map_err(|_| err("leading digit must be at most 7"))
    }
}

/// Operating mode, selected by bits 66..64 of each operand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModeId {
    Auto,
    M2,
    M3,
    M4,
    M5,
    M6,
}

impl ModeId {
    /// The concrete modes, in order of increasing precision.
    pub const CONCRETE: [ModeId; 5] = [ModeId::M2, ModeId::M3, ModeId::M4, ModeId::M5, ModeId::M6];

    pub fn bits(self) -> u8 {
        match self {
            ModeId::Auto => 0b000,
            ModeId::M2 => 0b001,
            ModeId::M3 => 0b010,
            ModeId::M4 => 0b011,
            ModeId::M5 => 0b100,
            ModeId::M6 => 0b101,
        }
    }

    pub fn from_bits(bits: u8) -> Result<Self> {
        Ok(match bits {
            0b000 => ModeId::Auto,
            0b001 => ModeId::M2,
            0b010 => ModeId::M3,
            0b011 => ModeId::M4,
            0b100 => ModeId::M5,
            0b101 => ModeId::M6,
            other => return Err(Error::InvalidMode(other)),
        })
    }

    pub fn is_custom(self) -> bool {
        matches!(self, ModeId::M2 | ModeId::M3 | ModeId::M4 | ModeId::M5)
    }
}

impl fmt::Display for ModeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModeId::Auto => "Auto",
            ModeId::M2 => "M2",
            ModeId::M3 => "M3",
            ModeId::M4 => "M4",
            ModeId::M5 => "M5",
            ModeId::M6 => "M6",
        })
    }
}

impl FromStr for ModeId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "auto" | "m1" | "1" => Ok(ModeId::Auto),
            "m2" | "2" => Ok(ModeId::M2),
            "m3" | "3" => Ok(ModeId::M3),
            "m4" | "4" => Ok(ModeId::M4),
            "m5" | "5" => Ok(ModeId::M5),
            "m6" | "6" => Ok(ModeId::M6),
            _ => Err(format!("unknown mode {s:?} (expected auto or M2..M6)")),
        }
    }
}

/// Format parameters of a concrete mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModeConfig {
    pub mantissa_width: u32,
    pub exponent_width: u32,
    pub bias: i32,
    pub exp_all_ones: u32,
}

impl ModeConfig {
    const fn new(mantissa_width: u32, exponent_width: u32, bias: i32) -> Self {
        ModeConfig {
            mantissa_width,
            exponent_width,
            bias,
            exp_all_ones: (1 << exponent_width) - 1,
        }
    }

    /// Width of the significand including the hidden bit.
    pub fn significand_width(&self) -> u32 {
        self.mantissa_width + 1
    }

    /// Distance between the mode's mantissa LSB and bit 0 of the 52-bit field.
    pub fn mantissa_shift(&self) -> u32 {
        MANTISSA_FIELD_BITS - self.mantissa_width
    }
}

pub fn mode_config(mode: ModeId) -> Result<ModeConfig> {
    Ok(match mode {
        ModeId::Auto => return Err(Error::AutoUnresolved),
        ModeId::M2 => ModeConfig::new(8, 8, 127),
        ModeId::M3 => ModeConfig::new(16, 8, 127),
        ModeId::M4 => ModeConfig::new(23, 8, 127),
        ModeId::M5 => ModeConfig::new(36, 8, 127),
        ModeId::M6 => ModeConfig::new(52, 11, 1023),
    })
}

/// The four positional fields of a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecodedWord {
    pub mode: ModeId,
    pub sign: u8,
    pub exponent_field: u32,
    pub mantissa_field: u64,
}

fn check_custom_exponent(mode: ModeId, exponent_field: u32) -> Result<()> {
    if mode.is_custom() && exponent_field > 0xff {
        return Err(Error::ExponentOutOfRange {
            mode,
            exponent: exponent_field,
        });
    }
    Ok(())
}

pub fn decode_word(w: Word67) -> Result<DecodedWord> {
    let mode = ModeId::from_bits(w.mode_bits())?;
    let decoded = DecodedWord {
        mode,
        sign: w.sign(),
        exponent_field: w.exponent_field(),
        mantissa_field: w.mantissa_field(),
    };
    debug_assert!(decoded.sign <= 1);
    debug_assert!((decoded.exponent_field as u128) <= EXPONENT_MASK);
    debug_assert!((decoded.mantissa_field as u128) <= MANTISSA_MASK);
    check_custom_exponent(mode, decoded.exponent_field)?;
    Ok(decoded)
}

pub fn encode_word(mode: ModeId, sign: u8, exponent_field: u32, mantissa_field: u64) -> Result<Word67> {
    if sign > 1 {
        return Err(Error::FieldOverflow {
            field: "sign",
            value: sign as u128,
            width: 1,
        });
    }
    if exponent_field as u128 > EXPONENT_MASK {
        return Err(Error::FieldOverflow {
            field: "exponent",
            value: exponent_field as u128,
            width: EXPONENT_FIELD_BITS,
        });
    }
    if mantissa_field as u128 > MANTISSA_MASK {
        return Err(Error::FieldOverflow {
            field: "mantissa",
            value: mantissa_field as u128,
            width: MANTISSA_FIELD_BITS,
        });
    }
    check_custom_exponent(mode, exponent_field)?;
    Ok(Word67(
        ((mode.bits() as u128) << MODE_SHIFT)
            | ((sign as u128) << SIGN_SHIFT)
            | ((exponent_field as u128) << MANTISSA_FIELD_BITS)
            | mantissa_field as u128,
    ))
}

/// A decoded operand in a concrete mode. `mantissa_field` holds the `m`
/// fraction bits right-aligned, i.e. already truncated to the mode width.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FpOperand {
    pub sign: u8,
    pub exponent_field: u32,
    pub mantissa_field: u64,
    pub mode: ModeId,
}

/// Integer significand: hidden one plus fraction, or the bare fraction when
/// the exponent field is zero (zero and denormal operands).
pub fn significand_of(op: &FpOperand, cfg: &ModeConfig) -> u64 {
    debug_assert!(op.mantissa_field < 1 << cfg.mantissa_width);
    if op.exponent_field == 0 {
        op.mantissa_field
    } else {
        (1 << cfg.mantissa_width) | op.mantissa_field
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_word_decodes_to_auto() {
        let d = decode_word(Word67::default()).unwrap();
        assert_eq!(
            d,
            DecodedWord {
                mode: ModeId::Auto,
                sign: 0,
                exponent_field: 0,
                mantissa_field: 0
            }
        );
    }

    #[test]
    fn m6_sign_only() {
        let w = Word67::new((0b101 << 64) | (1 << 63)).unwrap();
        let d = decode_word(w).unwrap();
        assert_eq!(
            (d.mode, d.sign, d.exponent_field, d.mantissa_field),
            (ModeId::M6, 1, 0, 0)
        );
    }

    #[test]
    fn invalid_mode_bits_rejected() {
        for bits in [0b110u128, 0b111] {
            let w = Word67::new(bits << 64).unwrap();
            assert_eq!(decode_word(w), Err(Error::InvalidMode(bits as u8)));
        }
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode_word(ModeId::Auto, 0, 0, 0).unwrap().raw(), 0);
        let w = encode_word(ModeId::M2, 0, 127, 0).unwrap();
        assert_eq!(w.mode_bits(), 0b001);
        assert_eq!(w.exponent_field(), 127);
        assert_eq!(w.to_string(), "107f0000000000000");
    }

    #[test]
    fn encode_overflow() {
        assert!(matches!(
            encode_word(ModeId::M6, 0, 4096, 0),
            Err(Error::FieldOverflow { field: "exponent", .. })
        ));
        assert!(matches!(
            encode_word(ModeId::M6, 2, 0, 0),
            Err(Error::FieldOverflow { field: "sign", .. })
        ));
        assert!(matches!(
            encode_word(ModeId::M6, 0, 0, 1 << 52),
            Err(Error::FieldOverflow { field: "mantissa", .. })
        ));
        assert!(Word67::new(1 << 67).is_err());
    }

    #[test]
    fn custom_mode_exponent_high_bits() {
        assert_eq!(
            encode_word(ModeId::M3, 0, 256, 0),
            Err(Error::ExponentOutOfRange {
                mode: ModeId::M3,
                exponent: 256
            })
        );
        let w = encode_word(ModeId::M6, 0, 1023, 0).unwrap();
        let forged = Word67::new((w.raw() & !(0b111 << 64)) | (0b010 << 64)).unwrap();
        assert!(matches!(decode_word(forged), Err(Error::ExponentOutOfRange { .. })));
    }

    #[test]
    fn mode_configs() {
        let c = |m| {
            let c = mode_config(m).unwrap();
            (c.mantissa_width, c.exponent_width, c.bias, c.exp_all_ones)
        };
        assert_eq!(c(ModeId::M2), (8, 8, 127, 255));
        assert_eq!(c(ModeId::M3), (16, 8, 127, 255));
        assert_eq!(c(ModeId::M4), (23, 8, 127, 255));
        assert_eq!(c(ModeId::M5), (36, 8, 127, 255));
        assert_eq!(c(ModeId::M6), (52, 11, 1023, 2047));
        assert_eq!(mode_config(ModeId::Auto), Err(Error::AutoUnresolved));
        for m in ModeId::CONCRETE {
            let cfg = mode_config(m).unwrap();
            assert_eq!(cfg.exp_all_ones, (1 << cfg.exponent_width) - 1);
        }
    }

    #[test]
    fn significand_examples() {
        let cfg = mode_config(ModeId::M2).unwrap();
        let op = |e, m| FpOperand {
            sign: 0,
            exponent_field: e,
            mantissa_field: m,
            mode: ModeId::M2,
        };
        assert_eq!(significand_of(&op(127, 0), &cfg), 256);
        assert_eq!(significand_of(&op(0, 0), &cfg), 0);
        assert_eq!(significand_of(&op(0, 5), &cfg), 5);
    }

    #[test]
    fn hex_text_form() {
        let w: Word67 = "7ffffffffffffffff".parse().unwrap();
        assert_eq!(w.raw(), Word67::MASK);
        assert!("8ffffffffffffffff".parse::<Word67>().is_err());
        assert!("0".parse::<Word67>().is_err());
        assert!("0000000000000000g".parse::<Word67>().is_err());
        assert_eq!(
            "1ABCDEF0123456789".parse::<Word67>().unwrap().to_string(),
            "1abcdef0123456789"
        );
    }

    fn valid_fields() -> impl Strategy<Value = (ModeId, u8, u32, u64)> {
        (0u8..6, 0u8..2, 0u32..2048, 0u64..(1 << 52)).prop_map(|(m, s, e, f)| {
            let mode = ModeId::from_bits(m).unwrap();
            let e = if mode.is_custom() { e & 0xff } else { e };
            (mode, s, e, f)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100_000))]

        #[test]
        fn decode_encode_round_trip((mode, s, e, f) in valid_fields()) {
            let w = encode_word(mode, s, e, f).unwrap();
            let d = decode_word(w).unwrap();
            prop_assert_eq!((d.mode, d.sign, d.exponent_field, d.mantissa_field), (mode, s, e, f));
            prop_assert_eq!(encode_word(d.mode, d.sign, d.exponent_field, d.mantissa_field).unwrap(), w);
            prop_assert_eq!(w.to_string().parse::<Word67>().unwrap(), w);
        }
    }
}
