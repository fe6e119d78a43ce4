//! Bit-exact model of a run-time reconfigurable multi-precision
//! floating-point multiplier.
//!
//! Operands are 67-bit words: three mode-select bits in front of a
//! double-precision layout. Five concrete modes trade precision for cost by
//! keeping 8, 16, 23, 36 or all 52 mantissa bits; an auto mode picks the
//! smallest mode that holds both inputs. Significands are multiplied by a
//! Karatsuba recursion that bottoms out in an 8x8 Urdhva-Tiryagbhyam column
//! multiplier.
//!
//! ```
//! use fpmul::{multiply, ModeId, RoundingPolicy, Word67};
//!
//! let a = Word67::from_f64_bits(ModeId::M6, 1.25f64.to_bits());
//! let b = Word67::from_f64_bits(ModeId::M6, 3.0f64.to_bits());
//! let r = multiply(a, b, RoundingPolicy::Truncate).unwrap();
//! assert_eq!(f64::from_bits(r.word.low64()), 3.75);
//! ```

pub mod cli;
pub mod error;
pub mod exact;
pub mod karatsuba;
pub mod mode;
pub mod multiplier;
pub mod selftest;
pub mod urdhva;
pub mod word;

/// Widest operand the integer multipliers accept.
pub const MAX_OPERAND_BITS: u32 = 64;

pub use error::{Error, Result};
pub use karatsuba::{karatsuba, karatsuba_instrumented, karatsuba_stats, split, MulStats};
pub use mode::{
    auto_select, resolve_mode, significant_width, truncate_operand, ModeResolution, RoundingPolicy, Truncated,
};
pub use multiplier::{classify, exponent_add, multiply, normalize, sign_mul, Flag, ProductResult};
pub use urdhva::{urdhva_columns, urdhva_mul, urdhva_reduce, urdhva_stats, ColumnSet, UrdhvaStats};
pub use word::{
    decode_word, encode_word, mode_config, significand_of, DecodedWord, FpOperand, ModeConfig, ModeId, Word67,
};
