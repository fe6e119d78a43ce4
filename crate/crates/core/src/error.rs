use thiserror::Error;

use crate::word::ModeId;

/// Errors raised while decoding words or running the multiplier pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid mode select bits {0:#05b}")]
    InvalidMode(u8),

    #[error("field `{field}` value {value} does not fit in {width} bits")]
    FieldOverflow {
        field: &'static str,
        value: u128,
        width: u32,
    },

    #[error("exponent field {exponent} out of range for mode {mode}")]
    ExponentOutOfRange { mode: ModeId, exponent: u32 },

    #[error("auto mode must be resolved before its format is known")]
    AutoUnresolved,

    #[error("mode select error: operand modes differ ({a} vs {b})")]
    ModeMismatch { a: ModeId, b: ModeId },

    #[error("cannot split an operand of odd width {0}")]
    OddWidth(u32),

    #[error("invalid word text {text:?}: {reason}")]
    ParseWord { text: String, reason: &'static str },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
