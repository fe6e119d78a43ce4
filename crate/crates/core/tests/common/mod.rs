//! Reference models for the integration tests. Nothing here calls into the
//! multiplier's arithmetic; the oracles use native integer multiplies and the
//! host FPU.

#![allow(dead_code)]

use fpmul::{ModeId, Word67};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Exact `x * y` rounded toward zero, from the host's correctly rounded
/// product and the exact residual given by a fused multiply-add.
pub fn rtz_mul(x: f64, y: f64) -> f64 {
    let p = x * y;
    let residual = x.mul_add(y, -p);
    if residual != 0.0 && (residual > 0.0) != (p > 0.0) {
        // rounding went away from zero; step back one ulp toward zero
        f64::from_bits(p.to_bits() - 1)
    } else {
        p
    }
}

/// Random normal double with unbiased exponent in `-lim..=lim`.
pub fn normal_double(rng: &mut impl Rng, lim: i64) -> f64 {
    let sign = if rng.gen() { -1.0 } else { 1.0 };
    let mantissa: f64 = rng.gen_range(1.0..2.0);
    sign * mantissa * 2f64.powi(rng.gen_range(-lim..=lim) as i32)
}

pub fn m6(x: f64) -> Word67 {
    Word67::from_f64_bits(ModeId::M6, x.to_bits())
}

pub fn custom_word(mode: ModeId, sign: u8, exponent: u32, mantissa52: u64) -> Word67 {
    let raw = ((mode.bits() as u128) << 64) | ((sign as u128) << 63) | ((exponent as u128) << 52) | mantissa52 as u128;
    Word67::new(raw).unwrap()
}

/// Exact relative error of a normal result word against the exact product
/// of two normal operands with 52-bit stored mantissas.
///
/// `m` is the result's mantissa width and `bias` the exponent bias.
pub fn relative_error(a: Word67, b: Word67, result: Word67, m: u32, bias: i64) -> f64 {
    let sig = |w: Word67| (1u128 << 52) | w.mantissa_field() as u128;
    let exact = sig(a) * sig(b);
    let exact_exp = a.exponent_field() as i64 + b.exponent_field() as i64 - 2 * bias - 104;
    let r_sig = (1u128 << m) | (result.mantissa_field() >> (52 - m)) as u128;
    let r_exp = result.exponent_field() as i64 - bias - m as i64;
    let shift = r_exp - exact_exp;
    assert!(
        (0..20 + 106 - m as i64).contains(&shift),
        "unexpected alignment {shift}"
    );
    let r_aligned = r_sig << shift;
    r_aligned.abs_diff(exact) as f64 / exact as f64
}
