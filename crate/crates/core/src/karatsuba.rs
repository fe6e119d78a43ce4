//! Karatsuba recursion over the Urdhva base case.
//!
//! An `n`-bit operand is zero-padded to an even width, split into halves
//! `X = 2^(n/2) X_l + X_r`, and the product assembled from three half-width
//! products:
//!
//! ```text
//! X*Y = 2^n X_l Y_l + X_r Y_r
//!     + 2^(n/2) ((X_l + X_r)(Y_l + Y_r) - X_l Y_l - X_r Y_r)
//! ```
//!
//! Recursion stops once operands are at most 8 bits wide, where the 8x8
//! Urdhva multiplier takes over.
//!
//! The sums `X_l + X_r` may be one bit wider than a half. That carry bit is
//! peeled off and folded back in with shifted additions, so the middle product
//! recurses at the same half width as the other two and every level branches
//! exactly three ways.

use crate::error::{Error, Result};
use crate::urdhva::urdhva_mul;
use crate::MAX_OPERAND_BITS;

/// Widths at or below this go straight to the Urdhva multiplier.
pub const BASE_WIDTH: u32 = 8;

/// Combine-step word operations per internal node: two operand sums, two
/// subtractions and two aligned accumulations.
pub const ADDS_PER_COMBINE: u64 = 6;

/// Structural cost of a Karatsuba-Urdhva multiply.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MulStats {
    pub operand_width: u32,
    pub base_multiplies: u64,
    pub add_ops: u64,
    pub depth: u32,
}

#[inline]
fn low_mask(bits: u32) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1 << bits) - 1
    }
}

/// Splits an `n`-bit value into its high and low halves.
pub fn split(x: u64, n: u32) -> Result<(u64, u64)> {
    if n % 2 == 1 {
        return Err(Error::OddWidth(n));
    }
    let half = n / 2;
    Ok((x.checked_shr(half).unwrap_or(0), x & low_mask(half)))
}

trait Probe {
    fn base_case(&mut self, level: u32);
    fn combine(&mut self);
}

impl Probe for () {
    #[inline(always)]
    fn base_case(&mut self, _level: u32) {}
    #[inline(always)]
    fn combine(&mut self) {}
}

impl Probe for MulStats {
    fn base_case(&mut self, level: u32) {
        self.base_multiplies += 1;
        self.depth = self.depth.max(level);
    }

    fn combine(&mut self) {
        self.add_ops += ADDS_PER_COMBINE;
    }
}

fn mul_rec<P: Probe>(x: u64, y: u64, n: u32, level: u32, probe: &mut P) -> u128 {
    if n <= BASE_WIDTH {
        probe.base_case(level);
        return urdhva_mul(x, y, BASE_WIDTH);
    }
    let n = n + (n & 1);
    let half = n / 2;
    let (xl, xr) = split(x, n).expect("width padded to even");
    let (yl, yr) = split(y, n).expect("width padded to even");

    let high = mul_rec(xl, yl, half, level + 1, probe);
    let low = mul_rec(xr, yr, half, level + 1, probe);

    // (X_l + X_r)(Y_l + Y_r) with each sum written as 2^half * c + r
    let (sx, sy) = (xl + xr, yl + yr);
    let (cx, rx) = (sx >> half, sx & low_mask(half));
    let (cy, ry) = (sy >> half, sy & low_mask(half));
    let mut middle = mul_rec(rx, ry, half, level + 1, probe);
    if cx != 0 {
        middle += (ry as u128) << half;
    }
    if cy != 0 {
        middle += (rx as u128) << half;
    }
    if cx & cy != 0 {
        middle += 1 << (2 * half);
    }

    probe.combine();
    let cross = middle - high - low;
    (high << n) + (cross << half) + low
}

fn check_operands(x: u64, y: u64, n: u32) {
    assert!((1..=MAX_OPERAND_BITS).contains(&n), "operand width {n} out of range");
    assert!(
        x & !low_mask(n) == 0 && y & !low_mask(n) == 0,
        "operand wider than {n} bits"
    );
}

/// Exact `x * y` for `n`-bit operands, `1 <= n <= 64`.
pub fn karatsuba(x: u64, y: u64, n: u32) -> u128 {
    check_operands(x, y, n);
    mul_rec(x, y, n, 0, &mut ())
}

/// Like [`karatsuba`], but also counts what the recursion actually did.
pub fn karatsuba_instrumented(x: u64, y: u64, n: u32) -> (u128, MulStats) {
    check_operands(x, y, n);
    let mut stats = MulStats {
        operand_width: n,
        ..MulStats::default()
    };
    let product = mul_rec(x, y, n, 0, &mut stats);
    (product, stats)
}

/// Recursion depth for an `n`-bit operand: `ceil(log2(ceil(n / 8)))`.
pub fn recursion_depth(n: u32) -> u32 {
    let chunks = n.div_ceil(BASE_WIDTH).max(1);
    chunks.next_power_of_two().trailing_zeros()
}

/// Closed-form cost of an `n`-bit multiply.
pub fn karatsuba_stats(n: u32) -> MulStats {
    let depth = recursion_depth(n);
    let base_multiplies = 3u64.pow(depth);
    MulStats {
        operand_width: n,
        base_multiplies,
        // internal nodes of a full ternary tree: (3^d - 1) / 2
        add_ops: ADDS_PER_COMBINE * (base_multiplies - 1) / 2,
        depth,
    }
}
