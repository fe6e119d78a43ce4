//! Urdhva-Tiryagbhyam ("vertically and crosswise") column multiplier.
//!
//! Column `k` of an `n x n` product collects every bit product `a_i * b_j`
//! with `i + j = k`. For `n = 4` the seven columns are the familiar
//!
//! ```text
//! t0 = a0b0
//! t1 = a1b0 + a0b1
//! t2 = a2b0 + a1b1 + a0b2
//! t3 = a3b0 + a2b1 + a1b2 + a0b3
//! t4 = a3b1 + a2b2 + a1b3
//! t5 = a3b2 + a2b3
//! t6 = a3b3
//! ```
//!
//! The columns are then resolved by a ripple of adders, one per column from
//! `t1` upward, each adding the carry of its predecessor. Product bit `k` is
//! the LSB of adder `k`, and the final carry supplies the top bits.

use crate::MAX_OPERAND_BITS;

const MAX_COLUMNS: usize = 2 * MAX_OPERAND_BITS as usize - 1;

/// Column sums `t_0 .. t_{2n-2}` of the bit products, before carries.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct ColumnSet {
    width: u32,
    sums: [u32; MAX_COLUMNS],
}

impl ColumnSet {
    /// Operand width `n`.
    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn columns(&self) -> &[u32] {
        &self.sums[..(2 * self.width - 1) as usize]
    }

    /// Builds a column set from explicit sums. Used by tests that inject
    /// faults into the reduction.
    pub fn from_columns(columns: &[u32]) -> Self {
        assert!(!columns.is_empty() && columns.len() % 2 == 1 && columns.len() <= MAX_COLUMNS);
        let mut sums = [0; MAX_COLUMNS];
        sums[..columns.len()].copy_from_slice(columns);
        ColumnSet {
            width: (columns.len() as u32).div_ceil(2),
            sums,
        }
    }
}

impl std::fmt::Debug for ColumnSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ColumnSet")
            .field("width", &self.width)
            .field("columns", &self.columns())
            .finish()
    }
}

pub fn urdhva_columns(a: u64, b: u64, n: u32) -> ColumnSet {
    assert!((1..=MAX_OPERAND_BITS).contains(&n), "operand width {n} out of range");
    assert!(n == 64 || (a >> n == 0 && b >> n == 0), "operand wider than {n} bits");
    let mut sums = [0; MAX_COLUMNS];
    let n = n as usize;
    for (k, sum) in sums.iter_mut().enumerate().take(2 * n - 1) {
        let lo = k.saturating_sub(n - 1);
        let hi = k.min(n - 1);
        // vertical and crosswise: a_i pairs with b_{k-i}
        *sum = (lo..=hi).map(|i| ((a >> i) & (b >> (k - i)) & 1) as u32).sum();
    }
    ColumnSet { width: n as u32, sums }
}

/// Ripple-carry resolution of the column sums into the product.
pub fn urdhva_reduce(cols: &ColumnSet) -> u128 {
    let columns = cols.columns();
    // p0 = a0b0 needs no adder
    let mut product = (columns[0] & 1) as u128;
    let mut carry = (columns[0] >> 1) as u128;
    for (k, &t) in columns.iter().enumerate().skip(1) {
        let sum = t as u128 + carry;
        product |= (sum & 1) << k;
        carry = sum >> 1;
    }
    product | carry.checked_shl(columns.len() as u32).unwrap_or(0)
}

pub fn urdhva_mul(a: u64, b: u64, n: u32) -> u128 {
    urdhva_reduce(&urdhva_columns(a, b, n))
}

/// Structural size of an `n x n` Urdhva multiplier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UrdhvaStats {
    /// One adder per column above `t0`.
    pub adders: u32,
    /// Tallest column, i.e. the number of bit products in `t_{n-1}`.
    pub max_column_height: u32,
}

pub fn urdhva_stats(n: u32) -> UrdhvaStats {
    assert!(n >= 2, "urdhva_stats needs n >= 2, got {n}");
    UrdhvaStats {
        adders: 2 * n - 2,
        max_column_height: n,
    }
}
