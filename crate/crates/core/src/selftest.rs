//! Self-test suites: exhaustive Urdhva checks, randomized Karatsuba checks
//! and the mode-6 round-toward-zero check against the wide-integer oracle.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::ExactValue;
use crate::karatsuba::{karatsuba, karatsuba_instrumented, karatsuba_stats};
use crate::mode::RoundingPolicy;
use crate::multiplier::{multiply, Flag};
use crate::urdhva::{urdhva_columns, urdhva_reduce, ColumnSet};
use crate::word::{mode_config, ModeId, Word67};

/// Operand widths exercised by the randomized Karatsuba suite.
pub const KARATSUBA_WIDTHS: [u32; 9] = [8, 9, 16, 17, 24, 32, 37, 53, 64];

/// Widths whose instrumented recursion is checked against the closed form.
pub const STRUCTURE_WIDTHS: [u32; 5] = [8, 16, 32, 53, 64];

#[derive(Clone, Copy)]
pub struct SelfTestConfig {
    pub quick: bool,
    pub seed: u64,
    /// Column reduction used by the Urdhva suites; swapped out to check that
    /// a faulty reduction is caught.
    pub reduce: fn(&ColumnSet) -> u128,
}

impl Default for SelfTestConfig {
    fn default() -> Self {
        SelfTestConfig {
            quick: false,
            seed: 0x5eed_f00d,
            reduce: urdhva_reduce,
        }
    }
}

impl SelfTestConfig {
    fn karatsuba_cases(&self) -> usize {
        if self.quick {
            1_000
        } else {
            100_000
        }
    }

    fn rtz_cases(&self) -> usize {
        if self.quick {
            10_000
        } else {
            1_000_000
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    fn new(name: impl Into<String>) -> Self {
        SuiteReport {
            name: name.into(),
            cases: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{}: pass ({} cases)", self.name, self.cases)
        } else {
            write!(
                f,
                "{}: FAIL ({} of {} cases; first: {})",
                self.name,
                self.failures,
                self.cases,
                self.first_failure.as_deref().unwrap_or("?")
            )
        }
    }
}

pub fn urdhva_exhaustive(n: u32, reduce: fn(&ColumnSet) -> u128) -> SuiteReport {
    let mut report = SuiteReport::new(format!("urdhva-{n}x{n}"));
    for a in 0..1u64 << n {
        for b in 0..1u64 << n {
            let got = reduce(&urdhva_columns(a, b, n));
            let want = (a * b) as u128;
            report.check(got == want, || format!("{a}*{b}: got {got}, want {want}"));
        }
    }
    report
}

pub fn karatsuba_random(n: u32, cases: usize, rng: &mut impl Rng) -> SuiteReport {
    let mut report = SuiteReport::new(format!("karatsuba-{n}"));
    let mask = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    for _ in 0..cases {
        let (x, y) = (rng.gen::<u64>() & mask, rng.gen::<u64>() & mask);
        let got = karatsuba(x, y, n);
        let want = x as u128 * y as u128;
        report.check(got == want, || format!("{x:#x}*{y:#x}: got {got:#x}, want {want:#x}"));
    }
    report
}

pub fn karatsuba_structure() -> SuiteReport {
    let mut report = SuiteReport::new("karatsuba-structure");
    for n in STRUCTURE_WIDTHS {
        let x = if n == 64 { u64::MAX } else { (1 << n) - 1 };
        let (_, seen) = karatsuba_instrumented(x, x, n);
        let want = karatsuba_stats(n);
        report.check(seen == want && seen.base_multiplies == 3u64.pow(seen.depth), || {
            format!("width {n}: ran {seen:?}, expected {want:?}")
        });
    }
    report
}

/// A random finite normal double with unbiased exponent in `-500..=500`.
pub fn random_normal_double(rng: &mut impl Rng) -> f64 {
    let sign = rng.gen::<u64>() & (1 << 63);
    let exponent = rng.gen_range(1023 - 500..=1023 + 500u64);
    let mantissa = rng.gen::<u64>() & ((1 << 52) - 1);
    f64::from_bits(sign | exponent << 52 | mantissa)
}

pub fn mode6_rtz(cases: usize, rng: &mut impl Rng) -> SuiteReport {
    let mut report = SuiteReport::new("mode6-rtz");
    let cfg = mode_config(ModeId::M6).expect("concrete mode");
    for _ in 0..cases {
        let (x, y) = (random_normal_double(rng), random_normal_double(rng));
        let (a, b) = (
            Word67::from_f64_bits(ModeId::M6, x.to_bits()),
            Word67::from_f64_bits(ModeId::M6, y.to_bits()),
        );
        let want = ExactValue::from_word(a, &cfg)
            .mul(&ExactValue::from_word(b, &cfg))
            .truncate_to(53);
        let outcome = multiply(a, b, RoundingPolicy::Truncate);
        let ok = matches!(&outcome, Ok(r) if r.flag == Flag::Normal && ExactValue::from_word(r.word, &cfg) == want);
        report.check(ok, || format!("{x:e}*{y:e}: got {outcome:?}, want {want}"));
    }
    report
}

/// Runs every suite in a fixed order.
pub fn run(config: &SelfTestConfig) -> Vec<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut reports = vec![urdhva_exhaustive(4, config.reduce), urdhva_exhaustive(8, config.reduce)];
    for n in KARATSUBA_WIDTHS {
        reports.push(karatsuba_random(n, config.karatsuba_cases(), &mut rng));
    }
    reports.push(karatsuba_structure());
    reports.push(mode6_rtz(config.rtz_cases(), &mut rng));
    reports
}
