//! Command implementations behind the `fpmul` binary.
//!
//! Everything here writes to caller-supplied sinks and returns an exit code,
//! so the commands are testable without spawning a process.

use std::io::{self, BufRead, Write};

use crate::error::Error;
use crate::exact::{absolute_error, relative_error, ExactValue};
use crate::karatsuba::{karatsuba_stats, BASE_WIDTH};
use crate::mode::{decode_pair, operand_in_mode, RoundingPolicy};
use crate::multiplier::{multiply, Flag, ProductResult};
use crate::selftest::{self, SelfTestConfig};
use crate::urdhva::urdhva_stats;
use crate::word::{decode_word, encode_word, mode_config, ModeId, Word67};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MODE_MISMATCH: i32 = 2;
pub const EXIT_SELFTEST_FAILED: i32 = 3;

pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::ModeMismatch { .. } => EXIT_MODE_MISMATCH,
        _ => EXIT_USAGE,
    }
}

pub fn cmd_encode(out: &mut impl Write, mode: ModeId, sign: u8, exponent: u32, mantissa: u64) -> io::Result<i32> {
    match encode_word(mode, sign, exponent, mantissa) {
        Ok(w) => {
            writeln!(out, "{w}")?;
            Ok(EXIT_OK)
        }
        Err(e) => {
            writeln!(out, "error: {e}")?;
            Ok(exit_code_for(&e))
        }
    }
}

pub fn cmd_decode(out: &mut impl Write, word: Word67) -> io::Result<i32> {
    match decode_word(word) {
        Ok(d) => {
            writeln!(
                out,
                "mode={} sign={} exponent={} mantissa={:013x}",
                d.mode, d.sign, d.exponent_field, d.mantissa_field
            )?;
            Ok(EXIT_OK)
        }
        Err(e) => {
            writeln!(out, "error: {e}")?;
            Ok(exit_code_for(&e))
        }
    }
}

/// `<hex67> flags=<flag> mode=<id> shift=<0|1>`
pub fn result_line(r: &ProductResult) -> String {
    format!(
        "{} flags={} mode={} shift={}",
        r.word, r.flag, r.resolved_mode, r.norm_shift
    )
}

/// Exact product of the operands as given (before input truncation), and
/// the error of the multiplier's result against it. `None` when either the
/// inputs or the result are not finite numbers.
pub fn oracle_line(a: Word67, b: Word67, r: &ProductResult) -> Result<Option<String>, Error> {
    let (_, da, db) = decode_pair(a, b)?;
    let cfg = mode_config(r.resolved_mode)?;
    let (sa, ea, ma) = operand_in_mode(&da, r.resolved_mode)?;
    let (sb, eb, mb) = operand_in_mode(&db, r.resolved_mode)?;
    if ea == cfg.exp_all_ones || eb == cfg.exp_all_ones || matches!(r.flag, Flag::Infinity | Flag::NaN) {
        return Ok(None);
    }
    let exact = ExactValue::from_fields(sa, ea, ma, &cfg).mul(&ExactValue::from_fields(sb, eb, mb, &cfg));
    let got = ExactValue::from_word(r.word, &cfg);
    Ok(Some(format!(
        "oracle={} value={:e} abs_err={:e} rel_err={:e}",
        exact,
        exact.to_f64(),
        absolute_error(&got, &exact),
        relative_error(&got, &exact)
    )))
}

pub fn cmd_mul(
    out: &mut impl Write,
    a: Word67,
    b: Word67,
    rounding: RoundingPolicy,
    compare_oracle: bool,
) -> io::Result<i32> {
    let r = match multiply(a, b, rounding) {
        Ok(r) => r,
        Err(e) => {
            writeln!(out, "error: {e}")?;
            return Ok(exit_code_for(&e));
        }
    };
    writeln!(out, "{}", result_line(&r))?;
    if compare_oracle {
        match oracle_line(a, b, &r) {
            Ok(Some(line)) => writeln!(out, "{line}")?,
            Ok(None) => writeln!(out, "oracle=n/a")?,
            Err(e) => {
                writeln!(out, "error: {e}")?;
                return Ok(exit_code_for(&e));
            }
        }
    }
    Ok(EXIT_OK)
}

/// One line of a batch file: `<a_hex> <b_hex> [expected_hex]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BatchRecord {
    pub line_no: usize,
    pub a: Word67,
    pub b: Word67,
    pub expected: Option<Word67>,
}

/// Parses a batch line. Blank lines and `#` comments yield `None`.
pub fn parse_record(line_no: usize, line: &str) -> Result<Option<BatchRecord>, String> {
    let content = line.split('#').next().unwrap_or("");
    let fields: Vec<&str> = content.split_whitespace().collect();
    let word = |s: &str| s.parse::<Word67>().map_err(|e| e.to_string());
    match fields.as_slice() {
        [] => Ok(None),
        [a, b] => Ok(Some(BatchRecord {
            line_no,
            a: word(a)?,
            b: word(b)?,
            expected: None,
        })),
        [a, b, expected] => Ok(Some(BatchRecord {
            line_no,
            a: word(a)?,
            b: word(b)?,
            expected: Some(word(expected)?),
        })),
        _ => Err(format!("expected 2 or 3 fields, found {}", fields.len())),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BatchSummary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BatchOptions {
    pub rounding: RoundingPolicy,
    pub strict: bool,
}

/// Runs every record and prints one result line each, then the summary.
///
/// Records with an expected word count as pass or fail. Malformed lines and
/// records that fail to multiply are reported on `err` and count as failures;
/// with `strict` the first malformed line aborts the run.
pub fn run_batch(
    input: impl BufRead,
    out: &mut impl Write,
    err: &mut impl Write,
    opts: BatchOptions,
) -> io::Result<(BatchSummary, bool)> {
    let mut summary = BatchSummary::default();
    for (ix, line) in input.lines().enumerate() {
        let line_no = ix + 1;
        let line = line?;
        let record = match parse_record(line_no, &line) {
            Ok(Some(r)) => r,
            Ok(None) => continue,
            Err(msg) => {
                writeln!(err, "line {line_no}: {msg}")?;
                summary.total += 1;
                summary.fail += 1;
                if opts.strict {
                    return Ok((summary, true));
                }
                continue;
            }
        };
        summary.total += 1;
        match multiply(record.a, record.b, opts.rounding) {
            Ok(r) => {
                writeln!(out, "{}", result_line(&r))?;
                match record.expected {
                    Some(want) if want == r.word => summary.pass += 1,
                    Some(want) => {
                        writeln!(err, "line {line_no}: expected {want}, got {}", r.word)?;
                        summary.fail += 1;
                    }
                    None => {}
                }
            }
            Err(e) => {
                writeln!(err, "line {line_no}: {e}")?;
                summary.fail += 1;
            }
        }
    }
    Ok((summary, false))
}

pub fn summary_line(s: &BatchSummary) -> String {
    format!("total={} pass={} fail={}", s.total, s.pass, s.fail)
}

pub fn cmd_batch(
    input: impl BufRead,
    out: &mut impl Write,
    err: &mut impl Write,
    opts: BatchOptions,
) -> io::Result<i32> {
    let (summary, aborted) = run_batch(input, out, err, opts)?;
    writeln!(out, "{}", summary_line(&summary))?;
    Ok(if aborted || summary.fail > 0 {
        EXIT_USAGE
    } else {
        EXIT_OK
    })
}

/// `width depth base_muls add_ops`
pub fn stats_line(width: u32) -> String {
    let s = karatsuba_stats(width);
    format!("{} {} {} {}", s.operand_width, s.depth, s.base_multiplies, s.add_ops)
}

/// Significand width (hidden bit included) multiplied in a mode.
pub fn mode_width(mode: ModeId) -> Result<u32, Error> {
    Ok(mode_config(mode)?.significand_width())
}

pub fn stats_table() -> String {
    let base = urdhva_stats(BASE_WIDTH);
    let mut table = String::from("mode width depth base_muls add_ops urdhva_adders\n");
    for mode in ModeId::CONCRETE {
        let s = karatsuba_stats(mode_width(mode).expect("concrete mode"));
        table.push_str(&format!(
            "{} {} {} {} {} {}\n",
            mode,
            s.operand_width,
            s.depth,
            s.base_multiplies,
            s.add_ops,
            s.base_multiplies * base.adders as u64
        ));
    }
    table
}

pub enum StatsTarget {
    Width(u32),
    Mode(ModeId),
    All,
}

pub fn cmd_stats(out: &mut impl Write, target: StatsTarget) -> io::Result<i32> {
    match target {
        StatsTarget::Width(0) => {
            writeln!(out, "error: width must be at least 1")?;
            return Ok(EXIT_USAGE);
        }
        StatsTarget::Width(n) if n > crate::MAX_OPERAND_BITS => {
            writeln!(out, "error: width must be at most {}", crate::MAX_OPERAND_BITS)?;
            return Ok(EXIT_USAGE);
        }
        StatsTarget::Width(n) => writeln!(out, "{}", stats_line(n))?,
        StatsTarget::Mode(mode) => match mode_width(mode) {
            Ok(n) => writeln!(out, "{}", stats_line(n))?,
            Err(e) => {
                writeln!(out, "error: {e}")?;
                return Ok(EXIT_USAGE);
            }
        },
        StatsTarget::All => write!(out, "{}", stats_table())?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_selftest(out: &mut impl Write, config: &SelfTestConfig) -> io::Result<i32> {
    let reports = selftest::run(config);
    for r in &reports {
        writeln!(out, "{r}")?;
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        writeln!(out, "selftest: all {} suites passed", reports.len())?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "selftest: {failed} of {} suites failed", reports.len())?;
        Ok(EXIT_SELFTEST_FAILED)
    }
}
