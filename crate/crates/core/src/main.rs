use std::fs::File;
use std::io::{self, BufReader};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use fpmul::cli::{self, BatchOptions, StatsTarget, EXIT_OK, EXIT_USAGE};
use fpmul::selftest::SelfTestConfig;
use fpmul::{ModeId, RoundingPolicy, Word67};

#[derive(Parser)]
#[command(name = "fpmul", version, about = "Multi-precision floating-point multiplier model")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Pack fields into a 17-digit hex word
    Encode {
        #[arg(long)]
        mode: ModeId,
        #[arg(long, default_value_t = 0)]
        sign: u8,
        #[arg(long)]
        exponent: u32,
        /// 52-bit mantissa field, decimal or 0x-prefixed hex
        #[arg(long, value_parser = parse_u64, default_value = "0")]
        mantissa: u64,
    },
    /// Split a hex word into its fields
    Decode { word: Word67 },
    /// Multiply two hex words
    Mul {
        a: Word67,
        b: Word67,
        #[arg(long, default_value = "truncate")]
        rounding: RoundingPolicy,
        #[arg(long)]
        compare_oracle: bool,
    },
    /// Multiply every `<a> <b> [expected]` line of a file
    Batch {
        path: String,
        #[arg(long, default_value = "truncate")]
        rounding: RoundingPolicy,
        #[arg(long)]
        strict: bool,
    },
    /// Structural cost of the Karatsuba-Urdhva multiplier
    #[command(group(ArgGroup::new("target").required(true).args(["mode", "width", "all"])))]
    Stats {
        #[arg(long)]
        mode: Option<ModeId>,
        #[arg(long)]
        width: Option<u32>,
        #[arg(long)]
        all: bool,
    },
    /// Run the exhaustive and randomized self-test suites
    Selftest {
        #[arg(long)]
        quick: bool,
    },
}

fn parse_u64(s: &str) -> Result<u64, String> {
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    }
    .map_err(|e| e.to_string())
}

fn run(command: Command) -> io::Result<i32> {
    let mut out = io::stdout().lock();
    match command {
        Command::Encode {
            mode,
            sign,
            exponent,
            mantissa,
        } => cli::cmd_encode(&mut out, mode, sign, exponent, mantissa),
        Command::Decode { word } => cli::cmd_decode(&mut out, word),
        Command::Mul {
            a,
            b,
            rounding,
            compare_oracle,
        } => cli::cmd_mul(&mut out, a, b, rounding, compare_oracle),
        Command::Batch { path, rounding, strict } => {
            let file = match File::open(&path) {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("error: {path}: {e}");
                    return Ok(EXIT_USAGE);
                }
            };
            let opts = BatchOptions { rounding, strict };
            cli::cmd_batch(BufReader::new(file), &mut out, &mut io::stderr(), opts)
        }
        Command::Stats { mode, width, all } => {
            let target = match (mode, width) {
                (Some(m), _) => StatsTarget::Mode(m),
                (None, Some(n)) => StatsTarget::Width(n),
                _ if all => StatsTarget::All,
                _ => unreachable!("clap enforces one target"),
            };
            cli::cmd_stats(&mut out, target)
        }
        Command::Selftest { quick } => cli::cmd_selftest(
            &mut out,
            &SelfTestConfig {
                quick,
                ..Default::default()
            },
        ),
    }
}

fn main() -> ExitCode {
    let parsed = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(parsed.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
