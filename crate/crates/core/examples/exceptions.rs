// Zero, Infinity, NaN and Denormal results.
//
// cargo run --example exceptions

use fpmul::{encode_word, multiply, ModeId, RoundingPolicy, Word67};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let m2 = |e, f| encode_word(ModeId::M2, 0, e, f);
    let m6 = |x: f64| Word67::from_f64_bits(ModeId::M6, x.to_bits());
    let cases = [
        ("0 * 1", m2(0, 0)?, m2(127, 0)?),
        ("2^-63 * 2^-64", m2(64, 0)?, m2(63, 0)?),
        ("1.5*2^-63 * 2^-64", m2(64, 1 << 51)?, m2(63, 0)?),
        ("2^64 * 2^64", m2(191, 0)?, m2(191, 0)?),
        ("1.5*2^64 * 2^64", m2(191, 1 << 51)?, m2(191, 0)?),
        ("inf * 0", m6(f64::INFINITY), m6(0.0)),
        ("inf * -2", m6(f64::INFINITY), m6(-2.0)),
        ("nan * 1", m6(f64::NAN), m6(1.0)),
    ];
    for (label, a, b) in cases {
        let r = multiply(a, b, RoundingPolicy::Truncate)?;
        println!("{label:<20} -> {:<9} {}", r.flag.to_string(), r.word);
    }

    let mismatch = multiply(m2(127, 0)?, m6(1.0), RoundingPolicy::Truncate);
    println!("M2 * M6              -> {}", mismatch.unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("exceptions example");
}
