// Writes a batch file of mode-6 vectors with expected results and runs it
// through the batch driver.
//
// cargo run --example golden_vectors

use std::fmt::Write as _;

use fpmul::cli::{cmd_batch, BatchOptions};
use fpmul::exact::ExactValue;
use fpmul::{mode_config, ModeId, Word67};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = mode_config(ModeId::M6)?;
    let mut file = String::from("# a b expected\n");
    let mut x = 1.0f64;
    for i in 1..=8 {
        x *= 1.37;
        let y = -(i as f64) / 3.0;
        let (a, b) = (
            Word67::from_f64_bits(ModeId::M6, x.to_bits()),
            Word67::from_f64_bits(ModeId::M6, y.to_bits()),
        );
        // expected: exact product truncated to 53 significant bits
        let want = ExactValue::from_word(a, &cfg)
            .mul(&ExactValue::from_word(b, &cfg))
            .truncate_to(53);
        let expected = Word67::from_f64_bits(ModeId::M6, want.to_f64().to_bits());
        writeln!(file, "{a} {b} {expected}")?;
    }
    print!("{file}");

    let mut out = Vec::new();
    let code = cmd_batch(
        file.as_bytes(),
        &mut out,
        &mut std::io::stderr(),
        BatchOptions::default(),
    )?;
    print!("{}", String::from_utf8(out)?);
    assert_eq!(code, 0);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("golden_vectors example");
}
