// Packing and unpacking 67-bit operand words.
//
// cargo run --example word_format

use fpmul::{decode_word, encode_word, mode_config, ModeId, Word67};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    // 1.0 in double precision: mode 101, exponent 1023, empty fraction
    let one = encode_word(ModeId::M6, 0, 1023, 0)?;
    println!("M6 1.0           = {one}");
    assert_eq!(one, Word67::from_f64_bits(ModeId::M6, 1.0f64.to_bits()));

    // M2 keeps 8 fraction bits at the top of the 52-bit field: 1.5 * 2^3
    let m2 = encode_word(ModeId::M2, 1, 127 + 3, 0x80 << 44)?;
    println!("M2 -1.5 * 2^3    = {m2}");

    for text in ["53ff0000000000000", "18828000000000000", "70000000000000000"] {
        let w: Word67 = text.parse()?;
        match decode_word(w) {
            Ok(d) => println!("{text} -> {d:?}"),
            Err(e) => println!("{text} -> error: {e}"),
        }
    }

    for mode in ModeId::CONCRETE {
        let c = mode_config(mode)?;
        println!(
            "{mode}: {} fraction bits, {}-bit exponent, bias {}",
            c.mantissa_width, c.exponent_width, c.bias
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("word_format example");
}
