// How auto mode picks a precision from the operands' mantissas.
//
// cargo run --example auto_mode

use fpmul::{multiply, resolve_mode, significant_width, ModeId, RoundingPolicy, Word67};

fn auto_word(x: f64) -> Word67 {
    Word67::from_f64_bits(ModeId::Auto, x.to_bits())
}

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for x in [
        1.0,
        1.5,
        3.0 / 256.0 + 1.0,
        1.0 + 2f64.powi(-20),
        1.1,
        std::f64::consts::PI,
    ] {
        let m = x.to_bits() & ((1 << 52) - 1);
        let r = resolve_mode(auto_word(x), auto_word(1.0))?;
        println!("{x:<22} significant bits {:>2} -> {}", significant_width(m), r.mode);
    }

    // The result word carries the chosen mode in its mode bits.
    let r = multiply(auto_word(1.25), auto_word(-6.0), RoundingPolicy::Truncate)?;
    println!("1.25 * -6.0 in auto mode -> {} ({} chosen)", r.word, r.resolved_mode);
    assert_eq!(r.resolved_mode, ModeId::M2);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("auto_mode example");
}
