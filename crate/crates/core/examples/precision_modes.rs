// One product in every precision mode, against the exact result.
//
// cargo run --example precision_modes

use fpmul::exact::{relative_error, ExactValue};
use fpmul::{encode_word, mode_config, multiply, ModeId, RoundingPolicy};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let (x, y) = (std::f64::consts::PI, std::f64::consts::E);
    let (bx, by) = (x.to_bits(), y.to_bits());
    let fraction = |bits: u64| bits & ((1 << 52) - 1);
    let exponent = |bits: u64| (bits >> 52) as u32 & 0x7ff;

    for mode in ModeId::CONCRETE {
        let cfg = mode_config(mode)?;
        // custom modes take an 8-bit exponent with bias 127
        let rebias = |e: u32| if mode == ModeId::M6 { e } else { e - 1023 + 127 };
        let a = encode_word(mode, 0, rebias(exponent(bx)), fraction(bx))?;
        let b = encode_word(mode, 0, rebias(exponent(by)), fraction(by))?;
        let exact = ExactValue::from_word(a, &cfg).mul(&ExactValue::from_word(b, &cfg));
        for policy in [RoundingPolicy::Truncate, RoundingPolicy::NearestEven] {
            let r = multiply(a, b, policy)?;
            let got = ExactValue::from_word(r.word, &cfg);
            println!(
                "{mode} {:<12} {:.17}  rel err {:.3e}",
                policy.to_string(),
                got.to_f64(),
                relative_error(&got, &exact)
            );
        }
    }
    println!("host f64       {:.17}", x * y);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("precision_modes example");
}
