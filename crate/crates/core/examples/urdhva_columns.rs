// The vertically-and-crosswise column multiplier.
//
// cargo run --example urdhva_columns

use fpmul::{urdhva_columns, urdhva_mul, urdhva_reduce, urdhva_stats};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let (a, b) = (0b1101u64, 0b1011u64);
    let cols = urdhva_columns(a, b, 4);
    for (k, t) in cols.columns().iter().enumerate() {
        println!("t{k} = {t}");
    }
    let p = urdhva_reduce(&cols);
    println!("{a} * {b} = {p} = {p:#010b}");
    assert_eq!(p, (a * b) as u128);

    println!("255 * 255 = {:#x}", urdhva_mul(0xff, 0xff, 8));
    for n in [2, 4, 8] {
        let s = urdhva_stats(n);
        println!(
            "{n}x{n}: {} ripple adders, tallest column {}",
            s.adders, s.max_column_height
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("urdhva_columns example");
}
