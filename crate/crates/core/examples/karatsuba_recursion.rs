// Karatsuba recursion over the 8-bit Urdhva base case, with the work it
// actually does.
//
// cargo run --example karatsuba_recursion

use fpmul::{karatsuba_instrumented, karatsuba_stats, split};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    println!("split(0xab, 8) = {:x?}", split(0xab, 8)?);

    let x = (1u64 << 53) - 1;
    let (p, seen) = karatsuba_instrumented(x, x, 53);
    println!("(2^53-1)^2 = {p}");
    assert_eq!(p, x as u128 * x as u128);
    println!("instrumented: {seen:?}");

    println!("width depth base_muls add_ops");
    for n in [8, 9, 16, 17, 24, 32, 37, 53, 64] {
        let s = karatsuba_stats(n);
        println!("{:>5} {:>5} {:>9} {:>7}", n, s.depth, s.base_multiplies, s.add_ops);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("karatsuba_recursion example");
}
