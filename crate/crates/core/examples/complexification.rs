//! Free complexification of A_h: the four-letter fusion set of A_k.
//!
//!     cargo run --example complexification

use freefusion::complexify::complexify;
use freefusion::words::standard;

fn main() {
    let c = complexify(&standard::ah()).expect("A_h carries a parity grading");
    let s = c.set();
    print!("{}", s.to_source());

    let letters: Vec<_> = s.letters().collect();
    print!("\n{:>8}", "·");
    for &b in &letters {
        print!("{:>9}", s.name(b));
    }
    println!();
    for &a in &letters {
        print!("{:>8}", s.name(a));
        for &b in &letters {
            print!("{:>9}", s.fuse(a, b).map_or("∅", |f| s.name(f)));
        }
        println!("   conj = {}", s.name(s.conj(a)));
    }
}
