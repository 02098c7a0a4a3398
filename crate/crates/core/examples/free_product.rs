//! Compare fusion in a complexified set with the free-product recursion in
//! Rep(A) * Rep(C(S^1)).
//!
//!     cargo run --example free_product [max_len]

use freefusion::complexify::complexify;
use freefusion::rep_ring::{ComplexifiedEmbedding, RepRing};
use freefusion::words::standard;

fn main() {
    let max_len = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);
    let emb = ComplexifiedEmbedding::new(complexify(&standard::ah()).unwrap()).unwrap();
    let s = emb.complexified().set();

    let x = s.parse_word("u_odd1.p_even1").unwrap();
    let y = s.parse_word("u_odd2").unwrap();
    let report = emb.crosscheck(&x, &y);
    println!("{} ⊗ {}:", s.render_word(&x), s.render_word(&y));
    for (label, mult) in report.via_free_product.iter() {
        println!("  {mult} × {}", emb.ring().render(label));
    }

    let (checked, failures) = emb.crosscheck_all(max_len);
    println!(
        "\nwords up to length {max_len}: {checked} pairs, {} mismatches",
        failures.len()
    );
}
