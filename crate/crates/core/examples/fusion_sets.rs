//! Parse fusion sets, validate them and fuse words.
//!
//!     cargo run --example fusion_sets

use freefusion::words::{standard, validate_fusion_set, word_conj, word_fuse, FusionSet};

fn main() {
    let ah = standard::ah();
    println!("A_h:\n{}", ah.to_source());
    println!("valid: {}", validate_fusion_set(&ah).is_valid());

    let v = ah.parse_word("u.p").unwrap();
    let w = ah.parse_word("u").unwrap();
    let fused = word_fuse(&ah, &v, &w).unwrap();
    println!(
        "u.p ∘ u = {}",
        fused.map_or("∅".to_string(), |f| ah.render_word(&f))
    );
    println!("conj(u.p) = {}", ah.render_word(&word_conj(&ah, &v)));

    // a·a = b with b·a ≠ a breaks the compatibility axiom.
    let bad = FusionSet::parse("letters: a b\nconj: a=a b=b\nfusion: a.a=b\n").unwrap();
    println!("\nincompatible set:");
    for line in validate_fusion_set(&bad).render(&bad) {
        println!("  {line}");
    }
}
