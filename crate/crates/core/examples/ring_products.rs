//! Products in the free fusion ring, the two basis changes, and dimensions.
//!
//!     cargo run --example ring_products

use freefusion::fusion_ring::{
    basis_product, dimension, monomial_expand, word_to_generators, DimensionAssignment, RingElement,
};
use freefusion::poly::Poly;
use freefusion::words::standard;

fn main() {
    let ao = standard::ao();
    for (k, l) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
        let v = ao.parse_word(&vec!["s"; k].join(".")).unwrap();
        let w = ao.parse_word(&vec!["s"; l].join(".")).unwrap();
        println!(
            "a[s^{k}] a[s^{l}] = {}",
            basis_product(&ao, &v, &w).render(&ao)
        );
    }

    let ah = standard::ah();
    let uu = ah.parse_word("u.u").unwrap();
    println!(
        "\n(u)(u) = {}",
        monomial_expand(&ah, uu.letters()).render(&ah)
    );
    println!("a[u.u] = {}", word_to_generators(&ah, &uu).render(&ah));

    let d = DimensionAssignment::new(&ah, vec![Poly::n(), Poly::n_plus(-1)]).unwrap();
    for text in ["u", "p", "u.u", "u.p.u"] {
        let a = RingElement::basis(ah.parse_word(text).unwrap());
        println!("dim a[{text}] = {}", dimension(&ah, &a, &d));
    }
}
