use std::collections::BTreeMap;
use std::sync::Arc;

use freefusion::complexify::complexify;
use freefusion::fusion_ring::DimensionAssignment;
use freefusion::models::{Model, ModelName, PatternLetter};
use freefusion::poly::Poly;
use freefusion::rep_ring::{
    circle_ring, cyclic2_ring, direct_product, free_product, invariant_violations, reachable,
    ring_from_fusion_set, ComplexifiedEmbedding, Label, RepRing, Side,
};
use freefusion::words::{standard, Word};
use proptest::prelude::*;

#[test]
fn embedding_is_injective() {
    for source in [standard::ah(), standard::ao()] {
        let emb = ComplexifiedEmbedding::new(complexify(&source).unwrap()).unwrap();
        let mut seen = BTreeMap::new();
        for w in emb.complexified().set().words_up_to(4) {
            let label = emb.embed_word(&w);
            assert!(emb.ring().contains(&label));
            if let Some(prev) = seen.insert(label, w.clone()) {
                panic!("{prev:?} and {w:?} embed alike");
            }
        }
    }
}

#[test]
fn ao_complexification_crosscheck_at_length_four() {
    let emb = ComplexifiedEmbedding::new(complexify(&standard::ao()).unwrap()).unwrap();
    let (checked, failures) = emb.crosscheck_all(4);
    assert_eq!(checked, 31 * 31);
    assert!(failures.is_empty());
}

#[test]
fn model_rings_satisfy_the_invariants() {
    for name in ModelName::ALL {
        let m = Model::build(name);
        let gens: Vec<Label> = m
            .fundamental
            .labels()
            .chain(m.conjugate_fundamental().labels())
            .cloned()
            .collect();
        let labels: Vec<Label> = reachable(m.ring.as_ref(), &gens, 3).into_iter().collect();
        let v = invariant_violations(m.ring.as_ref(), &labels);
        assert!(v.is_empty(), "{name}: {v:?}");
    }
}

#[test]
fn fundamental_and_conjugate_have_dimension_n() {
    for name in ModelName::ALL {
        let m = Model::build(name);
        assert_eq!(m.fund_dim, Poly::n(), "{name}");
        assert_eq!(
            m.ring.total_dim(&m.conjugate_fundamental()),
            Some(Poly::n()),
            "{name}"
        );
    }
}

#[test]
fn ak_tensor_square_of_conjugate() {
    let m = Model::build(ModelName::Ak);
    let d = m
        .decompose_fundamental_power(&[PatternLetter::Ubar, PatternLetter::U])
        .unwrap();
    let rows: Vec<(String, String)> = d
        .iter()
        .map(|(l, _)| (m.render(l), m.dim(l).to_string()))
        .collect();
    assert_eq!(
        rows,
        [
            ("[]".to_string(), "1".to_string()),
            ("[p_even2]".to_string(), "n - 1".to_string()),
            ("[u_odd2.u_odd1]".to_string(), "n^2 - n".to_string()),
        ]
    );
}

/// A factor ring and its generating labels.
fn factor(which: usize) -> (Arc<dyn RepRing>, Vec<Label>) {
    let (set, dims) = match which {
        0 => (standard::ao(), vec![Poly::n()]),
        1 => (standard::as_set(), vec![Poly::n_plus(-1)]),
        2 => (standard::ah(), vec![Poly::n(), Poly::n_plus(-1)]),
        3 => return (Arc::new(circle_ring()), vec![Label::Int(1)]),
        _ => return (Arc::new(cyclic2_ring()), vec![Label::Int(1)]),
    };
    let letters = set
        .letters()
        .map(|s| Label::Word(Word::single(s)))
        .collect();
    let d = DimensionAssignment::new(&set, dims).unwrap();
    (Arc::new(ring_from_fusion_set(set, d).unwrap()), letters)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn products_of_small_rings(a in 0usize..5, b in 0usize..5) {
        let (left, left_gens) = factor(a);
        let (right, right_gens) = factor(b);

        let fp = free_product(left.clone(), right.clone());
        let gens: Vec<Label> = left_gens
            .iter()
            .map(|l| fp.letter(Side::Left, l.clone()))
            .chain(right_gens.iter().map(|l| fp.letter(Side::Right, l.clone())))
            .collect();
        let labels: Vec<Label> = reachable(&fp, &gens, 2).into_iter().collect();
        let v = invariant_violations(&fp, &labels);
        prop_assert!(v.is_empty(), "{:?}", v);

        let dp = direct_product(left, right);
        let gens: Vec<Label> = left_gens
            .iter()
            .flat_map(|a| right_gens.iter().map(move |b| Label::pair(a.clone(), b.clone())))
            .collect();
        let labels: Vec<Label> = reachable(&dp, &gens, 2).into_iter().collect();
        let v = invariant_violations(&dp, &labels);
        prop_assert!(v.is_empty(), "{:?}", v);
    }
}
