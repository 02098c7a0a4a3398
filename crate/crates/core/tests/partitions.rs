use freefusion::models::{Model, ModelName, PatternLetter};
use freefusion::partitions::{enumerate_partitions, is_noncrossing, span_rank, Caps, Partition};
use freefusion::rep_ring::Label;
use freefusion::selftest::catalan;
use num_bigint::BigUint;
use proptest::prelude::*;

/// Position of each point on the boundary circle: upper points left to
/// right, then lower points right to left.
fn cyclic_position(k: usize, l: usize, point: usize) -> usize {
    if point < k {
        point
    } else {
        k + (l - 1 - (point - k))
    }
}

/// Crossing iff some a < b < c < d (cyclically) has a, c in one block and
/// b, d in another.
fn brute_noncrossing(p: &Partition) -> bool {
    let (k, l) = (p.k(), p.l());
    let mut at = vec![0; k + l];
    for (point, &label) in p.labels().iter().enumerate() {
        at[cyclic_position(k, l, point)] = label;
    }
    let m = at.len();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                for d in c + 1..m {
                    if at[a] == at[c] && at[b] == at[d] && at[a] != at[b] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[test]
fn noncrossing_matches_brute_force() {
    let caps = Caps::default();
    for total in 0..=6 {
        for k in 0..=total {
            let all = enumerate_partitions(k, total - k, false, &caps).unwrap();
            let nc = enumerate_partitions(k, total - k, true, &caps).unwrap();
            let filtered: Vec<_> = all
                .iter()
                .filter(|p| brute_noncrossing(p))
                .cloned()
                .collect();
            assert_eq!(nc, filtered, "k={k} l={}", total - k);
            for p in &all {
                assert_eq!(is_noncrossing(p), brute_noncrossing(p), "{p}");
            }
        }
    }
}

#[test]
fn nc_count_depends_only_on_total_points() {
    let caps = Caps::default();
    let cat = catalan(6);
    for (total, c) in cat.iter().enumerate() {
        for k in 0..=total {
            let n = enumerate_partitions(k, total - k, true, &caps)
                .unwrap()
                .len();
            assert_eq!(BigUint::from(n), *c);
        }
    }
}

#[test]
fn trivial_multiplicity_in_ao_is_catalan() {
    // Fixed vectors of U^{⊗k} for the free orthogonal model are counted by
    // non-crossing pair partitions of k points.
    let m = Model::build(ModelName::Ao);
    let caps = Caps::default();
    for k in 1..=10 {
        let d = m
            .decompose_fundamental_power(&vec![PatternLetter::U; k])
            .unwrap();
        let pairings = enumerate_partitions(0, k, true, &caps)
            .unwrap()
            .into_iter()
            .filter(Partition::is_pairing)
            .count();
        assert_eq!(
            d.multiplicity(&m.ring.trivial()),
            BigUint::from(pairings),
            "k={k}"
        );
        if k % 2 == 0 {
            assert_eq!(BigUint::from(pairings), catalan(k / 2)[k / 2]);
        }
    }
}

#[test]
fn caps_are_enforced() {
    let caps = Caps {
        max_points: 4,
        max_entries: 100,
    };
    assert!(enumerate_partitions(3, 2, true, &caps).is_err());
    let ps = enumerate_partitions(0, 4, true, &caps).unwrap();
    assert!(span_rank(&ps, 4, &caps).is_err());
}

#[test]
fn asp_fundamental_splits_off_a_character() {
    let m = Model::build(ModelName::Asp);
    assert_eq!(m.fundamental.len(), 2);
    let dims: Vec<String> = m
        .fundamental
        .labels()
        .map(|l| m.dim(l).to_string())
        .collect();
    assert!(
        dims.contains(&"1".to_string()) && dims.contains(&"n - 1".to_string()),
        "{dims:?}"
    );
    assert!(m.fundamental.labels().all(|l| matches!(l, Label::Pair(..))));
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn span_rank_is_bounded_and_monotone(k in 0usize..3, l in 0usize..3, n in 1usize..4, take in 0usize..20) {
        let caps = Caps::default();
        let all = enumerate_partitions(k, l, false, &caps).unwrap();
        let prefix = &all[..take.min(all.len())];
        let r = span_rank(prefix, n, &caps).unwrap();
        prop_assert!(r <= prefix.len());
        prop_assert!(r <= n.pow((k + l) as u32));
        prop_assert!(r <= span_rank(&all, n, &caps).unwrap());
    }
}
