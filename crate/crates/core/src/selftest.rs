//! Built-in verification suite: every check recomputes a known identity by
//! two independent routes and reports pass/fail with its wall time.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complexify::complexify;
use crate::fusion_ring::{
    basis_product, monomial_expand, ring_product, GeneratorCache, RingElement,
};
use crate::models::{
    one_dimensional_summand_check, patterns_of_len, Model, ModelName, PatternLetter,
};
use crate::partitions::{enumerate_partitions, span_rank, Caps};
use crate::poly::Poly;
use crate::rep_ring::ComplexifiedEmbedding;
use crate::words::{standard, validate_fusion_set, FusionSet, Letter, Word};

/// Outcome of one check.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl CheckOutcome {
    pub fn line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{:.3}s\t{}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

type Check = (u32, &'static str, u64, fn() -> Result<String, String>);

const CHECKS: [Check; 10] = [
    (
        1,
        "complexified A_h reproduces the A_k table",
        1,
        check_complexified_table,
    ),
    (2, "A_k: U ⊗ Ubar dimensions", 1, check_ak_dimensions),
    (
        3,
        "complexified fusion agrees with the free-product recursion",
        30,
        check_crosscheck,
    ),
    (
        4,
        "word and monomial bases are unitriangular inverses",
        10,
        check_freeness,
    ),
    (5, "ring product associativity", 30, check_associativity),
    (6, "A_o closed form", 5, check_ao_closed_form),
    (7, "partition counts and rank", 60, check_partitions),
    (
        8,
        "one-dimensional group-like summands",
        1,
        check_one_dimensional,
    ),
    (
        9,
        "dimension conservation in tensor powers",
        30,
        check_dimension_conservation,
    ),
    (
        10,
        "A_k odd powers avoid the trivial label",
        10,
        check_odd_powers,
    ),
];

/// Runs every check in order.
pub fn run_all() -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .map(|&(id, name, limit, f)| run_one(id, name, limit, f))
        .collect()
}

fn run_one(
    id: u32,
    name: &'static str,
    limit_s: u64,
    f: fn() -> Result<String, String>,
) -> CheckOutcome {
    let limit = Duration::from_secs(limit_s);
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if passed && elapsed >= limit {
        passed = false;
        detail = format!("{detail}; exceeded {limit_s}s");
    }
    CheckOutcome {
        id,
        name,
        passed,
        detail,
        elapsed,
        limit,
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// The four-letter table of `A_k` with `u, v, p, q` in that order.
pub const AK_TABLE: [[Option<&str>; 4]; 4] = [
    [None, Some("q"), Some("u"), None],
    [Some("p"), None, None, Some("v")],
    [None, Some("v"), Some("p"), None],
    [Some("u"), None, None, Some("q")],
];
pub const AK_LETTERS: [&str; 4] = ["u", "v", "p", "q"];
pub const AK_CONJ: [&str; 4] = ["v", "u", "p", "q"];

/// `A_k` letter name to complexified `A_h` letter name.
pub fn ak_relabel(name: &str) -> &'static str {
    match name {
        "u" => "u_odd1",
        "v" => "u_odd2",
        "q" => "p_even1",
        "p" => "p_even2",
        other => panic!("not an A_k letter: {other}"),
    }
}

fn check_complexified_table() -> Result<String, String> {
    let c = complexify(&standard::ah()).map_err(|e| e.to_string())?;
    let s = c.set();
    ensure(s.len() == 4, || {
        format!("expected 4 letters, got {}", s.len())
    })?;
    let letter = |name: &str| {
        s.letter(ak_relabel(name))
            .ok_or_else(|| format!("missing {name}"))
    };
    let mut cells = 0;
    for (i, row) in AK_LETTERS.iter().enumerate() {
        for (j, col) in AK_LETTERS.iter().enumerate() {
            let got = s.fuse(letter(row)?, letter(col)?);
            let want = AK_TABLE[i][j].map(letter).transpose()?;
            ensure(got == want, || format!("cell {row}·{col} differs"))?;
            cells += 1;
        }
        ensure(s.conj(letter(row)?) == letter(AK_CONJ[i])?, || {
            format!("conjugate of {row} differs")
        })?;
    }
    ensure(validate_fusion_set(s).is_valid(), || {
        "complexified set invalid".into()
    })?;
    Ok(format!("{cells} cells and 4 conjugates match"))
}

fn check_ak_dimensions() -> Result<String, String> {
    let m = Model::build(ModelName::Ak);
    let d = m
        .decompose_fundamental_power(&[PatternLetter::U, PatternLetter::Ubar])
        .map_err(|e| e.to_string())?;
    let n = Poly::n();
    let set = complexify(&standard::ah()).map_err(|e| e.to_string())?;
    let word = |t: &str| crate::rep_ring::Label::Word(set.set().parse_word(t).expect("word"));
    let expected = [
        (word("u_odd1.u_odd2"), &(&n * &n) - &n),
        (word("p_even1"), Poly::n_plus(-1)),
        (word(""), Poly::one()),
    ];
    ensure(d.len() == 3, || {
        format!("expected 3 summands, got {}", d.len())
    })?;
    for (label, dim) in &expected {
        ensure(d.multiplicity(label).is_one(), || {
            format!("{} missing", m.render(label))
        })?;
        ensure(m.dim(label) == *dim, || {
            format!(
                "dim {} = {}, expected {}",
                m.render(label),
                m.dim(label),
                dim
            )
        })?;
    }
    let total = m.ring.total_dim(&d).expect("dims");
    ensure(total == &n * &n, || format!("total {total}"))?;
    Ok("n^2 - n + (n - 1) + 1 = n^2".into())
}

fn check_crosscheck() -> Result<String, String> {
    let mut total = 0;
    for source in [standard::ah(), standard::ao()] {
        let c = complexify(&source).map_err(|e| e.to_string())?;
        let emb = ComplexifiedEmbedding::new(c).map_err(|e| e.to_string())?;
        let (checked, failures) = emb.crosscheck_all(3);
        total += checked;
        if let Some(f) = failures.first() {
            let s = emb.complexified().set();
            return Err(format!(
                "{} mismatches, first at ({}, {})",
                failures.len(),
                s.render_word(&f.x),
                s.render_word(&f.y)
            ));
        }
    }
    Ok(format!("{total} pairs agree"))
}

/// Both basis changes are unitriangular and mutually inverse on words of
/// length at most `max_len`.
pub fn freeness_violations(set: &FusionSet, max_len: usize) -> Vec<String> {
    let mut out = Vec::new();
    let mut cache = GeneratorCache::new();
    for w in set.words_up_to(max_len) {
        let comb = cache.word_to_generators(set, &w);
        if !comb.coeff(&w).is_one()
            || comb
                .terms()
                .any(|(seq, _)| seq != &w && seq.len() >= w.len())
        {
            out.push(format!(
                "word->generators not unitriangular at {}",
                set.render_word(&w)
            ));
        }
        if comb.to_basis(set) != RingElement::basis(w.clone()) {
            out.push(format!(
                "word->generators->words fails at {}",
                set.render_word(&w)
            ));
        }
        let expansion = monomial_expand(set, w.letters());
        if !expansion.coeff(&w).is_one()
            || expansion
                .terms()
                .any(|(v, _)| v != &w && v.len() >= w.len())
        {
            out.push(format!(
                "monomial expansion not unitriangular at {}",
                set.render_word(&w)
            ));
        }
        let mut back = std::collections::BTreeMap::new();
        for (v, c) in expansion.terms() {
            for (seq, d) in cache.word_to_generators(set, v).terms() {
                *back.entry(seq.clone()).or_insert_with(BigInt::zero) += c * d;
            }
        }
        back.retain(|_, c| !c.is_zero());
        if back.len() != 1 || !back.get(&w).is_some_and(|c| c.is_one()) {
            out.push(format!(
                "monomials->words->generators fails at {}",
                set.render_word(&w)
            ));
        }
    }
    out
}

fn check_freeness() -> Result<String, String> {
    let mut words = 0;
    for set in [standard::ao(), standard::as_set(), standard::ah()] {
        let v = freeness_violations(&set, 6);
        ensure(v.is_empty(), || v.join("; "))?;
        words += set.words_up_to(6).len();
    }
    Ok(format!("{words} words"))
}

/// A random fusion set with `size` letters: a random involution for the
/// conjugation and a sparse random fusion table. Not necessarily valid.
pub fn random_fusion_set<R: Rng>(rng: &mut R, size: usize) -> FusionSet {
    let mut order: Vec<u16> = (0..size as u16).collect();
    order.shuffle(rng);
    let mut conj: Vec<Letter> = (0..size as u16).map(Letter).collect();
    let mut i = 0;
    while i + 1 < order.len() {
        if rng.gen_bool(0.5) {
            conj[order[i] as usize] = Letter(order[i + 1]);
            conj[order[i + 1] as usize] = Letter(order[i]);
            i += 2;
        } else {
            i += 1;
        }
    }
    let fusion = (0..size * size)
        .map(|_| {
            if rng.gen_bool(0.6) {
                None
            } else {
                Some(Letter(rng.gen_range(0..size as u16)))
            }
        })
        .collect();
    let names = (0..size).map(|i| format!("x{i}")).collect();
    FusionSet::from_tables(names, conj, fusion, None)
}

/// `count` valid fusion sets with at most `max_size` letters from a seeded
/// generator. The size is drawn uniformly first, then tables of that size are
/// rejection-sampled until one is valid.
pub fn random_valid_fusion_sets(seed: u64, count: usize, max_size: usize) -> Vec<FusionSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=max_size);
            loop {
                let set = random_fusion_set(&mut rng, size);
                if validate_fusion_set(&set).is_valid() {
                    break set;
                }
            }
        })
        .collect()
}

/// Word triples of length at most `max_len` on which the ring product is
/// not associative.
pub fn associativity_failures(set: &FusionSet, max_len: usize) -> Vec<(Word, Word, Word)> {
    let words = set.words_up_to(max_len);
    let mut failures = Vec::new();
    for x in &words {
        for y in &words {
            let xy = basis_product(set, x, y);
            for z in &words {
                let left = ring_product(set, &xy, &RingElement::basis(z.clone()));
                let right = ring_product(
                    set,
                    &RingElement::basis(x.clone()),
                    &basis_product(set, y, z),
                );
                if left != right {
                    failures.push((x.clone(), y.clone(), z.clone()));
                }
            }
        }
    }
    failures
}

fn check_associativity() -> Result<String, String> {
    let ah = standard::ah();
    ensure(associativity_failures(&ah, 2).is_empty(), || {
        "A_h not associative".into()
    })?;
    let sets = random_valid_fusion_sets(0x5EED, 100, 3);
    for (i, s) in sets.iter().enumerate() {
        let f = associativity_failures(s, 2);
        ensure(f.is_empty(), || {
            format!("random set #{i} not associative:\n{s}")
        })?;
    }
    let bad = FusionSet::parse("letters: a b\nconj: a=a b=b\nfusion: a.a=b\n").expect("literal");
    let witnesses = associativity_failures(&bad, 1)
        .into_iter()
        .filter(|(x, y, z)| x.len() == 1 && y.len() == 1 && z.len() == 1)
        .count();
    ensure(witnesses > 0, || {
        "incompatible set shows no non-associative letter triple".into()
    })?;
    Ok(format!(
        "A_h + 100 random sets associative; {witnesses} witnesses on the incompatible set"
    ))
}

fn check_ao_closed_form() -> Result<String, String> {
    let ao = standard::ao();
    let s = ao.letter("s").expect("s");
    let power = |k: usize| Word::new(vec![s; k]);
    for k in 0..=8 {
        for l in 0..=8 {
            let got = basis_product(&ao, &power(k), &power(l));
            let mut want = RingElement::zero();
            for j in 0..=k.min(l) {
                want.add_term(power(k + l - 2 * j), BigInt::one());
            }
            ensure(got == want, || format!("s^{k} · s^{l} differs"))?;
        }
    }
    Ok("81 products".into())
}

/// Catalan numbers by the Segner recursion.
pub fn catalan(max: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::one()];
    for m in 0..max {
        let next = (0..=m).map(|i| &c[i] * &c[m - i]).sum();
        c.push(next);
    }
    c
}

/// Bell numbers by the Bell triangle.
pub fn bell(max: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    let mut row = vec![BigUint::one()];
    for _ in 0..max {
        let mut next = vec![row.last().expect("non-empty").clone()];
        for x in &row {
            let v = next.last().expect("non-empty") + x;
            next.push(v);
        }
        out.push(next[0].clone());
        row = next;
    }
    out
}

fn check_partitions() -> Result<String, String> {
    let caps = Caps::default();
    let cat = catalan(10);
    let bel = bell(8);
    for (k, c) in cat.iter().enumerate() {
        let got = enumerate_partitions(0, k, true, &caps)
            .map_err(|e| e.to_string())?
            .len();
        ensure(BigUint::from(got) == *c, || {
            format!("|NC(0,{k})| = {got}, C_{k} = {c}")
        })?;
    }
    for (k, b) in bel.iter().enumerate() {
        let got = enumerate_partitions(0, k, false, &caps)
            .map_err(|e| e.to_string())?
            .len();
        ensure(BigUint::from(got) == *b, || {
            format!("|P(0,{k})| = {got}, B_{k} = {b}")
        })?;
    }
    let nc4 = enumerate_partitions(0, 4, true, &caps).map_err(|e| e.to_string())?;
    let rank = span_rank(&nc4, 4, &caps).map_err(|e| e.to_string())?;
    ensure(rank == 14, || format!("rank {rank}"))?;
    Ok(format!("C_10 = {}, B_8 = {}, rank 14", cat[10], bel[8]))
}

fn check_one_dimensional() -> Result<String, String> {
    let mut found = Vec::new();
    for name in [ModelName::Asp, ModelName::Abp, ModelName::Ap, ModelName::Ac] {
        let m = Model::build(name);
        let r = one_dimensional_summand_check(&m).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{name}: no group-like summand"))?;
        found.push(format!(
            "{name}:{}",
            m.render(r.zeta.as_ref().expect("passed"))
        ));
    }
    Ok(found.join(" "))
}

fn check_dimension_conservation() -> Result<String, String> {
    let mut count = 0;
    for name in ModelName::ALL {
        let m = Model::build(name);
        for len in 1..=4 {
            let expected = Poly::n().pow(len as u32);
            for pattern in patterns_of_len(len) {
                let d = m
                    .decompose_fundamental_power(&pattern)
                    .map_err(|e| e.to_string())?;
                let total = m.ring.total_dim(&d).expect("dims");
                ensure(total == expected, || {
                    format!("{name} pattern of length {len}: {total}")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} patterns"))
}

fn check_odd_powers() -> Result<String, String> {
    let m = Model::build(ModelName::Ak);
    let one = m.ring.trivial();
    let mut count = 0;
    for len in [1, 3, 5] {
        for pattern in patterns_of_len(len) {
            let d = m
                .decompose_fundamental_power(&pattern)
                .map_err(|e| e.to_string())?;
            ensure(d.multiplicity(&one).is_zero(), || {
                format!("trivial in odd pattern {pattern:?}")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} odd patterns"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracles() {
        let c: Vec<u32> = catalan(6).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(c, [1, 1, 2, 5, 14, 42, 132]);
        let b: Vec<u32> = bell(6).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(b, [1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn random_sets_are_valid_and_seeded() {
        let a = random_valid_fusion_sets(7, 10, 3);
        let b = random_valid_fusion_sets(7, 10, 3);
        assert_eq!(a, b);
        assert!(a.iter().all(|s| validate_fusion_set(s).is_valid()));
    }

    #[test]
    fn freeness_on_small_sets() {
        assert!(freeness_violations(&standard::ah(), 3).is_empty());
    }
}
