//! The free fusion ring `ZM` over a fusion set.
//!
//! The basis is `a_w` for words `w`; the product of basis elements sums, over
//! every way of cancelling a suffix `y` of the left word against the
//! conjugate prefix of the right word, the concatenation `a_{xz}` of the
//! leftovers and (when both leftovers are non-empty and their boundary
//! letters fuse) the fused word `a_{x·z}`.
//!
//! The ring is free on the generators `a_s`; [`monomial_expand`] and
//! [`word_to_generators`] are the two unitriangular basis changes between
//! words and generator monomials.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::Poly;
use crate::words::{word_conj, word_fuse, FusionSet, Letter, Word};

/// A finite integer combination of basis elements `a_w`. Zero coefficients
/// are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RingElement {
    terms: BTreeMap<Word, BigInt>,
}

impl RingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(Word::empty())
    }

    pub fn basis(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, BigInt::one());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        add_to(&mut self.terms, w, c);
    }

    pub fn add_assign_scaled(&mut self, other: &RingElement, factor: &BigInt) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c * factor);
        }
    }

    pub fn coeff(&self, w: &Word) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Terms in word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The longest word carrying a non-zero coefficient.
    pub fn max_len(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    /// `(a_w)* = a_{conj(w)}`, extended additively.
    pub fn star(&self, set: &FusionSet) -> RingElement {
        let mut out = RingElement::zero();
        for (w, c) in &self.terms {
            out.add_term(word_conj(set, w), c.clone());
        }
        out
    }

    /// Renders as e.g. `1 + a[p] + a[u.u]`.
    pub fn render(&self, set: &FusionSet) -> String {
        render_combination(self.terms.iter(), |w| {
            if w.is_empty() {
                None
            } else {
                Some(format!("a[{}]", set.render_word(w)))
            }
        })
    }
}

fn add_to(terms: &mut BTreeMap<Word, BigInt>, key: Word, c: BigInt) {
    match terms.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Shared `c1 t1 + c2 t2 - ...` rendering; `token` returns `None` for the unit.
fn render_combination<'a>(
    terms: impl Iterator<Item = (&'a Word, &'a BigInt)>,
    token: impl Fn(&Word) -> Option<String>,
) -> String {
    let mut out = String::new();
    for (i, (w, c)) in terms.enumerate() {
        let abs = c.abs();
        match (i, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        match token(w) {
            None => out.push_str(&abs.to_string()),
            Some(t) => {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                }
                out.push_str(&t);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `a_v · a_w` in the word basis.
pub fn basis_product(set: &FusionSet, v: &Word, w: &Word) -> RingElement {
    let mut out = RingElement::zero();
    let (lv, lw) = (v.len(), w.len());
    let vl = v.letters();
    let wl = w.letters();
    for j in 0..=lv.min(lw) {
        // y = v[lv-j..] must be conjugate to w[..j]; checked incrementally.
        if j > 0 && set.conj(vl[lv - j]) != wl[j - 1] {
            break;
        }
        let x = v.slice(0, lv - j);
        let z = w.slice(j, lw);
        if !x.is_empty() && !z.is_empty() {
            if let Some(f) = word_fuse(set, &x, &z).expect("non-empty operands") {
                out.add_term(f, BigInt::one());
            }
        }
        out.add_term(x.concat(&z), BigInt::one());
    }
    out
}

/// Bilinear product of ring elements.
pub fn ring_product(set: &FusionSet, a: &RingElement, b: &RingElement) -> RingElement {
    let mut out = RingElement::zero();
    for (v, cv) in &a.terms {
        for (w, cw) in &b.terms {
            out.add_assign_scaled(&basis_product(set, v, w), &(cv * cw));
        }
    }
    out
}

/// The product `a_{s1} ⋯ a_{sk}` in the word basis.
pub fn monomial_expand(set: &FusionSet, letters: &[Letter]) -> RingElement {
    letters.iter().fold(RingElement::one(), |acc, &s| {
        ring_product(set, &acc, &RingElement::basis(Word::single(s)))
    })
}

/// A finite integer combination of generator monomials `a_{s1} ⋯ a_{sk}`,
/// keyed by the letter sequence (the empty sequence is the unit).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonomialCombination {
    terms: BTreeMap<Word, BigInt>,
}

impl MonomialCombination {
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, seq: &Word) -> BigInt {
        self.terms.get(seq).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, seq: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        add_to(&mut self.terms, seq, c);
    }

    /// Evaluates every monomial in the word basis.
    pub fn to_basis(&self, set: &FusionSet) -> RingElement {
        let mut out = RingElement::zero();
        for (seq, c) in &self.terms {
            out.add_assign_scaled(&monomial_expand(set, seq.letters()), c);
        }
        out
    }

    /// Renders as e.g. `(u)(u) - (p) - 1`.
    pub fn render(&self, set: &FusionSet) -> String {
        render_combination(self.terms.iter(), |seq| {
            if seq.is_empty() {
                None
            } else {
                Some(
                    seq.letters()
                        .iter()
                        .map(|&s| format!("({})", set.name(s)))
                        .collect(),
                )
            }
        })
    }
}

/// Basis-change cache for [`word_to_generators`], keyed by word.
#[derive(Default)]
pub struct GeneratorCache {
    memo: HashMap<Word, MonomialCombination>,
}

impl GeneratorCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Writes `a_w` as a combination of generator monomials.
    pub fn word_to_generators(&mut self, set: &FusionSet, w: &Word) -> MonomialCombination {
        if let Some(hit) = self.memo.get(w) {
            return hit.clone();
        }
        let mut out = MonomialCombination::default();
        out.add_term(w.clone(), BigInt::one());
        // a_w = a_{w1}⋯a_{wk} - Σ_{|v|<k} C^v a_v
        let expansion = monomial_expand(set, w.letters());
        for (v, c) in expansion.terms() {
            if v == w {
                continue;
            }
            debug_assert!(v.len() < w.len());
            let inner = self.word_to_generators(set, v);
            for (seq, d) in inner.terms() {
                out.add_term(seq.clone(), -(c * d));
            }
        }
        self.memo.insert(w.clone(), out.clone());
        out
    }
}

/// Writes `a_w` as a combination of generator monomials.
pub fn word_to_generators(set: &FusionSet, w: &Word) -> MonomialCombination {
    GeneratorCache::new().word_to_generators(set, w)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DimensionError {
    #[error("expected {expected} dimensions, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("dimension of `{0}` differs from that of its conjugate")]
    NotConjInvariant(String),
}

/// Dimension polynomial per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionAssignment {
    dims: Vec<Poly>,
}

impl DimensionAssignment {
    pub fn new(set: &FusionSet, dims: Vec<Poly>) -> Result<Self, DimensionError> {
        if dims.len() != set.len() {
            return Err(DimensionError::WrongCount {
                expected: set.len(),
                got: dims.len(),
            });
        }
        for s in set.letters() {
            if dims[s.index()] != dims[set.conj(s).index()] {
                return Err(DimensionError::NotConjInvariant(set.name(s).to_string()));
            }
        }
        Ok(Self { dims })
    }

    pub fn of(&self, s: Letter) -> &Poly {
        &self.dims[s.index()]
    }
}

/// The ring homomorphism `ZM -> Z[n]` with `a_s ↦ d(s)`.
pub fn dimension(set: &FusionSet, a: &RingElement, d: &DimensionAssignment) -> Poly {
    let mut cache = GeneratorCache::new();
    let mut total = Poly::zero();
    for (w, c) in a.terms() {
        let comb = cache.word_to_generators(set, w);
        for (seq, coeff) in comb.terms() {
            let monomial: Poly = seq.letters().iter().map(|&s| d.of(s).clone()).product();
            total = &total + &monomial.scale(&(c * coeff));
        }
    }
    total
}
