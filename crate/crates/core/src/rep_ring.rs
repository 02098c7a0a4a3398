//! Representation rings given by their fusion rules.
//!
//! A [`RepRing`] exposes the dual of an irreducible label and the
//! decomposition of a tensor product of two irreducibles into a multiset of
//! irreducibles. Label universes are never materialized, so infinite rings
//! such as the circle ring and free products are handled lazily.
//!
//! Labels render in brackets: `[s.s]` for words, `[z^1 | u.u | z^-1]` for
//! free products, `[(p, g^1)]` for direct products and `[]` for the trivial
//! label of any ring. Inside a bracket the trivial component renders as `1`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::complexify::ComplexifiedSet;
use crate::fusion_ring::{basis_product, dimension, DimensionAssignment, RingElement};
use crate::poly::Poly;
use crate::words::{validate_fusion_set, word_conj, FusionSet, Word};

/// Which factor of a free product a letter belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

/// An irreducible label.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    /// Word in a free fusion ring.
    Word(Word),
    /// Character of the circle or of `Z/2`.
    Int(i64),
    /// Label of a direct product.
    Pair(Box<Label>, Box<Label>),
    /// Reduced alternating word of a free product; empty is trivial.
    Free(Vec<(Side, Label)>),
}

impl Label {
    pub fn pair(a: Label, b: Label) -> Label {
        Label::Pair(Box::new(a), Box::new(b))
    }
}

/// A finite multiset of labels with arbitrary-precision multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    entries: BTreeMap<Label, BigUint>,
}

impl Decomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(label: Label) -> Self {
        let mut d = Self::new();
        d.add(label, BigUint::one());
        d
    }

    pub fn add(&mut self, label: Label, mult: BigUint) {
        if mult.is_zero() {
            return;
        }
        *self.entries.entry(label).or_default() += mult;
    }

    pub fn add_scaled(&mut self, other: &Decomposition, factor: &BigUint) {
        for (l, m) in &other.entries {
            self.add(l.clone(), m * factor);
        }
    }

    pub fn multiplicity(&self, label: &Label) -> BigUint {
        self.entries.get(label).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Label, &BigUint)> {
        self.entries.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.entries.keys()
    }

    /// Number of distinct labels.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total count with multiplicity.
    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    /// The only label, if there is exactly one with multiplicity one.
    pub fn as_single(&self) -> Option<&Label> {
        match self.entries.iter().next() {
            Some((l, m)) if self.entries.len() == 1 && m.is_one() => Some(l),
            _ => None,
        }
    }
}

impl FromIterator<(Label, BigUint)> for Decomposition {
    fn from_iter<T: IntoIterator<Item = (Label, BigUint)>>(iter: T) -> Self {
        let mut d = Decomposition::new();
        for (l, m) in iter {
            d.add(l, m);
        }
        d
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepRingError {
    #[error("fusion set fails validation: {0}")]
    InvalidFusionSet(String),
    #[error("label sequence cannot be reduced: adjacent letters do not multiply to a single irreducible")]
    NotReducible,
}

/// Fusion rules of a compact quantum group at the level of its
/// representation ring.
pub trait RepRing: Send + Sync {
    fn trivial(&self) -> Label;

    fn is_trivial(&self, x: &Label) -> bool {
        *x == self.trivial()
    }

    fn dual(&self, x: &Label) -> Label;

    /// `x ⊗ y` as a multiset of irreducibles.
    fn decompose_pair(&self, x: &Label, y: &Label) -> Decomposition;

    fn dim(&self, x: &Label) -> Option<Poly>;

    /// Whether `x` is a well-formed label of this ring.
    fn contains(&self, x: &Label) -> bool;

    /// Unbracketed rendering; the trivial label is `1`.
    fn token(&self, x: &Label) -> String;

    fn render(&self, x: &Label) -> String {
        if self.is_trivial(x) {
            "[]".to_string()
        } else {
            format!("[{}]", self.token(x))
        }
    }

    /// Tensor product of two finite multisets.
    fn decompose_multisets(&self, a: &Decomposition, b: &Decomposition) -> Decomposition {
        let mut out = Decomposition::new();
        for (x, mx) in a.iter() {
            for (y, my) in b.iter() {
                out.add_scaled(&self.decompose_pair(x, y), &(mx * my));
            }
        }
        out
    }

    /// Total dimension `Σ mult · dim`, if every label has a dimension.
    fn total_dim(&self, d: &Decomposition) -> Option<Poly> {
        let mut sum = Poly::zero();
        for (l, m) in d.iter() {
            let scale = num_bigint::BigInt::from(m.clone());
            sum = &sum + &self.dim(l)?.scale(&scale);
        }
        Some(sum)
    }
}

/// Free fusion ring of a validated fusion set; labels are words.
pub struct FreeFusionRing {
    set: Arc<FusionSet>,
    dims: Option<DimensionAssignment>,
    dim_cache: Mutex<HashMap<Word, Poly>>,
}

impl FreeFusionRing {
    pub fn new(set: FusionSet, dims: Option<DimensionAssignment>) -> Result<Self, RepRingError> {
        let report = validate_fusion_set(&set);
        if !report.is_valid() {
            return Err(RepRingError::InvalidFusionSet(
                report.render(&set).join("; "),
            ));
        }
        Ok(Self {
            set: Arc::new(set),
            dims,
            dim_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn set(&self) -> &FusionSet {
        &self.set
    }

    pub fn word_label(&self, text: &str) -> Option<Label> {
        self.set.parse_word(text).ok().map(Label::Word)
    }
}

/// Shorthand for [`FreeFusionRing::new`].
pub fn ring_from_fusion_set(
    set: FusionSet,
    dims: DimensionAssignment,
) -> Result<FreeFusionRing, RepRingError> {
    FreeFusionRing::new(set, Some(dims))
}

fn expect_word(x: &Label) -> &Word {
    match x {
        Label::Word(w) => w,
        other => panic!("free fusion ring given non-word label {other:?}"),
    }
}

fn expect_int(x: &Label) -> i64 {
    match x {
        Label::Int(k) => *k,
        other => panic!("group ring given non-integer label {other:?}"),
    }
}

impl RepRing for FreeFusionRing {
    fn trivial(&self) -> Label {
        Label::Word(Word::empty())
    }

    fn dual(&self, x: &Label) -> Label {
        Label::Word(word_conj(&self.set, expect_word(x)))
    }

    fn decompose_pair(&self, x: &Label, y: &Label) -> Decomposition {
        let prod = basis_product(&self.set, expect_word(x), expect_word(y));
        prod.terms()
            .map(|(w, c)| {
                let m = c.to_biguint().expect("basis products are non-negative");
                (Label::Word(w.clone()), m)
            })
            .collect()
    }

    fn dim(&self, x: &Label) -> Option<Poly> {
        let dims = self.dims.as_ref()?;
        let w = expect_word(x);
        if let Some(hit) = self.dim_cache.lock().expect("poisoned").get(w) {
            return Some(hit.clone());
        }
        let d = dimension(&self.set, &RingElement::basis(w.clone()), dims);
        self.dim_cache
            .lock()
            .expect("poisoned")
            .insert(w.clone(), d.clone());
        Some(d)
    }

    fn contains(&self, x: &Label) -> bool {
        matches!(x, Label::Word(w) if w.letters().iter().all(|s| s.index() < self.set.len()))
    }

    fn token(&self, x: &Label) -> String {
        let w = expect_word(x);
        if w.is_empty() {
            "1".into()
        } else {
            self.set.render_word(w)
        }
    }
}

/// Characters of the circle: `k ⊗ l = k + l`, all one-dimensional.
#[derive(Clone, Copy, Debug, Default)]
pub struct CircleRing;

pub fn circle_ring() -> CircleRing {
    CircleRing
}

impl RepRing for CircleRing {
    fn trivial(&self) -> Label {
        Label::Int(0)
    }

    fn dual(&self, x: &Label) -> Label {
        Label::Int(-expect_int(x))
    }

    fn decompose_pair(&self, x: &Label, y: &Label) -> Decomposition {
        Decomposition::single(Label::Int(expect_int(x) + expect_int(y)))
    }

    fn dim(&self, _x: &Label) -> Option<Poly> {
        Some(Poly::one())
    }

    fn contains(&self, x: &Label) -> bool {
        matches!(x, Label::Int(_))
    }

    fn token(&self, x: &Label) -> String {
        match expect_int(x) {
            0 => "1".into(),
            k => format!("z^{k}"),
        }
    }
}

/// Characters of `Z/2`, labels `0` and `1`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Cyclic2Ring;

pub fn cyclic2_ring() -> Cyclic2Ring {
    Cyclic2Ring
}

impl RepRing for Cyclic2Ring {
    fn trivial(&self) -> Label {
        Label::Int(0)
    }

    fn dual(&self, x: &Label) -> Label {
        x.clone()
    }

    fn decompose_pair(&self, x: &Label, y: &Label) -> Decomposition {
        Decomposition::single(Label::Int((expect_int(x) + expect_int(y)).rem_euclid(2)))
    }

    fn dim(&self, _x: &Label) -> Option<Poly> {
        Some(Poly::one())
    }

    fn contains(&self, x: &Label) -> bool {
        matches!(x, Label::Int(0 | 1))
    }

    fn token(&self, x: &Label) -> String {
        match expect_int(x) {
            0 => "1".into(),
            k => format!("g^{k}"),
        }
    }
}

type FreeKey = (Vec<(Side, Label)>, Vec<(Side, Label)>);

/// Free product of two rings. Irreducibles are reduced alternating words;
/// tensor products follow the boundary recursion: letters from different
/// factors concatenate, letters from the same factor are decomposed there,
/// and the trivial summand recurses on the shortened words.
pub struct FreeProduct {
    left: Arc<dyn RepRing>,
    right: Arc<dyn RepRing>,
    cache: Mutex<HashMap<FreeKey, Decomposition>>,
}

pub fn free_product(left: Arc<dyn RepRing>, right: Arc<dyn RepRing>) -> FreeProduct {
    FreeProduct {
        left,
        right,
        cache: Mutex::new(HashMap::new()),
    }
}

fn expect_free(x: &Label) -> &[(Side, Label)] {
    match x {
        Label::Free(seq) => seq,
        other => panic!("free product given non-free label {other:?}"),
    }
}

impl FreeProduct {
    pub fn factor(&self, side: Side) -> &dyn RepRing {
        match side {
            Side::Left => self.left.as_ref(),
            Side::Right => self.right.as_ref(),
        }
    }

    /// Canonical reduced label: trivial letters are dropped and adjacent
    /// letters of one factor are merged when their product is a single
    /// irreducible (as for group-like factors). Anything else is an error.
    pub fn reduce(&self, seq: Vec<(Side, Label)>) -> Result<Label, RepRingError> {
        let mut stack: Vec<(Side, Label)> = Vec::with_capacity(seq.len());
        for (side, letter) in seq {
            let ring = self.factor(side);
            if ring.is_trivial(&letter) {
                continue;
            }
            match stack.last() {
                Some((top_side, top)) if *top_side == side => {
                    let product = ring.decompose_pair(top, &letter);
                    let merged = product
                        .as_single()
                        .ok_or(RepRingError::NotReducible)?
                        .clone();
                    stack.pop();
                    if !ring.is_trivial(&merged) {
                        stack.push((side, merged));
                    }
                }
                _ => stack.push((side, letter)),
            }
        }
        Ok(Label::Free(stack))
    }

    /// Length-one label holding `letter` from the given factor.
    pub fn letter(&self, side: Side, letter: Label) -> Label {
        self.reduce(vec![(side, letter)])
            .expect("single letters reduce")
    }

    fn decompose_seq(&self, x: &[(Side, Label)], y: &[(Side, Label)]) -> Decomposition {
        let (Some((sa, a)), Some((sb, b))) = (x.last(), y.first()) else {
            let mut joined = x.to_vec();
            joined.extend_from_slice(y);
            return Decomposition::single(Label::Free(joined));
        };
        if sa != sb {
            let mut joined = x.to_vec();
            joined.extend_from_slice(y);
            return Decomposition::single(Label::Free(joined));
        }
        let key = (x.to_vec(), y.to_vec());
        if let Some(hit) = self.cache.lock().expect("poisoned").get(&key) {
            return hit.clone();
        }
        let ring = self.factor(*sa);
        let head = &x[..x.len() - 1];
        let tail = &y[1..];
        let mut out = Decomposition::new();
        for (e, m) in ring.decompose_pair(a, b).iter() {
            if ring.is_trivial(e) {
                out.add_scaled(&self.decompose_seq(head, tail), m);
            } else {
                let mut joined = head.to_vec();
                joined.push((*sa, e.clone()));
                joined.extend_from_slice(tail);
                out.add(Label::Free(joined), m.clone());
            }
        }
        self.cache
            .lock()
            .expect("poisoned")
            .insert(key, out.clone());
        out
    }
}

impl RepRing for FreeProduct {
    fn trivial(&self) -> Label {
        Label::Free(Vec::new())
    }

    fn dual(&self, x: &Label) -> Label {
        Label::Free(
            expect_free(x)
                .iter()
                .rev()
                .map(|(side, l)| (*side, self.factor(*side).dual(l)))
                .collect(),
        )
    }

    fn decompose_pair(&self, x: &Label, y: &Label) -> Decomposition {
        self.decompose_seq(expect_free(x), expect_free(y))
    }

    fn dim(&self, x: &Label) -> Option<Poly> {
        expect_free(x)
            .iter()
            .map(|(side, l)| self.factor(*side).dim(l))
            .product()
    }

    fn contains(&self, x: &Label) -> bool {
        let Label::Free(seq) = x else { return false };
        seq.iter().all(|(side, l)| {
            let ring = self.factor(*side);
            ring.contains(l) && !ring.is_trivial(l)
        }) && seq.windows(2).all(|w| w[0].0 != w[1].0)
    }

    fn token(&self, x: &Label) -> String {
        let seq = expect_free(x);
        if seq.is_empty() {
            return "1".into();
        }
        seq.iter()
            .map(|(side, l)| self.factor(*side).token(l))
            .collect::<Vec<_>>()
            .join(" | ")
    }
}

/// Direct product of two rings; labels are pairs.
pub struct DirectProduct {
    left: Arc<dyn RepRing>,
    right: Arc<dyn RepRing>,
}

pub fn direct_product(left: Arc<dyn RepRing>, right: Arc<dyn RepRing>) -> DirectProduct {
    DirectProduct { left, right }
}

fn expect_pair(x: &Label) -> (&Label, &Label) {
    match x {
        Label::Pair(a, b) => (a, b),
        other => panic!("direct product given non-pair label {other:?}"),
    }
}

impl RepRing for DirectProduct {
    fn trivial(&self) -> Label {
        Label::pair(self.left.trivial(), self.right.trivial())
    }

    fn dual(&self, x: &Label) -> Label {
        let (a, b) = expect_pair(x);
        Label::pair(self.left.dual(a), self.right.dual(b))
    }

    fn decompose_pair(&self, x: &Label, y: &Label) -> Decomposition {
        let (xa, xb) = expect_pair(x);
        let (ya, yb) = expect_pair(y);
        let da = self.left.decompose_pair(xa, ya);
        let db = self.right.decompose_pair(xb, yb);
        let mut out = Decomposition::new();
        for (r, m) in da.iter() {
            for (s, k) in db.iter() {
                out.add(Label::pair(r.clone(), s.clone()), m * k);
            }
        }
        out
    }

    fn dim(&self, x: &Label) -> Option<Poly> {
        let (a, b) = expect_pair(x);
        Some(&self.left.dim(a)? * &self.right.dim(b)?)
    }

    fn contains(&self, x: &Label) -> bool {
        matches!(x, Label::Pair(a, b) if self.left.contains(a) && self.right.contains(b))
    }

    fn token(&self, x: &Label) -> String {
        let (a, b) = expect_pair(x);
        format!("({}, {})", self.left.token(a), self.right.token(b))
    }
}

/// Embeds words over a complexified set into the free product of the source
/// ring with the circle ring, and compares the two ways of decomposing
/// products of such words.
pub struct ComplexifiedEmbedding {
    complexified: ComplexifiedSet,
    ring: FreeProduct,
}

/// Outcome of comparing both decompositions of one product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub x: Word,
    pub y: Word,
    /// Free fusion formula over the complexified set, mapped through the embedding.
    pub via_formula: Decomposition,
    /// Free-product recursion on the embedded labels.
    pub via_free_product: Decomposition,
}

impl CrosscheckReport {
    pub fn agrees(&self) -> bool {
        self.via_formula == self.via_free_product
    }
}

impl ComplexifiedEmbedding {
    pub fn new(complexified: ComplexifiedSet) -> Result<Self, RepRingError> {
        let base = FreeFusionRing::new(complexified.source().clone(), None)?;
        let ring = free_product(Arc::new(base), Arc::new(circle_ring()));
        Ok(Self { complexified, ring })
    }

    pub fn complexified(&self) -> &ComplexifiedSet {
        &self.complexified
    }

    /// The target ring `Rep(A) * Rep(C(S^1))`.
    pub fn ring(&self) -> &FreeProduct {
        &self.ring
    }

    /// Splits `w` into maximal connected subwords, writes each as
    /// `z^{i0} · base word · z^{i1}` and merges the circle letters between
    /// neighbouring subwords.
    pub fn embed_word(&self, w: &Word) -> Label {
        let mut seq: Vec<(Side, Label)> = Vec::new();
        let push_circle = |seq: &mut Vec<(Side, Label)>, k: i64| {
            if k == 0 {
                return;
            }
            if let Some((Side::Right, Label::Int(prev))) = seq.last_mut() {
                *prev += k;
                if *prev == 0 {
                    seq.pop();
                }
            } else {
                seq.push((Side::Right, Label::Int(k)));
            }
        };
        for &s in w.letters() {
            let ann = self.complexified.annotation(s);
            let (pre, suf) = ann.block.exponents();
            push_circle(&mut seq, pre as i64);
            match seq.last_mut() {
                Some((Side::Left, Label::Word(base))) => {
                    *base = base.concat(&Word::single(ann.base));
                }
                _ => seq.push((Side::Left, Label::Word(Word::single(ann.base)))),
            }
            push_circle(&mut seq, suf as i64);
        }
        Label::Free(seq)
    }

    fn embed_multiset(&self, elem: &RingElement) -> Decomposition {
        elem.terms()
            .map(|(w, c)| {
                let m = c.to_biguint().expect("basis products are non-negative");
                (self.embed_word(w), m)
            })
            .collect()
    }

    /// Decomposes `x ⊗ y` both ways.
    pub fn crosscheck(&self, x: &Word, y: &Word) -> CrosscheckReport {
        let formula = basis_product(self.complexified.set(), x, y);
        let via_formula = self.embed_multiset(&formula);
        let via_free_product = self
            .ring
            .decompose_pair(&self.embed_word(x), &self.embed_word(y));
        CrosscheckReport {
            x: x.clone(),
            y: y.clone(),
            via_formula,
            via_free_product,
        }
    }

    /// Every disagreeing pair among words of length at most `max_len`,
    /// together with the number of pairs checked.
    pub fn crosscheck_all(&self, max_len: usize) -> (usize, Vec<CrosscheckReport>) {
        let words = self.complexified.set().words_up_to(max_len);
        let mut failures = Vec::new();
        let mut checked = 0;
        for x in &words {
            for y in &words {
                checked += 1;
                let report = self.crosscheck(x, y);
                if !report.agrees() {
                    failures.push(report);
                }
            }
        }
        (checked, failures)
    }
}

/// Labels reachable from `generators` by at most `steps` tensor products
/// with generators (the generators themselves and the trivial label included).
pub fn reachable(ring: &dyn RepRing, generators: &[Label], steps: usize) -> BTreeSet<Label> {
    let mut seen: BTreeSet<Label> = generators.iter().cloned().collect();
    seen.insert(ring.trivial());
    let mut frontier: Vec<Label> = generators.to_vec();
    for _ in 0..steps {
        let mut next = Vec::new();
        for x in &frontier {
            for g in generators {
                for r in ring.decompose_pair(x, g).labels() {
                    if seen.insert(r.clone()) {
                        next.push(r.clone());
                    }
                }
            }
        }
        frontier = next;
    }
    seen
}

/// Checks the ring axioms on the given labels and returns a description of
/// every violation: involutive dual, unit laws, trivial multiplicity
/// `[y = dual(x)]`, and dimension conservation when dimensions exist.
pub fn invariant_violations(ring: &dyn RepRing, labels: &[Label]) -> Vec<String> {
    let mut out = Vec::new();
    let one = ring.trivial();
    if ring.dual(&one) != one {
        out.push("dual(trivial) != trivial".into());
    }
    for x in labels {
        let dx = ring.dual(x);
        if ring.dual(&dx) != *x {
            out.push(format!("dual not involutive at {}", ring.render(x)));
        }
        if ring.decompose_pair(&one, x) != Decomposition::single(x.clone())
            || ring.decompose_pair(x, &one) != Decomposition::single(x.clone())
        {
            out.push(format!("trivial is not a unit at {}", ring.render(x)));
        }
        if ring.dim(x) != ring.dim(&dx) {
            out.push(format!("dim(dual) != dim at {}", ring.render(x)));
        }
        for y in labels {
            let d = ring.decompose_pair(x, y);
            let expected = if *y == dx {
                BigUint::one()
            } else {
                BigUint::zero()
            };
            if d.multiplicity(&one) != expected {
                out.push(format!(
                    "trivial multiplicity wrong in {} ⊗ {}",
                    ring.render(x),
                    ring.render(y)
                ));
            }
            if let (Some(dxp), Some(dyp), Some(total)) =
                (ring.dim(x), ring.dim(y), ring.total_dim(&d))
            {
                if total != &dxp * &dyp {
                    out.push(format!(
                        "dimension not conserved in {} ⊗ {}",
                        ring.render(x),
                        ring.render(y)
                    ));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexify::complexify;
    use crate::words::standard;

    fn ao_ring() -> FreeFusionRing {
        let set = standard::ao();
        let d = DimensionAssignment::new(&set, vec![Poly::n()]).unwrap();
        ring_from_fusion_set(set, d).unwrap()
    }

    fn ah_ring() -> FreeFusionRing {
        let set = standard::ah();
        let d = DimensionAssignment::new(&set, vec![Poly::n(), Poly::n_plus(-1)]).unwrap();
        ring_from_fusion_set(set, d).unwrap()
    }

    fn word(ring: &FreeFusionRing, t: &str) -> Label {
        ring.word_label(t).unwrap()
    }

    fn multiset(labels: &[Label]) -> Decomposition {
        labels.iter().map(|l| (l.clone(), BigUint::one())).collect()
    }

    #[test]
    fn free_fusion_ring_examples() {
        let ao = ao_ring();
        assert_eq!(
            ao.decompose_pair(&word(&ao, "s"), &word(&ao, "s")),
            multiset(&[word(&ao, "s.s"), ao.trivial()])
        );
        let ah = ah_ring();
        assert_eq!(
            ah.decompose_pair(&word(&ah, "u"), &word(&ah, "u")),
            multiset(&[word(&ah, "u.u"), word(&ah, "p"), ah.trivial()])
        );
        let w = word(&ah, "u.p");
        assert_eq!(
            ah.decompose_pair(&ah.trivial(), &w),
            Decomposition::single(w.clone())
        );
        assert_eq!(ah.render(&w), "[u.p]");
        assert_eq!(ah.render(&ah.trivial()), "[]");
    }

    #[test]
    fn rejects_invalid_fusion_set() {
        let bad = FusionSet::parse("letters: a b\nconj: a=a b=b\nfusion: a.a=b\n").unwrap();
        assert!(matches!(
            FreeFusionRing::new(bad, None),
            Err(RepRingError::InvalidFusionSet(_))
        ));
    }

    #[test]
    fn group_rings() {
        let c = circle_ring();
        assert_eq!(
            c.decompose_pair(&Label::Int(1), &Label::Int(-1)),
            Decomposition::single(Label::Int(0))
        );
        assert_eq!(c.dual(&Label::Int(3)), Label::Int(-3));
        let g = cyclic2_ring();
        assert_eq!(
            g.decompose_pair(&Label::Int(1), &Label::Int(1)),
            Decomposition::single(Label::Int(0))
        );
        assert_eq!(g.render(&Label::Int(1)), "[g^1]");
        assert_eq!(c.render(&Label::Int(-2)), "[z^-2]");
    }

    #[test]
    fn free_product_boundary_cases() {
        let ao = Arc::new(ao_ring());
        let fp = free_product(ao.clone(), Arc::new(circle_ring()));
        let s = Label::Word(standard::ao().parse_word("s").unwrap());
        let ss = Label::Word(standard::ao().parse_word("s.s").unwrap());

        // different factors concatenate
        let a = fp.letter(Side::Left, s.clone());
        let z = fp.letter(Side::Right, Label::Int(1));
        assert_eq!(
            fp.decompose_pair(&a, &z),
            Decomposition::single(Label::Free(vec![
                (Side::Left, s.clone()),
                (Side::Right, Label::Int(1))
            ]))
        );

        // (s, z) ⊗ (z^-1, s): circle letters cancel, recurse on s ⊗ s
        let x = fp
            .reduce(vec![(Side::Left, s.clone()), (Side::Right, Label::Int(1))])
            .unwrap();
        let y = fp
            .reduce(vec![(Side::Right, Label::Int(-1)), (Side::Left, s.clone())])
            .unwrap();
        assert_eq!(
            fp.decompose_pair(&x, &y),
            multiset(&[fp.letter(Side::Left, ss.clone()), fp.trivial()])
        );

        // α ⊗ dual(α) inside one factor
        assert_eq!(
            fp.decompose_pair(&a, &fp.dual(&a)),
            multiset(&[fp.letter(Side::Left, ss), fp.trivial()])
        );
        assert_eq!(fp.render(&x), "[s | z^1]");
    }

    #[test]
    fn free_product_reduce() {
        let fp = free_product(Arc::new(ao_ring()), Arc::new(circle_ring()));
        let s = Label::Word(standard::ao().parse_word("s").unwrap());
        let reduced = fp
            .reduce(vec![
                (Side::Right, Label::Int(1)),
                (Side::Right, Label::Int(-1)),
                (Side::Left, s.clone()),
                (Side::Right, Label::Int(0)),
                (Side::Right, Label::Int(2)),
                (Side::Right, Label::Int(1)),
            ])
            .unwrap();
        assert_eq!(
            reduced,
            Label::Free(vec![(Side::Left, s.clone()), (Side::Right, Label::Int(3))])
        );
        assert_eq!(
            fp.reduce(vec![(Side::Left, s.clone()), (Side::Left, s)]),
            Err(RepRingError::NotReducible)
        );
    }

    #[test]
    fn direct_product_componentwise() {
        let as_set = standard::as_set();
        let d = DimensionAssignment::new(&as_set, vec![Poly::n_plus(-1)]).unwrap();
        let ring = direct_product(
            Arc::new(ring_from_fusion_set(as_set.clone(), d).unwrap()),
            Arc::new(cyclic2_ring()),
        );
        let one_g = Label::pair(Label::Word(Word::empty()), Label::Int(1));
        assert_eq!(
            ring.decompose_pair(&one_g, &one_g),
            Decomposition::single(ring.trivial())
        );
        let p = Label::pair(Label::Word(as_set.parse_word("p").unwrap()), Label::Int(1));
        assert_eq!(ring.dual(&p), p);
        assert_eq!(ring.render(&p), "[(p, g^1)]");
        // (p,1) ⊗ (p,1) = {p·p products} × {0}
        let got = ring.decompose_pair(&p, &p);
        let pp = as_set.parse_word("p.p").unwrap();
        let pw = as_set.parse_word("p").unwrap();
        let expected = multiset(&[
            Label::pair(Label::Word(pp), Label::Int(0)),
            Label::pair(Label::Word(pw), Label::Int(0)),
            Label::pair(Label::Word(Word::empty()), Label::Int(0)),
        ]);
        assert_eq!(got, expected);
        assert!(invariant_violations(&ring, &[p, one_g]).is_empty());
    }

    #[test]
    fn embed_word_examples() {
        let c = complexify(&standard::ah()).unwrap();
        let set = c.set().clone();
        let emb = ComplexifiedEmbedding::new(c).unwrap();
        let src = standard::ah();
        let u = Label::Word(src.parse_word("u").unwrap());
        let uu = Label::Word(src.parse_word("u.u").unwrap());
        let w = |t: &str| set.parse_word(t).unwrap();

        assert_eq!(
            emb.embed_word(&w("u_odd1")),
            Label::Free(vec![(Side::Left, u.clone()), (Side::Right, Label::Int(1))])
        );
        assert_eq!(
            emb.embed_word(&w("u_odd1.u_odd1")),
            Label::Free(vec![
                (Side::Left, u.clone()),
                (Side::Right, Label::Int(1)),
                (Side::Left, u.clone()),
                (Side::Right, Label::Int(1)),
            ])
        );
        assert_eq!(
            emb.embed_word(&w("u_odd1.u_odd2")),
            Label::Free(vec![(Side::Left, uu)])
        );
        assert_eq!(emb.embed_word(&Word::empty()), emb.ring().trivial());
        assert_eq!(
            emb.ring().render(&emb.embed_word(&w("p_even2.u_odd2"))),
            "[z^-1 | p.u]"
        );
    }

    #[test]
    fn crosscheck_examples() {
        let c = complexify(&standard::ah()).unwrap();
        let set = c.set().clone();
        let emb = ComplexifiedEmbedding::new(c).unwrap();
        let w = |t: &str| set.parse_word(t).unwrap();
        let report = emb.crosscheck(&w("u_odd1"), &w("u_odd2"));
        assert!(report.agrees());
        let expected = multiset(&[
            emb.embed_word(&w("u_odd1.u_odd2")),
            emb.embed_word(&w("p_even1")),
            emb.ring().trivial(),
        ]);
        assert_eq!(report.via_formula, expected);

        let y = w("u_odd1.p_even2");
        let trivial_left = emb.crosscheck(&Word::empty(), &y);
        assert!(trivial_left.agrees());
        assert_eq!(
            trivial_left.via_free_product,
            Decomposition::single(emb.embed_word(&y))
        );

        let co = complexify(&standard::ao()).unwrap();
        let oset = co.set().clone();
        let emb_o = ComplexifiedEmbedding::new(co).unwrap();
        let s1 = oset.parse_word("s_odd1").unwrap();
        let report = emb_o.crosscheck(&s1, &s1);
        assert!(report.agrees());
        assert_eq!(
            report.via_free_product,
            Decomposition::single(emb_o.embed_word(&s1.concat(&s1)))
        );
    }

    #[test]
    fn ring_invariants_on_reachable_labels() {
        let ah = ah_ring();
        let gens = vec![word(&ah, "u"), word(&ah, "p")];
        let labels: Vec<_> = reachable(&ah, &gens, 2).into_iter().collect();
        assert!(invariant_violations(&ah, &labels).is_empty());
    }
}
