//! Fusion sets and the induced fusion and conjugation on words.
//!
//! A fusion set is a finite alphabet with a partial, associative fusion
//! `s·t` (absence meaning the empty set), an involutive conjugation, and
//! optionally a parity grading. Words over the alphabet form the free monoid
//! on which the fusion ring in [`crate::fusion_ring`] is built.
//!
//! The text format is line oriented, `#` starts a comment:
//!
//! ```text
//! letters: u p
//! conj: u=u p=p
//! fusion: u.u=p u.p=u p.u=u p.p=p
//! parity: u=odd p=even
//! ```

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Index of a letter inside its [`FusionSet`]; the index is the declared order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u16);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl std::ops::Add for Parity {
    type Output = Parity;

    fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl Parity {
    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// A word over a fusion set. The empty word is the monoid unit.
///
/// Words order by length first, then lexicographically by declared letter
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn single(letter: Letter) -> Self {
        Self(vec![letter])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Subword `[start, end)`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate letter `{letter}`")]
    DuplicateLetter { line: usize, letter: String },
    #[error("line {line}: unknown letter `{letter}`")]
    UnknownLetter { line: usize, letter: String },
    #[error("line {line}: `{key}` defined twice")]
    Redefined { line: usize, key: String },
    #[error("no `letters:` line")]
    NoLetters,
    #[error("letter `{0}` has no conjugate")]
    MissingConjugate(String),
    #[error("parity is all-or-none, but letter `{0}` has none")]
    MissingParity(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("fusion of words needs non-empty operands")]
    EmptyOperand,
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("malformed word `{0}`")]
    Malformed(String),
}

/// A finite fusion set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionSet {
    names: Vec<String>,
    conj: Vec<Letter>,
    /// Row-major `len × len` table; `None` encodes the empty fusion.
    fusion: Vec<Option<Letter>>,
    parity: Option<Vec<Parity>>,
}

fn valid_token(tok: &str) -> bool {
    !tok.is_empty() && tok.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl FusionSet {
    /// Builds a fusion set from raw tables. Nothing beyond table shapes is
    /// checked; see [`validate_fusion_set`].
    pub fn from_tables(
        names: Vec<String>,
        conj: Vec<Letter>,
        fusion: Vec<Option<Letter>>,
        parity: Option<Vec<Parity>>,
    ) -> Self {
        let k = names.len();
        assert!(k <= u16::MAX as usize, "alphabet too large");
        assert_eq!(conj.len(), k, "conjugation table size");
        assert_eq!(fusion.len(), k * k, "fusion table size");
        if let Some(p) = &parity {
            assert_eq!(p.len(), k, "parity table size");
        }
        let in_range = |l: &Letter| l.index() < k;
        assert!(conj.iter().all(in_range), "conjugate out of range");
        assert!(fusion.iter().flatten().all(in_range), "fusion out of range");
        Self {
            names,
            conj,
            fusion,
            parity,
        }
    }

    /// Parses the line-oriented fusion-set format. The result is not validated.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut names: Option<Vec<String>> = None;
        let mut index: HashMap<String, Letter> = HashMap::new();
        let mut conj: Vec<Option<Letter>> = Vec::new();
        let mut fusion: Vec<Option<Letter>> = Vec::new();
        let mut fusion_seen: Vec<bool> = Vec::new();
        let mut parity: Vec<Option<Parity>> = Vec::new();
        let mut any_parity = false;

        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let syntax = |message: String| ParseError::Syntax { line, message };
            let (key, rest) = content
                .split_once(':')
                .ok_or_else(|| syntax(format!("expected `key: ...`, got `{content}`")))?;
            let key = key.trim();
            let items = rest.split_whitespace();

            if key == "letters" {
                if names.is_some() {
                    return Err(ParseError::Redefined {
                        line,
                        key: "letters".into(),
                    });
                }
                let mut list = Vec::new();
                for tok in items {
                    if !valid_token(tok) {
                        return Err(syntax(format!("invalid letter token `{tok}`")));
                    }
                    if index.contains_key(tok) {
                        return Err(ParseError::DuplicateLetter {
                            line,
                            letter: tok.into(),
                        });
                    }
                    index.insert(tok.to_string(), Letter(list.len() as u16));
                    list.push(tok.to_string());
                }
                if list.is_empty() {
                    return Err(syntax("empty letter list".into()));
                }
                let k = list.len();
                conj = vec![None; k];
                fusion = vec![None; k * k];
                fusion_seen = vec![false; k * k];
                parity = vec![None; k];
                names = Some(list);
                continue;
            }

            let k = match &names {
                Some(n) => n.len(),
                None => return Err(syntax(format!("`{key}` before `letters:`"))),
            };
            let lookup = |tok: &str| -> Result<Letter, ParseError> {
                if !valid_token(tok) {
                    return Err(ParseError::Syntax {
                        line,
                        message: format!("invalid token `{tok}`"),
                    });
                }
                index
                    .get(tok)
                    .copied()
                    .ok_or_else(|| ParseError::UnknownLetter {
                        line,
                        letter: tok.into(),
                    })
            };

            for item in items {
                let (lhs, rhs) = item
                    .split_once('=')
                    .ok_or_else(|| syntax(format!("expected `lhs=rhs`, got `{item}`")))?;
                match key {
                    "conj" => {
                        let a = lookup(lhs)?;
                        let b = lookup(rhs)?;
                        if conj[a.index()].is_some() {
                            return Err(ParseError::Redefined {
                                line,
                                key: format!("conj {lhs}"),
                            });
                        }
                        conj[a.index()] = Some(b);
                    }
                    "fusion" => {
                        let (l, r) = lhs
                            .split_once('.')
                            .ok_or_else(|| syntax(format!("expected `a.b`, got `{lhs}`")))?;
                        let a = lookup(l)?;
                        let b = lookup(r)?;
                        let c = lookup(rhs)?;
                        let slot = a.index() * k + b.index();
                        if fusion_seen[slot] {
                            return Err(ParseError::Redefined {
                                line,
                                key: format!("fusion {lhs}"),
                            });
                        }
                        fusion_seen[slot] = true;
                        fusion[slot] = Some(c);
                    }
                    "parity" => {
                        let a = lookup(lhs)?;
                        let p = match rhs {
                            "odd" => Parity::Odd,
                            "even" => Parity::Even,
                            other => {
                                return Err(syntax(format!(
                                    "parity must be odd|even, got `{other}`"
                                )))
                            }
                        };
                        if parity[a.index()].is_some() {
                            return Err(ParseError::Redefined {
                                line,
                                key: format!("parity {lhs}"),
                            });
                        }
                        parity[a.index()] = Some(p);
                        any_parity = true;
                    }
                    other => return Err(syntax(format!("unknown key `{other}`"))),
                }
            }
        }

        let names = names.ok_or(ParseError::NoLetters)?;
        // A pair `a=b` also determines `b`'s conjugate unless stated explicitly.
        let explicit = conj.clone();
        for (i, c) in explicit.iter().enumerate() {
            if let Some(b) = c {
                if conj[b.index()].is_none() {
                    conj[b.index()] = Some(Letter(i as u16));
                }
            }
        }
        let conj = conj
            .into_iter()
            .enumerate()
            .map(|(i, c)| c.ok_or_else(|| ParseError::MissingConjugate(names[i].clone())))
            .collect::<Result<Vec<_>, _>>()?;
        let parity = if any_parity {
            Some(
                parity
                    .into_iter()
                    .enumerate()
                    .map(|(i, p)| p.ok_or_else(|| ParseError::MissingParity(names[i].clone())))
                    .collect::<Result<Vec<_>, _>>()?,
            )
        } else {
            None
        };
        Ok(Self::from_tables(names, conj, fusion, parity))
    }

    /// Serializes back to the text format.
    pub fn to_source(&self) -> String {
        let mut out = String::new();
        out.push_str("letters:");
        for n in &self.names {
            out.push(' ');
            out.push_str(n);
        }
        out.push_str("\nconj:");
        for s in self.letters() {
            out.push_str(&format!(" {}={}", self.name(s), self.name(self.conj(s))));
        }
        out.push_str("\nfusion:");
        for a in self.letters() {
            for b in self.letters() {
                if let Some(c) = self.fuse(a, b) {
                    out.push_str(&format!(
                        " {}.{}={}",
                        self.name(a),
                        self.name(b),
                        self.name(c)
                    ));
                }
            }
        }
        out.push('\n');
        if let Some(p) = &self.parity {
            out.push_str("parity:");
            for s in self.letters() {
                out.push_str(&format!(" {}={}", self.name(s), p[s.index()].as_str()));
            }
            out.push('\n');
        }
        out
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + Clone {
        (0..self.names.len() as u16).map(Letter)
    }

    pub fn name(&self, s: Letter) -> &str {
        &self.names[s.index()]
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Letter(i as u16))
    }

    pub fn conj(&self, s: Letter) -> Letter {
        self.conj[s.index()]
    }

    /// Letter fusion; `None` is the empty set.
    pub fn fuse(&self, a: Letter, b: Letter) -> Option<Letter> {
        self.fusion[a.index() * self.len() + b.index()]
    }

    pub fn parity(&self, s: Letter) -> Option<Parity> {
        self.parity.as_ref().map(|p| p[s.index()])
    }

    pub fn has_parity(&self) -> bool {
        self.parity.is_some()
    }

    /// Parity of a word, the sum of its letters' parities.
    pub fn word_parity(&self, w: &Word) -> Option<Parity> {
        let p = self.parity.as_ref()?;
        Some(
            w.letters()
                .iter()
                .fold(Parity::Even, |acc, s| acc + p[s.index()]),
        )
    }

    /// Parses a dot-separated word such as `u.p.u`. The empty string is the
    /// empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word, WordError> {
        if text.is_empty() {
            return Ok(Word::empty());
        }
        text.split('.')
            .map(|tok| {
                if tok.is_empty() {
                    return Err(WordError::Malformed(text.to_string()));
                }
                self.letter(tok)
                    .ok_or_else(|| WordError::UnknownLetter(tok.to_string()))
            })
            .collect()
    }

    /// Dot-separated rendering; the empty word renders as the empty string.
    pub fn render_word(&self, w: &Word) -> String {
        w.letters()
            .iter()
            .map(|&s| self.name(s))
            .collect::<Vec<_>>()
            .join(".")
    }

    /// All words of exactly `len` letters, in word order.
    pub fn words_of_len(&self, len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .iter()
                .flat_map(|w| self.letters().map(move |s| w.concat(&Word::single(s))))
                .collect();
        }
        out
    }

    /// All words of length at most `max_len`, in word order.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        (0..=max_len).flat_map(|l| self.words_of_len(l)).collect()
    }
}

/// Fusion of non-empty words: the boundary letters are fused, `None` when
/// that fusion is empty.
pub fn word_fuse(set: &FusionSet, v: &Word, w: &Word) -> Result<Option<Word>, WordError> {
    let (Some(a), Some(b)) = (v.last(), w.first()) else {
        return Err(WordError::EmptyOperand);
    };
    Ok(set.fuse(a, b).map(|c| {
        let mut letters = Vec::with_capacity(v.len() + w.len() - 1);
        letters.extend_from_slice(&v.letters()[..v.len() - 1]);
        letters.push(c);
        letters.extend_from_slice(&w.letters()[1..]);
        Word(letters)
    }))
}

/// Reversal with letterwise conjugation.
pub fn word_conj(set: &FusionSet, w: &Word) -> Word {
    w.letters().iter().rev().map(|&s| set.conj(s)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `conj(conj(s)) != s`.
    NotInvolutive(Letter),
    /// `s1·s2 = conj(s3)` and `s2·s3 = conj(s1)` disagree.
    NotCompatible(Letter, Letter, Letter),
    /// `(s1·s2)·s3 != s1·(s2·s3)`.
    NotAssociative(Letter, Letter, Letter),
    /// `parity(conj(s)) != parity(s)`.
    ParityNotConjInvariant(Letter),
    /// `parity(s·t) != parity(s) + parity(t)`.
    ParityNotAdditive(Letter, Letter),
}

impl Violation {
    pub fn render(&self, set: &FusionSet) -> String {
        let n = |s: &Letter| set.name(*s).to_string();
        match self {
            Violation::NotInvolutive(s) => format!("conjugation not involutive at ({})", n(s)),
            Violation::NotCompatible(a, b, c) => format!(
                "fusion/conjugation incompatible at ({}, {}, {})",
                n(a),
                n(b),
                n(c)
            ),
            Violation::NotAssociative(a, b, c) => {
                format!("fusion not associative at ({}, {}, {})", n(a), n(b), n(c))
            }
            Violation::ParityNotConjInvariant(s) => {
                format!("parity not conjugation invariant at ({})", n(s))
            }
            Violation::ParityNotAdditive(a, b) => {
                format!("parity not additive under fusion at ({}, {})", n(a), n(b))
            }
        }
    }
}

/// Every violated axiom instance, each with a witness. Empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn render(&self, set: &FusionSet) -> Vec<String> {
        self.violations.iter().map(|v| v.render(set)).collect()
    }
}

/// Checks involutivity, compatibility and associativity over all letters,
/// pairs and triples.
pub fn validate_fusion_set(set: &FusionSet) -> ValidationReport {
    let mut violations = Vec::new();
    for s in set.letters() {
        if set.conj(set.conj(s)) != s {
            violations.push(Violation::NotInvolutive(s));
        }
    }
    for a in set.letters() {
        for b in set.letters() {
            for c in set.letters() {
                let left = set.fuse(a, b) == Some(set.conj(c));
                let right = set.fuse(b, c) == Some(set.conj(a));
                if left != right {
                    violations.push(Violation::NotCompatible(a, b, c));
                }
            }
        }
    }
    for a in set.letters() {
        for b in set.letters() {
            for c in set.letters() {
                let lhs = set.fuse(a, b).and_then(|ab| set.fuse(ab, c));
                let rhs = set.fuse(b, c).and_then(|bc| set.fuse(a, bc));
                if lhs != rhs {
                    violations.push(Violation::NotAssociative(a, b, c));
                }
            }
        }
    }
    ValidationReport { violations }
}

/// The standard fusion sets used throughout the crate.
pub mod standard {
    use super::FusionSet;

    /// One self-conjugate letter with empty self-fusion.
    pub const AO: &str = "letters: s\nconj: s=s\nparity: s=odd\n";
    /// One self-conjugate idempotent letter.
    pub const AS: &str = "letters: p\nconj: p=p\nfusion: p.p=p\n";
    /// `u·u = p·p = p`, `u·p = p·u = u`, trivial conjugation.
    pub const AH: &str =
        "letters: u p\nconj: u=u p=p\nfusion: u.u=p u.p=u p.u=u p.p=p\nparity: u=odd p=even\n";

    pub fn ao() -> FusionSet {
        FusionSet::parse(AO).expect("builtin")
    }

    pub fn as_set() -> FusionSet {
        FusionSet::parse(AS).expect("builtin")
    }

    pub fn ah() -> FusionSet {
        FusionSet::parse(AH).expect("builtin")
    }
}

impl fmt::Display for FusionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_source())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn invalid_pair() -> FusionSet {
        FusionSet::parse("letters: a b\nconj: a=a b=b\nfusion: a.a=b\n").unwrap()
    }

    #[test]
    fn parses_ah() {
        let s = standard::ah();
        let u = s.letter("u").unwrap();
        let p = s.letter("p").unwrap();
        assert_eq!(s.fuse(u, u), Some(p));
        assert_eq!(s.fuse(u, p), Some(u));
        assert_eq!(s.fuse(p, u), Some(u));
        assert_eq!(s.fuse(p, p), Some(p));
        assert_eq!(s.conj(u), u);
        assert_eq!(s.parity(u), Some(Parity::Odd));
    }

    #[test]
    fn parses_ao_with_empty_fusion() {
        let s = FusionSet::parse("letters: s\nconj: s=s\n").unwrap();
        let l = s.letter("s").unwrap();
        assert_eq!(s.fuse(l, l), None);
        assert!(!s.has_parity());
    }

    #[test]
    fn unknown_letter_is_named() {
        let err = FusionSet::parse("letters: u p\nconj: u=u p=p\nfusion: u.u=x\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::UnknownLetter {
                line: 3,
                letter: "x".into()
            }
        );
        assert!(err.to_string().contains("`x`"));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            FusionSet::parse("letters: a a\n"),
            Err(ParseError::DuplicateLetter { line: 1, .. })
        ));
        assert!(matches!(
            FusionSet::parse("letters: a b\nconj: a=a\n"),
            Err(ParseError::MissingConjugate(l)) if l == "b"
        ));
        assert!(matches!(
            FusionSet::parse("letters: a b\nconj: a=b\nparity: a=odd\n"),
            Err(ParseError::MissingParity(l)) if l == "b"
        ));
        assert!(matches!(
            FusionSet::parse("# nothing\n"),
            Err(ParseError::NoLetters)
        ));
        assert!(matches!(
            FusionSet::parse("letters: a\nconj a=a\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            FusionSet::parse("letters: a\nconj: a=a\nfusion: a.a=a a.a=a\n"),
            Err(ParseError::Redefined { line: 3, .. })
        ));
        assert!(matches!(
            FusionSet::parse("letters: a.b\n"),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn conj_pair_fills_partner() {
        let s = FusionSet::parse("letters: u v\nconj: u=v\n").unwrap();
        let u = s.letter("u").unwrap();
        let v = s.letter("v").unwrap();
        assert_eq!(s.conj(u), v);
        assert_eq!(s.conj(v), u);
    }

    #[test]
    fn source_round_trip() {
        for s in [
            standard::ao(),
            standard::as_set(),
            standard::ah(),
            invalid_pair(),
        ] {
            assert_eq!(FusionSet::parse(&s.to_source()).unwrap(), s);
        }
    }

    #[test]
    fn standard_sets_are_valid() {
        assert!(validate_fusion_set(&standard::ah()).is_valid());
        assert!(validate_fusion_set(&standard::ao()).is_valid());
        assert!(validate_fusion_set(&standard::as_set()).is_valid());
    }

    #[test]
    fn invalid_set_reports_compatibility_witness() {
        let s = invalid_pair();
        let a = s.letter("a").unwrap();
        let b = s.letter("b").unwrap();
        let report = validate_fusion_set(&s);
        assert!(!report.is_valid());
        assert!(report
            .violations
            .contains(&Violation::NotCompatible(a, a, b)));
        assert!(report.render(&s).iter().any(|l| l.contains("(a, a, b)")));
    }

    #[test]
    fn non_involutive_conjugation_reported() {
        let s = FusionSet::parse("letters: a b c\nconj: a=b b=c c=a\n").unwrap();
        let report = validate_fusion_set(&s);
        assert_eq!(
            report
                .violations
                .iter()
                .filter(|v| matches!(v, Violation::NotInvolutive(_)))
                .count(),
            3
        );
    }

    #[test]
    fn word_fusion_examples() {
        let s = standard::ah();
        let w = |t: &str| s.parse_word(t).unwrap();
        assert_eq!(word_fuse(&s, &w("u.p"), &w("u")).unwrap(), Some(w("u.u")));
        assert_eq!(word_fuse(&s, &w("u"), &w("u")).unwrap(), Some(w("p")));
        let o = standard::ao();
        let ws = o.parse_word("s").unwrap();
        assert_eq!(word_fuse(&o, &ws, &ws).unwrap(), None);
        assert_eq!(
            word_fuse(&s, &Word::empty(), &w("u")),
            Err(WordError::EmptyOperand)
        );
    }

    #[test]
    fn word_conjugation_examples() {
        let s = standard::ah();
        assert_eq!(
            word_conj(&s, &s.parse_word("u.p").unwrap()),
            s.parse_word("p.u").unwrap()
        );
        assert_eq!(word_conj(&s, &Word::empty()), Word::empty());
    }

    #[test]
    fn word_order_is_length_then_lex() {
        let s = standard::ah();
        let mut words = [
            s.parse_word("p").unwrap(),
            s.parse_word("u.u").unwrap(),
            Word::empty(),
            s.parse_word("u").unwrap(),
            s.parse_word("p.u").unwrap(),
        ];
        words.sort();
        let rendered: Vec<_> = words.iter().map(|w| s.render_word(w)).collect();
        assert_eq!(rendered, ["", "u", "p", "u.u", "p.u"]);
    }

    #[test]
    fn parse_word_errors() {
        let s = standard::ah();
        assert_eq!(
            s.parse_word("u.x"),
            Err(WordError::UnknownLetter("x".into()))
        );
        assert_eq!(
            s.parse_word("u..p"),
            Err(WordError::Malformed("u..p".into()))
        );
    }
}
