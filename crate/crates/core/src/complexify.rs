//! Free complexification of a parity-graded fusion set.
//!
//! Each letter of the source set is doubled into two blocks. Blocks carry a
//! decoration by the circle generator `z`:
//!
//! | block   | reading      | (prefix, suffix) exponent |
//! |---------|--------------|---------------------------|
//! | `even1` | `s`          | `(0, 0)`                  |
//! | `even2` | `z*·s·z`     | `(-1, +1)`                |
//! | `odd1`  | `s·z`        | `(0, +1)`                 |
//! | `odd2`  | `z*·s`       | `(-1, 0)`                 |
//!
//! Two letters fuse only when the suffix exponent of the left one cancels the
//! prefix exponent of the right one; the result carries the outer exponents
//! and the fusion of the base letters.

use std::fmt;

use thiserror::Error;

use crate::fusion_ring::DimensionAssignment;
use crate::words::{validate_fusion_set, FusionSet, Letter, Parity, ValidationReport, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    Even1,
    Even2,
    Odd1,
    Odd2,
}

impl Block {
    pub const ALL: [Block; 4] = [Block::Even1, Block::Even2, Block::Odd1, Block::Odd2];

    /// `(prefix, suffix)` exponents of `z`.
    pub fn exponents(self) -> (i8, i8) {
        match self {
            Block::Even1 => (0, 0),
            Block::Even2 => (-1, 1),
            Block::Odd1 => (0, 1),
            Block::Odd2 => (-1, 0),
        }
    }

    pub fn from_exponents(prefix: i8, suffix: i8) -> Option<Block> {
        match (prefix, suffix) {
            (0, 0) => Some(Block::Even1),
            (-1, 1) => Some(Block::Even2),
            (0, 1) => Some(Block::Odd1),
            (-1, 0) => Some(Block::Odd2),
            _ => None,
        }
    }

    pub fn parity(self) -> Parity {
        match self {
            Block::Even1 | Block::Even2 => Parity::Even,
            Block::Odd1 | Block::Odd2 => Parity::Odd,
        }
    }

    pub fn prefix(self) -> i8 {
        self.exponents().0
    }

    pub fn suffix(self) -> i8 {
        self.exponents().1
    }

    /// Whether `self` followed by `next` cancels the inner decoration.
    pub fn fits(self, next: Block) -> bool {
        self.suffix() + next.prefix() == 0
    }

    /// Block of a fusion `self · next`, ignoring the base letters.
    pub fn fuse(self, next: Block) -> Option<Block> {
        if self.fits(next) {
            Block::from_exponents(self.prefix(), next.suffix())
        } else {
            None
        }
    }

    pub fn conj(self) -> Block {
        match self {
            Block::Odd1 => Block::Odd2,
            Block::Odd2 => Block::Odd1,
            b => b,
        }
    }

    pub fn blocks_for(parity: Parity) -> [Block; 2] {
        match parity {
            Parity::Even => [Block::Even1, Block::Even2],
            Parity::Odd => [Block::Odd1, Block::Odd2],
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Block::Even1 => "even1",
            Block::Even2 => "even2",
            Block::Odd1 => "odd1",
            Block::Odd2 => "odd2",
        }
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AnnotatedLetter {
    pub base: Letter,
    pub block: Block,
}

#[derive(Debug, Error)]
pub enum ComplexifyError {
    #[error("fusion set has no parity map")]
    MissingParity,
    #[error("fusion set is invalid: {0}")]
    Invalid(String),
    #[error("parity is not a grading: {0}")]
    BadParity(String),
}

/// Checks that the parity map is a grading: conjugation invariant and
/// additive under every defined fusion.
pub fn validate_parity(set: &FusionSet) -> Result<ValidationReport, ComplexifyError> {
    if !set.has_parity() {
        return Err(ComplexifyError::MissingParity);
    }
    let par = |s| set.parity(s).expect("checked");
    let mut violations = Vec::new();
    for s in set.letters() {
        if par(s) != par(set.conj(s)) {
            violations.push(Violation::ParityNotConjInvariant(s));
        }
    }
    for a in set.letters() {
        for b in set.letters() {
            if let Some(c) = set.fuse(a, b) {
                if par(c) != par(a) + par(b) {
                    violations.push(Violation::ParityNotAdditive(a, b));
                }
            }
        }
    }
    Ok(ValidationReport { violations })
}

/// The complexified set together with its source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexifiedSet {
    set: FusionSet,
    source: FusionSet,
    annotations: Vec<AnnotatedLetter>,
}

impl ComplexifiedSet {
    pub fn set(&self) -> &FusionSet {
        &self.set
    }

    pub fn source(&self) -> &FusionSet {
        &self.source
    }

    pub fn annotation(&self, s: Letter) -> AnnotatedLetter {
        self.annotations[s.index()]
    }

    pub fn letter_for(&self, base: Letter, block: Block) -> Option<Letter> {
        self.annotations
            .iter()
            .position(|a| a.base == base && a.block == block)
            .map(|i| Letter(i as u16))
    }

    /// Dimensions lifted from the source: every block copy of `s` has `d(s)`.
    pub fn lift_dimensions(&self, d: &DimensionAssignment) -> DimensionAssignment {
        let dims = self
            .annotations
            .iter()
            .map(|a| d.of(a.base).clone())
            .collect();
        DimensionAssignment::new(&self.set, dims).expect("conjugation preserves base dims")
    }
}

/// Builds the free complexification. Letters are named `<base>_<block>` and
/// ordered by base letter, then block.
pub fn complexify(source: &FusionSet) -> Result<ComplexifiedSet, ComplexifyError> {
    let base_report = validate_fusion_set(source);
    if !base_report.is_valid() {
        return Err(ComplexifyError::Invalid(
            base_report.render(source).join("; "),
        ));
    }
    let parity_report = validate_parity(source)?;
    if !parity_report.is_valid() {
        return Err(ComplexifyError::BadParity(
            parity_report.render(source).join("; "),
        ));
    }

    let mut annotations = Vec::with_capacity(2 * source.len());
    for s in source.letters() {
        for block in Block::blocks_for(source.parity(s).expect("checked")) {
            annotations.push(AnnotatedLetter { base: s, block });
        }
    }
    let index_of = |base: Letter, block: Block| {
        annotations
            .iter()
            .position(|a| a.base == base && a.block == block)
            .map(|i| Letter(i as u16))
    };

    let names = annotations
        .iter()
        .map(|a| format!("{}_{}", source.name(a.base), a.block))
        .collect();
    let conj = annotations
        .iter()
        .map(|a| index_of(source.conj(a.base), a.block.conj()).expect("parity is conj invariant"))
        .collect();
    let mut fusion = Vec::with_capacity(annotations.len() * annotations.len());
    for a in &annotations {
        for b in &annotations {
            let cell = a.block.fuse(b.block).and_then(|block| {
                let base = source.fuse(a.base, b.base)?;
                Some(index_of(base, block).expect("parity is additive"))
            });
            fusion.push(cell);
        }
    }
    let parity = annotations.iter().map(|a| a.block.parity()).collect();
    let set = FusionSet::from_tables(names, conj, fusion, Some(parity));
    Ok(ComplexifiedSet {
        set,
        source: source.clone(),
        annotations,
    })
}
