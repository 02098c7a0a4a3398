//! The free orthogonal quantum groups and their relatives as representation
//! rings with a distinguished fundamental corepresentation.
//!
//! Rings without free fusion rules are built from their known
//! decompositions: `A_b(n) ≅ A_o(n-1)`, `A_s'(n) ≅ A_s(n) ⊗ C*(Z/2)`,
//! `A_b'(n) ≅ A_b(n) * C*(Z/2)`, `A_p(n) ≅ A_s(n) * C(S^1)` and
//! `A_c(n) ≅ A_b(n) * C(S^1)`. `A_k(n)` is the free complexification of
//! `A_h(n)`.
//!
//! Dimensions are polynomials in the ambient `n`; evaluating them is only
//! meaningful for `n` large enough (small `n` degenerate, e.g. `A_s(n)` is
//! classical for `n <= 3`).

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::complexify::complexify;
use crate::fusion_ring::DimensionAssignment;
use crate::poly::Poly;
use crate::rep_ring::{
    circle_ring, cyclic2_ring, direct_product, free_product, ring_from_fusion_set, Decomposition,
    FreeFusionRing, Label, RepRing, Side,
};
use crate::words::{standard, FusionSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModelName {
    Ao,
    As,
    Ah,
    Ab,
    Abp,
    Asp,
    Ap,
    Ac,
    Ak,
}

impl ModelName {
    pub const ALL: [ModelName; 9] = [
        ModelName::Ao,
        ModelName::As,
        ModelName::Ah,
        ModelName::Ab,
        ModelName::Abp,
        ModelName::Asp,
        ModelName::Ap,
        ModelName::Ac,
        ModelName::Ak,
    ];

    /// Command-line token; `A_p` is `apf`.
    pub fn token(self) -> &'static str {
        match self {
            ModelName::Ao => "ao",
            ModelName::As => "as",
            ModelName::Ah => "ah",
            ModelName::Ab => "ab",
            ModelName::Abp => "abp",
            ModelName::Asp => "asp",
            ModelName::Ap => "apf",
            ModelName::Ac => "ac",
            ModelName::Ak => "ak",
        }
    }
}

impl fmt::Display for ModelName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("unknown model `{0}` (expected one of ao as ah ab abp asp apf ac ak)")]
    UnknownName(String),
    #[error("model {0} has no one-dimensional summand to check: precondition violated")]
    NotApplicable(ModelName),
    #[error("empty pattern")]
    EmptyPattern,
}

impl FromStr for ModelName {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ModelName::ALL
            .into_iter()
            .find(|m| m.token() == s)
            .ok_or_else(|| ModelError::UnknownName(s.to_string()))
    }
}

/// `U` or its conjugate `Ubar` in a tensor pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternLetter {
    U,
    Ubar,
}

impl FromStr for PatternLetter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "U" => Ok(PatternLetter::U),
            "Ubar" => Ok(PatternLetter::Ubar),
            other => Err(format!("pattern letters are U or Ubar, got `{other}`")),
        }
    }
}

impl fmt::Display for PatternLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PatternLetter::U => "U",
            PatternLetter::Ubar => "Ubar",
        })
    }
}

/// All patterns of exactly `len` letters, `U` before `Ubar`.
pub fn patterns_of_len(len: usize) -> Vec<Vec<PatternLetter>> {
    (0..1usize << len)
        .map(|bits| {
            (0..len)
                .map(|i| {
                    if bits >> (len - 1 - i) & 1 == 0 {
                        PatternLetter::U
                    } else {
                        PatternLetter::Ubar
                    }
                })
                .collect()
        })
        .collect()
}

pub struct Model {
    pub name: ModelName,
    pub ring: Arc<dyn RepRing>,
    pub fundamental: Decomposition,
    pub fund_dim: Poly,
}

fn word_label(set: &FusionSet, text: &str) -> Label {
    Label::Word(set.parse_word(text).expect("builtin word"))
}

fn free_ring(set: FusionSet, dims: Vec<Poly>) -> FreeFusionRing {
    let d = DimensionAssignment::new(&set, dims).expect("builtin dims");
    ring_from_fusion_set(set, d).expect("builtin fusion sets are valid")
}

fn multiset(labels: impl IntoIterator<Item = Label>) -> Decomposition {
    labels.into_iter().map(|l| (l, BigUint::one())).collect()
}

impl Model {
    pub fn build(name: ModelName) -> Model {
        let ao = standard::ao();
        let as_set = standard::as_set();
        let n = Poly::n();
        let n1 = Poly::n_plus(-1);
        let (ring, fundamental): (Arc<dyn RepRing>, Decomposition) = match name {
            ModelName::Ao => {
                let s = word_label(&ao, "s");
                (Arc::new(free_ring(ao, vec![n])), multiset([s]))
            }
            ModelName::As => {
                let p = word_label(&as_set, "p");
                let ring = free_ring(as_set, vec![n1]);
                let fund = multiset([ring.trivial(), p]);
                (Arc::new(ring), fund)
            }
            ModelName::Ah => {
                let ah = standard::ah();
                let u = word_label(&ah, "u");
                (Arc::new(free_ring(ah, vec![n, n1])), multiset([u]))
            }
            ModelName::Ab => {
                let s = word_label(&ao, "s");
                let ring = free_ring(ao, vec![n1]);
                let fund = multiset([ring.trivial(), s]);
                (Arc::new(ring), fund)
            }
            ModelName::Asp => {
                let p = word_label(&as_set, "p");
                let base: Arc<dyn RepRing> = Arc::new(free_ring(as_set, vec![n1]));
                let one = base.trivial();
                let ring = direct_product(base, Arc::new(cyclic2_ring()));
                let fund = multiset([
                    Label::pair(one, Label::Int(1)),
                    Label::pair(p, Label::Int(1)),
                ]);
                (Arc::new(ring), fund)
            }
            ModelName::Abp => {
                let s = word_label(&ao, "s");
                let ring =
                    free_product(Arc::new(free_ring(ao, vec![n1])), Arc::new(cyclic2_ring()));
                let fund = multiset([
                    ring.letter(Side::Right, Label::Int(1)),
                    ring.letter(Side::Left, s),
                ]);
                (Arc::new(ring), fund)
            }
            ModelName::Ap => {
                let p = word_label(&as_set, "p");
                let ring = free_product(
                    Arc::new(free_ring(as_set, vec![n1])),
                    Arc::new(circle_ring()),
                );
                let z = ring.letter(Side::Right, Label::Int(1));
                let pz = ring
                    .reduce(vec![(Side::Left, p), (Side::Right, Label::Int(1))])
                    .expect("alternating");
                (Arc::new(ring), multiset([z, pz]))
            }
            ModelName::Ac => {
                let s = word_label(&ao, "s");
                let ring = free_product(Arc::new(free_ring(ao, vec![n1])), Arc::new(circle_ring()));
                let z = ring.letter(Side::Right, Label::Int(1));
                let sz = ring
                    .reduce(vec![(Side::Left, s), (Side::Right, Label::Int(1))])
                    .expect("alternating");
                (Arc::new(ring), multiset([z, sz]))
            }
            ModelName::Ak => {
                let ah = standard::ah();
                let base_dims = DimensionAssignment::new(&ah, vec![n, n1]).expect("builtin dims");
                let c = complexify(&ah).expect("A_h is graded");
                let dims = c.lift_dimensions(&base_dims);
                let u = word_label(c.set(), "u_odd1");
                let ring =
                    ring_from_fusion_set(c.set().clone(), dims).expect("complexification is valid");
                (Arc::new(ring), multiset([u]))
            }
        };
        let fund_dim = ring
            .total_dim(&fundamental)
            .expect("models carry dimensions");
        Model {
            name,
            ring,
            fundamental,
            fund_dim,
        }
    }

    /// The conjugate fundamental: every summand dualized.
    pub fn conjugate_fundamental(&self) -> Decomposition {
        self.fundamental
            .iter()
            .map(|(l, m)| (self.ring.dual(l), m.clone()))
            .collect()
    }

    fn factor(&self, letter: PatternLetter) -> Decomposition {
        match letter {
            PatternLetter::U => self.fundamental.clone(),
            PatternLetter::Ubar => self.conjugate_fundamental(),
        }
    }

    /// Iterated tensor product of `U`/`Ubar` following `pattern`.
    pub fn decompose_fundamental_power(
        &self,
        pattern: &[PatternLetter],
    ) -> Result<Decomposition, ModelError> {
        let (first, rest) = pattern.split_first().ok_or(ModelError::EmptyPattern)?;
        Ok(rest.iter().fold(self.factor(*first), |acc, &letter| {
            self.ring.decompose_multisets(&acc, &self.factor(letter))
        }))
    }

    pub fn render(&self, label: &Label) -> String {
        self.ring.render(label)
    }

    pub fn dim(&self, label: &Label) -> Poly {
        self.ring.dim(label).expect("models carry dimensions")
    }
}

/// Result of looking for a one-dimensional non-trivial summand `ζ` of the
/// fundamental with `ζ ⊗ dual(ζ) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneDimensionalSummand {
    pub zeta: Option<Label>,
    pub self_dual: bool,
    /// Whether self-duality is required for this model.
    pub self_dual_required: bool,
}

impl OneDimensionalSummand {
    pub fn passed(&self) -> bool {
        self.zeta.is_some() && (self.self_dual || !self.self_dual_required)
    }
}

/// Searches the fundamental of `A_s'`, `A_b'`, `A_p` or `A_c` for the
/// one-dimensional group-like summand.
pub fn one_dimensional_summand_check(m: &Model) -> Result<OneDimensionalSummand, ModelError> {
    let self_dual_required = match m.name {
        ModelName::Asp | ModelName::Abp => true,
        ModelName::Ap | ModelName::Ac => false,
        other => return Err(ModelError::NotApplicable(other)),
    };
    let ring = &m.ring;
    let found = m.fundamental.labels().find(|&z| {
        !ring.is_trivial(z)
            && ring.dim(z).is_some_and(|d| d.is_one())
            && ring.decompose_pair(z, &ring.dual(z)) == Decomposition::single(ring.trivial())
            && (!self_dual_required || ring.dual(z) == *z)
    });
    let self_dual = found.is_some_and(|z| ring.dual(z) == *z);
    Ok(OneDimensionalSummand {
        zeta: found.cloned(),
        self_dual,
        self_dual_required,
    })
}
