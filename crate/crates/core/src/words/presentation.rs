use serde::{Deserialize, Serialize};

use super::{hyperelliptic_word, MCGWord, WordError, NUM_GENERATORS};
use crate::algebra::{Ring, SquareMatrix};

/// Images of `c1..c5` together with their inverses.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorImages<R> {
    gens: Vec<SquareMatrix<R>>,
    inverses: Vec<SquareMatrix<R>>,
}

impl<R: Ring> GeneratorImages<R> {
    /// Requires exactly five square matrices of equal dimension, each with a
    /// unit determinant.
    pub fn new(gens: Vec<SquareMatrix<R>>) -> Result<Self, WordError> {
        if gens.len() != NUM_GENERATORS as usize {
            return Err(WordError::GeneratorCount { found: gens.len() });
        }
        let dim = gens[0].dim();
        let mut inverses = Vec::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            if g.dim() != dim {
                return Err(WordError::DimensionMismatch { index: i + 1 });
            }
            inverses.push(
                g.inverse()
                    .ok_or(WordError::NotInvertible { index: i + 1 })?,
            );
        }
        Ok(Self { gens, inverses })
    }

    pub fn dim(&self) -> usize {
        self.gens[0].dim()
    }

    pub fn generators(&self) -> &[SquareMatrix<R>] {
        &self.gens
    }

    /// Image of `c_index` (1-based).
    pub fn generator(&self, index: u8) -> &SquareMatrix<R> {
        &self.gens[index as usize - 1]
    }

    pub fn generator_inverse(&self, index: u8) -> &SquareMatrix<R> {
        &self.inverses[index as usize - 1]
    }

    pub fn identity(&self) -> SquareMatrix<R> {
        SquareMatrix::identity(self.dim(), self.gens[0].get(0, 0))
    }

    /// Ordered product of generator images, left to right.
    pub fn evaluate(&self, w: &MCGWord) -> SquareMatrix<R> {
        let mut acc = self.identity();
        for l in w.letters() {
            let base = if l.exponent > 0 {
                self.generator(l.generator)
            } else {
                self.generator_inverse(l.generator)
            };
            acc = acc.mul(&base.pow_unsigned(l.exponent.unsigned_abs()));
        }
        acc
    }
}

pub fn evaluate_word<R: Ring>(w: &MCGWord, images: &GeneratorImages<R>) -> SquareMatrix<R> {
    images.evaluate(w)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    Braid,
    Commutation,
    Chain,
    HyperellipticSquare,
    HyperellipticCentral,
}

impl RelationKind {
    /// Relations whose two sides have the same length, hence survive an
    /// overall rescaling of the generators.
    pub fn is_homogeneous(self) -> bool {
        matches!(self, RelationKind::Braid | RelationKind::Commutation)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationCheck {
    pub name: String,
    pub kind: RelationKind,
    pub lhs: String,
    pub rhs: String,
    pub passed: bool,
    /// `lhs − rhs`, rendered entrywise, present only on failure.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub difference: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn first_failure_where(
        &self,
        pred: impl Fn(RelationKind) -> bool,
    ) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| !c.passed && pred(c.kind))
    }
}

/// The genus-2 relations as `(kind, name, lhs, rhs)` word pairs:
/// braid relations, distant commutation, `(c1…c5)^6 = 1`, `ι² = 1` and
/// `ι c_i = c_i ι` for the hyperelliptic word `ι`.
pub fn genus2_relations() -> Vec<(RelationKind, String, MCGWord, MCGWord)> {
    let c = |i: u8| MCGWord::generator(i).expect("generator index");
    let mut out = Vec::new();
    for i in 1..NUM_GENERATORS {
        let (a, b) = (c(i), c(i + 1));
        out.push((
            RelationKind::Braid,
            format!("braid c{i} c{} c{i} = c{} c{i} c{}", i + 1, i + 1, i + 1),
            a.concat(&b).concat(&a),
            b.concat(&a).concat(&b),
        ));
    }
    for i in 1..=NUM_GENERATORS {
        for j in i + 2..=NUM_GENERATORS {
            out.push((
                RelationKind::Commutation,
                format!("commute c{i} c{j} = c{j} c{i}"),
                c(i).concat(&c(j)),
                c(j).concat(&c(i)),
            ));
        }
    }
    let chain = "(c1 c2 c3 c4 c5)^6"
        .parse::<MCGWord>()
        .expect("static word");
    out.push((
        RelationKind::Chain,
        "chain (c1 c2 c3 c4 c5)^6 = 1".into(),
        chain,
        MCGWord::identity(),
    ));
    let iota = hyperelliptic_word();
    out.push((
        RelationKind::HyperellipticSquare,
        "iota^2 = 1".into(),
        iota.pow(2),
        MCGWord::identity(),
    ));
    for i in 1..=NUM_GENERATORS {
        out.push((
            RelationKind::HyperellipticCentral,
            format!("iota c{i} = c{i} iota"),
            iota.concat(&c(i)),
            c(i).concat(&iota),
        ));
    }
    out
}

/// Product of generator images for a word with only positive exponents.
fn evaluate_positive<R: Ring>(gens: &[SquareMatrix<R>], w: &MCGWord) -> SquareMatrix<R> {
    let mut acc = SquareMatrix::identity(gens[0].dim(), gens[0].get(0, 0));
    for l in w.letters() {
        assert!(l.exponent > 0, "relation words are positive");
        acc = acc.mul(&gens[l.generator as usize - 1].pow_unsigned(l.exponent as u64));
    }
    acc
}

/// Checks every genus-2 relation exactly on five generator matrices;
/// failures are data, not errors. All relation words are positive, so no
/// inverses are needed.
pub fn check_presentation<R: Ring>(gens: &[SquareMatrix<R>]) -> RelationReport {
    assert_eq!(gens.len(), NUM_GENERATORS as usize, "five generator images");
    let checks = genus2_relations()
        .into_iter()
        .map(|(kind, name, lhs, rhs)| {
            let l = evaluate_positive(gens, &lhs);
            let r = evaluate_positive(gens, &rhs);
            let passed = l == r;
            let difference = (!passed).then(|| {
                l.sub(&r)
                    .rows()
                    .map(|row| row.iter().map(ToString::to_string).collect())
                    .collect()
            });
            RelationCheck {
                name,
                kind,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                passed,
                difference,
            }
        })
        .collect();
    RelationReport { checks }
}
