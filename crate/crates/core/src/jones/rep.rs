use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use super::{enumerate_link_patterns, tl_generator, JonesError};
use crate::algebra::{LaurentPoly, Sign, SquareMatrix};
use crate::words::{
    check_presentation, GeneratorImages, RelationKind, RelationReport, NUM_GENERATORS,
};

/// Boundary points of the link patterns carrying the genus-2 representation.
pub const GENUS2_POINTS: usize = 6;
pub const GENUS2_DIM: usize = 5;

/// Generator convention `ρ(c_i) = η · u^a · (I + u^m E_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Normalization {
    pub eta: Sign,
    pub a: i64,
    pub m: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Constructed,
    Loaded,
}

/// The five generator images of the representation over `Z[u, u^-1]`.
#[derive(Clone, Debug)]
pub struct RepDefinition {
    images: GeneratorImages<LaurentPoly>,
    normalization: Option<Normalization>,
    provenance: Provenance,
}

impl RepDefinition {
    /// Wraps generator matrices; requires five invertible square matrices
    /// of equal size. Relations are not checked here, see [`Self::validate`].
    pub fn new(
        generators: Vec<SquareMatrix<LaurentPoly>>,
        normalization: Option<Normalization>,
        provenance: Provenance,
    ) -> Result<Self, JonesError> {
        let images =
            GeneratorImages::new(generators).map_err(|e| JonesError::Schema(e.to_string()))?;
        Ok(Self {
            images,
            normalization,
            provenance,
        })
    }

    pub fn dim(&self) -> usize {
        self.images.dim()
    }

    pub fn generators(&self) -> &[SquareMatrix<LaurentPoly>] {
        self.images.generators()
    }

    pub fn images(&self) -> &GeneratorImages<LaurentPoly> {
        &self.images
    }

    pub fn normalization(&self) -> Option<Normalization> {
        self.normalization
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn validate(&self) -> RepValidation {
        validate_generators(self.generators())
    }
}

/// Relation report plus the generator determinants.
#[derive(Clone, Debug, PartialEq)]
pub struct RepValidation {
    pub relations: RelationReport,
    pub determinants: Vec<LaurentPoly>,
}

impl RepValidation {
    /// The common determinant, when every generator has the same
    /// determinant and it is `±1`.
    pub fn determinant_sign(&self) -> Option<Sign> {
        let first = self.determinants.first()?;
        if self.determinants.iter().any(|d| d != first) {
            return None;
        }
        match first.as_unit() {
            Some((sign, 0)) => Some(sign),
            _ => None,
        }
    }

    /// Verdict in a fixed order: braid and commutation relations first,
    /// then the determinant gate, then the remaining relations. Rescaling
    /// all generators by a unit therefore surfaces as a determinant failure
    /// rather than a chain-relation failure.
    pub fn verdict(&self) -> Result<Sign, JonesError> {
        if let Some(f) = self
            .relations
            .first_failure_where(RelationKind::is_homogeneous)
        {
            return Err(JonesError::RelationFailure {
                relation: f.name.clone(),
            });
        }
        let sign = self.determinant_sign().ok_or_else(|| {
            let (index, det) = self
                .determinants
                .iter()
                .enumerate()
                .find(|(_, d)| !matches!(d.as_unit(), Some((_, 0))))
                .unwrap_or((0, &self.determinants[0]));
            JonesError::DetNotPm1 {
                generator: index + 1,
                determinant: det.to_string(),
            }
        })?;
        if let Some(f) = self.relations.first_failure() {
            return Err(JonesError::RelationFailure {
                relation: f.name.clone(),
            });
        }
        Ok(sign)
    }
}

/// Relation report and determinants for five generator matrices.
pub fn validate_generators(gens: &[SquareMatrix<LaurentPoly>]) -> RepValidation {
    RepValidation {
        relations: check_presentation(gens),
        determinants: gens.iter().map(SquareMatrix::determinant).collect(),
    }
}

/// Smallest `m ≥ 1` with an integer `a` making `det(u^a (I + u^m E_i))`
/// a unit of degree zero.
///
/// On the `d`-dimensional link-pattern module `E_i` has rank `r` and
/// eigenvalue `δ` there, so `I + u^m E_i` has eigenvalues `1` and `−u^{2m}`
/// and determinant `u^{2rm}`. The condition is `d·a + 2·r·m = 0`.
pub fn solve_normalization(n: usize) -> Result<(i64, i64), JonesError> {
    let (d, r) = dimension_and_rank(n)?;
    (1..=d)
        .find_map(|m| normalization_exponent(d, r, m).map(|a| (a, m)))
        .ok_or(JonesError::NoSolution { n, m: None })
}

/// The exponent `a` for a fixed `m`, or `NO_SOLUTION`.
pub fn normalization_for_m(n: usize, m: i64) -> Result<i64, JonesError> {
    let (d, r) = dimension_and_rank(n)?;
    normalization_exponent(d, r, m).ok_or(JonesError::NoSolution { n, m: Some(m) })
}

fn normalization_exponent(d: i64, r: i64, m: i64) -> Option<i64> {
    let num = -2 * r * m;
    (num % d == 0).then_some(num / d)
}

fn dimension_and_rank(n: usize) -> Result<(i64, i64), JonesError> {
    let d = enumerate_link_patterns(n)?.len() as i64;
    let r = tl_generator(1, n, 1)?.rank() as i64;
    Ok((d, r))
}

/// `ρ(c_i) = η u^a (I + u^m E_i)` on the five link patterns of six points.
pub fn build_rep(eta: Sign, a: i64, m: i64) -> RepDefinition {
    let scalar = LaurentPoly::monomial(eta.value(), a);
    let shift = LaurentPoly::monomial(1, m);
    let gens = (1..GENUS2_POINTS)
        .map(|i| {
            let e = tl_generator(i, GENUS2_POINTS, m).expect("valid generator index");
            let id = SquareMatrix::identity(e.dim(), &LaurentPoly::one());
            id.add(&e.scale(&shift)).scale(&scalar)
        })
        .collect();
    RepDefinition::new(
        gens,
        Some(Normalization { eta, a, m }),
        Provenance::Constructed,
    )
    .expect("η u^a (I + u^m E_i) has unit determinant")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateFailure {
    pub eta: Sign,
    pub a: i64,
    pub m: i64,
    pub reason: String,
}

/// Tries every `(m, a, η)` in order (m outermost, η innermost) and returns
/// the first candidate whose determinant is `±1` and which satisfies every
/// genus-2 relation.
pub fn search_valid_rep(
    etas: &[Sign],
    a_range: RangeInclusive<i64>,
    m_range: RangeInclusive<i64>,
) -> Result<RepDefinition, JonesError> {
    let mut failures = Vec::new();
    for m in m_range.clone().filter(|&m| m >= 1) {
        for a in a_range.clone() {
            for &eta in etas {
                let rep = build_rep(eta, a, m);
                // the determinant is a single monomial; test it before the
                // more expensive relation words
                let det = rep.generators()[0].determinant();
                if !matches!(det.as_unit(), Some((_, 0))) {
                    failures.push(CandidateFailure {
                        eta,
                        a,
                        m,
                        reason: format!("DET_NOT_PM1: det = {det}"),
                    });
                    continue;
                }
                match rep.validate().verdict() {
                    Ok(_) => return Ok(rep),
                    Err(e) => failures.push(CandidateFailure {
                        eta,
                        a,
                        m,
                        reason: e.to_string(),
                    }),
                }
            }
        }
    }
    Err(JonesError::SearchExhausted { failures })
}

/// Default search window.
pub fn default_search() -> Result<RepDefinition, JonesError> {
    search_valid_rep(&[Sign::Plus, Sign::Minus], -8..=0, 1..=6)
}

/// Checks the five generator matrices have the advertised dimension.
pub(crate) fn check_shape(
    gens: &[SquareMatrix<LaurentPoly>],
    dim: usize,
) -> Result<(), JonesError> {
    if gens.len() != NUM_GENERATORS as usize {
        return Err(JonesError::Schema(format!(
            "expected 5 generators, found {}",
            gens.len()
        )));
    }
    if let Some(i) = gens.iter().position(|g| g.dim() != dim) {
        return Err(JonesError::Schema(format!(
            "generator {} is not {dim}x{dim}",
            i + 1
        )));
    }
    Ok(())
}
