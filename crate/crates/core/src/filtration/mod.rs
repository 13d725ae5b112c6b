//! `h`-adic expansion of the representation under `u = ε·e^h`, filtration
//! depth and leading terms `Δ_k` of Torelli words, and the structural
//! identities those leading terms satisfy.

mod analyze;
mod properties;
mod series;

use serde::{Deserialize, Serialize};

use crate::algebra::Sign;

pub use analyze::{
    analyze, det_lemma_holds, verify_det_lemma, FiltrationReport, FiltrationReportDoc,
    InvariantCheck,
};
pub use properties::{
    check_bracket, check_delta_additivity, check_equivariance, check_power, compare_leading,
    LeadingOutcome, PropertyCheck,
};
pub use series::{generator_series, word_series, word_series_factored};

/// Default truncation order of the `h`-expansion.
pub const DEFAULT_ORDER: usize = 12;

/// Branch `ε` of the substitution `u = ε·e^h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseTag {
    Plus,
    Minus,
}

impl CaseTag {
    pub const BOTH: [CaseTag; 2] = [CaseTag::Plus, CaseTag::Minus];

    pub fn sign(self) -> Sign {
        match self {
            CaseTag::Plus => Sign::Plus,
            CaseTag::Minus => Sign::Minus,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CaseTag::Plus => "plus",
            CaseTag::Minus => "minus",
        }
    }
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FiltrationError {
    #[error("NOT_TORELLI: {word} acts nontrivially on homology")]
    NotTorelli { word: String },
    #[error("DEGREE0_NONTRIVIAL: constant term of the series of {word} is not the identity")]
    Degree0Nontrivial { word: String },
    #[error("VALUATION_EXCEEDS_ORDER: {word} is the identity through h^{order}; retry with --order {}", order * 2)]
    ValuationExceedsOrder { word: String, order: usize },
    #[error("DEPTH_MISMATCH: {x} has depth {jx} but {y} has depth {jy}")]
    DepthMismatch {
        x: String,
        jx: usize,
        y: String,
        jy: usize,
    },
    #[error("VALUATION_EXCEEDS_ORDER: order {order} cannot see depth {needed}; retry with --order {needed}")]
    OrderTooSmall { order: usize, needed: usize },
}

impl FiltrationError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            FiltrationError::NotTorelli { .. } => "NOT_TORELLI",
            FiltrationError::Degree0Nontrivial { .. } => "DEGREE0_NONTRIVIAL",
            FiltrationError::ValuationExceedsOrder { .. }
            | FiltrationError::OrderTooSmall { .. } => "VALUATION_EXCEEDS_ORDER",
            FiltrationError::DepthMismatch { .. } => "DEPTH_MISMATCH",
        }
    }
}
