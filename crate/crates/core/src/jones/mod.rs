//! The 5-dimensional representation of the genus-2 mapping class group on
//! Temperley–Lieb link patterns of six points.

mod document;
mod link;
mod rep;
mod young;

pub use document::{
    generators_from_document, rep_from_document, rep_from_json, DocNormalization, RepDocument,
    DOCUMENT_VARIABLE,
};
pub use link::{
    catalan, enumerate_link_patterns, loop_value, tl_generator, LinkPattern, MAX_POINTS,
};
pub use rep::{
    build_rep, default_search, normalization_for_m, search_valid_rep, solve_normalization,
    validate_generators, CandidateFailure, Normalization, Provenance, RepDefinition, RepValidation,
    GENUS2_DIM, GENUS2_POINTS,
};
pub use young::{hook_length_count, syt_count, syt_count_brute_force};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JonesError {
    #[error("ODD_N: {n} boundary points cannot be perfectly matched")]
    OddN { n: usize },
    #[error("unsupported number of boundary points {n} (expected 2..={max})", max = MAX_POINTS)]
    UnsupportedN { n: usize },
    #[error("INDEX_RANGE: generator E_{index} needs 1 <= i < {n}")]
    IndexRange { index: usize, n: usize },
    #[error("NO_SOLUTION: no integral normalization for n = {n}{}", m.map(|m| format!(", m = {m}")).unwrap_or_default())]
    NoSolution { n: usize, m: Option<i64> },
    #[error("SEARCH_EXHAUSTED: {} candidates rejected", failures.len())]
    SearchExhausted { failures: Vec<CandidateFailure> },
    #[error("SCHEMA_ERROR: {0}")]
    Schema(String),
    #[error("RELATION_FAILURE: {relation}")]
    RelationFailure { relation: String },
    #[error("DET_NOT_PM1: det of generator c{generator} is {determinant}")]
    DetNotPm1 {
        generator: usize,
        determinant: String,
    },
}
