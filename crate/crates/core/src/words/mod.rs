//! Words in the Dehn-twist generators `c1..c5` of the genus-2 mapping class
//! group: parsing, evaluation in matrix representations, the homology
//! action, and the defining relations.

mod catalog;
mod parse;
mod presentation;
mod symplectic;
mod word;

pub use catalog::{builtin_catalog, parse_catalog, CatalogEntry, CatalogError, BUILTIN_CATALOG};
pub use parse::{parse_word, MAX_WORD_LENGTH};
pub use presentation::{
    check_presentation, evaluate_word, genus2_relations, GeneratorImages, RelationCheck,
    RelationKind, RelationReport,
};
pub use symplectic::{
    abelianization_class, is_torelli, pairing, symplectic_form, symplectic_generator,
    symplectic_image, symplectic_images, SymplecticMatrix, CHAIN_CLASSES,
};
pub use word::{hyperelliptic_word, Letter, MCGWord, NUM_GENERATORS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("PARSE_ERROR at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("BAD_GENERATOR at position {position}: {generator} (generators are c1..c5)")]
    BadGenerator { position: usize, generator: String },
    #[error("INDEX_RANGE: generator index {index} outside 1..=5")]
    IndexRange { index: usize },
    #[error("expected 5 generator images, found {found}")]
    GeneratorCount { found: usize },
    #[error("generator image {index} has a different dimension")]
    DimensionMismatch { index: usize },
    #[error("generator image {index} is not invertible over its ring")]
    NotInvertible { index: usize },
}
