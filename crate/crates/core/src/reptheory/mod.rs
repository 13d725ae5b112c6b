//! Character theory of the symmetric groups, the `S_6` action on the
//! degree-zero representation, isotypic projectors for the conjugation
//! module `M(5, Q)`, and `Sp(4)` Weyl dimensions.

mod action;
mod chartable;
mod decompose;
mod partition;
mod permutation;
mod weyl;

pub use action::{degree0_generators, s6_matrix, SymmetricAction};
pub use chartable::{
    conjugacy_classes, conjugacy_classes_s6, mn_character, CharacterTable, CharacterTableDoc,
    ClassDoc, RowDoc, MAX_DEGREE,
};
pub use decompose::{
    apply, conjugation_operator, decompose_conjugation_module, decompose_with_table, flatten,
    isotypic_projector, project_trivial, unflatten, ConjugationModule, Decomposition,
    IsotypicEntry,
};
pub use partition::{Partition, PartitionParseError};
pub use permutation::Permutation;
pub use weyl::weyl_dim_c2;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepTheoryError {
    #[error("NOT_INVOLUTIVE: degree-0 image of c{generator} does not square to the identity")]
    NotInvolutive { generator: usize },
    #[error("degree-0 images of c{i} and c{j} violate the Coxeter relation")]
    CoxeterFailure { i: usize, j: usize },
    #[error("degree-0 images are not integral unimodular matrices")]
    NotIntegral,
    #[error("trace is not constant on the class {class}")]
    NotAClassFunction { class: String },
    #[error("integer overflow while averaging over the group")]
    Overflow,
    #[error("no irreducible labelled {partition}")]
    UnknownPartition { partition: String },
}
