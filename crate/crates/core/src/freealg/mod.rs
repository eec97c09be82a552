//! Free groups, truncated tensor and polynomial algebras, Magnus expansions,
//! Hall sets and graded primitive parts.

mod hall;
mod tensor;
mod word;

pub use hall::{
    component_basis, coords, hall_expand, hall_set, hall_tensor_span, multiset_words,
    primitive_part, HallTree,
};
pub use tensor::{
    abelian_magnus, abelian_magnus_matrix, act, alpha, gamma, magnus, magnus_tuple, mono_degree,
    ActOptions, CommPolyTrunc, Coproduct, Mono, TensorPoly,
};
pub use word::{GrTuple, IntMat, Morph, SparseGroupElt, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FreeAlgError {
    #[error("words over F_{0} and F_{1} cannot be combined")]
    GeneratorMismatch(usize, usize),
    #[error("factor index {index} out of range for {len} factors")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("hall order violated at {0}")]
    OrderViolation(String),
    #[error("input is not multilinear")]
    NotMultilinear,
}
