//! Exact linear algebra over ℚ and prime fields.

mod field;
mod mat;
mod scalar;
pub mod sparse;
mod subspace;

pub use field::{is_prime, Field};
pub use mat::{solve_intertwiner, LinMap, Mat};
pub use scalar::{ParseQError, Q};
pub use sparse::SparseVec;
pub use subspace::{kernel_rows, Echelon, FamilyCoords, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("first space is not contained in the second")]
    NotASubspace,
    #[error("family is linearly dependent")]
    Dependent,
    #[error("operands live over different fields")]
    FieldMismatch,
}
