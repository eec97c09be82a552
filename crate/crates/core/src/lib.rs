//! Exact computations with monads on finite index windows: Passi quotients,
//! polynomial and primitivity ideals, eigenmonads and vanishing modules.

pub mod exactla;
pub mod freealg;
pub mod monadcore;
pub mod outerh;
pub mod passi;
pub mod primfr;
pub mod primgr;

pub use exactla::{Field, LinAlgError, Mat, SparseVec, Subspace, Q};
