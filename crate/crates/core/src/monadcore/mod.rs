//! Monads in `Mat_k` on finite windows, their modules, eigenmonads and
//! vanishing modules.

mod eigen;
mod module;
mod monad;

pub use eigen::{
    annihilator, check_left_ideal, counit_epi, hom_component, hom_t, idealizer, left_ideal_closure,
    subgrid_from, unit_mono, AdjunctionReport, BalancedTensor, Eigen, LeftIdeal, SubGrid, VanishingModule,
    Window,
};
pub use module::{Module, ModuleGrid, QuotientModule, RegularModule, SubModule};
pub use monad::{
    check_monad_laws, left_mult_matrix, CellInfo, CheckMode, LawKind, LawReport, Monad, MonadGrid, Violation,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonadError {
    #[error("T({z},{y}) ∘ J({y},{x}) is not contained in J({z},{x})")]
    NotALeftIdeal { z: usize, y: usize, x: usize },
    #[error("cell ({y},{x}) is missing")]
    CellMissing { y: usize, x: usize },
    #[error("{0} is outside the window")]
    OutsideWindow(usize),
}
