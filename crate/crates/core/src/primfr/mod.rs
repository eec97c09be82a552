//! Free modules over a ring: the monads `L^B_Fin` and `L^B_𝔖`, the canonical
//! bimodule with its generator actions, `E_R`, abelianization and the graded
//! comparison, and the characteristic-two exterior example.

mod abel;
mod er;
mod exterior;
mod fin;
mod ring;

pub use abel::{abelianization, gamma_section, graded_alpha_compare, monad_hom_failures, section_failures, GradedCompare};
pub use er::{
    e_r, e_r_inverse, e_r_inverse_elt, e_r_inverse_ring, left_action_failures, theta_composite,
    theta_composite_failures,
};
pub use exterior::{exterior_char2_check, exterior_check, Char2Report, ExteriorReport, PermAction};
pub use fin::{
    after, all_maps, c_map, compose, compose_elts, h_map, is_bijective, permutations, unit_elt, BimoduleReport,
    FinBimodule, FinCell, FinComb, FinMapElt, FinMonad, FrGenerator, RMat,
};
pub use ring::RingB;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PrimFrError {
    #[error("structure constants have inconsistent shape")]
    RingShape,
    #[error("the given unit is not a two-sided unit")]
    NotUnital,
    #[error("multiplication is not associative on (e{a}, e{b}, e{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("E_R is only available over the ground ring")]
    GroundRingOnly,
    #[error("degree {d} exceeds truncation {trunc}")]
    DegreeAboveTruncation { d: usize, trunc: usize },
}
