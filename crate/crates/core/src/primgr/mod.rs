//! Operad monads for the associative and Lie operads, and the primitivity
//! ideal of the free-group PROP.

mod operad;
mod prim;

pub use operad::{beta, AssCell, AssMonad, LieBasisElt, LieCell, LieMonad};
pub use prim::{
    e_map, exp_action, exp_action_elt, prim_eigenmonad_check, r_map, theta, theta_dilation, theta_kernel,
    PrimCellRow, PrimReport,
};
