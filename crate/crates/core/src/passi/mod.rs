//! Passi quotients of free and free abelian group algebras, polynomial and
//! analyticity ideals, and polynomial degree of functors.

mod cell;
mod functor;
mod ideal;

pub use cell::{enumerate_monos, CatKind, GroupElt, PassiCell, PassiMonad};
pub use functor::{
    alternating_map, check_functoriality, p_d, polynomial_degree_leq, AbelianizationFunctor, ConstantFunctor,
    Functor, MultilinearTensorFunctor, SubFunctor,
};
pub use ideal::{
    analyticity_slice, d_t, filtration_quotients, kappa_product_form, kappa_span, kappa_tilde, pi_d,
    polynomial_ideal_generated, two_sided_witness, FamilyElt, SliceRow, SliceStatus,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PassiError {
    #[error("degree {d} outside 0..={max}")]
    DegreeOutOfRange { d: usize, max: usize },
    #[error("generated span has dimension {generated}, expected {expected}")]
    GenerationIncomplete { generated: usize, expected: usize },
    #[error("a generator of the polynomial ideal left the augmentation power")]
    NotInIdeal,
    #[error("object {needed} lies beyond the window (max {max})")]
    WindowTooSmall { needed: usize, max: usize },
    #[error("kinds of the operands differ")]
    KindMismatch,
}

fn multichoose(a: u128, k: u128) -> u128 {
    if a == 0 {
        return u128::from(k == 0);
    }
    // C(a + k − 1, k)
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (a + i) / (i + 1);
    }
    r
}

/// Rank of the degree-`k` graded piece of the Passi quotient in cell `(m, n)`.
pub fn graded_rank(kind: CatKind, n: usize, m: usize, k: usize) -> u128 {
    let (n, m, k) = (n as u128, m as u128, k as u128);
    match kind {
        CatKind::Gr => n.pow(k as u32) * multichoose(m, k),
        CatKind::Fr => multichoose(n * m, k),
    }
}

/// Closed-form rank of `𝒫^d(m, n)`.
pub fn passi_rank(kind: CatKind, n: usize, m: usize, d: usize) -> u128 {
    (0..=d).map(|k| graded_rank(kind, n, m, k)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert_eq!(passi_rank(CatKind::Gr, 2, 1, 2), 7);
        assert_eq!(passi_rank(CatKind::Gr, 2, 2, 1), 5);
        assert_eq!(passi_rank(CatKind::Gr, 2, 2, 2), 17);
        assert_eq!(passi_rank(CatKind::Fr, 1, 1, 2), 3);
        assert_eq!(passi_rank(CatKind::Fr, 2, 2, 2), 15);
        assert_eq!(passi_rank(CatKind::Gr, 0, 3, 3), 1);
        assert_eq!(passi_rank(CatKind::Fr, 3, 0, 3), 1);
    }
}
