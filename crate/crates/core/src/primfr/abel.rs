use super::PrimFrError;
use crate::exactla::{sparse, Field, SparseVec, Subspace, Q};
use crate::freealg::{alpha, gamma, GrTuple, IntMat, Mono, SparseGroupElt};
use crate::passi::{CatKind, PassiCell};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub fn abelianization(t: &SparseGroupElt<GrTuple>) -> SparseGroupElt<IntMat> {
    t.map(alpha)
}

pub fn gamma_section(x: &SparseGroupElt<IntMat>) -> SparseGroupElt<GrTuple> {
    x.map(gamma)
}

fn random_int_mat(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> IntMat {
    let mut x = IntMat::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            x.set(i, j, rng.random_range(-3..=3));
        }
    }
    x
}

/// Number of random matrices with `α(γ(τ^X)) ≠ τ^X`.
pub fn section_failures(samples: usize, max: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .filter(|_| {
            let (r, c) = (rng.random_range(0..=max), rng.random_range(0..=max));
            let x = random_int_mat(&mut rng, r, c);
            alpha(&gamma(&x)) != x
        })
        .count()
}

/// Number of random composable pairs with `α(a ∘ b) ≠ α(a) ∘ α(b)`, plus
/// failures of `α(id) = id`.
pub fn monad_hom_failures(samples: usize, max: usize, seed: u64) -> usize {
    use crate::freealg::{Morph, Word};
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = (0..=max).filter(|&n| alpha(&GrTuple::identity(n)) != IntMat::identity(n)).count();
    for _ in 0..samples {
        let (p, m, n) = (rng.random_range(0..=max), rng.random_range(0..=max), rng.random_range(0..=max));
        let a = GrTuple::new(m, (0..p).map(|_| Word::random(&mut rng, m, 4)).collect());
        let b = GrTuple::new(n, (0..m).map(|_| Word::random(&mut rng, n, 4)).collect());
        if alpha(&a.compose(&b)) != alpha(&a).compose(&alpha(&b)) {
            failures += 1;
        }
    }
    failures
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedCompare {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub gr_dim: usize,
    pub fr_dim: usize,
    /// `ᾱ ∘ γ̄ = id` on the abelian graded piece.
    pub split_epi: bool,
    pub iso: bool,
}

/// Commutative image of a tensor monomial.
fn commute(m: &Mono) -> Mono {
    m.iter()
        .map(|w| {
            let mut w = w.clone();
            w.sort_unstable();
            w
        })
        .collect()
}

/// Compares the degree-`d` graded pieces of the Passi quotients at cell `(m, n)`
/// under abelianization, computed inside cells truncated at `big_d`.
///
/// `γ̄` sends the abelian monomial `Π X_{ij}` to the class of
/// `γ(Π (τ^{E_{ij}} − 1))`; splitting means `ᾱ` maps it back to the monomial.
pub fn graded_alpha_compare(field: Field, n: usize, m: usize, d: usize, big_d: usize) -> Result<GradedCompare, PrimFrError> {
    if d > big_d {
        return Err(PrimFrError::DegreeAboveTruncation { d, trunc: big_d });
    }
    let gr = PassiCell::new(CatKind::Gr, field, n, m, big_d);
    let fr = PassiCell::new(CatKind::Fr, field, n, m, big_d);
    let graded = |c: &PassiCell| (0..c.dim()).filter(|&i| c.degree(i) == d).collect::<Vec<_>>();
    let (gr_piece, fr_piece) = (graded(&gr), graded(&fr));

    // ᾱ on the graded piece, in abelian coordinates.
    let alpha_bar = |v: &SparseVec| -> SparseVec {
        sparse::collect(field, v.iter().filter(|(i, _)| gr.degree(*i) == d).map(|(i, c)| (fr.index_of(&commute(&gr.basis[*i])), c.clone())))
    };
    let image = Subspace::span(field, fr.dim(), gr_piece.iter().map(|&i| alpha_bar(&sparse::unit(i))).collect::<Vec<_>>().iter());

    let mut split = true;
    for &k in &fr_piece {
        // Entries (i, j): letter i in factor j.
        let entries: Vec<(usize, usize)> =
            fr.basis[k].iter().enumerate().flat_map(|(j, w)| w.iter().map(move |&i| (i as usize, j))).collect();
        let mut u = SparseGroupElt::zero(field);
        for mask in 0u32..1 << entries.len() {
            let mut x = IntMat::zeros(n, m);
            for (t, &(i, j)) in entries.iter().enumerate() {
                if mask >> t & 1 == 1 {
                    x.set(i, j, x.get(i, j) + 1);
                }
            }
            let sign = if (entries.len() - mask.count_ones() as usize).is_multiple_of(2) { 1 } else { -1 };
            u.add_term(x, Q::int(sign));
        }
        let lifted: Vec<(usize, Q)> = gamma_section(&u)
            .terms
            .iter()
            .flat_map(|(t, c)| gr.q_tuple(t).into_iter().map(move |(i, x)| (i, field.mul(c, &x))))
            .collect();
        let lifted = sparse::collect(field, lifted);
        let in_filtration = lifted.iter().all(|(i, _)| gr.degree(*i) >= d);
        split &= in_filtration && alpha_bar(&lifted) == sparse::unit(k);
    }
    split &= image.dim() == fr_piece.len();
    Ok(GradedCompare { n, m, d, gr_dim: gr_piece.len(), fr_dim: fr_piece.len(), split_epi: split, iso: split && gr_piece.len() == fr_piece.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Word;

    const QF: Field = Field::Rational;

    #[test]
    fn examples() {
        let t = GrTuple::new(2, vec![Word::new(2, [1, 2, -1]), Word::gen(2, 2)]);
        assert_eq!(alpha(&t), IntMat::from_rows(&[&[0, 0], &[1, 1]]));
        assert_eq!(gamma(&IntMat::from_rows(&[&[1], &[1]])).to_string(), "[x1x2]_2");
        let e = SparseGroupElt::basis(QF, t);
        assert_eq!(abelianization(&e).to_string(), "τ^[0 0; 1 1]");
    }

    #[test]
    fn section_and_hom() {
        assert_eq!(section_failures(200, 3, 1), 0);
        assert_eq!(monad_hom_failures(200, 3, 2), 0);
    }

    #[test]
    fn graded_spot_values() {
        let c = graded_alpha_compare(QF, 2, 2, 1, 3).unwrap();
        assert_eq!((c.gr_dim, c.fr_dim, c.iso), (4, 4, true));
        let c = graded_alpha_compare(QF, 2, 1, 2, 2).unwrap();
        assert_eq!((c.gr_dim, c.fr_dim, c.split_epi, c.iso), (4, 3, true, false));
        let c = graded_alpha_compare(QF, 3, 2, 0, 1).unwrap();
        assert_eq!((c.gr_dim, c.fr_dim, c.iso), (1, 1, true));
        assert!(graded_alpha_compare(QF, 1, 1, 3, 2).is_err());
    }

    #[test]
    fn iso_exactly_in_low_degree_or_one_generator() {
        for n in 0..=3 {
            for m in 0..=3 {
                for d in 0..=3 {
                    let c = graded_alpha_compare(QF, n, m, d, d).unwrap();
                    assert!(c.split_epi, "{c:?}");
                    assert!(c.gr_dim >= c.fr_dim);
                    let expect_iso = d <= 1 || n == 1 || (c.gr_dim == 0);
                    assert_eq!(c.iso, expect_iso, "{c:?}");
                }
            }
        }
    }
}
