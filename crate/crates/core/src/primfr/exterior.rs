use super::fin::{after, all_maps, permutations, FinBimodule, FinComb, FinMapElt};
use super::ring::RingB;
use crate::exactla::{kernel_rows, sparse, Field, SparseVec, Subspace, Q};
use serde::Serialize;
use std::collections::HashMap;

/// How `𝔖_n` acts on `⋀^n W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PermAction {
    /// By the signature, reduced into the field.
    Sign,
    /// Trivially; over `F_2` this coincides with [`PermAction::Sign`].
    Trivial,
}

fn subsets(w: usize, n: usize) -> Vec<Vec<usize>> {
    (0u32..1 << w)
        .filter(|s| s.count_ones() as usize == n)
        .map(|s| (0..w).filter(|i| s >> i & 1 == 1).collect())
        .collect()
}

fn sign(p: &[usize]) -> i64 {
    let inv = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    if inv % 2 == 0 { 1 } else { -1 }
}

/// `(L̃_Fin ⊗_{L_𝔖} ⋀W)(p) = ⊕_n kFin(n, p) ⊗ ⋀^n W` modulo `(g∘σ) ⊗ z − g ⊗ σ·z`.
struct BalancedCell {
    gens: Vec<(usize, Vec<usize>, usize)>,
    index: HashMap<(usize, Vec<usize>, usize), usize>,
    relations: Subspace,
}

impl BalancedCell {
    fn new(field: Field, w: usize, p: usize, action: PermAction) -> Self {
        let mut gens = Vec::new();
        for n in 0..=w {
            for g in all_maps(n, p) {
                for z in 0..subsets(w, n).len() {
                    gens.push((n, g.clone(), z));
                }
            }
        }
        let index: HashMap<_, _> = gens.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        let mut rels = Vec::new();
        for (n, g, z) in &gens {
            for s in permutations(*n) {
                let eps = match action {
                    PermAction::Sign => sign(&s),
                    PermAction::Trivial => 1,
                };
                let lhs = index[&(*n, after(g, &s), *z)];
                let rhs = index[&(*n, g.clone(), *z)];
                rels.push(sparse::collect(field, [(lhs, Q::ONE), (rhs, field.from_i64(-eps))]));
            }
        }
        let relations = Subspace::span(field, gens.len(), rels.iter());
        BalancedCell { gens, index, relations }
    }

    fn dim(&self) -> usize {
        self.gens.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExteriorReport {
    pub field: Field,
    pub action: PermAction,
    pub w: usize,
    /// Class of `θ ▷ (f_2 ⊗ w_1∧w_2)` as a multiple of `id_2 ⊗ w_1∧w_2`.
    pub theta_image: Option<Q>,
    pub theta_image_zero: bool,
    pub lambda_dim: usize,
    pub vanishing_dim: usize,
    /// `(⋀W)(1)`, embedded along `id_1`, lies in the vanishing cell.
    pub contained: bool,
    pub strict: bool,
}

/// Computes the vanishing cell at object 1 of `L̃_Fin ⊗_{L_𝔖} ⋀W` for `dim W = w ≥ 2`
/// and the `θ`-image of `f_2 ⊗ w_1∧w_2`.
pub fn exterior_check(field: Field, w: usize, action: PermAction) -> ExteriorReport {
    assert!(w >= 2);
    let l = FinBimodule::new(RingB::ground(field));
    let (one, two) = (BalancedCell::new(field, w, 1, action), BalancedCell::new(field, w, 2, action));

    // θ ▷ (g ⊗ z) = (θ ▷ g) ⊗ z, reduced modulo the relations at object 2.
    let theta = |gen: usize| -> SparseVec {
        let (n, g, z) = &one.gens[gen];
        let img = l.theta_action(1, &FinComb::basis(field, FinMapElt::plain(1, g.clone())));
        let v = sparse::collect(field, img.terms.iter().map(|(e, c)| (two.index[&(*n, e.f.clone(), *z)], c.clone())));
        two.relations.reduce(&v)
    };
    let images: Vec<SparseVec> = (0..one.dim()).map(theta).collect();
    let mut rows: Vec<SparseVec> = vec![Vec::new(); two.dim()];
    for (k, img) in images.iter().enumerate() {
        for (r, c) in img {
            rows[*r].push((k, c.clone()));
        }
    }
    let kernel = kernel_rows(field, one.dim(), &rows);
    let vanishing_dim = kernel.dim() - one.relations.dim();

    let top = subsets(w, 2).iter().position(|s| s == &[0, 1]).expect("w ≥ 2");
    let image = &images[one.index[&(2, vec![0, 0], top)]];
    let id = two.relations.reduce(&sparse::unit(two.index[&(2, vec![0, 1], top)]));
    let theta_image = if image.is_empty() {
        Some(Q::int(0))
    } else {
        let (i, c) = &image[0];
        let scale = field.div(c, &sparse::get(&id, *i));
        scale.filter(|s| sparse::scale(field, s, &id) == *image)
    };

    let lambda: Vec<SparseVec> = (0..w).map(|z| sparse::unit(one.index[&(1, vec![0], z)])).collect();
    let with_lambda = one.relations.sum(&Subspace::span(field, one.dim(), lambda.iter())).expect("same ambient");
    let lambda_dim = with_lambda.dim() - one.relations.dim();
    let contained = lambda.iter().all(|v| kernel.member(v));
    ExteriorReport {
        field,
        action,
        w,
        theta_image_zero: image.is_empty(),
        theta_image,
        lambda_dim,
        vanishing_dim,
        contained,
        strict: contained && vanishing_dim > lambda_dim,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Char2Report {
    pub f2: ExteriorReport,
    /// The `F_2` structure constants read over `ℚ`: the action is trivial.
    pub rational_lift: ExteriorReport,
    /// `ℚ` with the signed action, where `f_2 ⊗ w_1∧w_2` is already zero.
    pub rational_signed: ExteriorReport,
}

impl Char2Report {
    pub fn ok(&self) -> bool {
        self.f2.theta_image_zero && !self.rational_lift.theta_image_zero && self.f2.strict
    }
}

pub fn exterior_char2_check() -> Char2Report {
    Char2Report {
        f2: exterior_check(Field::Prime(2), 2, PermAction::Sign),
        rational_lift: exterior_check(Field::Rational, 2, PermAction::Trivial),
        rational_signed: exterior_check(Field::Rational, 2, PermAction::Sign),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_two_example() {
        let r = exterior_char2_check();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.f2.theta_image, Some(Q::int(0)));
        assert_eq!(r.rational_lift.theta_image, Some(Q::int(2)));
        assert_eq!((r.f2.lambda_dim, r.f2.vanishing_dim), (2, 3));
        assert!(!r.rational_lift.strict);
        assert_eq!(r.rational_signed.vanishing_dim, 2);
        assert!(r.rational_signed.theta_image_zero);
    }

    #[test]
    fn larger_w_over_f2() {
        // ⋀^1 ⊕ ⋀^2: the summands ⋀^0 and ⋀^3 are moved by θ.
        let r = exterior_check(Field::Prime(2), 3, PermAction::Sign);
        assert_eq!((r.lambda_dim, r.vanishing_dim), (3, 6));
        assert!(r.strict);
    }
}
