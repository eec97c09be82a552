use super::operad::{beta, AssCell, LieMonad};
use crate::exactla::{kernel_rows, sparse, Field, SparseVec, Subspace, Q};
use crate::freealg::{act, ActOptions, Coproduct, FreeAlgError, GrTuple, SparseGroupElt, TensorPoly, Word};
use crate::monadcore::Monad;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// `E(w_1 ⊗ ⋯ ⊗ w_m) = [w_1 | ⋯ | w_m]_n`, extended linearly from `A_Ass(m, n)`.
pub fn e_map(field: Field, cell: &AssCell, a: &SparseVec) -> SparseGroupElt<GrTuple> {
    SparseGroupElt::from_terms(
        field,
        a.iter().map(|(i, c)| {
            let words = cell.basis[*i]
                .iter()
                .map(|w| Word::new(cell.n, w.iter().map(|&l| l as i32 + 1)))
                .collect();
            (GrTuple::new(cell.n, words), c.clone())
        }),
    )
}

const PRIMITIVE: ActOptions = ActOptions { coproduct: Coproduct::Primitive, reduced: false };

/// Action of `t ∈ L(l, m)` on a multilinear element of `k⟨X⟩^{⊗m}`.
pub fn exp_action(t: &GrTuple, v: &TensorPoly) -> Result<TensorPoly, FreeAlgError> {
    if !v.is_multilinear() {
        return Err(FreeAlgError::NotMultilinear);
    }
    Ok(act(t, v, PRIMITIVE))
}

pub fn exp_action_elt(f: &SparseGroupElt<GrTuple>, l: usize, v: &TensorPoly) -> Result<TensorPoly, FreeAlgError> {
    let mut out = TensorPoly::zero(v.field, v.letters, l, None, false);
    for (t, c) in &f.terms {
        out = out.add(&exp_action(t, v)?.scale(c));
    }
    Ok(out)
}

/// `R(f) = f ▷ (x_1 ⊗ ⋯ ⊗ x_n)` for `f ∈ L(m, n)`, in `A_Ass(m, n)` coordinates.
pub fn r_map(field: Field, cell: &AssCell, f: &SparseGroupElt<GrTuple>) -> SparseVec {
    let id = TensorPoly::zero(field, cell.n, cell.n, None, false).monomial(AssCell::identity_mono(cell.n), Q::ONE);
    let out = exp_action_elt(f, cell.m, &id).expect("identity tensor is multilinear");
    cell.coords(&out)
}

/// `θ = [x1|x1]_1 − [e|x1]_1 − [x1|e]_1 ∈ L(2, 1)`.
pub fn theta(field: Field) -> SparseGroupElt<GrTuple> {
    SparseGroupElt::from_terms(
        field,
        [
            (GrTuple::from_letters(1, &[&[1], &[1]]), Q::ONE),
            (GrTuple::from_letters(1, &[&[], &[1]]), Q::int(-1)),
            (GrTuple::from_letters(1, &[&[1], &[]]), Q::int(-1)),
        ],
    )
}

/// `id_{i−1} × θ × id_{n−i} ∈ L(n + 1, n)`, `1 ≤ i ≤ n`.
pub fn theta_dilation(field: Field, n: usize, i: usize) -> SparseGroupElt<GrTuple> {
    assert!((1..=n).contains(&i));
    let tuple = |a: bool, b: bool| {
        let mut words: Vec<Word> = (1..i).map(|k| Word::gen(n, k)).collect();
        words.push(if a { Word::gen(n, i) } else { Word::identity(n) });
        words.push(if b { Word::gen(n, i) } else { Word::identity(n) });
        words.extend((i + 1..=n).map(|k| Word::gen(n, k)));
        GrTuple::new(n, words)
    };
    SparseGroupElt::from_terms(
        field,
        [(tuple(true, true), Q::ONE), (tuple(false, true), Q::int(-1)), (tuple(true, false), Q::int(-1))],
    )
}

/// Common kernel on `A_Ass(m, n)` of the actions of all `θ`-dilations in `L(m + 1, m)`.
pub fn theta_kernel(field: Field, m: usize, n: usize) -> Subspace {
    let src = AssCell::new(m, n);
    let dst = AssCell::new(m + 1, n);
    let mut rows: Vec<SparseVec> = Vec::new();
    for i in 1..=m {
        let th = theta_dilation(field, m, i);
        let mut by_row: Vec<SparseVec> = vec![Vec::new(); dst.dim()];
        for k in 0..src.dim() {
            let v = src.poly(field, &sparse::unit(k));
            let img = exp_action_elt(&th, m + 1, &v).expect("basis monomials are multilinear");
            for (r, c) in dst.coords(&img) {
                by_row[r].push((k, c));
            }
        }
        rows.extend(by_row.into_iter().filter(|r| !r.is_empty()));
    }
    kernel_rows(field, src.dim(), &rows)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimCellRow {
    pub m: usize,
    pub n: usize,
    pub kernel_dim: usize,
    pub lie_dim: usize,
    /// The kernel equals the image of `β` as a subspace.
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimReport {
    pub cells: Vec<PrimCellRow>,
    pub transported_pairs: usize,
    pub transported_failures: usize,
    pub seed: u64,
}

impl PrimReport {
    pub fn ok(&self) -> bool {
        self.transported_failures == 0 && self.cells.iter().all(|c| c.equal && c.kernel_dim == c.lie_dim)
    }
}

/// Compares the `θ`-kernel with `β(A_Lie)` on every cell `m ≤ max_m`, `n ≤ max_n`,
/// and checks `R(E(β a) ∘ E(β b)) = β(a ∘ b)` on `pairs` random basis pairs
/// drawn from objects `≤ max_m`.
pub fn prim_eigenmonad_check(field: Field, max_m: usize, max_n: usize, pairs: usize, seed: u64) -> PrimReport {
    let lie = LieMonad::new(field);
    let mut cells = Vec::new();
    for m in 0..=max_m {
        for n in 0..=max_n {
            let k = theta_kernel(field, m, n);
            let lc = lie.cell(m, n);
            cells.push(PrimCellRow { m, n, kernel_dim: k.dim(), lie_dim: lc.dim(), equal: k == lc.image() });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    let mut done = 0;
    let objs = max_m.max(1);
    while done < pairs {
        let (p, m, n) = (rng.random_range(1..=objs), rng.random_range(1..=objs), rng.random_range(1..=objs));
        let (ca, cb) = (lie.cell(p, m), lie.cell(m, n));
        if ca.dim() == 0 || cb.dim() == 0 {
            continue;
        }
        done += 1;
        let (i, j) = (rng.random_range(0..ca.dim()), rng.random_range(0..cb.dim()));
        let ea = e_map(field, &lie.ass.cell(p, m), &ca.beta[i]);
        let eb = e_map(field, &lie.ass.cell(m, n), &cb.beta[j]);
        let lhs = r_map(field, &lie.ass.cell(p, n), &ea.compose(&eb));
        let rhs = beta(field, &lie.cell(p, n), &lie.compose_basis(p, m, n, i, j));
        if lhs != rhs {
            failures += 1;
        }
    }
    PrimReport { cells, transported_pairs: pairs, transported_failures: failures, seed }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Morph;

    const QF: Field = Field::Rational;

    fn mono(field: Field, n: usize, m: &[&[u8]]) -> TensorPoly {
        TensorPoly::zero(field, n, m.len(), None, false).monomial(m.iter().map(|w| w.to_vec()).collect(), Q::ONE)
    }

    #[test]
    fn e_examples() {
        let c = AssCell::new(2, 2);
        let swap = c.index_of(&vec![vec![1], vec![0]]).unwrap();
        let e = e_map(QF, &c, &sparse::unit(swap));
        assert_eq!(e.to_string(), "[x2|x1]_2");
        let c1 = AssCell::new(1, 2);
        let prod = c1.index_of(&vec![vec![0, 1]]).unwrap();
        assert_eq!(e_map(QF, &c1, &sparse::unit(prod)).to_string(), "[x1x2]_2");
        let id = c.index_of(&AssCell::identity_mono(2)).unwrap();
        assert_eq!(e_map(QF, &c, &sparse::unit(id)).terms.keys().next().unwrap(), &GrTuple::identity(2));
    }

    #[test]
    fn action_examples() {
        let diag = GrTuple::from_letters(1, &[&[1], &[1]]);
        assert_eq!(exp_action(&diag, &mono(QF, 1, &[&[0]])).unwrap().to_string(), "1⊗X1 + X1⊗1");
        let mult = GrTuple::from_letters(2, &[&[1, 2]]);
        assert_eq!(exp_action(&mult, &mono(QF, 2, &[&[0], &[1]])).unwrap().to_string(), "X1X2");
        let swap = GrTuple::from_letters(2, &[&[2], &[1]]);
        assert_eq!(exp_action(&swap, &mono(QF, 2, &[&[0], &[1]])).unwrap().to_string(), "X2⊗X1");
        assert_eq!(exp_action(&diag, &mono(QF, 1, &[&[0, 0]])), Err(FreeAlgError::NotMultilinear));
    }

    #[test]
    fn r_inverts_e() {
        for m in 0..=3 {
            for n in 0..=3 {
                let c = AssCell::new(m, n);
                for i in 0..c.dim() {
                    let a = sparse::unit(i);
                    assert_eq!(r_map(QF, &c, &e_map(QF, &c, &a)), a);
                }
            }
        }
    }

    #[test]
    fn r_kills_theta() {
        for n in 1..=3 {
            for i in 1..=n {
                assert!(r_map(QF, &AssCell::new(n + 1, n), &theta_dilation(QF, n, i)).is_empty());
            }
        }
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(theta_kernel(QF, 1, 2).dim(), 1);
        assert_eq!(theta_kernel(QF, 1, 3).dim(), 2);
        assert_eq!(theta_kernel(QF, 2, 3).dim(), 6);
        assert_eq!(theta_kernel(QF, 3, 2).dim(), 0);
    }

    #[test]
    fn small_check_passes() {
        let r = prim_eigenmonad_check(QF, 3, 3, 20, 5);
        assert!(r.ok(), "{r:?}");
    }
}
