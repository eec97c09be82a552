use super::cell::{enumerate_monos, CatKind, GroupElt, PassiCell, PassiMonad};
use super::{passi_rank, PassiError};
use crate::exactla::{Echelon, Field, Subspace, Q};
use crate::freealg::{magnus_tuple, GrTuple, Morph, SparseGroupElt, TensorPoly, Word};
use crate::monadcore::{subgrid_from, Eigen, MonadError, Window};
use serde::Serialize;

/// `D^T_n ∈ L(nd, n)`: block `i` is the identity when `i ∈ T` and trivial otherwise.
pub fn d_t(n: usize, d: usize, t: &[bool]) -> GrTuple {
    assert_eq!(t.len(), d);
    let mut words = Vec::with_capacity(n * d);
    for &inside in t {
        for k in 1..=n {
            words.push(if inside { Word::gen(n, k) } else { Word::identity(n) });
        }
    }
    GrTuple::new(n, words)
}

fn subsets(d: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u32..1 << d).map(move |mask| (0..d).map(|i| mask >> i & 1 == 1).collect())
}

/// `π^d_n = Σ_T (−1)^{d−|T|} D^T_n ∈ L(nd, n)`.
pub fn pi_d(kind: CatKind, field: Field, n: usize, d: usize) -> GroupElt {
    let e = SparseGroupElt::from_terms(
        field,
        subsets(d).map(|t| {
            let size = t.iter().filter(|&&b| b).count();
            (d_t(n, d, &t), Q::int(if (d - size).is_multiple_of(2) { 1 } else { -1 }))
        }),
    );
    GroupElt::from_tuples(kind, e)
}

fn mono_tuple(letters: usize, mono: &[Vec<u8>]) -> GrTuple {
    GrTuple::new(letters, mono.iter().map(|w| Word::new(letters, w.iter().map(|&l| l as i32 + 1))).collect())
}

/// Span of `q(f ∘ π^d)` over tuples `f ∈ L(m, nd)` of positive words with total
/// length at most `word_bound`, by increasing length. Every generator is
/// checked against the augmentation power, and generation stops once the
/// span reaches it.
pub fn polynomial_ideal_generated(cell: &PassiCell, d: usize, word_bound: usize) -> Result<Subspace, PassiError> {
    let target = cell.aug_power(d)?;
    if d == 0 {
        return Ok(target);
    }
    let f = cell.field;
    let pi = pi_d(cell.kind, f, cell.n, d);
    let mut e = Echelon::new(f);
    if target.dim() > 0 {
        for mono in enumerate_monos(cell.n * d, cell.m, word_bound, cell.kind.commutative()) {
            let ft = GroupElt::from_tuples(cell.kind, SparseGroupElt::basis(f, mono_tuple(cell.n * d, &mono)));
            let v = cell.q(&ft.compose(&pi)?);
            if !target.member(&v) {
                return Err(PassiError::NotInIdeal);
            }
            e.insert(&v);
            if e.rank() == target.dim() {
                break;
            }
        }
    }
    if e.rank() < target.dim() {
        return Err(PassiError::GenerationIncomplete { generated: e.rank(), expected: target.dim() });
    }
    Ok(Subspace::from_echelon(f, cell.dim(), e))
}

/// `(letter, block, factor)`: a signed 1-based letter of `F_n`, a block in
/// `0..d` and a tuple position in `0..m`.
pub type FamilyElt = (i32, usize, usize);

/// `κ̃_{S,f} = Σ_T (−1)^{|T|} [w_1 | ⋯ | w_m]_n`, where `w_k` multiplies, in the
/// order of `S`, the letters placed in factor `k` whose block lies in `T`.
pub fn kappa_tilde(kind: CatKind, field: Field, n: usize, m: usize, d: usize, family: &[FamilyElt]) -> GroupElt {
    let e = SparseGroupElt::from_terms(
        field,
        subsets(d).map(|t| {
            let mut words = vec![Vec::new(); m];
            for &(l, b, k) in family {
                if t[b] {
                    words[k].push(l);
                }
            }
            let tuple = GrTuple::new(n, words.into_iter().map(|w| Word::new(n, w)).collect());
            let size = t.iter().filter(|&&b| b).count();
            (tuple, Q::int(if size % 2 == 0 { 1 } else { -1 }))
        }),
    );
    GroupElt::from_tuples(kind, e)
}

/// For `f_2` order preserving: `∏_i (q(μ_i) − 1)` where `μ_i` is the ordered
/// product of the elements in block `i`.
pub fn kappa_product_form(cell: &PassiCell, d: usize, family: &[FamilyElt]) -> TensorPoly {
    let one = magnus_tuple(cell.field, &GrTuple::trivial(cell.m, cell.n), cell.trunc);
    let mut acc = one.clone();
    for b in 0..d {
        let mut words = vec![Vec::new(); cell.m];
        for &(l, blk, k) in family {
            if blk == b {
                words[k].push(l);
            }
        }
        let mu = GrTuple::new(cell.n, words.into_iter().map(|w| Word::new(cell.n, w)).collect());
        let diff = cell.poly(&cell.q_tuple(&mu)).sub(&cell.poly(&cell.q_tuple(&GrTuple::trivial(cell.m, cell.n))));
        acc = acc.mul(&diff);
    }
    acc.with_trunc(Some(cell.trunc))
}

/// Span of `q(κ̃_{S,f})` over all families with `|S| ≤ size_bound` and letters
/// `x_k^{±1}`. Families whose blocks miss some `i ∈ 0..d` are skipped: their
/// alternating sum vanishes.
pub fn kappa_span(cell: &PassiCell, d: usize, size_bound: usize) -> Subspace {
    let f = cell.field;
    let mut atoms = Vec::new();
    for k in 1..=cell.n as i32 {
        for l in [k, -k] {
            for b in 0..d {
                for j in 0..cell.m {
                    atoms.push((l, b, j));
                }
            }
        }
    }
    let mut e = Echelon::new(f);
    if d == 0 {
        e.insert(&cell.q(&kappa_tilde(cell.kind, f, cell.n, cell.m, 0, &[])));
    }
    let mut layer: Vec<Vec<FamilyElt>> = vec![Vec::new()];
    for s in 1..=size_bound {
        layer = layer
            .iter()
            .flat_map(|fam| {
                atoms.iter().map(move |a| {
                    let mut g = fam.clone();
                    g.push(*a);
                    g
                })
            })
            .collect();
        if s < d {
            continue;
        }
        for fam in &layer {
            if (0..d).all(|b| fam.iter().any(|x| x.1 == b)) {
                e.insert(&cell.q(&kappa_tilde(cell.kind, f, cell.n, cell.m, d, fam)));
            }
        }
    }
    Subspace::from_echelon(f, cell.dim(), e)
}

/// `q(π^d_Y ∘ f)` lies in the `d`-th augmentation power of cell `(Yd, X)`.
pub fn two_sided_witness(kind: CatKind, field: Field, d: usize, f: &GrTuple, trunc: usize) -> Result<bool, PassiError> {
    let y = f.m();
    let cell = PassiCell::new(kind, field, f.n, y * d, trunc);
    let fe = GroupElt::from_tuples(kind, SparseGroupElt::basis(field, f.clone()));
    let v = cell.q(&pi_d(kind, field, y, d).compose(&fe)?);
    Ok(cell.aug_power(d)?.member(&v))
}

/// `dim I^{(d)}/I^{(d+1)}` in cell `(m, n)` for `d = 0..=max_d`, with both
/// ideals generated from `π^d` inside `𝒫^{max_d + 1}`.
pub fn filtration_quotients(
    kind: CatKind,
    field: Field,
    n: usize,
    m: usize,
    max_d: usize,
    word_bound: usize,
) -> Result<Vec<usize>, PassiError> {
    let cell = PassiCell::new(kind, field, n, m, max_d + 1);
    let ideals: Vec<Subspace> =
        (0..=max_d + 1).map(|d| polynomial_ideal_generated(&cell, d, word_bound)).collect::<Result<_, _>>()?;
    Ok((0..=max_d)
        .map(|d| ideals[d + 1].quotient_dim(&ideals[d]).expect("filtration is descending"))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SliceStatus {
    Match,
    Mismatch,
    HypothesisViolated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceRow {
    pub y: usize,
    pub x: usize,
    pub computed: usize,
    pub expected: usize,
    pub cap: usize,
    pub status: SliceStatus,
}

/// Eigenmonad cells of the `ν`-analyticity ideal `J(Y, X) = I^{(ν(X))}(Y, X)`
/// on `cells`, computed inside `𝒫^D` with `D = max ν − 1` and waypoints up to
/// `cap`, against the Passi ranks of `𝒫^{ν(X)−1}(Y, X)`.
pub fn analyticity_slice(
    kind: CatKind,
    field: Field,
    nu: &dyn Fn(usize) -> usize,
    cells: &[usize],
    cap: usize,
) -> Result<Vec<SliceRow>, MonadError> {
    let top = cells.iter().map(|&x| nu(x)).max().unwrap_or(1).max(1);
    let t = PassiMonad::new(kind, field, top - 1);
    let win = Window::new(cells.to_vec(), cap);
    let j = subgrid_from(&win, |z, x| t.cell(z, x).aug_power(nu(x)).expect("ν(X) ≤ D + 1"));
    let eig = Eigen::untabulated(&t, j, &win)?;
    let mut rows = Vec::new();
    for &y in cells {
        for &x in cells {
            let computed = eig.reps[&(y, x)].dim();
            let expected = passi_rank(kind, x, y, nu(x) - 1) as usize;
            let status = if nu(y) < nu(x) {
                SliceStatus::HypothesisViolated
            } else if computed == expected {
                SliceStatus::Match
            } else {
                SliceStatus::Mismatch
            };
            rows.push(SliceRow { y, x, computed, expected, cap, status });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::sparse;

    const QF: Field = Field::Rational;

    #[test]
    fn pi_examples() {
        let GroupElt::Gr(p) = pi_d(CatKind::Gr, QF, 1, 1) else { panic!() };
        assert_eq!(p.to_string(), "(-1)·[e]_1 + [x1]_1");
        let GroupElt::Gr(p) = pi_d(CatKind::Gr, QF, 1, 2) else { panic!() };
        assert_eq!(p.terms.len(), 4);
        assert_eq!(p.terms[&GrTuple::from_letters(1, &[&[1], &[1]])], Q::ONE);
        assert_eq!(p.terms[&GrTuple::from_letters(1, &[&[1], &[]])], Q::int(-1));
        assert_eq!(p.terms[&GrTuple::from_letters(1, &[&[], &[]])], Q::ONE);
        let GroupElt::Fr(p) = pi_d(CatKind::Fr, QF, 1, 2) else { panic!() };
        assert_eq!(p.terms[&crate::freealg::IntMat::from_rows(&[&[1, 0]])], Q::int(-1));
        assert_eq!(p.terms.len(), 4);
    }

    #[test]
    fn polynomial_ideal_examples() {
        let c = PassiCell::new(CatKind::Gr, QF, 1, 1, 2);
        assert_eq!(polynomial_ideal_generated(&c, 2, 3).unwrap().dim(), 1);
        assert_eq!(polynomial_ideal_generated(&c, 0, 3).unwrap().dim(), 3);
        for kind in [CatKind::Gr, CatKind::Fr] {
            let c = PassiCell::new(kind, QF, 2, 2, 2);
            assert_eq!(polynomial_ideal_generated(&c, 1, 3).unwrap().codim(), 1);
        }
        // A bound below the degree cannot reach the ideal.
        let c = PassiCell::new(CatKind::Gr, QF, 1, 1, 3);
        assert!(matches!(
            polynomial_ideal_generated(&c, 2, 2),
            Err(PassiError::GenerationIncomplete { generated: 1, expected: 2 })
        ));
    }

    #[test]
    fn kappa_examples() {
        let c = PassiCell::new(CatKind::Gr, QF, 2, 1, 3);
        // Ordered blocks with single letters: (−1)^2 (y1 − 1)(y2 − 1).
        let fam = [(1, 0, 0), (2, 1, 0)];
        let k = c.q(&kappa_tilde(CatKind::Gr, QF, 2, 1, 2, &fam));
        assert_eq!(k, c.coords(&kappa_product_form(&c, 2, &fam)));
        assert_eq!(c.poly(&k).to_string(), "X1X2");
        // Empty family.
        assert!(kappa_tilde(CatKind::Gr, QF, 2, 1, 2, &[]).is_zero());
        // Odd d flips the sign of the product form.
        let fam = [(1, 0, 0), (-2, 0, 0), (2, 1, 0), (1, 2, 0)];
        let k = c.q(&kappa_tilde(CatKind::Gr, QF, 2, 1, 3, &fam));
        let p = c.coords(&kappa_product_form(&c, 3, &fam));
        assert_eq!(k, sparse::scale(QF, &Q::int(-1), &p));
        let one = PassiCell::new(CatKind::Gr, QF, 1, 1, 2);
        assert_eq!(kappa_span(&one, 2, 2), one.aug_power(2).unwrap());
    }

    #[test]
    fn two_sidedness() {
        let f = GrTuple::from_letters(2, &[&[1, -2], &[2, 1, 1]]);
        for kind in [CatKind::Gr, CatKind::Fr] {
            for d in 1..=3 {
                assert!(two_sided_witness(kind, QF, d, &f, 3).unwrap());
            }
        }
    }

    #[test]
    fn descending_filtration() {
        assert_eq!(filtration_quotients(CatKind::Gr, QF, 1, 1, 3, 4).unwrap(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn analyticity_small() {
        let nu = |n: usize| n + 1;
        let rows = analyticity_slice(CatKind::Gr, QF, &nu, &[0, 1, 2], 3).unwrap();
        for r in &rows {
            assert_ne!(r.status, SliceStatus::Mismatch, "{r:?}");
        }
        let r = rows.iter().find(|r| (r.y, r.x) == (2, 1)).unwrap();
        assert_eq!(r.computed, 3);
    }
}
