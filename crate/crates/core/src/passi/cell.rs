use super::PassiError;
use crate::exactla::{sparse, Echelon, Field, SparseVec, Subspace, Q};
use crate::freealg::{
    abelian_magnus_matrix, act, alpha, magnus_tuple, mono_degree, ActOptions, Coproduct, GrTuple, IntMat, Mono,
    Morph, SparseGroupElt, TensorPoly, Word,
};
use crate::monadcore::Monad;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

/// Free groups (`Gr`) or free abelian groups over ℤ (`Fr`), both taken opposite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CatKind {
    Gr,
    Fr,
}

impl CatKind {
    pub fn commutative(self) -> bool {
        self == CatKind::Fr
    }
}

impl fmt::Display for CatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CatKind::Gr => "gr",
            CatKind::Fr => "fr",
        })
    }
}

impl FromStr for CatKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "gr" => Ok(CatKind::Gr),
            "fr" => Ok(CatKind::Fr),
            _ => Err(format!("unknown kind `{s}`, expected gr or fr")),
        }
    }
}

/// Elements of `L(m, n)` for either kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupElt {
    Gr(SparseGroupElt<GrTuple>),
    Fr(SparseGroupElt<IntMat>),
}

impl GroupElt {
    /// Sends a combination of tuples to the given kind, abelianizing for `Fr`.
    pub fn from_tuples(kind: CatKind, e: SparseGroupElt<GrTuple>) -> Self {
        match kind {
            CatKind::Gr => GroupElt::Gr(e),
            CatKind::Fr => GroupElt::Fr(e.map(alpha)),
        }
    }

    pub fn kind(&self) -> CatKind {
        match self {
            GroupElt::Gr(_) => CatKind::Gr,
            GroupElt::Fr(_) => CatKind::Fr,
        }
    }

    pub fn compose(&self, right: &GroupElt) -> Result<GroupElt, PassiError> {
        match (self, right) {
            (GroupElt::Gr(a), GroupElt::Gr(b)) => Ok(GroupElt::Gr(a.compose(b))),
            (GroupElt::Fr(a), GroupElt::Fr(b)) => Ok(GroupElt::Fr(a.compose(b))),
            _ => Err(PassiError::KindMismatch),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            GroupElt::Gr(e) => e.is_zero(),
            GroupElt::Fr(e) => e.is_zero(),
        }
    }
}

impl fmt::Display for GroupElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElt::Gr(e) => write!(f, "{e}"),
            GroupElt::Fr(e) => write!(f, "{e}"),
        }
    }
}

/// All `factors`-tuples of words in `letters` letters of total length at most
/// `max_deg`, sorted by degree and then lexicographically. With `commutative`
/// set only weakly increasing words are produced.
pub fn enumerate_monos(letters: usize, factors: usize, max_deg: usize, commutative: bool) -> Vec<Mono> {
    fn words(letters: usize, len: usize, commutative: bool) -> Vec<Vec<u8>> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            let mut next = Vec::new();
            for w in &out {
                let lo = if commutative { w.last().copied().unwrap_or(0) } else { 0 };
                for l in lo..letters as u8 {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }
    let by_len: Vec<Vec<Vec<u8>>> = (0..=max_deg).map(|k| words(letters, k, commutative)).collect();
    let mut out: Vec<Mono> = vec![Vec::new()];
    for _ in 0..factors {
        let mut next = Vec::new();
        for m in &out {
            let used = mono_degree(m);
            for ws in by_len.iter().take(max_deg - used + 1) {
                for w in ws {
                    let mut v = m.clone();
                    v.push(w.clone());
                    next.push(v);
                }
            }
        }
        out = next;
    }
    out.sort_by(|a, b| mono_degree(a).cmp(&mono_degree(b)).then_with(|| a.cmp(b)));
    out
}

/// `𝒫^D(m, n)`: the group algebra of `𝒞_n^{×m}` modulo the `(D+1)`-st power
/// of its augmentation ideal, with the monomial basis of the Magnus image.
#[derive(Debug, Clone)]
pub struct PassiCell {
    pub kind: CatKind,
    pub field: Field,
    pub n: usize,
    pub m: usize,
    pub trunc: usize,
    pub basis: Vec<Mono>,
    index: HashMap<Mono, usize>,
}

impl PassiCell {
    pub fn new(kind: CatKind, field: Field, n: usize, m: usize, trunc: usize) -> Self {
        let basis = enumerate_monos(n, m, trunc, kind.commutative());
        let index = basis.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
        PassiCell { kind, field, n, m, trunc, basis, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn degree(&self, i: usize) -> usize {
        mono_degree(&self.basis[i])
    }

    pub fn index_of(&self, mono: &Mono) -> usize {
        self.index[mono]
    }

    pub fn zero_poly(&self) -> TensorPoly {
        TensorPoly::zero(self.field, self.n, self.m, Some(self.trunc), self.kind.commutative())
    }

    pub fn monomial(&self, i: usize) -> TensorPoly {
        self.zero_poly().monomial(self.basis[i].clone(), Q::ONE)
    }

    pub fn coords(&self, p: &TensorPoly) -> SparseVec {
        debug_assert_eq!((p.letters, p.factors), (self.n, self.m));
        sparse::collect(
            self.field,
            p.terms
                .iter()
                .filter(|(mono, _)| mono_degree(mono) <= self.trunc)
                .map(|(mono, c)| (self.index[mono], c.clone())),
        )
    }

    pub fn poly(&self, v: &SparseVec) -> TensorPoly {
        let mut p = self.zero_poly();
        for (i, c) in v {
            p.add_term(self.basis[*i].clone(), c.clone());
        }
        p
    }

    /// Image of a single tuple; for `Fr` the tuple is abelianized first.
    pub fn q_tuple(&self, t: &GrTuple) -> SparseVec {
        match self.kind {
            CatKind::Gr => self.coords(&magnus_tuple(self.field, t, self.trunc)),
            CatKind::Fr => self.q_matrix(&alpha(t)),
        }
    }

    pub fn q_matrix(&self, x: &IntMat) -> SparseVec {
        assert_eq!(self.kind, CatKind::Fr, "matrices live in the abelian cells");
        self.coords(&abelian_magnus_matrix(self.field, x, self.trunc))
    }

    pub fn q(&self, e: &GroupElt) -> SparseVec {
        let f = self.field;
        let mut out = Vec::new();
        match e {
            GroupElt::Gr(e) => {
                for (t, c) in &e.terms {
                    out = sparse::axpy(f, &out, c, &self.q_tuple(t));
                }
            }
            GroupElt::Fr(e) => {
                for (x, c) in &e.terms {
                    out = sparse::axpy(f, &out, c, &self.q_matrix(x));
                }
            }
        }
        out
    }

    /// Image of the `d`-th augmentation power: the span of monomials of degree `≥ d`.
    pub fn aug_power(&self, d: usize) -> Result<Subspace, PassiError> {
        if d > self.trunc + 1 {
            return Err(PassiError::DegreeOutOfRange { d, max: self.trunc + 1 });
        }
        let units: Vec<SparseVec> =
            (0..self.dim()).filter(|&i| self.degree(i) >= d).map(sparse::unit).collect();
        Ok(Subspace::span(self.field, self.dim(), &units))
    }

    /// Independent description of the same power: span of the images of
    /// `h · (s_1 − 1) ⋯ (s_k − 1)` with `d ≤ k ≤ D`, each `s_i` a generator or
    /// inverse generator in one factor and `h` such an element or `e`.
    pub fn aug_power_generated(&self, d: usize) -> Subspace {
        let f = self.field;
        if d == 0 {
            return Subspace::full(f, self.dim());
        }
        let mut gens: Vec<TensorPoly> = Vec::new();
        for j in 0..self.m {
            for g in 1..=self.n as i32 {
                for s in [g, -g] {
                    let mut words = vec![Word::identity(self.n); self.m];
                    words[j] = Word::new(self.n, [s]);
                    gens.push(self.poly(&self.q_tuple(&GrTuple::new(self.n, words))));
                }
            }
        }
        let one = self.poly(&self.q_tuple(&GrTuple::trivial(self.m, self.n)));
        let diffs: Vec<TensorPoly> = gens.iter().map(|g| g.sub(&one)).collect();
        let mut lefts = gens.clone();
        lefts.push(one.clone());
        let mut e = Echelon::new(f);
        let mut layer: Vec<TensorPoly> = vec![one];
        for k in 1..=self.trunc {
            layer = layer.iter().flat_map(|p| diffs.iter().map(move |s| p.mul(s))).filter(|p| !p.is_zero()).collect();
            if k >= d {
                for p in &layer {
                    for h in &lefts {
                        e.insert(&self.coords(&h.mul(p)));
                    }
                }
            }
        }
        Subspace::from_echelon(f, self.dim(), e)
    }

    fn display_mono(&self, i: usize) -> String {
        let parts: Vec<String> = self.basis[i]
            .iter()
            .map(|w| {
                if w.is_empty() {
                    "1".to_string()
                } else {
                    w.iter().map(|l| format!("X{}", l + 1)).collect::<Vec<_>>().join("")
                }
            })
            .collect();
        parts.join("⊗")
    }
}

/// `𝒫^d` as a monad, with cells built on demand.
pub struct PassiMonad {
    pub kind: CatKind,
    pub field: Field,
    pub degree: usize,
    cells: Mutex<HashMap<(usize, usize), Arc<PassiCell>>>,
}

impl PassiMonad {
    pub fn new(kind: CatKind, field: Field, degree: usize) -> Self {
        PassiMonad { kind, field, degree, cells: Mutex::new(HashMap::new()) }
    }

    /// Cell `(Y, X) = (m, n)`.
    pub fn cell(&self, y: usize, x: usize) -> Arc<PassiCell> {
        if let Some(c) = self.cells.lock().expect("cell cache").get(&(y, x)) {
            return c.clone();
        }
        let c = Arc::new(PassiCell::new(self.kind, self.field, x, y, self.degree));
        self.cells.lock().expect("cell cache").entry((y, x)).or_insert(c).clone()
    }
}

impl Monad for PassiMonad {
    fn field(&self) -> Field {
        self.field
    }

    fn dim(&self, y: usize, x: usize) -> usize {
        self.cell(y, x).dim()
    }

    /// A basis monomial is the image of a product of differences `(x_i − 1)`;
    /// composing substitutes, which is the reduced action on the right factor.
    fn compose_basis(&self, z: usize, y: usize, x: usize, i: usize, j: usize) -> SparseVec {
        let a = self.cell(z, y);
        let b = self.cell(y, x);
        let t = GrTuple::new(
            y,
            a.basis[i].iter().map(|w| Word::new(y, w.iter().map(|&l| l as i32 + 1))).collect(),
        );
        let out = act(&t, &b.monomial(j), ActOptions { coproduct: Coproduct::GroupLike, reduced: true });
        self.cell(z, x).coords(&out)
    }

    fn unit(&self, x: usize) -> SparseVec {
        self.cell(x, x).q_tuple(&GrTuple::identity(x))
    }

    fn label(&self, y: usize, x: usize, i: usize) -> String {
        self.cell(y, x).display_mono(i)
    }
}

#[cfg(test)]
mod tests {
    use super::super::passi_rank;
    use super::*;
    use crate::monadcore::check_monad_laws;

    const QF: Field = Field::Rational;

    #[test]
    fn cell_dims_match_closed_forms() {
        for kind in [CatKind::Gr, CatKind::Fr] {
            for n in 0..=3 {
                for m in 0..=3 {
                    for d in 0..=3 {
                        let c = PassiCell::new(kind, QF, n, m, d);
                        assert_eq!(c.dim() as u128, passi_rank(kind, n, m, d), "{kind} {n} {m} {d}");
                    }
                }
            }
        }
    }

    #[test]
    fn augmentation_examples() {
        let c = PassiCell::new(CatKind::Gr, QF, 1, 1, 2);
        assert_eq!(c.aug_power(0).unwrap().dim(), 3);
        let sq = c.aug_power(2).unwrap();
        assert_eq!(sq.dim(), 1);
        // q((x1 − e)²) = X1² modulo degree 3.
        let x = c.poly(&c.q_tuple(&GrTuple::from_letters(1, &[&[1]])));
        let one = c.poly(&c.q_tuple(&GrTuple::from_letters(1, &[&[]])));
        let d = x.sub(&one);
        assert_eq!(c.coords(&d.mul(&d)), sparse::unit(2));
        assert_eq!(c.aug_power(3).unwrap().dim(), 0);
        assert!(matches!(c.aug_power(4), Err(PassiError::DegreeOutOfRange { .. })));
    }

    #[test]
    fn augmentation_cross_check() {
        for kind in [CatKind::Gr, CatKind::Fr] {
            for (n, m) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
                let c = PassiCell::new(kind, QF, n, m, 3);
                for d in 0..=4 {
                    assert_eq!(c.aug_power_generated(d), c.aug_power(d).unwrap(), "{kind} {n} {m} {d}");
                }
            }
        }
    }

    #[test]
    fn degree_zero_monad_is_trivial() {
        let t = PassiMonad::new(CatKind::Gr, QF, 0);
        for y in 0..3 {
            for x in 0..3 {
                assert_eq!(t.dim(y, x), 1);
            }
        }
        assert_eq!(t.compose_basis(2, 1, 0, 0, 0), sparse::unit(0));
    }

    #[test]
    fn degree_one_cell() {
        let t = PassiMonad::new(CatKind::Gr, QF, 1);
        assert_eq!(t.dim(1, 1), 2);
        // X ∘ X = X, X ∘ 1 = 0 (the augmentation kills constants).
        assert_eq!(t.compose_basis(1, 1, 1, 1, 1), sparse::unit(1));
        assert_eq!(t.compose_basis(1, 1, 1, 1, 0), vec![]);
        assert_eq!(t.unit(1), sparse::from_i64(QF, &[1, 1]));
    }

    #[test]
    fn composition_matches_tuple_composition() {
        let t = PassiMonad::new(CatKind::Gr, QF, 3);
        let a = GrTuple::from_letters(2, &[&[1, -2], &[2, 2, 1]]);
        let b = GrTuple::from_letters(2, &[&[-1, 2, 1], &[2]]);
        let lhs = t.compose(2, 2, 2, &t.cell(2, 2).q_tuple(&a), &t.cell(2, 2).q_tuple(&b));
        assert_eq!(lhs, t.cell(2, 2).q_tuple(&a.compose(&b)));
        let t = PassiMonad::new(CatKind::Fr, QF, 3);
        let lhs = t.compose(2, 2, 1, &t.cell(2, 2).q_tuple(&a), &t.cell(2, 1).q_matrix(&IntMat::from_rows(&[&[2, -1]])));
        assert_eq!(lhs, t.cell(2, 1).q_matrix(&alpha(&a).compose(&IntMat::from_rows(&[&[2, -1]]))));
    }

    #[test]
    fn small_passi_monads_satisfy_laws() {
        for kind in [CatKind::Gr, CatKind::Fr] {
            for d in 0..=2 {
                let t = PassiMonad::new(kind, QF, d);
                let r = check_monad_laws(&t, &[0, 1, 2], 64, 3);
                assert!(r.ok(), "{kind} {d}: {:?}", r.violations.first());
            }
        }
    }
}
