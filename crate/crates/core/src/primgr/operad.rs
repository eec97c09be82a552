use crate::exactla::{sparse, FamilyCoords, Field, SparseVec, Subspace};
use crate::freealg::{component_basis, hall_expand, hall_set, HallTree, Mono, TensorPoly};
use crate::monadcore::Monad;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

/// `A_Ass(m, n)`: `m` words using each of the letters `0..n` exactly once.
#[derive(Debug, Clone)]
pub struct AssCell {
    pub m: usize,
    pub n: usize,
    pub basis: Vec<Mono>,
    index: HashMap<Mono, usize>,
}

impl AssCell {
    pub fn new(m: usize, n: usize) -> Self {
        let basis = component_basis(m, &vec![1; n]);
        let index = basis.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
        AssCell { m, n, basis, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, mono: &Mono) -> Option<usize> {
        self.index.get(mono).copied()
    }

    /// Coordinates of a multilinear polynomial with `m` factors in `n` letters.
    pub fn coords(&self, p: &TensorPoly) -> SparseVec {
        debug_assert_eq!((p.letters, p.factors), (self.n, self.m));
        sparse::collect(p.field, p.terms.iter().map(|(mono, c)| (self.index[mono], c.clone())))
    }

    pub fn poly(&self, field: Field, v: &SparseVec) -> TensorPoly {
        let mut p = TensorPoly::zero(field, self.n, self.m, None, false);
        for (i, c) in v {
            p.add_term(self.basis[*i].clone(), c.clone());
        }
        p
    }

    /// `x_1 ⊗ ⋯ ⊗ x_n`.
    pub fn identity_mono(n: usize) -> Mono {
        (0..n as u8).map(|l| vec![l]).collect()
    }
}

fn fmt_mono(m: &Mono) -> String {
    m.iter()
        .map(|w| if w.is_empty() { "1".into() } else { w.iter().map(|l| format!("x{}", l + 1)).collect::<String>() })
        .collect::<Vec<_>>()
        .join("⊗")
}

/// Substitutes the words of `b` into the letters of `a`.
fn substitute(a: &Mono, b: &Mono) -> Mono {
    a.iter().map(|u| u.iter().flat_map(|&l| b[l as usize].iter().copied()).collect()).collect()
}

pub struct AssMonad {
    pub field: Field,
    cells: Mutex<HashMap<(usize, usize), Arc<AssCell>>>,
}

impl AssMonad {
    pub fn new(field: Field) -> Self {
        AssMonad { field, cells: Mutex::new(HashMap::new()) }
    }

    pub fn cell(&self, m: usize, n: usize) -> Arc<AssCell> {
        if let Some(c) = self.cells.lock().expect("cell cache").get(&(m, n)) {
            return c.clone();
        }
        let c = Arc::new(AssCell::new(m, n));
        self.cells.lock().expect("cell cache").entry((m, n)).or_insert(c).clone()
    }
}

impl Monad for AssMonad {
    fn field(&self) -> Field {
        self.field
    }

    fn dim(&self, y: usize, x: usize) -> usize {
        self.cell(y, x).dim()
    }

    fn compose_basis(&self, z: usize, y: usize, x: usize, i: usize, j: usize) -> SparseVec {
        let out = substitute(&self.cell(z, y).basis[i], &self.cell(y, x).basis[j]);
        sparse::unit(self.cell(z, x).index[&out])
    }

    fn unit(&self, x: usize) -> SparseVec {
        sparse::unit(self.cell(x, x).index[&AssCell::identity_mono(x)])
    }

    fn label(&self, y: usize, x: usize, i: usize) -> String {
        fmt_mono(&self.cell(y, x).basis[i])
    }
}

/// A basis element of `A_Lie(m, n)`: a surjection from the letters onto the
/// factors, given by its fibers, and a Hall tree on each fiber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieBasisElt {
    pub fibers: Vec<Vec<u8>>,
    pub trees: Vec<HallTree>,
}

impl fmt::Display for LieBasisElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.trees.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

#[derive(Debug, Clone)]
pub struct LieCell {
    pub m: usize,
    pub n: usize,
    pub basis: Vec<LieBasisElt>,
    /// Images in `A_Ass(m, n)`.
    pub beta: Vec<SparseVec>,
    coords: FamilyCoords,
}

fn surjections(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn rec(i: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            let mut hit = vec![false; m];
            cur.iter().for_each(|&k| hit[k] = true);
            if hit.iter().all(|&h| h) {
                out.push(cur.clone());
            }
            return;
        }
        for k in 0..m {
            cur[i] = k;
            rec(i + 1, m, cur, out);
        }
    }
    if m == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, m, &mut cur, &mut out);
    out
}

impl LieCell {
    pub fn new(field: Field, ass: &AssCell) -> Self {
        let (m, n) = (ass.m, ass.n);
        let mut basis = Vec::new();
        for f in surjections(n, m) {
            let fibers: Vec<Vec<u8>> =
                (0..m).map(|k| (0..n as u8).filter(|&l| f[l as usize] == k).collect()).collect();
            let mut acc: Vec<Vec<HallTree>> = vec![Vec::new()];
            for fib in &fibers {
                let trees = hall_set(&vec![1; fib.len()]).expect("hall order");
                acc = acc
                    .iter()
                    .flat_map(|pre| {
                        trees.iter().map(move |t| {
                            let mut v = pre.clone();
                            v.push(t.relabel(fib));
                            v
                        })
                    })
                    .collect();
            }
            basis.extend(acc.into_iter().map(|trees| LieBasisElt { fibers: fibers.clone(), trees }));
        }
        let beta: Vec<SparseVec> = basis
            .iter()
            .map(|b| {
                let mut p = TensorPoly::one(field, n, 0, None, false);
                for t in &b.trees {
                    p = p.tensor(&hall_expand(field, n, t));
                }
                ass.coords(&p)
            })
            .collect();
        let coords = FamilyCoords::new(field, ass.dim(), &beta).expect("Hall images are independent");
        LieCell { m, n, basis, beta, coords }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn image(&self) -> Subspace {
        self.coords.span()
    }

    /// Lie coordinates of an element of `A_Ass(m, n)` in the image of `β`.
    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        self.coords.coords(v)
    }
}

/// `β : A_Lie(m, n) → A_Ass(m, n)`, fiberwise bracket expansion.
pub fn beta(field: Field, cell: &LieCell, a: &SparseVec) -> SparseVec {
    let mut out = Vec::new();
    for (i, c) in a {
        out = sparse::axpy(field, &out, c, &cell.beta[*i]);
    }
    out
}

pub struct LieMonad {
    pub ass: AssMonad,
    cells: Mutex<HashMap<(usize, usize), Arc<LieCell>>>,
}

impl LieMonad {
    pub fn new(field: Field) -> Self {
        LieMonad { ass: AssMonad::new(field), cells: Mutex::new(HashMap::new()) }
    }

    pub fn cell(&self, m: usize, n: usize) -> Arc<LieCell> {
        if let Some(c) = self.cells.lock().expect("cell cache").get(&(m, n)) {
            return c.clone();
        }
        let c = Arc::new(LieCell::new(self.ass.field, &self.ass.cell(m, n)));
        self.cells.lock().expect("cell cache").entry((m, n)).or_insert(c).clone()
    }
}

impl Monad for LieMonad {
    fn field(&self) -> Field {
        self.ass.field
    }

    fn dim(&self, y: usize, x: usize) -> usize {
        self.cell(y, x).dim()
    }

    fn compose_basis(&self, z: usize, y: usize, x: usize, i: usize, j: usize) -> SparseVec {
        let a = &self.cell(z, y).beta[i];
        let b = &self.cell(y, x).beta[j];
        let c = self.ass.compose(z, y, x, a, b);
        self.cell(z, x).coords(&c).expect("bracket substitution stays in the Lie image")
    }

    fn unit(&self, x: usize) -> SparseVec {
        self.cell(x, x).coords(&self.ass.unit(x)).expect("identity is a tensor of letters")
    }

    fn label(&self, y: usize, x: usize, i: usize) -> String {
        self.cell(y, x).basis[i].to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monadcore::check_monad_laws;

    const QF: Field = Field::Rational;

    #[test]
    fn ass_dims() {
        assert_eq!(AssCell::new(2, 2).dim(), 6);
        assert_eq!(AssCell::new(2, 3).dim(), 24);
        assert_eq!(AssCell::new(3, 0).dim(), 1);
        assert_eq!(AssCell::new(0, 2).dim(), 0);
        assert_eq!(AssCell::new(0, 0).dim(), 1);
    }

    #[test]
    fn lie_dims() {
        let l = LieMonad::new(QF);
        assert_eq!(l.dim(1, 3), 2);
        assert_eq!(l.dim(2, 3), 6);
        assert_eq!(l.dim(3, 2), 0);
        assert_eq!(l.dim(0, 0), 1);
        assert_eq!(l.dim(1, 4), 6);
    }

    #[test]
    fn bracket_image() {
        let l = LieMonad::new(QF);
        let c = l.cell(1, 2);
        let p = l.ass.cell(1, 2).poly(QF, &c.beta[0]);
        assert_eq!(p.to_string(), "X1X2 + (-1)X2X1");
    }

    #[test]
    fn operad_monads_satisfy_laws() {
        let a = AssMonad::new(QF);
        assert!(check_monad_laws(&a, &[0, 1, 2, 3], 100_000, 0).ok());
        let l = LieMonad::new(QF);
        assert!(check_monad_laws(&l, &[0, 1, 2, 3], 100_000, 0).ok());
    }
}
