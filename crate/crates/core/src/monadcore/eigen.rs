use super::module::{Module, SubModule};
use super::monad::{CellInfo, Monad, MonadGrid};
use super::MonadError;
use crate::exactla::{kernel_rows, sparse, Echelon, Field, LinMap, Mat, SparseVec, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// One subspace per cell `(Y, X)`.
pub type SubGrid = BTreeMap<(usize, usize), Subspace>;

/// Objects whose cells are reported, and the waypoints (every label up to the
/// cap) over which ideal conditions are quantified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub cells: Vec<usize>,
    pub cap: usize,
}

impl Window {
    pub fn new(cells: Vec<usize>, cap: usize) -> Self {
        assert!(cells.iter().all(|&c| c <= cap), "window cell beyond the cap");
        Window { cells, cap }
    }

    pub fn waypoints(&self) -> Vec<usize> {
        (0..=self.cap).collect()
    }

    /// Same window with the cap raised by one.
    pub fn raised(&self) -> Self {
        Window { cells: self.cells.clone(), cap: self.cap + 1 }
    }
}

/// Result of a window-relative ideal computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftIdeal {
    pub cells: SubGrid,
    pub cap: usize,
    pub window_relative: bool,
}

/// Smallest family containing `gens` and closed under left composition, on
/// cells `(Z, X)` with `Z` a waypoint and `X` a window object.
pub fn left_ideal_closure(t: &dyn Monad, gens: &[((usize, usize), SparseVec)], win: &Window) -> LeftIdeal {
    let f = t.field();
    let way = win.waypoints();
    let mut ech: BTreeMap<(usize, usize), Echelon> = BTreeMap::new();
    for &z in &way {
        for &x in &win.cells {
            ech.insert((z, x), Echelon::new(f));
        }
    }
    // Worklist: every new vector is pushed through all left compositions.
    let mut work: Vec<((usize, usize), SparseVec)> = gens.to_vec();
    while let Some(((y, x), v)) = work.pop() {
        let Some(e) = ech.get_mut(&(y, x)) else { continue };
        if !e.insert(&v) {
            continue;
        }
        for &z in &way {
            for a in 0..t.dim(z, y) {
                let w = t.compose(z, y, x, &sparse::unit(a), &v);
                if !w.is_empty() && !ech[&(z, x)].reduce(&w).is_empty() {
                    work.push(((z, x), w));
                }
            }
        }
    }
    let cells = ech.into_iter().map(|((z, x), e)| ((z, x), Subspace::from_echelon(f, t.dim(z, x), e))).collect();
    LeftIdeal { cells, cap: win.cap, window_relative: true }
}

/// Verifies `T(Z, Y) ∘ J(Y, X) ⊆ J(Z, X)` on cells present in `j`.
/// Pairs beyond `budget` per cell triple are sampled.
pub fn check_left_ideal(t: &dyn Monad, j: &SubGrid, budget: usize, seed: u64) -> Result<(), MonadError> {
    let keys: Vec<(usize, usize, usize)> = j
        .keys()
        .flat_map(|&(y, x)| j.keys().filter(move |&&(_, x2)| x2 == x).map(move |&(z, _)| (z, y, x)))
        .collect();
    let bad = keys.par_iter().enumerate().find_map_any(|(n, &(z, y, x))| {
        let src = &j[&(y, x)];
        let dst = &j[&(z, x)];
        let (da, db) = (t.dim(z, y), src.dim());
        let ok = |a: usize, b: usize| dst.member(&t.compose(z, y, x, &sparse::unit(a), &src.basis()[b]));
        if da * db <= budget {
            for a in 0..da {
                for b in 0..db {
                    if !ok(a, b) {
                        return Some((z, y, x));
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(n as u64));
            for _ in 0..budget {
                if !ok(rng.random_range(0..da), rng.random_range(0..db)) {
                    return Some((z, y, x));
                }
            }
        }
        None
    });
    match bad {
        Some((z, y, x)) => Err(MonadError::NotALeftIdeal { z, y, x }),
        None => Ok(()),
    }
}

/// `I(Y, X) = {f : J(Z, Y) ∘ f ⊆ J(Z, X) for all waypoints Z}` on window cells.
pub fn idealizer(t: &dyn Monad, j: &SubGrid, win: &Window) -> Result<SubGrid, MonadError> {
    let f = t.field();
    let way = win.waypoints();
    for &z in &way {
        for &x in &win.cells {
            if !j.contains_key(&(z, x)) {
                return Err(MonadError::CellMissing { y: z, x });
            }
        }
    }
    let cells: Vec<(usize, usize)> =
        win.cells.iter().flat_map(|&y| win.cells.iter().map(move |&x| (y, x))).collect();
    let out: Vec<((usize, usize), Subspace)> = cells
        .par_iter()
        .map(|&(y, x)| {
            let dim = t.dim(y, x);
            let mut cols: Vec<SparseVec> = vec![Vec::new(); dim];
            let mut offset = 0;
            for &z in &way {
                let jzy = &j[&(z, y)];
                let jzx = &j[&(z, x)];
                let width = t.dim(z, x);
                for b in jzy.basis() {
                    for (i, col) in cols.iter_mut().enumerate() {
                        let r = jzx.reduce(&t.compose(z, y, x, b, &sparse::unit(i)));
                        col.extend(sparse::shift(&r, offset));
                    }
                    offset += width;
                }
            }
            let map = LinMap::new(f, offset, cols);
            ((y, x), map.kernel())
        })
        .collect();
    Ok(out.into_iter().collect())
}

/// The eigenmonad `I/J` with chosen representatives, tabulated on the window.
pub struct Eigen<'a> {
    pub t: &'a dyn Monad,
    pub window: Window,
    pub j: SubGrid,
    pub idealizer: SubGrid,
    /// RREF basis of the residues of `I(Y, X)` modulo `J(Y, X)`; these are the
    /// representatives of the basis of `E(Y, X)`.
    pub reps: SubGrid,
    pub e: MonadGrid,
}

impl<'a> Eigen<'a> {
    pub fn new(t: &'a dyn Monad, j: SubGrid, win: &Window) -> Result<Self, MonadError> {
        let mut eig = Self::untabulated(t, j, win)?;
        eig.tabulate();
        Ok(eig)
    }

    /// Idealizer and representatives only; `e` carries cell dimensions but no
    /// composition table.
    pub fn untabulated(t: &'a dyn Monad, j: SubGrid, win: &Window) -> Result<Self, MonadError> {
        let idl = idealizer(t, &j, win)?;
        let f = t.field();
        let mut reps = SubGrid::new();
        for (&(y, x), s) in &idl {
            let jyx = &j[&(y, x)];
            let res: Vec<SparseVec> = s.basis().iter().map(|b| jyx.reduce(b)).collect();
            reps.insert((y, x), Subspace::span(f, t.dim(y, x), &res));
        }
        let mut cells = BTreeMap::new();
        for (&(y, x), r) in &reps {
            cells.insert((y, x), CellInfo { dim: r.dim(), labels: Vec::new() });
        }
        Ok(Eigen {
            t,
            window: win.clone(),
            j,
            idealizer: idl,
            reps,
            e: MonadGrid {
                field: f,
                window: win.cells.clone(),
                cells,
                comp: BTreeMap::new(),
                units: BTreeMap::new(),
            },
        })
    }

    /// Coordinates in `E(Y, X)` of an element of `I(Y, X)`.
    pub fn e_coords(&self, y: usize, x: usize, w: &SparseVec) -> Option<SparseVec> {
        let r = self.j[&(y, x)].reduce(w);
        let c = self.reps[&(y, x)].coords(&r)?;
        Some(sparse::from_dense(self.t.field(), &c))
    }

    pub fn rep(&self, y: usize, x: usize, i: usize) -> &SparseVec {
        &self.reps[&(y, x)].basis()[i]
    }

    pub fn rep_of(&self, y: usize, x: usize, v: &SparseVec) -> SparseVec {
        let f = self.t.field();
        let mut out = Vec::new();
        for (i, q) in v {
            out = sparse::axpy(f, &out, q, self.rep(y, x, *i));
        }
        out
    }

    fn tabulate(&mut self) {
        let w = self.window.cells.clone();
        let mut cells = BTreeMap::new();
        for &y in &w {
            for &x in &w {
                let d = self.reps[&(y, x)].dim();
                let labels = (0..d).map(|i| format!("[{}]", fmt_vec(self.rep(y, x, i)))).collect();
                cells.insert((y, x), CellInfo { dim: d, labels });
            }
        }
        let mut triples = Vec::new();
        for &z in &w {
            for &y in &w {
                for &x in &w {
                    triples.push((z, y, x));
                }
            }
        }
        let this = &*self;
        let comp: BTreeMap<_, _> = triples
            .par_iter()
            .map(|&(z, y, x)| {
                let table: Vec<Vec<SparseVec>> = (0..this.reps[&(z, y)].dim())
                    .map(|a| {
                        (0..this.reps[&(y, x)].dim())
                            .map(|b| {
                                let p = this.t.compose(z, y, x, this.rep(z, y, a), this.rep(y, x, b));
                                this.e_coords(z, x, &p).expect("idealizer closed under composition")
                            })
                            .collect()
                    })
                    .collect();
                ((z, y, x), table)
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        let units = w
            .iter()
            .map(|&x| (x, self.e_coords(x, x, &self.t.unit(x)).expect("unit lies in the idealizer")))
            .collect();
        self.e.cells = cells;
        self.e.comp = comp;
        self.e.units = units;
    }

    /// `J(Y, X0)` for all waypoints `Y`, as used by the quotient module `T/J(−, X0)`.
    pub fn column(&self, x0: usize) -> BTreeMap<usize, Subspace> {
        self.window.waypoints().into_iter().map(|y| (y, self.j[&(y, x0)].clone())).collect()
    }

    /// Right action on the canonical bimodule: `[t] ◁ e = [t ∘ rep(e)]`, with
    /// `[t] ∈ (T/J)(Z, Y)` given in free-column coordinates.
    pub fn right_act(&self, z: usize, y: usize, x: usize, t: &SparseVec, e: usize) -> SparseVec {
        let jzy = &self.j[&(z, y)];
        let jzx = &self.j[&(z, x)];
        let free_y = jzy.free_columns();
        let lifted: SparseVec = t.iter().map(|(i, q)| (free_y[*i], q.clone())).collect();
        let p = self.t.compose(z, y, x, &lifted, self.rep(y, x, e));
        let r = jzx.reduce(&p);
        let free_x = jzx.free_columns();
        r.into_iter().map(|(c, q)| (free_x.binary_search(&c).expect("free column"), q)).collect()
    }

    /// Checks that `J ∘ rep(e) ⊆ J` for every basis `e` (well-definedness of the right action).
    pub fn right_action_well_defined(&self) -> bool {
        let way = self.window.waypoints();
        let w = &self.window.cells;
        for &z in &way {
            for &y in w {
                for &x in w {
                    for b in self.j[&(z, y)].basis() {
                        for e in 0..self.reps[&(y, x)].dim() {
                            let p = self.t.compose(z, y, x, b, self.rep(y, x, e));
                            if !self.j[&(z, x)].member(&p) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// `V_J(M)(X)` for window objects: vectors killed by every `J(Y, X)`, `Y` a waypoint.
    pub fn vanishing(&self, m: &dyn Module) -> BTreeMap<usize, Subspace> {
        let f = self.t.field();
        let way = self.window.waypoints();
        self.window
            .cells
            .par_iter()
            .map(|&x| {
                let mut rows: Vec<SparseVec> = Vec::new();
                let dim = m.dim(x);
                for &y in &way {
                    for b in self.j[&(y, x)].basis() {
                        // Matrix of b acting M(X) → M(Y), stored by rows.
                        let mut by_row: Vec<SparseVec> = vec![Vec::new(); m.dim(y)];
                        for k in 0..dim {
                            for (r, q) in m.act(y, x, b, &sparse::unit(k)) {
                                by_row[r].push((k, q));
                            }
                        }
                        rows.extend(by_row.into_iter().filter(|r| !r.is_empty()));
                    }
                }
                (x, kernel_rows(f, dim, &rows))
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect()
    }
}

fn fmt_vec(v: &SparseVec) -> String {
    let parts: Vec<String> = v.iter().map(|(i, q)| format!("{q}*e{i}")).collect();
    if parts.is_empty() { "0".into() } else { parts.join("+") }
}

/// `V_J(M)` as a module over the eigenmonad.
pub struct VanishingModule<'a> {
    pub eigen: &'a Eigen<'a>,
    pub sub: SubModule<'a>,
}

impl<'a> VanishingModule<'a> {
    pub fn new(eigen: &'a Eigen<'a>, m: &'a dyn Module) -> Self {
        let cells = eigen.vanishing(m);
        VanishingModule { eigen, sub: SubModule { parent: m, cells } }
    }

    /// Every `rep(e) ▷ v` lands back in `V`.
    pub fn closed(&self) -> bool {
        let w = &self.eigen.window.cells;
        for &y in w {
            for &x in w {
                for e in 0..self.eigen.reps[&(y, x)].dim() {
                    for k in 0..self.sub.dim(x) {
                        let img = self.sub.parent.act(y, x, self.eigen.rep(y, x, e), &self.sub.lift(x, &sparse::unit(k)));
                        if self.sub.coords(y, &img).is_none() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

impl Module for VanishingModule<'_> {
    fn field(&self) -> Field {
        self.sub.field()
    }

    fn dim(&self, x: usize) -> usize {
        self.sub.dim(x)
    }

    fn act_basis(&self, y: usize, x: usize, i: usize, v: &SparseVec) -> SparseVec {
        let img = self.sub.parent.act(y, x, self.eigen.rep(y, x, i), &self.sub.lift(x, v));
        self.sub.coords(y, &img).expect("vanishing module closed under the eigenmonad")
    }
}

/// Families `φ_X : M(X) → N(X)` commuting with the action of every basis
/// element of `T(Y, X)`, `X, Y ∈ labels`.
pub fn hom_t(t: &dyn Monad, m: &dyn Module, n: &dyn Module, labels: &[usize]) -> Subspace {
    let f = t.field();
    let mut offset = BTreeMap::new();
    let mut total = 0;
    for &x in labels {
        offset.insert(x, total);
        total += n.dim(x) * m.dim(x);
    }
    // Unknown (x, r, c) = φ_X[r][c].
    let var = |x: usize, r: usize, c: usize| offset[&x] + r * m.dim(x) + c;
    let mut eqs: Vec<SparseVec> = Vec::new();
    for &y in labels {
        for &x in labels {
            for a in 0..t.dim(y, x) {
                let an: Vec<SparseVec> = (0..n.dim(x)).map(|r| n.act_basis(y, x, a, &sparse::unit(r))).collect();
                for k in 0..m.dim(x) {
                    let am = m.act_basis(y, x, a, &sparse::unit(k));
                    for s in 0..n.dim(y) {
                        let mut terms = Vec::new();
                        for (c, q) in &am {
                            terms.push((var(y, s, *c), q.clone()));
                        }
                        for (r, v) in an.iter().enumerate() {
                            let q = sparse::get(v, s);
                            if !q.is_zero() {
                                terms.push((var(x, r, k), f.neg(&q)));
                            }
                        }
                        let eq = sparse::collect(f, terms);
                        if !eq.is_empty() {
                            eqs.push(eq);
                        }
                    }
                }
            }
        }
    }
    kernel_rows(f, total, &eqs)
}

/// Reads the block `φ_X` out of a solution vector of [`hom_t`].
pub fn hom_component(m: &dyn Module, n: &dyn Module, labels: &[usize], sol: &SparseVec, x: usize) -> Mat {
    let mut offset = 0;
    for &l in labels {
        if l == x {
            break;
        }
        offset += n.dim(l) * m.dim(l);
    }
    let (rows, cols) = (n.dim(x), m.dim(x));
    let mut out = Mat::zeros(m.field(), rows, cols);
    for (i, q) in sol {
        if *i >= offset && *i < offset + rows * cols {
            let k = i - offset;
            out.set(k / cols, k % cols, q.clone());
        }
    }
    out
}

/// `(T/J) ⊗_E N` on the window: the direct sum over `Y` of `(T/J)(Z, Y) ⊗ N(Y)`
/// modulo `[t ◁ e] ⊗ n − [t] ⊗ (e ▷ n)`.
pub struct BalancedTensor<'a> {
    pub eigen: &'a Eigen<'a>,
    pub n: &'a dyn Module,
    /// Per `Z`: block offsets by `Y`, total dimension, and the relation span.
    cells: BTreeMap<usize, (BTreeMap<usize, usize>, Subspace)>,
}

impl<'a> BalancedTensor<'a> {
    pub fn new(eigen: &'a Eigen<'a>, n: &'a dyn Module, objects: &[usize]) -> Self {
        let f = eigen.t.field();
        let w = &eigen.window.cells;
        let cells = objects
            .par_iter()
            .map(|&z| {
                let mut offs = BTreeMap::new();
                let mut total = 0;
                for &y in w {
                    offs.insert(y, total);
                    total += Self::qdim(eigen, z, y) * n.dim(y);
                }
                let mut e = Echelon::new(f);
                for &y in w {
                    let qy = Self::qdim(eigen, z, y);
                    for &y2 in w {
                        for ei in 0..eigen.reps[&(y, y2)].dim() {
                            for ti in 0..qy {
                                let te = eigen.right_act(z, y, y2, &sparse::unit(ti), ei);
                                for k in 0..n.dim(y2) {
                                    // [t◁e] ⊗ n_k in block y2.
                                    let mut rel: Vec<(usize, crate::exactla::Q)> = te
                                        .iter()
                                        .map(|(tj, q)| (offs[&y2] + tj * n.dim(y2) + k, q.clone()))
                                        .collect();
                                    // − [t] ⊗ (e ▷ n_k) in block y.
                                    for (r, q) in n.act_basis(y, y2, ei, &sparse::unit(k)) {
                                        rel.push((offs[&y] + ti * n.dim(y) + r, f.neg(&q)));
                                    }
                                    let rel = sparse::collect(f, rel);
                                    if !rel.is_empty() {
                                        e.insert(&rel);
                                    }
                                }
                            }
                        }
                    }
                }
                (z, (offs, Subspace::from_echelon(f, total, e)))
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        BalancedTensor { eigen, n, cells }
    }

    fn qdim(eigen: &Eigen, z: usize, y: usize) -> usize {
        eigen.j[&(z, y)].codim()
    }

    pub fn relations(&self, z: usize) -> &Subspace {
        &self.cells[&z].1
    }

    /// Class of `[t] ⊗ n` with `t ∈ (T/J)(Z, Y)` and `n ∈ N(Y)` in coordinates.
    pub fn class(&self, z: usize, y: usize, t: &SparseVec, nv: &SparseVec) -> SparseVec {
        let f = self.eigen.t.field();
        let (offs, rel) = &self.cells[&z];
        let nd = self.n.dim(y);
        let mut items = Vec::new();
        for (ti, a) in t {
            for (k, b) in nv {
                items.push((offs[&y] + ti * nd + k, f.mul(a, b)));
            }
        }
        rel.reduce(&sparse::collect(f, items))
    }

    pub fn unit_class(&self, y: usize, nv: &SparseVec) -> SparseVec {
        let jyy = &self.eigen.j[&(y, y)];
        let r = jyy.reduce(&self.eigen.t.unit(y));
        let free = jyy.free_columns();
        let t: SparseVec = r.into_iter().map(|(c, q)| (free.binary_search(&c).expect("free"), q)).collect();
        self.class(y, y, &t, nv)
    }
}

impl Module for BalancedTensor<'_> {
    fn field(&self) -> Field {
        self.eigen.t.field()
    }

    fn dim(&self, z: usize) -> usize {
        self.cells.get(&z).map_or(0, |(_, rel)| rel.codim())
    }

    /// `a ▷ ([t] ⊗ n) = [a ∘ t] ⊗ n`, in free-column coordinates of the relation span.
    fn act_basis(&self, z2: usize, z: usize, i: usize, v: &SparseVec) -> SparseVec {
        let f = self.field();
        let (offs, rel) = &self.cells[&z];
        let free = rel.free_columns();
        let full: SparseVec = v.iter().map(|(c, q)| (free[*c], q.clone())).collect();
        let mut out = Vec::new();
        for &y in &self.eigen.window.cells {
            let nd = self.n.dim(y);
            let jzy = &self.eigen.j[&(z, y)];
            let fz = jzy.free_columns();
            let jz2y = &self.eigen.j[&(z2, y)];
            let fz2 = jz2y.free_columns();
            let lo = offs[&y];
            let hi = lo + fz.len() * nd;
            for (idx, q) in full.iter().filter(|(c, _)| *c >= lo && *c < hi) {
                let (ti, k) = ((idx - lo) / nd, (idx - lo) % nd);
                let at = self.eigen.t.compose(z2, z, y, &sparse::unit(i), &sparse::unit(fz[ti]));
                let r = jz2y.reduce(&at);
                let t: SparseVec = r
                    .into_iter()
                    .map(|(c, x)| (fz2.binary_search(&c).expect("free"), f.mul(&x, q)))
                    .collect();
                out = sparse::add(f, &out, &self.class(z2, y, &t, &sparse::unit(k)));
            }
        }
        let free2 = self.cells[&z2].1.free_columns();
        out.into_iter().map(|(c, q)| (free2.binary_search(&c).expect("reduced"), q)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjunctionReport {
    pub counit_epi: bool,
    pub unit_mono: bool,
}

/// `T/J ⊗_E V_J(M) → M` is onto on every window cell.
pub fn counit_epi(eigen: &Eigen, m: &dyn Module) -> bool {
    let f = eigen.t.field();
    let v = eigen.vanishing(m);
    let w = &eigen.window.cells;
    w.iter().all(|&z| {
        let mut e = Echelon::new(f);
        for &y in w {
            let jzy = &eigen.j[&(z, y)];
            for c in jzy.free_columns() {
                for b in v[&y].basis() {
                    e.insert(&m.act(z, y, &sparse::unit(c), b));
                }
            }
        }
        e.rank() == m.dim(z)
    })
}

/// `N → (T/J ⊗_E N)`, `n ↦ [1] ⊗ n`, is injective on every window cell.
pub fn unit_mono(tensor: &BalancedTensor) -> bool {
    let f = tensor.field();
    tensor.eigen.window.cells.iter().all(|&y| {
        let mut e = Echelon::new(f);
        for k in 0..tensor.n.dim(y) {
            e.insert(&tensor.unit_class(y, &sparse::unit(k)));
        }
        e.rank() == tensor.n.dim(y)
    })
}

/// `Ann(M)(Y, X) = {f : f ▷ M(X) = 0}` on window cells.
pub fn annihilator(t: &dyn Monad, m: &dyn Module, cells: &[usize]) -> SubGrid {
    let f = t.field();
    let mut out = SubGrid::new();
    for &y in cells {
        for &x in cells {
            let cols: Vec<SparseVec> = (0..t.dim(y, x))
                .map(|i| {
                    let mut col = Vec::new();
                    for k in 0..m.dim(x) {
                        col.extend(sparse::shift(&m.act_basis(y, x, i, &sparse::unit(k)), k * m.dim(y)));
                    }
                    col
                })
                .collect();
            out.insert((y, x), LinMap::new(f, m.dim(x) * m.dim(y), cols).kernel());
        }
    }
    out
}

/// Builds `J` on waypoint × window cells from a per-cell rule.
pub fn subgrid_from(win: &Window, rule: impl Fn(usize, usize) -> Subspace) -> SubGrid {
    let mut out = SubGrid::new();
    for z in win.waypoints() {
        for &x in &win.cells {
            out.insert((z, x), rule(z, x));
        }
    }
    out
}
