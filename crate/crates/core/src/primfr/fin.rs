use super::ring::RingB;
use crate::exactla::{kernel_rows, sparse, Field, SparseVec, Subspace, Q};
use crate::freealg::IntMat;
use crate::monadcore::Monad;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

/// All maps `{0..n} → {0..m}`, as value lists in lexicographic order.
pub fn all_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    tuples(n, m)
}

fn tuples(len: usize, base: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..base).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    all_maps(n, n).into_iter().filter(|f| is_bijective(f, n)).collect()
}

pub fn is_bijective(f: &[usize], m: usize) -> bool {
    if f.len() != m {
        return false;
    }
    let mut seen = vec![false; m];
    f.iter().all(|&k| !std::mem::replace(&mut seen[k], true))
}

/// `g ∘ f`.
pub fn after(g: &[usize], f: &[usize]) -> Vec<usize> {
    f.iter().map(|&k| g[k]).collect()
}

/// `c_{m,j} ∈ Fin(m, m−1)`, merging `j` and `j+1` (1-based `j`).
pub fn c_map(m: usize, j: usize) -> Vec<usize> {
    assert!(j >= 1 && j < m);
    (1..=m).map(|k| if k <= j { k - 1 } else { k - 2 }).collect()
}

/// `h_{m,j} ∈ Fin(m, m+1)`, skipping `j+1` (`0 ≤ j ≤ m`).
pub fn h_map(m: usize, j: usize) -> Vec<usize> {
    assert!(j <= m);
    (1..=m).map(|k| if k <= j { k - 1 } else { k }).collect()
}

/// Basis element `(e_{b_1} ⊗ ⋯ ⊗ e_{b_n})_f` with `f : n → m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FinMapElt {
    pub m: usize,
    pub f: Vec<usize>,
    pub b: Vec<usize>,
}

impl FinMapElt {
    pub fn new(m: usize, f: Vec<usize>, b: Vec<usize>) -> Self {
        assert_eq!(f.len(), b.len());
        assert!(f.iter().all(|&k| k < m));
        FinMapElt { m, f, b }
    }

    /// Ground-ring element `(1 ⊗ ⋯ ⊗ 1)_f`.
    pub fn plain(m: usize, f: Vec<usize>) -> Self {
        let b = vec![0; f.len()];
        FinMapElt::new(m, f, b)
    }

    pub fn n(&self) -> usize {
        self.f.len()
    }

    pub fn fiber_size(&self, l: usize) -> usize {
        self.f.iter().filter(|&&k| k == l).count()
    }
}

impl fmt::Display for FinMapElt {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let f: Vec<String> = self.f.iter().map(|k| (k + 1).to_string()).collect();
        write!(out, "[{}]", f.join(","))?;
        if self.b.iter().any(|&x| x != 0) {
            let b: Vec<String> = self.b.iter().map(|x| format!("e{x}")).collect();
            write!(out, "⊗({})", b.join(","))?;
        }
        Ok(())
    }
}

/// Linear combination of [`FinMapElt`]s in one cell `(m, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinComb {
    pub field: Field,
    pub m: usize,
    pub n: usize,
    pub terms: BTreeMap<FinMapElt, Q>,
}

impl FinComb {
    pub fn zero(field: Field, m: usize, n: usize) -> Self {
        FinComb { field, m, n, terms: BTreeMap::new() }
    }

    pub fn basis(field: Field, e: FinMapElt) -> Self {
        let mut c = FinComb::zero(field, e.m, e.n());
        c.add_term(e, Q::ONE);
        c
    }

    pub fn add_term(&mut self, e: FinMapElt, c: Q) {
        debug_assert_eq!((e.m, e.n()), (self.m, self.n));
        let c = self.field.reduce(&c);
        if c.is_zero() {
            return;
        }
        let s = match self.terms.get(&e) {
            Some(x) => self.field.add(x, &c),
            None => c,
        };
        if s.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, s);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &FinComb) -> FinComb {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> FinComb {
        let mut out = FinComb::zero(self.field, self.m, self.n);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), self.field.mul(c, x));
        }
        out
    }

    pub fn sub(&self, o: &FinComb) -> FinComb {
        self.add(&o.scale(&Q::int(-1)))
    }
}

impl fmt::Display for FinComb {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(out, " + ")?;
            }
            if c.is_one() {
                write!(out, "{e}")?;
            } else {
                write!(out, "({c})·{e}")?;
            }
        }
        Ok(())
    }
}

/// One cell of `L^B_Fin` or `L^B_𝔖`, with a fixed basis order.
#[derive(Debug, Clone)]
pub struct FinCell {
    pub m: usize,
    pub n: usize,
    pub sym: bool,
    pub basis: Vec<FinMapElt>,
    index: HashMap<FinMapElt, usize>,
}

impl FinCell {
    pub fn new(m: usize, n: usize, bdim: usize, sym: bool) -> Self {
        let maps = if sym {
            if m == n { permutations(n) } else { Vec::new() }
        } else {
            all_maps(n, m)
        };
        let coeffs = tuples(n, bdim);
        let basis: Vec<FinMapElt> = maps
            .iter()
            .flat_map(|f| coeffs.iter().map(move |b| FinMapElt::new(m, f.clone(), b.clone())))
            .collect();
        let index = basis.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        FinCell { m, n, sym, basis, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, e: &FinMapElt) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn coords(&self, v: &FinComb) -> SparseVec {
        sparse::collect(
            v.field,
            v.terms.iter().map(|(e, c)| (self.index[e], c.clone())),
        )
    }

    pub fn comb(&self, field: Field, v: &SparseVec) -> FinComb {
        let mut out = FinComb::zero(field, self.m, self.n);
        for (i, c) in v {
            out.add_term(self.basis[*i].clone(), c.clone());
        }
        out
    }
}

/// `(b′)_g ∘ (b)_f = (b_1 b′_{f(1)} ⊗ ⋯ ⊗ b_n b′_{f(n)})_{g∘f}`.
pub fn compose_elts(ring: &RingB, outer: &FinMapElt, inner: &FinMapElt) -> FinComb {
    assert_eq!(outer.n(), inner.m);
    let factors: Vec<Vec<Q>> = inner
        .b
        .iter()
        .zip(&inner.f)
        .map(|(&bi, &fi)| ring.mul(&ring.basis(bi), &ring.basis(outer.b[fi])))
        .collect();
    let g = after(&outer.f, &inner.f);
    let mut out = FinComb::zero(ring.field, outer.m, inner.n());
    for (b, c) in ring.expand(&factors) {
        out.add_term(FinMapElt::new(outer.m, g.clone(), b), c);
    }
    out
}

/// Bilinear extension of [`compose_elts`].
pub fn compose(ring: &RingB, outer: &FinComb, inner: &FinComb) -> FinComb {
    let mut out = FinComb::zero(ring.field, outer.m, inner.n);
    for (a, x) in &outer.terms {
        for (b, y) in &inner.terms {
            let xy = ring.field.mul(x, y);
            for (e, c) in compose_elts(ring, a, b).terms {
                out.add_term(e, ring.field.mul(&xy, &c));
            }
        }
    }
    out
}

/// `(1_B^{⊗n})_{id_n}`.
pub fn unit_elt(ring: &RingB, n: usize) -> FinComb {
    let id: Vec<usize> = (0..n).collect();
    let mut out = FinComb::zero(ring.field, n, n);
    for (b, c) in ring.expand(&vec![ring.one(); n]) {
        out.add_term(FinMapElt::new(n, id.clone(), b), c);
    }
    out
}

/// The monad `L^B_𝔖`, or `L_Fin = kFin` when `B = k`.
pub struct FinMonad {
    pub ring: RingB,
    pub sym: bool,
    cells: Mutex<HashMap<(usize, usize), Arc<FinCell>>>,
}

impl FinMonad {
    pub fn symmetric(ring: RingB) -> Self {
        FinMonad { ring, sym: true, cells: Mutex::new(HashMap::new()) }
    }

    /// Composition only respects tensors along bijections, so the full
    /// category of finite sets is linearized with `B = k`.
    pub fn fin(field: Field) -> Self {
        FinMonad { ring: RingB::ground(field), sym: false, cells: Mutex::new(HashMap::new()) }
    }

    pub fn cell(&self, y: usize, x: usize) -> Arc<FinCell> {
        let mut cells = self.cells.lock().expect("cell cache poisoned");
        cells
            .entry((y, x))
            .or_insert_with(|| Arc::new(FinCell::new(y, x, self.ring.dim(), self.sym)))
            .clone()
    }
}

impl Monad for FinMonad {
    fn field(&self) -> Field {
        self.ring.field
    }

    fn dim(&self, y: usize, x: usize) -> usize {
        self.cell(y, x).dim()
    }

    fn compose_basis(&self, z: usize, y: usize, x: usize, i: usize, j: usize) -> SparseVec {
        let a = &self.cell(z, y).basis[i];
        let b = &self.cell(y, x).basis[j];
        self.cell(z, x).coords(&compose_elts(&self.ring, a, b))
    }

    fn unit(&self, x: usize) -> SparseVec {
        self.cell(x, x).coords(&unit_elt(&self.ring, x))
    }

    fn label(&self, y: usize, x: usize, i: usize) -> String {
        self.cell(y, x).basis[i].to_string()
    }
}

/// Matrix with entries in `B`; `τ^Y` for `Y ∈ M_{m, m′}(R)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMat {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Q>>,
}

impl RMat {
    pub fn from_int(ring: &RingB, x: &IntMat) -> Self {
        let entries = (0..x.rows).flat_map(|i| (0..x.cols).map(move |j| (i, j))).map(|(i, j)| ring.from_int(x.get(i, j))).collect();
        RMat { rows: x.rows, cols: x.cols, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> &[Q] {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Vec<Q>) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn mul(&self, ring: &RingB, o: &RMat) -> RMat {
        assert_eq!(self.cols, o.rows);
        let mut out = RMat { rows: self.rows, cols: o.cols, entries: vec![ring.zero(); self.rows * o.cols] };
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = ring.zero();
                for k in 0..self.cols {
                    acc = ring.add(&acc, &ring.mul(self.get(i, k), o.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}

/// Generators of the free-module category acting on `L̃_Fin`, indexed as in
/// the action formulas (`j` 1-based except for insertions).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrGenerator {
    /// `I_{j−1} ⊕ [1 1] ⊕ I_{m−j}`
    Split(usize),
    /// `I_{j−1} ⊕ [1 1]ᵗ ⊕ I_{m−j−1}`
    Merge(usize),
    /// `I_j ⊕ ρ ⊕ I_{m−j}`
    Insert(usize),
    /// `I_{j−1} ⊕ ρᵗ ⊕ I_{m−j}`
    Delete(usize),
    /// `I_{j−1} ⊕ [a] ⊕ I_{m−j}`
    Scale(usize, Vec<Q>),
}

impl FrGenerator {
    /// Target object when acting on cells with `f : n → m`.
    pub fn target(&self, m: usize) -> usize {
        match self {
            FrGenerator::Split(_) | FrGenerator::Insert(_) => m + 1,
            FrGenerator::Merge(_) | FrGenerator::Delete(_) => m - 1,
            FrGenerator::Scale(..) => m,
        }
    }

    pub fn valid(&self, m: usize) -> bool {
        match *self {
            FrGenerator::Split(j) | FrGenerator::Delete(j) | FrGenerator::Scale(j, _) => j >= 1 && j <= m,
            FrGenerator::Merge(j) => j >= 1 && j < m,
            FrGenerator::Insert(j) => j <= m,
        }
    }

    /// The `m × target` matrix of the generator.
    pub fn matrix(&self, ring: &RingB, m: usize) -> RMat {
        assert!(self.valid(m));
        let t = self.target(m);
        let mut y = RMat { rows: m, cols: t, entries: vec![ring.zero(); m * t] };
        // 1-based row `i` ↦ 1-based column carrying the identity entry.
        let col = |i: usize| -> Option<usize> {
            match *self {
                FrGenerator::Split(j) | FrGenerator::Insert(j) => Some(if i <= j { i } else { i + 1 }),
                FrGenerator::Merge(j) => Some(if i <= j { i } else { i - 1 }),
                FrGenerator::Delete(j) => (i != j).then_some(if i < j { i } else { i - 1 }),
                FrGenerator::Scale(..) => Some(i),
            }
        };
        for i in 1..=m {
            if let Some(k) = col(i) {
                y.set(i - 1, k - 1, ring.one());
            }
        }
        match *self {
            FrGenerator::Split(j) => y.set(j - 1, j, ring.one()),
            FrGenerator::Scale(j, ref a) => y.set(j - 1, j - 1, a.clone()),
            _ => {}
        }
        y
    }
}

/// The canonical bimodule `L̃^B_Fin` with its left action of matrices over `R`
/// and right action of `L^B_𝔖`.
pub struct FinBimodule {
    pub ring: RingB,
}

impl FinBimodule {
    pub fn new(ring: RingB) -> Self {
        FinBimodule { ring }
    }

    pub fn field(&self) -> Field {
        self.ring.field
    }

    pub fn cell(&self, m: usize, n: usize) -> FinCell {
        FinCell::new(m, n, self.ring.dim(), false)
    }

    /// `τ^Y ▷ (r_1 ⊗ ⋯ ⊗ r_n)_f = Σ_{f′} (r_1 Y_{f(1) f′(1)} ⊗ ⋯ ⊗ r_n Y_{f(n) f′(n)})_{f′}`.
    pub fn act(&self, y: &RMat, v: &FinComb) -> FinComb {
        assert_eq!(y.rows, v.m);
        let ring = &self.ring;
        let mut out = FinComb::zero(ring.field, y.cols, v.n);
        for (e, c) in &v.terms {
            // Allowed targets per letter, with the factor `r_i Y_{f(i), k}`.
            let options: Vec<Vec<(usize, Vec<Q>)>> = e
                .f
                .iter()
                .zip(&e.b)
                .map(|(&fi, &bi)| {
                    (0..y.cols)
                        .filter_map(|k| {
                            let p = ring.mul(&ring.basis(bi), y.get(fi, k));
                            (!ring.is_zero(&p)).then_some((k, p))
                        })
                        .collect()
                })
                .collect();
            let mut choice = vec![0usize; e.n()];
            if options.iter().any(Vec::is_empty) {
                continue;
            }
            loop {
                let f2: Vec<usize> = choice.iter().zip(&options).map(|(&k, o)| o[k].0).collect();
                let factors: Vec<Vec<Q>> = choice.iter().zip(&options).map(|(&k, o)| o[k].1.clone()).collect();
                for (b, x) in ring.expand(&factors) {
                    out.add_term(FinMapElt::new(y.cols, f2.clone(), b), ring.field.mul(c, &x));
                }
                // Odometer step.
                let mut i = 0;
                loop {
                    if i == choice.len() {
                        break;
                    }
                    choice[i] += 1;
                    if choice[i] < options[i].len() {
                        break;
                    }
                    choice[i] = 0;
                    i += 1;
                }
                if i == choice.len() {
                    break;
                }
            }
        }
        out
    }

    pub fn act_int(&self, y: &IntMat, v: &FinComb) -> FinComb {
        self.act(&RMat::from_int(&self.ring, y), v)
    }

    /// The action of a generator, by its closed formula.
    pub fn act_generator(&self, g: &FrGenerator, v: &FinComb) -> FinComb {
        let m = v.m;
        assert!(g.valid(m));
        let t = g.target(m);
        let mut out = FinComb::zero(self.field(), t, v.n);
        for (e, c) in &v.terms {
            match *g {
                FrGenerator::Split(j) => {
                    let c_map = c_map(m + 1, j);
                    for f2 in all_maps(e.n(), m + 1) {
                        if after(&c_map, &f2) == e.f {
                            out.add_term(FinMapElt::new(t, f2, e.b.clone()), c.clone());
                        }
                    }
                }
                FrGenerator::Merge(j) => {
                    out.add_term(FinMapElt::new(t, after(&c_map(m, j), &e.f), e.b.clone()), c.clone());
                }
                FrGenerator::Insert(j) => {
                    out.add_term(FinMapElt::new(t, after(&h_map(m, j), &e.f), e.b.clone()), c.clone());
                }
                FrGenerator::Delete(j) => {
                    let h = h_map(m - 1, j - 1);
                    if let Some(f2) = e.f.iter().map(|&k| h.iter().position(|&x| x == k)).collect::<Option<Vec<_>>>() {
                        out.add_term(FinMapElt::new(t, f2, e.b.clone()), c.clone());
                    }
                }
                FrGenerator::Scale(j, ref a) => {
                    let factors: Vec<Vec<Q>> = e
                        .f
                        .iter()
                        .zip(&e.b)
                        .map(|(&fi, &bi)| {
                            let r = self.ring.basis(bi);
                            if fi == j - 1 { self.ring.mul(&r, a) } else { r }
                        })
                        .collect();
                    for (b, x) in self.ring.expand(&factors) {
                        out.add_term(FinMapElt::new(t, e.f.clone(), b), self.field().mul(c, &x));
                    }
                }
            }
        }
        out
    }

    /// `(id_{j−1} ⊕ θ ⊕ id_{m−j}) ▷ v` with `θ = τ^{[1 1]} − τ^{[1 0]} − τ^{[0 1]}`.
    ///
    /// On `(r)_f` this is the sum over lifts `f′` (`c_{m+1,j} ∘ f′ = f`) with both
    /// new fibers nonempty when `f⁻¹(j) ≠ ∅`, and `−(r)_{h_{m,j} ∘ f}` otherwise.
    pub fn theta_action(&self, j: usize, v: &FinComb) -> FinComb {
        assert!(j >= 1 && j <= v.m);
        self.act_generator(&FrGenerator::Split(j), v)
            .sub(&self.act_generator(&FrGenerator::Insert(j), v))
            .sub(&self.act_generator(&FrGenerator::Insert(j - 1), v))
    }

    /// `V_{I^pr}(L̃_Fin)(m, n)`: common kernel of the `θ`-dilations.
    pub fn vanishing(&self, m: usize, n: usize) -> Subspace {
        let src = self.cell(m, n);
        let dst = self.cell(m + 1, n);
        let f = self.field();
        let mut rows = Vec::new();
        for j in 1..=m {
            let mut by_row: Vec<SparseVec> = vec![Vec::new(); dst.dim()];
            for (k, e) in src.basis.iter().enumerate() {
                let img = self.theta_action(j, &FinComb::basis(f, e.clone()));
                for (r, c) in dst.coords(&img) {
                    by_row[r].push((k, c));
                }
            }
            rows.extend(by_row.into_iter().filter(|r| !r.is_empty()));
        }
        kernel_rows(f, src.dim(), &rows)
    }

    /// Right action `v ◁ s` of `s ∈ L^B_𝔖(n, n)`.
    pub fn right_act(&self, v: &FinComb, s: &FinComb) -> FinComb {
        assert!(s.terms.keys().all(|e| is_bijective(&e.f, e.m)));
        compose(&self.ring, v, s)
    }

    /// `𝔯 : L̃_Fin → L_𝔖`, keeping exactly the bijective components.
    pub fn retraction(&self, v: &FinComb) -> FinComb {
        let mut out = FinComb::zero(self.field(), v.m, v.n);
        for (e, c) in &v.terms {
            if is_bijective(&e.f, e.m) {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    fn random_elt(&self, rng: &mut ChaCha8Rng, m: usize, n: usize) -> FinComb {
        let cell = self.cell(m, n);
        let mut out = FinComb::zero(self.field(), m, n);
        if cell.dim() == 0 {
            return out;
        }
        for _ in 0..3 {
            let e = cell.basis[rng.random_range(0..cell.dim())].clone();
            out.add_term(e, Q::int(rng.random_range(-2..=2)));
        }
        out
    }

    fn random_ring_elt(&self, rng: &mut ChaCha8Rng) -> Vec<Q> {
        (0..self.ring.dim()).map(|_| self.field().from_i64(rng.random_range(-2..=2))).collect()
    }

    fn random_matrix(&self, rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> RMat {
        let entries = (0..rows * cols)
            .map(|_| if rng.random_bool(0.5) { self.ring.zero() } else { self.random_ring_elt(rng) })
            .collect();
        RMat { rows, cols, entries }
    }

    fn random_generator(&self, rng: &mut ChaCha8Rng, m: usize) -> FrGenerator {
        loop {
            let j = rng.random_range(0..=m);
            let g = match rng.random_range(0..5) {
                0 => FrGenerator::Split(j),
                1 => FrGenerator::Merge(j),
                2 => FrGenerator::Insert(j),
                3 => FrGenerator::Delete(j),
                _ => FrGenerator::Scale(j, self.random_ring_elt(rng)),
            };
            if g.valid(m) {
                return g;
            }
        }
    }

    /// Checks the bimodule axioms on `samples` random instances with objects `≤ max`.
    pub fn check_axioms(&self, max: usize, samples: usize, seed: u64) -> BimoduleReport {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut report = BimoduleReport { samples, seed, ..Default::default() };
        for _ in 0..samples {
            let (m, n) = (rng.random_range(1..=max), rng.random_range(0..=max));
            let v = self.random_elt(&mut rng, m, n);

            let g = self.random_generator(&mut rng, m);
            if self.act_generator(&g, &v) != self.act(&g.matrix(&self.ring, m), &v) {
                report.generator_failures += 1;
            }

            let (m1, m2) = (rng.random_range(0..=max), rng.random_range(0..=max));
            let (y1, y2) = (self.random_matrix(&mut rng, m, m1), self.random_matrix(&mut rng, m1, m2));
            if self.act(&y2, &self.act(&y1, &v)) != self.act(&y1.mul(&self.ring, &y2), &v) {
                report.left_failures += 1;
            }

            let sym = FinCell::new(n, n, self.ring.dim(), true);
            let mut s = FinComb::zero(self.field(), n, n);
            for _ in 0..2 {
                s.add_term(sym.basis[rng.random_range(0..sym.dim())].clone(), Q::int(rng.random_range(-2..=2)));
            }
            if self.act(&y1, &self.right_act(&v, &s)) != self.right_act(&self.act(&y1, &v), &s) {
                report.right_failures += 1;
            }
            if self.retraction(&self.right_act(&v, &s)) != self.right_act(&self.retraction(&v), &s) {
                report.retraction_failures += 1;
            }
        }
        report
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BimoduleReport {
    pub samples: usize,
    pub seed: u64,
    /// Closed generator formulas disagree with the matrix action.
    pub generator_failures: usize,
    pub left_failures: usize,
    pub right_failures: usize,
    pub retraction_failures: usize,
}

impl BimoduleReport {
    pub fn ok(&self) -> bool {
        self.generator_failures + self.left_failures + self.right_failures + self.retraction_failures == 0
    }
}
