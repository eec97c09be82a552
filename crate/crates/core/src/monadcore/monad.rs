use crate::exactla::{sparse, Field, Mat, Q, SparseVec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A monad in `Mat_k` restricted to the objects a caller asks about: based
/// spaces `T(Y, X)`, composition `T(Z, Y) × T(Y, X) → T(Z, X)` on basis
/// elements, and units.
pub trait Monad: Sync {
    fn field(&self) -> Field;
    fn dim(&self, y: usize, x: usize) -> usize;
    fn compose_basis(&self, z: usize, y: usize, x: usize, i: usize, j: usize) -> SparseVec;
    fn unit(&self, x: usize) -> SparseVec;

    fn label(&self, y: usize, x: usize, i: usize) -> String {
        format!("e{i}@({y},{x})")
    }

    /// Bilinear extension of [`Monad::compose_basis`].
    fn compose(&self, z: usize, y: usize, x: usize, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let f = self.field();
        let mut items = Vec::new();
        for (i, u) in a {
            for (j, v) in b {
                let uv = f.mul(u, v);
                for (k, w) in self.compose_basis(z, y, x, *i, *j) {
                    items.push((k, f.mul(&uv, &w)));
                }
            }
        }
        sparse::collect(f, items)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellInfo {
    pub dim: usize,
    pub labels: Vec<String>,
}

/// A fully tabulated monad on a finite set of labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonadGrid {
    pub field: Field,
    pub window: Vec<usize>,
    pub cells: BTreeMap<(usize, usize), CellInfo>,
    /// `comp[(z, y, x)][i][j]` is `e_i ∘ e_j`.
    pub comp: BTreeMap<(usize, usize, usize), Vec<Vec<SparseVec>>>,
    pub units: BTreeMap<usize, SparseVec>,
}

impl Monad for MonadGrid {
    fn field(&self) -> Field {
        self.field
    }

    fn dim(&self, y: usize, x: usize) -> usize {
        self.cells.get(&(y, x)).map_or(0, |c| c.dim)
    }

    fn compose_basis(&self, z: usize, y: usize, x: usize, i: usize, j: usize) -> SparseVec {
        self.comp[&(z, y, x)][i][j].clone()
    }

    fn unit(&self, x: usize) -> SparseVec {
        self.units[&x].clone()
    }

    fn label(&self, y: usize, x: usize, i: usize) -> String {
        self.cells[&(y, x)].labels[i].clone()
    }
}

impl MonadGrid {
    /// Tabulates `t` on `window`.
    pub fn materialize(t: &dyn Monad, window: &[usize]) -> MonadGrid {
        use rayon::prelude::*;
        let mut cells = BTreeMap::new();
        for &y in window {
            for &x in window {
                let dim = t.dim(y, x);
                cells.insert((y, x), CellInfo { dim, labels: (0..dim).map(|i| t.label(y, x, i)).collect() });
            }
        }
        let triples: Vec<(usize, usize, usize)> = window
            .iter()
            .flat_map(|&z| window.iter().flat_map(move |&y| window.iter().map(move |&x| (z, y, x))))
            .collect();
        let tables: Vec<_> = triples
            .par_iter()
            .map(|&(z, y, x)| {
                let table: Vec<Vec<SparseVec>> = (0..t.dim(z, y))
                    .map(|i| (0..t.dim(y, x)).map(|j| t.compose_basis(z, y, x, i, j)).collect())
                    .collect();
                ((z, y, x), table)
            })
            .collect();
        let comp = tables.into_iter().collect();
        let units = window.iter().map(|&x| (x, t.unit(x))).collect();
        MonadGrid { field: t.field(), window: window.to_vec(), cells, comp, units }
    }

    /// One-object monad from an algebra with structure constants
    /// `mult[i][j] = e_i e_j` and unit vector `unit`.
    pub fn from_algebra(field: Field, labels: Vec<String>, mult: Vec<Vec<SparseVec>>, unit: SparseVec) -> MonadGrid {
        let dim = labels.len();
        let mut cells = BTreeMap::new();
        cells.insert((0, 0), CellInfo { dim, labels });
        let mut comp = BTreeMap::new();
        comp.insert((0, 0, 0), mult);
        let mut units = BTreeMap::new();
        units.insert(0, unit);
        MonadGrid { field, window: vec![0], cells, comp, units }
    }

    /// `M_n(k)` with matrix units `E_ij` ordered row-major.
    pub fn matrix_algebra(field: Field, n: usize) -> MonadGrid {
        let idx = |i: usize, j: usize| i * n + j;
        let labels = (0..n * n).map(|k| format!("E{}{}", k / n + 1, k % n + 1)).collect();
        let mut mult = vec![vec![Vec::new(); n * n]; n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    mult[idx(i, j)][idx(j, k)] = sparse::unit(idx(i, k));
                }
            }
        }
        let unit = (0..n).map(|i| (idx(i, i), Q::ONE)).collect();
        MonadGrid::from_algebra(field, labels, mult, unit)
    }

    /// Group algebra of the cyclic group of order `n`, basis `s^0..s^{n-1}`.
    pub fn cyclic_group_algebra(field: Field, n: usize) -> MonadGrid {
        let labels = (0..n).map(|k| if k == 0 { "e".to_string() } else { format!("s^{k}") }).collect();
        let mult = (0..n).map(|i| (0..n).map(|j| sparse::unit((i + j) % n)).collect()).collect();
        MonadGrid::from_algebra(field, labels, mult, sparse::unit(0))
    }

    /// Opposite monad: `T^op(Y, X) = T(X, Y)` with composition reversed.
    pub fn opposite(&self) -> MonadGrid {
        let cells = self.cells.iter().map(|(&(y, x), c)| ((x, y), c.clone())).collect();
        let mut comp = BTreeMap::new();
        for &z in &self.window {
            for &y in &self.window {
                for &x in &self.window {
                    // op: e_i ∈ T(y,z), e_j ∈ T(x,y) in T; result e_j ∘ e_i ∈ T(x,z).
                    let src = &self.comp[&(x, y, z)];
                    let di = self.dim(y, z);
                    let dj = self.dim(x, y);
                    let table = (0..di).map(|i| (0..dj).map(|j| src[j][i].clone()).collect()).collect();
                    comp.insert((z, y, x), table);
                }
            }
        }
        MonadGrid { field: self.field, window: self.window.clone(), cells, comp, units: self.units.clone() }
    }

    /// Adds `delta` to one structure constant; used as a negative control.
    pub fn corrupt(&mut self, key: (usize, usize, usize), i: usize, j: usize, k: usize, delta: Q) {
        let f = self.field;
        let entry = &mut self.comp.get_mut(&key).expect("triple in window")[i][j];
        *entry = sparse::add(f, entry, &vec![(k, f.reduce(&delta))]);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&GridDoc::from(self)).expect("grid serializes")
    }

    pub fn from_json(s: &str) -> Result<MonadGrid, serde_json::Error> {
        let doc: GridDoc = serde_json::from_str(s)?;
        Ok(doc.into())
    }
}

#[derive(Serialize, Deserialize)]
struct CellDoc {
    from: usize,
    to: usize,
    dim: usize,
    basis_labels: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct CompDoc {
    z: usize,
    y: usize,
    x: usize,
    tensor: Vec<(usize, usize, usize, Q)>,
}

#[derive(Serialize, Deserialize)]
struct UnitDoc {
    x: usize,
    vector: Vec<(usize, Q)>,
}

#[derive(Serialize, Deserialize)]
struct GridDoc {
    field: Field,
    window: Vec<usize>,
    cells: Vec<CellDoc>,
    comp: Vec<CompDoc>,
    units: Vec<UnitDoc>,
}

impl From<&MonadGrid> for GridDoc {
    fn from(g: &MonadGrid) -> Self {
        GridDoc {
            field: g.field,
            window: g.window.clone(),
            cells: g
                .cells
                .iter()
                .map(|(&(y, x), c)| CellDoc { from: x, to: y, dim: c.dim, basis_labels: c.labels.clone() })
                .collect(),
            comp: g
                .comp
                .iter()
                .map(|(&(z, y, x), table)| CompDoc {
                    z,
                    y,
                    x,
                    tensor: table
                        .iter()
                        .enumerate()
                        .flat_map(|(i, row)| {
                            row.iter().enumerate().flat_map(move |(j, v)| {
                                v.iter().map(move |(k, q)| (i, j, *k, q.clone()))
                            })
                        })
                        .collect(),
                })
                .collect(),
            units: g.units.iter().map(|(&x, v)| UnitDoc { x, vector: v.clone() }).collect(),
        }
    }
}

impl From<GridDoc> for MonadGrid {
    fn from(d: GridDoc) -> Self {
        let cells: BTreeMap<(usize, usize), CellInfo> = d
            .cells
            .into_iter()
            .map(|c| ((c.to, c.from), CellInfo { dim: c.dim, labels: c.basis_labels }))
            .collect();
        let dim = |y: usize, x: usize| cells.get(&(y, x)).map_or(0, |c| c.dim);
        let mut comp = BTreeMap::new();
        for c in d.comp {
            let mut table = vec![vec![Vec::new(); dim(c.y, c.x)]; dim(c.z, c.y)];
            for (i, j, k, q) in c.tensor {
                table[i][j].push((k, q));
            }
            comp.insert((c.z, c.y, c.x), table);
        }
        let units = d.units.into_iter().map(|u| (u.x, u.vector)).collect();
        MonadGrid { field: d.field, window: d.window, cells, comp, units }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum LawKind {
    Associativity,
    LeftUnit,
    RightUnit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: LawKind,
    /// Objects involved, outermost first.
    pub objects: Vec<usize>,
    /// Basis indices involved.
    pub basis: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckMode {
    Exhaustive,
    Sampled { per_quadruple: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub violations: Vec<Violation>,
    pub mode: CheckMode,
    pub instances: usize,
}

impl LawReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks associativity and unit laws on basis elements over `window`.
///
/// Quadruples whose number of basis triples exceeds `budget` are checked on
/// `budget` random basis triples instead; the report records this.
pub fn check_monad_laws(t: &dyn Monad, window: &[usize], budget: usize, seed: u64) -> LawReport {
    use rayon::prelude::*;
    let quads: Vec<[usize; 4]> = window
        .iter()
        .flat_map(|&w| {
            window.iter().flat_map(move |&z| {
                window.iter().flat_map(move |&y| window.iter().map(move |&x| [w, z, y, x]))
            })
        })
        .collect();
    let sampled = std::sync::atomic::AtomicBool::new(false);
    let results: Vec<(Vec<Violation>, usize)> = quads
        .par_iter()
        .enumerate()
        .map(|(qi, &[w, z, y, x])| {
            let (a, b, c) = (t.dim(w, z), t.dim(z, y), t.dim(y, x));
            let total = a * b * c;
            let mut out = Vec::new();
            let check = |i: usize, j: usize, k: usize, out: &mut Vec<Violation>| {
                let left = t.compose(w, y, x, &t.compose_basis(w, z, y, i, j), &sparse::unit(k));
                let right = t.compose(w, z, x, &sparse::unit(i), &t.compose_basis(z, y, x, j, k));
                if left != right {
                    out.push(Violation {
                        kind: LawKind::Associativity,
                        objects: vec![w, z, y, x],
                        basis: vec![i, j, k],
                    });
                }
            };
            if total <= budget {
                for i in 0..a {
                    for j in 0..b {
                        for k in 0..c {
                            check(i, j, k, &mut out);
                        }
                    }
                }
                (out, total)
            } else {
                sampled.store(true, std::sync::atomic::Ordering::Relaxed);
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (qi as u64).wrapping_mul(0x9e37_79b9));
                for _ in 0..budget {
                    let (i, j, k) = (rng.random_range(0..a), rng.random_range(0..b), rng.random_range(0..c));
                    check(i, j, k, &mut out);
                }
                (out, budget)
            }
        })
        .collect();
    let mut violations = Vec::new();
    let mut instances = 0;
    for (v, n) in results {
        violations.extend(v);
        instances += n;
    }
    for &y in window {
        for &x in window {
            let uy = t.unit(y);
            let ux = t.unit(x);
            for i in 0..t.dim(y, x) {
                let e = sparse::unit(i);
                if t.compose(y, y, x, &uy, &e) != e {
                    violations.push(Violation { kind: LawKind::LeftUnit, objects: vec![y, x], basis: vec![i] });
                }
                if t.compose(y, x, x, &e, &ux) != e {
                    violations.push(Violation { kind: LawKind::RightUnit, objects: vec![y, x], basis: vec![i] });
                }
                instances += 2;
            }
        }
    }
    let mode = if sampled.into_inner() {
        CheckMode::Sampled { per_quadruple: budget, seed }
    } else {
        CheckMode::Exhaustive
    };
    LawReport { violations, mode, instances }
}

/// Left multiplication by `a` on `T(y, x)`, as a matrix into `T(z, x)`.
pub fn left_mult_matrix(t: &dyn Monad, z: usize, y: usize, x: usize, a: &SparseVec) -> Mat {
    let rows = t.dim(z, x);
    let cols = t.dim(y, x);
    let mut m = Mat::zeros(t.field(), rows, cols);
    for j in 0..cols {
        for (k, q) in t.compose(z, y, x, a, &sparse::unit(j)) {
            m.set(k, j, q);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_algebra_is_a_monad() {
        let m2 = MonadGrid::matrix_algebra(Field::Rational, 2);
        let r = check_monad_laws(&m2, &[0], 1 << 20, 0);
        assert!(r.ok());
        assert_eq!(r.mode, CheckMode::Exhaustive);
    }

    #[test]
    fn corruption_is_reported() {
        let mut m2 = MonadGrid::matrix_algebra(Field::Rational, 2);
        m2.corrupt((0, 0, 0), 1, 2, 0, Q::ONE);
        let r = check_monad_laws(&m2, &[0], 1 << 20, 0);
        assert!(!r.ok());
        assert!(r.violations.iter().any(|v| v.kind == LawKind::Associativity));
    }

    #[test]
    fn json_roundtrip_is_exact() {
        let g = MonadGrid::cyclic_group_algebra(Field::Prime(3), 3);
        let s = g.to_json();
        let back = MonadGrid::from_json(&s).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_json(), s);
    }

    #[test]
    fn opposite_of_opposite() {
        let m2 = MonadGrid::matrix_algebra(Field::Rational, 2);
        assert_eq!(m2.opposite().opposite(), m2);
        assert!(check_monad_laws(&m2.opposite(), &[0], 1 << 20, 0).ok());
    }
}
