use super::monad::Monad;
use crate::exactla::{sparse, Field, LinMap, SparseVec, Subspace};
use std::collections::BTreeMap;

/// A left module over some monad, restricted to the objects in use:
/// spaces `M(X)` and the action of basis elements of `T(Y, X)`.
pub trait Module: Sync {
    fn field(&self) -> Field;
    fn dim(&self, x: usize) -> usize;
    fn act_basis(&self, y: usize, x: usize, i: usize, v: &SparseVec) -> SparseVec;

    fn act(&self, y: usize, x: usize, a: &SparseVec, v: &SparseVec) -> SparseVec {
        let f = self.field();
        let mut out = Vec::new();
        for (i, c) in a {
            out = sparse::axpy(f, &out, c, &self.act_basis(y, x, *i, v));
        }
        out
    }
}

/// `T(−, X0)`.
pub struct RegularModule<'a> {
    pub t: &'a dyn Monad,
    pub x0: usize,
}

impl Module for RegularModule<'_> {
    fn field(&self) -> Field {
        self.t.field()
    }

    fn dim(&self, x: usize) -> usize {
        self.t.dim(x, self.x0)
    }

    fn act_basis(&self, y: usize, x: usize, i: usize, v: &SparseVec) -> SparseVec {
        self.t.compose(y, x, self.x0, &sparse::unit(i), v)
    }
}

/// `(T/J)(−, X0)` with coordinates on the free columns of each `J(Y, X0)`.
pub struct QuotientModule<'a> {
    pub t: &'a dyn Monad,
    pub x0: usize,
    /// `J(Y, X0)` for every `Y` in use.
    pub j: BTreeMap<usize, Subspace>,
    free: BTreeMap<usize, Vec<usize>>,
}

impl<'a> QuotientModule<'a> {
    pub fn new(t: &'a dyn Monad, x0: usize, j: BTreeMap<usize, Subspace>) -> Self {
        let free = j.iter().map(|(&y, s)| (y, s.free_columns())).collect();
        QuotientModule { t, x0, j, free }
    }

    pub fn lift(&self, y: usize, v: &SparseVec) -> SparseVec {
        let cols = &self.free[&y];
        v.iter().map(|(i, q)| (cols[*i], q.clone())).collect()
    }

    /// Coordinates of the class of `w ∈ T(Y, X0)`.
    pub fn project(&self, y: usize, w: &SparseVec) -> SparseVec {
        let r = self.j[&y].reduce(w);
        let cols = &self.free[&y];
        r.into_iter()
            .map(|(c, q)| (cols.binary_search(&c).expect("residue on a free column"), q))
            .collect()
    }
}

impl Module for QuotientModule<'_> {
    fn field(&self) -> Field {
        self.t.field()
    }

    fn dim(&self, x: usize) -> usize {
        self.free.get(&x).map_or(0, Vec::len)
    }

    fn act_basis(&self, y: usize, x: usize, i: usize, v: &SparseVec) -> SparseVec {
        let w = self.t.compose(y, x, self.x0, &sparse::unit(i), &self.lift(x, v));
        self.project(y, &w)
    }
}

/// A tabulated module: `act[(y, x)][i]` is the matrix of basis element `i` of `T(Y, X)`.
#[derive(Debug, Clone)]
pub struct ModuleGrid {
    pub field: Field,
    pub dims: BTreeMap<usize, usize>,
    pub act: BTreeMap<(usize, usize), Vec<LinMap>>,
}

impl ModuleGrid {
    pub fn materialize(t: &dyn Monad, m: &dyn Module, labels: &[usize]) -> ModuleGrid {
        let dims = labels.iter().map(|&x| (x, m.dim(x))).collect();
        let mut act = BTreeMap::new();
        for &y in labels {
            for &x in labels {
                let maps = (0..t.dim(y, x))
                    .map(|i| {
                        LinMap::new(
                            m.field(),
                            m.dim(y),
                            (0..m.dim(x)).map(|k| m.act_basis(y, x, i, &sparse::unit(k))).collect(),
                        )
                    })
                    .collect();
                act.insert((y, x), maps);
            }
        }
        ModuleGrid { field: m.field(), dims, act }
    }

    /// Direct sum, coordinates of `self` first.
    pub fn direct_sum(&self, o: &ModuleGrid) -> ModuleGrid {
        let f = self.field;
        let dims: BTreeMap<usize, usize> =
            self.dims.iter().map(|(&x, &d)| (x, d + o.dims.get(&x).copied().unwrap_or(0))).collect();
        let mut act = BTreeMap::new();
        for (&(y, x), maps) in &self.act {
            let dy = self.dims[&y];
            let other = &o.act[&(y, x)];
            let combined = maps
                .iter()
                .zip(other)
                .map(|(a, b)| {
                    let mut cols: Vec<SparseVec> = a.cols.clone();
                    cols.extend(b.cols.iter().map(|c| sparse::shift(c, dy)));
                    LinMap::new(f, dims[&y], cols)
                })
                .collect();
            act.insert((y, x), combined);
        }
        ModuleGrid { field: f, dims, act }
    }
}

impl Module for ModuleGrid {
    fn field(&self) -> Field {
        self.field
    }

    fn dim(&self, x: usize) -> usize {
        self.dims.get(&x).copied().unwrap_or(0)
    }

    fn act_basis(&self, y: usize, x: usize, i: usize, v: &SparseVec) -> SparseVec {
        self.act[&(y, x)][i].apply(v)
    }
}

/// A submodule given by one subspace per object, with coordinates in the
/// stored RREF bases.
pub struct SubModule<'a> {
    pub parent: &'a dyn Module,
    pub cells: BTreeMap<usize, Subspace>,
}

impl SubModule<'_> {
    pub fn lift(&self, x: usize, v: &SparseVec) -> SparseVec {
        let b = self.cells[&x].basis();
        let f = self.parent.field();
        let mut out = Vec::new();
        for (i, q) in v {
            out = sparse::axpy(f, &out, q, &b[*i]);
        }
        out
    }

    pub fn coords(&self, x: usize, w: &SparseVec) -> Option<SparseVec> {
        let c = self.cells[&x].coords(w)?;
        Some(sparse::from_dense(self.parent.field(), &c))
    }
}

impl Module for SubModule<'_> {
    fn field(&self) -> Field {
        self.parent.field()
    }

    fn dim(&self, x: usize) -> usize {
        self.cells.get(&x).map_or(0, Subspace::dim)
    }

    fn act_basis(&self, y: usize, x: usize, i: usize, v: &SparseVec) -> SparseVec {
        let w = self.parent.act_basis(y, x, i, &self.lift(x, v));
        self.coords(y, &w).expect("submodule is closed under the action")
    }
}
