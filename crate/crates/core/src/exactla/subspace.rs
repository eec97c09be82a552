use super::field::Field;
use super::scalar::Q;
use super::sparse::{self, SparseVec};
use super::LinAlgError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Incremental row reduction. Rows are kept with leading coefficient 1 and
/// every stored row is reduced against the pivots present when it arrived.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: Field,
    rows: Vec<SparseVec>,
    pivot_row: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new(field: Field) -> Self {
        Echelon { field, rows: Vec::new(), pivot_row: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current pivots (left to right).
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut from = 0usize;
        loop {
            let hit = v
                .iter()
                .find(|(c, _)| *c >= from && self.pivot_row.contains_key(c))
                .map(|(c, q)| (*c, q.clone()));
            let Some((c, q)) = hit else { break };
            let row = &self.rows[self.pivot_row[&c]];
            v = sparse::axpy(self.field, &v, &self.field.neg(&q), row);
            from = c + 1;
        }
        v
    }

    /// Adds `v` to the span; returns `true` when it was independent.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((lead, lc)) = r.first().cloned() else { return false };
        let inv = self.field.inv(&lc).expect("nonzero leading coefficient");
        let r = sparse::scale(self.field, &inv, &r);
        self.pivot_row.insert(lead, self.rows.len());
        self.rows.push(r);
        true
    }

    /// Fully reduced rows sorted by pivot, and the pivots.
    pub fn finish(self) -> (Vec<SparseVec>, Vec<usize>) {
        let field = self.field;
        let pivots: Vec<usize> = self.pivot_row.keys().copied().collect();
        let mut rows: Vec<SparseVec> =
            self.pivot_row.values().map(|&i| self.rows[i].clone()).collect();
        for i in (0..rows.len()).rev() {
            let (lo, hi) = rows.split_at_mut(i + 1);
            let cur = &mut lo[i];
            for (k, below) in hi.iter().enumerate() {
                let p = pivots[i + 1 + k];
                let c = sparse::get(cur, p);
                if !c.is_zero() {
                    *cur = sparse::axpy(field, cur, &field.neg(&c), below);
                }
            }
        }
        (rows, pivots)
    }
}

/// A subspace of `field^ambient`, stored as its reduced row-echelon basis.
/// Two subspaces are equal exactly when their stored data agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: (0..ambient).map(sparse::unit).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<'a>(
        field: Field,
        ambient: usize,
        vecs: impl IntoIterator<Item = &'a SparseVec>,
    ) -> Self {
        let mut e = Echelon::new(field);
        for v in vecs {
            debug_assert!(v.iter().all(|(i, _)| *i < ambient));
            if e.rank() == ambient {
                break;
            }
            e.insert(v);
        }
        Self::from_echelon(field, ambient, e)
    }

    pub fn from_echelon(field: Field, ambient: usize, e: Echelon) -> Self {
        let (rows, pivots) = e.finish();
        Subspace { field, ambient, rows, pivots }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.rows.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns not used as pivots; they index a basis of the quotient.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut it = self.pivots.iter().peekable();
        (0..self.ambient)
            .filter(|c| {
                if it.peek() == Some(&c) {
                    it.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }

    /// Canonical representative of `v` modulo the subspace (zero on pivots).
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (c, q) in v {
            if let Ok(k) = self.pivots.binary_search(c) {
                out = sparse::axpy(self.field, &out, &self.field.neg(q), &self.rows[k]);
            }
        }
        out
    }

    pub fn member(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &SparseVec) -> Option<Vec<Q>> {
        if !self.member(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| sparse::get(v, p)).collect())
    }

    fn check(&self, other: &Subspace) -> Result<(), LinAlgError> {
        if self.field != other.field {
            return Err(LinAlgError::FieldMismatch);
        }
        if self.ambient != other.ambient {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool, LinAlgError> {
        self.check(other)?;
        Ok(other.rows.iter().all(|r| self.member(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check(other)?;
        Ok(Subspace::span(self.field, self.ambient, self.rows.iter().chain(&other.rows)))
    }

    /// Zassenhaus: reduce `[a|a]` and `[b|0]`; rows vanishing on the left
    /// half carry the intersection on the right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check(other)?;
        let n = self.ambient;
        let mut e = Echelon::new(self.field);
        for r in &self.rows {
            let mut v = r.clone();
            v.extend(sparse::shift(r, n));
            e.insert(&v);
        }
        for r in &other.rows {
            e.insert(r);
        }
        let (rows, _) = e.finish();
        let right: Vec<SparseVec> = rows
            .into_iter()
            .filter(|r| r.first().is_some_and(|(c, _)| *c >= n))
            .map(|r| r.into_iter().map(|(c, q)| (c - n, q)).collect())
            .collect();
        Ok(Subspace::span(self.field, n, &right))
    }

    /// `dim within − dim self`, requiring `self ⊆ within`.
    pub fn quotient_dim(&self, within: &Subspace) -> Result<usize, LinAlgError> {
        if !within.contains(self)? {
            return Err(LinAlgError::NotASubspace);
        }
        Ok(within.dim() - self.dim())
    }

    /// Image under a coordinate embedding `i ↦ offset + i` into a larger space.
    pub fn embed(&self, ambient: usize, offset: usize) -> Subspace {
        Subspace::span(
            self.field,
            ambient,
            &self.rows.iter().map(|r| sparse::shift(r, offset)).collect::<Vec<_>>(),
        )
    }
}

/// Basis of `{x : row·x = 0 for every row}` in `field^ncols`.
pub fn kernel_rows(field: Field, ncols: usize, rows: &[SparseVec]) -> Subspace {
    let mut e = Echelon::new(field);
    for r in rows {
        if e.rank() == ncols {
            break;
        }
        e.insert(r);
    }
    let pivot_space = Subspace::from_echelon(field, ncols, e);
    let mut basis = Vec::new();
    for f in pivot_space.free_columns() {
        let mut v: Vec<(usize, Q)> = vec![(f, Q::ONE)];
        for (row, &p) in pivot_space.rows.iter().zip(&pivot_space.pivots) {
            let c = sparse::get(row, f);
            if !c.is_zero() {
                v.push((p, field.neg(&c)));
            }
        }
        v.sort_by_key(|(i, _)| *i);
        basis.push(v);
    }
    Subspace::span(field, ncols, &basis)
}

/// Coordinates against a fixed linearly independent family.
#[derive(Debug, Clone)]
pub struct FamilyCoords {
    ambient: usize,
    count: usize,
    aug: Subspace,
}

impl FamilyCoords {
    /// Rows `[v_i | e_i]` in RREF; reducing `[w | 0]` leaves `[0 | −c]`.
    pub fn new(field: Field, ambient: usize, family: &[SparseVec]) -> Result<Self, LinAlgError> {
        let count = family.len();
        let rows: Vec<SparseVec> = family
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut r = v.clone();
                r.push((ambient + i, Q::ONE));
                r
            })
            .collect();
        let aug = Subspace::span(field, ambient + count, &rows);
        if aug.pivots.iter().any(|&p| p >= ambient) {
            return Err(LinAlgError::Dependent);
        }
        Ok(FamilyCoords { ambient, count, aug })
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn span(&self) -> Subspace {
        let rows: Vec<SparseVec> = self
            .aug
            .rows
            .iter()
            .map(|r| r.iter().filter(|(c, _)| *c < self.ambient).cloned().collect())
            .collect();
        Subspace::span(self.aug.field, self.ambient, &rows)
    }

    /// `c` with `w = Σ c_i v_i`, or `None` when `w` is outside the span.
    pub fn coords(&self, w: &SparseVec) -> Option<SparseVec> {
        let r = self.aug.reduce(w);
        if r.first().is_some_and(|(c, _)| *c < self.ambient) {
            return None;
        }
        let f = self.aug.field;
        Some(r.into_iter().map(|(c, q)| (c - self.ambient, f.neg(&q))).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(f: Field, n: usize, rows: &[&[i64]]) -> Subspace {
        let v: Vec<SparseVec> = rows.iter().map(|r| sparse::from_i64(f, r)).collect();
        Subspace::span(f, n, &v)
    }

    #[test]
    fn lattice_examples() {
        let f = Field::Rational;
        let e1 = sp(f, 3, &[&[1, 0, 0]]);
        let e2 = sp(f, 3, &[&[0, 1, 0]]);
        assert_eq!(e1.sum(&e2).unwrap().dim(), 2);
        let d = sp(f, 2, &[&[1, 1]]);
        let all = sp(f, 2, &[&[1, 0], &[0, 1]]);
        assert_eq!(d.intersect(&all).unwrap(), d);
        let a = sp(f, 2, &[&[1, 0]]);
        assert_eq!(a.quotient_dim(&Subspace::full(f, 2)).unwrap(), 1);
        assert_eq!(all.quotient_dim(&a), Err(LinAlgError::NotASubspace));
    }

    #[test]
    fn kernel_examples() {
        let f = Field::Rational;
        let k = kernel_rows(f, 2, &[sparse::from_i64(f, &[1, -1])]);
        assert_eq!(k, sp(f, 2, &[&[1, 1]]));
        let k = kernel_rows(f, 3, &[sparse::from_i64(f, &[1, 2, 3])]);
        assert_eq!(k.dim(), 2);
        for b in k.basis() {
            assert!(sparse::dot(f, b, &sparse::from_i64(f, &[1, 2, 3])).is_zero());
        }
        assert_eq!(kernel_rows(f, 3, &[]).dim(), 3);
    }

    #[test]
    fn reduce_is_canonical() {
        let f = Field::Rational;
        let s = sp(f, 3, &[&[1, 1, 0]]);
        let a = s.reduce(&sparse::from_i64(f, &[2, 0, 1]));
        let b = s.reduce(&sparse::from_i64(f, &[0, -2, 1]));
        assert_eq!(a, b);
    }

    #[test]
    fn family_coordinates() {
        let f = Field::Rational;
        let fam = vec![sparse::from_i64(f, &[1, 1, 0]), sparse::from_i64(f, &[0, 1, 1])];
        let c = FamilyCoords::new(f, 3, &fam).unwrap();
        assert_eq!(c.coords(&sparse::from_i64(f, &[2, 5, 3])), Some(sparse::from_i64(f, &[2, 3])));
        assert_eq!(c.coords(&sparse::from_i64(f, &[1, 0, 0])), None);
        let dep = vec![fam[0].clone(), fam[0].clone()];
        assert!(FamilyCoords::new(f, 3, &dep).is_err());
    }
}
