use super::field::Field;
use super::scalar::Q;
use super::sparse::{self, SparseVec};
use super::subspace::{kernel_rows, Echelon, Subspace};
use super::LinAlgError;

/// Dense matrix over a field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Q>,
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Mat { field, rows, cols, data: vec![Q::ZERO; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Q::ONE);
        }
        m
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Mat::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, field.from_i64(x));
            }
        }
        m
    }

    pub fn from_sparse_rows(field: Field, cols: usize, rows: &[SparseVec]) -> Self {
        let mut m = Mat::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (j, q) in r {
                m.set(i, *j, q.clone());
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, q: Q) {
        self.data[i * self.cols + j] = self.field.reduce(&q);
    }

    pub fn row(&self, i: usize) -> SparseVec {
        sparse::from_dense(self.field, &self.data[i * self.cols..(i + 1) * self.cols])
    }

    pub fn sparse_rows(&self) -> Vec<SparseVec> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &Mat) -> Result<Mat, LinAlgError> {
        if self.cols != o.rows {
            return Err(LinAlgError::DimensionMismatch { expected: self.cols, found: o.rows });
        }
        let f = self.field;
        let mut out = Mat::zeros(f, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * o.cols + j;
                        out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        (0..self.rows)
            .filter_map(|i| {
                let s = sparse::dot(self.field, &self.row(i), v);
                (!s.is_zero()).then_some((i, s))
            })
            .collect()
    }

    /// Reduced row-echelon form (zero rows dropped) and pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let s = self.row_space();
        (Mat::from_sparse_rows(self.field, self.cols, s.basis()), s.pivots().to_vec())
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::span(self.field, self.cols, &self.sparse_rows())
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.field);
        for r in self.sparse_rows() {
            e.insert(&r);
        }
        e.rank()
    }

    pub fn kernel(&self) -> Subspace {
        kernel_rows(self.field, self.cols, &self.sparse_rows())
    }
}

/// Linear map `field^dom → field^cod` given by the images of basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinMap {
    pub field: Field,
    pub dom: usize,
    pub cod: usize,
    pub cols: Vec<SparseVec>,
}

impl LinMap {
    pub fn new(field: Field, cod: usize, cols: Vec<SparseVec>) -> Self {
        LinMap { field, dom: cols.len(), cod, cols }
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (i, q) in v {
            out = sparse::axpy(self.field, &out, q, &self.cols[*i]);
        }
        out
    }

    pub fn image(&self) -> Subspace {
        Subspace::span(self.field, self.cod, &self.cols)
    }

    pub fn rank(&self) -> usize {
        self.image().dim()
    }

    pub fn kernel(&self) -> Subspace {
        let mut rows: Vec<Vec<(usize, Q)>> = vec![Vec::new(); self.cod];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, q) in c {
                rows[*i].push((j, q.clone()));
            }
        }
        kernel_rows(self.field, self.dom, &rows)
    }

    pub fn compose(&self, first: &LinMap) -> LinMap {
        LinMap::new(self.field, self.cod, first.cols.iter().map(|c| self.apply(c)).collect())
    }
}

/// All `X` (p×q, flattened row-major) with `A_i X = X B_i` for every pair.
pub fn solve_intertwiner(
    field: Field,
    p: usize,
    q: usize,
    constraints: &[(Mat, Mat)],
) -> Result<Subspace, LinAlgError> {
    let mut eqs = Vec::new();
    for (a, b) in constraints {
        if a.rows != p || a.cols != p {
            return Err(LinAlgError::DimensionMismatch { expected: p, found: a.rows.max(a.cols) });
        }
        if b.rows != q || b.cols != q {
            return Err(LinAlgError::DimensionMismatch { expected: q, found: b.rows.max(b.cols) });
        }
        for r in 0..p {
            for c in 0..q {
                let mut terms = Vec::new();
                for k in 0..p {
                    terms.push((k * q + c, a.get(r, k).clone()));
                }
                for k in 0..q {
                    terms.push((r * q + k, field.neg(b.get(k, c))));
                }
                let eq = sparse::collect(field, terms);
                if !eq.is_empty() {
                    eqs.push(eq);
                }
            }
        }
    }
    Ok(kernel_rows(field, p * q, &eqs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_examples() {
        let q = Field::Rational;
        let (r, p) = Mat::from_i64(q, &[&[2, 4], &[1, 2]]).rref();
        assert_eq!(r, Mat::from_i64(q, &[&[1, 2]]));
        assert_eq!(p, vec![0]);
        let (r, p) = Mat::identity(q, 3).rref();
        assert_eq!(r, Mat::identity(q, 3));
        assert_eq!(p, vec![0, 1, 2]);
        let f2 = Field::Prime(2);
        let (r, p) = Mat::from_i64(f2, &[&[1, 1], &[1, 1]]).rref();
        assert_eq!(r, Mat::from_i64(f2, &[&[1, 1]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_of_zero_matrix() {
        assert_eq!(Mat::zeros(Field::Rational, 2, 3).kernel().dim(), 3);
    }

    #[test]
    fn intertwiners() {
        let q = Field::Rational;
        assert_eq!(solve_intertwiner(q, 2, 2, &[]).unwrap().dim(), 4);
        let d = Mat::from_i64(q, &[&[1, 0], &[0, 2]]);
        assert_eq!(solve_intertwiner(q, 2, 2, &[(d.clone(), d)]).unwrap().dim(), 2);
        let s = Mat::from_i64(q, &[&[0, 1], &[1, 0]]);
        let sol = solve_intertwiner(q, 2, 2, &[(s, Mat::identity(q, 2))]).unwrap();
        assert_eq!(sol.dim(), 2);
        for b in sol.basis() {
            let x = sparse::to_dense(b, 4);
            assert_eq!((&x[0], &x[1]), (&x[2], &x[3]));
        }
    }

    #[test]
    fn linmap_kernel_and_image() {
        let q = Field::Rational;
        let m = LinMap::new(q, 1, vec![vec![(0, Q::ONE)], vec![(0, Q::int(-1))]]);
        assert_eq!(m.kernel().dim(), 1);
        assert_eq!(m.rank(), 1);
    }
}
