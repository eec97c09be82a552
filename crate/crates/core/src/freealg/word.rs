use super::FreeAlgError;
use crate::exactla::{Field, Q};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Freely reduced word in `F_n`. Letter `+i` is `x_i`, `-i` is `x_i^{-1}` (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    pub n: usize,
    letters: Vec<i32>,
}

impl Word {
    pub fn identity(n: usize) -> Self {
        Word { n, letters: Vec::new() }
    }

    pub fn gen(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "generator x{i} out of range for F_{n}");
        Word { n, letters: vec![i as i32] }
    }

    /// Reduces an arbitrary letter sequence.
    pub fn new(n: usize, letters: impl IntoIterator<Item = i32>) -> Self {
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            assert!(l != 0 && l.unsigned_abs() as usize <= n, "letter {l} out of range for F_{n}");
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { n, letters: out }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn try_mul(&self, o: &Word) -> Result<Word, FreeAlgError> {
        if self.n != o.n {
            return Err(FreeAlgError::GeneratorMismatch(self.n, o.n));
        }
        Ok(Word::new(self.n, self.letters.iter().chain(&o.letters).copied()))
    }

    pub fn mul(&self, o: &Word) -> Word {
        self.try_mul(o).expect("generator mismatch")
    }

    pub fn inv(&self) -> Word {
        Word { n: self.n, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut out = Word::identity(self.n);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Uniform letters, length uniform in `0..=max_len`, then reduced.
    pub fn random<R: rand::Rng>(rng: &mut R, n: usize, max_len: usize) -> Word {
        if n == 0 {
            return Word::identity(0);
        }
        let len = rng.random_range(0..=max_len);
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let g = rng.random_range(1..=n as i32);
                if rng.random_bool(0.5) { g } else { -g }
            })
            .collect();
        Word::new(n, letters)
    }

    /// `g w g^{-1}`.
    pub fn conj(&self, g: &Word) -> Word {
        g.mul(self).mul(&g.inv())
    }

    /// Replaces `x_j` by `images[j-1]`; the result lives in `F_{target_n}`.
    pub fn substitute(&self, target_n: usize, images: &[Word]) -> Word {
        assert_eq!(images.len(), self.n, "substitution needs one image per generator");
        let mut out = Vec::new();
        for &l in &self.letters {
            let w = &images[l.unsigned_abs() as usize - 1];
            debug_assert_eq!(w.n, target_n);
            if l > 0 {
                out.extend_from_slice(&w.letters);
            } else {
                out.extend(w.letters.iter().rev().map(|x| -x));
            }
        }
        Word::new(target_n, out)
    }

    /// Exponent sum of each generator.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.n];
        for &l in &self.letters {
            v[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        v
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            let e = run as i64 * l.signum() as i64;
            if e == 1 {
                write!(f, "x{}", l.abs())?;
            } else {
                write!(f, "x{}^{}", l.abs(), e)?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Morphisms of a free-group-like category, written in the direction of `L(m, n)`:
/// an element of `L(m, n)` has `source() == n` and `target() == m`, and
/// `a.compose(b)` with `a ∈ L(p, m)`, `b ∈ L(m, n)` lies in `L(p, n)`.
pub trait Morph: Clone + Ord + fmt::Debug {
    fn source(&self) -> usize;
    fn target(&self) -> usize;
    fn compose(&self, right: &Self) -> Self;
    fn identity(n: usize) -> Self;
    /// The morphism factoring through the zero object.
    fn trivial(m: usize, n: usize) -> Self;
}

/// `[w_1 | ⋯ | w_m]_n`: an `m`-tuple of words in `F_n`, a basis element of `L(m, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GrTuple {
    pub n: usize,
    pub words: Vec<Word>,
}

impl GrTuple {
    pub fn new(n: usize, words: Vec<Word>) -> Self {
        assert!(words.iter().all(|w| w.n == n), "tuple words over mixed generator counts");
        GrTuple { n, words }
    }

    pub fn from_letters(n: usize, words: &[&[i32]]) -> Self {
        GrTuple::new(n, words.iter().map(|w| Word::new(n, w.iter().copied())).collect())
    }

    pub fn m(&self) -> usize {
        self.words.len()
    }

    /// Componentwise product (the monoid structure of `F_n^{×m}`).
    pub fn product(&self, o: &GrTuple) -> GrTuple {
        assert_eq!(self.m(), o.m());
        GrTuple::new(self.n, self.words.iter().zip(&o.words).map(|(a, b)| a.mul(b)).collect())
    }

    pub fn total_len(&self) -> usize {
        self.words.iter().map(Word::len).sum()
    }

    /// Componentwise conjugation `Ad_g`.
    pub fn ad(&self, g: &Word) -> GrTuple {
        GrTuple::new(self.n, self.words.iter().map(|w| w.conj(g)).collect())
    }
}

impl Morph for GrTuple {
    fn source(&self) -> usize {
        self.n
    }

    fn target(&self) -> usize {
        self.words.len()
    }

    fn compose(&self, right: &GrTuple) -> GrTuple {
        assert_eq!(self.n, right.m(), "composition shape mismatch");
        GrTuple::new(
            right.n,
            self.words.iter().map(|w| w.substitute(right.n, &right.words)).collect(),
        )
    }

    fn identity(n: usize) -> Self {
        GrTuple::new(n, (1..=n).map(|i| Word::gen(n, i)).collect())
    }

    fn trivial(m: usize, n: usize) -> Self {
        GrTuple::new(n, vec![Word::identity(n); m])
    }
}

impl fmt::Display for GrTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "]_{}", self.n)
    }
}

/// Integer `n × m` matrix `X`, standing for `τ^X ∈ L(m, n)` over free abelian groups.
/// Column `j` is the image of the `j`-th generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i64>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        IntMat { rows: r, cols: c, data: rows.iter().flat_map(|x| x.iter().copied()).collect() }
    }

    pub fn from_columns(rows: usize, cols: &[Vec<i64>]) -> Self {
        let mut m = IntMat::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: i64) {
        self.data[i * self.cols + j] = x;
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn matmul(&self, o: &IntMat) -> IntMat {
        assert_eq!(self.cols, o.rows);
        let mut out = IntMat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a != 0 {
                    for j in 0..o.cols {
                        out.data[i * o.cols + j] += a * o.get(k, j);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        IntMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    /// Vertical block sum helper: `diag(a, b)`.
    pub fn block_diag(a: &IntMat, b: &IntMat) -> IntMat {
        let mut out = IntMat::zeros(a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                out.set(i, j, a.get(i, j));
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                out.set(a.rows + i, a.cols + j, b.get(i, j));
            }
        }
        out
    }
}

impl Morph for IntMat {
    fn source(&self) -> usize {
        self.rows
    }

    fn target(&self) -> usize {
        self.cols
    }

    /// `τ^Y ∘ τ^X = τ^{XY}`.
    fn compose(&self, right: &IntMat) -> IntMat {
        right.matmul(self)
    }

    fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    fn trivial(m: usize, n: usize) -> Self {
        IntMat::zeros(n, m)
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "τ^[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Finitely supported linear combination of morphisms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparseGroupElt<M: Morph> {
    pub field: Field,
    pub terms: BTreeMap<M, Q>,
}

impl<M: Morph> SparseGroupElt<M> {
    pub fn zero(field: Field) -> Self {
        SparseGroupElt { field, terms: BTreeMap::new() }
    }

    pub fn basis(field: Field, m: M) -> Self {
        let mut e = Self::zero(field);
        e.add_term(m, Q::ONE);
        e
    }

    pub fn from_terms(field: Field, terms: impl IntoIterator<Item = (M, Q)>) -> Self {
        let mut e = Self::zero(field);
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn add_term(&mut self, m: M, c: Q) {
        use std::collections::btree_map::Entry;
        let c = self.field.reduce(&c);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = self.field.add(o.get(), &c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut e = self.clone();
        for (m, c) in &o.terms {
            e.add_term(m.clone(), c.clone());
        }
        e
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::from_terms(self.field, self.terms.iter().map(|(m, x)| (m.clone(), self.field.mul(c, x))))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&Q::int(-1)))
    }

    /// Bilinear extension of composition.
    pub fn compose(&self, right: &Self) -> Self {
        let mut e = Self::zero(self.field);
        for (a, x) in &self.terms {
            for (b, y) in &right.terms {
                e.add_term(a.compose(b), self.field.mul(x, y));
            }
        }
        e
    }

    pub fn map<N: Morph>(&self, f: impl Fn(&M) -> N) -> SparseGroupElt<N> {
        SparseGroupElt::from_terms(self.field, self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }
}

impl<M: Morph + fmt::Display> fmt::Display for SparseGroupElt<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c})·{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_examples() {
        let x1 = Word::gen(2, 1);
        let x2 = Word::gen(2, 2);
        assert!(x1.mul(&x1.inv()).is_empty());
        assert_eq!(x1.mul(&x2).inv(), Word::new(2, [-2, -1]));
        let a = Word::new(2, [1, 2]);
        let b = Word::new(2, [-2, 1]);
        assert_eq!(a.mul(&b), Word::new(2, [1, 1]));
        assert_eq!(a.mul(&b).to_string(), "x1^2");
        assert_eq!(Word::new(2, [2, -1]).to_string(), "x2x1^-1");
        assert!(Word::gen(1, 1).try_mul(&x1).is_err());
    }

    #[test]
    fn tuple_composition_substitutes() {
        // [x1x2] ∘ [x2|x1] = [x2x1]
        let f = GrTuple::from_letters(2, &[&[1, 2]]);
        let g = GrTuple::from_letters(2, &[&[2], &[1]]);
        assert_eq!(f.compose(&g), GrTuple::from_letters(2, &[&[2, 1]]));
        assert_eq!(f.compose(&GrTuple::identity(2)), f);
    }

    #[test]
    fn matrix_composition_matches_substitution() {
        let y = IntMat::from_rows(&[&[1], &[1]]); // τ^Y ∈ L(1,2)
        let x = IntMat::from_rows(&[&[0, 1], &[1, 0]]); // τ^X ∈ L(2,2)
        assert_eq!(y.compose(&x), x.matmul(&y));
    }

    #[test]
    fn sparse_cancellation() {
        let f = Field::Rational;
        let t = GrTuple::identity(1);
        let mut e = SparseGroupElt::basis(f, t.clone());
        e.add_term(t, Q::int(-1));
        assert!(e.is_zero());
    }
}
