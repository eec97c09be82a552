use super::word::{GrTuple, IntMat, Word};
use super::FreeAlgError;
use crate::exactla::{Field, Q};
use std::collections::BTreeMap;
use std::fmt;

/// One word per tensor factor; letters are 0-based generator indices.
pub type Mono = Vec<Vec<u8>>;

pub fn mono_degree(m: &Mono) -> usize {
    m.iter().map(Vec::len).sum()
}

/// Element of `k⟨X_1..X_n⟩^{⊗m}`, optionally truncated at total degree `D`.
/// With `commutative` set every factor is a polynomial ring instead and words
/// are stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorPoly {
    pub field: Field,
    pub letters: usize,
    pub factors: usize,
    pub trunc: Option<usize>,
    pub commutative: bool,
    pub terms: BTreeMap<Mono, Q>,
}

/// Truncated commutative polynomials, one factor per tuple entry.
pub type CommPolyTrunc = TensorPoly;

impl TensorPoly {
    pub fn zero(
        field: Field,
        letters: usize,
        factors: usize,
        trunc: Option<usize>,
        commutative: bool,
    ) -> Self {
        TensorPoly { field, letters, factors, trunc, commutative, terms: BTreeMap::new() }
    }

    pub fn zero_like(&self) -> Self {
        Self::zero(self.field, self.letters, self.factors, self.trunc, self.commutative)
    }

    pub fn one(field: Field, letters: usize, factors: usize, trunc: Option<usize>, comm: bool) -> Self {
        let mut p = Self::zero(field, letters, factors, trunc, comm);
        p.add_term(vec![Vec::new(); factors], Q::ONE);
        p
    }

    pub fn monomial(&self, m: Mono, c: Q) -> Self {
        let mut p = self.zero_like();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, mut m: Mono, c: Q) {
        use std::collections::btree_map::Entry;
        debug_assert_eq!(m.len(), self.factors);
        if self.trunc.is_some_and(|d| mono_degree(&m) > d) {
            return;
        }
        let c = self.field.reduce(&c);
        if c.is_zero() {
            return;
        }
        if self.commutative {
            for w in &mut m {
                w.sort_unstable();
            }
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
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut p = self.zero_like();
        for (m, x) in &self.terms {
            p.add_term(m.clone(), self.field.mul(c, x));
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&self.field.from_i64(-1)))
    }

    /// Factorwise product (concatenation of words), truncated.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.factors, o.factors);
        let mut p = self.zero_like();
        for (a, x) in &self.terms {
            let da = mono_degree(a);
            for (b, y) in &o.terms {
                if self.trunc.is_some_and(|d| da + mono_degree(b) > d) {
                    continue;
                }
                let m: Mono = a
                    .iter()
                    .zip(b)
                    .map(|(u, v)| u.iter().chain(v).copied().collect())
                    .collect();
                p.add_term(m, self.field.mul(x, y));
            }
        }
        p
    }

    /// `self ⊗ o`, concatenating factor lists.
    pub fn tensor(&self, o: &Self) -> Self {
        assert_eq!(self.letters, o.letters);
        let mut p = Self::zero(
            self.field,
            self.letters,
            self.factors + o.factors,
            self.trunc,
            self.commutative,
        );
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let m: Mono = a.iter().chain(b).cloned().collect();
                p.add_term(m, self.field.mul(x, y));
            }
        }
        p
    }

    pub fn with_trunc(&self, trunc: Option<usize>) -> Self {
        let mut p = self.clone();
        p.trunc = trunc;
        p.terms.retain(|m, _| trunc.is_none_or(|d| mono_degree(m) <= d));
        p
    }

    /// Homogeneous part of total degree `k`.
    pub fn degree_part(&self, k: usize) -> Self {
        let mut p = self.clone();
        p.terms.retain(|m, _| mono_degree(m) == k);
        p
    }

    /// Letter multiplicities of a monomial.
    pub fn multidegree(&self, m: &Mono) -> Vec<usize> {
        let mut v = vec![0; self.letters];
        for w in m {
            for &l in w {
                v[l as usize] += 1;
            }
        }
        v
    }

    pub fn is_multilinear(&self) -> bool {
        self.terms.keys().all(|m| self.multidegree(m).iter().all(|&c| c <= 1))
    }

    fn check_factor(&self, j: usize) -> Result<(), FreeAlgError> {
        if j >= self.factors {
            return Err(FreeAlgError::IndexOutOfRange { index: j, len: self.factors });
        }
        Ok(())
    }

    fn rebuild(&self, factors: usize, f: impl Fn(&Mono, &Q, &mut Self)) -> Self {
        let mut p = Self::zero(self.field, self.letters, factors, self.trunc, self.commutative);
        for (m, c) in &self.terms {
            f(m, c, &mut p);
        }
        p
    }

    /// Shuffle coproduct on factor `j` minus the two unit insertions.
    pub fn comul_reduced(&self, j: usize) -> Result<Self, FreeAlgError> {
        self.check_factor(j)?;
        let field = self.field;
        Ok(self.rebuild(self.factors + 1, |m, c, p| {
            let w = &m[j];
            let len = w.len();
            if len == 0 {
                let mut nm = m.clone();
                nm.insert(j + 1, Vec::new());
                p.add_term(nm, field.neg(c));
                return;
            }
            for mask in 1u64..(1u64 << len) - 1 {
                let (mut a, mut b) = (Vec::new(), Vec::new());
                for (i, &l) in w.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        a.push(l);
                    } else {
                        b.push(l);
                    }
                }
                let mut nm = m.clone();
                nm[j] = a;
                nm.insert(j + 1, b);
                p.add_term(nm, c.clone());
            }
        }))
    }

    /// Multiplies factors `j` and `j+1` together.
    pub fn multiply_factors(&self, j: usize) -> Result<Self, FreeAlgError> {
        self.check_factor(j + 1)?;
        Ok(self.rebuild(self.factors - 1, |m, c, p| {
            let mut nm = m.clone();
            let b = nm.remove(j + 1);
            nm[j].extend(b);
            p.add_term(nm, c.clone());
        }))
    }

    /// Antipode with primitive letters: reversed word, sign `(-1)^len`.
    pub fn antipode_factor(&self, j: usize) -> Result<Self, FreeAlgError> {
        self.check_factor(j)?;
        let field = self.field;
        Ok(self.rebuild(self.factors, |m, c, p| {
            let mut nm = m.clone();
            nm[j].reverse();
            let c = if nm[j].len() % 2 == 1 { field.neg(c) } else { c.clone() };
            p.add_term(nm, c);
        }))
    }

    pub fn counit_factor(&self, j: usize) -> Result<Self, FreeAlgError> {
        self.check_factor(j)?;
        Ok(self.rebuild(self.factors - 1, |m, c, p| {
            if m[j].is_empty() {
                let mut nm = m.clone();
                nm.remove(j);
                p.add_term(nm, c.clone());
            }
        }))
    }

    /// Inserts a factor `1` at position `j` (`j == factors` appends).
    pub fn insert_unit_factor(&self, j: usize) -> Result<Self, FreeAlgError> {
        if j > self.factors {
            return Err(FreeAlgError::IndexOutOfRange { index: j, len: self.factors + 1 });
        }
        Ok(self.rebuild(self.factors + 1, |m, c, p| {
            let mut nm = m.clone();
            nm.insert(j, Vec::new());
            p.add_term(nm, c.clone());
        }))
    }
}

fn fmt_word(f: &mut fmt::Formatter<'_>, w: &[u8]) -> fmt::Result {
    if w.is_empty() {
        return write!(f, "1");
    }
    for l in w {
        write!(f, "X{}", l + 1)?;
    }
    Ok(())
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "({c})")?;
            }
            for (k, w) in m.iter().enumerate() {
                if k > 0 {
                    write!(f, "⊗")?;
                }
                fmt_word(f, w)?;
            }
        }
        Ok(())
    }
}

/// `x_i ↦ 1 + X_i`, `x_i^{-1} ↦ 1 - X_i + X_i^2 - ⋯`, truncated at degree `d`.
pub fn magnus(field: Field, w: &Word, d: usize) -> TensorPoly {
    let mut p = TensorPoly::one(field, w.n, 1, Some(d), false);
    for &l in w.letters() {
        let g = (l.unsigned_abs() - 1) as u8;
        let mut s = TensorPoly::one(field, w.n, 1, Some(d), false);
        if l > 0 {
            s.add_term(vec![vec![g]], Q::ONE);
        } else {
            for k in 1..=d {
                s.add_term(vec![vec![g; k]], field.from_i64(if k % 2 == 1 { -1 } else { 1 }));
            }
        }
        p = p.mul(&s);
    }
    p
}

/// Factorwise Magnus expansion of a tuple, truncated at total degree `d`.
pub fn magnus_tuple(field: Field, t: &GrTuple, d: usize) -> TensorPoly {
    let mut p = TensorPoly::one(field, t.n, 0, Some(d), false);
    for w in &t.words {
        p = p.tensor(&magnus(field, w, d));
    }
    p
}

/// Generalized binomial coefficient `C(v, k)` for integer `v`.
fn binom_q(field: Field, v: i64, k: usize) -> Q {
    let mut num = Q::ONE;
    for i in 0..k as i64 {
        num = num.mul(&Q::int(v - i)).div(&Q::int(i + 1)).expect("nonzero");
    }
    field.reduce(&num)
}

/// `∏ (1 + t_i)^{v_i}` truncated at degree `d`.
pub fn abelian_magnus(field: Field, v: &[i64], d: usize) -> CommPolyTrunc {
    let n = v.len();
    let mut p = TensorPoly::one(field, n, 1, Some(d), true);
    for (i, &e) in v.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let mut s = TensorPoly::zero(field, n, 1, Some(d), true);
        for k in 0..=d {
            s.add_term(vec![vec![i as u8; k]], binom_q(field, e, k));
        }
        p = p.mul(&s);
    }
    p
}

/// Columnwise abelian Magnus expansion of `τ^X`, truncated at total degree `d`.
pub fn abelian_magnus_matrix(field: Field, x: &IntMat, d: usize) -> CommPolyTrunc {
    let mut p = TensorPoly::one(field, x.rows, 0, Some(d), true);
    for j in 0..x.cols {
        p = p.tensor(&abelian_magnus(field, &x.column(j), d));
    }
    p
}

/// How a letter distributes over copies under iterated comultiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coproduct {
    /// `Δ(X) = X⊗1 + 1⊗X + X⊗X` (the Magnus image of a group-like `1 + X`).
    GroupLike,
    /// `Δ(X) = X⊗1 + 1⊗X`.
    Primitive,
}

/// Options for [`act`].
#[derive(Debug, Clone, Copy)]
pub struct ActOptions {
    pub coproduct: Coproduct,
    /// Only keep distributions in which every occurrence receives a nonempty copy.
    /// Acting by `∏ (x - 1)` instead of by a tuple amounts to this.
    pub reduced: bool,
}

struct Occ {
    inverse: bool,
}

/// Action of `t = [w_1|⋯|w_l]_m` on `v ∈ H^{⊗m}`, giving an element of `H^{⊗l}`:
/// comultiply each factor once per occurrence of its letter, apply the antipode
/// on inverse occurrences, multiply the copies along each word.
pub fn act(t: &GrTuple, v: &TensorPoly, opts: ActOptions) -> TensorPoly {
    assert_eq!(t.n, v.factors, "tuple source does not match tensor factors");
    let field = v.field;
    let trunc = v.trunc;
    let has_inverse = t.words.iter().any(|w| w.letters().iter().any(|&l| l < 0));
    assert!(
        !(has_inverse && opts.coproduct == Coproduct::GroupLike && trunc.is_none()),
        "group-like antipode needs a truncation degree"
    );
    let mut occ_of: Vec<Vec<Occ>> = (0..t.n).map(|_| Vec::new()).collect();
    // Occurrence order inside each output word, as (generator, index into occ_of[g]).
    let mut order: Vec<Vec<(usize, usize)>> = vec![Vec::new(); t.m()];
    for (k, w) in t.words.iter().enumerate() {
        for &l in w.letters() {
            let g = l.unsigned_abs() as usize - 1;
            order[k].push((g, occ_of[g].len()));
            occ_of[g].push(Occ { inverse: l < 0 });
        }
    }
    let mut out = TensorPoly::zero(field, v.letters, t.m(), trunc, v.commutative);
    for (mono, coef) in &v.terms {
        let mut copies: Vec<Vec<Vec<u8>>> =
            occ_of.iter().map(|o| vec![Vec::new(); o.len()]).collect();
        distribute(
            0,
            0,
            mono,
            &occ_of,
            opts,
            trunc,
            0,
            &mut copies,
            &mut |copies| {
                assemble(copies, &occ_of, &order, coef, field, trunc, opts.coproduct, &mut out)
            },
        );
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn distribute(
    g: usize,
    pos: usize,
    mono: &Mono,
    occ_of: &[Vec<Occ>],
    opts: ActOptions,
    trunc: Option<usize>,
    degree: usize,
    copies: &mut Vec<Vec<Vec<u8>>>,
    emit: &mut dyn FnMut(&Vec<Vec<Vec<u8>>>),
) {
    if g == mono.len() {
        emit(copies);
        return;
    }
    let c = occ_of[g].len();
    let word = &mono[g];
    if pos == word.len() {
        if opts.reduced && copies[g].iter().any(Vec::is_empty) {
            return;
        }
        distribute(g + 1, 0, mono, occ_of, opts, trunc, degree, copies, emit);
        return;
    }
    if c == 0 {
        // Counit kills any nonconstant factor.
        return;
    }
    let letter = word[pos];
    match opts.coproduct {
        Coproduct::Primitive => {
            if trunc.is_some_and(|d| degree + 1 > d) {
                return;
            }
            for r in 0..c {
                copies[g][r].push(letter);
                distribute(g, pos + 1, mono, occ_of, opts, trunc, degree + 1, copies, emit);
                copies[g][r].pop();
            }
        }
        Coproduct::GroupLike => {
            for mask in 1u64..(1u64 << c) {
                let k = mask.count_ones() as usize;
                if trunc.is_some_and(|d| degree + k > d) {
                    continue;
                }
                for r in 0..c {
                    if mask >> r & 1 == 1 {
                        copies[g][r].push(letter);
                    }
                }
                distribute(g, pos + 1, mono, occ_of, opts, trunc, degree + k, copies, emit);
                for r in 0..c {
                    if mask >> r & 1 == 1 {
                        copies[g][r].pop();
                    }
                }
            }
        }
    }
}

/// Antipode of a word as a list of (word, coefficient).
fn antipode_word(w: &[u8], mode: Coproduct, field: Field, budget: usize) -> Vec<(Vec<u8>, Q)> {
    match mode {
        Coproduct::Primitive => {
            let mut r = w.to_vec();
            r.reverse();
            let c = field.from_i64(if w.len() % 2 == 1 { -1 } else { 1 });
            vec![(r, c)]
        }
        Coproduct::GroupLike => {
            // S(X) = Σ_{r≥1} (-1)^r X^r, antimultiplicative.
            let mut acc: Vec<(Vec<u8>, Q)> = vec![(Vec::new(), Q::ONE)];
            for &l in w.iter().rev() {
                let mut next = Vec::new();
                for (pre, c) in &acc {
                    for r in 1..=budget.saturating_sub(pre.len()) {
                        let mut nw = pre.clone();
                        nw.extend(std::iter::repeat_n(l, r));
                        let s = if r % 2 == 1 { field.neg(c) } else { c.clone() };
                        next.push((nw, s));
                    }
                }
                acc = next;
            }
            acc
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    copies: &[Vec<Vec<u8>>],
    occ_of: &[Vec<Occ>],
    order: &[Vec<(usize, usize)>],
    coef: &Q,
    field: Field,
    trunc: Option<usize>,
    mode: Coproduct,
    out: &mut TensorPoly,
) {
    let base: usize = copies.iter().flatten().map(Vec::len).sum();
    let slack = trunc.map(|d| d.saturating_sub(base));
    // Expanded pieces per output word, in order.
    let mut pieces: Vec<Vec<Vec<(Vec<u8>, Q)>>> = Vec::with_capacity(order.len());
    for word in order {
        let mut ps = Vec::with_capacity(word.len());
        for &(g, i) in word {
            let copy = &copies[g][i];
            if occ_of[g][i].inverse {
                let budget = slack.map_or(copy.len(), |s| copy.len() + s);
                ps.push(antipode_word(copy, mode, field, budget));
            } else {
                ps.push(vec![(copy.clone(), Q::ONE)]);
            }
        }
        pieces.push(ps);
    }
    let flat: Vec<(usize, &Vec<(Vec<u8>, Q)>)> = pieces
        .iter()
        .enumerate()
        .flat_map(|(k, ps)| ps.iter().map(move |p| (k, p)))
        .collect();
    let mut mono: Mono = vec![Vec::new(); order.len()];
    expand(&flat, 0, coef.clone(), 0, trunc, field, &mut mono, out);
}

#[allow(clippy::too_many_arguments)]
fn expand(
    flat: &[(usize, &Vec<(Vec<u8>, Q)>)],
    i: usize,
    c: Q,
    degree: usize,
    trunc: Option<usize>,
    field: Field,
    mono: &mut Mono,
    out: &mut TensorPoly,
) {
    if i == flat.len() {
        out.add_term(mono.clone(), c);
        return;
    }
    let (k, options) = flat[i];
    for (w, x) in options {
        if trunc.is_some_and(|d| degree + w.len() > d) {
            continue;
        }
        let before = mono[k].len();
        mono[k].extend_from_slice(w);
        expand(flat, i + 1, field.mul(&c, x), degree + w.len(), trunc, field, mono, out);
        mono[k].truncate(before);
    }
}

/// `γ`: column `a` of `X` becomes the word `x_1^{a_1} ⋯ x_n^{a_n}`.
pub fn gamma(x: &IntMat) -> GrTuple {
    GrTuple::new(
        x.rows,
        (0..x.cols)
            .map(|j| {
                let letters = (0..x.rows).flat_map(|i| {
                    let e = x.get(i, j);
                    let l = (i as i32 + 1) * e.signum() as i32;
                    std::iter::repeat_n(l, e.unsigned_abs() as usize)
                });
                Word::new(x.rows, letters)
            })
            .collect(),
    )
}

/// `α`: exponent-sum matrix of a tuple.
pub fn alpha(t: &GrTuple) -> IntMat {
    IntMat::from_columns(t.n, &t.words.iter().map(Word::exponent_sums).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Morph;

    const QF: Field = Field::Rational;

    fn poly(letters: usize, factors: usize, trunc: Option<usize>, terms: &[(&[&[u8]], i64)]) -> TensorPoly {
        let mut p = TensorPoly::zero(QF, letters, factors, trunc, false);
        for (m, c) in terms {
            p.add_term(m.iter().map(|w| w.to_vec()).collect(), Q::int(*c));
        }
        p
    }

    #[test]
    fn magnus_examples() {
        let x1 = Word::gen(1, 1);
        assert_eq!(magnus(QF, &x1, 2), poly(1, 1, Some(2), &[(&[&[]], 1), (&[&[0]], 1)]));
        assert_eq!(
            magnus(QF, &x1.inv(), 2),
            poly(1, 1, Some(2), &[(&[&[]], 1), (&[&[0]], -1), (&[&[0, 0]], 1)])
        );
        let t = GrTuple::from_letters(2, &[&[1, 2], &[1]]);
        let expect = poly(
            2,
            2,
            Some(1),
            &[(&[&[], &[]], 1), (&[&[0], &[]], 1), (&[&[1], &[]], 1), (&[&[], &[0]], 1)],
        );
        assert_eq!(magnus_tuple(QF, &t, 1), expect);
    }

    #[test]
    fn abelian_magnus_examples() {
        let p = |v: i64| abelian_magnus(QF, &[v], 2);
        let mut e = TensorPoly::zero(QF, 1, 1, Some(2), true);
        e.add_term(vec![vec![]], Q::ONE);
        e.add_term(vec![vec![0]], Q::ONE);
        assert_eq!(p(1), e);
        let mut e = TensorPoly::zero(QF, 1, 1, Some(2), true);
        e.add_term(vec![vec![]], Q::ONE);
        e.add_term(vec![vec![0]], Q::int(-1));
        e.add_term(vec![vec![0, 0]], Q::ONE);
        assert_eq!(p(-1), e);
        let mut e = TensorPoly::zero(QF, 1, 1, Some(2), true);
        e.add_term(vec![vec![]], Q::ONE);
        e.add_term(vec![vec![0]], Q::int(2));
        e.add_term(vec![vec![0, 0]], Q::ONE);
        assert_eq!(p(2), e);
    }

    #[test]
    fn hopf_examples() {
        let x1 = poly(2, 1, None, &[(&[&[0]], 1)]);
        assert!(x1.comul_reduced(0).unwrap().is_zero());
        let x12 = poly(2, 1, None, &[(&[&[0, 1]], 1)]);
        assert_eq!(
            x12.comul_reduced(0).unwrap(),
            poly(2, 2, None, &[(&[&[0], &[1]], 1), (&[&[1], &[0]], 1)])
        );
        assert_eq!(x12.antipode_factor(0).unwrap(), poly(2, 1, None, &[(&[&[1, 0]], 1)]));
        let one = poly(2, 1, None, &[(&[&[]], 1)]);
        assert_eq!(one.comul_reduced(0).unwrap(), poly(2, 2, None, &[(&[&[], &[]], -1)]));
        assert!(x1.comul_reduced(1).is_err());
    }

    #[test]
    fn magnus_is_multiplicative_small() {
        let a = Word::new(2, [1, -2, -2]);
        let b = Word::new(2, [2, 1, 1]);
        for d in 0..5 {
            assert_eq!(magnus(QF, &a.mul(&b), d), magnus(QF, &a, d).mul(&magnus(QF, &b, d)));
        }
    }

    #[test]
    fn grouplike_action_matches_substitution() {
        let f = GrTuple::from_letters(2, &[&[1, -2, 1], &[2, 2]]);
        let g = GrTuple::from_letters(2, &[&[2, -1], &[1, 1, 2]]);
        let d = 4;
        let lhs = magnus_tuple(QF, &f.compose(&g), d);
        let opts = ActOptions { coproduct: Coproduct::GroupLike, reduced: false };
        assert_eq!(act(&f, &magnus_tuple(QF, &g, d), opts), lhs);
    }

    #[test]
    fn alpha_gamma() {
        let t = GrTuple::from_letters(2, &[&[1, 2, -1], &[2]]);
        assert_eq!(alpha(&t), IntMat::from_rows(&[&[0, 0], &[1, 1]]));
        let x = IntMat::from_rows(&[&[1], &[1]]);
        assert_eq!(gamma(&x), GrTuple::from_letters(2, &[&[1, 2]]));
        let y = IntMat::from_rows(&[&[2, -1], &[0, 3]]);
        assert_eq!(alpha(&gamma(&y)), y);
    }
}
