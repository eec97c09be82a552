//! Conjugation on tuples of words, the exchange identity behind the outer
//! ideal, and `H_0` equality certified by bounded conjugator search.

use crate::exactla::{Field, Q};
use crate::freealg::{alpha, GrTuple, IntMat, Morph, SparseGroupElt, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OuterError {
    #[error("conjugator lives in F_{word} but the tuple has {expected} entries")]
    ShapeMismatch { word: usize, expected: usize },
}

/// `Ad_g([w_1 | ⋯ | w_m]_n) = [g w_1 g⁻¹ | ⋯ | g w_m g⁻¹]_n`.
pub fn ad_action(g: &Word, t: &GrTuple) -> GrTuple {
    assert_eq!(g.n, t.n);
    t.ad(g)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeWitness {
    /// `h = ρ̂(g)`.
    pub h: Word,
    pub lhs: GrTuple,
    pub rhs: GrTuple,
    pub equal: bool,
}

/// `Ad_g(id_m) ∘ ρ = ρ ∘ Ad_h(id_n)` with `h` the image of `g ∈ F_m` under `ρ`.
pub fn outer_exchange_check(g: &Word, rho: &GrTuple) -> Result<ExchangeWitness, OuterError> {
    if g.n != rho.m() {
        return Err(OuterError::ShapeMismatch { word: g.n, expected: rho.m() });
    }
    let h = g.substitute(rho.n, &rho.words);
    let lhs = GrTuple::identity(rho.m()).ad(g).compose(rho);
    let rhs = rho.compose(&GrTuple::identity(rho.n).ad(&h));
    Ok(ExchangeWitness { equal: lhs == rhs, h, lhs, rhs })
}

fn generators(n: usize) -> impl Iterator<Item = Word> {
    (1..=n as i32).flat_map(move |i| [Word::new(n, [i]), Word::new(n, [-i])])
}

/// Greedy descent of total length under conjugation by single generators.
/// Returns the representative and `c` with `rep = Ad_c(t)`.
pub fn minimize(t: &GrTuple) -> (GrTuple, Word) {
    let mut rep = t.clone();
    let mut c = Word::identity(t.n);
    loop {
        let better = generators(t.n).map(|x| (rep.ad(&x), x)).find(|(s, _)| s.total_len() < rep.total_len());
        match better {
            Some((s, x)) => {
                rep = s;
                c = x.mul(&c);
            }
            None => return (rep, c),
        }
    }
}

/// Reduced words of length exactly `len` in `F_n`.
fn reduced_words(n: usize, len: usize) -> Vec<Word> {
    let mut layer = vec![Word::identity(n)];
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|w| {
                let last = w.letters().last().copied();
                generators(n).filter(move |x| Some(-x.letters()[0]) != last).map(move |x| w.mul(&x))
            })
            .collect();
    }
    layer
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum H0Answer {
    /// `b = Ad_conjugator(a)`.
    EqualCertified { conjugator: Word },
    Inconclusive { bound: usize },
}

impl H0Answer {
    pub fn is_certified(&self) -> bool {
        matches!(self, H0Answer::EqualCertified { .. })
    }
}

/// Searches conjugators between the local minima of `a` and `b` up to length `bound`.
/// A certified answer is checked on the original tuples before it is returned.
pub fn h0_equal(a: &GrTuple, b: &GrTuple, bound: usize) -> H0Answer {
    if a.n != b.n || a.m() != b.m() || alpha(a) != alpha(b) {
        return H0Answer::Inconclusive { bound };
    }
    let (ra, ca) = minimize(a);
    let (rb, cb) = minimize(b);
    if ra.total_len() == rb.total_len() {
        for len in 0..=bound {
            if let Some(c) = reduced_words(a.n, len).into_iter().find(|c| ra.ad(c) == rb) {
                let conjugator = cb.inv().mul(&c).mul(&ca);
                debug_assert_eq!(&a.ad(&conjugator), b);
                return H0Answer::EqualCertified { conjugator };
            }
        }
    }
    H0Answer::Inconclusive { bound }
}

/// The exponent-sum matrix; constant on conjugacy classes.
pub fn h0_to_abelianization(t: &GrTuple) -> IntMat {
    alpha(t)
}

/// Linear combination in `H_0(m, n)`, each tuple stored at a local length minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClassElt {
    pub field: Field,
    pub n: usize,
    pub m: usize,
    pub terms: BTreeMap<GrTuple, Q>,
}

impl ConjClassElt {
    pub fn from_elt(e: &SparseGroupElt<GrTuple>, n: usize, m: usize) -> Self {
        let mut out = ConjClassElt { field: e.field, n, m, terms: BTreeMap::new() };
        for (t, c) in &e.terms {
            assert_eq!((t.n, t.m()), (n, m));
            let rep = minimize(t).0;
            let s = out.terms.get(&rep).map_or(c.clone(), |x| e.field.add(x, c));
            if s.is_zero() {
                out.terms.remove(&rep);
            } else {
                out.terms.insert(rep, s);
            }
        }
        out
    }

    pub fn to_abelianization(&self) -> SparseGroupElt<IntMat> {
        SparseGroupElt::from_terms(self.field, self.terms.iter().map(|(t, c)| (alpha(t), c.clone())))
    }
}

impl fmt::Display for ConjClassElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() { write!(f, "⟨{t}⟩")? } else { write!(f, "({c})·⟨{t}⟩")? }
        }
        Ok(())
    }
}

fn random_tuple(rng: &mut ChaCha8Rng, n: usize, m: usize, max_len: usize) -> GrTuple {
    GrTuple::new(n, (0..m).map(|_| Word::random(rng, n, max_len)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OuterReport {
    pub samples: usize,
    pub seed: u64,
    pub exchange_failures: usize,
    pub action_law_failures: usize,
    /// `α(Ad_g(id_n) − id_n) ≠ 0`.
    pub abelian_failures: usize,
    /// Certified pairs `(t, Ad_g t)` with different abelianization.
    pub certificate_failures: usize,
    pub certified: usize,
}

impl OuterReport {
    pub fn ok(&self) -> bool {
        self.exchange_failures + self.action_law_failures + self.abelian_failures + self.certificate_failures == 0
    }
}

/// Random checks with words of length `≤ 4` and objects `≤ max`.
pub fn outer_checks(field: Field, max: usize, samples: usize, conjugator_bound: usize, seed: u64) -> OuterReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = OuterReport {
        samples,
        seed,
        exchange_failures: 0,
        action_law_failures: 0,
        abelian_failures: 0,
        certificate_failures: 0,
        certified: 0,
    };
    for _ in 0..samples {
        let (n, m) = (rng.random_range(1..=max), rng.random_range(1..=max));
        let g = Word::random(&mut rng, m, 4);
        let rho = random_tuple(&mut rng, n, m, 4);
        if !outer_exchange_check(&g, &rho).is_ok_and(|w| w.equal) {
            r.exchange_failures += 1;
        }

        let (u, v) = (Word::random(&mut rng, n, 4), Word::random(&mut rng, n, 4));
        if rho.ad(&v).ad(&u) != rho.ad(&u.mul(&v)) {
            r.action_law_failures += 1;
        }

        let diff = SparseGroupElt::from_terms(field, [(GrTuple::identity(n).ad(&u), Q::ONE), (GrTuple::identity(n), Q::int(-1))]);
        if !diff.map(alpha).is_zero() {
            r.abelian_failures += 1;
        }

        let c = Word::random(&mut rng, n, 2);
        let (a, b) = (rho.clone(), rho.ad(&c));
        if let H0Answer::EqualCertified { conjugator } = h0_equal(&a, &b, conjugator_bound) {
            r.certified += 1;
            if a.ad(&conjugator) != b || h0_to_abelianization(&a) != h0_to_abelianization(&b) {
                r.certificate_failures += 1;
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: usize, words: &[&[i32]]) -> GrTuple {
        GrTuple::from_letters(n, words)
    }

    #[test]
    fn ad_examples() {
        assert_eq!(ad_action(&Word::gen(1, 1), &t(1, &[&[1]])), t(1, &[&[1]]));
        assert_eq!(ad_action(&Word::gen(2, 1), &t(2, &[&[2]])).to_string(), "[x1x2x1^-1]_2");
    }

    #[test]
    fn exchange_examples() {
        let rho = t(2, &[&[2], &[1]]);
        let w = outer_exchange_check(&Word::gen(2, 1), &rho).unwrap();
        assert!(w.equal);
        assert_eq!(w.h, Word::gen(2, 2));
        assert_eq!(w.lhs.to_string(), "[x2|x2x1x2^-1]_2");
        let g = Word::new(2, [1, -2]);
        let id = GrTuple::identity(2);
        assert_eq!(outer_exchange_check(&g, &id).unwrap().lhs, id.ad(&g));
        let rho = t(3, &[&[1, 2], &[3]]);
        assert_eq!(outer_exchange_check(&Word::identity(2), &rho).unwrap().lhs, rho);
        assert!(outer_exchange_check(&Word::gen(3, 1), &rho).is_err());
    }

    #[test]
    fn h0_examples() {
        let (a, b) = (t(2, &[&[1, 2]]), t(2, &[&[2, 1]]));
        let ans = h0_equal(&a, &b, 1);
        assert!(ans.is_certified());
        assert_eq!(h0_equal(&t(2, &[&[1]]), &t(2, &[&[2]]), 4), H0Answer::Inconclusive { bound: 4 });
        assert_eq!(h0_equal(&a, &a, 0), H0Answer::EqualCertified { conjugator: Word::identity(2) });
        // Symmetric on certified answers.
        assert!(h0_equal(&b, &a, 1).is_certified());
    }

    #[test]
    fn minimize_descends() {
        let x = t(2, &[&[1, 2, -1], &[1, 1, -1]]);
        let (rep, c) = minimize(&x);
        assert_eq!(rep, t(2, &[&[2], &[1]]));
        assert_eq!(x.ad(&c), rep);
    }

    #[test]
    fn abelianization_examples() {
        assert_eq!(h0_to_abelianization(&t(2, &[&[1, 2, -1], &[]])), IntMat::from_rows(&[&[0, 0], &[1, 0]]));
        assert_eq!(h0_to_abelianization(&GrTuple::identity(3)), IntMat::identity(3));
    }

    #[test]
    fn class_elements_merge_conjugates() {
        let f = Field::Rational;
        let e = SparseGroupElt::from_terms(f, [(t(2, &[&[1, 2, -1]]), Q::ONE), (t(2, &[&[2]]), Q::int(-1))]);
        let c = ConjClassElt::from_elt(&e, 2, 1);
        assert!(c.terms.is_empty());
        assert!(c.to_abelianization().is_zero());
    }

    #[test]
    fn random_checks() {
        let r = outer_checks(Field::Rational, 3, 500, 4, 7);
        assert!(r.ok(), "{r:?}");
        assert!(r.certified > 400, "{r:?}");
    }
}
