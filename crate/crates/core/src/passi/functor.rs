use super::ideal::d_t;
use super::PassiError;
use crate::exactla::{sparse, Field, LinMap, SparseVec, Subspace, Q};
use crate::freealg::{act, alpha, component_basis, ActOptions, Coproduct, GrTuple, Mono, Morph, TensorPoly, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, HashMap};

/// A functor on the category of free groups (opposite), given on objects up to
/// `max_object()`. `apply(t)` for `t ∈ L(m, n)` is a map `F(n) → F(m)`.
/// Functors on free abelian groups read only `alpha(t)`.
pub trait Functor: Sync {
    fn field(&self) -> Field;
    fn max_object(&self) -> usize;
    fn dim(&self, x: usize) -> usize;
    fn apply(&self, t: &GrTuple) -> LinMap;
}

/// The constant functor `k`.
pub struct ConstantFunctor {
    pub field: Field,
    pub max: usize,
}

impl Functor for ConstantFunctor {
    fn field(&self) -> Field {
        self.field
    }

    fn max_object(&self) -> usize {
        self.max
    }

    fn dim(&self, _x: usize) -> usize {
        1
    }

    fn apply(&self, _t: &GrTuple) -> LinMap {
        LinMap::new(self.field, 1, vec![sparse::unit(0)])
    }
}

/// `n ↦ k^n = Hom(F_n^{ab}, k)`, acting by the transposed exponent-sum matrix.
pub struct AbelianizationFunctor {
    pub field: Field,
    pub max: usize,
}

impl Functor for AbelianizationFunctor {
    fn field(&self) -> Field {
        self.field
    }

    fn max_object(&self) -> usize {
        self.max
    }

    fn dim(&self, x: usize) -> usize {
        x
    }

    fn apply(&self, t: &GrTuple) -> LinMap {
        let a = alpha(t);
        let cols = (0..a.rows)
            .map(|i| sparse::collect(self.field, (0..a.cols).map(|j| (j, Q::int(a.get(i, j))))))
            .collect();
        LinMap::new(self.field, a.cols, cols)
    }
}

/// `n ↦` the multilinear part of `k⟨X_1..X_N⟩^{⊗n}`, with primitive generators.
pub struct MultilinearTensorFunctor {
    pub field: Field,
    pub letters: usize,
    pub max: usize,
    bases: Vec<(Vec<Mono>, HashMap<Mono, usize>)>,
}

impl MultilinearTensorFunctor {
    pub fn new(field: Field, letters: usize, max: usize) -> Self {
        let delta = vec![1; letters];
        let bases = (0..=max)
            .map(|m| {
                let b = component_basis(m, &delta);
                let idx = b.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
                (b, idx)
            })
            .collect();
        MultilinearTensorFunctor { field, letters, max, bases }
    }
}

impl Functor for MultilinearTensorFunctor {
    fn field(&self) -> Field {
        self.field
    }

    fn max_object(&self) -> usize {
        self.max
    }

    fn dim(&self, x: usize) -> usize {
        self.bases[x].0.len()
    }

    fn apply(&self, t: &GrTuple) -> LinMap {
        let (src, _) = &self.bases[t.n];
        let (_, dst) = &self.bases[t.m()];
        let cols = src
            .iter()
            .map(|mono| {
                let v = TensorPoly::zero(self.field, self.letters, t.n, None, false).monomial(mono.clone(), Q::ONE);
                let out = act(t, &v, ActOptions { coproduct: Coproduct::Primitive, reduced: false });
                sparse::collect(self.field, out.terms.iter().map(|(m, c)| (dst[m], c.clone())))
            })
            .collect();
        LinMap::new(self.field, self.dim(t.m()), cols)
    }
}

/// `F(π^d_X) = Σ_T (−1)^{d−|T|} F(D^T_X) : F(X) → F(Xd)`.
pub fn alternating_map(func: &dyn Functor, x: usize, d: usize) -> Result<LinMap, PassiError> {
    if x * d > func.max_object() {
        return Err(PassiError::WindowTooSmall { needed: x * d, max: func.max_object() });
    }
    let f = func.field();
    let mut cols: Vec<SparseVec> = vec![Vec::new(); func.dim(x)];
    for mask in 0u32..1 << d {
        let t: Vec<bool> = (0..d).map(|i| mask >> i & 1 == 1).collect();
        let sign = if (d - mask.count_ones() as usize).is_multiple_of(2) { Q::ONE } else { Q::int(-1) };
        let m = func.apply(&d_t(x, d, &t));
        for (c, col) in cols.iter_mut().zip(&m.cols) {
            *c = sparse::axpy(f, c, &sign, col);
        }
    }
    Ok(LinMap::new(f, func.dim(x * d), cols))
}

/// `F` has degree at most `d` on `labels`: every `F(π^{d+1}_X)` vanishes.
pub fn polynomial_degree_leq(func: &dyn Functor, d: usize, labels: &[usize]) -> Result<bool, PassiError> {
    for &x in labels {
        if alternating_map(func, x, d + 1)?.rank() != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Restriction of a functor to one subspace per object.
pub struct SubFunctor<'a> {
    pub parent: &'a dyn Functor,
    pub cells: BTreeMap<usize, Subspace>,
}

impl SubFunctor<'_> {
    /// Each `F(t)` maps the chosen subspaces into each other.
    pub fn closed(&self) -> bool {
        let labels: Vec<usize> = self.cells.keys().copied().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        (0..40).all(|_| {
            let n = labels[rng.random_range(0..labels.len())];
            let m = labels[rng.random_range(0..labels.len())];
            let t = random_tuple(&mut rng, n, m, 2);
            let map = self.parent.apply(&t);
            self.cells[&n].basis().iter().all(|v| self.cells[&m].member(&map.apply(v)))
        })
    }
}

impl Functor for SubFunctor<'_> {
    fn field(&self) -> Field {
        self.parent.field()
    }

    fn max_object(&self) -> usize {
        self.cells.keys().max().copied().unwrap_or(0)
    }

    fn dim(&self, x: usize) -> usize {
        self.cells.get(&x).map_or(0, Subspace::dim)
    }

    fn apply(&self, t: &GrTuple) -> LinMap {
        let f = self.field();
        let map = self.parent.apply(t);
        let (src, dst) = (&self.cells[&t.n], &self.cells[&t.m()]);
        let cols = src
            .basis()
            .iter()
            .map(|v| {
                let c = dst.coords(&map.apply(v)).expect("subfunctor is closed");
                sparse::from_dense(f, &c)
            })
            .collect();
        LinMap::new(f, dst.dim(), cols)
    }
}

/// `P_d(F)(X) = ker F(π^{d+1}_X)`, the largest subfunctor of degree at most `d`.
pub fn p_d<'a>(func: &'a dyn Functor, d: usize, labels: &[usize]) -> Result<SubFunctor<'a>, PassiError> {
    let mut cells = BTreeMap::new();
    for &x in labels {
        cells.insert(x, alternating_map(func, x, d + 1)?.kernel());
    }
    Ok(SubFunctor { parent: func, cells })
}

pub(crate) fn random_tuple(rng: &mut ChaCha8Rng, n: usize, m: usize, max_len: usize) -> GrTuple {
    GrTuple::new(n, (0..m).map(|_| Word::random(rng, n, max_len)).collect())
}

/// `F(a ∘ b) = F(a) F(b)` on `samples` random composable pairs within `labels`.
pub fn check_functoriality(func: &dyn Functor, labels: &[usize], samples: usize, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).all(|_| {
        let pick = |r: &mut ChaCha8Rng| labels[r.random_range(0..labels.len())];
        let (p, m, n) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let a = random_tuple(&mut rng, m, p, 3);
        let b = random_tuple(&mut rng, n, m, 3);
        func.apply(&a.compose(&b)) == func.apply(&a).compose(&func.apply(&b))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const QF: Field = Field::Rational;

    #[test]
    fn constant_has_degree_zero() {
        let c = ConstantFunctor { field: QF, max: 4 };
        assert!(polynomial_degree_leq(&c, 0, &[0, 1, 2]).unwrap());
    }

    #[test]
    fn abelianization_is_linear() {
        let a = AbelianizationFunctor { field: QF, max: 4 };
        assert!(check_functoriality(&a, &[0, 1, 2, 3], 100, 1));
        assert!(polynomial_degree_leq(&a, 1, &[1, 2]).unwrap());
        assert!(!polynomial_degree_leq(&a, 0, &[1, 2]).unwrap());
        let p0 = p_d(&a, 0, &[0, 1, 2]).unwrap();
        assert_eq!(p0.dim(2), 0);
        let p1 = p_d(&a, 1, &[0, 1, 2]).unwrap();
        assert_eq!(p1.dim(2), 2);
    }

    #[test]
    fn multilinear_tensor_degree_two() {
        let t = MultilinearTensorFunctor::new(QF, 2, 6);
        assert_eq!(t.dim(3), 12);
        assert!(check_functoriality(&t, &[0, 1, 2, 3], 100, 2));
        assert!(polynomial_degree_leq(&t, 2, &[1, 2]).unwrap());
        assert!(!polynomial_degree_leq(&t, 1, &[1, 2, 3]).unwrap());
        assert!(matches!(polynomial_degree_leq(&t, 2, &[3]), Err(PassiError::WindowTooSmall { .. })));
        let p1 = p_d(&t, 1, &[0, 1, 2, 3]).unwrap();
        assert!(p1.closed());
        // P_1 is idempotent and sits inside P_2.
        let pp = p_d(&p1, 1, &[0, 1]).unwrap();
        assert_eq!(pp.dim(1), p1.dim(1));
        let p2 = p_d(&t, 2, &[0, 1, 2]).unwrap();
        assert!(p2.cells[&1].contains(&p1.cells[&1]).unwrap());
    }
}
