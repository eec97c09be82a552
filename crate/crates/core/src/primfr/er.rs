use super::fin::{all_maps, FinBimodule, FinComb, FinMapElt, RMat};
use super::ring::RingB;
use super::PrimFrError;
use crate::exactla::{Field, Q};
use crate::freealg::{IntMat, Morph, SparseGroupElt};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `E_R((1 ⊗ ⋯ ⊗ 1)_f) = τ^{υ_f(1, …, 1)}` for `B = k`: the 0/1 matrix of `f`.
pub fn e_r(v: &FinComb) -> Result<SparseGroupElt<IntMat>, PrimFrError> {
    let mut out = SparseGroupElt::zero(v.field);
    for (e, c) in &v.terms {
        if e.b.iter().any(|&b| b != 0) {
            return Err(PrimFrError::GroundRingOnly);
        }
        let mut x = IntMat::zeros(e.n(), e.m);
        for (i, &k) in e.f.iter().enumerate() {
            x.set(i, k, 1);
        }
        out.add_term(x, c.clone());
    }
    Ok(out)
}

/// `E_R^{-1}(τ^X) = Σ_f (x_{1 f(1)} ⋯ x_{n f(n)})_f` for integer `X ∈ M_{n,m}`.
pub fn e_r_inverse(field: Field, x: &IntMat) -> FinComb {
    let mut out = FinComb::zero(field, x.cols, x.rows);
    for f in all_maps(x.rows, x.cols) {
        let c = f.iter().enumerate().fold(Q::ONE, |acc, (i, &k)| acc.mul(&Q::int(x.get(i, k))));
        out.add_term(FinMapElt::plain(x.cols, f), c);
    }
    out
}

pub fn e_r_inverse_elt(field: Field, v: &SparseGroupElt<IntMat>, m: usize, n: usize) -> FinComb {
    let mut out = FinComb::zero(field, m, n);
    for (x, c) in &v.terms {
        out = out.add(&e_r_inverse(field, x).scale(c));
    }
    out
}

/// `E_R^{-1}(τ^Y) = τ^Y ▷ (1^{⊗n})_{id}` for a matrix over `R`.
pub fn e_r_inverse_ring(ring: &RingB, y: &RMat) -> FinComb {
    FinBimodule::new(ring.clone()).act(y, &super::fin::unit_elt(ring, y.rows))
}

/// `τ^{I_{i−1} ⊕ [a b] ⊕ I_{n−i}}`, an `n × (n+1)` matrix.
fn row_split(n: usize, i: usize, a: i64, b: i64) -> IntMat {
    let mut y = IntMat::zeros(n, n + 1);
    for r in 1..=n {
        match r.cmp(&i) {
            std::cmp::Ordering::Less => y.set(r - 1, r - 1, 1),
            std::cmp::Ordering::Greater => y.set(r - 1, r, 1),
            std::cmp::Ordering::Equal => {
                y.set(r - 1, r - 1, a);
                y.set(r - 1, r, b);
            }
        }
    }
    y
}

/// `f ∘ (id_{i−1} × θ × id_{n−i})` for `f = τ^X`, `X ∈ M_{n+1, m}`.
pub fn theta_composite(field: Field, x: &IntMat, i: usize) -> SparseGroupElt<IntMat> {
    let n = x.rows - 1;
    let theta = SparseGroupElt::from_terms(
        field,
        [(row_split(n, i, 1, 1), Q::ONE), (row_split(n, i, 1, 0), Q::int(-1)), (row_split(n, i, 0, 1), Q::int(-1))],
    );
    SparseGroupElt::basis(field, x.clone()).compose(&theta)
}

fn random_int_mat(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> IntMat {
    let mut x = IntMat::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            x.set(i, j, rng.random_range(-2..=2));
        }
    }
    x
}

/// Number of random `θ`-composites, objects `≤ max`, not annihilated by `E_R^{-1}`.
pub fn theta_composite_failures(field: Field, max: usize, samples: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..samples {
        let (n, m) = (rng.random_range(1..=max), rng.random_range(0..=max));
        let x = random_int_mat(&mut rng, n + 1, m);
        let i = rng.random_range(1..=n);
        let comp = theta_composite(field, &x, i);
        if !e_r_inverse_elt(field, &comp, m, n).is_zero() {
            failures += 1;
        }
    }
    failures
}

/// `E_R^{-1}(τ^Y ∘ τ^X) = τ^Y ▷ E_R^{-1}(τ^X)` on random pairs.
pub fn left_action_failures(field: Field, max: usize, samples: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = FinBimodule::new(RingB::ground(field));
    (0..samples)
        .filter(|_| {
            let (n, m, p) = (rng.random_range(0..=max), rng.random_range(0..=max), rng.random_range(0..=max));
            let x = random_int_mat(&mut rng, n, m);
            let y = random_int_mat(&mut rng, m, p);
            e_r_inverse(field, &y.compose(&x)) != l.act_int(&y, &e_r_inverse(field, &x))
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primfr::fin::FinCell;

    const QF: Field = Field::Rational;

    #[test]
    fn inverse_examples() {
        let x = IntMat::from_rows(&[&[1, 2]]);
        assert_eq!(e_r_inverse(QF, &x).to_string(), "[1] + (2)·[2]");
        assert_eq!(e_r_inverse(QF, &IntMat::identity(3)).to_string(), "[1,2,3]");
        assert_eq!(e_r_inverse(QF, &IntMat::zeros(0, 0)).to_string(), "[]");
    }

    #[test]
    fn inverse_after_e_is_identity() {
        for m in 0..=3 {
            for n in 0..=3 {
                let cell = FinCell::new(m, n, 1, false);
                for e in &cell.basis {
                    let v = FinComb::basis(QF, e.clone());
                    assert_eq!(e_r_inverse_elt(QF, &e_r(&v).unwrap(), m, n), v);
                }
            }
        }
    }

    #[test]
    fn e_needs_ground_ring() {
        let v = FinComb::basis(QF, FinMapElt::new(1, vec![0], vec![1]));
        assert_eq!(e_r(&v), Err(PrimFrError::GroundRingOnly));
    }

    #[test]
    fn row_splitting() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let x = random_int_mat(&mut rng, 2, 2);
            let lhs = e_r_inverse(QF, &row_split(1, 1, 1, 1).matmul(&x));
            let rhs = e_r_inverse(QF, &row_split(1, 1, 1, 0).matmul(&x)).add(&e_r_inverse(QF, &row_split(1, 1, 0, 1).matmul(&x)));
            assert_eq!(lhs, rhs);
        }
        assert_eq!(theta_composite_failures(QF, 3, 100, 2), 0);
        assert_eq!(theta_composite_failures(Field::Prime(2), 3, 100, 2), 0);
    }

    #[test]
    fn left_action_is_transported() {
        assert_eq!(left_action_failures(QF, 3, 100, 3), 0);
    }

    #[test]
    fn ring_inverse_matches_integer_inverse() {
        let ring = RingB::ground(QF);
        let x = IntMat::from_rows(&[&[1, -2], &[3, 0]]);
        assert_eq!(e_r_inverse_ring(&ring, &RMat::from_int(&ring, &x)), e_r_inverse(QF, &x));
        let dual = RingB::dual_numbers(QF);
        let mut y = RMat::from_int(&dual, &IntMat::from_rows(&[&[1, 1]]));
        y.set(0, 1, dual.basis(1));
        assert_eq!(e_r_inverse_ring(&dual, &y).to_string(), "[1] + [2]⊗(e1)");
    }
}
