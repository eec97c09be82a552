use eigenmonad::exactla::sparse;
use eigenmonad::freealg::{alpha, gamma, hall_set, magnus, GrTuple, IntMat, Morph, Word};
use eigenmonad::outerh::{h0_equal, outer_exchange_check};
use eigenmonad::passi::{CatKind, PassiMonad};
use eigenmonad::monadcore::Monad;
use eigenmonad::primfr::{e_r_inverse, FinBimodule, RingB};
use eigenmonad::{Field, SparseVec, Subspace, Q};
use eigenmonad_oracle as oracle;
use num_rational::BigRational;
use proptest::prelude::*;

const QF: Field = Field::Rational;

fn word(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
    let letter = (1..=n as i32, any::<bool>()).prop_map(|(g, s)| if s { g } else { -g });
    prop::collection::vec(letter, 0..=max_len).prop_map(move |l| Word::new(n, l))
}

fn tuple(n: usize, m: usize, max_len: usize) -> impl Strategy<Value = GrTuple> {
    prop::collection::vec(word(n, max_len), m).prop_map(move |w| GrTuple::new(n, w))
}

/// `(a, b)` with `a ∈ L(p, m)` and `b ∈ L(m, n)`.
fn composable() -> impl Strategy<Value = (GrTuple, GrTuple)> {
    (1..=3usize, 1..=3usize, 1..=3usize).prop_flat_map(|(p, m, n)| (tuple(m, p, 4), tuple(n, m, 4)))
}

fn int_mat(rows: usize, cols: usize) -> impl Strategy<Value = IntMat> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| {
        let mut x = IntMat::zeros(rows, cols);
        for (k, e) in v.into_iter().enumerate() {
            x.set(k / cols.max(1), k % cols.max(1), e);
        }
        x
    })
}

fn rational() -> impl Strategy<Value = Q> {
    prop_oneof![
        (any::<i64>(), 1i64..=i64::MAX).prop_map(|(n, d)| Q::frac(n, d)),
        (-1000i64..1000, 1i64..50).prop_map(|(n, d)| Q::frac(n, d)),
    ]
}

fn big(q: &Q) -> BigRational {
    q.to_big()
}

fn vectors(dim: usize) -> impl Strategy<Value = Vec<SparseVec>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, dim), 0..5)
        .prop_map(|vs| vs.iter().map(|v| sparse::from_i64(QF, v)).collect())
}

proptest! {
    #[test]
    fn rational_arithmetic_matches_big_rationals(a in rational(), b in rational()) {
        prop_assert_eq!(big(&a.add(&b)), big(&a) + big(&b));
        prop_assert_eq!(big(&a.mul(&b)), big(&a) * big(&b));
        prop_assert_eq!(big(&a.sub(&b)), big(&a) - big(&b));
        if !b.is_zero() {
            prop_assert_eq!(big(&a.div(&b).unwrap()), big(&a) / big(&b));
        }
    }

    #[test]
    fn free_group_axioms(u in word(3, 6), v in word(3, 6), w in word(3, 6)) {
        prop_assert_eq!(u.mul(&v).mul(&w), u.mul(&v.mul(&w)));
        prop_assert!(u.mul(&u.inv()).is_empty());
        let l = u.letters();
        prop_assert!(l.windows(2).all(|p| p[0] != -p[1]));
    }

    #[test]
    fn substitution_is_a_homomorphism(u in word(2, 5), v in word(2, 5), images in prop::collection::vec(word(3, 3), 2)) {
        let s = |x: &Word| x.substitute(3, &images);
        prop_assert_eq!(s(&u.mul(&v)), s(&u).mul(&s(&v)));
    }

    #[test]
    fn magnus_is_multiplicative(u in word(2, 4), v in word(2, 4)) {
        prop_assert_eq!(magnus(QF, &u.mul(&v), 3), magnus(QF, &u, 3).mul(&magnus(QF, &v, 3)));
    }

    #[test]
    fn composition_is_associative((a, b) in composable(), c in tuple(2, 3, 3)) {
        // c ∈ L(n, 2) only when b has three generators.
        if b.n == 3 {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        }
        prop_assert_eq!(GrTuple::identity(a.m()).compose(&a), a.clone());
        prop_assert_eq!(a.compose(&GrTuple::identity(a.n)), a);
    }

    #[test]
    fn abelianization_is_a_retraction((a, b) in composable(), x in int_mat(2, 3)) {
        prop_assert_eq!(alpha(&a.compose(&b)), alpha(&a).compose(&alpha(&b)));
        prop_assert_eq!(alpha(&gamma(&x)), x);
    }

    #[test]
    fn exchange_identity(g in word(2, 4), rho in tuple(3, 2, 4)) {
        prop_assert!(outer_exchange_check(&g, &rho).unwrap().equal);
    }

    #[test]
    fn conjugates_are_certified(t in tuple(2, 2, 3), c in word(2, 2)) {
        let b = t.ad(&c);
        if let eigenmonad::outerh::H0Answer::EqualCertified { conjugator } = h0_equal(&t, &b, 4) {
            prop_assert_eq!(t.ad(&conjugator), b);
        }
        prop_assert!(h0_equal(&t, &t, 0).is_certified());
    }

    #[test]
    fn passi_quotient_map_is_a_monad_morphism((a, b) in composable()) {
        for kind in [CatKind::Gr, CatKind::Fr] {
            let t = PassiMonad::new(kind, QF, 2);
            let (p, m, n) = (a.m(), a.n, b.n);
            let lhs = t.cell(p, n).q_tuple(&a.compose(&b));
            let rhs = t.compose(p, m, n, &t.cell(p, m).q_tuple(&a), &t.cell(m, n).q_tuple(&b));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn e_r_inverse_transports_the_left_action(x in int_mat(2, 2), y in int_mat(2, 3)) {
        let l = FinBimodule::new(RingB::ground(QF));
        prop_assert_eq!(e_r_inverse(QF, &y.compose(&x)), l.act_int(&y, &e_r_inverse(QF, &x)));
    }

    #[test]
    fn subspace_dimension_formula(a in vectors(4), b in vectors(4)) {
        let (sa, sb) = (Subspace::span(QF, 4, &a), Subspace::span(QF, 4, &b));
        let sum = sa.sum(&sb).unwrap();
        let cap = sa.intersect(&sb).unwrap();
        prop_assert_eq!(sum.dim() + cap.dim(), sa.dim() + sb.dim());
        prop_assert!(a.iter().all(|v| sa.member(v)));
        prop_assert!(sum.contains(&sa).unwrap() && sa.contains(&cap).unwrap());
    }

    #[test]
    fn hall_counts_follow_witt(delta in prop::collection::vec(1usize..=2, 1..=3)) {
        let want = oracle::lie_dim(&delta.iter().map(|&d| d as u64).collect::<Vec<_>>());
        prop_assert_eq!(hall_set(&delta).unwrap().len() as u128, want);
    }
}
