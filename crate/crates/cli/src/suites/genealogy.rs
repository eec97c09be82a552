//! Edges `A ≫ B` ("B is a subquotient of A") between the monads of the
//! workbench, each with the computation that witnesses it.

use super::{job, Ctx, Job};
use crate::report::Check;
use eigenmonad::freealg::{GrTuple, Morph, Word};
use eigenmonad::monadcore::Monad;
use eigenmonad::outerh::outer_checks;
use eigenmonad::passi::{passi_rank, CatKind, PassiCell, PassiMonad};
use eigenmonad::primfr::{monad_hom_failures, section_failures, FinBimodule, RingB};
use eigenmonad::primgr::{prim_eigenmonad_check, LieMonad};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

fn random_tuple(rng: &mut ChaCha8Rng, n: usize, m: usize) -> GrTuple {
    GrTuple::new(n, (0..m).map(|_| Word::random(rng, n, 3)).collect())
}

pub(super) fn genealogy() -> Vec<Job> {
    vec![
        job(|c: &Ctx| {
            // 𝒫^{d+1}(m, n) modulo its top augmentation power is 𝒫^d(m, n).
            let mut computed = Vec::new();
            let mut expected = Vec::new();
            for kind in [CatKind::Gr, CatKind::Fr] {
                for (n, m) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
                    for d in 0..c.cfg.max_d {
                        let cell = PassiCell::new(kind, c.field, n, m, d + 1);
                        let top = cell.aug_power(d + 1).expect("d + 1 ≤ D");
                        computed.push((kind.to_string(), n, m, d, cell.dim() - top.dim(), top.dim() > 0));
                        expected.push((kind.to_string(), n, m, d, passi_rank(kind, n, m, d) as usize, true));
                    }
                }
            }
            Check::compare("passi-d+1>>passi-d", "𝒫^{d+1} ≫ 𝒫^d", computed, expected).into()
        }),
        job(|c: &Ctx| {
            // q : L_gr → 𝒫^d preserves composition.
            let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
            let mut failures = 0;
            let samples = 60;
            for kind in [CatKind::Gr, CatKind::Fr] {
                let t = PassiMonad::new(kind, c.field, c.cfg.max_d);
                for _ in 0..samples / 2 {
                    let (p, m, n) = (rng.random_range(0..=2), rng.random_range(0..=2), rng.random_range(0..=2));
                    let (a, b) = (random_tuple(&mut rng, m, p), random_tuple(&mut rng, n, m));
                    let lhs = t.cell(p, n).q_tuple(&a.compose(&b));
                    let rhs = t.compose(p, m, n, &t.cell(p, m).q_tuple(&a), &t.cell(m, n).q_tuple(&b));
                    if lhs != rhs {
                        failures += 1;
                    }
                }
            }
            Check::compare("gr>>passi", "L_gr ≫ 𝒫^d_gr and L_fr ≫ 𝒫^d_fr", json!({ "samples": samples, "failures": failures }), json!({ "samples": samples, "failures": 0 }))
                .into()
        }),
        job(|c: &Ctx| {
            let (s, h) = (section_failures(100, 3, c.seed), monad_hom_failures(100, 3, c.seed));
            Check::compare("gr>>fr", "L_gr ≫ L_fr via α with section γ", (s, h), (0, 0)).into()
        }),
        job(|c: &Ctx| {
            let r = outer_checks(c.field, 3, 100, c.cfg.conjugator_bound, c.seed);
            Check::compare(
                "gr>>h0>>fr",
                "L_gr ≫ H_0-quotient ≫ L_fr",
                (r.exchange_failures, r.abelian_failures, r.certificate_failures),
                (0, 0, 0),
            )
            .into()
        }),
        job(|c: &Ctx| {
            let r = prim_eigenmonad_check(c.field, 2, 3, 20, c.seed);
            Check::predicate("gr>>lie", "L_gr ≫ A_Lie as the primitivity eigenmonad", r.ok(), r.cells.len(), "θ-kernel = β(A_Lie) and transported composition")
                .into()
        }),
        job(|c: &Ctx| {
            let lie = LieMonad::new(c.field);
            let rows: Vec<(usize, usize, usize, usize)> = (0..=3)
                .flat_map(|m| (0..=3).map(move |n| (m, n)))
                .map(|(m, n)| (m, n, lie.cell(m, n).image().dim(), lie.dim(m, n)))
                .collect();
            let ok = rows.iter().all(|&(m, n, img, d)| img == d && d <= lie.ass.dim(m, n));
            Check::predicate("ass>>lie", "A_Lie ⊂ A_Ass via β", ok, rows, "β injective on every cell")
                .into()
        }),
        job(|c: &Ctx| {
            let l = FinBimodule::new(RingB::ground(c.field));
            let computed: Vec<usize> = (0..=3).map(|n| l.vanishing(n, n).dim()).collect();
            Check::compare("fr>>sym", "L_fr ≫ L_𝔖 through the vanishing cells", computed, [1, 1, 2, 6]).into()
        }),
    ]
}
