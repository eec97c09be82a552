use super::{job, Ctx, Job};
use crate::report::Check;
use eigenmonad::freealg::{GrTuple, Word};
use eigenmonad::outerh::{outer_checks, outer_exchange_check};
use eigenmonad::passi::{graded_rank, CatKind};
use eigenmonad::primfr::{graded_alpha_compare, monad_hom_failures, section_failures};
use rayon::prelude::*;
use serde_json::json;

pub(super) fn abelianization() -> Vec<Job> {
    vec![
        job(|c: &Ctx| {
            let max = c.cfg.max_n.max(c.cfg.max_m);
            let s = section_failures(200, max, c.seed);
            let h = monad_hom_failures(200, max, c.seed);
            vec![
                Check::compare("section", "α ∘ γ = id", json!({ "samples": 200, "failures": s }), json!({ "samples": 200, "failures": 0 })),
                Check::compare("monad-hom", "α is a monad morphism", json!({ "samples": 200, "failures": h }), json!({ "samples": 200, "failures": 0 })),
            ]
            .into()
        }),
        job(|c: &Ctx| {
            let grid: Vec<(usize, usize, usize)> = (0..=c.cfg.max_n)
                .flat_map(|n| (0..=c.cfg.max_m).flat_map(move |m| (0..=c.cfg.max_d).map(move |d| (n, m, d))))
                .collect();
            let rows: Vec<_> = grid
                .par_iter()
                .map(|&(n, m, d)| graded_alpha_compare(c.field, n, m, d, c.cfg.magnus_d).expect("d ≤ magnus_D"))
                .collect();
            let split = rows.iter().all(|r| r.split_epi);
            let computed: Vec<_> = rows.iter().map(|r| (r.n, r.m, r.d, r.gr_dim, r.fr_dim, r.iso)).collect();
            let expected: Vec<_> = grid
                .iter()
                .map(|&(n, m, d)| {
                    let (g, f) = (graded_rank(CatKind::Gr, n, m, d), graded_rank(CatKind::Fr, n, m, d));
                    (n, m, d, g, f, g == f)
                })
                .collect();
            let low: Vec<bool> = rows.iter().filter(|r| r.d <= 1).map(|r| r.iso).collect();
            vec![
                Check::predicate("graded-split-epi", "ᾱ is a split epimorphism", split, rows.len(), "split on every graded piece"),
                Check::compare("graded-dims", "graded dimensions and isomorphism", computed, expected),
                Check::predicate("graded-iso-low-degree", "ᾱ is an isomorphism for d ∈ {0, 1}", low.iter().all(|&b| b), low.len(), "all isomorphisms"),
            ]
            .into()
        }),
        job(|c: &Ctx| {
            let r = graded_alpha_compare(c.field, 2, 1, 2, c.cfg.magnus_d.max(2)).expect("d ≤ D");
            Check::compare("graded-strict-2-1-2", "strict inequality at (2, 1, 2)", (r.gr_dim, r.fr_dim, r.iso), (4, 3, false)).into()
        }),
    ]
}

pub(super) fn outer() -> Vec<Job> {
    vec![
        job(|c: &Ctx| {
            let r = outer_checks(c.field, c.cfg.max_n.max(c.cfg.max_m), 500, c.cfg.conjugator_bound, c.seed);
            let zero = |failures: usize| json!({ "samples": r.samples, "failures": failures });
            vec![
                Check::compare("exchange", "Ad_g(id) ∘ ρ = ρ ∘ Ad_h(id)", zero(r.exchange_failures), zero(0)),
                Check::compare("action-law", "Ad_u Ad_v = Ad_{uv}", zero(r.action_law_failures), zero(0)),
                Check::compare("abelian-kills-ad", "α(Ad_g(id) − id) = 0", zero(r.abelian_failures), zero(0)),
                Check::compare(
                    "h0-certificates",
                    "certified H_0 equalities are sound",
                    json!({ "certified": r.certified, "failures": r.certificate_failures }),
                    json!({ "certified": r.certified, "failures": 0 }),
                ),
            ]
            .into()
        }),
        job(|_: &Ctx| {
            let rho = GrTuple::from_letters(2, &[&[2], &[1]]);
            let w = outer_exchange_check(&Word::gen(2, 1), &rho).expect("shapes agree");
            Check::compare("exchange-example", "exchange identity on a swap", (w.equal, w.h.to_string(), w.lhs.to_string()), (true, "x2", "[x2|x2x1x2^-1]_2")).into()
        }),
    ]
}
