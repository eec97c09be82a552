use super::{job, Ctx, Job, Part};
use crate::report::{rank_csv, Check, RankRow};
use eigenmonad::freealg::GrTuple;
use eigenmonad::passi::{
    filtration_quotients, kappa_span, passi_rank, polynomial_degree_leq, polynomial_ideal_generated, two_sided_witness,
    CatKind, MultilinearTensorFunctor, PassiCell,
};
use eigenmonad::Field;
use rayon::prelude::*;

/// Computed and closed-form ranks of `𝒫^d(m, n)` on the grid `n ≤ max_n`, `m ≤ max_m`, `d ≤ max_d`.
pub fn rank_rows(kind: CatKind, field: Field, max_n: usize, max_m: usize, max_d: usize) -> Vec<RankRow> {
    let grid: Vec<(usize, usize, usize)> =
        (0..=max_n).flat_map(|n| (0..=max_m).flat_map(move |m| (0..=max_d).map(move |d| (n, m, d)))).collect();
    grid.par_iter()
        .map(|&(n, m, d)| {
            let dim_computed = PassiCell::new(kind, field, n, m, d).dim();
            let dim_formula = passi_rank(kind, n, m, d);
            RankRow { kind: kind.to_string(), n, m, d, dim_formula, dim_computed, matches: dim_computed as u128 == dim_formula }
        })
        .collect()
}

pub(super) fn passi_ranks() -> Vec<Job> {
    let mut jobs = vec![job(|c: &Ctx| {
        let mut part = Part::default();
        let mut all = Vec::new();
        for kind in [CatKind::Gr, CatKind::Fr] {
            let rows = rank_rows(kind, c.field, c.cfg.max_n, c.cfg.max_m, c.cfg.max_d);
            let computed: Vec<usize> = rows.iter().map(|r| r.dim_computed).collect();
            let expected: Vec<u128> = rows.iter().map(|r| r.dim_formula).collect();
            part.checks.push(Check::compare(&format!("table-{kind}"), "rank of the Passi quotient on the grid", computed, expected));
            all.extend(rows);
        }
        part.tables.push(("passi_ranks.csv".into(), rank_csv(&all)));
        part
    })];
    let spots = [(CatKind::Gr, 2, 1, 2, 7), (CatKind::Gr, 2, 2, 1, 5), (CatKind::Gr, 2, 2, 2, 17), (CatKind::Fr, 1, 1, 2, 3), (CatKind::Fr, 2, 2, 2, 15)];
    for (kind, n, m, d, want) in spots {
        jobs.push(job(move |c: &Ctx| {
            let dim = PassiCell::new(kind, c.field, n, m, d).dim();
            Check::compare(&format!("spot-{kind}-{n}-{m}-{d}"), "rank spot value", dim, want).into()
        }));
    }
    jobs
}

pub(super) fn ideal_equality() -> Vec<Job> {
    let mut jobs = Vec::new();
    for kind in [CatKind::Gr, CatKind::Fr] {
        jobs.push(job(move |c: &Ctx| {
            let grid: Vec<(usize, usize, usize)> = (0..=c.cfg.max_n.min(2))
                .flat_map(|n| (0..=c.cfg.max_m.min(2)).flat_map(move |m| (0..=c.cfg.max_d).map(move |d| (n, m, d))))
                .collect();
            let bad: Vec<(usize, usize, usize, String)> = grid
                .par_iter()
                .filter_map(|&(n, m, d)| {
                    let cell = PassiCell::new(kind, c.field, n, m, d);
                    let aug = cell.aug_power(d).expect("d ≤ D");
                    let gen = match polynomial_ideal_generated(&cell, d, c.cfg.word_len_bound) {
                        Ok(s) => s,
                        Err(e) => return Some((n, m, d, e.to_string())),
                    };
                    let kap = kappa_span(&cell, d, d.max(1));
                    match (gen == aug, kap == aug) {
                        (true, true) => None,
                        (g, k) => Some((n, m, d, format!("pi-span equal: {g}, kappa span equal: {k}"))),
                    }
                })
                .collect();
            Check::compare(
                &format!("pi-kappa-augmentation-{kind}"),
                "polynomial ideal = augmentation power = κ̃ span",
                serde_json::json!({ "cells": grid.len(), "mismatches": bad }),
                serde_json::json!({ "cells": grid.len(), "mismatches": [] }),
            )
            .into()
        }));
    }
    jobs.push(job(|c: &Ctx| {
        let f = GrTuple::from_letters(2, &[&[1, -2], &[2, 1, 1]]);
        let witnesses: Vec<bool> = [CatKind::Gr, CatKind::Fr]
            .into_iter()
            .flat_map(|kind| (1..=c.cfg.max_d).map(move |d| (kind, d)))
            .map(|(kind, d)| two_sided_witness(kind, c.field, d, &f, c.cfg.max_d).unwrap_or(false))
            .collect();
        Check::predicate("two-sided", "π^d ∘ f lies in the d-th augmentation power", witnesses.iter().all(|&b| b), witnesses, "all true")
            .into()
    }));
    jobs.push(job(|c: &Ctx| {
        let t = MultilinearTensorFunctor::new(c.field, 2, 6);
        let deg2 = polynomial_degree_leq(&t, 2, &[1, 2]).unwrap_or(false);
        let deg1 = polynomial_degree_leq(&t, 1, &[1, 2, 3]).unwrap_or(true);
        Check::compare("multilinear-degree", "degree of the multilinear tensor functor, N = 2", [deg2, deg1], [true, false]).into()
    }));
    jobs.push(job(|c: &Ctx| {
        let bound = c.cfg.word_len_bound.max(c.cfg.max_d + 1);
        let q = filtration_quotients(CatKind::Gr, c.field, 1, 1, c.cfg.max_d, bound);
        let ok = q.as_ref().is_ok_and(|v| v.iter().all(|&x| x > 0));
        let computed = q.map_err(|e| e.to_string());
        Check::predicate("strict-filtration", "I^(d)/I^(d+1) at cell (1, 1)", ok, computed, "every quotient nonzero").into()
    }));
    jobs
}
