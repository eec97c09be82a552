use super::{job, Ctx, Job, Part};
use crate::report::Check;
use eigenmonad::monadcore::{check_monad_laws, LawReport, Monad, MonadGrid};
use eigenmonad::passi::{CatKind, PassiMonad};
use eigenmonad::primfr::{FinMonad, RingB};
use eigenmonad::primgr::{AssMonad, LieMonad};
use eigenmonad::Q;
use serde_json::json;

/// Basis triples checked per quadruple of objects before sampling takes over.
const BUDGET: usize = 200;

fn law_check(id: &str, anchor: &str, t: &dyn Monad, window: &[usize], seed: u64) -> Check {
    let r: LawReport = check_monad_laws(t, window, BUDGET, seed);
    let computed = json!({
        "instances": r.instances,
        "mode": r.mode,
        "violations": r.violations.iter().take(5).collect::<Vec<_>>(),
        "violation_count": r.violations.len(),
    });
    Check::predicate(id, anchor, r.ok(), computed, "no violations")
}

fn window(c: &Ctx) -> Vec<usize> {
    (0..=c.cfg.max_n.max(c.cfg.max_m)).collect()
}

pub(super) fn monad_laws() -> Vec<Job> {
    let mut jobs = Vec::new();
    for kind in [CatKind::Gr, CatKind::Fr] {
        jobs.push(job(move |c: &Ctx| {
            let t = PassiMonad::new(kind, c.field, c.cfg.max_d);
            law_check(&format!("passi-{kind}"), "Passi quotient monad", &t, &window(c), c.seed).into()
        }));
    }
    jobs.push(job(|c: &Ctx| law_check("ass", "associative operad monad", &AssMonad::new(c.field), &window(c), c.seed).into()));
    jobs.push(job(|c: &Ctx| law_check("lie", "Lie operad monad", &LieMonad::new(c.field), &window(c), c.seed).into()));
    jobs.push(job(|c: &Ctx| {
        let t = FinMonad::symmetric(RingB::ground(c.field));
        law_check("sym", "symmetric groups monad", &t, &window(c), c.seed).into()
    }));
    jobs.push(job(|c: &Ctx| {
        let t = FinMonad::symmetric(RingB::dual_numbers(c.field));
        law_check("sym-dual-numbers", "symmetric groups monad with coefficients", &t, &window(c), c.seed).into()
    }));
    jobs.push(job(|c: &Ctx| law_check("fin", "finite maps monad", &FinMonad::fin(c.field), &window(c), c.seed).into()));
    jobs.push(job(|c: &Ctx| {
        if !c.corrupt {
            return Part::default();
        }
        let mut g = MonadGrid::materialize(&PassiMonad::new(CatKind::Gr, c.field, 1), &[0, 1]);
        g.corrupt((1, 1, 1), 0, 0, 0, Q::ONE);
        law_check("corrupted-control", "negative control", &g, &[0, 1], c.seed).into()
    }));
    jobs
}
