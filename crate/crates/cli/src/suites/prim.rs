use super::{job, Ctx, Job};
use crate::report::Check;
use eigenmonad::exactla::{sparse, Subspace};
use eigenmonad::freealg::{coords, component_basis, hall_expand, hall_set, hall_tensor_span, primitive_part};
use eigenmonad::primfr::{
    e_r, e_r_inverse_elt, exterior_char2_check, left_action_failures, theta_composite_failures, FinBimodule, FinCell,
    FinComb, RingB,
};
use eigenmonad::primgr::{e_map, prim_eigenmonad_check, r_map, theta_kernel, AssCell};
use eigenmonad::Field;
use rayon::prelude::*;
use serde_json::json;
use std::collections::BTreeMap;

/// Multidegrees with positive entries and total degree at most `max`.
fn multidegrees(max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for d in &layer {
            let total: usize = d.iter().sum();
            for k in 1..=max.saturating_sub(total) {
                let mut e = d.clone();
                e.push(k);
                next.push(e);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out.sort();
    out
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

pub(super) fn prim_gr() -> Vec<Job> {
    vec![
        job(|c: &Ctx| {
            let mut failures = 0;
            let mut elements = 0;
            for m in 0..=c.cfg.max_m {
                for n in 0..=c.cfg.max_n {
                    let cell = AssCell::new(m, n);
                    for i in 0..cell.dim() {
                        elements += 1;
                        let a = sparse::unit(i);
                        if r_map(c.field, &cell, &e_map(c.field, &cell, &a)) != a {
                            failures += 1;
                        }
                    }
                }
            }
            Check::compare("r-after-e", "R ∘ E = id on associative operad bases", json!({ "elements": elements, "failures": failures }), json!({ "elements": elements, "failures": 0 })).into()
        }),
        job(|c: &Ctx| {
            let r = prim_eigenmonad_check(c.field, c.cfg.max_m, c.cfg.max_n + 1, 50, c.seed);
            let kernel: Vec<(usize, usize, usize)> = r.cells.iter().map(|x| (x.m, x.n, x.kernel_dim)).collect();
            let lie: Vec<(usize, usize, usize)> = r.cells.iter().map(|x| (x.m, x.n, x.lie_dim)).collect();
            let equal = r.cells.iter().all(|x| x.equal);
            vec![
                Check::compare("theta-kernel-dims", "θ-kernel dimensions against the Lie operad", kernel, lie),
                Check::predicate("theta-kernel-is-lie-image", "θ-kernel = β(A_Lie)", equal, r.cells.len(), "kernel equals image on every cell"),
                Check::compare(
                    "transported-composition",
                    "R(E(β a) ∘ E(β b)) = β(a ∘ b)",
                    json!({ "pairs": r.transported_pairs, "failures": r.transported_failures, "seed": r.seed }),
                    json!({ "pairs": 50, "failures": 0, "seed": c.seed }),
                ),
            ]
            .into()
        }),
        job(|c: &Ctx| {
            let spots = [(1, 2), (1, 3), (2, 3), (3, 2)];
            let dims: Vec<usize> = spots.iter().map(|&(m, n)| theta_kernel(c.field, m, n).dim()).collect();
            Check::compare("theta-kernel-spots", "θ-kernel spot values", dims, [1, 2, 6, 0]).into()
        }),
        // Over F_p the primitive part also holds p-th powers, so the Hall
        // comparisons run over ℚ.
        job(|_: &Ctx| {
            let q = Field::Rational;
            let rows: Vec<(Vec<usize>, usize, usize, usize)> = multidegrees(4)
                .par_iter()
                .map(|d| {
                    let trees = hall_set(d).expect("hall order");
                    let basis = component_basis(1, d);
                    let index: BTreeMap<_, _> = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
                    let images: Vec<_> = trees.iter().map(|t| coords(q, &index, &hall_expand(q, d.len(), t))).collect();
                    let independent = Subspace::span(q, basis.len(), &images).dim();
                    (d.clone(), trees.len(), independent, primitive_part(q, 1, d).1.dim())
                })
                .collect();
            let computed: Vec<_> = rows.iter().map(|r| (r.0.clone(), r.1, r.2)).collect();
            let expected: Vec<_> = rows.iter().map(|r| (r.0.clone(), r.3, r.3)).collect();
            Check::compare("hall-counts", "|H_δ| = rank of independent expansions = Lie component", computed, expected).into()
        }),
        job(|_: &Ctx| {
            let q = Field::Rational;
            let cases: Vec<(usize, Vec<usize>)> =
                (1..=2).flat_map(|m| multidegrees(4).into_iter().map(move |d| (m, d))).collect();
            let bad: Vec<(usize, Vec<usize>)> = cases
                .par_iter()
                .filter(|(m, d)| hall_tensor_span(q, *m, d).expect("hall order") != primitive_part(q, *m, d).1)
                .cloned()
                .collect();
            Check::compare(
                "primitive-part",
                "Hall tensors span the primitive part of each factor",
                json!({ "cases": cases.len(), "mismatches": bad }),
                json!({ "cases": cases.len(), "mismatches": [] }),
            )
            .into()
        }),
    ]
}

pub(super) fn prim_fr() -> Vec<Job> {
    vec![
        job(|c: &Ctx| {
            let mut failures = 0;
            let mut elements = 0;
            for m in 0..=c.cfg.max_m {
                for n in 0..=c.cfg.max_n {
                    for e in &FinCell::new(m, n, 1, false).basis {
                        elements += 1;
                        let v = FinComb::basis(c.field, e.clone());
                        if e_r(&v).map(|x| e_r_inverse_elt(c.field, &x, m, n)).ok() != Some(v) {
                            failures += 1;
                        }
                    }
                }
            }
            Check::compare("e-inverse-after-e", "E_R⁻¹ ∘ E_R = id", json!({ "elements": elements, "failures": failures }), json!({ "elements": elements, "failures": 0 })).into()
        }),
        job(|c: &Ctx| {
            let max = c.cfg.max_n.max(c.cfg.max_m);
            let theta = theta_composite_failures(c.field, max, 100, c.seed);
            let left = left_action_failures(c.field, max, 100, c.seed);
            vec![
                Check::compare("theta-composites", "E_R⁻¹ kills θ-composites", json!({ "samples": 100, "failures": theta }), json!({ "samples": 100, "failures": 0 })),
                Check::compare("left-action", "E_R⁻¹ transports the left action", json!({ "samples": 100, "failures": left }), json!({ "samples": 100, "failures": 0 })),
            ]
            .into()
        }),
        job(|c: &Ctx| {
            let rings = [
                ("ground", RingB::ground(c.field)),
                ("ground-f2", RingB::ground(Field::Prime(2))),
                ("dual-numbers", RingB::dual_numbers(c.field)),
            ];
            rings
                .into_iter()
                .map(|(name, ring)| {
                    let b = ring.dim();
                    let l = FinBimodule::new(ring);
                    let cells: Vec<(usize, usize)> =
                        (0..=c.cfg.max_m).flat_map(|m| (0..=c.cfg.max_n).map(move |n| (m, n))).collect();
                    let computed: Vec<(usize, usize, usize)> =
                        cells.par_iter().map(|&(m, n)| (m, n, l.vanishing(m, n).dim())).collect();
                    let expected: Vec<(usize, usize, usize)> = cells
                        .iter()
                        .map(|&(m, n)| (m, n, if m == n { factorial(n) * b.pow(n as u32) } else { 0 }))
                        .collect();
                    Check::compare(&format!("vanishing-{name}"), "vanishing cells are spanned by bijections", computed, expected)
                })
                .collect::<Vec<_>>()
                .into()
        }),
        job(|c: &Ctx| {
            [("ground", RingB::ground(c.field)), ("dual-numbers", RingB::dual_numbers(c.field))]
                .into_iter()
                .map(|(name, ring)| {
                    let r = FinBimodule::new(ring).check_axioms(c.cfg.max_n.max(c.cfg.max_m), 100, c.seed);
                    Check::predicate(&format!("bimodule-{name}"), "bimodule action and retraction", r.ok(), &r, "no failures")
                })
                .collect::<Vec<_>>()
                .into()
        }),
        job(|_: &Ctx| {
            let r = exterior_char2_check();
            vec![
                Check::compare("char2-theta-f2", "θ on f₂ ⊗ w₁∧w₂ over F₂", &r.f2.theta_image, Some("0")),
                Check::predicate("char2-theta-q", "θ on f₂ ⊗ w₁∧w₂ over ℚ", !r.rational_lift.theta_image_zero, &r.rational_lift, "nonzero"),
                Check::predicate("char2-strict", "(⋀W)(1) strictly inside the vanishing cell over F₂", r.f2.strict, &r.f2, "contained and strict"),
            ]
            .into()
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multidegree_enumeration() {
        let d = multidegrees(2);
        assert_eq!(d, vec![vec![1], vec![1, 1], vec![2]]);
        assert_eq!(multidegrees(4).len(), 15);
    }
}
