use super::{job, Ctx, Job};
use crate::report::Check;
use eigenmonad::exactla::{sparse, LinMap};
use eigenmonad::monadcore::{
    annihilator, check_left_ideal, counit_epi, hom_component, hom_t, subgrid_from, unit_mono, BalancedTensor, Eigen,
    Module, ModuleGrid, Monad, MonadGrid, QuotientModule, RegularModule, SubGrid, Window,
};
use eigenmonad::passi::{analyticity_slice, CatKind, PassiMonad, SliceStatus};
use eigenmonad::{Field, Subspace};
use serde_json::json;
use std::collections::BTreeMap;

fn span(field: Field, dim: usize, vs: &[&[i64]]) -> Subspace {
    let v: Vec<_> = vs.iter().map(|r| sparse::from_i64(field, r)).collect();
    Subspace::span(field, dim, &v)
}

/// `D(0, (0,1)) ⊂ M_2`: matrices killing the second basis vector.
fn column_ideal(field: Field) -> SubGrid {
    SubGrid::from([((0, 0), span(field, 4, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]))])
}

fn augmentation_ideal(field: Field) -> SubGrid {
    SubGrid::from([((0, 0), span(field, 2, &[&[-1, 1]]))])
}

fn one_object() -> Window {
    Window::new(vec![0], 0)
}

/// `k²` with `E_ij` acting as matrix units.
fn column_module(field: Field) -> ModuleGrid {
    let maps = (0..4)
        .map(|k| {
            let (i, j) = (k / 2, k % 2);
            LinMap::new(field, 2, (0..2).map(|c| if c == j { sparse::unit(i) } else { vec![] }).collect())
        })
        .collect();
    ModuleGrid { field, dims: BTreeMap::from([(0, 2)]), act: BTreeMap::from([((0, 0), maps)]) }
}

/// Per column `x0`: `(dim E(−, x0), dim V_J((T/J)(−, x0)), dim Hom_T((T/J)(−, x0), (T/J)(−, x0)), dim E(x0, x0))`.
fn four_descriptions(eig: &Eigen) -> Vec<(usize, Vec<usize>, Vec<usize>, usize, usize)> {
    let cells = eig.window.cells.clone();
    let labels = eig.window.waypoints();
    cells
        .iter()
        .map(|&x0| {
            let quot = QuotientModule::new(eig.t, x0, eig.column(x0));
            let v = eig.vanishing(&quot);
            let h = hom_t(eig.t, &quot, &quot, &labels).dim();
            let e_col: Vec<usize> = cells.iter().map(|&y| eig.e.dim(y, x0)).collect();
            let v_col: Vec<usize> = cells.iter().map(|y| v[y].dim()).collect();
            (x0, e_col, v_col, h, eig.e.dim(x0, x0))
        })
        .collect()
}

fn four_check(id: &str, eig: &Eigen) -> Check {
    let rows = four_descriptions(eig);
    let computed: Vec<_> = rows.iter().map(|r| (r.0, r.2.clone(), r.3)).collect();
    let expected: Vec<_> = rows.iter().map(|r| (r.0, r.1.clone(), r.4)).collect();
    Check::compare(id, "dim E = dim V_J(T/J) = dim Hom_T(T/J, T/J)", computed, expected)
}

/// Passi instances: `J = I^{(ν)}` in `𝒫^d` on cells `0..=2`.
fn passi_instance(c: &Ctx, kind: CatKind, d: usize, nu: usize, cap: usize) -> Check {
    let t = PassiMonad::new(kind, c.field, d);
    let cells: Vec<usize> = (0..=c.cfg.max_n.min(2)).collect();
    let win = Window::new(cells, cap);
    let j = subgrid_from(&win, |z, x| t.cell(z, x).aug_power(nu).expect("ν ≤ d + 1"));
    let eig = Eigen::new(&t, j, &win).expect("polynomial ideals are left ideals");
    four_check(&format!("four-descriptions-passi-{kind}-d{d}-nu{nu}"), &eig)
}

pub(super) fn eigenring_examples() -> Vec<Job> {
    let mut jobs = vec![
        job(|c: &Ctx| {
            let f = c.field;
            let m2 = MonadGrid::matrix_algebra(f, 2);
            let j = column_ideal(f);
            let left = check_left_ideal(&m2, &j, 1000, c.seed).is_ok();
            let eig = Eigen::new(&m2, j, &one_object()).expect("left ideal");
            let ereg = RegularModule { t: &eig.e, x0: 0 };
            let tens = BalancedTensor::new(&eig, &ereg, &[0]);
            let col = column_module(f);
            let h = hom_t(&m2, &tens, &col, &[0]);
            let iso_rank = h.basis().first().map_or(0, |s| hom_component(&tens, &col, &[0], s, 0).rank());
            vec![
                Check::compare(
                    "m2-eigenring",
                    "M_2 with D(0, (0,1))",
                    json!({ "left_ideal": left, "dim_d": eig.j[&(0, 0)].dim(), "dim_idealizer": eig.idealizer[&(0, 0)].dim(), "dim_e": eig.e.dim(0, 0) }),
                    json!({ "left_ideal": true, "dim_d": 2, "dim_idealizer": 3, "dim_e": 1 }),
                ),
                Check::compare(
                    "m2-quotient-tensor",
                    "M_2/D ⊗_E E ≅ k²",
                    json!({ "dim": tens.dim(0), "hom_dim": h.dim(), "rank": iso_rank }),
                    json!({ "dim": 2, "hom_dim": 1, "rank": 2 }),
                ),
                four_check("four-descriptions-m2", &eig),
            ]
            .into()
        }),
        job(|c: &Ctx| {
            let f = c.field;
            let kg = MonadGrid::cyclic_group_algebra(f, 2);
            let eig = Eigen::new(&kg, augmentation_ideal(f), &one_object()).expect("left ideal");
            let v = eig.vanishing(&RegularModule { t: &kg, x0: 0 });
            vec![
                Check::compare("c2-invariants", "V_{I(G)}(k[C₂]) = invariants", (v[&0].dim(), v[&0] == span(f, 2, &[&[1, 1]])), (1, true)),
                four_check("four-descriptions-c2", &eig),
            ]
            .into()
        }),
    ];
    for (kind, d, nu) in [(CatKind::Gr, 2, 2), (CatKind::Fr, 2, 2), (CatKind::Gr, 2, 1), (CatKind::Gr, 3, 2)] {
        jobs.push(job(move |c: &Ctx| {
            let lo = passi_instance(c, kind, d, nu, c.cfg.max_n.min(2) + 1);
            let hi = passi_instance(c, kind, d, nu, c.cfg.intermediate_cap);
            let stable = lo.computed == hi.computed;
            hi.with_cap(stable).into()
        }));
    }
    jobs
}

pub(super) fn adjunction() -> Vec<Job> {
    vec![
        job(|c: &Ctx| {
            let f = c.field;
            let kg = MonadGrid::cyclic_group_algebra(f, 2);
            let eig = Eigen::new(&kg, augmentation_ideal(f), &one_object()).expect("left ideal");
            let reg = RegularModule { t: &kg, x0: 0 };
            let quot = QuotientModule::new(&kg, 0, eig.column(0));
            let ereg = RegularModule { t: &eig.e, x0: 0 };
            let mut triv = ModuleGrid { field: f, dims: BTreeMap::from([(0, 1)]), act: BTreeMap::new() };
            triv.act.insert((0, 0), vec![LinMap::new(f, 1, vec![sparse::unit(0)]); 2]);
            vec![
                Check::compare(
                    "c2-counit",
                    "counit epi exactly on vanishingly generated modules",
                    json!({ "regular": counit_epi(&eig, &reg), "quotient": counit_epi(&eig, &quot) }),
                    json!({ "regular": false, "quotient": true }),
                ),
                Check::compare("c2-unit", "two-sided ideal: unit is mono", unit_mono(&BalancedTensor::new(&eig, &ereg, &[0])), true),
                Check::compare(
                    "c2-annihilators",
                    "annihilator of the trivial and regular modules",
                    json!({ "trivial_is_augmentation": annihilator(&kg, &triv, &[0])[&(0, 0)] == augmentation_ideal(f)[&(0, 0)], "regular_dim": annihilator(&kg, &reg, &[0])[&(0, 0)].dim() }),
                    json!({ "trivial_is_augmentation": true, "regular_dim": 0 }),
                ),
            ]
            .into()
        }),
        job(|c: &Ctx| {
            let nu = |n: usize| n + 1;
            let cells: Vec<usize> = (0..=c.cfg.max_n).collect();
            let caps = [c.cfg.max_n + 1, c.cfg.intermediate_cap];
            let runs: Vec<_> = caps
                .iter()
                .map(|&cap| analyticity_slice(CatKind::Gr, c.field, &nu, &cells, cap).expect("analyticity ideal is a left ideal"))
                .collect();
            let dims = |rows: &[eigenmonad::passi::SliceRow]| rows.iter().map(|r| (r.y, r.x, r.computed)).collect::<Vec<_>>();
            let stable = dims(&runs[0]) == dims(&runs[1]);
            let relevant: Vec<_> = runs[1].iter().filter(|r| r.status != SliceStatus::HypothesisViolated).collect();
            let computed: Vec<_> = relevant.iter().map(|r| (r.y, r.x, r.computed)).collect();
            let expected: Vec<_> = relevant.iter().map(|r| (r.y, r.x, r.expected)).collect();
            Check::compare("analyticity-slice", "eigenmonad of the ν-analyticity ideal, ν(n) = n + 1", computed, expected)
                .with_cap(stable)
                .into()
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_module_is_a_module() {
        let m2 = MonadGrid::matrix_algebra(Field::Rational, 2);
        let col = column_module(Field::Rational);
        // E_12 E_21 = E_11 acts as projection to the first coordinate.
        let a = col.act(0, 0, &sparse::unit(1), &col.act(0, 0, &sparse::unit(2), &sparse::unit(0)));
        assert_eq!(a, sparse::unit(0));
        assert_eq!(m2.dim(0, 0), 4);
    }
}
