//! The fourteen acceptance criteria, one line each. Exits nonzero if any fails.

use eigenmonad::exactla::{sparse, LinMap};
use eigenmonad::freealg::{coords, component_basis, hall_expand, hall_set, hall_tensor_span, primitive_part};
use eigenmonad::monadcore::{
    check_monad_laws, hom_component, hom_t, subgrid_from, BalancedTensor, Eigen, Module, ModuleGrid, Monad, MonadGrid,
    QuotientModule, RegularModule, SubGrid, Window,
};
use eigenmonad::outerh::outer_checks;
use eigenmonad::passi::{
    analyticity_slice, filtration_quotients, kappa_span, polynomial_degree_leq, polynomial_ideal_generated, CatKind,
    MultilinearTensorFunctor, PassiCell, PassiMonad, SliceStatus,
};
use eigenmonad::primfr::{
    e_r, e_r_inverse_elt, exterior_char2_check, graded_alpha_compare, section_failures, theta_composite_failures,
    FinBimodule, FinCell, FinComb, FinMonad, RingB,
};
use eigenmonad::primgr::{e_map, prim_eigenmonad_check, r_map, theta_kernel, AssCell, AssMonad, LieMonad};
use eigenmonad::{Field, Subspace};
use eigenmonad_oracle as oracle;
use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

const QF: Field = Field::Rational;
const F2: Field = Field::Prime(2);
const SEED: u64 = 7;

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok { Ok(()) } else { Err(msg()) }
}

fn grid3() -> impl Iterator<Item = (usize, usize, usize)> {
    (0..=3).flat_map(|n| (0..=3).flat_map(move |m| (0..=3).map(move |d| (n, m, d))))
}

fn passi_ranks(kind: CatKind) -> Outcome {
    for (n, m, d) in grid3() {
        let want = match kind {
            CatKind::Gr => oracle::passi_rank_gr(n as u64, m as u64, d as u64),
            CatKind::Fr => oracle::passi_rank_fr(n as u64, m as u64, d as u64),
        };
        let got = PassiCell::new(kind, QF, n, m, d).dim() as u128;
        ensure(got == want, || format!("({n},{m},{d}): {got} vs {want}"))?;
    }
    let spots: &[(usize, usize, usize, usize)] = match kind {
        CatKind::Gr => &[(2, 1, 2, 7), (2, 2, 1, 5), (2, 2, 2, 17)],
        CatKind::Fr => &[(1, 1, 2, 3), (2, 2, 2, 15)],
    };
    for &(n, m, d, want) in spots {
        let got = PassiCell::new(kind, QF, n, m, d).dim();
        ensure(got == want, || format!("spot ({n},{m},{d}): {got} vs {want}"))?;
    }
    Ok(())
}

fn c1() -> Outcome {
    passi_ranks(CatKind::Gr)
}

fn c2() -> Outcome {
    passi_ranks(CatKind::Fr)
}

fn c3() -> Outcome {
    for kind in [CatKind::Gr, CatKind::Fr] {
        for n in 0..=2 {
            for m in 0..=2 {
                for d in 0..=3 {
                    let cell = PassiCell::new(kind, QF, n, m, d);
                    let aug = cell.aug_power(d).map_err(|e| e.to_string())?;
                    let gen = polynomial_ideal_generated(&cell, d, 3).map_err(|e| format!("{kind} ({n},{m},{d}): {e}"))?;
                    let kap = kappa_span(&cell, d, d.max(1));
                    ensure(gen == aug && kap == aug, || format!("{kind} ({n},{m},{d})"))?;
                }
            }
        }
    }
    Ok(())
}

fn c4() -> Outcome {
    let window = [0, 1, 2, 3];
    let monads: Vec<(&str, Box<dyn Monad>)> = vec![
        ("passi-gr", Box::new(PassiMonad::new(CatKind::Gr, QF, 3))),
        ("passi-fr", Box::new(PassiMonad::new(CatKind::Fr, QF, 3))),
        ("ass", Box::new(AssMonad::new(QF))),
        ("lie", Box::new(LieMonad::new(QF))),
        ("sym", Box::new(FinMonad::symmetric(RingB::ground(QF)))),
        ("sym-dual", Box::new(FinMonad::symmetric(RingB::dual_numbers(QF)))),
        ("fin", Box::new(FinMonad::fin(QF))),
    ];
    for (name, t) in &monads {
        let r = check_monad_laws(t.as_ref(), &window, 200, SEED);
        ensure(r.ok(), || format!("{name}: {} violations", r.violations.len()))?;
    }
    Ok(())
}

fn span(field: Field, dim: usize, vs: &[&[i64]]) -> Subspace {
    let v: Vec<_> = vs.iter().map(|r| sparse::from_i64(field, r)).collect();
    Subspace::span(field, dim, &v)
}

fn one_object() -> Window {
    Window::new(vec![0], 0)
}

fn m2_ideal() -> SubGrid {
    SubGrid::from([((0, 0), span(QF, 4, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]))])
}

fn c2_ideal() -> SubGrid {
    SubGrid::from([((0, 0), span(QF, 2, &[&[-1, 1]]))])
}

fn c5() -> Outcome {
    let m2 = MonadGrid::matrix_algebra(QF, 2);
    let eig = Eigen::new(&m2, m2_ideal(), &one_object()).map_err(|e| e.to_string())?;
    let dims = (eig.j[&(0, 0)].dim(), eig.idealizer[&(0, 0)].dim(), eig.e.dim(0, 0));
    ensure(dims == (2, 3, 1), || format!("M_2 dims {dims:?}"))?;
    let ereg = RegularModule { t: &eig.e, x0: 0 };
    let tens = BalancedTensor::new(&eig, &ereg, &[0]);
    let maps = (0..4)
        .map(|k| LinMap::new(QF, 2, (0..2).map(|c| if c == k % 2 { sparse::unit(k / 2) } else { vec![] }).collect()))
        .collect();
    let col = ModuleGrid { field: QF, dims: BTreeMap::from([(0, 2)]), act: BTreeMap::from([((0, 0), maps)]) };
    let h = hom_t(&m2, &tens, &col, &[0]);
    ensure(tens.dim(0) == 2 && h.dim() == 1, || format!("tensor dim {}, hom dim {}", tens.dim(0), h.dim()))?;
    let rank = hom_component(&tens, &col, &[0], &h.basis()[0], 0).rank();
    ensure(rank == 2, || format!("tensor → k² has rank {rank}"))?;

    let kg = MonadGrid::cyclic_group_algebra(QF, 2);
    let eig = Eigen::new(&kg, c2_ideal(), &one_object()).map_err(|e| e.to_string())?;
    let v = eig.vanishing(&RegularModule { t: &kg, x0: 0 });
    ensure(v[&0] == span(QF, 2, &[&[1, 1]]), || format!("V has dim {}", v[&0].dim()))
}

fn four_descriptions(name: &str, eig: &Eigen) -> Outcome {
    let labels = eig.window.waypoints();
    for &x0 in &eig.window.cells {
        let quot = QuotientModule::new(eig.t, x0, eig.column(x0));
        let v = eig.vanishing(&quot);
        for &y in &eig.window.cells {
            ensure(v[&y].dim() == eig.e.dim(y, x0), || format!("{name}: V at ({y},{x0})"))?;
        }
        let h = hom_t(eig.t, &quot, &quot, &labels).dim();
        ensure(h == eig.e.dim(x0, x0), || format!("{name}: Hom at {x0} is {h}, E is {}", eig.e.dim(x0, x0)))?;
    }
    Ok(())
}

fn c6() -> Outcome {
    let m2 = MonadGrid::matrix_algebra(QF, 2);
    four_descriptions("M_2", &Eigen::new(&m2, m2_ideal(), &one_object()).map_err(|e| e.to_string())?)?;
    let kg = MonadGrid::cyclic_group_algebra(QF, 2);
    four_descriptions("k[C_2]", &Eigen::new(&kg, c2_ideal(), &one_object()).map_err(|e| e.to_string())?)?;
    for kind in [CatKind::Gr, CatKind::Fr] {
        for (d, nu) in [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)] {
            let t = PassiMonad::new(kind, QF, d);
            let win = Window::new(vec![0, 1, 2], 3);
            let j = subgrid_from(&win, |z, x| t.cell(z, x).aug_power(nu).expect("ν ≤ d + 1"));
            let eig = Eigen::new(&t, j, &win).map_err(|e| e.to_string())?;
            four_descriptions(&format!("{kind} 𝒫^{d} / I^({nu})"), &eig)?;
        }
    }
    Ok(())
}

fn c7() -> Outcome {
    for m in 0..=3 {
        for n in 0..=3 {
            let cell = AssCell::new(m, n);
            for i in 0..cell.dim() {
                let a = sparse::unit(i);
                ensure(r_map(QF, &cell, &e_map(QF, &cell, &a)) == a, || format!("R∘E at ({m},{n}) basis {i}"))?;
            }
        }
    }
    for (m, n, want) in [(1, 2, 1), (1, 3, 2), (2, 3, 6), (3, 2, 0), (4, 3, 0)] {
        let got = theta_kernel(QF, m, n).dim();
        ensure(got == want, || format!("θ-kernel ({m},{n}) = {got}, want {want}"))?;
    }
    let r = prim_eigenmonad_check(QF, 3, 4, 50, SEED);
    for c in &r.cells {
        let want = oracle::lie_operad_dim(c.m, c.n);
        ensure(c.equal && c.kernel_dim as u128 == want, || format!("cell ({},{}): kernel {} vs {want}", c.m, c.n, c.kernel_dim))?;
    }
    ensure(r.transported_failures == 0, || format!("{} transported failures", r.transported_failures))
}

fn multidegrees(max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer = vec![Vec::new()];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for d in &layer {
            let total: usize = d.iter().sum();
            for k in 1..=max - total {
                let mut e: Vec<usize> = d.clone();
                e.push(k);
                next.push(e);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn c8() -> Outcome {
    let deltas = multidegrees(4);
    for d in &deltas {
        let trees = hall_set(d).map_err(|e| e.to_string())?;
        let want = oracle::lie_dim(&d.iter().map(|&x| x as u64).collect::<Vec<_>>());
        ensure(trees.len() as u128 == want, || format!("|H_{d:?}| = {} vs {want}", trees.len()))?;
        let basis = component_basis(1, d);
        let index: BTreeMap<_, _> = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        let images: Vec<_> = trees.iter().map(|t| coords(QF, &index, &hall_expand(QF, d.len(), t))).collect();
        ensure(Subspace::span(QF, basis.len(), &images).dim() == trees.len(), || format!("{d:?}: dependent expansions"))?;
        for m in 1..=3 {
            let hall = hall_tensor_span(QF, m, d).map_err(|e| e.to_string())?;
            ensure(hall == primitive_part(QF, m, d).1, || format!("primitive part m = {m}, δ = {d:?}"))?;
        }
    }
    Ok(())
}

fn c9() -> Outcome {
    for m in 0..=3 {
        for n in 0..=3 {
            for e in &FinCell::new(m, n, 1, false).basis {
                let v = FinComb::basis(QF, e.clone());
                let back = e_r(&v).map(|x| e_r_inverse_elt(QF, &x, m, n)).map_err(|e| e.to_string())?;
                ensure(back == v, || format!("E_R⁻¹∘E_R at {e}"))?;
            }
        }
    }
    let f = theta_composite_failures(QF, 3, 100, SEED);
    ensure(f == 0, || format!("{f} θ-composites survive"))?;
    for field in [QF, F2] {
        let l = FinBimodule::new(RingB::ground(field));
        for m in 0..=3 {
            for n in 0..=3 {
                let want = if m == n { oracle::factorial(n as u64) } else { 0 };
                let got = l.vanishing(m, n).dim() as u128;
                ensure(got == want, || format!("{field:?} vanishing ({m},{n}) = {got}, want {want}"))?;
            }
        }
    }
    Ok(())
}

fn c10() -> Outcome {
    let f = section_failures(200, 3, SEED);
    ensure(f == 0, || format!("{f} section failures"))?;
    for n in 0..=3 {
        for m in 0..=3 {
            for d in 0..=1 {
                let c = graded_alpha_compare(QF, n, m, d, 3).map_err(|e| e.to_string())?;
                ensure(c.iso && c.gr_dim == c.fr_dim, || format!("({n},{m},{d}) not iso: {c:?}"))?;
            }
        }
    }
    let c = graded_alpha_compare(QF, 2, 1, 2, 2).map_err(|e| e.to_string())?;
    ensure((c.gr_dim, c.fr_dim, c.split_epi) == (4, 3, true), || format!("(2,1,2): {c:?}"))
}

fn c11() -> Outcome {
    let r = outer_checks(QF, 3, 500, 4, SEED);
    ensure(r.exchange_failures == 0, || format!("{} exchange failures", r.exchange_failures))?;
    ensure(r.abelian_failures == 0 && r.samples >= 100, || format!("{} abelian failures", r.abelian_failures))?;
    ensure(r.ok(), || format!("{r:?}"))
}

fn c12() -> Outcome {
    let r = exterior_char2_check();
    ensure(r.f2.theta_image_zero, || "θ image nonzero over F₂".into())?;
    ensure(!r.rational_lift.theta_image_zero, || "θ image zero over ℚ".into())?;
    ensure(r.f2.contained && r.f2.strict, || format!("containment {:?}", r.f2))
}

fn c13() -> Outcome {
    let nu = |n: usize| n + 1;
    let cells = [0, 1, 2, 3];
    let runs: Vec<_> = [4, 8]
        .into_iter()
        .map(|cap| analyticity_slice(CatKind::Gr, QF, &nu, &cells, cap).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    for r in &runs[1] {
        ensure(r.status != SliceStatus::Mismatch, || format!("({},{}): {} vs {}", r.y, r.x, r.computed, r.expected))?;
    }
    let dims = |rows: &[eigenmonad::passi::SliceRow]| rows.iter().map(|r| r.computed).collect::<Vec<_>>();
    ensure(dims(&runs[0]) == dims(&runs[1]), || "not cap-stable between caps 4 and 8".into())?;
    let q = filtration_quotients(CatKind::Gr, QF, 1, 1, 3, 4).map_err(|e| e.to_string())?;
    ensure(q.iter().all(|&x| x > 0), || format!("filtration quotients {q:?}"))
}

fn c14() -> Outcome {
    let t = MultilinearTensorFunctor::new(QF, 2, 9);
    let window = [0, 1, 2, 3];
    let le2 = polynomial_degree_leq(&t, 2, &window).map_err(|e| e.to_string())?;
    let le1 = polynomial_degree_leq(&t, 1, &window).map_err(|e| e.to_string())?;
    ensure(le2 && !le1, || format!("degree ≤ 2: {le2}, degree ≤ 1: {le1}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 14] = [
        ("Passi ranks, free groups", c1),
        ("Passi ranks, free abelian groups", c2),
        ("polynomial ideal equality", c3),
        ("monad laws", c4),
        ("eigenring examples", c5),
        ("four descriptions of the eigenmonad", c6),
        ("gr primitivity", c7),
        ("Hall sets and primitive parts", c8),
        ("fr primitivity", c9),
        ("abelianization", c10),
        ("outer ideal", c11),
        ("char-2 exterior example", c12),
        ("analyticity slice and filtration", c13),
        ("polynomial degree bound", c14),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let r = f();
        let ms = t0.elapsed().as_millis();
        match r {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({ms} ms)", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {e}", i + 1);
            }
        }
    }
    println!("{}/14 criteria passed", 14 - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
