use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use eigenmonad::freealg::{magnus, Word};
use eigenmonad::monadcore::check_monad_laws;
use eigenmonad::outerh::outer_checks;
use eigenmonad::passi::{CatKind, PassiCell, PassiMonad};
use eigenmonad::Field;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const QF: Field = Field::Rational;

fn passi_cells(c: &mut Criterion) {
    let mut g = c.benchmark_group("passi-cell");
    for (kind, name) in [(CatKind::Gr, "gr"), (CatKind::Fr, "fr")] {
        g.bench_function(format!("{name}-2x2-d3"), |b| b.iter(|| PassiCell::new(kind, QF, 2, 2, 3)));
    }
    g.finish();
}

fn monad_laws(c: &mut Criterion) {
    c.bench_function("monad-laws/passi-gr-d2", |b| {
        b.iter_batched(
            || PassiMonad::new(CatKind::Gr, QF, 2),
            |t| check_monad_laws(&t, &[0, 1, 2], 50, 7),
            BatchSize::SmallInput,
        )
    });
}

fn magnus_expansion(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let words: Vec<Word> = (0..32).map(|_| Word::random(&mut rng, 3, 8)).collect();
    c.bench_function("magnus/32-words-d4", |b| {
        b.iter(|| words.iter().map(|w| magnus(QF, w, 4)).collect::<Vec<_>>())
    });
}

fn outer(c: &mut Criterion) {
    c.bench_function("outer-checks/100", |b| b.iter(|| outer_checks(QF, 3, 100, 4, 7)));
}

criterion_group!(benches, passi_cells, monad_laws, magnus_expansion, outer);
criterion_main!(benches);
