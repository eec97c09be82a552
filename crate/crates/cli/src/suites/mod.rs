mod abel;
mod eigen;
mod genealogy;
mod monads;
mod prim;
mod ranks;

use crate::config::Config;
use crate::report::{Check, SuiteReport};
use eigenmonad::freealg::{hall_expand, hall_set, FreeAlgError};
use eigenmonad::Field;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

pub use ranks::rank_rows;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteId {
    PassiRanks,
    IdealEquality,
    MonadLaws,
    PrimGr,
    PrimFr,
    Abelianization,
    Outer,
    EigenringExamples,
    Adjunction,
    Genealogy,
}

impl SuiteId {
    pub const ALL: [SuiteId; 10] = [
        SuiteId::PassiRanks,
        SuiteId::IdealEquality,
        SuiteId::MonadLaws,
        SuiteId::PrimGr,
        SuiteId::PrimFr,
        SuiteId::Abelianization,
        SuiteId::Outer,
        SuiteId::EigenringExamples,
        SuiteId::Adjunction,
        SuiteId::Genealogy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::PassiRanks => "passi-ranks",
            SuiteId::IdealEquality => "ideal-equality",
            SuiteId::MonadLaws => "monad-laws",
            SuiteId::PrimGr => "prim-gr",
            SuiteId::PrimFr => "prim-fr",
            SuiteId::Abelianization => "abelianization",
            SuiteId::Outer => "outer",
            SuiteId::EigenringExamples => "eigenring-examples",
            SuiteId::Adjunction => "adjunction",
            SuiteId::Genealogy => "genealogy",
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteId::ALL.into_iter().find(|id| id.name() == s).ok_or_else(|| format!("unknown suite {s}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub seed: u64,
    /// Adds a deliberately corrupted monad to the monad-laws suite.
    pub corrupt: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { seed: 7, corrupt: false }
    }
}

/// Everything a suite produces: the report and named CSV tables.
#[derive(Debug, Clone)]
pub struct SuiteOutput {
    pub report: SuiteReport,
    pub tables: Vec<(String, String)>,
}

/// Shared inputs of the check closures.
pub(crate) struct Ctx {
    pub cfg: Config,
    pub field: Field,
    pub seed: u64,
    pub corrupt: bool,
}

#[derive(Default)]
pub(crate) struct Part {
    pub checks: Vec<Check>,
    pub tables: Vec<(String, String)>,
}

impl From<Vec<Check>> for Part {
    fn from(checks: Vec<Check>) -> Self {
        Part { checks, tables: Vec::new() }
    }
}

impl From<Check> for Part {
    fn from(c: Check) -> Self {
        Part { checks: vec![c], tables: Vec::new() }
    }
}

pub(crate) type Job = Box<dyn Fn(&Ctx) -> Part + Send + Sync>;

pub(crate) fn job(f: impl Fn(&Ctx) -> Part + Send + Sync + 'static) -> Job {
    Box::new(f)
}

fn jobs(id: SuiteId) -> Vec<Job> {
    match id {
        SuiteId::PassiRanks => ranks::passi_ranks(),
        SuiteId::IdealEquality => ranks::ideal_equality(),
        SuiteId::MonadLaws => monads::monad_laws(),
        SuiteId::PrimGr => prim::prim_gr(),
        SuiteId::PrimFr => prim::prim_fr(),
        SuiteId::Abelianization => abel::abelianization(),
        SuiteId::Outer => abel::outer(),
        SuiteId::EigenringExamples => eigen::eigenring_examples(),
        SuiteId::Adjunction => eigen::adjunction(),
        SuiteId::Genealogy => genealogy::genealogy(),
    }
}

/// Runs the checks of a suite in parallel and assembles them in a fixed order.
pub fn run(id: SuiteId, cfg: &Config, opts: RunOptions) -> SuiteOutput {
    let ctx = Ctx { cfg: cfg.clone(), field: cfg.field(), seed: opts.seed, corrupt: opts.corrupt };
    let parts: Vec<Part> = jobs(id).par_iter().map(|j| j(&ctx)).collect();
    let mut report = SuiteReport { suite: id.name().into(), seed: opts.seed, config: cfg.clone(), checks: Vec::new() };
    let mut tables = Vec::new();
    for p in parts {
        report.checks.extend(p.checks);
        tables.extend(p.tables);
    }
    SuiteOutput { report, tables }
}

/// Hall trees of multidegree `delta` over `letters` letters with their expansions.
pub fn hall_listing(letters: usize, delta: &[usize]) -> Result<String, FreeAlgError> {
    if delta.len() > letters {
        return Err(FreeAlgError::IndexOutOfRange { index: delta.len(), len: letters });
    }
    let mut d = delta.to_vec();
    d.resize(letters, 0);
    let trees = hall_set(&d)?;
    let mut out = format!("multidegree {d:?}: {} Hall trees\n", trees.len());
    for t in trees.iter() {
        out += &format!("{t} = {}\n", hall_expand(Field::Rational, letters, t));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in SuiteId::ALL {
            assert_eq!(id.name().parse::<SuiteId>().unwrap(), id);
        }
        assert!("nope".parse::<SuiteId>().is_err());
    }

    #[test]
    fn hall_listing_counts() {
        let s = hall_listing(3, &[1, 1, 1]).unwrap();
        assert!(s.starts_with("multidegree [1, 1, 1]: 2 Hall trees"));
        assert!(hall_listing(2, &[1]).unwrap().contains("x1 = X1"));
        assert!(hall_listing(1, &[1, 1]).is_err());
    }
}
