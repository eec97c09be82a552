//! Verification suites, rank tables and Hall listings on top of `eigenmonad`.

pub mod config;
pub mod report;
pub mod suites;

pub use config::{Config, ConfigError};
pub use report::{Check, RankRow, Status, SuiteReport};
pub use suites::{hall_listing, rank_rows, run, RunOptions, SuiteId, SuiteOutput};
