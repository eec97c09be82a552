use clap::{Parser, Subcommand, ValueEnum};
use eigenmonad::passi::CatKind;
use eigenmonad_cli::config::parse_field;
use eigenmonad_cli::report::rank_csv;
use eigenmonad_cli::{hall_listing, rank_rows, run, Config, RunOptions, SuiteId};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "tool", about = "Exact eigenmonad verification suites")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite and write its report.
    Run {
        suite: SuiteId,
        #[arg(long)]
        config: Option<String>,
        #[arg(long, default_value = "reports")]
        out: PathBuf,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// q (or 0) for ℚ, otherwise a prime.
        #[arg(long)]
        field: Option<String>,
        /// Inject a corrupted monad (negative control for monad-laws).
        #[arg(long)]
        corrupt: bool,
    },
    /// Print a rank table as CSV.
    Table {
        #[command(subcommand)]
        table: Table,
    },
    /// List the Hall trees of a multidegree.
    Hall {
        #[arg(long)]
        letters: usize,
        #[arg(long, value_delimiter = ',')]
        multidegree: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum Table {
    Passi {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long, default_value_t = 3)]
        max_d: usize,
        #[arg(long)]
        field: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Gr,
    Fr,
}

fn config_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("configuration error: {e}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Run { suite, config, out, seed, field, corrupt } => {
            let mut cfg = match config.as_deref().map(Config::load).unwrap_or_else(|| Ok(Config::default())) {
                Ok(c) => c,
                Err(e) => return config_error(e),
            };
            if let Some(f) = field {
                match parse_field(&f) {
                    Ok(code) => cfg.field = code,
                    Err(e) => return config_error(e),
                }
            }
            let output = run(suite, &cfg, RunOptions { seed, corrupt });
            let write = || -> std::io::Result<()> {
                std::fs::create_dir_all(&out)?;
                std::fs::write(out.join(format!("{suite}.json")), output.report.to_json())?;
                for (name, body) in &output.tables {
                    std::fs::write(out.join(name), body)?;
                }
                Ok(())
            };
            if let Err(e) = write() {
                eprintln!("cannot write reports to {}: {e}", out.display());
                return ExitCode::from(2);
            }
            println!("{}", output.report);
            if output.report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
        Cmd::Table { table: Table::Passi { kind, max_n, max_m, max_d, field } } => {
            let cfg = Config { max_n, max_m, max_d, magnus_d: max_d.max(3), ..Config::default() };
            let code = match field.as_deref().map(parse_field).transpose() {
                Ok(c) => c.unwrap_or(0),
                Err(e) => return config_error(e),
            };
            if let Err(e) = (Config { field: code, ..cfg }).validate() {
                return config_error(e);
            }
            let kind = match kind {
                Kind::Gr => CatKind::Gr,
                Kind::Fr => CatKind::Fr,
            };
            let field = eigenmonad::Field::from_code(code).expect("validated");
            print!("{}", rank_csv(&rank_rows(kind, field, max_n, max_m, max_d)));
            ExitCode::SUCCESS
        }
        Cmd::Hall { letters, multidegree } => match hall_listing(letters, &multidegree) {
            Ok(s) => {
                print!("{s}");
                ExitCode::SUCCESS
            }
            Err(e) => config_error(e),
        },
    }
}
