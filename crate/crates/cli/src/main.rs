use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use schubert_cli::cache::{default_cache_dir, SchubertCache};
use schubert_cli::commands::{self, SchubertMethod, SweepOptions, Which};
use schubert_cli::CliError;

#[derive(Parser)]
#[command(
    name = "schubert",
    version,
    about = "Schubert polynomials and elementary symmetric factorization"
)]
struct Cli {
    /// Ignore the on-disk polynomial cache.
    #[arg(long, global = true)]
    no_cache: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Default)]
struct SweepArgs {
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write the per-permutation CSV here.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Use divided differences only (required for n = 9).
    #[arg(long)]
    oracle_only: bool,
    /// Largest n accepted (default 8).
    #[arg(long)]
    max_n: Option<usize>,
}

impl From<SweepArgs> for SweepOptions {
    fn from(a: SweepArgs) -> Self {
        SweepOptions {
            json: a.json,
            csv: a.csv,
            oracle_only: a.oracle_only,
            max_n: a.max_n,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum WhichArg {
    Bottom,
    Top,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Schubert polynomial of a permutation (e.g. 1432).
    Schubert {
        word: String,
        /// Compute by divided differences instead of pipe dreams.
        #[arg(long, conflicts_with = "check")]
        oracle: bool,
        /// Compute both ways and fail unless they agree.
        #[arg(long)]
        check: bool,
    },
    /// Factor the Schubert polynomial into elementary symmetric polynomials.
    Factor { word: String },
    /// Classify every permutation of S_n for n_min <= n <= n_max.
    Verify {
        n_min: usize,
        n_max: usize,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Run the lemma checks over S_1 ..= S_n.
    Lemmas {
        #[arg(default_value_t = 7)]
        n: usize,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Draw pipe dreams as ASCII grids.
    Render {
        word: String,
        #[arg(long, value_enum, default_value = "bottom")]
        which: WhichArg,
    },
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let mut cache = match (cli.no_cache, default_cache_dir()) {
        (false, Some(dir)) => SchubertCache::open(&dir),
        _ => SchubertCache::disabled(),
    };
    let out = match cli.command {
        Command::Schubert { word, oracle, check } => {
            let method = if check {
                SchubertMethod::Check
            } else if oracle {
                SchubertMethod::Oracle
            } else {
                SchubertMethod::PipeDreams
            };
            commands::cmd_schubert(&word, method, &mut cache)?
        }
        Command::Factor { word } => commands::cmd_factor(&word, &mut cache)?,
        Command::Verify { n_min, n_max, sweep } => commands::cmd_verify(n_min, n_max, &sweep.into())?.0,
        Command::Lemmas { n, sweep } => commands::cmd_lemmas(n, &sweep.into())?,
        Command::Render { word, which } => {
            let which = match which {
                WhichArg::Bottom => Which::Bottom,
                WhichArg::Top => Which::Top,
                WhichArg::All => Which::All,
            };
            commands::cmd_render(&word, which)?
        }
    };
    print!("{}", out.stdout);
    Ok(out.code)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
