//! Subcommand implementations. Each returns its stdout text and exit code
//! so they can be driven directly from tests.

use std::fmt::Write as _;
use std::path::PathBuf;

use schubert_core::pipedream::top_pipe_dream_among;
use schubert_core::schubert::sum_of_weights;
use schubert_core::{
    all_pipe_dreams, bottom_pipe_dream, factorize_polynomial, schubert_via_divided_differences, Permutation, Polynomial,
};

use crate::cache::SchubertCache;
use crate::report;
use crate::sweep::{check_range, run_sweep, SweepMode, SweepReport};
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SchubertMethod {
    #[default]
    PipeDreams,
    /// Divided differences.
    Oracle,
    /// Both, asserting equality.
    Check,
}

fn parse(word: &str) -> Result<Permutation, CliError> {
    Ok(word.parse::<Permutation>()?)
}

/// Cached polynomial, or a fresh pipe-dream computation stored in `cache`.
fn cached_schubert(w: &Permutation, cache: &mut SchubertCache) -> Result<Polynomial, CliError> {
    let key = w.to_string();
    if let Some(p) = cache.get(&key) {
        return Ok(p.clone());
    }
    let p = sum_of_weights(&all_pipe_dreams(w))?;
    cache.insert(key, p.clone());
    if let Err(e) = cache.commit() {
        eprintln!("warning: could not write cache: {e}");
    }
    Ok(p)
}

pub fn cmd_schubert(word: &str, method: SchubertMethod, cache: &mut SchubertCache) -> Result<Output, CliError> {
    let w = parse(word)?;
    let mut out = String::new();
    let poly = match method {
        SchubertMethod::PipeDreams => cached_schubert(&w, cache)?,
        SchubertMethod::Oracle => schubert_via_divided_differences(&w)?,
        SchubertMethod::Check => {
            let pipes = sum_of_weights(&all_pipe_dreams(&w))?;
            let oracle = schubert_via_divided_differences(&w)?;
            if pipes != oracle {
                let _ = writeln!(
                    out,
                    "MISMATCH\n  pipe dreams:          {pipes}\n  divided differences:  {oracle}"
                );
                return Ok(Output { stdout: out, code: 1 });
            }
            pipes
        }
    };
    let _ = writeln!(out, "{poly}");
    let _ = writeln!(out, "degree: {}", w.length());
    let _ = writeln!(out, "terms: {}", poly.num_terms());
    let _ = writeln!(out, "pipe dreams: {}", poly.coefficient_sum()?);
    if method == SchubertMethod::Check {
        let _ = writeln!(out, "check: pipe dreams and divided differences agree");
    }
    Ok(Output::ok(out))
}

pub fn cmd_factor(word: &str, cache: &mut SchubertCache) -> Result<Output, CliError> {
    let w = parse(word)?;
    let poly = cached_schubert(&w, cache)?;
    let search = factorize_polynomial(&w, &poly)?;
    let mut out = String::new();
    match &search.witness {
        Some(f) => {
            let _ = writeln!(out, "{f}");
        }
        None => {
            let _ = writeln!(out, "NOT FACTORIZABLE");
        }
    }
    let _ = writeln!(out, "decompositions tried: {}", search.tried);
    Ok(Output::ok(out))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Bottom,
    Top,
    All,
}

pub fn cmd_render(word: &str, which: Which) -> Result<Output, CliError> {
    let w = parse(word)?;
    if w.n() > schubert_core::pipedream::MAX_DREAM_N {
        return Err(CliError::Range(format!(
            "pipe dreams are limited to n <= {}",
            schubert_core::pipedream::MAX_DREAM_N
        )));
    }
    let dreams = match which {
        Which::Bottom => vec![bottom_pipe_dream(&w.lehmer_code())],
        Which::Top => {
            let all = all_pipe_dreams(&w);
            vec![top_pipe_dream_among(&w, &all)?]
        }
        Which::All => all_pipe_dreams(&w),
    };
    let mut out = String::new();
    let total = dreams.len();
    for (k, d) in dreams.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "# {}/{} weight {}", k + 1, total, d.weight());
        out.push_str(&d.render());
    }
    Ok(Output::ok(out))
}

#[derive(Debug, Clone, Default)]
pub struct SweepOptions {
    pub json: Option<PathBuf>,
    pub csv: Option<PathBuf>,
    pub oracle_only: bool,
    pub max_n: Option<usize>,
}

impl SweepOptions {
    fn mode(&self) -> SweepMode {
        if self.oracle_only {
            SweepMode::OracleOnly
        } else {
            SweepMode::PipeDreams
        }
    }
}

fn sweep(n_min: usize, n_max: usize, opts: &SweepOptions) -> Result<SweepReport, CliError> {
    let mode = opts.mode();
    check_range(n_min, n_max, opts.max_n.unwrap_or(crate::sweep::DEFAULT_MAX_N), mode)?;
    let report = run_sweep(n_min, n_max, mode)?;
    if let Some(path) = &opts.json {
        report::write_json(&report, path)?;
    }
    if let Some(path) = &opts.csv {
        report::write_csv_file(&report, path)?;
    }
    Ok(report)
}

/// Exit 0 when neither direction has a counterexample and every asserted
/// lemma check passes; 1 otherwise.
pub fn cmd_verify(n_min: usize, n_max: usize, opts: &SweepOptions) -> Result<(Output, SweepReport), CliError> {
    let report = sweep(n_min, n_max, opts)?;
    let code = if report.is_clean() { 0 } else { 1 };
    Ok((
        Output {
            stdout: report::human_summary(&report),
            code,
        },
        report,
    ))
}

/// Lemma checks only, over `S_1 ..= S_n_max`.
pub fn cmd_lemmas(n_max: usize, opts: &SweepOptions) -> Result<Output, CliError> {
    let report = sweep(1, n_max, opts)?;
    let failed = report
        .summary
        .lemma_statuses
        .values()
        .any(|s| s.status == crate::sweep::Status::Fail);
    Ok(Output {
        stdout: report::lemma_table(&report),
        code: if failed { 1 } else { 0 },
    })
}
