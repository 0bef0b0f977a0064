//! Exhaustive classification of `S_n` and the lemma bookkeeping around it.

use std::collections::BTreeMap;

use rayon::prelude::*;
use schubert_core::factor::{block_shape, factorize_polynomial, rectangle_shape};
use schubert_core::perm::pattern;
use schubert_core::pipedream::top_pipe_dream_among;
use schubert_core::schubert::for_each_length_level;
use schubert_core::schubert::sum_of_weights;
use schubert_core::{all_pipe_dreams, bottom_pipe_dream, enumerate_sn, Permutation, Polynomial};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Default upper bound on `n` for sweeps.
pub const DEFAULT_MAX_N: usize = 8;
/// Sizes at or above this need `--oracle-only`.
pub const ORACLE_ONLY_FROM: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepMode {
    /// Enumerate pipe dreams for every permutation.
    PipeDreams,
    /// Divided differences only; all-dream measurements are skipped.
    OracleOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub word: String,
    pub code: Vec<usize>,
    pub avoids: bool,
    pub factors: bool,
    pub factorization: Option<String>,
    pub pipe_dreams: u64,
    pub degree: usize,
}

/// Per-permutation facts feeding the lemma checks.
#[derive(Debug, Clone)]
struct Observation {
    record: ClassificationRecord,
    avoids_1423_1432: bool,
    increments_bounded: bool,
    avoids_3142_4132: bool,
    separation_bottom: bool,
    separation_all: Option<bool>,
    column_candidate_valid: bool,
    rectangle: bool,
    boundary_block: bool,
    top_rows_match_code: Option<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Observed,
    NotMeasured,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaStatus {
    pub claim: String,
    pub status: Status,
    pub checked: u64,
    pub violations: u64,
    pub examples: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quadrants {
    pub avoids_factors: u64,
    pub avoids_not_factors: u64,
    pub contains_factors: u64,
    pub contains_not_factors: u64,
}

impl Quadrants {
    pub fn add(&mut self, avoids: bool, factors: bool) {
        match (avoids, factors) {
            (true, true) => self.avoids_factors += 1,
            (true, false) => self.avoids_not_factors += 1,
            (false, true) => self.contains_factors += 1,
            (false, false) => self.contains_not_factors += 1,
        }
    }

    pub fn total(&self) -> u64 {
        self.avoids_factors + self.avoids_not_factors + self.contains_factors + self.contains_not_factors
    }

    pub fn from_records<'a>(records: impl IntoIterator<Item = &'a ClassificationRecord>) -> Self {
        let mut q = Self::default();
        for r in records {
            q.add(r.avoids, r.factors);
        }
        q
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeSummary {
    pub n: usize,
    pub total: u64,
    pub quadrants: Quadrants,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexamples {
    /// Avoid all four patterns but do not factor.
    pub avoider_not_factorizable: Vec<ClassificationRecord>,
    /// Factor but contain one of the patterns.
    pub factorizable_not_avoider: Vec<ClassificationRecord>,
}

impl Counterexamples {
    pub fn is_empty(&self) -> bool {
        self.avoider_not_factorizable.is_empty() && self.factorizable_not_avoider.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub n_min: usize,
    pub n_max: usize,
    pub mode: SweepMode,
    pub tool_version: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: u64,
    pub quadrants: Quadrants,
    pub per_n: Vec<SizeSummary>,
    pub counterexamples: Counterexamples,
    pub lemma_statuses: BTreeMap<String, LemmaStatus>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub meta: Meta,
    pub summary: Summary,
    /// Sorted by `(n, word)`.
    pub records: Vec<ClassificationRecord>,
}

impl SweepReport {
    /// Zero counterexamples in either direction and no asserted lemma failed.
    pub fn is_clean(&self) -> bool {
        self.summary.counterexamples.is_empty()
            && self.summary.lemma_statuses.values().all(|s| s.status != Status::Fail)
    }
}

pub fn check_range(n_min: usize, n_max: usize, max_n: usize, mode: SweepMode) -> Result<(), CliError> {
    if max_n > schubert_core::perm::MAX_ENUMERATION_N {
        return Err(CliError::Range(format!(
            "--max-n {max_n} exceeds the supported maximum {}",
            schubert_core::perm::MAX_ENUMERATION_N
        )));
    }
    if n_min < 1 || n_min > n_max || n_max > max_n {
        return Err(CliError::Range(format!(
            "need 1 <= n_min <= n_max <= {max_n}, got {n_min}..{n_max}"
        )));
    }
    if n_max >= ORACLE_ONLY_FROM && mode != SweepMode::OracleOnly {
        return Err(CliError::Range(format!(
            "n = {n_max} requires --oracle-only (pipe-dream enumeration is limited to n <= {})",
            ORACLE_ONLY_FROM - 1
        )));
    }
    Ok(())
}

fn code_vec(w: &Permutation) -> Vec<usize> {
    w.lehmer_code().entries().to_vec()
}

fn observe(
    w: &Permutation,
    schubert: &Polynomial,
    dreams: Option<&[schubert_core::PipeDream]>,
) -> Result<Observation, CliError> {
    let code = w.lehmer_code();
    let search = factorize_polynomial(w, schubert)?;
    let bottom = bottom_pipe_dream(&code);
    let (separation_all, top_rows_match_code) = match dreams {
        Some(dreams) => {
            let top = top_pipe_dream_among(w, dreams)?;
            let rows_match = top.weight() == schubert_core::Monomial::from_code(&code);
            (Some(dreams.iter().all(|d| d.diagonal_separation())), Some(rows_match))
        }
        None => (None, None),
    };
    let boundary_block = block_shape(&code).is_some() && rectangle_shape(&code).is_none() && code.sum() > 0;
    let record = ClassificationRecord {
        word: w.to_string(),
        code: code_vec(w),
        avoids: w.avoids_conjecture_patterns(),
        factors: search.witness.is_some(),
        factorization: search.witness.as_ref().map(|f| f.to_string()),
        pipe_dreams: schubert.coefficient_sum()? as u64,
        degree: w.length(),
    };
    Ok(Observation {
        record,
        avoids_1423_1432: w.avoids(&pattern(&[1, 4, 2, 3])) && w.avoids(&pattern(&[1, 4, 3, 2])),
        increments_bounded: code.increments_bounded(),
        avoids_3142_4132: w.avoids(&pattern(&[3, 1, 4, 2])) && w.avoids(&pattern(&[4, 1, 3, 2])),
        separation_bottom: bottom.diagonal_separation(),
        separation_all,
        column_candidate_valid: search.column_candidate_valid,
        rectangle: rectangle_shape(&code).is_some(),
        boundary_block,
        top_rows_match_code,
    })
}

/// Classifies one permutation via pipe dreams.
pub fn classify(w: &Permutation) -> Result<ClassificationRecord, CliError> {
    let dreams = all_pipe_dreams(w);
    let schubert = sum_of_weights(&dreams)?;
    Ok(observe(w, &schubert, Some(&dreams))?.record)
}

fn observe_size(n: usize, mode: SweepMode) -> Result<Vec<Observation>, CliError> {
    match mode {
        SweepMode::PipeDreams => {
            let perms: Vec<Permutation> = enumerate_sn(n)?.collect();
            perms
                .par_iter()
                .map(|w| {
                    let dreams = all_pipe_dreams(w);
                    let schubert = sum_of_weights(&dreams)?;
                    observe(w, &schubert, Some(&dreams))
                })
                .collect()
        }
        SweepMode::OracleOnly => {
            // levels arrive longest first; each is observed and then dropped
            let mut keyed: Vec<(Permutation, Observation)> = Vec::new();
            let mut failure = None;
            for_each_length_level(n, |_, level| {
                if failure.is_some() {
                    return;
                }
                let batch: Result<Vec<_>, CliError> = level
                    .par_iter()
                    .map(|(w, p)| Ok((w.clone(), observe(w, p, None)?)))
                    .collect();
                match batch {
                    Ok(b) => keyed.extend(b),
                    Err(e) => failure = Some(e),
                }
            })?;
            if let Some(e) = failure {
                return Err(e);
            }
            keyed.sort_by(|a, b| a.0.cmp(&b.0));
            Ok(keyed.into_iter().map(|(_, o)| o).collect())
        }
    }
}

struct Tally {
    claim: &'static str,
    asserted: bool,
    checked: u64,
    violations: u64,
    examples: Vec<String>,
    measured: bool,
}

impl Tally {
    fn new(claim: &'static str, asserted: bool) -> Self {
        Self {
            claim,
            asserted,
            checked: 0,
            violations: 0,
            examples: Vec::new(),
            measured: true,
        }
    }

    fn record(&mut self, applies: bool, holds: bool, word: &str) {
        if !applies {
            return;
        }
        self.checked += 1;
        if !holds {
            self.violations += 1;
            if self.examples.len() < 5 {
                self.examples.push(word.to_string());
            }
        }
    }

    fn finish(self) -> LemmaStatus {
        let status = if !self.measured {
            Status::NotMeasured
        } else if !self.asserted {
            Status::Observed
        } else if self.violations == 0 {
            Status::Pass
        } else {
            Status::Fail
        };
        LemmaStatus {
            claim: self.claim.to_string(),
            status,
            checked: self.checked,
            violations: self.violations,
            examples: self.examples,
        }
    }
}

fn lemma_statuses(observations: &[Observation], mode: SweepMode) -> BTreeMap<String, LemmaStatus> {
    let mut increment = Tally::new("avoids 1423 and 1432 => Lehmer code increments <= 1", true);
    let mut increment_converse = Tally::new("Lehmer code increments <= 1 => avoids 1423 and 1432", false);
    let mut sep_bottom = Tally::new(
        "avoids 3142 and 4132 => diagonal separation on the bottom pipe dream",
        true,
    );
    let mut sep_all = Tally::new("avoids 3142 and 4132 => diagonal separation on every pipe dream", false);
    let mut column = Tally::new(
        "avoids 1432, 1423, 4132, 3142 => the column-block product equals the Schubert polynomial",
        true,
    );
    let mut necessity = Tally::new("factorizable => the column-block product is a witness", false);
    let mut rectangle = Tally::new(
        "code (0^A, N^B, 0...) with A >= 1, N >= 2, B >= 2 => not factorizable",
        true,
    );
    let mut boundary = Tally::new(
        "code (0^A, N^B, 0...) with A = 0, N = 1 or B = 1 => not factorizable",
        false,
    );
    let mut proven = Tally::new("avoids 1432, 1423, 4132, 3142 => factorizable", true);
    let mut conjectured = Tally::new(
        "factorizable => avoids 1432, 1423, 4132, 3142 (observed, not proved)",
        false,
    );
    let mut top_rows = Tally::new("top pipe dream has l_i crosses in row i", false);
    if mode == SweepMode::OracleOnly {
        sep_all.measured = false;
        top_rows.measured = false;
    }

    for o in observations {
        let r = &o.record;
        let w = r.word.as_str();
        increment.record(o.avoids_1423_1432, o.increments_bounded, w);
        increment_converse.record(o.increments_bounded, o.avoids_1423_1432, w);
        sep_bottom.record(o.avoids_3142_4132, o.separation_bottom, w);
        if let Some(all) = o.separation_all {
            sep_all.record(o.avoids_3142_4132, all, w);
        }
        column.record(r.avoids, r.factors && o.column_candidate_valid, w);
        necessity.record(r.factors, o.column_candidate_valid, w);
        rectangle.record(o.rectangle, !r.factors, w);
        boundary.record(o.boundary_block, !r.factors, w);
        proven.record(r.avoids, r.factors, w);
        conjectured.record(r.factors, r.avoids, w);
        if let Some(m) = o.top_rows_match_code {
            top_rows.record(true, m, w);
        }
    }

    [
        ("avoiders_factor", proven),
        ("column_block_product", column),
        ("column_block_product_necessity", necessity),
        ("diagonal_separation_all_dreams", sep_all),
        ("diagonal_separation_bottom", sep_bottom),
        ("factorizable_avoid", conjectured),
        ("increment_bound", increment),
        ("increment_bound_converse", increment_converse),
        ("rectangle_boundary_cases", boundary),
        ("rectangle_obstruction", rectangle),
        ("top_dream_row_counts", top_rows),
    ]
    .into_iter()
    .map(|(k, t)| (k.to_string(), t.finish()))
    .collect()
}

/// Classifies every permutation of `S_n` for `n_min <= n <= n_max`.
pub fn run_sweep(n_min: usize, n_max: usize, mode: SweepMode) -> Result<SweepReport, CliError> {
    let mut observations = Vec::new();
    let mut per_n = Vec::new();
    for n in n_min..=n_max {
        let obs = observe_size(n, mode)?;
        let quadrants = Quadrants::from_records(obs.iter().map(|o| &o.record));
        per_n.push(SizeSummary {
            n,
            total: obs.len() as u64,
            quadrants,
        });
        observations.extend(obs);
    }
    let records: Vec<ClassificationRecord> = observations.iter().map(|o| o.record.clone()).collect();
    let quadrants = Quadrants::from_records(&records);
    let counterexamples = Counterexamples {
        avoider_not_factorizable: records.iter().filter(|r| r.avoids && !r.factors).cloned().collect(),
        factorizable_not_avoider: records.iter().filter(|r| r.factors && !r.avoids).cloned().collect(),
    };
    let report = SweepReport {
        meta: Meta {
            n_min,
            n_max,
            mode,
            tool_version: TOOL_VERSION.to_string(),
        },
        summary: Summary {
            total: records.len() as u64,
            quadrants,
            per_n,
            counterexamples,
            lemma_statuses: lemma_statuses(&observations, mode),
        },
        records,
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        let r = classify(&"2143".parse().unwrap()).unwrap();
        assert!(r.avoids && r.factors);
        assert_eq!(r.factorization.as_deref(), Some("e_1(x1..x1) * e_1(x1..x3)"));
        assert_eq!(r.pipe_dreams, 3);
        assert_eq!(r.degree, 2);
        let r = classify(&"1432".parse().unwrap()).unwrap();
        assert!(!r.avoids && !r.factors && r.factorization.is_none());
        assert_eq!(r.pipe_dreams, 5);
    }

    #[test]
    fn range_checks() {
        assert!(check_range(1, 7, 8, SweepMode::PipeDreams).is_ok());
        assert!(check_range(0, 3, 8, SweepMode::PipeDreams).is_err());
        assert!(check_range(4, 3, 8, SweepMode::PipeDreams).is_err());
        assert!(check_range(1, 9, 8, SweepMode::OracleOnly).is_err());
        assert!(check_range(1, 9, 9, SweepMode::PipeDreams).is_err());
        assert!(check_range(1, 9, 9, SweepMode::OracleOnly).is_ok());
        assert!(check_range(1, 10, 10, SweepMode::OracleOnly).is_err());
    }

    #[test]
    fn small_sweep() {
        let report = run_sweep(1, 4, SweepMode::PipeDreams).unwrap();
        assert_eq!(report.summary.total, 1 + 2 + 6 + 24);
        let s4 = &report.summary.per_n[3];
        assert_eq!(s4.total, 24);
        assert_eq!(s4.quadrants.avoids_factors + s4.quadrants.contains_not_factors, 24);
        assert!(report.is_clean());
        assert_eq!(report.records[0].word, "1");
        assert!(report.records[0].factors);
    }

    #[test]
    fn oracle_only_agrees_with_pipe_dreams() {
        let a = run_sweep(1, 6, SweepMode::PipeDreams).unwrap();
        let b = run_sweep(1, 6, SweepMode::OracleOnly).unwrap();
        assert_eq!(a.records, b.records);
        assert_eq!(
            b.summary.lemma_statuses["diagonal_separation_all_dreams"].status,
            Status::NotMeasured
        );
    }
}
