//! JSON and CSV renderings of a [`SweepReport`], plus the human summary.

use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use crate::sweep::{Status, SweepReport};
use crate::CliError;

pub const CSV_HEADER: [&str; 7] = [
    "word",
    "code",
    "avoids",
    "factors",
    "factorization",
    "pipe_dreams",
    "degree",
];

pub fn to_json(report: &SweepReport) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(report)?;
    s.push('\n');
    Ok(s)
}

pub fn write_json(report: &SweepReport, path: &Path) -> Result<(), CliError> {
    std::fs::write(path, to_json(report)?)?;
    Ok(())
}

pub fn write_csv<W: Write>(report: &SweepReport, out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in &report.records {
        let code = r.code.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        w.write_record([
            r.word.as_str(),
            code.as_str(),
            if r.avoids { "true" } else { "false" },
            if r.factors { "true" } else { "false" },
            r.factorization.as_deref().unwrap_or(""),
            &r.pipe_dreams.to_string(),
            &r.degree.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_csv_file(report: &SweepReport, path: &Path) -> Result<(), CliError> {
    write_csv(report, std::fs::File::create(path)?)
}

fn status_label(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Observed => "observed",
        Status::NotMeasured => "not measured",
    }
}

/// Table of lemma checks, one per line.
pub fn lemma_table(report: &SweepReport) -> String {
    let mut out = String::new();
    for (name, s) in &report.summary.lemma_statuses {
        let _ = write!(
            out,
            "{name:<32} {:<12} checked {:>7}  violations {:>6}",
            status_label(s.status),
            s.checked,
            s.violations
        );
        if !s.examples.is_empty() {
            let _ = write!(out, "  e.g. {}", s.examples.join(" "));
        }
        let _ = writeln!(out, "\n    {}", s.claim);
    }
    out
}

pub fn human_summary(report: &SweepReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "classified {} permutations, n = {}..={} ({:?})",
        report.summary.total, report.meta.n_min, report.meta.n_max, report.meta.mode
    );
    for s in &report.summary.per_n {
        let q = s.quadrants;
        let _ = writeln!(
            out,
            "  n={}: {} total | avoids&factors {} | avoids&not {} | contains&factors {} | contains&not {}",
            s.n, s.total, q.avoids_factors, q.avoids_not_factors, q.contains_factors, q.contains_not_factors
        );
    }
    let ce = &report.summary.counterexamples;
    let _ = writeln!(
        out,
        "avoiders => factorizable (proven direction): {} counterexamples",
        ce.avoider_not_factorizable.len()
    );
    let _ = writeln!(
        out,
        "factorizable => avoiders: observed, not proved: {} counterexamples",
        ce.factorizable_not_avoider.len()
    );
    for r in ce.avoider_not_factorizable.iter().chain(&ce.factorizable_not_avoider) {
        let _ = writeln!(
            out,
            "  COUNTEREXAMPLE {} code {:?} avoids={} factors={} {}",
            r.word,
            r.code,
            r.avoids,
            r.factors,
            r.factorization.as_deref().unwrap_or("")
        );
    }
    out.push_str(&lemma_table(report));
    out
}
