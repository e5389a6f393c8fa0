//! Implementations behind the four subcommands. Each returns rendered
//! text plus whatever the exit-code decision needs; `main` owns process
//! concerns.

use std::fmt::Write as _;
use std::io::Write;

use thiserror::Error;
use wilf::semigroup::NumericalSemigroup;
use wilf::tree::{enumerate, EnumerationConfig, Filters};

use crate::checks::{self, VerifySummary, CHECKS};
use crate::record::{self, SemigroupRecord, CSV_HEADER};

/// Failure modes the process must map to distinct exit codes.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(#[from] wilf::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnalyzeFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerateFormat {
    Csv,
    Jsonl,
}

fn flag(value: bool) -> &'static str {
    if value {
        "yes"
    } else {
        "no"
    }
}

fn witness(value: Option<i64>) -> String {
    match value {
        Some(alpha) => format!("yes (alpha = {alpha})"),
        None => "no".to_string(),
    }
}

fn joined(values: &[i64]) -> String {
    values.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

/// Renders one semigroup either as a readable report or as a single
/// JSON object.
pub fn cmd_analyze(gens: &[i64], format: AnalyzeFormat) -> Result<String, CliError> {
    let s = NumericalSemigroup::generated_by(gens)?;
    let r = record::build(&s);
    if format == AnalyzeFormat::Json {
        return Ok(r.to_json());
    }
    let ap = s.apery_set(r.m).expect("multiplicity is always a member");
    let mut out = String::new();
    let _ = writeln!(out, "S = <{}>", r.gens.iter().map(i64::to_string).collect::<Vec<_>>().join(", "));
    let _ = writeln!(
        out,
        "m = {}  nu = {}  f = {}  c = {}  genus = {}  n = {}  t = {}",
        r.m, r.nu, r.f, r.c, r.genus, r.n, r.t
    );
    let _ = writeln!(out, "Ap(S, {}) = {}", r.m, joined(&ap.elements));
    let _ = writeln!(out, "q = {}  rho = {}", r.q, r.rho);
    let _ = writeln!(out, "eta = {}", joined(&r.eta));
    let _ = writeln!(out, "wilf surplus: nu*n - c = {}*{} - {} = {}", r.nu, r.n, r.c, r.wilf_surplus);
    let _ = writeln!(out, "wilf sum (interval form) = {}", r.wilf_sum);
    let _ = writeln!(out, "conditions:");
    let _ = writeln!(out, "  thm_a      {}", witness(r.thm_a_alpha));
    let _ = writeln!(out, "  thm_b      {}", witness(r.thm_b_alpha));
    let _ = writeln!(out, "  two_nu     {}", flag(r.two_nu));
    let _ = writeln!(out, "  two_nu_q   {}", flag(r.two_nu_q));
    let _ = writeln!(out, "  small_gap  {}", flag(r.small_gap));
    let _ = writeln!(out, "  gap6_q     {}", flag(r.gap6_q));
    let _ = writeln!(out, "  small_m    {}", flag(r.small_m));
    let _ = writeln!(out, "  small_nu   {}", flag(r.small_nu));
    let _ = writeln!(out, "  small_q    {}", flag(r.small_q));
    let _ = writeln!(out, "covered = {}", r.covered);
    Ok(out)
}

/// Runs the check battery; the caller decides the exit code from
/// [`VerifySummary::all_passed`].
pub fn cmd_verify(max_genus: u32, jobs: usize) -> Result<(VerifySummary, String), CliError> {
    let split_depth = max_genus.min(6);
    let summary = checks::verify(max_genus, jobs, split_depth)?;
    let text = render_verify(&summary);
    Ok((summary, text))
}

fn render_verify(summary: &VerifySummary) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "verified {} semigroups of genus <= {}",
        summary.semigroups, summary.max_genus
    );
    for (check, passed) in CHECKS.iter().zip(&summary.pass_counts) {
        let _ = writeln!(out, "  {:32} {}/{}", check.name, passed, summary.semigroups);
    }
    let _ = writeln!(
        out,
        "  {:32} {} duplicates in {} semigroups (genus <= {})",
        "duplicate_scan",
        summary.duplicates,
        summary.duplicate_scan_count,
        summary.duplicate_scan_genus
    );
    match &summary.first_violation {
        None if summary.duplicates == 0 => {
            let _ = writeln!(out, "result: ok");
        }
        None => {
            let _ = writeln!(out, "result: FAIL (duplicate semigroups in traversal)");
        }
        Some(v) => {
            let _ = writeln!(
                out,
                "result: FAIL: <{}> fails {}",
                v.gens.iter().map(i64::to_string).collect::<Vec<_>>().join(", "),
                v.check
            );
        }
    }
    out
}

/// Streams one record per enumerated semigroup to `out`; returns the
/// row count. Output is byte-deterministic for equal arguments.
pub fn cmd_enumerate(
    out: &mut dyn Write,
    max_genus: u32,
    format: EnumerateFormat,
    filters: Filters,
) -> Result<u64, CliError> {
    let config = EnumerationConfig::new(max_genus)?.with_filters(filters);
    if format == EnumerateFormat::Csv {
        writeln!(out, "{CSV_HEADER}")?;
    }
    let mut rows = 0u64;
    let mut write_error: Option<std::io::Error> = None;
    enumerate(&config, |s| {
        if write_error.is_some() {
            return;
        }
        let r = record::build(s);
        let line = match format {
            EnumerateFormat::Csv => r.to_csv_row(),
            EnumerateFormat::Jsonl => r.to_json(),
        };
        match writeln!(out, "{line}") {
            Ok(()) => rows += 1,
            Err(e) => write_error = Some(e),
        }
    })?;
    if let Some(e) = write_error {
        return Err(CliError::Io(e));
    }
    out.flush()?;
    Ok(rows)
}

/// Per-condition tallies over an enumeration.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoverageTable {
    pub semigroups: u64,
    pub thm_a: u64,
    pub thm_b: u64,
    pub two_nu: u64,
    pub two_nu_q: u64,
    pub small_gap: u64,
    pub gap6_q: u64,
    pub small_m: u64,
    pub small_nu: u64,
    pub small_q: u64,
    pub covered: u64,
    pub uncovered: u64,
    /// Uncovered semigroups with negative surplus; must stay zero.
    pub uncovered_deficient: u64,
    pub first_deficient: Option<Vec<i64>>,
}

fn tally_coverage(table: &mut CoverageTable, r: &SemigroupRecord) {
    table.semigroups += 1;
    table.thm_a += u64::from(r.thm_a_alpha.is_some());
    table.thm_b += u64::from(r.thm_b_alpha.is_some());
    table.two_nu += u64::from(r.two_nu);
    table.two_nu_q += u64::from(r.two_nu_q);
    table.small_gap += u64::from(r.small_gap);
    table.gap6_q += u64::from(r.gap6_q);
    table.small_m += u64::from(r.small_m);
    table.small_nu += u64::from(r.small_nu);
    table.small_q += u64::from(r.small_q);
    if r.covered {
        table.covered += 1;
    } else {
        table.uncovered += 1;
        if r.wilf_surplus < 0 {
            table.uncovered_deficient += 1;
            if table.first_deficient.is_none() {
                table.first_deficient = Some(r.gens.clone());
            }
        }
    }
}

/// Counts, per sufficient condition, how many semigroups up to the
/// genus bound satisfy it (overlaps expected), and confirms every
/// uncovered semigroup still has nonnegative surplus.
pub fn cmd_coverage(max_genus: u32) -> Result<(CoverageTable, String), CliError> {
    let config = EnumerationConfig::new(max_genus)?;
    let mut table = CoverageTable::default();
    enumerate(&config, |s| tally_coverage(&mut table, &record::build(s)))?;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "coverage over {} semigroups of genus <= {}",
        table.semigroups, max_genus
    );
    for (name, count) in [
        ("thm_a", table.thm_a),
        ("thm_b", table.thm_b),
        ("two_nu", table.two_nu),
        ("two_nu_q", table.two_nu_q),
        ("small_gap", table.small_gap),
        ("gap6_q", table.gap6_q),
        ("small_m", table.small_m),
        ("small_nu", table.small_nu),
        ("small_q", table.small_q),
        ("covered", table.covered),
        ("uncovered", table.uncovered),
    ] {
        let _ = writeln!(out, "  {:10} {}", name, count);
    }
    match &table.first_deficient {
        None => {
            let _ = writeln!(
                out,
                "all {} uncovered semigroups have nonnegative surplus",
                table.uncovered
            );
        }
        Some(gens) => {
            let _ = writeln!(
                out,
                "result: FAIL: uncovered <{}> has negative surplus",
                gens.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
            );
        }
    }
    Ok((table, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use wilf::tree::CoverageFilter;

    #[test]
    fn analyze_text_shows_invariants_and_checklist() {
        let text = cmd_analyze(&[19, 21, 23, 25, 27, 28], AnalyzeFormat::Text).unwrap();
        assert!(text.contains("S = <19, 21, 23, 25, 27, 28>"));
        assert!(text.contains("m = 19  nu = 6  f = 64  c = 65  genus = 39  n = 26  t = 5"));
        assert!(text.contains("q = 4  rho = 11"));
        assert!(text.contains("thm_a      yes (alpha = 8)"));
        assert!(text.contains("thm_b      no"));
        assert!(text.contains("covered = true"));
        assert!(text.contains("= 91"));
    }

    #[test]
    fn analyze_json_is_one_parseable_object() {
        let line = cmd_analyze(&[2, 3], AnalyzeFormat::Json).unwrap();
        let r: SemigroupRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(r.gens, vec![2, 3]);
        assert!(r.covered);
    }

    #[test]
    fn analyze_rejects_invalid_generators() {
        assert!(matches!(
            cmd_analyze(&[4, 6], AnalyzeFormat::Text),
            Err(CliError::Input(wilf::Error::NonCoprime(2)))
        ));
    }

    #[test]
    fn verify_reports_every_check_green() {
        let (summary, text) = cmd_verify(6, 1).unwrap();
        assert!(summary.all_passed());
        assert_eq!(summary.semigroups, 50);
        assert!(text.contains("result: ok"));
        assert!(text.contains("wilf_identity"));
    }

    #[test]
    fn enumerate_csv_small() {
        let mut buf = Vec::new();
        let rows = cmd_enumerate(&mut buf, 2, EnumerateFormat::Csv, Filters::default()).unwrap();
        assert_eq!(rows, 4);
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], CSV_HEADER);
        assert!(lines[1].starts_with("1;1;1;-1;"));
        assert!(lines[2].starts_with("2,3;2;"));
        assert!(lines[3].starts_with("3,4,5;3;"));
        assert!(lines[4].starts_with("2,5;2;"));
    }

    #[test]
    fn enumerate_filters_prune_rows() {
        let mut buf = Vec::new();
        let filters = Filters { multiplicity: Some(2), ..Filters::default() };
        let rows = cmd_enumerate(&mut buf, 3, EnumerateFormat::Jsonl, filters).unwrap();
        assert_eq!(rows, 3);
        for line in String::from_utf8(buf).unwrap().lines() {
            let r: SemigroupRecord = serde_json::from_str(line).unwrap();
            assert_eq!(r.m, 2);
        }
    }

    #[test]
    fn enumerate_coverage_filters_split_the_population() {
        let mut covered = Vec::new();
        let mut uncovered = Vec::new();
        let on = Filters { coverage: Some(CoverageFilter::CoveredOnly), ..Filters::default() };
        let off = Filters { coverage: Some(CoverageFilter::UncoveredOnly), ..Filters::default() };
        let a = cmd_enumerate(&mut covered, 8, EnumerateFormat::Jsonl, on).unwrap();
        let b = cmd_enumerate(&mut uncovered, 8, EnumerateFormat::Jsonl, off).unwrap();
        assert_eq!(a + b, 156);
        assert_eq!(b, 0);
    }

    #[test]
    fn coverage_small_bounds() {
        let (table, text) = cmd_coverage(3).unwrap();
        assert_eq!(table.semigroups, 8);
        assert_eq!(table.two_nu, 8);
        assert_eq!(table.covered, 8);
        assert_eq!(table.uncovered, 0);
        assert_eq!(table.uncovered_deficient, 0);
        assert!(text.contains("two_nu     8"));
    }

    #[test]
    fn coverage_at_genus_zero_is_covered_by_two_nu() {
        let (table, _) = cmd_coverage(0).unwrap();
        assert_eq!(table.semigroups, 1);
        assert_eq!(table.two_nu, 1);
        assert_eq!(table.covered, 1);
    }
}
