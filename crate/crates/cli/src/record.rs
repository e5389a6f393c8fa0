//! Flat per-semigroup record shared by the CSV and JSONL emitters.

use serde::{Deserialize, Serialize};
use wilf::conditions::evaluate_conditions;
use wilf::intervals::IntervalProfile;
use wilf::semigroup::NumericalSemigroup;

/// Column list for CSV output, in emission order. JSONL objects use the
/// same keys.
pub const CSV_HEADER: &str = "gens;m;nu;f;c;genus;n;t;q;rho;wilf_surplus;wilf_sum;eta;\
thm_a_alpha;thm_b_alpha;two_nu;two_nu_q;small_gap;gap6_q;small_m;small_nu;small_q;covered";

/// Everything the batch commands report about one semigroup. The schema
/// is deliberately flat so one field list serves both output formats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupRecord {
    /// Minimal generators, ascending.
    pub gens: Vec<i64>,
    pub m: i64,
    pub nu: i64,
    pub f: i64,
    pub c: i64,
    pub genus: i64,
    pub n: i64,
    pub t: i64,
    pub q: i64,
    pub rho: i64,
    pub wilf_surplus: i64,
    pub wilf_sum: i64,
    /// `eta[j-1]` counts the sporadic intervals holding exactly `j`
    /// elements; always `m - 1` entries.
    pub eta: Vec<i64>,
    pub thm_a_alpha: Option<i64>,
    pub thm_b_alpha: Option<i64>,
    pub two_nu: bool,
    pub two_nu_q: bool,
    pub small_gap: bool,
    pub gap6_q: bool,
    pub small_m: bool,
    pub small_nu: bool,
    pub small_q: bool,
    pub covered: bool,
}

/// Assembles the record for one semigroup.
///
/// Panics if the two Wilf accountings or the two eta computations
/// disagree: a record carrying inconsistent invariants must never be
/// emitted, so this failure is deliberately fatal rather than silent.
pub fn build(s: &NumericalSemigroup) -> SemigroupRecord {
    let profile = IntervalProfile::compute(s);
    let report = evaluate_conditions(s);
    let ap = s
        .apery_set(s.multiplicity())
        .expect("multiplicity is always a member");
    assert_eq!(
        profile.wilf_surplus,
        profile.wilf_sum,
        "wilf accountings disagree for {:?}",
        s.min_generators()
    );
    assert_eq!(
        profile.eta_direct,
        profile.eta_apery,
        "eta computations disagree for {:?}",
        s.min_generators()
    );
    SemigroupRecord {
        gens: s.min_generators().to_vec(),
        m: s.multiplicity(),
        nu: s.embedding_dim(),
        f: s.frobenius(),
        c: s.conductor(),
        genus: s.genus(),
        n: s.sporadic_count(),
        t: ap.max_ap.len() as i64,
        q: profile.q,
        rho: profile.rho,
        wilf_surplus: profile.wilf_surplus,
        wilf_sum: profile.wilf_sum,
        eta: profile.eta_direct,
        thm_a_alpha: report.thm_a_alpha,
        thm_b_alpha: report.thm_b_alpha,
        two_nu: report.two_nu,
        two_nu_q: report.two_nu_q,
        small_gap: report.small_gap,
        gap6_q: report.gap6_q,
        small_m: report.small_m,
        small_nu: report.small_nu,
        small_q: report.small_q,
        covered: report.covered(),
    }
}

fn join(values: &[i64]) -> String {
    values.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn opt(value: Option<i64>) -> String {
    value.map(|v| v.to_string()).unwrap_or_default()
}

impl SemigroupRecord {
    /// One CSV data line matching [`CSV_HEADER`]; integer lists are
    /// comma-joined inside their field, absent witnesses are empty
    /// fields, and no quoting is ever needed.
    pub fn to_csv_row(&self) -> String {
        format!(
            "{};{};{};{};{};{};{};{};{};{};{};{};{};{};{};{};{};{};{};{};{};{};{}",
            join(&self.gens),
            self.m,
            self.nu,
            self.f,
            self.c,
            self.genus,
            self.n,
            self.t,
            self.q,
            self.rho,
            self.wilf_surplus,
            self.wilf_sum,
            join(&self.eta),
            opt(self.thm_a_alpha),
            opt(self.thm_b_alpha),
            self.two_nu,
            self.two_nu_q,
            self.small_gap,
            self.gap6_q,
            self.small_m,
            self.small_nu,
            self.small_q,
            self.covered,
        )
    }

    /// One JSONL line: a single flat object with the CSV column names
    /// as keys, in the same order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record_for(gens: &[i64]) -> SemigroupRecord {
        build(&NumericalSemigroup::generated_by(gens).unwrap())
    }

    #[test]
    fn header_and_rows_have_matching_field_counts() {
        let columns = CSV_HEADER.split(';').count();
        assert_eq!(columns, 23);
        for gens in [&[1i64][..], &[2, 3], &[19, 21, 23, 25, 27, 28]] {
            assert_eq!(record_for(gens).to_csv_row().split(';').count(), columns);
        }
    }

    #[test]
    fn natural_numbers_record() {
        let r = record_for(&[1]);
        assert_eq!(
            r.to_csv_row(),
            "1;1;1;-1;0;0;0;1;0;0;0;0;;;;true;false;true;false;true;true;true;true"
        );
    }

    #[test]
    fn worked_example_record_fields() {
        let r = record_for(&[19, 21, 23, 25, 27, 28]);
        assert_eq!(r.m, 19);
        assert_eq!(r.nu, 6);
        assert_eq!(r.f, 64);
        assert_eq!(r.c, 65);
        assert_eq!(r.genus, 39);
        assert_eq!(r.n, 26);
        assert_eq!(r.t, 5);
        assert_eq!(r.q, 4);
        assert_eq!(r.rho, 11);
        assert_eq!(r.wilf_surplus, 91);
        assert_eq!(r.wilf_sum, 91);
        assert_eq!(r.eta.len(), 18);
        assert_eq!(r.thm_a_alpha, Some(8));
        assert_eq!(r.thm_b_alpha, None);
        assert!(r.covered);
    }

    #[test]
    fn json_round_trips_and_uses_null_for_missing_witnesses() {
        let r = record_for(&[19, 21, 23, 25, 27, 28]);
        let line = r.to_json();
        assert!(line.contains("\"thm_b_alpha\":null"));
        assert!(line.contains("\"thm_a_alpha\":8"));
        let back: SemigroupRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn csv_row_for_two_three() {
        assert_eq!(
            record_for(&[2, 3]).to_csv_row(),
            "2,3;2;2;1;2;1;1;1;1;0;0;0;1;;;true;true;true;false;true;true;true;true"
        );
    }
}
