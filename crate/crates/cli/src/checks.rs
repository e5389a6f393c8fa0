//! Named per-semigroup checks and the sweep engine behind `verify`.
//!
//! Every check is a pure predicate so the sweep can run monolithically
//! or over disjoint subtrees on worker threads and merge the tallies
//! without coordination.

use std::collections::HashSet;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;
use std::thread;

use wilf::conditions::{
    evaluate_conditions, lemma_gap_disjunction, lemma_gap_implies_sum, thm_a_witnesses,
};
use wilf::intervals::{
    eta_apery, eta_direct, interval_counts, members_in_interval, q_rho, wilf_sum, wilf_surplus,
};
use wilf::semigroup::NumericalSemigroup;
use wilf::tree::{enumerate, enumerate_from, partition, EnumerationConfig};
use wilf::Result;

use crate::record;

/// One named predicate over a single semigroup.
pub struct Check {
    pub name: &'static str,
    pub run: fn(&NumericalSemigroup) -> bool,
}

/// The full battery, in reporting order.
pub const CHECKS: &[Check] = &[
    Check { name: "apery_size", run: apery_size },
    Check { name: "apery_max_is_f_plus_m", run: apery_max },
    Check { name: "apery_residues_complete", run: apery_residues },
    Check { name: "apery_genus_identity", run: apery_genus },
    Check { name: "min_ap_matches_embedding_dim", run: min_ap_nu },
    Check { name: "max_ap_matches_pseudo_frobenius", run: max_ap_pf },
    Check { name: "conductor_decomposition", run: conductor_decomposition },
    Check { name: "interval_counts_in_range", run: interval_counts_in_range },
    Check { name: "intervals_full_from_q", run: intervals_full_from_q },
    Check { name: "eta_routes_agree", run: eta_routes_agree },
    Check { name: "eta_totals", run: eta_totals },
    Check { name: "wilf_identity", run: wilf_identity },
    Check { name: "wilf_nonnegative", run: wilf_nonnegative },
    Check { name: "apery_floor_steps", run: apery_floor_steps },
    Check { name: "floor_defect_bound", run: floor_defect_bound },
    Check { name: "gap_lemma_sum", run: gap_lemma_sum },
    Check { name: "gap_lemma_disjunction", run: gap_lemma_disjunction_all },
    Check { name: "thm_a_witnesses_monotone", run: thm_a_monotone },
    Check { name: "coverage_sound", run: coverage_sound },
    Check { name: "record_well_formed", run: record_well_formed },
];

fn apery(s: &NumericalSemigroup) -> Vec<i64> {
    s.apery_set(s.multiplicity())
        .expect("multiplicity is always a member")
        .elements
}

fn apery_size(s: &NumericalSemigroup) -> bool {
    apery(s).len() as i64 == s.multiplicity()
}

fn apery_max(s: &NumericalSemigroup) -> bool {
    apery(s).last() == Some(&(s.frobenius() + s.multiplicity()))
}

fn apery_residues(s: &NumericalSemigroup) -> bool {
    let m = s.multiplicity();
    let mut residues: Vec<i64> = apery(s).iter().map(|w| w % m).collect();
    residues.sort_unstable();
    residues == (0..m).collect::<Vec<_>>()
}

fn apery_genus(s: &NumericalSemigroup) -> bool {
    let m = s.multiplicity();
    apery(s).iter().map(|w| w / m).sum::<i64>() == s.genus()
}

fn min_ap_nu(s: &NumericalSemigroup) -> bool {
    let ap = s.apery_set(s.multiplicity()).expect("member");
    ap.min_ap.len() as i64 == s.embedding_dim()
}

fn max_ap_pf(s: &NumericalSemigroup) -> bool {
    let m = s.multiplicity();
    let ap = s.apery_set(m).expect("member");
    if s.is_full() {
        return ap.max_ap == [0];
    }
    let shifted: Vec<i64> = ap.max_ap.iter().map(|w| w - m).collect();
    match s.pseudo_frobenius() {
        Ok(pf) => shifted == pf && pf.contains(&s.frobenius()),
        Err(_) => false,
    }
}

fn conductor_decomposition(s: &NumericalSemigroup) -> bool {
    let (q, rho) = q_rho(s);
    q * s.multiplicity() - rho == s.conductor() && (0..s.multiplicity()).contains(&rho)
}

fn interval_counts_in_range(s: &NumericalSemigroup) -> bool {
    let m = s.multiplicity();
    let counts = interval_counts(s);
    counts.len() as i64 == q_rho(s).0
        && counts.iter().all(|&nk| 1 <= nk && nk <= m - 1)
        && counts.iter().sum::<i64>() == s.sporadic_count()
}

fn intervals_full_from_q(s: &NumericalSemigroup) -> bool {
    let (q, _) = q_rho(s);
    let m = s.multiplicity();
    members_in_interval(s, q) == m && members_in_interval(s, q + 1) == m
}

fn eta_routes_agree(s: &NumericalSemigroup) -> bool {
    eta_direct(s) == eta_apery(s)
}

fn eta_totals(s: &NumericalSemigroup) -> bool {
    let eta = eta_direct(s);
    let (q, _) = q_rho(s);
    let weighted: i64 = eta.iter().enumerate().map(|(i, &e)| (i as i64 + 1) * e).sum();
    eta.iter().sum::<i64>() == q && weighted == s.sporadic_count()
}

fn wilf_identity(s: &NumericalSemigroup) -> bool {
    wilf_sum(s) == wilf_surplus(s)
}

fn wilf_nonnegative(s: &NumericalSemigroup) -> bool {
    wilf_surplus(s) >= 0
}

fn apery_floor_steps(s: &NumericalSemigroup) -> bool {
    let m = s.multiplicity();
    let (q, rho) = q_rho(s);
    let w = apery(s);
    let floors: Vec<i64> = w.iter().map(|x| (x + rho) / m).collect();
    if floors[0] != 0 || *floors.last().unwrap() != q {
        return false;
    }
    (1..floors.len()).all(|i| {
        let base = w[i] / m;
        floors[i] >= 1
            && floors[i] >= floors[i - 1]
            && (floors[i] == base || (floors[i] == base + 1 && floors[i] >= 2 && rho >= 1))
    })
}

fn floor_defect_bound(s: &NumericalSemigroup) -> bool {
    let m = s.multiplicity();
    let (_, rho) = q_rho(s);
    let w = apery(s);
    let fl = |x: i64| (x + rho) / m;
    for i in 0..w.len() {
        for j in 0..w.len() {
            for k in j..w.len() {
                if w[i] < w[j] + w[k] {
                    continue;
                }
                let d = fl(w[i]) - fl(w[j]) - fl(w[k]);
                if d < -1 {
                    return false;
                }
                if d == -1 && !(rho >= 1 && fl(w[j]) >= 2 && fl(w[k]) >= 2) {
                    return false;
                }
            }
        }
    }
    true
}

fn gap_lemma_sum(s: &NumericalSemigroup) -> bool {
    let m = s.multiplicity();
    (1..=m - 2).all(|alpha| lemma_gap_implies_sum(s, alpha) == Ok(true))
}

fn gap_lemma_disjunction_all(s: &NumericalSemigroup) -> bool {
    let m = s.multiplicity();
    (3..=m - 2).all(|alpha| lemma_gap_disjunction(s, alpha) == Ok(true))
}

fn thm_a_monotone(s: &NumericalSemigroup) -> bool {
    let m = s.multiplicity();
    if m < 4 {
        return true;
    }
    let witnesses = thm_a_witnesses(s);
    let Some(&first) = witnesses.first() else {
        return true;
    };
    let w = apery(s);
    (first + 1..=m - 2).all(|alpha| {
        w[(m - 1) as usize] < w[1] + w[alpha as usize] || witnesses.contains(&alpha)
    })
}

fn coverage_sound(s: &NumericalSemigroup) -> bool {
    !evaluate_conditions(s).covered() || wilf_surplus(s) >= 0
}

fn record_well_formed(s: &NumericalSemigroup) -> bool {
    let r = record::build(s);
    r.to_csv_row().split(';').count() == record::CSV_HEADER.split(';').count()
        && r.covered == evaluate_conditions(s).covered()
        && r.eta.len() as i64 == r.m - 1
}

/// First semigroup (in sweep order) to fail a check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub check: &'static str,
    pub gens: Vec<i64>,
}

/// Outcome of one `verify` sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifySummary {
    pub max_genus: u32,
    /// Semigroups swept (every genus up to the bound).
    pub semigroups: u64,
    /// Pass counts parallel to [`CHECKS`].
    pub pass_counts: Vec<u64>,
    /// Genus bound of the duplicate scan (capped for cost).
    pub duplicate_scan_genus: u32,
    /// Semigroups inspected by the duplicate scan.
    pub duplicate_scan_count: u64,
    /// Repeated gap sets found; anything nonzero is a traversal bug.
    pub duplicates: u64,
    pub first_violation: Option<Violation>,
}

impl VerifySummary {
    pub fn all_passed(&self) -> bool {
        self.first_violation.is_none() && self.duplicates == 0
    }
}

#[derive(Debug, Clone)]
struct Tally {
    count: u64,
    passes: Vec<u64>,
    first: Option<Violation>,
}

impl Tally {
    fn new() -> Tally {
        Tally { count: 0, passes: vec![0; CHECKS.len()], first: None }
    }

    fn observe(&mut self, s: &NumericalSemigroup) {
        self.count += 1;
        for (i, check) in CHECKS.iter().enumerate() {
            if (check.run)(s) {
                self.passes[i] += 1;
            } else if self.first.is_none() {
                self.first = Some(Violation {
                    check: check.name,
                    gens: s.min_generators().to_vec(),
                });
            }
        }
    }

    fn absorb(&mut self, other: &Tally) {
        self.count += other.count;
        for (a, b) in self.passes.iter_mut().zip(&other.passes) {
            *a += b;
        }
        if self.first.is_none() {
            self.first = other.first.clone();
        }
    }
}

/// How deep the duplicate scan goes regardless of the sweep bound; the
/// scan stores every gap set it sees, so it is kept away from the
/// million-semigroup range.
const DUPLICATE_SCAN_CAP: u32 = 12;

fn duplicate_scan(max_genus: u32) -> Result<(u32, u64, u64)> {
    let bound = max_genus.min(DUPLICATE_SCAN_CAP);
    let config = EnumerationConfig::new(bound)?;
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut duplicates = 0u64;
    let summary = enumerate(&config, |s| {
        if !seen.insert(s.gaps()) {
            duplicates += 1;
        }
    })?;
    Ok((bound, summary.total(), duplicates))
}

/// Runs the whole battery over every semigroup of genus <= `max_genus`.
///
/// With `jobs > 1` the sweep enumerates the subtrees rooted at genus
/// `split_depth` on a small worker pool and merges tallies in root
/// order, so pass counts are identical to the single-threaded sweep.
pub fn verify(max_genus: u32, jobs: usize, split_depth: u32) -> Result<VerifySummary> {
    let config = EnumerationConfig::new(max_genus)?;
    let mut tally = Tally::new();

    if jobs <= 1 {
        enumerate(&config, |s| tally.observe(s))?;
    } else {
        let depth = split_depth.min(max_genus);
        if depth > 0 {
            let shallow = EnumerationConfig::new(depth - 1)?;
            enumerate(&shallow, |s| tally.observe(s))?;
        }
        let roots = partition(&config, depth)?;
        let next = AtomicUsize::new(0);
        let slots: Vec<OnceLock<Tally>> = (0..roots.len()).map(|_| OnceLock::new()).collect();
        thread::scope(|scope| {
            for _ in 0..jobs {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(root) = roots.get(i) else { break };
                    let mut local = Tally::new();
                    enumerate_from(root, &config, |s| local.observe(s))
                        .expect("config already validated");
                    let stored = slots[i].set(local);
                    assert!(stored.is_ok(), "subtree {i} tallied twice");
                });
            }
        });
        for slot in &slots {
            tally.absorb(slot.get().expect("every subtree was tallied"));
        }
    }

    let (scan_genus, scan_count, duplicates) = duplicate_scan(max_genus)?;
    Ok(VerifySummary {
        max_genus,
        semigroups: tally.count,
        pass_counts: tally.passes,
        duplicate_scan_genus: scan_genus,
        duplicate_scan_count: scan_count,
        duplicates,
        first_violation: tally.first,
    })
}
