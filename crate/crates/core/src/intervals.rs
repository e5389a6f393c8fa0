//! Interval decomposition of the segment below the conductor.
//!
//! Writing c = qm - rho with 0 <= rho < m, the half-open intervals
//! I_k = [km - rho, (k+1)m - rho) of length m tile the line, and the first
//! q of them cover exactly [−rho, c). Counting members of S per interval
//! (n_k) and bucketing those counts (eta_j = #{k < q : n_k = j}) turns the
//! Wilf inequality nu * n >= c into an exact accounting identity over the
//! sorted Apery set: eta_j equals the floor difference
//! floor((w_j + rho)/m) - floor((w_{j-1} + rho)/m), and
//!
//!   sum_{j=1}^{m-1} (floor((w_j+rho)/m) - floor((w_{j-1}+rho)/m)) * (j*nu - m) + rho
//!
//! equals nu * n - c for every numerical semigroup. Both sides are
//! computed here, separately, so the identity stays testable.

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Quotient and remainder of the conductor against the multiplicity:
/// q = ceil(c / m) and rho = q*m - c, so 0 <= rho < m. For S = N both
/// are zero.
pub fn q_rho(s: &NumericalSemigroup) -> (i64, i64) {
    let (c, m) = (s.conductor(), s.multiplicity());
    let q = (c + m - 1) / m;
    (q, q * m - c)
}

/// Number of members of S inside I_k = [km - rho, (k+1)m - rho),
/// clamped to N on the left. Defined for any k >= 0.
pub fn members_in_interval(s: &NumericalSemigroup, k: i64) -> i64 {
    let m = s.multiplicity();
    let (_, rho) = q_rho(s);
    let lo = (k * m - rho).max(0);
    let hi = (k + 1) * m - rho;
    (lo..hi).filter(|&x| s.contains(x)).count() as i64
}

/// The counts n_0, ..., n_{q-1} for the intervals below the conductor.
/// Empty for S = N.
pub fn interval_counts(s: &NumericalSemigroup) -> Vec<i64> {
    let (q, _) = q_rho(s);
    (0..q).map(|k| members_in_interval(s, k)).collect()
}

/// eta_j = number of intervals I_k, k < q, containing exactly j members,
/// for j = 1..=m-1, counted directly from `interval_counts`. Index 0
/// holds eta_1.
pub fn eta_direct(s: &NumericalSemigroup) -> Vec<i64> {
    let m = s.multiplicity();
    let mut eta = vec![0i64; (m - 1) as usize];
    for nk in interval_counts(s) {
        eta[(nk - 1) as usize] += 1;
    }
    eta
}

/// The same eta vector computed from the sorted Apery set alone:
/// eta_j = floor((w_j + rho)/m) - floor((w_{j-1} + rho)/m).
pub fn eta_apery(s: &NumericalSemigroup) -> Vec<i64> {
    let m = s.multiplicity();
    let (_, rho) = q_rho(s);
    let w = apery_elements(s);
    (1..m as usize)
        .map(|j| (w[j] + rho) / m - (w[j - 1] + rho) / m)
        .collect()
}

/// Left-hand slack of the Wilf inequality: nu * n - c. Nonnegative exactly
/// when the semigroup satisfies Wilf's condition.
pub fn wilf_surplus(s: &NumericalSemigroup) -> i64 {
    s.embedding_dim() * s.sporadic_count() - s.conductor()
}

/// The same slack reassembled from the Apery floor differences:
/// sum over j of (floor((w_j+rho)/m) - floor((w_{j-1}+rho)/m)) * (j*nu - m),
/// plus rho. Must always equal [`wilf_surplus`].
pub fn wilf_sum(s: &NumericalSemigroup) -> i64 {
    let m = s.multiplicity();
    let nu = s.embedding_dim();
    let (_, rho) = q_rho(s);
    let w = apery_elements(s);
    let total: i64 = (1..m as usize)
        .map(|j| {
            let step = (w[j] + rho) / m - (w[j - 1] + rho) / m;
            step * (j as i64 * nu - m)
        })
        .sum();
    total + rho
}

/// floor((w_i + rho)/m) - floor((w_j + rho)/m) - floor((w_k + rho)/m) for
/// Apery indices i, j, k. Whenever w_i >= w_j + w_k this is at least -1,
/// and the -1 case forces rho >= 1 with both subtracted floors >= 2.
pub fn floor_defect(s: &NumericalSemigroup, i: usize, j: usize, k: usize) -> Result<i64> {
    let m = s.multiplicity();
    for index in [i, j, k] {
        if index as i64 >= m {
            return Err(Error::IndexOutOfRange { index, m });
        }
    }
    let (_, rho) = q_rho(s);
    let w = apery_elements(s);
    let fl = |x: usize| (w[x] + rho) / m;
    Ok(fl(i) - fl(j) - fl(k))
}

/// Everything the interval analysis produces for one semigroup, computed
/// in one pass: q, rho, the per-interval counts, both eta vectors, and
/// both sides of the Wilf accounting identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalProfile {
    pub q: i64,
    pub rho: i64,
    pub counts: Vec<i64>,
    pub eta_direct: Vec<i64>,
    pub eta_apery: Vec<i64>,
    pub wilf_surplus: i64,
    pub wilf_sum: i64,
}

impl IntervalProfile {
    pub fn compute(s: &NumericalSemigroup) -> Self {
        let (q, rho) = q_rho(s);
        IntervalProfile {
            q,
            rho,
            counts: interval_counts(s),
            eta_direct: eta_direct(s),
            eta_apery: eta_apery(s),
            wilf_surplus: wilf_surplus(s),
            wilf_sum: wilf_sum(s),
        }
    }
}

pub(crate) fn apery_elements(s: &NumericalSemigroup) -> Vec<i64> {
    s.apery_set(s.multiplicity())
        .expect("multiplicity is always a nonzero element")
        .elements
}
