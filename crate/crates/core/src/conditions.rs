//! Sufficient conditions for the Wilf inequality, checked in exact
//! integer arithmetic.
//!
//! The two parametric families (called A and B throughout, matching the
//! `thm_a_alpha` / `thm_b_alpha` report columns) combine an Apery-set
//! inequality with a linear bound on the embedding dimension:
//!
//! * condition A at alpha: `w_{m-1} >= w_1 + w_alpha` and
//!   `(2q + alpha - 3) * nu >= q * m`;
//! * condition B at alpha: `w_{m-1} >= w_{alpha-1} + w_alpha` and
//!   `(alpha + 3) * nu >= 3 * m`.
//!
//! Alongside them sit several one-shot criteria (`2nu >= m`, the
//! q-weighted variant, small multiplicity, small embedding dimension,
//! small q, and the m - nu gap bounds). A semigroup is *covered* when any
//! of them holds; covered semigroups provably satisfy Wilf's inequality,
//! so coverage implies `wilf_surplus >= 0` and the verification suite
//! checks exactly that.
//!
//! Every rational comparison from the source inequalities (for example
//! `(2 + (alpha-3)/q) * nu >= m`) is evaluated in cleared-denominator
//! integer form; no floating point is used anywhere.

use crate::error::{Error, Result};
use crate::intervals::{apery_elements, q_rho};
use crate::semigroup::NumericalSemigroup;

/// `(2q + alpha - 3) * nu >= q * m`, the cleared-denominator form of
/// `(2 + (alpha - 3)/q) * nu >= m` for q >= 1.
pub fn thm_a_inequality(q: i64, m: i64, nu: i64, alpha: i64) -> bool {
    (2 * q + alpha - 3) * nu >= q * m
}

/// `(alpha + 3) * nu >= 3m`, the cleared-denominator form of
/// `((alpha + 3) / 3) * nu >= m`.
pub fn thm_b_inequality(m: i64, nu: i64, alpha: i64) -> bool {
    (alpha + 3) * nu >= 3 * m
}

/// `(2q + 1) * nu >= q * m`, the cleared-denominator form of
/// `(2 + 1/q) * nu >= m` for q >= 1.
pub fn two_nu_q_inequality(q: i64, m: i64, nu: i64) -> bool {
    (2 * q + 1) * nu >= q * m
}

/// `q * m <= 8q + 4`, the cleared-denominator form of `m <= 8 + 4/q`
/// for q >= 1.
pub fn qm_bound(q: i64, m: i64) -> bool {
    q * m <= 8 * q + 4
}

/// `q * m <= 8q + 4(alpha - 3)`, the cleared-denominator form of
/// `m <= 8 + 4(alpha - 3)/q` for q >= 1; together with the condition-A
/// Apery inequality this is a nu-free specialization of condition A.
pub fn thm_a_m_bound(q: i64, m: i64, alpha: i64) -> bool {
    q * m <= 8 * q + 4 * (alpha - 3)
}

/// `3m <= 4(alpha + 3)`, the cleared-denominator form of
/// `m <= 4(alpha + 3)/3`; together with the condition-B Apery inequality
/// this is a nu-free specialization of condition B.
pub fn thm_b_m_bound(m: i64, alpha: i64) -> bool {
    3 * m <= 4 * (alpha + 3)
}

fn alpha_window(s: &NumericalSemigroup, alpha: i64, lo: i64) -> Result<()> {
    let hi = s.multiplicity() - 2;
    if alpha < lo || alpha > hi {
        return Err(Error::AlphaOutOfRange { alpha, lo, hi });
    }
    Ok(())
}

/// Condition A at a given alpha in `2..=m-2`. Errors on the full
/// semigroup (q = 0 leaves nothing to bound) and on alpha outside the
/// window.
pub fn check_thm_a(s: &NumericalSemigroup, alpha: i64) -> Result<bool> {
    let (q, _) = q_rho(s);
    if q == 0 {
        return Err(Error::FullSemigroup);
    }
    alpha_window(s, alpha, 2)?;
    let w = apery_elements(s);
    let m = s.multiplicity();
    Ok(w[(m - 1) as usize] >= w[1] + w[alpha as usize]
        && thm_a_inequality(q, m, s.embedding_dim(), alpha))
}

/// Condition B at a given alpha in `2..=m-2`.
pub fn check_thm_b(s: &NumericalSemigroup, alpha: i64) -> Result<bool> {
    alpha_window(s, alpha, 2)?;
    let w = apery_elements(s);
    let m = s.multiplicity();
    Ok(w[(m - 1) as usize] >= w[(alpha - 1) as usize] + w[alpha as usize]
        && thm_b_inequality(m, s.embedding_dim(), alpha))
}

/// All alphas at which condition A holds, ascending. Empty when the
/// window is empty or q = 0.
pub fn thm_a_witnesses(s: &NumericalSemigroup) -> Vec<i64> {
    let (q, _) = q_rho(s);
    let m = s.multiplicity();
    if q == 0 || m < 4 {
        return Vec::new();
    }
    let w = apery_elements(s);
    let nu = s.embedding_dim();
    (2..=m - 2)
        .filter(|&a| {
            w[(m - 1) as usize] >= w[1] + w[a as usize] && thm_a_inequality(q, m, nu, a)
        })
        .collect()
}

/// All alphas at which condition B holds, ascending.
pub fn thm_b_witnesses(s: &NumericalSemigroup) -> Vec<i64> {
    let m = s.multiplicity();
    if m < 4 {
        return Vec::new();
    }
    let w = apery_elements(s);
    let nu = s.embedding_dim();
    (2..=m - 2)
        .filter(|&a| {
            w[(m - 1) as usize] >= w[(a - 1) as usize] + w[a as usize]
                && thm_b_inequality(m, nu, a)
        })
        .collect()
}

/// For alpha in `1..=m-2`: if `m - nu > alpha(alpha-1)/2` then
/// `w_{m-1} >= w_1 + w_alpha`. The implication is a theorem, so this
/// returns true for every semigroup; it is exposed so the verification
/// sweeps can falsify the implementation rather than the mathematics.
pub fn lemma_gap_implies_sum(s: &NumericalSemigroup, alpha: i64) -> Result<bool> {
    alpha_window(s, alpha, 1)?;
    let m = s.multiplicity();
    let hypothesis = m - s.embedding_dim() > alpha * (alpha - 1) / 2;
    if !hypothesis {
        return Ok(true);
    }
    let w = apery_elements(s);
    Ok(w[(m - 1) as usize] >= w[1] + w[alpha as usize])
}

/// For alpha in `3..=m-2`: if `m - nu >= alpha(alpha-1)/2 - 1` then
/// `w_{m-1} >= w_1 + w_alpha` or `w_{m-1} >= w_{alpha-2} + w_{alpha-1}`.
/// Also a theorem; returns true unless the implementation is wrong.
pub fn lemma_gap_disjunction(s: &NumericalSemigroup, alpha: i64) -> Result<bool> {
    alpha_window(s, alpha, 3)?;
    let m = s.multiplicity();
    let hypothesis = m - s.embedding_dim() >= alpha * (alpha - 1) / 2 - 1;
    if !hypothesis {
        return Ok(true);
    }
    let w = apery_elements(s);
    Ok(w[(m - 1) as usize] >= w[1] + w[alpha as usize]
        || w[(m - 1) as usize] >= w[(alpha - 2) as usize] + w[(alpha - 1) as usize])
}

/// Verdict of every sufficient condition on one semigroup. The alpha
/// fields hold the smallest witness when the parametric scan succeeds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub thm_a_alpha: Option<i64>,
    pub thm_b_alpha: Option<i64>,
    /// `2 * nu >= m`.
    pub two_nu: bool,
    /// `(2q + 1) * nu >= q * m` with q >= 1.
    pub two_nu_q: bool,
    /// `m - nu <= 5`.
    pub small_gap: bool,
    /// `m - nu = 6` and `(2q + 1) * nu >= q * m`.
    pub gap6_q: bool,
    /// `m <= 9`.
    pub small_m: bool,
    /// `nu <= 3`.
    pub small_nu: bool,
    /// `q <= 3`.
    pub small_q: bool,
}

impl ConditionReport {
    /// True when any condition applies; such a semigroup provably
    /// satisfies the Wilf inequality.
    pub fn covered(&self) -> bool {
        self.thm_a_alpha.is_some()
            || self.thm_b_alpha.is_some()
            || self.two_nu
            || self.two_nu_q
            || self.small_gap
            || self.gap6_q
            || self.small_m
            || self.small_nu
            || self.small_q
    }
}

/// Runs every condition on one semigroup; never errors, the degenerate
/// windows simply yield no witness.
pub fn evaluate_conditions(s: &NumericalSemigroup) -> ConditionReport {
    let m = s.multiplicity();
    let nu = s.embedding_dim();
    let (q, _) = q_rho(s);
    ConditionReport {
        thm_a_alpha: thm_a_witnesses(s).first().copied(),
        thm_b_alpha: thm_b_witnesses(s).first().copied(),
        two_nu: 2 * nu >= m,
        two_nu_q: q >= 1 && two_nu_q_inequality(q, m, nu),
        small_gap: m - nu <= 5,
        gap6_q: m - nu == 6 && q >= 1 && two_nu_q_inequality(q, m, nu),
        small_m: m <= 9,
        small_nu: nu <= 3,
        small_q: q <= 3,
    }
}
