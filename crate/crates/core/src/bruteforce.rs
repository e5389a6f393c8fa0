//! Brute-force reference computations, deliberately independent of the
//! main implementations so the test suites can cross-check both routes.
//!
//! Nothing here is clever: membership comes from a fixed-bound dynamic
//! program, and semigroups of a given genus are found by trying every
//! candidate gap set. Keep it that way.

/// Exact membership of the monoid generated by `gens` on `0..bound`,
/// computed by the obvious dynamic program. Callers pick `bound` large
/// enough for their purpose; no conductor detection is attempted.
pub fn sieve_membership(gens: &[i64], bound: usize) -> Vec<bool> {
    let mut table = vec![false; bound];
    if bound > 0 {
        table[0] = true;
    }
    for x in 1..bound {
        for &g in gens {
            let g = g as usize;
            if x >= g && table[x - g] {
                table[x] = true;
                break;
            }
        }
    }
    table
}

/// Counts numerical semigroups of each genus `0..=max_genus` by testing
/// every size-g subset of `{1, ..., 2g}` as a candidate gap set. A subset
/// works when the complement is closed under addition; sums above `2g`
/// are always members because the Frobenius number of a genus-g semigroup
/// is at most `2g - 1`.
pub fn gap_subset_counts(max_genus: u32) -> Vec<u64> {
    (0..=max_genus).map(count_genus).collect()
}

fn count_genus(g: u32) -> u64 {
    if g == 0 {
        return 1;
    }
    let top = 2 * g as usize;
    let mut count = 0;
    let mut gaps: Vec<usize> = (1..=g as usize).collect();
    loop {
        if complement_closed(&gaps, top) {
            count += 1;
        }
        if !next_combination(&mut gaps, top) {
            break;
        }
    }
    count
}

/// Advances `combo` (sorted, values in `1..=top`) to the next combination
/// in lexicographic order; false when exhausted.
fn next_combination(combo: &mut [usize], top: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < top - (k - 1 - i) {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn complement_closed(gaps: &[usize], top: usize) -> bool {
    let mut is_gap = vec![false; top + 1];
    for &x in gaps {
        is_gap[x] = true;
    }
    let elems: Vec<usize> = (1..=top).filter(|&x| !is_gap[x]).collect();
    for (i, &a) in elems.iter().enumerate() {
        for &b in &elems[i..] {
            let s = a + b;
            if s > top {
                break;
            }
            if is_gap[s] {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_matches_hand_computation() {
        let t = sieve_membership(&[3, 5, 7], 12);
        let expect = [true, false, false, true, false, true, true, true, true, true, true, true];
        assert_eq!(t, expect);
    }

    #[test]
    fn tiny_genus_counts() {
        assert_eq!(gap_subset_counts(4), vec![1, 1, 2, 4, 7]);
    }

    #[test]
    fn combination_walker_is_exhaustive() {
        let mut combo = vec![1, 2];
        let mut seen = vec![combo.clone()];
        while next_combination(&mut combo, 4) {
            seen.push(combo.clone());
        }
        assert_eq!(seen, vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]);
    }
}
