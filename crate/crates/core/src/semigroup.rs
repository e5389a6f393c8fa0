//! Numerical semigroups: submonoids of (N, +) whose complement in N is
//! finite.
//!
//! A semigroup is stored as an explicit membership table over `0..=f+m`,
//! where `f` is the Frobenius number (largest gap, `-1` when there are no
//! gaps) and `m` the multiplicity (smallest nonzero element). Everything at
//! or above the conductor `c = f + 1` is a member, so the table is enough
//! to answer membership for any integer. All arithmetic is 64-bit signed;
//! generators are capped at [`MAX_GENERATOR`] so that every product formed
//! by the analysis modules stays far away from overflow.

use crate::error::{Error, Result};

/// Largest generator accepted when building a semigroup. Desk-scale inputs
/// are orders of magnitude below this; the cap exists so that expressions
/// like `q * m * nu` provably fit in `i64`.
pub const MAX_GENERATOR: i64 = 1 << 20;

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A validated generating set: nonempty, strictly positive, coprime as a
/// whole, sorted, and deduplicated. It need not be minimal; reduction to
/// the minimal system happens when the semigroup is built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet(Vec<i64>);

impl GeneratorSet {
    pub fn new(mut gens: Vec<i64>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for &g in &gens {
            if g <= 0 {
                return Err(Error::ZeroGenerator(g));
            }
            if g > MAX_GENERATOR {
                return Err(Error::GeneratorOutOfRange(g));
            }
        }
        gens.sort_unstable();
        gens.dedup();
        let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(Error::NonCoprime(d));
        }
        Ok(GeneratorSet(gens))
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

/// The Apery set of a semigroup S with respect to a nonzero element `a`:
/// the `a` smallest elements of S in each residue class mod `a`,
/// equivalently `{s in S : s - a not in S}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyDecomposition {
    /// The element the set is taken against.
    pub wrt: i64,
    /// All `wrt` elements, sorted ascending; starts with 0.
    pub elements: Vec<i64>,
    /// Elements that are not a sum of two nonzero Apery elements
    /// (0 qualifies vacuously). Only populated when `wrt` is the
    /// multiplicity; together with m itself these are the minimal
    /// generators, so its size equals the embedding dimension.
    pub min_ap: Vec<i64>,
    /// Elements w such that w + w' leaves the Apery set for every nonzero
    /// Apery element w'. Only populated when `wrt` is the multiplicity;
    /// subtracting m from each member yields the pseudo-Frobenius numbers.
    pub max_ap: Vec<i64>,
}

/// A numerical semigroup, built from generators or adopted from the
/// enumeration walk. Immutable once constructed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    /// Membership for `0..=f+m`. Entry `c..` is all true.
    table: Vec<bool>,
    /// Minimal generating system, sorted ascending.
    min_gens: Vec<i64>,
    m: i64,
    f: i64,
    c: i64,
    genus: i64,
    n: i64,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by a validated set, sieving
    /// membership until `m` consecutive members pin down the conductor.
    pub fn from_generators(gens: &GeneratorSet) -> Self {
        let gens = gens.as_slice();
        let m = gens[0];
        let mut bound = (2 * gens[gens.len() - 1] + 2) as usize;
        loop {
            let table = sieve(gens, bound);
            if let Some(f) = frobenius_in(&table, m as usize) {
                return Self::from_table(table, f, m);
            }
            bound *= 2;
        }
    }

    /// Convenience wrapper: validate a raw list and build.
    pub fn generated_by(gens: &[i64]) -> Result<Self> {
        Ok(Self::from_generators(&GeneratorSet::new(gens.to_vec())?))
    }

    /// Adopts a membership table that is already known to be the exact
    /// prefix of a numerical semigroup, with its minimal generators.
    /// Used by the enumeration walk, which maintains both incrementally.
    pub(crate) fn from_parts(table: Vec<bool>, min_gens: Vec<i64>) -> Self {
        let f = table.iter().rposition(|&b| !b).map_or(-1, |i| i as i64);
        let m = (1..table.len()).find(|&i| table[i]).map_or(1, |i| i as i64);
        debug_assert_eq!(table.len() as i64, f + m + 1);
        debug_assert_eq!(min_gens, minimal_generators(&table, m, f));
        Self::assemble(table, f, m, min_gens)
    }

    /// Finishes construction from an exact membership table truncated (or
    /// truncatable) to `0..=f+m`.
    fn from_table(mut table: Vec<bool>, f: i64, m: i64) -> Self {
        table.truncate((f + m + 1) as usize);
        let min_gens = minimal_generators(&table, m, f);
        Self::assemble(table, f, m, min_gens)
    }

    fn assemble(table: Vec<bool>, f: i64, m: i64, min_gens: Vec<i64>) -> Self {
        let c = f + 1;
        let genus = (0..c).filter(|&x| !table[x as usize]).count() as i64;
        let n = (0..c).filter(|&x| table[x as usize]).count() as i64;
        NumericalSemigroup { table, min_gens, m, f, c, genus, n }
    }

    /// Multiplicity m: the smallest nonzero element.
    pub fn multiplicity(&self) -> i64 {
        self.m
    }

    /// Frobenius number f: the largest gap, or -1 when S = N.
    pub fn frobenius(&self) -> i64 {
        self.f
    }

    /// Conductor c = f + 1: least element from which S contains every
    /// integer onward.
    pub fn conductor(&self) -> i64 {
        self.c
    }

    /// Genus: the number of gaps.
    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// Number of elements strictly below the conductor (0 included).
    pub fn sporadic_count(&self) -> i64 {
        self.n
    }

    /// The minimal generating system, sorted ascending.
    pub fn min_generators(&self) -> &[i64] {
        &self.min_gens
    }

    /// Embedding dimension nu: size of the minimal generating system.
    pub fn embedding_dim(&self) -> i64 {
        self.min_gens.len() as i64
    }

    /// True exactly when S = N (no gaps).
    pub fn is_full(&self) -> bool {
        self.f < 0
    }

    /// The gaps of S in increasing order.
    pub fn gaps(&self) -> Vec<i64> {
        (0..self.c).filter(|&x| !self.table[x as usize]).collect()
    }

    /// Membership test for an arbitrary integer.
    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        if x >= self.c {
            return true;
        }
        self.table[x as usize]
    }

    /// Apery set of S with respect to `a`, which must be a nonzero
    /// element. The `min_ap` / `max_ap` subsets are filled in only for
    /// `a = m`, the case the interval analysis consumes.
    pub fn apery_set(&self, a: i64) -> Result<AperyDecomposition> {
        if a <= 0 || !self.contains(a) {
            return Err(Error::NotAnElement(a));
        }
        let mut elements = Vec::with_capacity(a as usize);
        for r in 0..a {
            let mut x = r;
            while !self.contains(x) {
                x += a;
            }
            elements.push(x);
        }
        elements.sort_unstable();
        let (min_ap, max_ap) = if a == self.m {
            let is_ap = |x: i64| x > 0 && self.contains(x) && !self.contains(x - a);
            let min_ap = elements
                .iter()
                .copied()
                .filter(|&w| {
                    !elements[1..]
                        .iter()
                        .take_while(|&&wi| 2 * wi <= w)
                        .any(|&wi| is_ap(w - wi))
                })
                .collect();
            let max_ap = elements
                .iter()
                .copied()
                .filter(|&w| !elements[1..].iter().any(|&wj| is_ap(w + wj)))
                .collect();
            (min_ap, max_ap)
        } else {
            (Vec::new(), Vec::new())
        };
        Ok(AperyDecomposition { wrt: a, elements, min_ap, max_ap })
    }

    /// Pseudo-Frobenius numbers: gaps x with x + s in S for every nonzero
    /// s in S. It suffices to test the minimal generators. The Frobenius
    /// number is always a member. Undefined for S = N.
    pub fn pseudo_frobenius(&self) -> Result<Vec<i64>> {
        if self.is_full() {
            return Err(Error::FullSemigroup);
        }
        Ok((1..=self.f)
            .filter(|&x| {
                !self.contains(x) && self.min_gens.iter().all(|&g| self.contains(x + g))
            })
            .collect())
    }
}

/// Closed form for the Frobenius number of a two-generator semigroup
/// `<a, b>` with coprime a, b >= 2: `a*b - a - b`.
pub fn sylvester_frobenius(a: i64, b: i64) -> Result<i64> {
    for v in [a, b] {
        if v <= 0 {
            return Err(Error::ZeroGenerator(v));
        }
        if v < 2 || v > MAX_GENERATOR {
            return Err(Error::GeneratorOutOfRange(v));
        }
    }
    let d = gcd(a, b);
    if d != 1 {
        return Err(Error::NonCoprime(d));
    }
    Ok(a * b - a - b)
}

/// Exact membership of the generated monoid on `0..bound` by dynamic
/// programming.
fn sieve(gens: &[i64], bound: usize) -> Vec<bool> {
    let mut table = vec![false; bound];
    table[0] = true;
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

/// Locates the Frobenius number inside an exact sieve, or `None` when the
/// sieve is too short to certify it. A run of `m` consecutive members
/// proves that everything beyond the run is a member too.
fn frobenius_in(table: &[bool], m: usize) -> Option<i64> {
    let mut run = 0usize;
    for (x, &member) in table.iter().enumerate() {
        if member {
            run += 1;
            if run == m {
                let start = x + 1 - m;
                let f = table[..start].iter().rposition(|&b| !b).map_or(-1, |i| i as i64);
                // the table must actually reach f + m
                return (table.len() as i64 > f + m as i64).then_some(f);
            }
        } else {
            run = 0;
        }
    }
    None
}

/// Minimal generators straight from a membership table: m itself, plus
/// every member of `(m, f+m]` that is not a sum of two nonzero members.
fn minimal_generators(table: &[bool], m: i64, f: i64) -> Vec<i64> {
    let mut out = vec![m];
    for x in (m + 1)..=(f + m) {
        if !table[x as usize] {
            continue;
        }
        let decomposable =
            (m..=x / 2).any(|a| table[a as usize] && table[(x - a) as usize]);
        if !decomposable {
            out.push(x);
        }
    }
    out
}
