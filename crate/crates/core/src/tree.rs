//! Depth-first enumeration of all numerical semigroups up to a genus
//! bound.
//!
//! Semigroups form a tree rooted at N: the children of S are the sets
//! S \ {g} for each minimal generator g strictly greater than the
//! Frobenius number of S (removing such a g keeps the set closed under
//! addition and bumps the genus by one). Every semigroup of genus g is
//! reached exactly once at depth g, so walking the tree to a bound visits
//! each semigroup once, with children ordered by ascending removed
//! generator for a deterministic traversal.
//!
//! The walk itself runs on a compact state: a `u128` membership mask plus
//! incrementally maintained minimal generators. Full
//! [`NumericalSemigroup`] values are materialized only for nodes that
//! survive the configured filters. The genus guard [`MAX_GENUS`] keeps
//! every value the walk touches inside the mask.

use crate::conditions::evaluate_conditions;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Hard cap on enumeration depth. Genus g implies a Frobenius number of
/// at most 2g - 1 and multiplicity at most g + 1, so every element the
/// walk inspects is below 3 * MAX_GENUS + 3.
pub const MAX_GENUS: u32 = 40;

const _: () = assert!(3 * MAX_GENUS + 3 < 128, "walk state must fit the u128 mask");

fn bit(mask: u128, x: i64) -> bool {
    debug_assert!((0..128).contains(&x));
    mask >> x & 1 == 1
}

/// Compact traversal state: membership mask over `0..128`, cached
/// multiplicity, Frobenius number, genus, and the full minimal
/// generating system (sorted ascending).
#[derive(Debug, Clone)]
struct Walk {
    mask: u128,
    m: i64,
    f: i64,
    genus: u32,
    gens: Vec<i64>,
}

impl Walk {
    fn universe() -> Walk {
        Walk { mask: !0, m: 1, f: -1, genus: 0, gens: vec![1] }
    }

    /// Minimal generators strictly above the Frobenius number; removing
    /// any one of them yields a child semigroup.
    fn removable(&self) -> &[i64] {
        let cut = self.gens.partition_point(|&g| g <= self.f);
        &self.gens[cut..]
    }

    /// The child obtained by removing the effective generator `g`.
    /// The child's minimal generators are the parent's below g plus a
    /// rescan of `(g, g + m]`, the only window where minimality can
    /// change; its multiplicity moves only when g was the multiplicity.
    fn remove(&self, g: i64) -> Walk {
        let mask = self.mask & !(1u128 << g);
        let m = if g == self.m { g + 1 } else { self.m };
        let mut gens: Vec<i64> = self.gens.iter().copied().filter(|&x| x < g).collect();
        for x in g + 1..=g + m {
            let decomposable = (m..=x / 2).any(|a| bit(mask, a) && bit(mask, x - a));
            if !decomposable {
                gens.push(x);
            }
        }
        Walk { mask, m, f: g, genus: self.genus + 1, gens }
    }

    fn materialize(&self) -> NumericalSemigroup {
        let len = (self.f + self.m + 1) as usize;
        let table = (0..len as i64).map(|x| bit(self.mask, x)).collect();
        NumericalSemigroup::from_parts(table, self.gens.clone())
    }

    fn from_semigroup(s: &NumericalSemigroup) -> Walk {
        assert!(
            s.genus() <= MAX_GENUS as i64,
            "tree nodes are only supported up to genus {MAX_GENUS}"
        );
        let mut mask = !0u128;
        for gap in s.gaps() {
            mask &= !(1u128 << gap);
        }
        Walk {
            mask,
            m: s.multiplicity(),
            f: s.frobenius(),
            genus: s.genus() as u32,
            gens: s.min_generators().to_vec(),
        }
    }
}

/// A node of the semigroup tree: the semigroup plus its effective
/// generators (the removable ones, each producing one child).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub semigroup: NumericalSemigroup,
    pub removable: Vec<i64>,
}

impl TreeNode {
    pub fn for_semigroup(s: &NumericalSemigroup) -> TreeNode {
        TreeNode::from_walk(&Walk::from_semigroup(s))
    }

    fn from_walk(w: &Walk) -> TreeNode {
        TreeNode { semigroup: w.materialize(), removable: w.removable().to_vec() }
    }
}

/// The root of the tree: N itself, whose single child removes 1.
pub fn root() -> TreeNode {
    TreeNode::from_walk(&Walk::universe())
}

/// Children of a node in traversal order (ascending removed generator).
pub fn children(node: &TreeNode) -> Vec<TreeNode> {
    let w = Walk::from_semigroup(&node.semigroup);
    w.removable().iter().map(|&g| TreeNode::from_walk(&w.remove(g))).collect()
}

/// Which side of the coverage verdict an enumeration should keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverageFilter {
    CoveredOnly,
    UncoveredOnly,
}

/// Optional predicates applied before a node is visited. Filters prune
/// visits, never the traversal itself: a filtered-out semigroup's
/// descendants are still walked.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Filters {
    pub multiplicity: Option<i64>,
    pub m_minus_nu: Option<i64>,
    pub coverage: Option<CoverageFilter>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub max_genus: u32,
    pub filters: Filters,
}

impl EnumerationConfig {
    pub fn new(max_genus: u32) -> Result<Self> {
        let config = EnumerationConfig { max_genus, filters: Filters::default() };
        config.validate()?;
        Ok(config)
    }

    pub fn with_filters(mut self, filters: Filters) -> Self {
        self.filters = filters;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.max_genus > MAX_GENUS {
            return Err(Error::GenusBoundTooLarge(self.max_genus));
        }
        Ok(())
    }
}

/// Visit counts per genus for one enumeration (index = genus). Only
/// post-filter visits are counted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnumerationSummary {
    pub visited_per_genus: Vec<u64>,
}

impl EnumerationSummary {
    fn new(max_genus: u32) -> Self {
        EnumerationSummary { visited_per_genus: vec![0; max_genus as usize + 1] }
    }

    pub fn total(&self) -> u64 {
        self.visited_per_genus.iter().sum()
    }

    /// Elementwise sum, used to combine disjoint subtree enumerations.
    pub fn absorb(&mut self, other: &EnumerationSummary) {
        if other.visited_per_genus.len() > self.visited_per_genus.len() {
            self.visited_per_genus.resize(other.visited_per_genus.len(), 0);
        }
        for (i, &v) in other.visited_per_genus.iter().enumerate() {
            self.visited_per_genus[i] += v;
        }
    }
}

/// Walks the whole tree up to `config.max_genus`, calling `visit` on
/// every semigroup that passes the filters, in depth-first order.
pub fn enumerate<F>(config: &EnumerationConfig, mut visit: F) -> Result<EnumerationSummary>
where
    F: FnMut(&NumericalSemigroup),
{
    config.validate()?;
    let mut summary = EnumerationSummary::new(config.max_genus);
    dfs(&Walk::universe(), config, &mut summary, &mut visit);
    Ok(summary)
}

/// Walks only the subtree rooted at `start` (inclusive), with the same
/// genus bound and filters. Subtrees of distinct [`partition`] roots are
/// disjoint, so their summaries can be [`EnumerationSummary::absorb`]ed.
pub fn enumerate_from<F>(
    start: &TreeNode,
    config: &EnumerationConfig,
    mut visit: F,
) -> Result<EnumerationSummary>
where
    F: FnMut(&NumericalSemigroup),
{
    config.validate()?;
    let mut summary = EnumerationSummary::new(config.max_genus);
    let w = Walk::from_semigroup(&start.semigroup);
    if w.genus <= config.max_genus {
        dfs(&w, config, &mut summary, &mut visit);
    }
    Ok(summary)
}

/// All tree nodes of genus exactly `split_depth`, in depth-first order.
/// Together with the nodes of genus < split_depth, the subtrees they root
/// partition the full enumeration, which is what makes parallel
/// verification merge exactly.
pub fn partition(config: &EnumerationConfig, split_depth: u32) -> Result<Vec<TreeNode>> {
    config.validate()?;
    if split_depth > config.max_genus {
        return Err(Error::GenusBoundTooLarge(split_depth));
    }
    let mut out = Vec::new();
    collect_at_depth(&Walk::universe(), split_depth, &mut out);
    Ok(out)
}

fn collect_at_depth(w: &Walk, depth: u32, out: &mut Vec<TreeNode>) {
    if w.genus == depth {
        out.push(TreeNode::from_walk(w));
        return;
    }
    for &g in w.removable() {
        collect_at_depth(&w.remove(g), depth, out);
    }
}

fn dfs<F>(w: &Walk, config: &EnumerationConfig, summary: &mut EnumerationSummary, visit: &mut F)
where
    F: FnMut(&NumericalSemigroup),
{
    offer(w, config, summary, visit);
    if w.genus < config.max_genus {
        for &g in w.removable() {
            dfs(&w.remove(g), config, summary, visit);
        }
    }
}

fn offer<F>(w: &Walk, config: &EnumerationConfig, summary: &mut EnumerationSummary, visit: &mut F)
where
    F: FnMut(&NumericalSemigroup),
{
    let filters = &config.filters;
    if let Some(m) = filters.multiplicity {
        if w.m != m {
            return;
        }
    }
    if let Some(d) = filters.m_minus_nu {
        if w.m - w.gens.len() as i64 != d {
            return;
        }
    }
    let s = w.materialize();
    if let Some(cov) = filters.coverage {
        let covered = evaluate_conditions(&s).covered();
        let keep = match cov {
            CoverageFilter::CoveredOnly => covered,
            CoverageFilter::UncoveredOnly => !covered,
        };
        if !keep {
            return;
        }
    }
    summary.visited_per_genus[w.genus as usize] += 1;
    visit(&s);
}
