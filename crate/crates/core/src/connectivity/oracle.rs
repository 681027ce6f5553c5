//! Brute-force minimum cuts by enumerating every bipartition.
//!
//! Vertex 0 is pinned to side A and the remaining `n - 1` membership bits
//! walk a binary reflected Gray code, so consecutive bipartitions differ in
//! one vertex and the cut value updates with two popcounts.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::witness::CutWitness;
use super::{ExtCount, Limits};

/// Which bipartitions the oracle minimizes over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideRule {
    /// Both sides nonempty.
    Any,
    /// Both sides have at least two vertices.
    AtLeastTwo,
    /// Neither side has a vertex without a neighbor on its own side.
    Restricted,
    /// Restricted, and both sides have at least three vertices.
    RestrictedAtLeastThree,
}

const HARD_LIMIT: usize = 63;
const CHECK_EVERY: u64 = 1 << 20;

fn no_isolated(adj: &[u64], side: u64) -> bool {
    let mut rest = side;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if adj[v] & side == 0 {
            return false;
        }
    }
    true
}

impl SideRule {
    fn admits(self, adj: &[u64], a: u64, b: u64) -> bool {
        let (na, nb) = (a.count_ones(), b.count_ones());
        match self {
            SideRule::Any => true,
            SideRule::AtLeastTwo => na >= 2 && nb >= 2,
            SideRule::Restricted => no_isolated(adj, a) && no_isolated(adj, b),
            SideRule::RestrictedAtLeastThree => na >= 3 && nb >= 3 && no_isolated(adj, a) && no_isolated(adj, b),
        }
    }
}

/// Minimum `|[A, V \ A]|` over the bipartitions admitted by `rule`; the
/// least `A` (as an integer, with `0 ∈ A`) wins ties. `None` when no
/// bipartition qualifies.
pub fn oracle_min_cut(g: &Graph, rule: SideRule, limits: &Limits) -> Result<Option<CutWitness>> {
    let n = g.order();
    let budget = limits.oracle_order.min(HARD_LIMIT);
    if n > budget {
        return Err(Error::OverBudget { order: n, budget });
    }
    if n < 2 {
        return Ok(None);
    }
    let adj: Vec<u64> = (0..n).map(|v| g.simple_neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect();
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let mut a: u64 = 1;
    let mut cut: i64 = adj[0].count_ones() as i64;
    let mut best: Option<(i64, u64)> = None;
    let steps: u64 = 1 << (n - 1);
    for step in 0..steps {
        if step > 0 {
            if step % CHECK_EVERY == 0 {
                limits.check()?;
            }
            let v = step.trailing_zeros() as usize + 1;
            let bit = 1u64 << v;
            let inside = (adj[v] & a).count_ones() as i64;
            let outside = (adj[v] & !a & full).count_ones() as i64;
            if a & bit != 0 {
                cut += inside - outside;
            } else {
                cut += outside - inside;
            }
            a ^= bit;
        }
        if a == full {
            continue;
        }
        let improves = match best {
            None => true,
            Some((c, m)) => cut < c || (cut == c && a < m),
        };
        if improves && rule.admits(&adj, a, full & !a) {
            best = Some((cut, a));
        }
    }
    best.map(|(_, mask)| CutWitness::from_side(g, VertexSet::from_mask(n, mask))).transpose()
}

/// `λ′(G)` by exhaustive enumeration.
pub fn lambda_prime_oracle(g: &Graph, limits: &Limits) -> Result<ExtCount> {
    Ok(match oracle_min_cut(g, SideRule::Restricted, limits)? {
        Some(w) => ExtCount::from(w.value),
        None => ExtCount::Infinite,
    })
}
