//! Backtracking over vertex bitmasks. This is the independent oracle every
//! formula is checked against, so it shares no code with the determinant
//! routes.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{Graph, BITMASK_LIMIT};

/// Default vertex limit for the exponential matching searches.
pub const DEFAULT_BRUTE_LIMIT: usize = 40;

pub(crate) fn check_brute_guard(g: &Graph, limit: usize) -> Result<()> {
    let limit = limit.min(BITMASK_LIMIT);
    if g.vertex_count() > limit {
        return Err(Error::SizeLimit {
            operation: "brute-force matching search",
            vertices: g.vertex_count(),
            limit,
        });
    }
    Ok(())
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Perfect matchings of the subgraph induced by `free`: match the lowest
/// free vertex with each free neighbour in turn.
pub(crate) fn count_pm_masked(adj: &[u64], free: u64) -> u128 {
    if free == 0 {
        return 1;
    }
    if free.count_ones() % 2 == 1 {
        return 0;
    }
    let v = free.trailing_zeros() as usize;
    let rest = free & !(1u64 << v);
    let mut options = adj[v] & rest;
    let mut total = 0;
    while options != 0 {
        let u = options.trailing_zeros() as usize;
        options &= options - 1;
        total += count_pm_masked(adj, rest & !(1u64 << u));
    }
    total
}

/// Same search as [`count_pm_masked`], stopping at the first matching.
pub(crate) fn has_pm_masked(adj: &[u64], free: u64) -> bool {
    if free == 0 {
        return true;
    }
    if free.count_ones() % 2 == 1 {
        return false;
    }
    let v = free.trailing_zeros() as usize;
    let rest = free & !(1u64 << v);
    let mut options = adj[v] & rest;
    while options != 0 {
        let u = options.trailing_zeros() as usize;
        options &= options - 1;
        if has_pm_masked(adj, rest & !(1u64 << u)) {
            return true;
        }
    }
    false
}

pub fn count_perfect_matchings(g: &Graph, limit: usize) -> Result<BigUint> {
    check_brute_guard(g, limit)?;
    let n = g.vertex_count();
    if n % 2 == 1 {
        return Ok(BigUint::default());
    }
    Ok(BigUint::from(count_pm_masked(
        &g.adjacency_masks(),
        full_mask(n),
    )))
}

pub fn has_perfect_matching(g: &Graph) -> Result<bool> {
    check_brute_guard(g, DEFAULT_BRUTE_LIMIT)?;
    Ok(has_pm_masked(
        &g.adjacency_masks(),
        full_mask(g.vertex_count()),
    ))
}

/// Size of a maximum matching, by exhaustive search: the lowest free
/// vertex is either left unmatched or matched to a free neighbour.
pub fn maximum_matching_size(g: &Graph) -> Result<usize> {
    fn go(adj: &[u64], free: u64, memo: &mut HashMap<u64, usize>) -> usize {
        if free == 0 {
            return 0;
        }
        if let Some(&r) = memo.get(&free) {
            return r;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1u64 << v);
        let mut best = go(adj, rest, memo);
        let mut options = adj[v] & rest;
        while options != 0 {
            let u = options.trailing_zeros() as usize;
            options &= options - 1;
            best = best.max(1 + go(adj, rest & !(1u64 << u), memo));
        }
        memo.insert(free, best);
        best
    }
    check_brute_guard(g, DEFAULT_BRUTE_LIMIT)?;
    Ok(go(
        &g.adjacency_masks(),
        full_mask(g.vertex_count()),
        &mut HashMap::new(),
    ))
}
