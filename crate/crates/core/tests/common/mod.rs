//! Oracles shared by the integration tests. None of them call into the
//! library's counting code.

#![allow(dead_code)]

use std::collections::HashMap;

/// Domino tilings of an `m × n` board by a column-by-column broken-profile
/// dynamic program. The profile holds one bit per row: set when the cell
/// in the current column is already covered by a horizontal domino
/// sticking out of the previous column. The shorter side is used as the
/// column height.
pub fn grid_dimer_dp(m: usize, n: usize) -> u128 {
    let (m, n) = (m.min(n), m.max(n));
    assert!(m <= 16, "profile is kept in a u32");
    let mut ways: HashMap<u32, u128> = HashMap::from([(0, 1)]);
    for _ in 0..n {
        let mut next: HashMap<u32, u128> = HashMap::new();
        for (&profile, &count) in &ways {
            fill_column(m, 0, profile, 0, count, &mut next);
        }
        ways = next;
    }
    ways.get(&0).copied().unwrap_or(0)
}

fn fill_column(
    m: usize,
    row: usize,
    covered: u32,
    out: u32,
    count: u128,
    next: &mut HashMap<u32, u128>,
) {
    if row == m {
        *next.entry(out).or_default() += count;
        return;
    }
    if covered & (1 << row) != 0 {
        fill_column(m, row + 1, covered, out, count, next);
        return;
    }
    fill_column(m, row + 1, covered, out | (1 << row), count, next);
    if row + 1 < m && covered & (1 << (row + 1)) == 0 {
        fill_column(m, row + 2, covered, out, count, next);
    }
}

/// `counts[k]` is the number of `k`-edge matchings, found by trying every
/// subset of the edge list.
pub fn matchings_by_size(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    assert!(edges.len() < 24);
    let mut counts = vec![0u64; n / 2 + 1];
    'subsets: for subset in 0u32..(1 << edges.len()) {
        let mut used = 0u64;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if subset & (1 << i) != 0 {
                let bits = (1u64 << u) | (1u64 << v);
                if used & bits != 0 {
                    continue 'subsets;
                }
                used |= bits;
            }
        }
        counts[subset.count_ones() as usize] += 1;
    }
    counts
}

/// Laplace expansion along the first row.
pub fn cofactor_det(a: &[Vec<i64>]) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut total = 0i128;
    for j in 0..n {
        if a[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * a[0][j] as i128 * cofactor_det(&minor);
    }
    total
}
