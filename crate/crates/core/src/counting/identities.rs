use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::counting::{
    count_c4_tree, count_p3_tree, count_p4_tree, count_perfect_matchings, has_perfect_matching,
    maximum_matching_size,
};
use crate::error::{Error, Result};
use crate::graph::{cartesian_product, cycle_graph, path_graph, Graph, Tree};

/// `value = factor · root²` with `factor ∈ {1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarishDecomposition {
    pub factor: u8,
    pub root: BigUint,
}

impl SquarishDecomposition {
    pub fn value(&self) -> BigUint {
        &self.root * &self.root * BigUint::from(self.factor)
    }
}

impl std::fmt::Display for SquarishDecomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.factor {
            1 => write!(f, "{}²", self.root),
            k => write!(f, "{k}·{}²", self.root),
        }
    }
}

pub fn squarish_decompose(v: &BigUint) -> Result<SquarishDecomposition> {
    if v.is_zero() {
        return Err(Error::Domain("squarish decomposition needs v ≥ 1".into()));
    }
    let r = v.sqrt();
    if &r * &r == *v {
        return Ok(SquarishDecomposition { factor: 1, root: r });
    }
    if (v % 2u32).is_zero() {
        let half = v / 2u32;
        let r = half.sqrt();
        if &r * &r == half {
            return Ok(SquarishDecomposition { factor: 2, root: r });
        }
    }
    Err(Error::NotSquarish(v.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClauseStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityClause {
    pub name: &'static str,
    pub status: ClauseStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub c4_count: BigUint,
    pub decomposition: Option<SquarishDecomposition>,
    pub p3_count: Option<BigUint>,
    pub p4_count: BigUint,
    pub clauses: Vec<IdentityClause>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.status != ClauseStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityClause> {
        self.clauses
            .iter()
            .filter(|c| c.status == ClauseStatus::Fail)
    }
}

fn clause(name: &'static str, ok: bool, detail: String) -> IdentityClause {
    IdentityClause {
        name,
        status: if ok {
            ClauseStatus::Pass
        } else {
            ClauseStatus::Fail
        },
        detail,
    }
}

fn skipped(name: &'static str, detail: &str) -> IdentityClause {
    IdentityClause {
        name,
        status: ClauseStatus::Skipped,
        detail: detail.into(),
    }
}

/// Checks the counting identities for one tree:
///
/// * `squarish`: `Pm(C4 × T)` is `k²` or `2k²`, with factor 1 exactly
///   when the nullity `n − 2r` is even (so always when `T` has a perfect
///   matching);
/// * `p3-squared`: `Pm(P3 × T)² = Pm(C4 × T)` when `T` has a perfect
///   matching;
/// * `brute-*`: every closed form agrees with exhaustive search on the
///   product graph, for products with at most `brute_limit` vertices.
///
/// Failures are reported in the returned clauses, not as errors.
pub fn verify_identities(t: &Tree, brute_limit: usize) -> Result<IdentityReport> {
    let n = t.vertex_count();
    let c4 = count_c4_tree(t)?.count;
    let p4 = count_p4_tree(t)?.count;
    let perfect = has_perfect_matching(t.graph())?;
    let p3 = if perfect {
        Some(count_p3_tree(t)?.count)
    } else {
        None
    };
    let mut clauses = Vec::new();

    let nullity = n - 2 * maximum_matching_size(t.graph())?;
    let decomposition = squarish_decompose(&c4).ok();
    clauses.push(match &decomposition {
        Some(d) => {
            let want = if nullity.is_multiple_of(2) { 1 } else { 2 };
            clause(
                "squarish",
                d.factor == want,
                format!("{c4} = {d}, nullity {nullity}"),
            )
        }
        None => clause("squarish", false, format!("{c4} is not squarish")),
    });

    clauses.push(match &p3 {
        Some(p3) => clause("p3-squared", p3 * p3 == c4, format!("{p3}² vs {c4}")),
        None => skipped("p3-squared", "tree has no perfect matching"),
    });

    let brute = |layers: &Graph| -> Result<Option<BigUint>> {
        let product = cartesian_product(layers, t.graph());
        if product.vertex_count() > brute_limit {
            return Ok(None);
        }
        count_perfect_matchings(&product, brute_limit).map(Some)
    };
    let too_big = "product exceeds the brute-force limit";

    clauses.push(match brute(&cycle_graph(4)?)? {
        Some(b) => clause("brute-c4", b == c4, format!("formula {c4}, brute {b}")),
        None => skipped("brute-c4", too_big),
    });
    clauses.push(match (&p3, brute(path_graph(3)?.graph())?) {
        (Some(p3), Some(b)) => clause("brute-p3", b == *p3, format!("formula {p3}, brute {b}")),
        (None, _) => skipped("brute-p3", "tree has no perfect matching"),
        (_, None) => skipped("brute-p3", too_big),
    });
    clauses.push(match brute(path_graph(4)?.graph())? {
        Some(b) => clause("brute-p4", b == p4, format!("formula {p4}, brute {b}")),
        None => skipped("brute-p4", too_big),
    });

    Ok(IdentityReport {
        c4_count: c4,
        decomposition,
        p3_count: p3,
        p4_count: p4,
        clauses,
    })
}
