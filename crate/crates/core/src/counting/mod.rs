//! Perfect-matching counters: the brute-force oracle, the Pfaffian
//! (skew determinant) route, and closed forms for products with trees.

pub(crate) mod brute;
mod formulas;
mod identities;
mod trig;

use std::fmt;

use num_bigint::{BigInt, BigUint};

pub use brute::{
    count_perfect_matchings, has_perfect_matching, maximum_matching_size, DEFAULT_BRUTE_LIMIT,
};
pub use formulas::{count_c4_tree, count_p3_tree, count_p4_tree};
pub use identities::{
    squarish_decompose, verify_identities, ClauseStatus, IdentityClause, IdentityReport,
    SquarishDecomposition,
};
pub use trig::{
    count_c4_path, count_grid_dimer, kasteleyn_product, narumi_hosoya_product,
    GRID_ROUNDING_TOLERANCE, PATH_RELATIVE_TOLERANCE,
};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::integer_sqrt_exact;
use crate::orientation::{skew_adjacency, OrientedGraph};

/// Which route produced a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Brute,
    Pfaffian,
    FormulaC4T,
    FormulaP3T,
    FormulaP4T,
    NarumiHosoya,
    KasteleynGrid,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Pfaffian => "pfaffian",
            Method::FormulaC4T => "formula-c4t",
            Method::FormulaP3T => "formula-p3t",
            Method::FormulaP4T => "formula-p4t",
            Method::NarumiHosoya => "narumi-hosoya",
            Method::KasteleynGrid => "kasteleyn-grid",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CountResult {
    pub count: BigUint,
    pub method: Method,
    /// Dimension of the matrix whose determinant was taken.
    pub matrix_dim: Option<usize>,
    pub determinant: Option<BigInt>,
    /// Floating evaluation of a trigonometric product formula.
    pub float_value: Option<f64>,
    pub note: Option<String>,
}

impl CountResult {
    pub(crate) fn new(count: BigUint, method: Method) -> Self {
        CountResult {
            count,
            method,
            matrix_dim: None,
            determinant: None,
            float_value: None,
            note: None,
        }
    }

    pub(crate) fn with_determinant(mut self, dim: usize, det: BigInt) -> Self {
        self.matrix_dim = Some(dim);
        self.determinant = Some(det);
        self
    }
}

/// Exhaustive count, `0` for odd order.
pub fn count_brute(g: &Graph) -> Result<CountResult> {
    count_brute_with_limit(g, DEFAULT_BRUTE_LIMIT)
}

pub fn count_brute_with_limit(g: &Graph, limit: usize) -> Result<CountResult> {
    let count = count_perfect_matchings(g, limit)?;
    let mut res = CountResult::new(count, Method::Brute);
    if g.vertex_count() % 2 == 1 {
        res.note = Some("odd number of vertices".into());
    }
    Ok(res)
}

/// `Pm(G) = √det A(Gᵉ)` for a Pfaffian orientation `d` of `g`.
///
/// Pfaffian-ness is the caller's claim and is not checked. The
/// determinant of an integer skew-symmetric matrix is the square of its
/// Pfaffian, so a bad orientation shows up as a wrong count rather than a
/// non-square; [`Error::NotPfaffian`] only guards the arithmetic.
pub fn count_pfaffian(g: &Graph, d: &OrientedGraph) -> Result<CountResult> {
    if d.base() != g {
        return Err(Error::InvalidGraph(
            "orientation is not over the given graph".into(),
        ));
    }
    let n = g.vertex_count();
    if n % 2 == 1 {
        let mut res = CountResult::new(BigUint::default(), Method::Pfaffian);
        res.note = Some("odd number of vertices".into());
        return Ok(res);
    }
    let det = skew_adjacency::<BigInt>(d).det_bareiss();
    let count = integer_sqrt_exact(&det).map_err(|_| Error::NotPfaffian(det.to_string()))?;
    Ok(CountResult::new(count, Method::Pfaffian).with_determinant(n, det))
}
