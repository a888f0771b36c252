//! Exact perfect-matching counts for Cartesian products of paths and
//! cycles with trees.
//!
//! Three independent routes produce every count:
//!
//! * exhaustive backtracking ([`count_brute`]),
//! * the Pfaffian route, `Pm(G)² = det A(Gᵉ)` for a Pfaffian orientation
//!   `Gᵉ` ([`count_pfaffian`] with the constructions in [`orientation`]),
//! * closed forms over the tree spectrum, evaluated as integer
//!   determinants ([`count_c4_tree`], [`count_p4_tree`], [`count_p3_tree`])
//!   or as floating trigonometric products for paths ([`count_c4_path`],
//!   [`count_grid_dimer`]).
//!
//! The matrix and polynomial types are generic over the scalar; the
//! aliases below fix the exact instantiations used by the counters.

pub mod counting;
pub mod error;
pub mod format;
pub mod graph;
pub mod linalg;
pub mod orientation;
pub mod scalar;

pub use counting::{
    count_brute, count_brute_with_limit, count_c4_path, count_c4_tree, count_grid_dimer,
    count_p3_tree, count_p4_tree, count_pfaffian, squarish_decompose, verify_identities,
    CountResult, IdentityReport, Method, SquarishDecomposition,
};
pub use error::{Error, Result, TreeDefect};
pub use graph::{
    cartesian_product, cycle_graph, enumerate_cycles, path_graph, random_tree, validate_tree,
    CycleSeq, Graph, Tree,
};
pub use linalg::{
    char_poly_tree, det_bareiss, eval_matrix_poly, integer_sqrt_exact, skew_char_poly, Matrix,
    Polynomial,
};
pub use orientation::{
    check_pfaffian, converse, is_nice_cycle, is_oddly_oriented, orient_c4_tree, orient_double,
    orient_layered, orient_lexicographic, skew_adjacency, Matching, OrientedGraph, PfaffianReport,
};
pub use scalar::{Real, Scalar};

/// Exact integer matrix.
pub type IntMatrix = Matrix<num_bigint::BigInt>;
/// Exact integer polynomial, constant term first.
pub type IntPolynomial = Polynomial<num_bigint::BigInt>;
/// Non-negative exact count.
pub type BigCount = num_bigint::BigUint;
/// Floating type for the trigonometric product formulas.
pub type Float = f64;
