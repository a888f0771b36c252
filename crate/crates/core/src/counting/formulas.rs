//! Closed forms for `C4 × T`, `P4 × T` and `P3 × T`.
//!
//! Each formula is a product over the adjacency spectrum `{θ}` of the
//! tree. Since `A(T)` is symmetric, `∏ f(θ) = det f(A(T))` for a
//! polynomial `f`, which keeps everything in exact integers:
//!
//! | product            | matrix                 | count                 |
//! |--------------------|------------------------|-----------------------|
//! | `C4 × T`           | `2I + A²`              | `det`                 |
//! | `P4 × T`           | `I + 3A² + A⁴`         | `√det`                |
//! | `P3 × T` (T has PM)| `2I + A²`              | `√det`                |
//!
//! The square roots are exact: the tree spectrum is symmetric about zero,
//! so the full-spectrum product is the square of the product over
//! non-negative eigenvalues (and when `T` has a perfect matching, zero is
//! not an eigenvalue).

use num_bigint::{BigInt, Sign};

use crate::counting::{has_perfect_matching, CountResult, Method};
use crate::error::{Error, Result};
use crate::graph::Tree;
use crate::linalg::{integer_sqrt_exact, Matrix};

fn spectral_det(t: &Tree, coeffs: &[i64]) -> BigInt {
    let a = Matrix::<BigInt>::adjacency(t.graph());
    let coeffs: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
    a.eval_poly(&coeffs).det_bareiss()
}

/// `Pm(C4 × T) = ∏_j (2 + θ_j²) = det(2I + A(T)²)`.
pub fn count_c4_tree(t: &Tree) -> Result<CountResult> {
    let det = spectral_det(t, &[2, 0, 1]);
    let count = match det.sign() {
        Sign::Plus => det.magnitude().clone(),
        _ => {
            return Err(Error::Internal(format!(
                "det(2I + A²) = {det} is not positive"
            )))
        }
    };
    Ok(CountResult::new(count, Method::FormulaC4T).with_determinant(t.vertex_count(), det))
}

/// `Pm(P4 × T) = ∏_{α ≥ 0} (1 + 3α² + α⁴) = √det(I + 3A(T)² + A(T)⁴)`.
pub fn count_p4_tree(t: &Tree) -> Result<CountResult> {
    let det = spectral_det(t, &[1, 0, 3, 0, 1]);
    let count = integer_sqrt_exact(&det).map_err(|e| {
        Error::Internal(format!(
            "det(I + 3A² + A⁴) must be a square for a tree: {e}"
        ))
    })?;
    Ok(CountResult::new(count, Method::FormulaP4T).with_determinant(t.vertex_count(), det))
}

/// `Pm(P3 × T) = ∏_{α > 0} (2 + α²) = √det(2I + A(T)²)` for a tree with a
/// perfect matching. Trees without one have no known closed form and
/// are rejected.
pub fn count_p3_tree(t: &Tree) -> Result<CountResult> {
    if !has_perfect_matching(t.graph())? {
        return Err(Error::Precondition(
            "the P3 × T formula needs a tree with a perfect matching; \
             no closed form is known otherwise, use the brute-force route"
                .into(),
        ));
    }
    let det = spectral_det(t, &[2, 0, 1]);
    let count = integer_sqrt_exact(&det).map_err(|e| {
        Error::Internal(format!(
            "det(2I + A²) must be a square for a tree with a perfect matching: {e}"
        ))
    })?;
    Ok(CountResult::new(count, Method::FormulaP3T).with_determinant(t.vertex_count(), det))
}
