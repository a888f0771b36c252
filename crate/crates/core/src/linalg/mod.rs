//! Exact linear algebra over a generic scalar ring: fraction-free
//! determinants, characteristic polynomials, and matrix polynomials.
//!
//! Nothing here rounds. The counting formulas that the literature states
//! as products over (irrational) adjacency eigenvalues are evaluated as
//! determinants of integer matrix polynomials instead, e.g.
//! `∏ (2 + θ²) = det(2I + A²)` for a symmetric `A` with spectrum `{θ}`.

mod matrix;
mod poly;

pub use matrix::Matrix;
pub use poly::Polynomial;

use num_bigint::{BigInt, BigUint, Sign};

use crate::error::{Error, Result};
use crate::graph::{validate_tree, Tree};
use crate::orientation::{skew_adjacency, OrientedGraph};
use crate::scalar::Scalar;

pub fn det_bareiss<T: Scalar>(m: &Matrix<T>) -> T {
    m.det_bareiss()
}

pub fn eval_matrix_poly<T: Scalar>(a: &Matrix<T>, coeffs: &[T]) -> Matrix<T> {
    a.eval_poly(coeffs)
}

/// `φ(T, x) = det(xI − A(T))` by the leaf recursion
/// `φ(F) = x·φ(F − v) − φ(F − v − u)` for a leaf `v` with neighbour `u`.
///
/// The recursion is run bottom-up over the rooted tree: for each vertex
/// we keep `φ` of its subtree and of its subtree with the vertex removed,
/// so every polynomial is built once.
pub fn char_poly_tree<T: Scalar>(t: &Tree) -> Polynomial<T> {
    let n = t.vertex_count();
    let mut full: Vec<Option<Polynomial<T>>> = vec![None; n];
    let mut without_root: Vec<Option<Polynomial<T>>> = vec![None; n];
    for &v in t.bfs_order().iter().rev() {
        // prod = ∏ φ(T_c), sum = Σ_c φ(T_c − c) ∏_{c' ≠ c} φ(T_c')
        let mut prod = Polynomial::one();
        let mut sum = Polynomial::zero();
        for c in t.children(v) {
            let fc = full[c].take().expect("children are finished first");
            let gc = without_root[c].take().expect("children are finished first");
            sum = &(&sum * &fc) + &(&prod * &gc);
            prod = &prod * &fc;
        }
        full[v] = Some(&prod.shift() - &sum);
        without_root[v] = Some(prod);
    }
    full[t.root()].take().expect("root is processed last")
}

/// `det(xI − A(Tᵉ))` for an orientation of a tree.
pub fn skew_char_poly<T: Scalar>(d: &OrientedGraph) -> Result<Polynomial<T>> {
    validate_tree(d.base().clone())?;
    Ok(skew_adjacency::<T>(d).char_poly())
}

/// The `k ≥ 0` with `k² = v`, refusing to round.
pub fn integer_sqrt_exact(v: &BigInt) -> Result<BigUint> {
    let mag = match v.sign() {
        Sign::Minus => return Err(Error::Domain(format!("square root of negative value {v}"))),
        _ => v.magnitude(),
    };
    let k = mag.sqrt();
    if &k * &k == *mag {
        Ok(k)
    } else {
        Err(Error::NotPerfectSquare(v.to_string()))
    }
}
