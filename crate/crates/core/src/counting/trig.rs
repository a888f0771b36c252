//! Trigonometric product formulas for paths, evaluated in floating point.
//!
//! Products are accumulated as sums of logarithms so large `n` neither
//! overflows nor underflows before the final `exp`.

use num_bigint::BigUint;
use num_traits::{FromPrimitive, ToPrimitive};

use crate::counting::{count_c4_tree, CountResult, Method};
use crate::error::{Error, Result};
use crate::graph::path_graph;
use crate::scalar::Real;

/// Relative agreement required between the floating 2×2×n product and
/// the exact count.
pub const PATH_RELATIVE_TOLERANCE: f64 = 1e-9;

/// Largest relative distance from the nearest integer accepted when
/// rounding the floating grid product.
pub const GRID_ROUNDING_TOLERANCE: f64 = 1e-6;

fn cast<F: Real>(v: usize) -> F {
    F::from(v).expect("index fits the float type")
}

/// `∏_{k=1}^{n} (2 + 4 cos²(kπ / (n+1)))`.
pub fn narumi_hosoya_product<F: Real>(n: usize) -> F {
    let step = F::PI() / cast::<F>(n + 1);
    let two = cast::<F>(2);
    let four = cast::<F>(4);
    (1..=n)
        .map(|k| {
            let c = (step * cast(k)).cos();
            (two + four * c * c).ln()
        })
        .fold(F::zero(), |a, b| a + b)
        .exp()
}

/// `2^{mn/2} ∏_{k=1}^{m} ∏_{l=1}^{n} (cos²(πk/(m+1)) + cos²(πl/(n+1)))^{1/4}`.
///
/// A factor vanishes only when both cosines do, which needs `m` and `n`
/// both odd; the product is then zero.
pub fn kasteleyn_product<F: Real>(m: usize, n: usize) -> F {
    let sm = F::PI() / cast::<F>(m + 1);
    let sn = F::PI() / cast::<F>(n + 1);
    let cos2 = |step: F, k: usize| {
        let c = (step * cast(k)).cos();
        c * c
    };
    let mut log_sum = F::zero();
    for k in 1..=m {
        let a = cos2(sm, k);
        for l in 1..=n {
            let term = a + cos2(sn, l);
            if term <= F::epsilon() {
                return F::zero();
            }
            log_sum = log_sum + term.ln();
        }
    }
    let quarter = F::one() / cast::<F>(4);
    let half_area = cast::<F>(m * n) / cast::<F>(2);
    (half_area * F::LN_2() + quarter * log_sum).exp()
}

/// `Pm(C4 × P_n)` through the trigonometric product, cross-checked against
/// the exact determinant route. The returned count is the exact one.
pub fn count_c4_path(n: usize) -> Result<CountResult> {
    if n == 0 {
        return Err(Error::InvalidSize("n must be at least 1".into()));
    }
    let exact = count_c4_tree(&path_graph(n)?)?;
    let float = narumi_hosoya_product::<f64>(n);
    let reference = exact.count.to_f64().unwrap_or(f64::INFINITY);
    let rel = (float - reference).abs() / reference;
    if rel.is_nan() || rel > PATH_RELATIVE_TOLERANCE {
        return Err(Error::NumericalConsistency(format!(
            "product {float:e} vs exact {} (relative error {rel:e})",
            exact.count
        )));
    }
    let mut res = CountResult::new(exact.count, Method::NarumiHosoya);
    res.float_value = Some(float);
    res.determinant = exact.determinant;
    res.matrix_dim = exact.matrix_dim;
    Ok(res)
}

/// `Pm(P_m × P_n)` from the floating product, rounded half away from
/// zero. Values beyond `2^53` cannot be rounded reliably in `f64` and are
/// refused.
pub fn count_grid_dimer(m: usize, n: usize) -> Result<CountResult> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidSize("grid sides must be at least 1".into()));
    }
    if (m * n) % 2 == 1 {
        let mut res = CountResult::new(BigUint::default(), Method::KasteleynGrid);
        res.note = Some("odd number of vertices".into());
        return Ok(res);
    }
    let value = kasteleyn_product::<f64>(m, n);
    if !value.is_finite() || value >= 2f64.powi(53) {
        return Err(Error::NumericalConsistency(format!(
            "product {value:e} for the {m}×{n} grid is beyond exact f64 integers"
        )));
    }
    let rounded = value.round();
    let slack = (value - rounded).abs() / rounded.max(1.0);
    if slack > GRID_ROUNDING_TOLERANCE {
        return Err(Error::NumericalConsistency(format!(
            "product {value} is {slack:e} (relative) from the nearest integer"
        )));
    }
    let count = BigUint::from_f64(rounded).expect("finite non-negative");
    let mut res = CountResult::new(count, Method::KasteleynGrid);
    res.float_value = Some(value);
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn narumi_hosoya_spot_values() {
        for (n, want) in [(1usize, 2u32), (2, 9), (3, 32)] {
            assert_eq!(count_c4_path(n).unwrap().count, want.into());
            assert!((narumi_hosoya_product::<f64>(n) - want as f64).abs() < 1e-9);
        }
        assert!(count_c4_path(0).is_err());
    }

    #[test]
    fn single_precision_is_close() {
        assert!((narumi_hosoya_product::<f32>(3) - 32.0).abs() < 1e-3);
        assert!((kasteleyn_product::<f32>(4, 4) - 36.0).abs() < 1e-2);
    }

    #[test]
    fn grid_spot_values() {
        for (m, n, want) in [
            (2, 2, 2u32),
            (2, 4, 5),
            (3, 4, 11),
            (4, 4, 36),
            (6, 6, 6728),
        ] {
            assert_eq!(
                count_grid_dimer(m, n).unwrap().count,
                want.into(),
                "{m}x{n}"
            );
        }
        assert_eq!(count_grid_dimer(3, 3).unwrap().count, 0u32.into());
        assert_eq!(kasteleyn_product::<f64>(3, 3), 0.0);
        assert!(count_grid_dimer(0, 2).is_err());
    }

    #[test]
    fn huge_grid_is_refused() {
        assert!(matches!(
            count_grid_dimer(12, 12),
            Err(Error::NumericalConsistency(_))
        ));
    }
}
