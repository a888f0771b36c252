//! Numeric bounds shared by the generic matrix, polynomial and
//! trigonometric code.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{Float, FloatConst, Num};

/// A commutative ring element usable in [`crate::Matrix`] and
/// [`crate::Polynomial`].
///
/// Fraction-free elimination divides only when the quotient is exact, so
/// integer types (`i64`, `i128`, `BigInt`) give exact results and field
/// types (`f64`, `f32`) give ordinary floating-point ones. Fixed-width
/// integers are the caller's responsibility to keep from overflowing.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> {}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> {}

/// Floating type for the trigonometric product formulas.
pub trait Real: Float + FloatConst + Debug {}

impl<T> Real for T where T: Float + FloatConst + Debug {}
