//! Scalar trait bound for the generic numeric core.

use std::fmt::{Debug, Display};

/// Floating-point scalar the numeric core is generic over.
///
/// `f32` and `f64` satisfy this; the model stack uses the `f64` aliases
/// exported from the crate root.
pub trait Scalar:
    num_traits::Float + num_traits::NumAssign + Debug + Display + Send + Sync + 'static
{
    /// Lossy conversion from `f64` (used for literals and RNG draws).
    fn from_f64(x: f64) -> Self {
        num_traits::NumCast::from(x).expect("f64 literal representable in scalar type")
    }

    /// Lossy conversion to `f64` (used for reporting).
    fn to_f64(self) -> f64 {
        num_traits::NumCast::from(self).expect("scalar representable as f64")
    }

    fn from_usize(x: usize) -> Self {
        num_traits::NumCast::from(x).expect("usize representable in scalar type")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
