use std::fmt;

/// Floating-point scalar the numeric code is generic over: `f32` or `f64`.
pub trait Scalar:
    num_traits::Float
    + num_traits::FloatConst
    + num_traits::FromPrimitive
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Converts an `f64` literal into the working scalar type.
pub(crate) fn cast<F: Scalar>(value: f64) -> F {
    F::from_f64(value).expect("finite f64 constant")
}

/// Reports a scalar as `f64` for error messages.
pub(crate) fn report<F: Scalar>(value: F) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}
