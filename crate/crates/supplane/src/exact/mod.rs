//! Exact scalar and small-vector arithmetic.
//!
//! Every quantity in this crate is an arbitrary-precision rational; no
//! floating point enters any decision. The predicates ([`sign_det3`],
//! [`orient2d`], [`angular_compare`]) return exact signs and orderings, so
//! callers never see rounding artifacts near degenerate configurations.

mod decimal;
mod predicates;
mod sign;
mod vec;

pub use decimal::{decimal_string, parse_decimal, DecimalError};
pub use predicates::{angular_compare, cross2, det3, orient2d, sign_det3, ZeroDirectionError};
pub use sign::Sign;
pub use vec::{Vec2, Vec3};

/// Exact scalar used throughout: an arbitrary-precision reduced fraction.
///
/// `num_rational::BigRational` keeps the denominator positive and the
/// fraction in lowest terms after every operation, and division by zero
/// panics rather than producing a NaN-like value.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from an integer pair. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Shorthand for a rational from an integer.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(value.into())
}
