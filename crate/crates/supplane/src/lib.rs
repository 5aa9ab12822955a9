//! Exact decision procedures for strict linear separability.
//!
//! A finite set of nonzero vectors in `R^d` admits a *supporting plane* when
//! some hyperplane through the origin has every vector strictly on one side,
//! or equivalently when some linear functional is strictly positive on the
//! whole set. This crate decides that question over exact rational arithmetic
//! and returns a checkable certificate either way:
//!
//! * separable: a [`SeparatingFunctional`] whose value on each vector is
//!   positive;
//! * not separable: a [`FarkasWitness`], nonnegative weights (not all zero)
//!   whose weighted vector sum is exactly zero.
//!
//! The interesting special case of four vectors in `R^3` is decided by four
//! determinant sign evaluations; [`separability::decide`] routes each input
//! to the cheapest applicable procedure and every answer is verified against
//! the input before it is returned. The [`chem`] module applies the decision
//! to bond geometry: a carbon with four bonds is "enclosed" exactly when its
//! bond directions admit no supporting plane.

#![forbid(unsafe_code)]

pub mod chem;
pub mod exact;
pub mod separability;

pub use exact::{parse_decimal, Rational, Sign, Vec2, Vec3};
pub use separability::{
    decide, farkas_oracle, verify_certificate, FarkasWitness, SeparatingFunctional, VectorSet,
    Verdict,
};
