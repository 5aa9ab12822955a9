use std::cmp::Ordering;
use thiserror::Error;

use super::{Rational, Sign, Vec2, Vec3};

/// Determinant of the 3x3 matrix with columns `a`, `b`, `c`, by cofactor
/// expansion along the first row. Exact.
pub fn det3(a: &Vec3, b: &Vec3, c: &Vec3) -> Rational {
    let m00 = &b.y * &c.z - &b.z * &c.y;
    let m01 = &a.y * &c.z - &a.z * &c.y;
    let m02 = &a.y * &b.z - &a.z * &b.y;
    &a.x * m00 - &b.x * m01 + &c.x * m02
}

/// Sign of `det3(a, b, c)`.
pub fn sign_det3(a: &Vec3, b: &Vec3, c: &Vec3) -> Sign {
    Sign::of(&det3(a, b, c))
}

/// Two-dimensional cross product `u.x * v.y - u.y * v.x`. Exact.
pub fn cross2(u: &Vec2, v: &Vec2) -> Rational {
    &u.x * &v.y - &u.y * &v.x
}

/// Orientation of the ordered pair `(u, v)`: positive when `v` lies
/// counterclockwise of `u` by less than a half turn, zero when the vectors
/// are parallel.
pub fn orient2d(u: &Vec2, v: &Vec2) -> Sign {
    Sign::of(&cross2(u, v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("the zero vector has no direction")]
pub struct ZeroDirectionError;

/// Compares two nonzero vectors by direction angle, measured
/// counterclockwise from the positive x-axis in `[0, 2*pi)`.
///
/// Returns `Equal` exactly when one vector is a positive multiple of the
/// other. No angle is ever computed: each vector is classified into the
/// half-plane `[0, pi)` or `[pi, 2*pi)`, and within a half-plane the
/// orientation of the pair settles the order. Antipodal vectors always land
/// in different half-planes, so a zero cross product within one half-plane
/// can only mean equal directions.
pub fn angular_compare(u: &Vec2, v: &Vec2) -> Result<Ordering, ZeroDirectionError> {
    if u.is_zero() || v.is_zero() {
        return Err(ZeroDirectionError);
    }
    let hu = half_plane(u);
    let hv = half_plane(v);
    if hu != hv {
        return Ok(hu.cmp(&hv));
    }
    Ok(match orient2d(u, v) {
        Sign::Positive => Ordering::Less,
        Sign::Zero => Ordering::Equal,
        Sign::Negative => Ordering::Greater,
    })
}

/// 0 for directions in `[0, pi)`, 1 for `[pi, 2*pi)`. The positive x-axis
/// belongs to the first half, the negative x-axis to the second.
fn half_plane(v: &Vec2) -> u8 {
    match Sign::of(&v.y) {
        Sign::Positive => 0,
        Sign::Negative => 1,
        Sign::Zero => {
            if Sign::of(&v.x).is_positive() {
                0
            } else {
                1
            }
        }
    }
}
