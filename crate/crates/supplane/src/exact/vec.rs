use num_traits::Zero;
use std::ops::{Add, Neg, Sub};

use super::{int, Rational};

/// Column vector in `R^3` with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vec3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Vec3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Vec3 {
        Vec3 { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Vec3 {
        Vec3::new(int(x), int(y), int(z))
    }

    pub fn zero() -> Vec3 {
        Vec3::from_ints(0, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn dot(&self, other: &Vec3) -> Rational {
        &self.x * &other.x + &self.y * &other.y + &self.z * &other.z
    }

    pub fn cross(&self, other: &Vec3) -> Vec3 {
        Vec3::new(
            &self.y * &other.z - &self.z * &other.y,
            &self.z * &other.x - &self.x * &other.z,
            &self.x * &other.y - &self.y * &other.x,
        )
    }

    pub fn scale(&self, factor: &Rational) -> Vec3 {
        Vec3::new(factor * &self.x, factor * &self.y, factor * &self.z)
    }

    pub fn coords(&self) -> [&Rational; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn to_coords(&self) -> Vec<Rational> {
        vec![self.x.clone(), self.y.clone(), self.z.clone()]
    }

    /// Builds a `Vec3` from an exact coordinate slice of length 3.
    pub fn from_slice(coords: &[Rational]) -> Vec3 {
        assert_eq!(coords.len(), 3, "Vec3 needs exactly 3 coordinates");
        Vec3::new(coords[0].clone(), coords[1].clone(), coords[2].clone())
    }
}

impl Add for &Vec3 {
    type Output = Vec3;

    fn add(self, rhs: &Vec3) -> Vec3 {
        Vec3::new(&self.x + &rhs.x, &self.y + &rhs.y, &self.z + &rhs.z)
    }
}

impl Sub for &Vec3 {
    type Output = Vec3;

    fn sub(self, rhs: &Vec3) -> Vec3 {
        Vec3::new(&self.x - &rhs.x, &self.y - &rhs.y, &self.z - &rhs.z)
    }
}

impl Neg for &Vec3 {
    type Output = Vec3;

    fn neg(self) -> Vec3 {
        Vec3::new(-&self.x, -&self.y, -&self.z)
    }
}

/// Column vector in `R^2` with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vec2 {
    pub x: Rational,
    pub y: Rational,
}

impl Vec2 {
    pub fn new(x: Rational, y: Rational) -> Vec2 {
        Vec2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Vec2 {
        Vec2::new(int(x), int(y))
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn dot(&self, other: &Vec2) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    /// Counterclockwise quarter turn.
    pub fn rot90_ccw(&self) -> Vec2 {
        Vec2::new(-&self.y, self.x.clone())
    }

    /// Clockwise quarter turn.
    pub fn rot90_cw(&self) -> Vec2 {
        Vec2::new(self.y.clone(), -&self.x)
    }

    pub fn from_slice(coords: &[Rational]) -> Vec2 {
        assert_eq!(coords.len(), 2, "Vec2 needs exactly 2 coordinates");
        Vec2::new(coords[0].clone(), coords[1].clone())
    }
}

impl Add for &Vec2 {
    type Output = Vec2;

    fn add(self, rhs: &Vec2) -> Vec2 {
        Vec2::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &Vec2 {
    type Output = Vec2;

    fn sub(self, rhs: &Vec2) -> Vec2 {
        Vec2::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Neg for &Vec2 {
    type Output = Vec2;

    fn neg(self) -> Vec2 {
        Vec2::new(-&self.x, -&self.y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_is_anticommutative() {
        let a = Vec3::from_ints(1, 2, 3);
        let b = Vec3::from_ints(-4, 5, 7);
        assert_eq!(a.cross(&b), -&b.cross(&a));
    }

    #[test]
    fn cross_is_orthogonal_to_factors() {
        let a = Vec3::from_ints(3, -1, 2);
        let b = Vec3::from_ints(5, 4, -6);
        let c = a.cross(&b);
        assert!(c.dot(&a).is_zero());
        assert!(c.dot(&b).is_zero());
    }

    #[test]
    fn quarter_turns_are_perpendicular() {
        let v = Vec2::from_ints(3, 4);
        assert!(v.rot90_ccw().dot(&v).is_zero());
        assert!(v.rot90_cw().dot(&v).is_zero());
        assert_eq!(v.rot90_ccw(), -&v.rot90_cw());
    }
}
