use num_traits::Zero;

use super::Error;
use crate::exact::{int, Rational, Vec2, Vec3};

/// A finite ordered list of vectors sharing one ambient dimension.
///
/// The list may be empty and may contain repeats or the zero vector; the
/// only structural invariant is uniform arity, checked at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorSet {
    dim: usize,
    vectors: Vec<Vec<Rational>>,
}

impl VectorSet {
    pub fn new(dim: usize, vectors: Vec<Vec<Rational>>) -> Result<VectorSet, Error> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for (index, vector) in vectors.iter().enumerate() {
            if vector.len() != dim {
                return Err(Error::DimensionMismatch {
                    index,
                    expected: dim,
                    found: vector.len(),
                });
            }
        }
        Ok(VectorSet { dim, vectors })
    }

    pub fn from_int_rows(dim: usize, rows: &[&[i64]]) -> Result<VectorSet, Error> {
        VectorSet::new(
            dim,
            rows.iter()
                .map(|row| row.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vector(&self, index: usize) -> &[Rational] {
        &self.vectors[index]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Rational]> {
        self.vectors.iter().map(|v| v.as_slice())
    }

    /// Index of the first zero vector, if any.
    pub fn first_zero(&self) -> Option<usize> {
        self.vectors
            .iter()
            .position(|v| v.iter().all(|c| c.is_zero()))
    }

    /// The vector at `index` as a [`Vec3`]. Panics unless `dim == 3`.
    pub fn vec3(&self, index: usize) -> Vec3 {
        Vec3::from_slice(self.vector(index))
    }

    /// The vector at `index` as a [`Vec2`]. Panics unless `dim == 2`.
    pub fn vec2(&self, index: usize) -> Vec2 {
        Vec2::from_slice(self.vector(index))
    }
}
