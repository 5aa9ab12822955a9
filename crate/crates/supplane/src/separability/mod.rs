//! Deciding strict linear separability with certificates.
//!
//! [`decide`] answers, for a finite list of vectors, whether some linear
//! functional is strictly positive on all of them. It dispatches on the rank
//! of the set: rank 1 and 2 reduce to a ray test and a planar circular-gap
//! test, four vectors spanning `R^3` go through the four-determinant fast
//! path, and everything else falls to [`farkas_oracle`], an exact rational
//! phase-1 simplex. Certificates are produced on request and verified
//! against the input before being returned; [`verify_certificate`] rechecks
//! any certificate from scratch.

mod certificate;
mod dispatch;
mod four3;
mod planar;
mod rank;
mod set;
mod simplex;

pub use certificate::{verify_certificate, FarkasWitness, SeparatingFunctional, Verdict};
pub use dispatch::decide;
pub use four3::{
    build_functional_4x3, coplanar_reduce, pairwise_plane_check, theorem3_signs, FastVerdict,
    PairwiseCheck, SignQuadruple,
};
pub use planar::separable_2d;
pub use rank::{rank_and_basis, RankBasis};
pub use set::VectorSet;
pub use simplex::{farkas_oracle, MAX_ORACLE_DIM, MAX_ORACLE_VECTORS};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vector {index} has {found} coordinates, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("vector sets need dimension at least 1")]
    ZeroDimension,
    #[error("expected vectors of dimension {expected}, got dimension {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("this procedure takes exactly 4 vectors in R^3, got {vectors} in R^{dim}")]
    WrongShape { vectors: usize, dim: usize },
    #[error("vector {index} is the zero vector")]
    ZeroVector { index: usize },
    #[error("vectors {i} and {j} span the same line")]
    ParallelPair { i: usize, j: usize },
    #[error("three of the four vectors are linearly dependent")]
    DegenerateQuadruple,
    #[error("weights must have a positive sum to normalize")]
    UnnormalizableWitness,
    #[error("the oracle handles dimension 1..=8 and 1..=64 vectors, got {vectors} in R^{dim}")]
    OracleBounds { vectors: usize, dim: usize },
    #[error("internal contract violated: {0}")]
    InternalContract(&'static str),
}
