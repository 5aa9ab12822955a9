use num_traits::{One, Zero};

use super::certificate::{FarkasWitness, SeparatingFunctional, Verdict};
use super::four3::{coplanar_reduce, pairwise_plane_check, theorem3_signs, FastVerdict, PairwiseCheck};
use super::planar::separable_2d;
use super::rank::{lift_functional, rank_and_basis, RankBasis};
use super::set::VectorSet;
use super::simplex::farkas_oracle;
use super::Error;
use crate::exact::{Rational, Sign};

/// Decides whether the set admits a functional strictly positive on every
/// vector, attaching a verified certificate when `want_certificate` is set.
///
/// Dispatch is by exact rank:
///
/// * the empty set is separable by convention, and a zero vector makes any
///   set inseparable outright (no functional is positive on it);
/// * rank 1 is a ray test on the signed multiples of the basis vector;
/// * rank 2 reduces to the planar circular-gap test in basis coordinates,
///   certificates are lifted back to the ambient space;
/// * four vectors spanning `R^3` go through the four-determinant test, with
///   the coplanar reduction when a triple degenerates;
/// * everything else goes to the linear-programming oracle, whose size
///   bounds surface as errors.
///
/// Every certificate returned has been checked against the input set.
pub fn decide(set: &VectorSet, want_certificate: bool) -> Result<Verdict, Error> {
    let verdict = decide_inner(set, want_certificate)?;
    let verdict = if want_certificate {
        verdict
    } else {
        verdict.strip_certificate()
    };
    if want_certificate && !super::verify_certificate(set, &verdict) {
        return Err(Error::InternalContract(
            "a certificate failed its final verification against the input",
        ));
    }
    Ok(verdict)
}

fn decide_inner(set: &VectorSet, want_certificate: bool) -> Result<Verdict, Error> {
    if set.is_empty() {
        return Ok(Verdict::Separable {
            functional: want_certificate.then(|| {
                let mut f = vec![Rational::zero(); set.dim()];
                f[0] = Rational::one();
                SeparatingFunctional::new(f)
            }),
        });
    }

    if let Some(index) = set.first_zero() {
        let witness = if want_certificate {
            let mut weights = vec![Rational::zero(); set.len()];
            weights[index] = Rational::one();
            Some(FarkasWitness::new(weights)?)
        } else {
            None
        };
        return Ok(Verdict::NotSeparable { witness });
    }

    let rb = rank_and_basis(set);
    match rb.rank {
        0 => Err(Error::InternalContract(
            "a nonempty set of nonzero vectors has positive rank",
        )),
        1 => ray_case(set, &rb, want_certificate),
        2 => planar_case(set, &rb, want_certificate),
        3 if set.len() == 4 && set.dim() == 3 => spanning_quadruple(set, want_certificate),
        _ => farkas_oracle(set),
    }
}

/// Rank 1: all vectors are nonzero multiples of one basis vector. They are
/// separable exactly when the multipliers share a sign; otherwise two
/// opposed vectors cancel.
fn ray_case(set: &VectorSet, rb: &RankBasis, want_certificate: bool) -> Result<Verdict, Error> {
    let signs: Vec<Sign> = rb
        .coordinates
        .iter()
        .map(|c| Sign::of(&c[0]))
        .collect();
    debug_assert!(signs.iter().all(|s| !s.is_zero()));

    let positive = signs.iter().filter(|s| s.is_positive()).count();
    if positive == signs.len() || positive == 0 {
        let functional = want_certificate.then(|| {
            let basis = set.vector(rb.basis[0]);
            let flip = if positive == 0 { -Rational::one() } else { Rational::one() };
            SeparatingFunctional::new(basis.iter().map(|c| c * &flip).collect())
        });
        return Ok(Verdict::Separable { functional });
    }

    let witness = if want_certificate {
        let pos = signs.iter().position(|s| s.is_positive()).expect("counted above");
        let neg = signs.iter().position(|s| s.is_negative()).expect("counted above");
        let mut weights = vec![Rational::zero(); set.len()];
        weights[pos] = -rb.coordinates[neg][0].clone();
        weights[neg] = rb.coordinates[pos][0].clone();
        Some(FarkasWitness::new(weights)?)
    } else {
        None
    };
    Ok(Verdict::NotSeparable { witness })
}

/// Rank 2: decide in basis coordinates, then pull certificates back. The
/// coordinate map is a linear isomorphism onto the span, so separability
/// transfers; a planar functional lifts through the Gram system and a
/// planar witness is already a witness on the original indices.
fn planar_case(set: &VectorSet, rb: &RankBasis, want_certificate: bool) -> Result<Verdict, Error> {
    let planar = VectorSet::new(2, rb.coordinates.clone())
        .expect("rank-2 coordinates are pairs");
    match separable_2d(&planar, want_certificate)? {
        Verdict::Separable { functional } => {
            let functional = match functional {
                None => None,
                Some(g) => {
                    let lifted = lift_functional(set, rb, g.coefficients())
                        .ok_or(Error::InternalContract("the rank basis is not independent"))?;
                    Some(SeparatingFunctional::new(lifted))
                }
            };
            Ok(Verdict::Separable { functional })
        }
        verdict @ Verdict::NotSeparable { .. } => Ok(verdict),
    }
}

/// Four vectors spanning `R^3`: the four-determinant test, with the
/// pairwise construction for separating functionals and the coplanar
/// reduction when a triple is dependent.
fn spanning_quadruple(set: &VectorSet, want_certificate: bool) -> Result<Verdict, Error> {
    let (signs, fast) = theorem3_signs(set)?;
    match fast {
        FastVerdict::Degenerate => {
            // Sign positions correspond to triples: the evaluation order is
            // (x1 x2 x3), (x1 x4 x2), (x3 x2 x4), (x1 x3 x4); a zero sign
            // pinpoints its dependent triple. Take the first in index order.
            let triples = [
                ([0, 1, 2], signs.signs[0]),
                ([0, 1, 3], signs.signs[1]),
                ([0, 2, 3], signs.signs[3]),
                ([1, 2, 3], signs.signs[2]),
            ];
            let (triple, _) = triples
                .iter()
                .find(|(_, s)| s.is_zero())
                .expect("the degenerate outcome has a zero sign");
            coplanar_reduce(set, *triple, want_certificate)
        }
        FastVerdict::NotSeparable => {
            if !want_certificate {
                return Ok(Verdict::NotSeparable { witness: None });
            }
            match farkas_oracle(set)? {
                verdict @ Verdict::NotSeparable { .. } => Ok(verdict),
                Verdict::Separable { .. } => Err(Error::InternalContract(
                    "the sign test found an enclosing quadruple the oracle separates",
                )),
            }
        }
        FastVerdict::Separable => {
            if !want_certificate {
                return Ok(Verdict::Separable { functional: None });
            }
            match pairwise_plane_check(set)? {
                PairwiseCheck::Separable { pair, side } => Ok(Verdict::Separable {
                    functional: Some(super::four3::build_functional_4x3(set, pair, side)?),
                }),
                PairwiseCheck::NotSeparable => Err(Error::InternalContract(
                    "the sign test separates a quadruple the pairwise check encloses",
                )),
            }
        }
    }
}
