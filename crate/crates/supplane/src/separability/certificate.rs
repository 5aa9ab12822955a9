use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Error, VectorSet};
use crate::exact::{Rational, Sign};

/// A linear functional claimed to be strictly positive on every vector of a
/// set: the coefficient vector of `f(y) = c . y`.
///
/// Construction rescales by a positive rational so the coefficients become
/// coprime integers; the sign pattern is untouched, so the represented open
/// halfspace is exactly the one handed in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatingFunctional {
    coefficients: Vec<Rational>,
}

impl SeparatingFunctional {
    pub fn new(coefficients: Vec<Rational>) -> SeparatingFunctional {
        SeparatingFunctional {
            coefficients: to_primitive_integers(coefficients),
        }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn evaluate(&self, vector: &[Rational]) -> Rational {
        assert_eq!(
            self.coefficients.len(),
            vector.len(),
            "functional arity mismatch"
        );
        dot(&self.coefficients, vector)
    }
}

/// Nonnegative weights, not all zero, whose weighted sum of the set's
/// vectors is exactly zero. The existence of such weights is what rules out
/// a separating functional.
///
/// Construction rescales so the weights sum to 1; a nonpositive sum cannot
/// be normalized and is rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarkasWitness {
    weights: Vec<Rational>,
}

impl FarkasWitness {
    pub fn new(weights: Vec<Rational>) -> Result<FarkasWitness, Error> {
        let sum: Rational = weights.iter().sum();
        if !Sign::of(&sum).is_positive() {
            return Err(Error::UnnormalizableWitness);
        }
        Ok(FarkasWitness {
            weights: weights.into_iter().map(|w| w / &sum).collect(),
        })
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }
}

/// Outcome of a separability decision, with the certificate when requested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Separable {
        functional: Option<SeparatingFunctional>,
    },
    NotSeparable {
        witness: Option<FarkasWitness>,
    },
}

impl Verdict {
    pub fn is_separable(&self) -> bool {
        matches!(self, Verdict::Separable { .. })
    }

    pub fn functional(&self) -> Option<&SeparatingFunctional> {
        match self {
            Verdict::Separable { functional } => functional.as_ref(),
            Verdict::NotSeparable { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&FarkasWitness> {
        match self {
            Verdict::NotSeparable { witness } => witness.as_ref(),
            Verdict::Separable { .. } => None,
        }
    }

    pub(crate) fn strip_certificate(self) -> Verdict {
        match self {
            Verdict::Separable { .. } => Verdict::Separable { functional: None },
            Verdict::NotSeparable { .. } => Verdict::NotSeparable { witness: None },
        }
    }
}

/// Checks a verdict's certificate against the set it claims to describe.
///
/// Every condition is rechecked from scratch in exact arithmetic: a
/// functional must be nonzero, match the ambient dimension, and evaluate
/// strictly positive on every vector; a witness must match the vector
/// count, be nonnegative with at least one positive weight, and combine the
/// vectors to exactly zero. A verdict carrying no certificate verifies
/// nothing and returns `false`.
pub fn verify_certificate(set: &VectorSet, verdict: &Verdict) -> bool {
    match verdict {
        Verdict::Separable {
            functional: Some(f),
        } => {
            let c = f.coefficients();
            c.len() == set.dim()
                && c.iter().any(|x| !x.is_zero())
                && set.iter().all(|v| Sign::of(&dot(c, v)).is_positive())
        }
        Verdict::NotSeparable { witness: Some(w) } => {
            let weights = w.weights();
            if weights.len() != set.len() {
                return false;
            }
            if weights.iter().any(|x| Sign::of(x).is_negative()) {
                return false;
            }
            if weights.iter().all(|x| x.is_zero()) {
                return false;
            }
            let mut sum = vec![Rational::zero(); set.dim()];
            for (weight, vector) in weights.iter().zip(set.iter()) {
                for (acc, coord) in sum.iter_mut().zip(vector) {
                    *acc += weight * coord;
                }
            }
            sum.iter().all(|c| c.is_zero())
        }
        _ => false,
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Rescales by a positive rational to coprime integers. The zero vector is
/// returned unchanged.
fn to_primitive_integers(values: Vec<Rational>) -> Vec<Rational> {
    let mut denom_lcm = BigInt::one();
    for v in &values {
        denom_lcm = denom_lcm.lcm(v.denom());
    }
    let mut numer_gcd = BigInt::zero();
    for v in &values {
        numer_gcd = numer_gcd.gcd(&(v.numer() * (&denom_lcm / v.denom())));
    }
    if numer_gcd.is_zero() {
        return values;
    }
    let factor = Rational::new(denom_lcm, numer_gcd);
    values.into_iter().map(|v| v * &factor).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    fn functional(coeffs: &[Rational]) -> Verdict {
        Verdict::Separable {
            functional: Some(SeparatingFunctional::new(coeffs.to_vec())),
        }
    }

    fn witness(weights: &[Rational]) -> Verdict {
        Verdict::NotSeparable {
            witness: Some(FarkasWitness::new(weights.to_vec()).unwrap()),
        }
    }

    #[test]
    fn functional_normalizes_to_coprime_integers() {
        let f = SeparatingFunctional::new(vec![ratio(1, 2), ratio(1, 3), int(0)]);
        assert_eq!(f.coefficients(), &[int(3), int(2), int(0)]);
        let f = SeparatingFunctional::new(vec![int(-2), int(-4)]);
        assert_eq!(f.coefficients(), &[int(-1), int(-2)]);
        let f = SeparatingFunctional::new(vec![int(0), int(0)]);
        assert_eq!(f.coefficients(), &[int(0), int(0)]);
    }

    #[test]
    fn witness_normalizes_to_unit_sum() {
        let w = FarkasWitness::new(vec![int(2), int(2)]).unwrap();
        assert_eq!(w.weights(), &[ratio(1, 2), ratio(1, 2)]);
        let w = FarkasWitness::new(vec![int(0), int(3), int(1)]).unwrap();
        assert_eq!(w.weights(), &[int(0), ratio(3, 4), ratio(1, 4)]);
        assert_eq!(
            FarkasWitness::new(vec![int(0), int(0)]).unwrap_err(),
            Error::UnnormalizableWitness
        );
    }

    #[test]
    fn verifies_a_valid_functional() {
        let set = VectorSet::from_int_rows(3, &[&[1, 0, 0], &[2, 0, 0]]).unwrap();
        let set_half =
            VectorSet::new(3, vec![vec![ratio(1, 2), int(0), int(0)]]).unwrap();
        assert!(verify_certificate(
            &set,
            &functional(&[int(1), int(0), int(0)])
        ));
        assert!(verify_certificate(
            &set_half,
            &functional(&[int(1), int(0), int(0)])
        ));
    }

    #[test]
    fn rejects_functional_violations() {
        let set = VectorSet::from_int_rows(3, &[&[1, 0, 0], &[0, 0, 1]]).unwrap();
        // Zero value on the second vector.
        assert!(!verify_certificate(
            &set,
            &functional(&[int(1), int(0), int(0)])
        ));
        // All-zero functional.
        assert!(!verify_certificate(
            &set,
            &functional(&[int(0), int(0), int(0)])
        ));
        // Arity mismatch.
        assert!(!verify_certificate(&set, &functional(&[int(1), int(1)])));
        // Missing certificate.
        assert!(!verify_certificate(
            &set,
            &Verdict::Separable { functional: None }
        ));
    }

    #[test]
    fn verifies_a_valid_witness() {
        let set = VectorSet::from_int_rows(3, &[&[1, 0, 0], &[-1, 0, 0], &[0, 0, 1]]).unwrap();
        assert!(verify_certificate(
            &set,
            &witness(&[ratio(1, 2), ratio(1, 2), int(0)])
        ));
    }

    #[test]
    fn rejects_witness_violations() {
        let set = VectorSet::from_int_rows(3, &[&[1, 0, 0], &[-1, 0, 0], &[0, 0, 1]]).unwrap();
        // Combination is nonzero.
        assert!(!verify_certificate(
            &set,
            &witness(&[ratio(1, 2), ratio(1, 4), ratio(1, 4)])
        ));
        // Arity mismatch.
        assert!(!verify_certificate(&set, &witness(&[ratio(1, 2), ratio(1, 2)])));
        // Negative weight, even though the combination is zero.
        let with_zero =
            VectorSet::from_int_rows(3, &[&[1, 0, 0], &[-1, 0, 0], &[0, 0, 0]]).unwrap();
        let bad = FarkasWitness::new(vec![int(2), int(2), int(-1)]).unwrap();
        assert!(!verify_certificate(
            &with_zero,
            &Verdict::NotSeparable { witness: Some(bad) }
        ));
        // Missing certificate.
        assert!(!verify_certificate(
            &set,
            &Verdict::NotSeparable { witness: None }
        ));
    }
}
