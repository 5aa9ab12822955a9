use num_traits::Zero;

use super::certificate::{FarkasWitness, SeparatingFunctional, Verdict};
use super::rank::{lift_functional, rank_and_basis};
use super::set::VectorSet;
use super::simplex::farkas_oracle;
use super::Error;
use crate::exact::{int, ratio, sign_det3, Rational, Sign, Vec3};

/// The four determinant signs that decide a spanning quadruple, in the
/// fixed evaluation order `det(x1,x2,x3)`, `det(x1,x4,x2)`, `det(x3,x2,x4)`,
/// `det(x1,x3,x4)`.
///
/// The column orders are chosen so that the four signs are all equal
/// exactly when the origin lies inside the tetrahedron the vectors span,
/// which is the inseparable configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignQuadruple {
    pub signs: [Sign; 4],
}

impl SignQuadruple {
    pub fn any_zero(&self) -> bool {
        self.signs.iter().any(|s| s.is_zero())
    }

    pub fn all_same_nonzero(&self) -> bool {
        !self.signs[0].is_zero() && self.signs.iter().all(|&s| s == self.signs[0])
    }
}

/// Outcome of the four-determinant test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FastVerdict {
    Separable,
    NotSeparable,
    /// Some triple is linearly dependent; the caller must fall back to
    /// [`coplanar_reduce`].
    Degenerate,
}

/// Evaluates the four determinant signs for exactly four vectors in `R^3`.
pub fn theorem3_signs(set: &VectorSet) -> Result<(SignQuadruple, FastVerdict), Error> {
    check_shape(set)?;
    let x: Vec<Vec3> = (0..4).map(|i| set.vec3(i)).collect();
    let signs = [
        sign_det3(&x[0], &x[1], &x[2]),
        sign_det3(&x[0], &x[3], &x[1]),
        sign_det3(&x[2], &x[1], &x[3]),
        sign_det3(&x[0], &x[2], &x[3]),
    ];
    let quadruple = SignQuadruple { signs };
    let verdict = if quadruple.any_zero() {
        FastVerdict::Degenerate
    } else if quadruple.all_same_nonzero() {
        FastVerdict::NotSeparable
    } else {
        FastVerdict::Separable
    };
    Ok((quadruple, verdict))
}

/// Result of the exhaustive pairwise reference check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairwiseCheck {
    /// The plane spanned by the pair leaves the other two vectors strictly
    /// on the side with the given orientation sign.
    Separable { pair: (usize, usize), side: Sign },
    NotSeparable,
}

/// Reference procedure for spanning quadruples: for each of the six pairs,
/// tests whether both remaining vectors lie strictly on one side of the
/// plane the pair spans. Separability of a spanning quadruple is equivalent
/// to some pair passing. Quadratically many determinants instead of four;
/// kept as an oracle for the sign test.
pub fn pairwise_plane_check(set: &VectorSet) -> Result<PairwiseCheck, Error> {
    check_shape(set)?;
    let x: Vec<Vec3> = (0..4).map(|i| set.vec3(i)).collect();
    for i in 0..4 {
        for j in (i + 1)..4 {
            let (r, s) = remaining(i, j);
            let sign_r = sign_det3(&x[i], &x[j], &x[r]);
            let sign_s = sign_det3(&x[i], &x[j], &x[s]);
            if sign_r.is_zero() || sign_s.is_zero() {
                return Err(Error::DegenerateQuadruple);
            }
            if sign_r == sign_s {
                return Ok(PairwiseCheck::Separable {
                    pair: (i, j),
                    side: sign_r,
                });
            }
        }
    }
    Ok(PairwiseCheck::NotSeparable)
}

/// Builds a separating functional for a spanning quadruple from a passing
/// pair of [`pairwise_plane_check`].
///
/// The functional is `f(y) = eps * (u . y) + side * det(x_i, x_j, y)`. The
/// determinant term is positive on the two off-plane vectors and zero on
/// the pair; the correction `u` is built to have positive products with
/// both pair vectors, and `eps` is shrunk so the correction cannot overturn
/// the determinant term: half the smallest bound imposed by the off-plane
/// vectors, or 1 when they impose none.
pub fn build_functional_4x3(
    set: &VectorSet,
    pair: (usize, usize),
    side: Sign,
) -> Result<SeparatingFunctional, Error> {
    check_shape(set)?;
    let (i, j) = pair;
    if i >= j || j > 3 {
        return Err(Error::InternalContract(
            "the pair must be two distinct vector indices in increasing order",
        ));
    }
    if side.is_zero() {
        return Err(Error::InternalContract("the side sign must be nonzero"));
    }
    let x: Vec<Vec3> = (0..4).map(|k| set.vec3(k)).collect();
    let xi = &x[i];
    let xj = &x[j];
    let normal = xi.cross(xj);
    if normal.is_zero() {
        return Err(Error::ParallelPair { i, j });
    }

    // A direction with positive products against both pair vectors. Their
    // sum works unless the angle between them is obtuse; then u = B x_i +
    // (-p + delta) x_j with delta = (AB - p^2)/(-2p), which gives
    // u . x_i = (AB - p^2)/2 and u . x_j = B delta, both positive because
    // independence makes AB - p^2 > 0.
    let p = xi.dot(xj);
    let u = if !Sign::of(&p).is_negative() {
        xi + xj
    } else {
        let a = xi.dot(xi);
        let b = xj.dot(xj);
        let delta = (&a * &b - &p * &p) / (-&p * int(2));
        let xi_scaled = xi.scale(&b);
        let xj_scaled = xj.scale(&(delta - &p));
        &xi_scaled + &xj_scaled
    };

    let side_factor = int(i64::from(side.as_i8()));
    let oriented = normal.scale(&side_factor);
    let (r, s) = remaining(i, j);
    let mut epsilon: Option<Rational> = None;
    for &other in &[r, s] {
        let along_u = u.dot(&x[other]);
        if Sign::of(&along_u).is_negative() {
            let det_term = oriented.dot(&x[other]);
            let bound = det_term / -along_u;
            epsilon = Some(match epsilon {
                None => bound,
                Some(current) => current.min(bound),
            });
        }
    }
    let epsilon = match epsilon {
        None => int(1),
        Some(bound) => bound * ratio(1, 2),
    };

    let f = &u.scale(&epsilon) + &oriented;
    let candidate = SeparatingFunctional::new(f.to_coords());
    let verdict = Verdict::Separable {
        functional: Some(candidate),
    };
    if super::verify_certificate(set, &verdict) {
        if let Verdict::Separable {
            functional: Some(f),
        } = verdict
        {
            return Ok(f);
        }
    }

    // A wrong side sign from the caller lands here; the certified oracle
    // settles it or exposes the inconsistency.
    match farkas_oracle(set)? {
        Verdict::Separable {
            functional: Some(f),
        } => Ok(f),
        _ => Err(Error::InternalContract(
            "functional construction failed on a set the oracle calls inseparable",
        )),
    }
}

/// Decides a quadruple in which the given triple is linearly dependent, by
/// reducing to the plane the triple spans.
///
/// Preconditions: four vectors in `R^3` spanning all of `R^3`, none zero,
/// and the triple spanning exactly a plane. The in-plane vectors separate
/// in `R^3` exactly when they separate within the plane: any ambient
/// functional restricts to the plane, and a plane functional extends by a
/// multiple of the plane normal, large enough to make the off-plane vector
/// positive too. A plane witness lifts by giving the off-plane vector
/// weight zero.
pub fn coplanar_reduce(
    set: &VectorSet,
    triple: [usize; 3],
    want_certificate: bool,
) -> Result<Verdict, Error> {
    check_shape(set)?;
    if !(triple[0] < triple[1] && triple[1] < triple[2] && triple[2] < 4) {
        return Err(Error::InternalContract(
            "the triple must be three distinct vector indices in increasing order",
        ));
    }
    let off_plane = (0..4)
        .find(|i| !triple.contains(i))
        .expect("three distinct indices below 4 leave one out");

    let sub = VectorSet::new(3, triple.iter().map(|&i| set.vector(i).to_vec()).collect())
        .expect("three slices of a 3-dimensional set");
    let rb = rank_and_basis(&sub);
    if rb.rank == 3 {
        return Err(Error::InternalContract(
            "the triple is linearly independent, the planar reduction does not apply",
        ));
    }
    if rb.rank < 2 {
        return Err(Error::InternalContract(
            "the triple spans a line or less, the planar reduction does not apply",
        ));
    }

    let b1 = sub.vec3(rb.basis[0]);
    let b2 = sub.vec3(rb.basis[1]);
    let mut normal = b1.cross(&b2);
    let xq = set.vec3(off_plane);
    match Sign::of(&normal.dot(&xq)) {
        Sign::Zero => {
            return Err(Error::InternalContract(
                "the off-triple vector lies in the triple's plane, the set does not span R^3",
            ))
        }
        Sign::Negative => normal = -&normal,
        Sign::Positive => {}
    }

    let planar = VectorSet::new(2, rb.coordinates.clone())
        .expect("rank-2 coordinates are pairs");
    match super::planar::separable_2d(&planar, want_certificate)? {
        Verdict::Separable { functional } => {
            let functional = match functional {
                None => None,
                Some(g) => {
                    let in_plane = lift_functional(&sub, &rb, g.coefficients())
                        .ok_or(Error::InternalContract("the rank basis is not independent"))?;
                    let f_plane = Vec3::from_slice(&in_plane);
                    let trace = f_plane.dot(&xq);
                    let gain = normal.dot(&xq);
                    let mut mu = match Sign::of(&trace) {
                        Sign::Negative => -&trace / &gain,
                        _ => Rational::zero(),
                    };
                    mu += int(1);
                    let f = &f_plane + &normal.scale(&mu);
                    Some(SeparatingFunctional::new(f.to_coords()))
                }
            };
            let verdict = Verdict::Separable { functional };
            check_produced(set, &verdict, want_certificate)?;
            Ok(verdict)
        }
        Verdict::NotSeparable { witness } => {
            let witness = match witness {
                None => None,
                Some(w) => {
                    let mut weights = vec![Rational::zero(); 4];
                    for (m, &original) in triple.iter().enumerate() {
                        weights[original] = w.weights()[m].clone();
                    }
                    Some(FarkasWitness::new(weights)?)
                }
            };
            let verdict = Verdict::NotSeparable { witness };
            check_produced(set, &verdict, want_certificate)?;
            Ok(verdict)
        }
    }
}

fn check_produced(set: &VectorSet, verdict: &Verdict, want_certificate: bool) -> Result<(), Error> {
    if want_certificate && !super::verify_certificate(set, verdict) {
        return Err(Error::InternalContract(
            "planar reduction produced a certificate that fails verification",
        ));
    }
    Ok(())
}

fn check_shape(set: &VectorSet) -> Result<(), Error> {
    if set.dim() != 3 || set.len() != 4 {
        return Err(Error::WrongShape {
            vectors: set.len(),
            dim: set.dim(),
        });
    }
    Ok(())
}

fn remaining(i: usize, j: usize) -> (usize, usize) {
    let mut others = (0..4).filter(|&k| k != i && k != j);
    let r = others.next().expect("two indices remain");
    let s = others.next().expect("two indices remain");
    (r, s)
}
