use super::certificate::{SeparatingFunctional, Verdict};
use super::set::VectorSet;
use super::simplex::farkas_oracle;
use super::Error;
use crate::exact::{angular_compare, orient2d, Sign, Vec2};

/// Decides whether a set of nonzero plane vectors fits in an open
/// half-plane through the origin.
///
/// Sorting the distinct directions counterclockwise splits the circle into
/// consecutive gaps; an open half-plane containing every direction exists
/// exactly when some gap exceeds a half turn. A gap of exactly a half turn
/// (an antipodal pair) does not qualify: the bounding line would pass
/// through both vectors. The gap comparison is the orientation sign of the
/// two bounding directions, so no angle is ever evaluated.
pub fn separable_2d(set: &VectorSet, want_certificate: bool) -> Result<Verdict, Error> {
    if set.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: set.dim(),
        });
    }
    if let Some(index) = set.first_zero() {
        return Err(Error::ZeroVector { index });
    }
    if set.is_empty() {
        return Ok(separable(
            Vec2::from_ints(1, 0),
            want_certificate,
        ));
    }

    let vectors: Vec<Vec2> = (0..set.len()).map(|i| set.vec2(i)).collect();
    let mut order: Vec<usize> = (0..vectors.len()).collect();
    order.sort_by(|&a, &b| {
        angular_compare(&vectors[a], &vectors[b]).expect("zero vectors were rejected above")
    });
    let mut directions: Vec<&Vec2> = Vec::with_capacity(order.len());
    for &i in &order {
        if let Some(last) = directions.last() {
            if angular_compare(last, &vectors[i]).unwrap().is_eq() {
                continue;
            }
        }
        directions.push(&vectors[i]);
    }

    if directions.len() == 1 {
        return Ok(separable(directions[0].clone(), want_certificate));
    }

    // Walk consecutive gaps, wrapping around. At most one gap can exceed a
    // half turn, and it shows up as a clockwise-oriented boundary pair.
    for j in 0..directions.len() {
        let gap_end = directions[j];
        let gap_start = directions[(j + 1) % directions.len()];
        if orient2d(gap_end, gap_start) == Sign::Negative {
            // All directions lie in the closed counterclockwise arc from
            // gap_start to gap_end, which spans less than a half turn; the
            // two inward normals of the arc's bounding rays add to a
            // functional positive on the whole arc, endpoints included.
            let normal = &gap_start.rot90_ccw() + &gap_end.rot90_cw();
            return Ok(separable(normal, want_certificate));
        }
    }

    if !want_certificate {
        return Ok(Verdict::NotSeparable { witness: None });
    }
    match farkas_oracle(set)? {
        verdict @ Verdict::NotSeparable { .. } => Ok(verdict),
        Verdict::Separable { .. } => Err(Error::InternalContract(
            "gap scan found no separating half-plane, yet the oracle separated",
        )),
    }
}

fn separable(direction: Vec2, want_certificate: bool) -> Verdict {
    Verdict::Separable {
        functional: want_certificate
            .then(|| SeparatingFunctional::new(vec![direction.x, direction.y])),
    }
}
