use num_traits::Zero;

use super::set::VectorSet;
use crate::exact::Rational;

/// Exact rank data for a vector set.
///
/// `basis` indexes a maximal linearly independent subfamily (always the
/// lexicographically first one), and `coordinates[i]` expresses vector `i`
/// in that basis: `x_i = sum_j coordinates[i][j] * x_basis[j]`, exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankBasis {
    pub rank: usize,
    pub basis: Vec<usize>,
    pub coordinates: Vec<Vec<Rational>>,
}

/// Computes rank, a basis subfamily, and exact coordinates by incremental
/// Gaussian elimination over the rationals.
pub fn rank_and_basis(set: &VectorSet) -> RankBasis {
    let dim = set.dim();
    // Reduced residuals with their pivot columns, and each residual's
    // expression over the basis vectors chosen so far.
    let mut echelon: Vec<Vec<Rational>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut expressions: Vec<Vec<Rational>> = Vec::new();
    let mut basis: Vec<usize> = Vec::new();
    let mut coordinates: Vec<Vec<Rational>> = Vec::with_capacity(set.len());

    for index in 0..set.len() {
        let mut residual: Vec<Rational> = set.vector(index).to_vec();
        let mut combo = vec![Rational::zero(); basis.len()];
        for row in 0..echelon.len() {
            let p = pivots[row];
            if residual[p].is_zero() {
                continue;
            }
            let factor = &residual[p] / &echelon[row][p];
            for col in 0..dim {
                let delta = &factor * &echelon[row][col];
                residual[col] -= delta;
            }
            for (acc, coeff) in combo.iter_mut().zip(&expressions[row]) {
                *acc += &factor * coeff;
            }
        }
        match residual.iter().position(|c| !c.is_zero()) {
            None => coordinates.push(combo),
            Some(pivot) => {
                // The residual equals x_index minus its projection onto the
                // current basis, so its expression gets coefficient 1 on the
                // newly adopted basis vector and -combo on the others.
                let mut expression: Vec<Rational> =
                    combo.iter().map(|c| -c).collect();
                expression.push(Rational::from_integer(1.into()));
                for earlier in &mut expressions {
                    earlier.push(Rational::zero());
                }
                let mut own = vec![Rational::zero(); basis.len()];
                own.push(Rational::from_integer(1.into()));
                coordinates.push(own);
                basis.push(index);
                echelon.push(residual);
                pivots.push(pivot);
                expressions.push(expression);
            }
        }
    }

    let rank = basis.len();
    for row in &mut coordinates {
        row.resize(rank, Rational::zero());
    }
    RankBasis {
        rank,
        basis,
        coordinates,
    }
}

/// Solves the square system `a * x = b` exactly. `None` means singular.
pub(crate) fn solve_square(
    mut a: Vec<Vec<Rational>>,
    mut b: Vec<Rational>,
) -> Option<Vec<Rational>> {
    let n = b.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &a[col][col];
            let (pivot_row, target_row) = if r < col {
                let (head, tail) = a.split_at_mut(col);
                (&tail[0], &mut head[r])
            } else {
                let (head, tail) = a.split_at_mut(r);
                (&head[col], &mut tail[0])
            };
            for (target, pivot_value) in target_row[col..].iter_mut().zip(&pivot_row[col..]) {
                let delta = &factor * pivot_value;
                *target -= delta;
            }
            let delta = &factor * &b[col];
            b[r] -= delta;
        }
    }
    Some(
        (0..n)
            .map(|i| &b[i] / &a[i][i])
            .collect(),
    )
}

/// Builds an ambient functional whose value on basis vector `j` is
/// `targets[j]`, as a combination of the basis vectors themselves.
///
/// Solving the Gram system keeps the functional inside the span, so for any
/// `x` with coordinates `c` in the basis, `f . x = targets . c`. `None` only
/// if the claimed basis is not independent.
pub(crate) fn lift_functional(
    set: &VectorSet,
    rank_basis: &RankBasis,
    targets: &[Rational],
) -> Option<Vec<Rational>> {
    let basis: Vec<&[Rational]> = rank_basis.basis.iter().map(|&i| set.vector(i)).collect();
    let r = basis.len();
    assert_eq!(targets.len(), r, "one target per basis vector");
    let gram: Vec<Vec<Rational>> = (0..r)
        .map(|j| (0..r).map(|l| dot(basis[j], basis[l])).collect())
        .collect();
    let lambda = solve_square(gram, targets.to_vec())?;
    let mut f = vec![Rational::zero(); set.dim()];
    for (l, coeff) in lambda.iter().enumerate() {
        for (acc, coord) in f.iter_mut().zip(basis[l]) {
            *acc += coeff * coord;
        }
    }
    Some(f)
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    fn reconstructs(set: &VectorSet, rb: &RankBasis) -> bool {
        (0..set.len()).all(|i| {
            let mut rebuilt = vec![Rational::zero(); set.dim()];
            for (j, coeff) in rb.coordinates[i].iter().enumerate() {
                for (acc, coord) in rebuilt.iter_mut().zip(set.vector(rb.basis[j])) {
                    *acc += coeff * coord;
                }
            }
            rebuilt == set.vector(i)
        })
    }

    #[test]
    fn full_rank_triple() {
        let set = VectorSet::from_int_rows(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let rb = rank_and_basis(&set);
        assert_eq!(rb.rank, 3);
        assert_eq!(rb.basis, vec![0, 1, 2]);
        assert!(reconstructs(&set, &rb));
    }

    #[test]
    fn dependent_vectors_get_coordinates() {
        let set = VectorSet::from_int_rows(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[2, -3, 0], &[0, 0, 0]],
        )
        .unwrap();
        let rb = rank_and_basis(&set);
        assert_eq!(rb.rank, 2);
        assert_eq!(rb.basis, vec![0, 1]);
        assert_eq!(rb.coordinates[2], vec![int(1), int(1)]);
        assert_eq!(rb.coordinates[3], vec![int(2), int(-3)]);
        assert_eq!(rb.coordinates[4], vec![int(0), int(0)]);
        assert!(reconstructs(&set, &rb));
    }

    #[test]
    fn rank_one_line() {
        let set = VectorSet::new(
            2,
            vec![
                vec![ratio(1, 2), ratio(-1, 3)],
                vec![int(-3), int(2)],
                vec![int(6), int(-4)],
            ],
        )
        .unwrap();
        let rb = rank_and_basis(&set);
        assert_eq!(rb.rank, 1);
        assert_eq!(rb.basis, vec![0]);
        assert_eq!(rb.coordinates[1], vec![int(-6)]);
        assert_eq!(rb.coordinates[2], vec![int(12)]);
        assert!(reconstructs(&set, &rb));
    }

    #[test]
    fn empty_set_has_rank_zero() {
        let set = VectorSet::new(3, vec![]).unwrap();
        let rb = rank_and_basis(&set);
        assert_eq!(rb.rank, 0);
        assert!(rb.basis.is_empty());
        assert!(rb.coordinates.is_empty());
    }

    #[test]
    fn basis_is_lexicographically_first() {
        // Vector 1 repeats vector 0, so the basis must skip to vector 2.
        let set =
            VectorSet::from_int_rows(3, &[&[1, 1, 0], &[2, 2, 0], &[0, 1, 1]]).unwrap();
        let rb = rank_and_basis(&set);
        assert_eq!(rb.basis, vec![0, 2]);
        assert!(reconstructs(&set, &rb));
    }

    #[test]
    fn solve_square_known_system() {
        let a = vec![
            vec![int(2), int(1)],
            vec![int(1), int(3)],
        ];
        let x = solve_square(a, vec![int(5), int(10)]).unwrap();
        assert_eq!(x, vec![int(1), int(3)]);
        let singular = vec![
            vec![int(1), int(2)],
            vec![int(2), int(4)],
        ];
        assert_eq!(solve_square(singular, vec![int(1), int(1)]), None);
    }

    #[test]
    fn lift_hits_targets_on_basis_vectors() {
        let set = VectorSet::from_int_rows(
            3,
            &[&[1, 2, 0], &[0, 1, 1], &[1, 3, 1], &[2, 4, 0]],
        )
        .unwrap();
        let rb = rank_and_basis(&set);
        assert_eq!(rb.rank, 2);
        let f = lift_functional(&set, &rb, &[int(3), int(-1)]).unwrap();
        let value = |i: usize| -> Rational {
            f.iter().zip(set.vector(i)).map(|(a, b)| a * b).sum()
        };
        assert_eq!(value(0), int(3));
        assert_eq!(value(1), int(-1));
        // Dependent vectors follow their coordinates: x2 = x0 + x1, x3 = 2 x0.
        assert_eq!(value(2), int(2));
        assert_eq!(value(3), int(6));
    }
}
