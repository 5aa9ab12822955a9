use num_traits::{One, Zero};

use super::certificate::{FarkasWitness, SeparatingFunctional, Verdict};
use super::set::VectorSet;
use super::Error;
use crate::exact::{Rational, Sign};

pub const MAX_ORACLE_DIM: usize = 8;
pub const MAX_ORACLE_VECTORS: usize = 64;

/// Decides separability by exact linear programming and always returns a
/// verified certificate.
///
/// The feasibility system is Farkas-dual to separation: weights `w >= 0`
/// with `sum_i w_i x_i = 0` and `sum_i w_i = 1` exist exactly when no
/// functional is strictly positive on all vectors. A phase-1 simplex over
/// the rationals settles feasibility; Bland's pivoting rule rules out
/// cycling. On the feasible outcome the weights themselves are the witness.
/// On the infeasible outcome the optimal duals `(y, t)` of the phase-1
/// program satisfy `y . x_i + t <= 0` for all `i` with `t > 0`, so `-y` is a
/// separating functional.
pub fn farkas_oracle(set: &VectorSet) -> Result<Verdict, Error> {
    let dim = set.dim();
    let k = set.len();
    if !(1..=MAX_ORACLE_DIM).contains(&dim) || !(1..=MAX_ORACLE_VECTORS).contains(&k) {
        return Err(Error::OracleBounds {
            vectors: k,
            dim,
        });
    }

    // Equality rows: one per coordinate (right-hand side 0) plus the
    // normalization row (right-hand side 1). Columns: k structural weights,
    // then one artificial per row. Artificials start basic; rows with zero
    // right-hand side are already feasible for them.
    let rows = dim + 1;
    let cols = k + rows;
    let mut tableau: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row = Vec::with_capacity(cols + 1);
            for i in 0..k {
                row.push(if r < dim {
                    set.vector(i)[r].clone()
                } else {
                    Rational::one()
                });
            }
            for a in 0..rows {
                row.push(if a == r {
                    Rational::one()
                } else {
                    Rational::zero()
                });
            }
            row.push(if r < dim { Rational::zero() } else { Rational::one() });
            row
        })
        .collect();

    // Reduced-cost row for the phase-1 objective (sum of artificials):
    // cost[j] - sum over rows of the column, with the running objective
    // value negated in the last slot.
    let mut objective = vec![Rational::zero(); cols + 1];
    for (j, slot) in objective.iter_mut().enumerate() {
        let mut acc = Rational::zero();
        for row in &tableau {
            acc += &row[j];
        }
        let cost = if (k..cols).contains(&j) {
            Rational::one()
        } else {
            Rational::zero()
        };
        *slot = cost - acc;
    }

    let mut basis: Vec<usize> = (k..cols).collect();
    let mut iterations = 0usize;
    let iteration_cap = 1000 * (cols + rows);

    loop {
        iterations += 1;
        if iterations > iteration_cap {
            return Err(Error::InternalContract(
                "simplex exceeded its iteration cap despite Bland's rule",
            ));
        }

        // Bland: entering column is the lowest-indexed one with negative
        // reduced cost.
        let entering = match (0..cols).find(|&j| Sign::of(&objective[j]).is_negative()) {
            Some(j) => j,
            None => break,
        };

        // Ratio test over rows with a positive pivot column entry; ties
        // break toward the lowest-indexed basic variable (Bland again).
        let mut leaving: Option<(usize, Rational)> = None;
        for r in 0..rows {
            if !Sign::of(&tableau[r][entering]).is_positive() {
                continue;
            }
            let ratio = &tableau[r][cols] / &tableau[r][entering];
            let better = match &leaving {
                None => true,
                Some((best_row, best_ratio)) => match ratio.cmp(best_ratio) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Equal => basis[r] < basis[*best_row],
                    std::cmp::Ordering::Greater => false,
                },
            };
            if better {
                leaving = Some((r, ratio));
            }
        }
        let (pivot_row, _) = leaving.ok_or(Error::InternalContract(
            "phase-1 objective is bounded below, yet no leaving row was found",
        ))?;

        pivot(&mut tableau, &mut objective, pivot_row, entering);
        basis[pivot_row] = entering;
    }

    // Optimal value of the artificial sum; its negation sits in the
    // objective row's right-hand slot.
    let optimum = -objective[cols].clone();
    let verdict = if optimum.is_zero() {
        let mut weights = vec![Rational::zero(); k];
        for (r, &b) in basis.iter().enumerate() {
            if b < k {
                weights[b] = tableau[r][cols].clone();
            }
        }
        Verdict::NotSeparable {
            witness: Some(FarkasWitness::new(weights)?),
        }
    } else {
        // Dual values: y_r = cost(artificial_r) - reduced_cost(artificial_r).
        // The normalization row's dual is t > 0; the coordinate rows' duals
        // make y . x_i + t <= 0, so -y is positive on every vector.
        let functional: Vec<Rational> = (0..dim)
            .map(|r| objective[k + r].clone() - Rational::one())
            .collect();
        Verdict::Separable {
            functional: Some(SeparatingFunctional::new(functional)),
        }
    };

    if !super::verify_certificate(set, &verdict) {
        return Err(Error::InternalContract(
            "oracle produced a certificate that fails verification",
        ));
    }
    Ok(verdict)
}

fn pivot(
    tableau: &mut [Vec<Rational>],
    objective: &mut [Rational],
    pivot_row: usize,
    entering: usize,
) {
    let divisor = tableau[pivot_row][entering].clone();
    for entry in tableau[pivot_row].iter_mut() {
        *entry /= &divisor;
    }
    let pivot_vec = tableau[pivot_row].clone();
    for (r, row) in tableau.iter_mut().enumerate() {
        if r == pivot_row || row[entering].is_zero() {
            continue;
        }
        let factor = row[entering].clone();
        for (entry, p) in row.iter_mut().zip(&pivot_vec) {
            if !p.is_zero() {
                *entry -= &factor * p;
            }
        }
    }
    if !objective[entering].is_zero() {
        let factor = objective[entering].clone();
        for (entry, p) in objective.iter_mut().zip(&pivot_vec) {
            if !p.is_zero() {
                *entry -= &factor * p;
            }
        }
    }
}
