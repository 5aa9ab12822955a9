//! Acceptance suite. Each criterion is one test; the harness emits one
//! pass/fail line per criterion, and a run with --nocapture also shows the
//! case counts and timings printed on success.

use std::time::Instant;

use supplane::chem;
use supplane::exact::{int, ratio, Rational};
use supplane::separability::{
    decide, farkas_oracle, pairwise_plane_check, separable_2d, theorem3_signs,
    verify_certificate, FastVerdict, PairwiseCheck, VectorSet, Verdict,
};

/// The reproducible generator used by the randomized criteria: a 64-bit
/// linear congruential recurrence; each draw is the upper 32 bits.
struct Lcg {
    state: u64,
}

impl Lcg {
    fn new(seed: u64) -> Lcg {
        Lcg { state: seed }
    }

    fn draw(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.state >> 32) as u32
    }

    fn coordinate(&mut self, range: i64) -> i64 {
        let span = 2 * (range as u64) + 1;
        (u64::from(self.draw()) % span) as i64 - range
    }
}

fn set3(rows: &[[i64; 3]]) -> VectorSet {
    let vectors = rows
        .iter()
        .map(|row| row.iter().map(|&c| int(c)).collect())
        .collect();
    VectorSet::new(3, vectors).expect("rows are 3-dimensional")
}

fn random_tuple(lcg: &mut Lcg, range: i64) -> [[i64; 3]; 4] {
    let mut rows = [[0i64; 3]; 4];
    for row in &mut rows {
        for coord in row.iter_mut() {
            *coord = lcg.coordinate(range);
        }
    }
    rows
}

fn grid_points() -> Vec<[i64; 3]> {
    let mut points = Vec::with_capacity(27);
    for x in -1..=1 {
        for y in -1..=1 {
            for z in -1..=1 {
                points.push([x, y, z]);
            }
        }
    }
    points
}

#[test]
fn criterion_1_exhaustive_grid_oracle_agreement() {
    let start = Instant::now();
    let grid = grid_points();
    let mut checked = 0u64;
    for a in 0..27 {
        for b in 0..27 {
            for c in 0..27 {
                for d in 0..27 {
                    let set = set3(&[grid[a], grid[b], grid[c], grid[d]]);
                    let fast = decide(&set, false).expect("decide in bounds");
                    let oracle = farkas_oracle(&set).expect("oracle in bounds");
                    assert_eq!(
                        fast.is_separable(),
                        oracle.is_separable(),
                        "disagreement on tuple {:?}",
                        [grid[a], grid[b], grid[c], grid[d]]
                    );
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 531_441);
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 300,
        "grid sweep took {elapsed:.1?}, budget is 5 minutes"
    );
    println!("criterion 1: PASS - {checked} grid tuples agree with the oracle in {elapsed:.1?}");
}

#[test]
fn criterion_2_randomized_agreement_with_certificates() {
    let start = Instant::now();
    let mut lcg = Lcg::new(20260817);
    let trials = 100_000u64;
    for _ in 0..trials {
        let rows = random_tuple(&mut lcg, 9);
        let set = set3(&rows);
        let fast = decide(&set, true).expect("decide in bounds");
        let oracle = farkas_oracle(&set).expect("oracle in bounds");
        assert_eq!(
            fast.is_separable(),
            oracle.is_separable(),
            "disagreement on tuple {rows:?}"
        );
        assert!(
            verify_certificate(&set, &fast),
            "decide certificate failed on {rows:?}"
        );
        assert!(
            verify_certificate(&set, &oracle),
            "oracle certificate failed on {rows:?}"
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 120,
        "randomized sweep took {elapsed:.1?}, budget is 2 minutes"
    );
    println!("criterion 2: PASS - {trials} random tuples, all certificates verify, in {elapsed:.1?}");
}

#[test]
fn criterion_3_sign_pattern_rule_on_nondegenerate_grid() {
    let start = Instant::now();
    let grid = grid_points();
    let mut nondegenerate = 0u64;
    for a in 0..27 {
        for b in 0..27 {
            for c in 0..27 {
                for d in 0..27 {
                    let set = set3(&[grid[a], grid[b], grid[c], grid[d]]);
                    let (signs, fast) = theorem3_signs(&set).expect("shape is 4 by 3");
                    if signs.any_zero() {
                        assert_eq!(fast, FastVerdict::Degenerate);
                        continue;
                    }
                    nondegenerate += 1;
                    let oracle = farkas_oracle(&set).expect("oracle in bounds");
                    let all_equal = signs.all_same_nonzero();
                    assert_eq!(
                        all_equal,
                        !oracle.is_separable(),
                        "sign pattern disagrees with the oracle on {:?}",
                        [grid[a], grid[b], grid[c], grid[d]]
                    );
                    let pairwise = pairwise_plane_check(&set).expect("tuple is nondegenerate");
                    let pairwise_separable = matches!(pairwise, PairwiseCheck::Separable { .. });
                    assert_eq!(
                        pairwise_separable,
                        oracle.is_separable(),
                        "six-pair check disagrees with the oracle on {:?}",
                        [grid[a], grid[b], grid[c], grid[d]]
                    );
                }
            }
        }
    }
    assert!(nondegenerate > 0);
    let elapsed = start.elapsed();
    println!(
        "criterion 3: PASS - {nondegenerate} nondegenerate tuples match the all-signs-equal rule and six-pair check in {elapsed:.1?}"
    );
}

/// Independent oracle for the planar test: a set of nonzero directions fits
/// in an open halfplane iff some relabelling sweeps counterclockwise
/// through a total angle below a half turn. A sequence qualifies when every
/// member sits in the closed-start, open-end half turn starting at the
/// first vector, in nondecreasing angular order; both conditions reduce to
/// integer cross and dot product signs.
fn relabelling_brute_force(dirs: &[(i64, i64)]) -> bool {
    if dirs.len() <= 1 {
        return true;
    }
    let mut order: Vec<usize> = (0..dirs.len()).collect();
    search_orders(&mut order, 0, dirs)
}

fn search_orders(order: &mut Vec<usize>, at: usize, dirs: &[(i64, i64)]) -> bool {
    if at == order.len() {
        return sweep_is_valid(order, dirs);
    }
    for pick in at..order.len() {
        order.swap(at, pick);
        let found = search_orders(order, at + 1, dirs);
        order.swap(at, pick);
        if found {
            return true;
        }
    }
    false
}

fn sweep_is_valid(order: &[usize], dirs: &[(i64, i64)]) -> bool {
    let first = dirs[order[0]];
    for &index in order {
        let v = dirs[index];
        let cross = first.0 * v.1 - first.1 * v.0;
        let dot = first.0 * v.0 + first.1 * v.1;
        if !(cross > 0 || (cross == 0 && dot > 0)) {
            return false;
        }
    }
    order.windows(2).all(|pair| {
        let a = dirs[pair[0]];
        let b = dirs[pair[1]];
        a.0 * b.1 - a.1 * b.0 >= 0
    })
}

#[test]
fn criterion_4_planar_gap_test_matches_relabelling_criterion() {
    let start = Instant::now();
    let mut directions = Vec::new();
    for x in -2i64..=2 {
        for y in -2i64..=2 {
            if x != 0 || y != 0 {
                directions.push((x, y));
            }
        }
    }
    assert_eq!(directions.len(), 24);

    fn explore(
        directions: &[(i64, i64)],
        start_at: usize,
        stack: &mut Vec<(i64, i64)>,
        checked: &mut u64,
    ) {
        let rows: Vec<Vec<Rational>> = stack
            .iter()
            .map(|&(x, y)| vec![int(x), int(y)])
            .collect();
        let set = VectorSet::new(2, rows).expect("rows are 2-dimensional");
        let verdict = separable_2d(&set, false).expect("no zero directions");
        assert_eq!(
            verdict.is_separable(),
            relabelling_brute_force(stack),
            "gap test disagrees with relabelling brute force on {stack:?}"
        );
        *checked += 1;
        if stack.len() == 6 {
            return;
        }
        for next in start_at..directions.len() {
            stack.push(directions[next]);
            explore(directions, next, stack, checked);
            stack.pop();
        }
    }

    let mut checked = 0u64;
    explore(&directions, 0, &mut Vec::new(), &mut checked);
    assert_eq!(checked, 593_775);
    let elapsed = start.elapsed();
    println!(
        "criterion 4: PASS - {checked} direction multisets agree with the relabelling criterion in {elapsed:.1?}"
    );
}

#[test]
fn criterion_5_invariance_suite() {
    let start = Instant::now();
    let trials = 10_000u64;

    // Positive per-vector scaling.
    let mut lcg = Lcg::new(51);
    for _ in 0..trials {
        let rows = random_tuple(&mut lcg, 9);
        let set = set3(&rows);
        let base = decide(&set, false).expect("decide in bounds").is_separable();
        let scaled: Vec<Vec<Rational>> = rows
            .iter()
            .map(|row| {
                let factor = ratio(
                    1 + i64::from(lcg.draw() % 9),
                    1 + i64::from(lcg.draw() % 9),
                );
                row.iter().map(|&c| int(c) * &factor).collect()
            })
            .collect();
        let scaled_set = VectorSet::new(3, scaled).expect("scaling keeps arity");
        assert_eq!(
            decide(&scaled_set, false).expect("decide in bounds").is_separable(),
            base,
            "positive scaling changed the verdict on {rows:?}"
        );
    }

    // Invertible integer transforms.
    let mut lcg = Lcg::new(52);
    for _ in 0..trials {
        let rows = random_tuple(&mut lcg, 9);
        let set = set3(&rows);
        let base = decide(&set, false).expect("decide in bounds").is_separable();
        let matrix = loop {
            let mut m = [[0i64; 3]; 3];
            for row in &mut m {
                for entry in row.iter_mut() {
                    *entry = lcg.coordinate(3);
                }
            }
            let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            if det != 0 {
                break m;
            }
        };
        let transformed: Vec<[i64; 3]> = rows
            .iter()
            .map(|row| {
                [
                    matrix[0][0] * row[0] + matrix[0][1] * row[1] + matrix[0][2] * row[2],
                    matrix[1][0] * row[0] + matrix[1][1] * row[1] + matrix[1][2] * row[2],
                    matrix[2][0] * row[0] + matrix[2][1] * row[1] + matrix[2][2] * row[2],
                ]
            })
            .collect();
        let transformed_set = set3(&transformed);
        assert_eq!(
            decide(&transformed_set, false)
                .expect("decide in bounds")
                .is_separable(),
            base,
            "invertible transform changed the verdict on {rows:?}"
        );
    }

    // Relabelling the vectors.
    let mut lcg = Lcg::new(53);
    for _ in 0..trials {
        let rows = random_tuple(&mut lcg, 9);
        let set = set3(&rows);
        let base = decide(&set, false).expect("decide in bounds").is_separable();
        let mut shuffled = rows;
        for i in (1..4).rev() {
            let j = (lcg.draw() as usize) % (i + 1);
            shuffled.swap(i, j);
        }
        let shuffled_set = set3(&shuffled);
        assert_eq!(
            decide(&shuffled_set, false)
                .expect("decide in bounds")
                .is_separable(),
            base,
            "permutation changed the verdict on {rows:?}"
        );
    }

    // Duplicating a vector.
    let mut lcg = Lcg::new(54);
    for _ in 0..trials {
        let rows = random_tuple(&mut lcg, 9);
        let set = set3(&rows);
        let base = decide(&set, false).expect("decide in bounds").is_separable();
        let mut extended: Vec<[i64; 3]> = rows.to_vec();
        extended.push(rows[(lcg.draw() as usize) % 4]);
        let extended_set = set3(&extended);
        assert_eq!(
            decide(&extended_set, false)
                .expect("decide in bounds")
                .is_separable(),
            base,
            "duplication changed the verdict on {rows:?}"
        );
    }

    let elapsed = start.elapsed();
    println!(
        "criterion 5: PASS - {trials} instances each for scaling, transforms, permutation, duplication, in {elapsed:.1?}"
    );
}

fn decide_verified(set: &VectorSet) -> Verdict {
    let verdict = decide(set, true).expect("decide in bounds");
    assert!(verify_certificate(set, &verdict));
    verdict
}

#[test]
fn criterion_6_degenerate_suite() {
    // Zero vector present: never separable, witness sits on the zero.
    let zero = VectorSet::new(3, vec![
        vec![int(1), int(2), int(3)],
        vec![int(0), int(0), int(0)],
    ])
    .unwrap();
    let verdict = decide_verified(&zero);
    assert!(!verdict.is_separable());
    assert_eq!(verdict.witness().unwrap().weights(), &[int(0), int(1)]);

    // Antipodal pair: witness splits evenly across it.
    let antipodal = set3(&[[1, 0, 0], [-1, 0, 0], [0, 0, 1]]);
    let verdict = decide_verified(&antipodal);
    assert!(!verdict.is_separable());
    assert_eq!(
        verdict.witness().unwrap().weights(),
        &[ratio(1, 2), ratio(1, 2), int(0)]
    );

    // All collinear, one ray: separable along the ray.
    let ray = VectorSet::new(3, vec![
        vec![int(1), int(0), int(0)],
        vec![int(2), int(0), int(0)],
        vec![ratio(1, 2), int(0), int(0)],
    ])
    .unwrap();
    let verdict = decide_verified(&ray);
    assert!(verdict.is_separable());
    assert_eq!(
        verdict.functional().unwrap().coefficients(),
        &[int(1), int(0), int(0)]
    );

    // All collinear, opposed rays: inseparable.
    let opposed = set3(&[[1, 2, 3], [-2, -4, -6]]);
    assert!(!decide_verified(&opposed).is_separable());

    // All four coplanar, spread below a half turn: separable.
    let coplanar_ok = set3(&[[1, 0, 0], [0, 1, 0], [1, 1, 0], [2, 1, 0]]);
    assert!(decide_verified(&coplanar_ok).is_separable());

    // All coplanar with a zero-sum triple: inseparable, witness on the triple.
    let coplanar_bad = set3(&[[1, 0, 0], [0, 1, 0], [-1, -1, 0], [2, 1, 0]]);
    let verdict = decide_verified(&coplanar_bad);
    assert!(!verdict.is_separable());
    assert_eq!(
        verdict.witness().unwrap().weights(),
        &[ratio(1, 3), ratio(1, 3), ratio(1, 3), int(0)]
    );

    // Coplanar triple inside a spanning quadruple (the fast path defers).
    let triple_in_span = set3(&[[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]]);
    let verdict = decide_verified(&triple_in_span);
    assert!(verdict.is_separable());

    // Rank-1 triple inside a rank-3 set: the oracle route.
    let rank1_triple = set3(&[[1, 0, 0], [2, 0, 0], [3, 0, 0], [0, 1, 0], [0, 0, 1]]);
    assert!(decide_verified(&rank1_triple).is_separable());
    let rank1_opposed = set3(&[[1, 0, 0], [2, 0, 0], [-1, 0, 0], [0, 1, 0], [0, 0, 1]]);
    assert!(!decide_verified(&rank1_opposed).is_separable());

    println!("criterion 6: PASS - degenerate suite matches the hand-derived verdicts");
}

#[test]
fn criterion_7_chemistry_fixtures() {
    let methane = "5\nmethane\nC 0 0 0\nH 0.629 0.629 0.629\nH 0.629 -0.629 -0.629\nH -0.629 0.629 -0.629\nH -0.629 -0.629 0.629\n";
    let umbrella = "5\nall four bonds above the xy-plane\nC 0 0 0\nH 0.9 0 0.5\nH -0.9 0 0.5\nH 0 0.9 0.5\nH 0 -0.9 0.5\n";

    let check = |text: &str, expected_label: &str| {
        let molecule = chem::parse_xyz(text).expect("fixture parses");
        let radii = chem::RadiiTable::standard();
        let bonds = chem::infer_bonds(&molecule, &radii, &chem::default_bond_scale())
            .expect("all elements known");
        let outcomes = chem::classify_carbons(&molecule, &bonds).expect("classification runs");
        assert_eq!(outcomes.len(), 1);
        let carbon = match &outcomes[0] {
            chem::CarbonOutcome::Classified(c) => c,
            other => panic!("expected a classified carbon, got {other:?}"),
        };
        assert_eq!(chem::verdict_label(&carbon.verdict), expected_label);
        let directions: Vec<Vec<Rational>> = carbon
            .neighbor_indices
            .iter()
            .map(|&n| {
                (&molecule.atoms[n].position - &molecule.atoms[carbon.atom_index].position)
                    .to_coords()
            })
            .collect();
        let set = VectorSet::new(3, directions).expect("bond vectors are 3-dimensional");
        assert!(
            verify_certificate(&set, &carbon.verdict),
            "certificate failed against the recomputed bond vectors"
        );
    };

    check(methane, "enclosed");
    check(umbrella, "separable");
    println!("criterion 7: PASS - methane enclosed, umbrella separable, certificates verify");
}
