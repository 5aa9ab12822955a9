use super::bonds::BondGraph;
use super::xyz::Molecule;
use super::Error;
use crate::separability::{decide, VectorSet, Verdict};

/// Verdict for one four-bonded carbon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarbonClassification {
    pub atom_index: usize,
    pub neighbor_indices: [usize; 4],
    pub verdict: Verdict,
}

/// Per-carbon outcome: classified when exactly four bonds were inferred,
/// skipped otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CarbonOutcome {
    Classified(CarbonClassification),
    Skipped { atom_index: usize, bond_count: usize },
}

/// Runs the separability decision on every carbon atom with exactly four
/// inferred bonds; the vectors tested are the four bond directions, from
/// the carbon to each neighbor.
///
/// The verdict always carries a certificate: either a plane normal whose
/// halfspace holds all four bonds, or weights combining the bond directions
/// to zero, proving every plane through the carbon has bonds on both sides.
/// Carbons with any other bond count are reported as skipped.
pub fn classify_carbons(
    molecule: &Molecule,
    bonds: &BondGraph,
) -> Result<Vec<CarbonOutcome>, Error> {
    let mut outcomes = Vec::new();
    for (index, atom) in molecule.atoms.iter().enumerate() {
        if atom.element != "C" {
            continue;
        }
        let neighbors = bonds.neighbors(index);
        if neighbors.len() != 4 {
            outcomes.push(CarbonOutcome::Skipped {
                atom_index: index,
                bond_count: neighbors.len(),
            });
            continue;
        }
        let mut neighbor_indices = [0usize; 4];
        let mut directions = Vec::with_capacity(4);
        for (slot, &neighbor) in neighbors.iter().enumerate() {
            neighbor_indices[slot] = neighbor;
            let direction = &molecule.atoms[neighbor].position - &atom.position;
            directions.push(direction.to_coords());
        }
        let set = VectorSet::new(3, directions).map_err(Error::from)?;
        let verdict = decide(&set, true)?;
        outcomes.push(CarbonOutcome::Classified(CarbonClassification {
            atom_index: index,
            neighbor_indices,
            verdict,
        }));
    }
    Ok(outcomes)
}

/// The two labels used in reports.
pub fn verdict_label(verdict: &Verdict) -> &'static str {
    if verdict.is_separable() {
        "separable"
    } else {
        "enclosed"
    }
}
