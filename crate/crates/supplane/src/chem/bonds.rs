use std::collections::BTreeSet;

use super::radii::RadiiTable;
use super::xyz::Molecule;
use super::Error;
use crate::exact::{ratio, Rational};

/// Undirected bond graph over atom indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BondGraph {
    adjacency: Vec<BTreeSet<usize>>,
}

impl BondGraph {
    pub fn atom_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, atom: usize) -> &BTreeSet<usize> {
        &self.adjacency[atom]
    }

    pub fn degree(&self, atom: usize) -> usize {
        self.adjacency[atom].len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for (i, neighbors) in self.adjacency.iter().enumerate() {
            for &j in neighbors.iter().filter(|&&j| j > i) {
                edges.push((i, j));
            }
        }
        edges
    }
}

/// The default threshold slack: bond when the distance is at most 1.15
/// times the sum of covalent radii.
pub fn default_bond_scale() -> Rational {
    ratio(23, 20)
}

/// Infers bonds by the covalent-radius criterion: atoms `i != j` bond when
/// `dist(i, j) <= scale * (r_i + r_j)`.
///
/// Both sides are compared squared, so the test is exact; no square root is
/// ever taken. Unknown element symbols are an error naming the symbol and
/// the first atom carrying it.
pub fn infer_bonds(
    molecule: &Molecule,
    radii: &RadiiTable,
    scale: &Rational,
) -> Result<BondGraph, Error> {
    let n = molecule.atoms.len();
    let mut atom_radii: Vec<&Rational> = Vec::with_capacity(n);
    for (index, atom) in molecule.atoms.iter().enumerate() {
        let radius = radii
            .radius(&atom.element)
            .ok_or_else(|| Error::UnknownElement {
                symbol: atom.element.clone(),
                index,
            })?;
        atom_radii.push(radius);
    }

    let mut adjacency = vec![BTreeSet::new(); n];
    let scale_squared = scale * scale;
    for i in 0..n {
        for j in (i + 1)..n {
            let difference =
                &molecule.atoms[i].position - &molecule.atoms[j].position;
            let distance_squared = difference.dot(&difference);
            let reach = atom_radii[i] + atom_radii[j];
            let threshold_squared = &scale_squared * &reach * &reach;
            if distance_squared <= threshold_squared {
                adjacency[i].insert(j);
                adjacency[j].insert(i);
            }
        }
    }
    Ok(BondGraph { adjacency })
}
