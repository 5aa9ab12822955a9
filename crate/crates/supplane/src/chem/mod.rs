//! Classifying carbon bond geometry in XYZ molecular files.
//!
//! A carbon with four bonds is *enclosed* when its four bond directions
//! admit no supporting plane: every plane through the carbon has bonds on
//! both sides, as in methane. It is *separable* when some plane has all
//! four bonds strictly on one side, the umbrella-like distortion. The
//! pipeline is [`parse_xyz`] to read atoms, [`infer_bonds`] to build the
//! bond graph from covalent radii, and [`classify_carbons`] to run the
//! exact separability decision on each four-bonded carbon.

mod bonds;
mod classify;
mod radii;
mod xyz;

pub use bonds::{default_bond_scale, infer_bonds, BondGraph};
pub use classify::{classify_carbons, verdict_label, CarbonClassification, CarbonOutcome};
pub use radii::RadiiTable;
pub use xyz::{parse_xyz, Atom, Molecule};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("no covalent radius for element {symbol:?} (atom {index})")]
    UnknownElement { symbol: String, index: usize },
    #[error("radii override line {line}: {message}")]
    Radii { line: usize, message: String },
    #[error(transparent)]
    Separability(#[from] crate::separability::Error),
}
