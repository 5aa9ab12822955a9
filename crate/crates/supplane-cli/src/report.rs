use serde::Serialize;

use supplane::chem::{verdict_label, CarbonOutcome, Molecule};
use supplane::{Rational, Verdict};

/// Certificate payload shared by both output schemas. Rationals are
/// rendered as exact "p/q" strings (bare "p" when the denominator is 1);
/// floats never appear.
#[derive(Serialize)]
#[serde(untagged)]
enum CertificateJson {
    Functional { functional: Vec<String> },
    Witness { weights: Vec<String> },
}

#[derive(Serialize)]
struct DecideReport {
    verdict: &'static str,
    certificate: Option<CertificateJson>,
}

#[derive(Serialize)]
struct ClassifyReport {
    carbons: Vec<CarbonJson>,
    skipped: Vec<SkippedJson>,
}

#[derive(Serialize)]
struct CarbonJson {
    atom_index: usize,
    neighbors: Vec<usize>,
    verdict: &'static str,
    certificate: Option<CertificateJson>,
}

#[derive(Serialize)]
struct SkippedJson {
    atom_index: usize,
    bond_count: usize,
}

fn render(values: &[Rational]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

fn certificate_json(verdict: &Verdict) -> Option<CertificateJson> {
    if let Some(functional) = verdict.functional() {
        return Some(CertificateJson::Functional {
            functional: render(functional.coefficients()),
        });
    }
    verdict.witness().map(|witness| CertificateJson::Witness {
        weights: render(witness.weights()),
    })
}

fn certificate_text(verdict: &Verdict) -> Option<String> {
    if let Some(functional) = verdict.functional() {
        return Some(format!("functional: {}", render(functional.coefficients()).join(" ")));
    }
    verdict
        .witness()
        .map(|witness| format!("weights: {}", render(witness.weights()).join(" ")))
}

pub fn decide_text(verdict: &Verdict) -> String {
    let mut out = format!(
        "verdict: {}\n",
        if verdict.is_separable() { "separable" } else { "not_separable" }
    );
    if let Some(line) = certificate_text(verdict) {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

pub fn decide_json(verdict: &Verdict) -> String {
    let report = DecideReport {
        verdict: if verdict.is_separable() { "separable" } else { "not_separable" },
        certificate: certificate_json(verdict),
    };
    serde_json::to_string(&report).expect("report serialization cannot fail")
}

pub fn classify_text(molecule: &Molecule, outcomes: &[CarbonOutcome]) -> String {
    let mut out = String::new();
    for outcome in outcomes {
        match outcome {
            CarbonOutcome::Classified(carbon) => {
                let neighbors: Vec<String> = carbon
                    .neighbor_indices
                    .iter()
                    .map(|&n| format!("{n} ({})", molecule.atoms[n].element))
                    .collect();
                out.push_str(&format!(
                    "atom {} (C): {}\n  neighbors: {}\n",
                    carbon.atom_index,
                    verdict_label(&carbon.verdict),
                    neighbors.join(", ")
                ));
                if let Some(line) = certificate_text(&carbon.verdict) {
                    out.push_str("  ");
                    out.push_str(&line);
                    out.push('\n');
                }
            }
            CarbonOutcome::Skipped { atom_index, bond_count } => {
                let plural = if *bond_count == 1 { "" } else { "s" };
                out.push_str(&format!(
                    "atom {atom_index} (C): skipped ({bond_count} bond{plural})\n"
                ));
            }
        }
    }
    out
}

pub fn classify_json(_molecule: &Molecule, outcomes: &[CarbonOutcome]) -> String {
    let mut carbons = Vec::new();
    let mut skipped = Vec::new();
    for outcome in outcomes {
        match outcome {
            CarbonOutcome::Classified(carbon) => carbons.push(CarbonJson {
                atom_index: carbon.atom_index,
                neighbors: carbon.neighbor_indices.to_vec(),
                verdict: verdict_label(&carbon.verdict),
                certificate: certificate_json(&carbon.verdict),
            }),
            CarbonOutcome::Skipped { atom_index, bond_count } => skipped.push(SkippedJson {
                atom_index: *atom_index,
                bond_count: *bond_count,
            }),
        }
    }
    let report = ClassifyReport { carbons, skipped };
    serde_json::to_string(&report).expect("report serialization cannot fail")
}
