use super::Error;
use crate::exact::{parse_decimal, Vec3};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atom {
    pub element: String,
    pub position: Vec3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Molecule {
    pub comment: String,
    pub atoms: Vec<Atom>,
}

/// Parses XYZ text: an atom count line, a free-form comment line, then one
/// `element x y z` line per atom.
///
/// Coordinates are decimal literals and are kept exact. Tokens past the
/// fourth on an atom line are ignored (some writers append charges or
/// velocities). Blank lines after the last atom are tolerated, anything
/// else there is an error. All errors carry the 1-based line number.
pub fn parse_xyz(text: &str) -> Result<Molecule, Error> {
    let mut lines = text.lines();

    let count_line = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing atom count line".to_owned(),
    })?;
    let declared: usize = count_line.trim().parse().map_err(|_| Error::Parse {
        line: 1,
        message: format!("atom count must be a nonnegative integer, got {:?}", count_line.trim()),
    })?;

    let comment = lines
        .next()
        .ok_or(Error::Parse {
            line: 2,
            message: "missing comment line".to_owned(),
        })?
        .to_owned();

    let mut atoms = Vec::with_capacity(declared);
    for i in 0..declared {
        let line_number = 3 + i;
        let line = lines.next().ok_or_else(|| Error::Parse {
            line: line_number,
            message: format!(
                "declared {declared} atoms but the file ends after {i}"
            ),
        })?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() < 4 {
            return Err(Error::Parse {
                line: line_number,
                message: format!(
                    "expected an element symbol and three coordinates, found {} fields",
                    fields.len()
                ),
            });
        }
        let mut coords = fields[1..4].iter().map(|token| {
            parse_decimal(token).map_err(|e| Error::Parse {
                line: line_number,
                message: e.to_string(),
            })
        });
        let x = coords.next().unwrap()?;
        let y = coords.next().unwrap()?;
        let z = coords.next().unwrap()?;
        atoms.push(Atom {
            element: fields[0].to_owned(),
            position: Vec3::new(x, y, z),
        });
    }

    for (extra, line) in lines.enumerate() {
        if !line.trim().is_empty() {
            return Err(Error::Parse {
                line: 3 + declared + extra,
                message: "unexpected content after the last atom".to_owned(),
            });
        }
    }

    Ok(Molecule { comment, atoms })
}
