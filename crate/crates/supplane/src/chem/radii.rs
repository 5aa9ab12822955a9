use std::collections::BTreeMap;

use super::Error;
use crate::exact::{parse_decimal, ratio, Rational};

/// Single-bond covalent radii in angstroms, keyed by element symbol.
///
/// The built-in table carries the elements that show up in small organic
/// molecules; values follow the Cordero consensus determinations. Entries
/// can be replaced or added through [`RadiiTable::apply_overrides`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiiTable {
    radii: BTreeMap<String, Rational>,
}

impl RadiiTable {
    pub fn standard() -> RadiiTable {
        let mut radii = BTreeMap::new();
        let entries: [(&str, Rational); 10] = [
            ("H", ratio(31, 100)),
            ("C", ratio(76, 100)),
            ("N", ratio(71, 100)),
            ("O", ratio(66, 100)),
            ("F", ratio(57, 100)),
            ("P", ratio(107, 100)),
            ("S", ratio(105, 100)),
            ("Cl", ratio(102, 100)),
            ("Br", ratio(120, 100)),
            ("I", ratio(139, 100)),
        ];
        for (symbol, radius) in entries {
            radii.insert(symbol.to_owned(), radius);
        }
        RadiiTable { radii }
    }

    pub fn radius(&self, symbol: &str) -> Option<&Rational> {
        self.radii.get(symbol)
    }

    pub fn insert(&mut self, symbol: &str, radius: Rational) {
        self.radii.insert(symbol.to_owned(), radius);
    }

    /// Merges override entries, one `symbol radius` pair per line, into the
    /// table. Blank lines and `#` comments are skipped; radii are decimal
    /// literals and must be positive.
    pub fn apply_overrides(&mut self, text: &str) -> Result<(), Error> {
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Radii {
                    line,
                    message: format!(
                        "expected an element symbol and a radius, found {} fields",
                        fields.len()
                    ),
                });
            }
            let radius = parse_decimal(fields[1]).map_err(|e| Error::Radii {
                line,
                message: e.to_string(),
            })?;
            if radius <= Rational::from_integer(0.into()) {
                return Err(Error::Radii {
                    line,
                    message: format!("radius for {} must be positive", fields[0]),
                });
            }
            self.insert(fields[0], radius);
        }
        Ok(())
    }
}
