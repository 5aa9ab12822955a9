use supplane::{parse_decimal, Rational, VectorSet};

use crate::Failure;

/// Parses one vector per line, comma-separated decimal literals. Blank
/// lines are skipped; the first data line fixes the ambient dimension.
pub fn vectors_from_csv(text: &str) -> Result<VectorSet, Failure> {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (index, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut row = Vec::new();
        for field in line.split(',') {
            let value = parse_decimal(field.trim())
                .map_err(|e| Failure::Parse(format!("line {}: {e}", index + 1)))?;
            row.push(value);
        }
        rows.push(row);
    }
    build_set(rows)
}

/// Parses a JSON array of vectors; coordinates are decimal strings or
/// numbers. Numbers go through their shortest decimal rendering, so the
/// rational we keep is exactly the value the JSON text denoted.
pub fn vectors_from_json(text: &str) -> Result<VectorSet, Failure> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| Failure::Parse(format!("malformed JSON: {e}")))?;
    let outer = value
        .as_array()
        .ok_or_else(|| Failure::Parse("expected a JSON array of vectors".to_owned()))?;

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (index, entry) in outer.iter().enumerate() {
        let coords = entry.as_array().ok_or_else(|| {
            Failure::Parse(format!("vector {index}: expected an array of coordinates"))
        })?;
        let mut row = Vec::new();
        for (slot, coord) in coords.iter().enumerate() {
            row.push(coordinate_value(coord).map_err(|message| {
                Failure::Parse(format!("vector {index}, coordinate {slot}: {message}"))
            })?);
        }
        rows.push(row);
    }
    build_set(rows)
}

fn coordinate_value(coord: &serde_json::Value) -> Result<Rational, String> {
    match coord {
        serde_json::Value::String(text) => parse_decimal(text).map_err(|e| e.to_string()),
        serde_json::Value::Number(number) => {
            if let Some(integer) = number.as_i64() {
                Ok(Rational::from_integer(integer.into()))
            } else if let Some(integer) = number.as_u64() {
                Ok(Rational::from_integer(integer.into()))
            } else {
                // Finite by JSON grammar; Display renders the shortest
                // decimal that round-trips, which parse_decimal accepts.
                let float = number.as_f64().ok_or("unrepresentable number")?;
                parse_decimal(&format!("{float}")).map_err(|e| e.to_string())
            }
        }
        other => Err(format!("expected a string or number, found {other}")),
    }
}

fn build_set(rows: Vec<Vec<Rational>>) -> Result<VectorSet, Failure> {
    let dim = rows.first().map_or(1, Vec::len);
    if dim == 0 {
        return Err(Failure::Input("vectors must have at least one coordinate".to_owned()));
    }
    VectorSet::new(dim, rows).map_err(Failure::from)
}
