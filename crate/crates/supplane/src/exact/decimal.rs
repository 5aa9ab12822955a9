use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::Rational;

/// Largest accepted exponent magnitude in a decimal literal. Inputs beyond
/// this bound would allocate denominators with thousands of digits.
const MAX_EXPONENT: i64 = 9999;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecimalError {
    #[error("empty decimal literal")]
    Empty,
    #[error("invalid character {found:?} at offset {offset} in decimal literal {literal:?}")]
    InvalidCharacter {
        literal: String,
        offset: usize,
        found: char,
    },
    #[error("decimal literal {literal:?} has no digits")]
    NoDigits { literal: String },
    #[error("decimal literal {literal:?} is missing exponent digits")]
    MissingExponent { literal: String },
    #[error("exponent of decimal literal {literal:?} exceeds 10^{MAX_EXPONENT}")]
    ExponentOutOfRange { literal: String },
}

/// Parses a plain or scientific decimal literal into an exact rational.
///
/// Accepted form: optional sign, integer digits, optional `.` and fractional
/// digits, optional `e`/`E` exponent with its own optional sign. At least one
/// mantissa digit is required; `"1."` and `".5"` are both fine. The value is
/// represented exactly: `"0.1"` becomes `1/10`, not a binary approximation.
pub fn parse_decimal(text: &str) -> Result<Rational, DecimalError> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(DecimalError::Empty);
    }

    let invalid = |offset: usize| {
        let found = text[offset..].chars().next().unwrap_or('\u{FFFD}');
        DecimalError::InvalidCharacter {
            literal: text.to_owned(),
            offset,
            found,
        }
    };

    let mut pos = 0;
    let mut negative = false;
    match bytes[pos] {
        b'+' => pos += 1,
        b'-' => {
            negative = true;
            pos += 1;
        }
        _ => {}
    }

    let mut mantissa = String::new();
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        mantissa.push(bytes[pos] as char);
        pos += 1;
    }

    let mut frac_len: i64 = 0;
    if pos < bytes.len() && bytes[pos] == b'.' {
        pos += 1;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            mantissa.push(bytes[pos] as char);
            frac_len += 1;
            pos += 1;
        }
    }

    if mantissa.is_empty() {
        // Distinguish "no digits where digits belong" from a stray character:
        // `".x"` blames the `x`, `"."` and `"-"` lack digits entirely.
        if pos < bytes.len() {
            return Err(invalid(pos));
        }
        return Err(DecimalError::NoDigits {
            literal: text.to_owned(),
        });
    }

    let mut exponent: i64 = 0;
    if pos < bytes.len() && (bytes[pos] == b'e' || bytes[pos] == b'E') {
        pos += 1;
        let mut exp_negative = false;
        if pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
            exp_negative = bytes[pos] == b'-';
            pos += 1;
        }
        let digits_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos == digits_start {
            if pos < bytes.len() {
                return Err(invalid(pos));
            }
            return Err(DecimalError::MissingExponent {
                literal: text.to_owned(),
            });
        }
        let digits = &text[digits_start..pos];
        let magnitude: i64 = digits
            .parse()
            .map_err(|_| DecimalError::ExponentOutOfRange {
                literal: text.to_owned(),
            })?;
        if magnitude > MAX_EXPONENT {
            return Err(DecimalError::ExponentOutOfRange {
                literal: text.to_owned(),
            });
        }
        exponent = if exp_negative { -magnitude } else { magnitude };
    }

    if pos < bytes.len() {
        return Err(invalid(pos));
    }

    let mut numer: BigInt = mantissa.parse().expect("mantissa is ASCII digits");
    if negative {
        numer = -numer;
    }

    let net = exponent - frac_len;
    if net >= 0 {
        Ok(Rational::new(
            numer * BigInt::from(10).pow(net as u32),
            BigInt::one(),
        ))
    } else {
        Ok(Rational::new(numer, BigInt::from(10).pow((-net) as u32)))
    }
}

/// Renders a rational as an exact decimal string, when one exists.
///
/// Returns `Some` exactly when the reduced denominator has no prime factor
/// other than 2 and 5. The output is canonical: no sign on zero, no leading
/// `+`, no superfluous zeros, no exponent. Feeding the result back through
/// [`parse_decimal`] reproduces the same rational.
pub fn decimal_string(value: &Rational) -> Option<String> {
    if value.is_zero() {
        return Some("0".to_owned());
    }

    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let mut rest = value.denom().clone();
    let mut twos: u32 = 0;
    let mut fives: u32 = 0;
    while (&rest % &two).is_zero() {
        rest /= &two;
        twos += 1;
    }
    while (&rest % &five).is_zero() {
        rest /= &five;
        fives += 1;
    }
    if !rest.is_one() {
        return None;
    }

    let places = twos.max(fives);
    let scale = two.pow(places - twos) * five.pow(places - fives);
    let scaled = value.numer() * scale;
    let digits = scaled.abs().to_string();
    let sign = if value.numer().is_negative() { "-" } else { "" };

    if places == 0 {
        return Some(format!("{sign}{digits}"));
    }

    let places = places as usize;
    let padded = if digits.len() <= places {
        format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
    } else {
        digits
    };
    let split = padded.len() - places;
    Some(format!("{sign}{}.{}", &padded[..split], &padded[split..]))
}
