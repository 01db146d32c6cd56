use crate::error::{Error, Result};

use super::InvariantValue;

/// A printed numeric table cell, shaped like an [`InvariantValue`].
#[derive(Debug, Clone, PartialEq)]
pub enum NumericValue {
    Scalar(f64, f64),
    Tuple(Vec<NumericValue>),
    Set(Vec<NumericValue>),
    NonBraided,
}

/// Reads `-0.809 - 0.588i`, `1.414`, `i`, `-0.5i` and similar.
pub fn parse_numeric(text: &str) -> Result<(f64, f64)> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let s = s.replace('−', "-");
    let bad = || Error::InvalidArgument(format!("bad numeric value `{text}`"));
    let num = |t: &str| t.parse::<f64>().map_err(|_| bad());
    let Some(body) = s.strip_suffix('i') else {
        return Ok((num(&s)?, 0.0));
    };
    let split = body
        .char_indices()
        .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
        .map(|(k, _)| k)
        .next_back();
    let (re, im) = match split {
        Some(k) => (num(&body[..k])?, &body[k..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => num(t)?,
    };
    Ok((re, im))
}

/// True when every exact component lies within `tol` of the printed one.
/// Sets compare as sets, so repeated printed entries are harmless.
pub fn numeric_matches(value: &InvariantValue, expected: &NumericValue, tol: f64) -> bool {
    match (value, expected) {
        (InvariantValue::NonBraided, NumericValue::NonBraided) => true,
        (InvariantValue::Scalar(c), NumericValue::Scalar(re, im)) => {
            let (x, y) = c.approx();
            (x - re).abs() <= tol && (y - im).abs() <= tol
        }
        (InvariantValue::TupleVal(xs), NumericValue::Tuple(ys)) => {
            xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| numeric_matches(x, y, tol))
        }
        (InvariantValue::SetVal(xs), NumericValue::Set(ys)) => {
            xs.iter().all(|x| ys.iter().any(|y| numeric_matches(x, y, tol)))
                && ys.iter().all(|y| xs.iter().any(|x| numeric_matches(x, y, tol)))
        }
        _ => false,
    }
}
