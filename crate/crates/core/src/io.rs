//! Parsing of sample, matrix, spectrum and polynomial inputs.

use std::path::Path;

use num_complex::Complex64;
use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

use crate::poly::Polynomial;
use crate::sample::WeightedSample;
use crate::trace::SquareMatrix;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Schema(String),
    #[error(transparent)]
    Invalid(#[from] crate::error::Error),
}

type Result<T> = std::result::Result<T, InputError>;

fn schema(msg: impl Into<String>) -> InputError {
    InputError::Schema(msg.into())
}

pub fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| InputError::Read {
        path: path.display().to_string(),
        source,
    })
}

#[derive(Deserialize)]
struct SampleJson {
    values: Vec<f64>,
    weights: Option<Vec<f64>>,
}

/// `{"values": [...], "weights": [...]}`; missing weights means equal weights.
pub fn parse_sample_json(text: &str) -> Result<WeightedSample> {
    let s: SampleJson = serde_json::from_str(text)?;
    Ok(match s.weights {
        Some(w) => WeightedSample::new(s.values, w)?,
        None => WeightedSample::equal(s.values)?,
    })
}

/// One value per line with an optional weight in a second column. Lines
/// starting with `#` and a non-numeric header row are ignored.
pub fn parse_sample_csv(text: &str) -> Result<WeightedSample> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut values = Vec::new();
    let mut weights = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        let parsed: Vec<_> = record.iter().map(str::parse::<f64>).collect();
        if line == 0 && parsed.iter().all(|p| p.is_err()) {
            continue;
        }
        let field = |i: usize| {
            parsed[i]
                .clone()
                .map_err(|_| schema(format!("row {}: '{}' is not a number", line + 1, &record[i])))
        };
        match parsed.len() {
            1 => values.push(field(0)?),
            2 => {
                values.push(field(0)?);
                weights.push(field(1)?);
            }
            k => return Err(schema(format!("row {}: expected 1 or 2 columns, got {k}", line + 1))),
        }
    }
    if weights.is_empty() {
        Ok(WeightedSample::equal(values)?)
    } else if weights.len() == values.len() {
        Ok(WeightedSample::new(values, weights)?)
    } else {
        Err(schema("either every row or no row must carry a weight"))
    }
}

/// Dispatches on the file extension: `.csv` is CSV, anything else JSON.
pub fn read_sample(path: &Path) -> Result<WeightedSample> {
    let text = read_to_string(path)?;
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
        parse_sample_csv(&text)
    } else {
        parse_sample_json(&text)
    }
}

/// A matrix or a known spectrum.
#[derive(Debug, Clone, PartialEq)]
pub enum MatrixInput {
    Matrix(SquareMatrix),
    Spectrum(Vec<f64>),
}

fn number(v: &Value, what: &str) -> Result<f64> {
    v.as_f64().ok_or_else(|| schema(format!("{what}: expected a number, got {v}")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema(format!("{what}: expected an array")))
}

fn numbers(v: &Value, what: &str) -> Result<Vec<f64>> {
    array(v, what)?.iter().map(|x| number(x, what)).collect()
}

/// `{"n": n, "entries": [[re, im], ...]}` (row-major, `n^2` pairs) or
/// `{"entries": [[row], ...]}` for real matrices.
pub fn parse_matrix_value(v: &Value) -> Result<SquareMatrix> {
    let entries = v.get("entries").ok_or_else(|| schema("missing \"entries\""))?;
    let rows = array(entries, "entries")?;
    match v.get("n") {
        Some(n) => {
            let n = n
                .as_u64()
                .ok_or_else(|| schema("\"n\" must be a nonnegative integer"))? as usize;
            let z = rows
                .iter()
                .map(|pair| match numbers(pair, "entry")?.as_slice() {
                    &[re, im] => Ok(Complex64::new(re, im)),
                    _ => Err(schema("complex entries must be [re, im] pairs")),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(SquareMatrix::new(n, z)?)
        }
        None => {
            let rows = rows
                .iter()
                .map(|r| numbers(r, "row"))
                .collect::<Result<Vec<_>>>()?;
            Ok(SquareMatrix::from_real_rows(&rows)?)
        }
    }
}

/// A matrix (see [`parse_matrix_value`]) or `{"eigenvalues": [...]}`.
pub fn parse_matrix_input(text: &str) -> Result<MatrixInput> {
    let v: Value = serde_json::from_str(text)?;
    if let Some(e) = v.get("eigenvalues") {
        let eigs = numbers(e, "eigenvalues")?;
        if eigs.is_empty() {
            return Err(schema("\"eigenvalues\" must be nonempty"));
        }
        return Ok(MatrixInput::Spectrum(eigs));
    }
    Ok(MatrixInput::Matrix(parse_matrix_value(&v)?))
}

pub fn parse_matrix_json(text: &str) -> Result<SquareMatrix> {
    let v: Value = serde_json::from_str(text)?;
    parse_matrix_value(&v)
}

/// A polynomial, with its roots when it was given by them.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyInput {
    pub polynomial: Polynomial,
    pub roots: Option<Vec<f64>>,
}

/// `{"coefficients": [1, c_{n-1}, ..., c_0]}` or `{"roots": [...]}`.
pub fn parse_poly_json(text: &str) -> Result<PolyInput> {
    let v: Value = serde_json::from_str(text)?;
    if let Some(c) = v.get("coefficients") {
        return Ok(PolyInput {
            polynomial: Polynomial::new(numbers(c, "coefficients")?)?,
            roots: None,
        });
    }
    if let Some(r) = v.get("roots") {
        let roots = numbers(r, "roots")?;
        return Ok(PolyInput {
            polynomial: Polynomial::from_roots(&roots)?,
            roots: Some(roots),
        });
    }
    Err(schema("expected \"coefficients\" or \"roots\""))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_json() {
        let s = parse_sample_json(r#"{"values": [0, 1], "weights": [0.25, 0.75]}"#).unwrap();
        assert_eq!(s.weights(), [0.25, 0.75]);
        let s = parse_sample_json(r#"{"values": [1, 2, 3]}"#).unwrap();
        assert!(s.is_equally_weighted());
        assert!(matches!(parse_sample_json("{"), Err(InputError::Json(_))));
        assert!(matches!(
            parse_sample_json(r#"{"values": []}"#),
            Err(InputError::Invalid(_))
        ));
    }

    #[test]
    fn sample_csv() {
        let s = parse_sample_csv("value\n1\n2\n\n# note\n3\n").unwrap();
        assert_eq!(s.values(), [1.0, 2.0, 3.0]);
        let s = parse_sample_csv("0, 0.5\n1, 0.5\n").unwrap();
        assert!(s.is_equally_weighted());
        assert!(parse_sample_csv("0, 0.5\n1\n").is_err());
        assert!(parse_sample_csv("1\nx\n").is_err());
    }

    #[test]
    fn matrices() {
        let m = parse_matrix_json(r#"{"entries": [[1, 2], [2, 1]]}"#).unwrap();
        assert_eq!(m.order(), 2);
        let m = parse_matrix_json(r#"{"n": 2, "entries": [[2,0],[1,-1],[1,1],[3,0]]}"#).unwrap();
        assert_eq!(m.get(0, 1), Complex64::new(1.0, -1.0));
        assert!(parse_matrix_json(r#"{"entries": [[1, 2]]}"#).is_err());
        assert!(parse_matrix_json(r#"{"n": 2, "entries": [[1, 0]]}"#).is_err());
        let s = parse_matrix_input(r#"{"eigenvalues": [1, 2]}"#).unwrap();
        assert_eq!(s, MatrixInput::Spectrum(vec![1.0, 2.0]));
    }

    #[test]
    fn polynomials() {
        let p = parse_poly_json(r#"{"coefficients": [1, -3, 2]}"#).unwrap();
        assert_eq!(p.polynomial.degree(), 2);
        let p = parse_poly_json(r#"{"roots": [1, 2]}"#).unwrap();
        assert_eq!(p.polynomial.coefficients(), [1.0, -3.0, 2.0]);
        assert!(matches!(
            parse_poly_json(r#"{"coefficients": [2, 1]}"#),
            Err(InputError::Invalid(crate::error::Error::NotMonic(_)))
        ));
        assert!(parse_poly_json(r#"{"foo": 1}"#).is_err());
    }
}
