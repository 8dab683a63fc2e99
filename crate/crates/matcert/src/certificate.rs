//! JSON certificates: a dimension, a goal, and one matrix family per
//! function symbol. Parsing walks the document by hand so every complaint
//! carries the JSON path of the offending value; entries are nonnegative
//! integers, floats are rejected outright.

use std::collections::BTreeMap;
use std::fmt;

use matcert_core::{GuardedMatrix, InterpError, LinearInterpretation, Scalar};
use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Goal {
    Termination,
    Complexity,
}

impl fmt::Display for Goal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Goal::Termination => write!(f, "termination"),
            Goal::Complexity => write!(f, "complexity"),
        }
    }
}

/// Constant part and one coefficient matrix per argument position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolMatrices {
    pub constant: GuardedMatrix,
    pub args: Vec<GuardedMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub dimension: usize,
    pub goal: Goal,
    pub interpretation: BTreeMap<String, SymbolMatrices>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("at {path}: {message}")]
pub struct CertParseError {
    pub path: String,
    pub message: String,
}

fn err<T>(path: impl Into<String>, message: impl Into<String>) -> Result<T, CertParseError> {
    Err(CertParseError { path: path.into(), message: message.into() })
}

fn as_object<'a>(value: &'a Value, path: &str) -> Result<&'a Map<String, Value>, CertParseError> {
    value.as_object().map_or_else(|| err(path, "expected an object"), Ok)
}

fn reject_unknown_keys(
    object: &Map<String, Value>,
    allowed: &[&str],
    path: &str,
) -> Result<(), CertParseError> {
    for key in object.keys() {
        if !allowed.contains(&key.as_str()) {
            return err(format!("{path}.{key}"), "unknown field");
        }
    }
    Ok(())
}

fn parse_entry(value: &Value, path: &str) -> Result<Scalar, CertParseError> {
    let number: &Number = match value {
        Value::Number(n) => n,
        _ => return err(path, "expected a nonnegative integer"),
    };
    if let Some(u) = number.as_u64() {
        return Ok(Scalar::from(u));
    }
    if number.as_i64().is_some() {
        return err(path, "negative entries are not allowed");
    }
    err(path, "expected a nonnegative integer, not a float")
}

fn parse_matrix(value: &Value, dimension: usize, path: &str) -> Result<GuardedMatrix, CertParseError> {
    let rows = match value.as_array() {
        Some(rows) => rows,
        None => return err(path, "expected a matrix as an array of rows"),
    };
    if rows.len() != dimension {
        return err(path, format!("expected {dimension} row(s), found {}", rows.len()));
    }
    let mut entries = Vec::with_capacity(dimension * dimension);
    for (i, row) in rows.iter().enumerate() {
        let row_path = format!("{path}[{i}]");
        let cells = match row.as_array() {
            Some(cells) => cells,
            None => return err(row_path, "expected a row as an array of integers"),
        };
        if cells.len() != dimension {
            return err(row_path, format!("expected {dimension} entries, found {}", cells.len()));
        }
        for (j, cell) in cells.iter().enumerate() {
            entries.push(parse_entry(cell, &format!("{row_path}[{j}]"))?);
        }
    }
    Ok(GuardedMatrix::new(dimension, dimension, entries)
        .expect("entry count matches the declared shape"))
}

/// Parses and fully validates a certificate document.
pub fn parse_certificate(text: &str) -> Result<Certificate, CertParseError> {
    let document: Value = serde_json::from_str(text)
        .map_err(|e| CertParseError { path: "$".into(), message: format!("invalid JSON: {e}") })?;
    let root = as_object(&document, "$")?;
    reject_unknown_keys(root, &["dimension", "goal", "interpretation"], "$")?;

    let dimension_value = root
        .get("dimension")
        .map_or_else(|| err("$", "missing field 'dimension'"), Ok)?;
    let dimension = match dimension_value.as_u64() {
        Some(n) if n >= 1 => usize::try_from(n)
            .map_err(|_| CertParseError { path: "$.dimension".into(), message: "too large".into() })?,
        Some(_) => return err("$.dimension", "must be at least 1"),
        None => return err("$.dimension", "expected a positive integer"),
    };

    let goal_value = root.get("goal").map_or_else(|| err("$", "missing field 'goal'"), Ok)?;
    let goal = match goal_value.as_str() {
        Some("termination") => Goal::Termination,
        Some("complexity") => Goal::Complexity,
        _ => return err("$.goal", "expected \"termination\" or \"complexity\""),
    };

    let interp_value = root
        .get("interpretation")
        .map_or_else(|| err("$", "missing field 'interpretation'"), Ok)?;
    let interp_object = as_object(interp_value, "$.interpretation")?;
    let mut interpretation = BTreeMap::new();
    for (symbol, entry) in interp_object {
        let symbol_path = format!("$.interpretation.{symbol}");
        let fields = as_object(entry, &symbol_path)?;
        reject_unknown_keys(fields, &["const", "args"], &symbol_path)?;
        let const_value = fields
            .get("const")
            .map_or_else(|| err(&symbol_path, "missing field 'const'"), Ok)?;
        let constant = parse_matrix(const_value, dimension, &format!("{symbol_path}.const"))?;
        let args_value = fields
            .get("args")
            .map_or_else(|| err(&symbol_path, "missing field 'args'"), Ok)?;
        let args_path = format!("{symbol_path}.args");
        let arg_values = match args_value.as_array() {
            Some(values) => values,
            None => return err(args_path, "expected an array of matrices"),
        };
        let mut args = Vec::with_capacity(arg_values.len());
        for (i, arg) in arg_values.iter().enumerate() {
            args.push(parse_matrix(arg, dimension, &format!("{args_path}[{i}]"))?);
        }
        interpretation.insert(symbol.clone(), SymbolMatrices { constant, args });
    }

    Ok(Certificate { dimension, goal, interpretation })
}

impl Certificate {
    /// Rebuilds the interpretation the core crate works with.
    pub fn to_interpretation(&self) -> Result<LinearInterpretation, InterpError> {
        let mut interp = LinearInterpretation::new(self.dimension)?;
        for (symbol, matrices) in &self.interpretation {
            interp.assign(symbol.clone(), matrices.constant.clone(), matrices.args.clone())?;
        }
        Ok(interp)
    }
}

fn matrix_value(m: &GuardedMatrix) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| {
            let cells: Vec<Value> = (0..m.cols())
                .map(|j| {
                    let entry = &m[(i, j)];
                    let as_u64: u64 = entry
                        .try_into()
                        .expect("certificate entries fit in 64 bits");
                    Value::Number(Number::from(as_u64))
                })
                .collect();
            Value::Array(cells)
        })
        .collect();
    Value::Array(rows)
}

/// Prints a certificate as deterministic JSON: object keys sorted, two-space
/// indentation, trailing newline.
pub fn print_certificate(cert: &Certificate) -> String {
    let mut interp = Map::new();
    for (symbol, matrices) in &cert.interpretation {
        let mut entry = Map::new();
        entry.insert("const".into(), matrix_value(&matrices.constant));
        entry.insert(
            "args".into(),
            Value::Array(matrices.args.iter().map(matrix_value).collect()),
        );
        interp.insert(symbol.clone(), Value::Object(entry));
    }
    let mut root = Map::new();
    root.insert("dimension".into(), Value::Number(Number::from(cert.dimension as u64)));
    root.insert("goal".into(), Value::String(cert.goal.to_string()));
    root.insert("interpretation".into(), Value::Object(interp));
    let mut text = serde_json::to_string_pretty(&Value::Object(root))
        .expect("JSON values serialize without errors");
    text.push('\n');
    text
}
