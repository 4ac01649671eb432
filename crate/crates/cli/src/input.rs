//! Input loading: function descriptions (inline JSON or file paths) and
//! grid CSV files. All malformed-text failures come back as
//! [`Error::Parse`] with a 1-based line and column, so the driver can exit
//! with a usage diagnostic.

use std::fs;

use orlicz_kit::error::Error;
use orlicz_kit::grid::GridFunction1D;
use orlicz_kit::weight::WeightFunction;
use orlicz_kit::young::YoungFunction;

/// Inline JSON if the argument starts with `{`, otherwise a file path.
fn desc_text(arg: &str) -> Result<String, Error> {
    let trimmed = arg.trim();
    if trimmed.starts_with('{') {
        Ok(trimmed.to_string())
    } else {
        fs::read_to_string(trimmed)
            .map_err(|e| Error::invalid("input file", format!("{trimmed}: {e}")))
    }
}

fn json_to_parse(e: &serde_json::Error) -> Error {
    // serde_json appends its own " at line L column C"; strip it since the
    // position is carried structurally.
    let full = e.to_string();
    let message = full.split(" at line ").next().unwrap_or(&full).to_string();
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message,
    }
}

/// Loads and validates a Young-function description.
pub fn load_young(arg: &str) -> Result<YoungFunction, Error> {
    let text = desc_text(arg)?;
    let phi: YoungFunction = serde_json::from_str(&text).map_err(|e| json_to_parse(&e))?;
    phi.validate()?;
    Ok(phi)
}

/// Loads and validates a weight description.
pub fn load_weight(arg: &str) -> Result<WeightFunction, Error> {
    let text = desc_text(arg)?;
    let w: WeightFunction = serde_json::from_str(&text).map_err(|e| json_to_parse(&e))?;
    w.validate()?;
    Ok(w)
}

/// Reads a grid function from a CSV file: rows `x,value` where the `x`
/// column holds the left edges of uniform cells. Blank lines and `#`
/// comments are skipped; one non-numeric header row is tolerated.
pub fn read_grid_csv(path: &str) -> Result<GridFunction1D, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::invalid("input file", format!("{path}: {e}")))?;
    parse_grid_csv(&text)
}

fn value_column(raw: &str) -> usize {
    raw.find(',').map(|i| i + 2).unwrap_or(1)
}

/// CSV body parser behind [`read_grid_csv`], split out for tests.
pub fn parse_grid_csv(text: &str) -> Result<GridFunction1D, Error> {
    let mut rows: Vec<(usize, f64, f64)> = Vec::new();
    let mut header_allowed = true;
    let mut last_line = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = raw.splitn(2, ',');
        let x_field = fields.next().unwrap_or("");
        let v_field = fields.next().ok_or(Error::Parse {
            line,
            column: raw.len().max(1),
            message: "expected two comma-separated fields: x,value".to_string(),
        })?;
        let x = match x_field.trim().parse::<f64>() {
            Ok(x) => x,
            Err(_) if header_allowed => {
                header_allowed = false;
                continue;
            }
            Err(_) => {
                return Err(Error::Parse {
                    line,
                    column: 1,
                    message: format!("expected a number, got {:?}", x_field.trim()),
                })
            }
        };
        header_allowed = false;
        if !x.is_finite() {
            return Err(Error::Parse {
                line,
                column: 1,
                message: format!("cell edge must be finite, got {x}"),
            });
        }
        let v: f64 = v_field.trim().parse().map_err(|_| Error::Parse {
            line,
            column: value_column(raw),
            message: format!("expected a number, got {:?}", v_field.trim()),
        })?;
        if !v.is_finite() || v < 0.0 {
            return Err(Error::Parse {
                line,
                column: value_column(raw),
                message: format!("values must be finite and non-negative, got {v}"),
            });
        }
        rows.push((line, x, v));
    }
    if rows.len() < 2 {
        return Err(Error::Parse {
            line: last_line,
            column: 1,
            message: "need at least two rows to infer the cell width".to_string(),
        });
    }
    let dx = rows[1].1 - rows[0].1;
    if !(dx > 0.0) || !dx.is_finite() {
        return Err(Error::Parse {
            line: rows[1].0,
            column: 1,
            message: "cell edges must be strictly increasing".to_string(),
        });
    }
    for w in rows.windows(2).skip(1) {
        let step = w[1].1 - w[0].1;
        if (step - dx).abs() > 1e-9 * dx {
            return Err(Error::Parse {
                line: w[1].0,
                column: 1,
                message: format!("non-uniform cell spacing: expected {dx}, got {step}"),
            });
        }
    }
    let values: Vec<f64> = rows.iter().map(|r| r.2).collect();
    GridFunction1D::new(rows[0].1, dx, values)
}
