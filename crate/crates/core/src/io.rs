//! CSV readers and writers for step and grid functions.
//!
//! Two formats, both plain numeric CSV:
//!
//! ```text
//! value,measure          origin,cell_width
//! 3.0,2.0                0.0,0.125
//! 1.0,3.0                1.0
//!                        2.5
//! ```
//!
//! The left format lists one (value, measure) cell per row. The right format
//! fixes the grid geometry on its parameter row, then one sample per row.
//! Parse failures carry 1-based line and column positions.

use crate::error::{Error, Result};
use crate::grid::GridFunction1D;
use crate::rearrange::MeasureStepFunction;
use std::path::Path;

fn parse_field(raw: &str, line: usize, column: usize) -> Result<f64> {
    let trimmed = raw.trim();
    trimmed.parse::<f64>().map_err(|_| Error::Parse {
        line,
        column,
        message: format!("expected a number, found {trimmed:?}"),
    })
}

/// Split a data row into exactly `want` comma-separated fields, reporting
/// the 1-based character column of each field start.
fn split_row(row: &str, line: usize, want: usize) -> Result<Vec<(usize, &str)>> {
    let mut fields = Vec::new();
    let mut col = 1usize;
    for part in row.split(',') {
        fields.push((col, part));
        col += part.chars().count() + 1;
    }
    if fields.len() != want {
        return Err(Error::Parse {
            line,
            column: 1,
            message: format!("expected {want} fields, found {}", fields.len()),
        });
    }
    Ok(fields)
}

/// Content rows of a CSV body: (1-based line number, text), with blank rows
/// skipped.
fn content_rows(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty())
}

/// Parse the `value,measure` step-function format.
pub fn read_step_csv(text: &str) -> Result<MeasureStepFunction> {
    let mut rows = content_rows(text);
    let (line, header) = rows.next().ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "empty file".to_string(),
    })?;
    if header.trim() != "value,measure" {
        return Err(Error::Parse {
            line,
            column: 1,
            message: format!("expected header `value,measure`, found {:?}", header.trim()),
        });
    }
    let mut pairs = Vec::new();
    for (line, row) in rows {
        let fields = split_row(row, line, 2)?;
        let value = parse_field(fields[0].1, line, fields[0].0)?;
        let measure = parse_field(fields[1].1, line, fields[1].0)?;
        if !(value >= 0.0) || !value.is_finite() {
            return Err(Error::Parse {
                line,
                column: fields[0].0,
                message: format!("cell value must be finite and non-negative, got {value}"),
            });
        }
        if !(measure >= 0.0) || !measure.is_finite() {
            return Err(Error::Parse {
                line,
                column: fields[1].0,
                message: format!("cell measure must be finite and non-negative, got {measure}"),
            });
        }
        pairs.push((value, measure));
    }
    MeasureStepFunction::new(pairs)
}

/// Serialize to the `value,measure` format.
pub fn write_step_csv(f: &MeasureStepFunction) -> String {
    let mut out = String::from("value,measure\n");
    for &(v, m) in f.pairs() {
        out.push_str(&format!("{v},{m}\n"));
    }
    out
}

/// Parse the `origin,cell_width` grid format.
pub fn read_grid_csv(text: &str) -> Result<GridFunction1D> {
    let mut rows = content_rows(text);
    let (line, header) = rows.next().ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "empty file".to_string(),
    })?;
    if header.trim() != "origin,cell_width" {
        return Err(Error::Parse {
            line,
            column: 1,
            message: format!(
                "expected header `origin,cell_width`, found {:?}",
                header.trim()
            ),
        });
    }
    let (pline, params) = rows.next().ok_or(Error::Parse {
        line: line + 1,
        column: 1,
        message: "missing grid parameter row".to_string(),
    })?;
    let fields = split_row(params, pline, 2)?;
    let origin = parse_field(fields[0].1, pline, fields[0].0)?;
    let cell_width = parse_field(fields[1].1, pline, fields[1].0)?;
    let mut values = Vec::new();
    for (line, row) in rows {
        let fields = split_row(row, line, 1)?;
        values.push(parse_field(fields[0].1, line, fields[0].0)?);
    }
    if values.is_empty() {
        return Err(Error::Parse {
            line: pline + 1,
            column: 1,
            message: "grid has no sample rows".to_string(),
        });
    }
    GridFunction1D::new(origin, cell_width, values)
}

/// Serialize to the `origin,cell_width` format.
pub fn write_grid_csv(f: &GridFunction1D) -> String {
    let mut out = String::from("origin,cell_width\n");
    out.push_str(&format!("{},{}\n", f.origin(), f.cell_width()));
    for v in f.values() {
        out.push_str(&format!("{v}\n"));
    }
    out
}

/// Read either format as a step function, sniffing by header. Grid inputs
/// are collapsed to their value/measure cells.
pub fn read_function_csv(text: &str) -> Result<MeasureStepFunction> {
    let header = content_rows(text)
        .next()
        .map(|(_, l)| l.trim().to_string())
        .unwrap_or_default();
    match header.as_str() {
        "value,measure" => read_step_csv(text),
        "origin,cell_width" => Ok(read_grid_csv(text)?.to_step()),
        other => Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!(
                "unrecognized header {other:?}; expected `value,measure` or `origin,cell_width`"
            ),
        }),
    }
}

/// Load a step function (either format) from a file.
pub fn load_function(path: &Path) -> Result<MeasureStepFunction> {
    read_function_csv(&std::fs::read_to_string(path)?)
}

/// Load a grid function from a file (grid format only).
pub fn load_grid(path: &Path) -> Result<GridFunction1D> {
    read_grid_csv(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_round_trip() {
        let f = MeasureStepFunction::new([(3.0, 2.0), (1.0, 3.0)]).unwrap();
        let text = write_step_csv(&f);
        let back = read_step_csv(&text).unwrap();
        assert_eq!(f.pairs(), back.pairs());
    }

    #[test]
    fn grid_round_trip() {
        let g = GridFunction1D::new(-0.5, 0.25, vec![1.0, 0.0, 2.5]).unwrap();
        let text = write_grid_csv(&g);
        let back = read_grid_csv(&text).unwrap();
        assert_eq!(g.values(), back.values());
        assert_eq!(g.origin(), back.origin());
        assert_eq!(g.cell_width(), back.cell_width());
    }

    #[test]
    fn sniffing_reads_both_formats() {
        let step = read_function_csv("value,measure\n2.0,1.5\n").unwrap();
        assert_eq!(step.pairs(), &[(2.0, 1.5)]);
        let grid = read_function_csv("origin,cell_width\n0,0.5\n2\n2\n").unwrap();
        assert_eq!(grid.total_measure(), 1.0);
        assert_eq!(grid.max_value(), 2.0);
    }

    #[test]
    fn bad_number_reports_line_and_column() {
        let err = read_step_csv("value,measure\n1.0,2.0\n3.0,oops\n").unwrap_err();
        match err {
            Error::Parse { line, column, .. } => {
                assert_eq!(line, 3);
                assert_eq!(column, 5);
            }
            other => panic!("wrong error kind: {other}"),
        }
    }

    #[test]
    fn wrong_field_count_reports_line() {
        let err = read_grid_csv("origin,cell_width\n0.0,1.0\n1.0,2.0\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("wrong error kind: {other}"),
        }
    }

    #[test]
    fn negative_measure_rejected_with_position() {
        let err = read_step_csv("value,measure\n1.0,-2.0\n").unwrap_err();
        match err {
            Error::Parse { line, column, .. } => {
                assert_eq!(line, 2);
                assert_eq!(column, 5);
            }
            other => panic!("wrong error kind: {other}"),
        }
    }

    #[test]
    fn missing_header_is_an_error() {
        assert!(read_step_csv("1.0,2.0\n").is_err());
        assert!(read_grid_csv("").is_err());
        assert!(read_function_csv("bogus\n1\n").is_err());
    }
}
