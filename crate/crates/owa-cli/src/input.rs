//! Comma-separated numeric rows: one vector per line, `#` lines and blank
//! lines skipped.

use crate::CliError;

pub fn parse_rows(text: &str) -> Result<Vec<Vec<f64>>, CliError> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        for (col, cell) in trimmed.split(',').enumerate() {
            let cell = cell.trim();
            let value: f64 = cell.parse().map_err(|_| {
                CliError::Validation(format!(
                    "input line {}, field {}: cannot parse \"{}\" as a number",
                    lineno + 1,
                    col + 1,
                    cell
                ))
            })?;
            row.push(value);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::Validation("input contains no data rows".into()));
    }
    Ok(rows)
}
