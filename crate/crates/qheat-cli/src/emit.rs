//! Deterministic CSV and JSON emission of evaluated rows.

use std::io::Write;

use crate::errors::{CliError, CliResult};
use crate::run::{SweepRow, COLUMNS};

/// Format one value in scientific notation with the given number of
/// significant digits (17 round-trips f64 exactly).
fn fmt_value(v: f64, precision: usize) -> String {
    format!("{:.*e}", precision.saturating_sub(1), v)
}

/// CSV: UTF-8, comma separator, fixed header, scientific notation,
/// trailing newline.
pub fn write_csv<W: Write>(w: &mut W, rows: &[SweepRow], precision: usize) -> std::io::Result<()> {
    writeln!(w, "{}", COLUMNS.join(","))?;
    for row in rows {
        let fields: Vec<String> = row
            .values()
            .iter()
            .map(|&v| fmt_value(v, precision))
            .collect();
        writeln!(w, "{}", fields.join(","))?;
    }
    Ok(())
}

/// JSON: array of flat objects with the same keys as the CSV header,
/// numbers as JSON numbers, trailing newline.
pub fn write_json<W: Write>(w: &mut W, rows: &[SweepRow]) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *w, rows)?;
    writeln!(w)
}

/// Write rows to the given path, or stdout when absent.
pub fn emit(
    rows: &[SweepRow],
    format: crate::config::OutputFormat,
    path: Option<&str>,
    precision: usize,
) -> CliResult<()> {
    if rows.is_empty() {
        return Err(CliError::Validation("nothing to emit: no rows".into()));
    }
    let mut buf = Vec::new();
    match format {
        crate::config::OutputFormat::Csv => write_csv(&mut buf, rows, precision),
        crate::config::OutputFormat::Json => write_json(&mut buf, rows),
    }
    .map_err(|e| CliError::Io(format!("serialization failed: {e}")))?;
    write_bytes(&buf, path)
}

/// Write an already serialized payload to the given path or stdout.
pub fn write_bytes(bytes: &[u8], path: Option<&str>) -> CliResult<()> {
    match path {
        Some(p) => {
            std::fs::write(p, bytes).map_err(|e| CliError::Io(format!("cannot write {p}: {e}")))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}")))
        }
    }
}
