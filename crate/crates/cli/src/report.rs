//! CSV and JSON writers. Exact values are written as `num/den` strings;
//! floats only appear in columns whose name ends in `_approx` or in the
//! Monte Carlo summary.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use crate::config::Format;
use crate::error::CliError;

pub fn sink(path: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Writes rows as a CSV table or a JSON document `{"experiment", "rows"}`.
pub fn write_rows<T: Serialize>(
    out: &mut dyn Write,
    format: Format,
    experiment: &str,
    rows: &[T],
) -> Result<(), CliError> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a, T> {
                experiment: &'a str,
                rows: &'a [T],
            }
            serde_json::to_writer_pretty(&mut *out, &Doc { experiment, rows })?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// Writes a table with a header computed at run time.
pub fn write_dynamic(
    out: &mut dyn Write,
    format: Format,
    experiment: &str,
    header: &[String],
    rows: &[Vec<String>],
) -> Result<(), CliError> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(header)?;
            for r in rows {
                w.write_record(r)?;
            }
            w.flush()?;
        }
        Format::Json => {
            let objects: Vec<serde_json::Map<String, serde_json::Value>> = rows
                .iter()
                .map(|r| {
                    header
                        .iter()
                        .cloned()
                        .zip(r.iter().map(|v| serde_json::Value::String(v.clone())))
                        .collect()
                })
                .collect();
            let doc = serde_json::json!({ "experiment": experiment, "rows": objects });
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
    }
    Ok(())
}
