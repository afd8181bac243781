use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use crate::Failure;

/// Report destination: a file when `--out` is given, stdout otherwise.
pub fn open(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => {
            let file = File::create(p)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display())))?;
            Box::new(BufWriter::new(file))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn io_failure(e: impl std::fmt::Display) -> Failure {
    Failure::Internal(format!("writing report: {e}"))
}

/// One JSON document per line.
pub fn json_lines<T: Serialize>(mut out: impl Write, rows: &[T]) -> Result<(), Failure> {
    for row in rows {
        serde_json::to_writer(&mut out, row).map_err(io_failure)?;
        out.write_all(b"\n").map_err(io_failure)?;
    }
    out.flush().map_err(io_failure)
}

pub fn json_document<T: Serialize + ?Sized>(mut out: impl Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut out, value).map_err(io_failure)?;
    out.write_all(b"\n").map_err(io_failure)?;
    out.flush().map_err(io_failure)
}

/// CSV with a header row taken from the field names of `T`.
pub fn csv_rows<T: Serialize>(out: impl Write, rows: &[T]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row).map_err(io_failure)?;
    }
    w.flush().map_err(io_failure)
}

/// Headerless CSV of string records.
pub fn csv_records(out: impl Write, rows: &[Vec<String>]) -> Result<(), Failure> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    for row in rows {
        w.write_record(row).map_err(io_failure)?;
    }
    w.flush().map_err(io_failure)
}
