//! CSV results: header `function,k,chunk,threads,reps,min_seconds,mean_seconds`,
//! one row per record in input order, `.` decimal separator, LF endings.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use crate::error::BenchError;
use crate::sweep::BenchRecord;

pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<(), BenchError> {
    if records.is_empty() {
        return Err(BenchError::Usage("no records to write".into()));
    }
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn emit_csv(records: &[BenchRecord], path: impl AsRef<Path>) -> Result<(), BenchError> {
    let file = File::create(path)?;
    write_csv(records, file)
}

pub fn parse_csv<R: Read>(input: R) -> Result<Vec<BenchRecord>, BenchError> {
    let mut r = csv::Reader::from_reader(input);
    r.deserialize().map(|row| row.map_err(BenchError::from)).collect()
}

pub fn read_csv(path: impl AsRef<Path>) -> Result<Vec<BenchRecord>, BenchError> {
    parse_csv(File::open(path)?)
}
