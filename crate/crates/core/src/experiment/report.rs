use std::io::Write;
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("no records to write")]
    Empty,
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(format!("unknown report format `{other}`")),
        }
    }
}

/// A record with a flat CSV projection. JSON uses the full serde form.
pub trait Tabular: Serialize + DeserializeOwned {
    fn header() -> Vec<&'static str>;
    fn row(&self) -> Vec<String>;
}

pub fn write_report<R: Tabular, W: Write>(
    records: &[R],
    format: ReportFormat,
    mut sink: W,
) -> Result<(), ReportError> {
    if records.is_empty() {
        return Err(ReportError::Empty);
    }
    match format {
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut sink);
            w.write_record(R::header())?;
            for r in records {
                w.write_record(r.row())?;
            }
            w.flush()?;
        }
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut sink, records)?;
            writeln!(sink)?;
        }
    }
    sink.flush()?;
    Ok(())
}

pub fn read_json_report<R: Tabular>(text: &str) -> Result<Vec<R>, ReportError> {
    Ok(serde_json::from_str(text)?)
}
