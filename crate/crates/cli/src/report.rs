use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use crate::error::{CliError, CliResult};
use crate::io::VERSION;

pub const CSV_HEADER: [&str; 11] = ["suite", "check", "ctx", "n", "s", "kappa", "achieved", "bound", "pass", "seed", "ms"];

/// One instance of a suite. `pass` is `None` for reported-only measurements.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub id: usize,
    pub suite: &'static str,
    pub check: String,
    pub ctx: String,
    pub n: usize,
    pub s: Option<usize>,
    pub kappa: Option<String>,
    pub achieved: String,
    pub bound: Option<String>,
    pub pass: Option<bool>,
    pub seed: u64,
    pub ms: u64,
    pub version: &'static str,
    pub witness: Value,
}

impl Record {
    fn csv_fields(&self) -> [String; 11] {
        let pass = match self.pass {
            Some(true) => "true".to_string(),
            Some(false) => "false".to_string(),
            None => "n/a".to_string(),
        };
        [
            self.suite.to_string(),
            self.check.clone(),
            self.ctx.clone(),
            self.n.to_string(),
            self.s.map(|s| s.to_string()).unwrap_or_default(),
            self.kappa.clone().unwrap_or_default(),
            self.achieved.clone(),
            self.bound.clone().unwrap_or_default(),
            pass,
            self.seed.to_string(),
            self.ms.to_string(),
        ]
    }
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub rows: usize,
    pub passed: usize,
    pub failed: usize,
    pub reported: usize,
}

#[derive(Debug, Serialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub version: &'static str,
    pub config: Value,
    pub seed: u64,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl ExperimentReport {
    pub fn new(experiment: String, config: Value, seed: u64, records: Vec<Record>) -> Self {
        let summary = Summary {
            rows: records.len(),
            passed: records.iter().filter(|r| r.pass == Some(true)).count(),
            failed: records.iter().filter(|r| r.pass == Some(false)).count(),
            reported: records.iter().filter(|r| r.pass.is_none()).count(),
        };
        ExperimentReport { experiment, version: VERSION, config, seed, records, summary }
    }

    pub fn write_csv(&self, path: &Path) -> CliResult<()> {
        let mut w = csv::Writer::from_path(path).map_err(|e| CliError::io(path, e))?;
        w.write_record(CSV_HEADER).map_err(|e| CliError::io(path, e))?;
        for r in &self.records {
            w.write_record(r.csv_fields()).map_err(|e| CliError::io(path, e))?;
        }
        w.flush().map_err(|e| CliError::io(path, e))
    }
}
