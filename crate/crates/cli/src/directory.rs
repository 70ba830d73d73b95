//! The directory demo: load `name,number` records, assign basis indices in
//! load order, pad the index space to a power of two, and run the search
//! for one name. A sampled measurement may miss; the report says so rather
//! than silently retrying.

use std::path::Path;

use serde::Serialize;

use grover_core::{run, BasisIndex, DiffusionKind, IterationMode, QubitCount, RunConfig};

/// One loaded record; `index` is the basis state assigned by load order.
/// Indices above the record count are padding and stay unmarked, so the
/// marked state remains unique in the padded space.
#[derive(Debug, Clone)]
pub struct DirectoryRecord {
    pub key: String,
    pub value: String,
    pub index: usize,
}

/// Parses a UTF-8 file of `name,number` lines (LF or CRLF). The first comma
/// splits the fields.
pub fn load_records(path: &Path) -> Result<Vec<DirectoryRecord>, String> {
    let content = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut records = Vec::new();
    for (line_no, line) in content.lines().enumerate() {
        let Some((key, value)) = line.split_once(',') else {
            return Err(format!(
                "{}: line {}: malformed record (no comma)",
                path.display(),
                line_no + 1
            ));
        };
        records.push(DirectoryRecord {
            key: key.to_string(),
            value: value.to_string(),
            index: records.len(),
        });
    }
    if records.is_empty() {
        return Err(format!("{}: directory file is empty", path.display()));
    }
    Ok(records)
}

/// What the searched-for name resolved to.
#[derive(Debug, Clone, Serialize)]
pub struct DirectoryReport {
    pub name: String,
    pub found: bool,
    pub number: Option<String>,
    pub sampled_index: usize,
    pub success_prob: f64,
    pub oracle_queries: u64,
    pub classical_expected_queries: f64,
    pub attempts: u32,
}

/// Runs the search for `name`. Each retry is an independent run with a
/// derived seed; oracle queries accumulate across attempts.
pub fn search(
    records: &[DirectoryRecord],
    name: &str,
    seed: u64,
    retries: u32,
) -> Result<DirectoryReport, String> {
    let mut matches = records.iter().filter(|r| r.key == name);
    let record = matches
        .next()
        .ok_or_else(|| format!("name {name:?} not found in the directory"))?;
    if matches.next().is_some() {
        return Err(format!("name {name:?} appears more than once; names must be unique"));
    }

    let count = records.len();
    let qubits = ceil_log2(count).max(1);
    let n = QubitCount::new(qubits).map_err(|e| e.to_string())?;

    let mut total_queries = 0;
    for attempt in 0..=retries {
        let config = RunConfig {
            n,
            marked: BasisIndex(record.index),
            iterations: IterationMode::Auto,
            seed: seed.wrapping_add(u64::from(attempt)),
            sample_count: 1,
            trace: false,
            diffusion: DiffusionKind::Direct,
        };
        let result = run(&config).map_err(|e| e.to_string())?;
        total_queries += result.oracle_queries;
        let sampled = result.samples[0].value();
        let found = sampled == record.index;
        if found || attempt == retries {
            return Ok(DirectoryReport {
                name: name.to_string(),
                found,
                number: found.then(|| record.value.clone()),
                sampled_index: sampled,
                success_prob: result.final_success_prob,
                oracle_queries: total_queries,
                classical_expected_queries: count as f64 / 2.0,
                attempts: attempt + 1,
            });
        }
    }
    unreachable!("the final attempt always reports")
}

fn ceil_log2(count: usize) -> u32 {
    usize::BITS - (count - 1).leading_zeros()
}
