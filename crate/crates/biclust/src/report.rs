//! Report files for a run: bicluster records, per-k summary, config echo.
//! Output is byte-deterministic for a given report; no timestamps, no
//! unordered containers, shortest-round-trip float formatting.

use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pipeline::{CompareReport, KAggregate, RunReport, SearchOutcome};

/// Record file: one line per (repeat, k) search attempt.
pub const RECORDS_FILE: &str = "biclusters.txt";
/// Summary table: one line per k, tab-separated, plottable as-is.
pub const SUMMARY_FILE: &str = "summary.tsv";
/// Echo of the configuration that produced the run.
pub const CONFIG_FILE: &str = "config.txt";
/// Per-k and overall strategy differences of a comparison run.
pub const DELTAS_FILE: &str = "deltas.tsv";

const SUMMARY_HEADER: &str = "k\tfound\tmsr_mean\tmsr_std\tsize_mean\tsize_std";
const DELTAS_HEADER: &str = "k\tmsr_mean_delta\tsize_mean_delta";

/// One line of the record file, read back without the source matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct StoredRecord {
    pub repeat: usize,
    pub k: usize,
    pub outcome: StoredOutcome,
}

/// Stored counterpart of a search outcome.
#[derive(Debug, Clone, PartialEq)]
pub enum StoredOutcome {
    Found { msr: f64, size: usize, rows: Vec<usize>, cols: Vec<usize> },
    Failed { reason: String },
}

/// Writes the three report files into `out_dir`, creating it if needed.
pub fn write_report(report: &RunReport, out_dir: &Path) -> Result<()> {
    std::fs::create_dir_all(out_dir)
        .map_err(|source| Error::Io { path: out_dir.to_path_buf(), source })?;
    write_file(&out_dir.join(RECORDS_FILE), &render_records(report))?;
    write_file(&out_dir.join(SUMMARY_FILE), &render_summary(report))?;
    write_file(&out_dir.join(CONFIG_FILE), &render_config(report))
}

/// Writes one subdirectory per strategy plus the deltas table.
pub fn write_compare_report(cmp: &CompareReport, out_dir: &Path) -> Result<()> {
    write_report(&cmp.random_mask, &out_dir.join(cmp.random_mask.config.strategy.to_string()))?;
    write_report(&cmp.shield, &out_dir.join(cmp.shield.config.strategy.to_string()))?;
    let mut out = String::from(DELTAS_HEADER);
    out.push('\n');
    for d in &cmp.per_k {
        out.push_str(&format!("{}\t{}\t{}\n", d.k, d.msr_mean_delta, d.size_mean_delta));
    }
    out.push_str(&format!("overall\t{}\t{}\n", cmp.msr_mean_delta, cmp.size_mean_delta));
    write_file(&out_dir.join(DELTAS_FILE), &out)
}

fn render_records(report: &RunReport) -> String {
    let mut out = String::from(
        "# one record per (repeat, k) search attempt, tab-separated\n\
         # found records:  repeat, k, \"found\", msr, size, rows, cols\n\
         # failed records: repeat, k, \"failed\", reason\n\
         # rows and cols are comma-separated 0-based indices into the input matrix\n",
    );
    for r in &report.records {
        match &r.outcome {
            SearchOutcome::Found(b) => out.push_str(&format!(
                "{}\t{}\tfound\t{}\t{}\t{}\t{}\n",
                r.repeat,
                r.k,
                b.msr(),
                b.size(),
                join_indices(b.rows()),
                join_indices(b.cols()),
            )),
            SearchOutcome::Failed(reason) => {
                out.push_str(&format!("{}\t{}\tfailed\t{}\n", r.repeat, r.k, reason))
            }
        }
    }
    out
}

fn render_summary(report: &RunReport) -> String {
    let mut out = String::from(SUMMARY_HEADER);
    out.push('\n');
    for a in &report.aggregates {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\n",
            a.k, a.found, a.msr_mean, a.msr_std, a.size_mean, a.size_std
        ));
    }
    out
}

fn render_config(report: &RunReport) -> String {
    let c = &report.config;
    format!(
        "strategy\t{}\nk_target\t{}\ndelta\t{}\nalpha\t{}\nphi\t{}\nseed\t{}\nrepeats\t{}\n",
        c.strategy, c.k_target, c.delta, c.alpha, c.phi, c.seed, c.repeats
    )
}

fn join_indices(indices: &[usize]) -> String {
    indices.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

/// Reads a record file back; comment lines are skipped.
pub fn read_records(path: &Path) -> Result<Vec<StoredRecord>> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').collect();
        if fields.len() < 4 {
            return Err(bad(path, line, format!("expected at least 4 fields, found {}", fields.len())));
        }
        let repeat = parse_field(path, line, fields[0], "repeat")?;
        let k = parse_field(path, line, fields[1], "k")?;
        let outcome = match fields[2] {
            "found" => {
                if fields.len() != 7 {
                    return Err(bad(
                        path,
                        line,
                        format!("a found record has 7 fields, found {}", fields.len()),
                    ));
                }
                StoredOutcome::Found {
                    msr: parse_field(path, line, fields[3], "msr")?,
                    size: parse_field(path, line, fields[4], "size")?,
                    rows: parse_indices(path, line, fields[5], "row index")?,
                    cols: parse_indices(path, line, fields[6], "column index")?,
                }
            }
            "failed" => StoredOutcome::Failed { reason: fields[3..].join("\t") },
            other => return Err(bad(path, line, format!("unknown status {other:?}"))),
        };
        out.push(StoredRecord { repeat, k, outcome });
    }
    Ok(out)
}

/// Reads a summary table back; the header line and comments are skipped.
pub fn read_summary(path: &Path) -> Result<Vec<KAggregate>> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || raw == SUMMARY_HEADER {
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').collect();
        if fields.len() != 6 {
            return Err(bad(path, line, format!("expected 6 fields, found {}", fields.len())));
        }
        out.push(KAggregate {
            k: parse_field(path, line, fields[0], "k")?,
            found: parse_field(path, line, fields[1], "found")?,
            msr_mean: parse_field(path, line, fields[2], "msr_mean")?,
            msr_std: parse_field(path, line, fields[3], "msr_std")?,
            size_mean: parse_field(path, line, fields[4], "size_mean")?,
            size_std: parse_field(path, line, fields[5], "size_std")?,
        });
    }
    Ok(out)
}

fn bad(path: &Path, line: usize, message: String) -> Error {
    Error::BadRecord { path: path.to_path_buf(), line, message }
}

fn parse_field<T: FromStr>(path: &Path, line: usize, token: &str, what: &str) -> Result<T> {
    token.parse().map_err(|_| bad(path, line, format!("cannot parse {what} from {token:?}")))
}

fn parse_indices(path: &Path, line: usize, token: &str, what: &str) -> Result<Vec<usize>> {
    if token.is_empty() {
        return Err(bad(path, line, format!("empty {what} list")));
    }
    token.split(',').map(|t| parse_field(path, line, t, what)).collect()
}
