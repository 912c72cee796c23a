//! Loading delimited expression matrices, missing-value imputation, and
//! writing matrices back out.
//!
//! Missing entries are marked in the source file by a sentinel value
//! (conventionally -1 for the reference yeast matrix) and replaced by seeded
//! uniform draws, so a dataset can be re-imputed per repeat while the parsed
//! file is read only once.

use std::fmt;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::ExpressionMatrix;

/// On-disk layout of a matrix file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixFormat {
    /// Whitespace-separated numbers, one sample per line (the layout of the
    /// published yeast matrix).
    YeastRaw,
    Csv,
    Tsv,
}

impl MatrixFormat {
    fn split_line(self, line: &str) -> Vec<&str> {
        match self {
            MatrixFormat::YeastRaw => line.split_whitespace().collect(),
            MatrixFormat::Csv => line.split(',').map(str::trim).collect(),
            MatrixFormat::Tsv => line.split('\t').map(str::trim).collect(),
        }
    }

    fn separator(self) -> &'static str {
        match self {
            MatrixFormat::YeastRaw => " ",
            MatrixFormat::Csv => ",",
            MatrixFormat::Tsv => "\t",
        }
    }
}

impl FromStr for MatrixFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "yeast-raw" => Ok(MatrixFormat::YeastRaw),
            "csv" => Ok(MatrixFormat::Csv),
            "tsv" => Ok(MatrixFormat::Tsv),
            other => Err(format!("unknown format {other:?} (expected yeast-raw, csv, or tsv)")),
        }
    }
}

impl fmt::Display for MatrixFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixFormat::YeastRaw => write!(f, "yeast-raw"),
            MatrixFormat::Csv => write!(f, "csv"),
            MatrixFormat::Tsv => write!(f, "tsv"),
        }
    }
}

/// Where and how to read a dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct DatasetSpec {
    pub path: PathBuf,
    pub format: MatrixFormat,
    /// Entries equal to this value are treated as missing.
    pub missing_sentinel: f64,
    /// Uniform range missing entries are imputed from.
    pub impute_range: (f64, f64),
}

impl DatasetSpec {
    /// Spec with the conventional defaults: sentinel -1, imputation from
    /// [0, 800].
    pub fn new(path: impl Into<PathBuf>, format: MatrixFormat) -> Self {
        Self { path: path.into(), format, missing_sentinel: -1.0, impute_range: (0.0, 800.0) }
    }

    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.impute_range;
        if !lo.is_finite() || !hi.is_finite() || lo > hi {
            return Err(Error::InvalidParam {
                name: "impute_range",
                message: format!("expected finite low <= high, got [{lo}, {hi}]"),
            });
        }
        if !self.missing_sentinel.is_finite() {
            return Err(Error::InvalidParam {
                name: "missing_sentinel",
                message: "must be finite".into(),
            });
        }
        Ok(())
    }
}

/// A parsed matrix with its missing positions still unresolved.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    n_rows: usize,
    n_cols: usize,
    values: Vec<f64>,
    /// Flat row-major indices of sentinel entries, ascending.
    missing: Vec<usize>,
    impute_range: (f64, f64),
}

impl Dataset {
    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn missing_count(&self) -> usize {
        self.missing.len()
    }

    /// Replaces every missing entry with a uniform draw from the impute
    /// range, in row-major order of the missing positions.
    pub fn impute(&self, seed: u64) -> ExpressionMatrix {
        let mut values = self.values.clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (lo, hi) = self.impute_range;
        for &idx in &self.missing {
            values[idx] = rng.random_range(lo..=hi);
        }
        ExpressionMatrix::from_real(self.n_rows, self.n_cols, values)
            .expect("parsed dataset entries are finite")
    }
}

/// Parses the file named by `spec` into a [`Dataset`], recording sentinel
/// positions instead of resolving them.
pub fn load_dataset(spec: &DatasetSpec) -> Result<Dataset> {
    spec.validate()?;
    let text = std::fs::read_to_string(&spec.path)
        .map_err(|source| Error::Io { path: spec.path.clone(), source })?;
    let mut values = Vec::new();
    let mut missing = Vec::new();
    let mut n_cols = 0;
    let mut n_rows = 0;
    for (line_idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let tokens = spec.format.split_line(line);
        if n_rows == 0 {
            n_cols = tokens.len();
        } else if tokens.len() != n_cols {
            return Err(Error::RaggedRow {
                path: spec.path.clone(),
                line: line_idx + 1,
                expected: n_cols,
                found: tokens.len(),
            });
        }
        for token in tokens {
            let v: f64 = token.parse().map_err(|_| Error::BadToken {
                path: spec.path.clone(),
                line: line_idx + 1,
                token: token.to_string(),
            })?;
            if !v.is_finite() {
                return Err(Error::BadToken {
                    path: spec.path.clone(),
                    line: line_idx + 1,
                    token: token.to_string(),
                });
            }
            if v == spec.missing_sentinel {
                missing.push(values.len());
            }
            values.push(v);
        }
        n_rows += 1;
    }
    if n_rows == 0 || n_cols == 0 {
        return Err(Error::EmptyFile { path: spec.path.clone() });
    }
    Ok(Dataset { n_rows, n_cols, values, missing, impute_range: spec.impute_range })
}

/// Loads and imputes in one step.
pub fn load_matrix(spec: &DatasetSpec, seed: u64) -> Result<ExpressionMatrix> {
    Ok(load_dataset(spec)?.impute(seed))
}

/// Writes the real parts of `m` in the given format. Values print in
/// shortest-round-trip form, so a sentinel-free file survives a load/write
/// cycle with its values bit-identical.
pub fn write_matrix(m: &ExpressionMatrix, path: &Path, format: MatrixFormat) -> Result<()> {
    let mut out = String::new();
    for i in 0..m.n_rows() {
        for j in 0..m.n_cols() {
            if j > 0 {
                out.push_str(format.separator());
            }
            let v = m.get(i, j).re;
            out.push_str(&format!("{v}"));
        }
        out.push('\n');
    }
    let mut file = std::fs::File::create(path)
        .map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    file.write_all(out.as_bytes())
        .map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write_temp(name: &str, contents: &str) -> PathBuf {
        let path = std::env::temp_dir().join(format!("biclust-dataset-{name}-{}", std::process::id()));
        std::fs::write(&path, contents).unwrap();
        path
    }

    #[test]
    fn parses_a_small_tsv() {
        let path = write_temp("small", "1\t2\n3\t4\n5\t6\n");
        let spec = DatasetSpec::new(&path, MatrixFormat::Tsv);
        let m = load_matrix(&spec, 0).unwrap();
        assert_eq!((m.n_rows(), m.n_cols()), (3, 2));
        assert_eq!(m.get(2, 1).re, 6.0);
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn yeast_raw_splits_on_any_whitespace() {
        let path = write_temp("raw", "10  20 30\n40 50\t60\n");
        let spec = DatasetSpec::new(&path, MatrixFormat::YeastRaw);
        let m = load_matrix(&spec, 0).unwrap();
        assert_eq!((m.n_rows(), m.n_cols()), (2, 3));
        assert_eq!(m.get(1, 2).re, 60.0);
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn ragged_rows_report_the_line_number() {
        let path = write_temp("ragged", "1,2,3\n4,5\n");
        let spec = DatasetSpec::new(&path, MatrixFormat::Csv);
        match load_dataset(&spec) {
            Err(Error::RaggedRow { line, expected, found, .. }) => {
                assert_eq!((line, expected, found), (2, 3, 2));
            }
            other => panic!("expected ragged-row error, got {other:?}"),
        }
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn bad_tokens_and_empty_files_are_rejected() {
        let path = write_temp("bad", "1 2\n3 x\n");
        let spec = DatasetSpec::new(&path, MatrixFormat::YeastRaw);
        match load_dataset(&spec) {
            Err(Error::BadToken { line, token, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(token, "x");
            }
            other => panic!("expected bad-token error, got {other:?}"),
        }
        std::fs::remove_file(&path).unwrap();

        let path = write_temp("empty", "\n\n");
        let spec = DatasetSpec::new(&path, MatrixFormat::YeastRaw);
        assert!(matches!(load_dataset(&spec), Err(Error::EmptyFile { .. })));
        std::fs::remove_file(&path).unwrap();

        let path = write_temp("inf", "1 inf\n");
        let spec = DatasetSpec::new(&path, MatrixFormat::YeastRaw);
        assert!(matches!(load_dataset(&spec), Err(Error::BadToken { .. })));
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn imputation_is_deterministic_and_in_range() {
        let path = write_temp("missing", "1 -1 3\n-1 5 6\n");
        let spec = DatasetSpec::new(&path, MatrixFormat::YeastRaw);
        let ds = load_dataset(&spec).unwrap();
        assert_eq!(ds.missing_count(), 2);
        let a = ds.impute(9);
        let b = ds.impute(9);
        assert_eq!(a, b);
        let c = ds.impute(10);
        assert_ne!(a, c);
        for (i, j) in [(0usize, 1usize), (1, 0)] {
            let v = a.get(i, j).re;
            assert!((0.0..=800.0).contains(&v), "imputed {v} out of range");
        }
        assert_eq!(a.get(0, 0).re, 1.0);
        assert_eq!(a.get(1, 2).re, 6.0);
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn write_then_load_reproduces_values_exactly() {
        let vals = vec![0.1, -2.75, 3.0, 1e-9, 123456.789, 0.0];
        let m = ExpressionMatrix::from_real(2, 3, vals).unwrap();
        for format in [MatrixFormat::YeastRaw, MatrixFormat::Csv, MatrixFormat::Tsv] {
            let path = std::env::temp_dir()
                .join(format!("biclust-roundtrip-{format}-{}", std::process::id()));
            write_matrix(&m, &path, format).unwrap();
            let mut spec = DatasetSpec::new(&path, format);
            spec.missing_sentinel = -1e300;
            let back = load_matrix(&spec, 0).unwrap();
            assert_eq!(back, m, "round trip failed for {format}");
            std::fs::remove_file(&path).unwrap();
        }
    }

    #[test]
    fn spec_validation() {
        let mut spec = DatasetSpec::new("x", MatrixFormat::Csv);
        spec.impute_range = (5.0, 1.0);
        assert!(matches!(spec.validate(), Err(Error::InvalidParam { name: "impute_range", .. })));
        let mut spec = DatasetSpec::new("x", MatrixFormat::Csv);
        spec.missing_sentinel = f64::NAN;
        assert!(spec.validate().is_err());
    }
}
