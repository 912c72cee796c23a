//! Dense expression-matrix storage and the residue/MSR algebra.
//!
//! Entries are complex-capable: raw data is real, and nonzero imaginary
//! parts only ever appear through the shielding transform in [`crate::shield`].
//! All means and residues are computed in complex arithmetic end to end, so
//! fully real data reduces exactly to the classical real-valued formulas.

use num_complex::Complex64;

use crate::error::{Axis, Error, Result};

/// A matrix entry: real expression level plus an imaginary shielding component.
pub type Scalar = Complex64;

/// Complex modulus that is bit-exact on real values.
///
/// `hypot` is not guaranteed to return `|re|` exactly when `im == 0` on every
/// platform, and the real-data reduction of the shielded scores relies on it,
/// so the zero-imaginary case is handled explicitly.
#[inline]
pub(crate) fn modulus(z: Scalar) -> f64 {
    if z.im == 0.0 {
        z.re.abs()
    } else {
        z.re.hypot(z.im)
    }
}

/// Dense row-major sample-by-feature matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpressionMatrix {
    n_rows: usize,
    n_cols: usize,
    data: Vec<Scalar>,
}

impl ExpressionMatrix {
    /// Builds a matrix from real-valued entries in row-major order.
    pub fn from_real(n_rows: usize, n_cols: usize, values: Vec<f64>) -> Result<Self> {
        let data = values.into_iter().map(|v| Scalar::new(v, 0.0)).collect();
        Self::from_complex(n_rows, n_cols, data)
    }

    /// Builds a matrix from complex entries in row-major order.
    pub fn from_complex(n_rows: usize, n_cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if n_rows == 0 || n_cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if data.len() != n_rows * n_cols {
            return Err(Error::DimensionMismatch { rows: n_rows, cols: n_cols, got: data.len() });
        }
        for (idx, v) in data.iter().enumerate() {
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(Error::NonFiniteEntry { row: idx / n_cols, col: idx % n_cols });
            }
        }
        Ok(Self { n_rows, n_cols, data })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Scalar {
        assert!(row < self.n_rows && col < self.n_cols, "entry ({row}, {col}) out of range");
        self.data[row * self.n_cols + col]
    }

    #[inline]
    pub(crate) fn set(&mut self, row: usize, col: usize, value: Scalar) {
        debug_assert!(row < self.n_rows && col < self.n_cols);
        self.data[row * self.n_cols + col] = value;
    }

    /// True when no entry carries an imaginary (shielding) component.
    pub fn is_fully_real(&self) -> bool {
        self.data.iter().all(|v| v.im == 0.0)
    }

    /// Minimum and maximum over the real parts of all entries.
    pub fn real_range(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for v in &self.data {
            lo = lo.min(v.re);
            hi = hi.max(v.re);
        }
        (lo, hi)
    }

    /// A copy with every imaginary part dropped.
    pub fn real_part(&self) -> ExpressionMatrix {
        ExpressionMatrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            data: self.data.iter().map(|v| Scalar::new(v.re, 0.0)).collect(),
        }
    }

    fn check_row(&self, i: usize) -> Result<()> {
        if i >= self.n_rows {
            return Err(Error::IndexOutOfRange {
                axis: Axis::Row,
                index: i,
                rows: self.n_rows,
                cols: self.n_cols,
            });
        }
        Ok(())
    }

    fn check_col(&self, j: usize) -> Result<()> {
        if j >= self.n_cols {
            return Err(Error::IndexOutOfRange {
                axis: Axis::Col,
                index: j,
                rows: self.n_rows,
                cols: self.n_cols,
            });
        }
        Ok(())
    }

    /// Mean of row `i` over the bicluster's columns.
    pub fn row_mean(&self, b: &Bicluster, i: usize) -> Result<Scalar> {
        if !b.contains_row(i) {
            return Err(Error::IndexOutsideBicluster { axis: Axis::Row, index: i });
        }
        Ok(self.mean_over_cols(i, b.cols()))
    }

    /// Mean of column `j` over the bicluster's rows.
    pub fn col_mean(&self, b: &Bicluster, j: usize) -> Result<Scalar> {
        if !b.contains_col(j) {
            return Err(Error::IndexOutsideBicluster { axis: Axis::Col, index: j });
        }
        Ok(self.mean_over_rows(j, b.rows()))
    }

    /// Mean of every entry in the bicluster.
    pub fn overall_mean(&self, b: &Bicluster) -> Scalar {
        self.mean_over_block(b.rows(), b.cols())
    }

    /// Residue of entry `(i, j)` with respect to the bicluster's means.
    pub fn residue(&self, b: &Bicluster, i: usize, j: usize) -> Result<Scalar> {
        let rp = b.row_position(i).ok_or(Error::IndexOutsideBicluster { axis: Axis::Row, index: i })?;
        let cp = b.col_position(j).ok_or(Error::IndexOutsideBicluster { axis: Axis::Col, index: j })?;
        let means = self.block_means(b.rows(), b.cols());
        Ok(self.residue_at(b.rows(), b.cols(), &means, rp, cp))
    }

    /// Unnormalized sum of squared deviations from the overall mean.
    ///
    /// Defined for unshielded (fully real) sub-matrices only; reported but
    /// never used as a rejection criterion.
    pub fn variance(&self, b: &Bicluster) -> Result<f64> {
        for &i in b.rows() {
            for &j in b.cols() {
                let v = self.get(i, j);
                if v.im != 0.0 {
                    return Err(Error::ShieldedVariance { row: i, col: j });
                }
            }
        }
        let mu = self.overall_mean(b).re;
        let mut acc = 0.0;
        for &i in b.rows() {
            for &j in b.cols() {
                let d = self.get(i, j).re - mu;
                acc += d * d;
            }
        }
        Ok(acc)
    }

    /// Mean squared residue of the bicluster.
    ///
    /// Computed as the modulus of the complex sum of squared residues divided
    /// by the cell count, which reduces exactly to the plain mean of squared
    /// residues on fully real data.
    pub fn msr(&self, b: &Bicluster) -> f64 {
        let means = self.block_means(b.rows(), b.cols());
        let sum = self.block_sq_sum(b.rows(), b.cols(), &means);
        modulus(sum) / (b.rows().len() * b.cols().len()) as f64
    }

    /// Mean squared residue of a single row within the bicluster.
    pub fn row_msr(&self, b: &Bicluster, i: usize) -> Result<f64> {
        let rp = b.row_position(i).ok_or(Error::IndexOutsideBicluster { axis: Axis::Row, index: i })?;
        let means = self.block_means(b.rows(), b.cols());
        Ok(self.row_msr_at(b.rows(), b.cols(), &means, rp))
    }

    /// Mean squared residue of a single column within the bicluster.
    pub fn col_msr(&self, b: &Bicluster, j: usize) -> Result<f64> {
        let cp = b.col_position(j).ok_or(Error::IndexOutsideBicluster { axis: Axis::Col, index: j })?;
        let means = self.block_means(b.rows(), b.cols());
        Ok(self.col_msr_at(b.rows(), b.cols(), &means, cp))
    }

    /// Mean squared residue over the real parts of the bicluster's entries.
    ///
    /// Shielding preserves real parts, so this is the score of the original
    /// data regardless of how much of the bicluster has been shielded.
    pub fn real_msr(&self, b: &Bicluster) -> f64 {
        let means = self.block_means(b.rows(), b.cols());
        let sum = self.block_real_sq_sum(b.rows(), b.cols(), &means);
        sum / (b.rows().len() * b.cols().len()) as f64
    }

    // ----- kernels shared with the greedy engine -----

    #[inline]
    pub(crate) fn mean_over_cols(&self, i: usize, cols: &[usize]) -> Scalar {
        let mut acc = Scalar::new(0.0, 0.0);
        for &j in cols {
            acc += self.data[i * self.n_cols + j];
        }
        acc / cols.len() as f64
    }

    #[inline]
    pub(crate) fn mean_over_rows(&self, j: usize, rows: &[usize]) -> Scalar {
        let mut acc = Scalar::new(0.0, 0.0);
        for &i in rows {
            acc += self.data[i * self.n_cols + j];
        }
        acc / rows.len() as f64
    }

    pub(crate) fn mean_over_block(&self, rows: &[usize], cols: &[usize]) -> Scalar {
        let mut acc = Scalar::new(0.0, 0.0);
        for &i in rows {
            for &j in cols {
                acc += self.data[i * self.n_cols + j];
            }
        }
        acc / (rows.len() * cols.len()) as f64
    }

    pub(crate) fn block_means(&self, rows: &[usize], cols: &[usize]) -> BlockMeans {
        BlockMeans {
            row_means: rows.iter().map(|&i| self.mean_over_cols(i, cols)).collect(),
            col_means: cols.iter().map(|&j| self.mean_over_rows(j, rows)).collect(),
            overall: self.mean_over_block(rows, cols),
        }
    }

    /// Residue at row position `rp`, column position `cp` of the block.
    ///
    /// Grouped as `(a - row_mean) - (col_mean - overall)` so that single-row
    /// and single-column blocks cancel to exactly zero.
    #[inline]
    pub(crate) fn residue_at(
        &self,
        rows: &[usize],
        cols: &[usize],
        means: &BlockMeans,
        rp: usize,
        cp: usize,
    ) -> Scalar {
        let a = self.data[rows[rp] * self.n_cols + cols[cp]];
        (a - means.row_means[rp]) - (means.col_means[cp] - means.overall)
    }

    pub(crate) fn row_sq_sum(&self, rows: &[usize], cols: &[usize], means: &BlockMeans, rp: usize) -> Scalar {
        let mut acc = Scalar::new(0.0, 0.0);
        for cp in 0..cols.len() {
            let r = self.residue_at(rows, cols, means, rp, cp);
            acc += r * r;
        }
        acc
    }

    pub(crate) fn col_sq_sum(&self, rows: &[usize], cols: &[usize], means: &BlockMeans, cp: usize) -> Scalar {
        let mut acc = Scalar::new(0.0, 0.0);
        for rp in 0..rows.len() {
            let r = self.residue_at(rows, cols, means, rp, cp);
            acc += r * r;
        }
        acc
    }

    pub(crate) fn block_sq_sum(&self, rows: &[usize], cols: &[usize], means: &BlockMeans) -> Scalar {
        let mut acc = Scalar::new(0.0, 0.0);
        for rp in 0..rows.len() {
            for cp in 0..cols.len() {
                let r = self.residue_at(rows, cols, means, rp, cp);
                acc += r * r;
            }
        }
        acc
    }

    pub(crate) fn block_real_sq_sum(&self, rows: &[usize], cols: &[usize], means: &BlockMeans) -> f64 {
        let mut acc = 0.0;
        for rp in 0..rows.len() {
            for cp in 0..cols.len() {
                let r = self.residue_at(rows, cols, means, rp, cp);
                acc += r.re * r.re;
            }
        }
        acc
    }

    #[inline]
    pub(crate) fn row_msr_at(&self, rows: &[usize], cols: &[usize], means: &BlockMeans, rp: usize) -> f64 {
        modulus(self.row_sq_sum(rows, cols, means, rp)) / cols.len() as f64
    }

    #[inline]
    pub(crate) fn col_msr_at(&self, rows: &[usize], cols: &[usize], means: &BlockMeans, cp: usize) -> f64 {
        modulus(self.col_sq_sum(rows, cols, means, cp)) / rows.len() as f64
    }

    pub(crate) fn msr_of(&self, rows: &[usize], cols: &[usize]) -> f64 {
        let means = self.block_means(rows, cols);
        modulus(self.block_sq_sum(rows, cols, &means)) / (rows.len() * cols.len()) as f64
    }

    pub(crate) fn real_msr_of(&self, rows: &[usize], cols: &[usize]) -> f64 {
        let means = self.block_means(rows, cols);
        self.block_real_sq_sum(rows, cols, &means) / (rows.len() * cols.len()) as f64
    }
}

/// Per-block means, indexed by position within the block's row/column lists.
pub(crate) struct BlockMeans {
    pub row_means: Vec<Scalar>,
    pub col_means: Vec<Scalar>,
    pub overall: Scalar,
}

/// A sub-matrix selected by a row-index set and a column-index set, with its
/// MSR score.
///
/// Index lists are sorted ascending and duplicate-free. The stored score is
/// the one the producing search reported: the plain MSR for real-data
/// searches, the real-part MSR for shielded searches (identical on real
/// data).
#[derive(Debug, Clone, PartialEq)]
pub struct Bicluster {
    rows: Vec<usize>,
    cols: Vec<usize>,
    msr: f64,
}

impl Bicluster {
    /// Validates the index sets against `m` and computes the MSR.
    pub fn new(m: &ExpressionMatrix, mut rows: Vec<usize>, mut cols: Vec<usize>) -> Result<Self> {
        if rows.is_empty() || cols.is_empty() {
            return Err(Error::EmptyIndexSet);
        }
        rows.sort_unstable();
        cols.sort_unstable();
        for w in rows.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateIndex { axis: Axis::Row, index: w[0] });
            }
        }
        for w in cols.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateIndex { axis: Axis::Col, index: w[0] });
            }
        }
        if let Some(&i) = rows.last() {
            m.check_row(i)?;
        }
        if let Some(&j) = cols.last() {
            m.check_col(j)?;
        }
        let msr = m.msr_of(&rows, &cols);
        Ok(Self { rows, cols, msr })
    }

    /// The bicluster covering the whole matrix.
    pub fn full(m: &ExpressionMatrix) -> Self {
        let rows: Vec<usize> = (0..m.n_rows()).collect();
        let cols: Vec<usize> = (0..m.n_cols()).collect();
        let msr = m.msr_of(&rows, &cols);
        Self { rows, cols, msr }
    }

    pub(crate) fn from_parts(rows: Vec<usize>, cols: Vec<usize>, msr: f64) -> Self {
        debug_assert!(!rows.is_empty() && !cols.is_empty());
        Self { rows, cols, msr }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    /// The score reported by the search that produced this bicluster.
    pub fn msr(&self) -> f64 {
        self.msr
    }

    /// Number of cells, `|rows| * |cols|`.
    pub fn size(&self) -> usize {
        self.rows.len() * self.cols.len()
    }

    pub fn contains_row(&self, i: usize) -> bool {
        self.rows.binary_search(&i).is_ok()
    }

    pub fn contains_col(&self, j: usize) -> bool {
        self.cols.binary_search(&j).is_ok()
    }

    pub(crate) fn row_position(&self, i: usize) -> Option<usize> {
        self.rows.binary_search(&i).ok()
    }

    pub(crate) fn col_position(&self, j: usize) -> Option<usize> {
        self.cols.binary_search(&j).ok()
    }

    /// Jaccard overlap between the two biclusters' cell sets.
    pub fn cell_jaccard(&self, other: &Bicluster) -> f64 {
        let shared_rows = intersection_size(&self.rows, &other.rows);
        let shared_cols = intersection_size(&self.cols, &other.cols);
        let inter = shared_rows * shared_cols;
        let union = self.size() + other.size() - inter;
        if union == 0 {
            return 0.0;
        }
        inter as f64 / union as f64
    }
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let mut n = 0;
    let mut it = b.iter().peekable();
    for &x in a {
        while let Some(&&y) = it.peek() {
            if y < x {
                it.next();
            } else {
                break;
            }
        }
        if it.peek() == Some(&&x) {
            n += 1;
        }
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture() -> (ExpressionMatrix, Bicluster) {
        let m = ExpressionMatrix::from_real(2, 2, vec![1.0, 2.0, 3.0, 5.0]).unwrap();
        let b = Bicluster::full(&m);
        (m, b)
    }

    #[test]
    fn hand_means() {
        let (m, b) = fixture();
        assert_eq!(m.row_mean(&b, 0).unwrap(), Scalar::new(1.5, 0.0));
        assert_eq!(m.row_mean(&b, 1).unwrap(), Scalar::new(4.0, 0.0));
        assert_eq!(m.col_mean(&b, 0).unwrap(), Scalar::new(2.0, 0.0));
        assert_eq!(m.col_mean(&b, 1).unwrap(), Scalar::new(3.5, 0.0));
        assert_eq!(m.overall_mean(&b), Scalar::new(2.75, 0.0));
    }

    #[test]
    fn hand_residues_and_scores() {
        let (m, b) = fixture();
        assert_eq!(m.residue(&b, 0, 0).unwrap().re, 0.25);
        assert_eq!(m.residue(&b, 0, 1).unwrap().re, -0.25);
        assert_eq!(m.residue(&b, 1, 0).unwrap().re, -0.25);
        assert_eq!(m.residue(&b, 1, 1).unwrap().re, 0.25);
        assert_eq!(m.msr(&b), 0.0625);
        assert_eq!(m.variance(&b).unwrap(), 8.75);
        assert_eq!(m.row_msr(&b, 0).unwrap(), 0.0625);
        assert_eq!(m.col_msr(&b, 0).unwrap(), 0.0625);
    }

    #[test]
    fn additive_matrix_has_zero_residues() {
        let m = ExpressionMatrix::from_real(2, 2, vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        let b = Bicluster::full(&m);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(m.residue(&b, i, j).unwrap(), Scalar::new(0.0, 0.0));
            }
        }
        assert_eq!(m.msr(&b), 0.0);
    }

    #[test]
    fn constant_matrix_means_and_variance() {
        let m = ExpressionMatrix::from_real(3, 2, vec![7.0; 6]).unwrap();
        let b = Bicluster::full(&m);
        assert_eq!(m.row_mean(&b, 1).unwrap().re, 7.0);
        assert_eq!(m.col_mean(&b, 0).unwrap().re, 7.0);
        assert_eq!(m.overall_mean(&b).re, 7.0);
        assert_eq!(m.variance(&b).unwrap(), 0.0);
        assert_eq!(m.msr(&b), 0.0);
    }

    #[test]
    fn single_row_and_column_are_exactly_zero() {
        // Values chosen so naive ungrouped evaluation would leave rounding dust.
        let m = ExpressionMatrix::from_real(3, 3, vec![0.1, 0.7, 1.3, 2.9, 0.3, 5.1, 4.4, 8.2, 0.01]).unwrap();
        let row = Bicluster::new(&m, vec![1], vec![0, 1, 2]).unwrap();
        assert_eq!(m.msr(&row), 0.0);
        assert_eq!(m.residue(&row, 1, 2).unwrap(), Scalar::new(0.0, 0.0));
        let col = Bicluster::new(&m, vec![0, 1, 2], vec![1]).unwrap();
        assert_eq!(m.msr(&col), 0.0);
        assert_eq!(m.residue(&col, 2, 1).unwrap(), Scalar::new(0.0, 0.0));
        let cell = Bicluster::new(&m, vec![2], vec![0]).unwrap();
        assert_eq!(m.msr(&cell), 0.0);
        assert_eq!(m.residue(&cell, 2, 0).unwrap(), Scalar::new(0.0, 0.0));
    }

    #[test]
    fn single_row_or_column_mean_is_the_entry() {
        let m = ExpressionMatrix::from_real(2, 2, vec![1.0, 2.0, 3.0, 5.0]).unwrap();
        let b = Bicluster::new(&m, vec![0, 1], vec![1]).unwrap();
        assert_eq!(m.row_mean(&b, 0).unwrap().re, 2.0);
        let b = Bicluster::new(&m, vec![1], vec![0, 1]).unwrap();
        assert_eq!(m.col_mean(&b, 1).unwrap().re, 5.0);
        let b = Bicluster::new(&m, vec![1], vec![1]).unwrap();
        assert_eq!(m.overall_mean(&b).re, 5.0);
    }

    #[test]
    fn index_outside_bicluster_is_rejected() {
        let m = ExpressionMatrix::from_real(3, 3, vec![1.0; 9]).unwrap();
        let b = Bicluster::new(&m, vec![0, 1], vec![0, 2]).unwrap();
        assert!(matches!(m.row_mean(&b, 2), Err(Error::IndexOutsideBicluster { .. })));
        assert!(matches!(m.col_mean(&b, 1), Err(Error::IndexOutsideBicluster { .. })));
        assert!(matches!(m.residue(&b, 0, 1), Err(Error::IndexOutsideBicluster { .. })));
        assert!(matches!(m.row_msr(&b, 2), Err(Error::IndexOutsideBicluster { .. })));
        assert!(matches!(m.col_msr(&b, 1), Err(Error::IndexOutsideBicluster { .. })));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            ExpressionMatrix::from_real(0, 2, vec![]),
            Err(Error::EmptyMatrix)
        ));
        assert!(matches!(
            ExpressionMatrix::from_real(2, 2, vec![1.0, 2.0, 3.0]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            ExpressionMatrix::from_real(1, 2, vec![1.0, f64::NAN]),
            Err(Error::NonFiniteEntry { row: 0, col: 1 })
        ));

        let m = ExpressionMatrix::from_real(2, 2, vec![1.0; 4]).unwrap();
        assert!(matches!(Bicluster::new(&m, vec![], vec![0]), Err(Error::EmptyIndexSet)));
        assert!(matches!(
            Bicluster::new(&m, vec![0, 0], vec![0]),
            Err(Error::DuplicateIndex { axis: Axis::Row, index: 0 })
        ));
        assert!(matches!(
            Bicluster::new(&m, vec![0, 5], vec![0]),
            Err(Error::IndexOutOfRange { axis: Axis::Row, index: 5, .. })
        ));
    }

    #[test]
    fn variance_rejects_shielded_entries() {
        let mut data = vec![Scalar::new(1.0, 0.0); 4];
        data[2] = Scalar::new(1.0, 3.0);
        let m = ExpressionMatrix::from_complex(2, 2, data).unwrap();
        let b = Bicluster::full(&m);
        assert!(matches!(m.variance(&b), Err(Error::ShieldedVariance { row: 1, col: 0 })));
    }

    #[test]
    fn shift_invariance() {
        let vals = vec![3.2, 0.5, 9.1, 4.4, 2.0, 6.6, 1.1, 8.8, 5.5, 0.2, 7.7, 3.3];
        let m1 = ExpressionMatrix::from_real(3, 4, vals.clone()).unwrap();
        let shifted: Vec<f64> = vals.iter().map(|v| v + 137.25).collect();
        let m2 = ExpressionMatrix::from_real(3, 4, shifted).unwrap();
        let b1 = Bicluster::full(&m1);
        let b2 = Bicluster::full(&m2);
        assert!((m1.msr(&b1) - m2.msr(&b2)).abs() <= 1e-9 * m1.msr(&b1).max(1.0));
        for i in 0..3 {
            for j in 0..4 {
                let d = (m1.residue(&b1, i, j).unwrap() - m2.residue(&b2, i, j).unwrap()).norm();
                assert!(d <= 1e-9);
            }
        }
    }

    #[test]
    fn aggregation_identity() {
        let vals = vec![3.2, 0.5, 9.1, 4.4, 2.0, 6.6, 1.1, 8.8, 5.5, 0.2, 7.7, 3.3];
        let m = ExpressionMatrix::from_real(3, 4, vals).unwrap();
        let b = Bicluster::full(&m);
        let h = m.msr(&b);
        let row_avg: f64 = b.rows().iter().map(|&i| m.row_msr(&b, i).unwrap()).sum::<f64>() / 3.0;
        let col_avg: f64 = b.cols().iter().map(|&j| m.col_msr(&b, j).unwrap()).sum::<f64>() / 4.0;
        assert!((h - row_avg).abs() <= 1e-9 * h.max(1.0));
        assert!((h - col_avg).abs() <= 1e-9 * h.max(1.0));
    }

    #[test]
    fn cell_jaccard_counts_index_pairs() {
        let m = ExpressionMatrix::from_real(4, 4, vec![0.0; 16]).unwrap();
        let a = Bicluster::new(&m, vec![0, 1, 2], vec![0, 1]).unwrap();
        let b = Bicluster::new(&m, vec![1, 2, 3], vec![1, 2]).unwrap();
        // Intersection 2x1 = 2 cells, union 6 + 6 - 2 = 10.
        assert_eq!(a.cell_jaccard(&b), 0.2);
        assert_eq!(a.cell_jaccard(&a), 1.0);
    }
}
