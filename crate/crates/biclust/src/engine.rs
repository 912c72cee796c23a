//! Shared greedy kernels: node deletion and node addition.
//!
//! Both the plain search and the shielded search run these exact routines,
//! so on fully real data the two strategies are bit-identical by
//! construction. Deletion scores lines by the modulus-form row/column MSR
//! (which reduces exactly to the classical score on real data); addition
//! scores candidate lines by the squared real parts of their residues.

use crate::error::{Error, Result};
use crate::matrix::ExpressionMatrix;

/// Right-hand side of the addition conditions.
///
/// `RealPart` compares candidate scores against the block's real-part MSR,
/// which keeps the real-data score of the growing block non-increasing and
/// therefore under budget. `Modulus` compares against the modulus-form score
/// instead; once shielded lines re-enter a block it inflates, loosening the
/// threshold, and the real-data score of the result can drift above budget.
/// It is kept for study and for demonstrating that failure mode in tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum AdditionRhs {
    RealPart,
    #[allow(dead_code)] // only tests construct it; see the drift test below
    Modulus,
}

pub(crate) struct DeleteOutcome {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    /// Modulus-form MSR of the final block.
    pub msr: f64,
    /// True when a full round deleted nothing while msr > delta.
    pub stalled: bool,
}

/// Collective deletion rounds: drop every row with score > alpha * H, then
/// every column, until the block scores at or under `delta` or a full round
/// deletes nothing.
pub(crate) fn delete_rounds(
    m: &ExpressionMatrix,
    mut rows: Vec<usize>,
    mut cols: Vec<usize>,
    delta: f64,
    alpha: f64,
) -> Result<DeleteOutcome> {
    loop {
        let mut means = m.block_means(&rows, &cols);
        let mut h = crate::matrix::modulus(m.block_sq_sum(&rows, &cols, &means))
            / (rows.len() * cols.len()) as f64;
        if h <= delta {
            return Ok(DeleteOutcome { rows, cols, msr: h, stalled: false });
        }
        let mut round_deleted = false;

        let keep: Vec<usize> = (0..rows.len())
            .filter(|&rp| m.row_msr_at(&rows, &cols, &means, rp) <= alpha * h)
            .map(|rp| rows[rp])
            .collect();
        if keep.is_empty() {
            return Err(Error::DegenerateBicluster);
        }
        if keep.len() < rows.len() {
            rows = keep;
            round_deleted = true;
            means = m.block_means(&rows, &cols);
            h = crate::matrix::modulus(m.block_sq_sum(&rows, &cols, &means))
                / (rows.len() * cols.len()) as f64;
            if h <= delta {
                return Ok(DeleteOutcome { rows, cols, msr: h, stalled: false });
            }
        }

        let keep: Vec<usize> = (0..cols.len())
            .filter(|&cp| m.col_msr_at(&rows, &cols, &means, cp) <= alpha * h)
            .map(|cp| cols[cp])
            .collect();
        if keep.is_empty() {
            return Err(Error::DegenerateBicluster);
        }
        if keep.len() < cols.len() {
            cols = keep;
            round_deleted = true;
        }

        if !round_deleted {
            return Ok(DeleteOutcome { rows, cols, msr: h, stalled: true });
        }
    }
}

/// One-at-a-time deletion of the highest-scoring line until the block scores
/// at or under `delta`. Ties prefer rows; within an axis, the smallest index.
pub(crate) fn delete_single(
    m: &ExpressionMatrix,
    mut rows: Vec<usize>,
    mut cols: Vec<usize>,
    delta: f64,
) -> (Vec<usize>, Vec<usize>, f64) {
    loop {
        let means = m.block_means(&rows, &cols);
        let h = crate::matrix::modulus(m.block_sq_sum(&rows, &cols, &means))
            / (rows.len() * cols.len()) as f64;
        if h <= delta {
            return (rows, cols, h);
        }
        // h > delta >= 0 rules out single-line blocks (their score is exactly
        // zero), so removal below never empties an axis.
        let mut best_row = 0;
        let mut best_row_score = f64::NEG_INFINITY;
        for rp in 0..rows.len() {
            let s = m.row_msr_at(&rows, &cols, &means, rp);
            if s > best_row_score {
                best_row_score = s;
                best_row = rp;
            }
        }
        let mut best_col = 0;
        let mut best_col_score = f64::NEG_INFINITY;
        for cp in 0..cols.len() {
            let s = m.col_msr_at(&rows, &cols, &means, cp);
            if s > best_col_score {
                best_col_score = s;
                best_col = cp;
            }
        }
        if best_col_score > best_row_score {
            cols.remove(best_col);
        } else {
            rows.remove(best_row);
        }
    }
}

/// Full deletion phase: collective rounds, then single-line deletion if the
/// rounds stall above budget.
pub(crate) fn delete_to_delta(
    m: &ExpressionMatrix,
    rows: Vec<usize>,
    cols: Vec<usize>,
    delta: f64,
    alpha: f64,
) -> Result<(Vec<usize>, Vec<usize>, f64)> {
    let out = delete_rounds(m, rows, cols, delta, alpha)?;
    if out.stalled {
        Ok(delete_single(m, out.rows, out.cols, delta))
    } else {
        Ok((out.rows, out.cols, out.msr))
    }
}

/// Score of candidate row `i` (outside the block) for addition: the mean of
/// squared real residue parts over the block's columns, with the candidate's
/// own row mean and the block's current column/overall means.
pub(crate) fn addition_row_score(
    m: &ExpressionMatrix,
    rows: &[usize],
    cols: &[usize],
    i: usize,
) -> f64 {
    let means = m.block_means(rows, cols);
    candidate_row_score(m, cols, &means, i)
}

/// Column counterpart of [`addition_row_score`].
pub(crate) fn addition_col_score(
    m: &ExpressionMatrix,
    rows: &[usize],
    cols: &[usize],
    j: usize,
) -> f64 {
    let means = m.block_means(rows, cols);
    candidate_col_score(m, rows, &means, j)
}

fn candidate_row_score(
    m: &ExpressionMatrix,
    cols: &[usize],
    means: &crate::matrix::BlockMeans,
    i: usize,
) -> f64 {
    let own_mean = m.mean_over_cols(i, cols);
    let mut acc = 0.0;
    for (cp, &j) in cols.iter().enumerate() {
        let r = (m.get(i, j) - own_mean) - (means.col_means[cp] - means.overall);
        acc += r.re * r.re;
    }
    acc / cols.len() as f64
}

fn candidate_col_score(
    m: &ExpressionMatrix,
    rows: &[usize],
    means: &crate::matrix::BlockMeans,
    j: usize,
) -> f64 {
    let own_mean = m.mean_over_rows(j, rows);
    let mut acc = 0.0;
    for (rp, &i) in rows.iter().enumerate() {
        let r = (m.get(i, j) - means.row_means[rp]) - (own_mean - means.overall);
        acc += r.re * r.re;
    }
    acc / rows.len() as f64
}

fn rhs_score(m: &ExpressionMatrix, rows: &[usize], cols: &[usize], rhs: AdditionRhs) -> f64 {
    match rhs {
        AdditionRhs::RealPart => m.real_msr_of(rows, cols),
        AdditionRhs::Modulus => m.msr_of(rows, cols),
    }
}

/// Node addition to a fixed point: each round adds every outside column whose
/// score is at or under the block score, recomputes, then does the same for
/// rows; stops when a full round adds nothing.
pub(crate) fn add_to_fixpoint(
    m: &ExpressionMatrix,
    mut rows: Vec<usize>,
    mut cols: Vec<usize>,
    rhs: AdditionRhs,
) -> (Vec<usize>, Vec<usize>) {
    loop {
        let mut round_added = false;

        if cols.len() < m.n_cols() {
            let h = rhs_score(m, &rows, &cols, rhs);
            let means = m.block_means(&rows, &cols);
            let mut member = vec![false; m.n_cols()];
            for &j in &cols {
                member[j] = true;
            }
            let incoming: Vec<usize> = (0..m.n_cols())
                .filter(|&j| !member[j] && candidate_col_score(m, &rows, &means, j) <= h)
                .collect();
            if !incoming.is_empty() {
                cols.extend(incoming);
                cols.sort_unstable();
                round_added = true;
            }
        }

        if rows.len() < m.n_rows() {
            let h = rhs_score(m, &rows, &cols, rhs);
            let means = m.block_means(&rows, &cols);
            let mut member = vec![false; m.n_rows()];
            for &i in &rows {
                member[i] = true;
            }
            let incoming: Vec<usize> = (0..m.n_rows())
                .filter(|&i| !member[i] && candidate_row_score(m, &cols, &means, i) <= h)
                .collect();
            if !incoming.is_empty() {
                rows.extend(incoming);
                rows.sort_unstable();
                round_added = true;
            }
        }

        if !round_added {
            return (rows, cols);
        }
    }
}
