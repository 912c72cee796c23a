//! Shielding found biclusters with imaginary components.
//!
//! Instead of overwriting a found bicluster with random numbers, its entries
//! get a nonzero imaginary part. The real data stays intact, so shielded
//! entries can still join later biclusters (overlap), while their inflated
//! complex scores keep later searches from rediscovering the same block.
//!
//! The transform for each entry `a` of the found block is
//!
//! ```text
//! shielded = {1 + phi * rho[Imag(a) != 0] * 1j} * a + phi * rho(a) * 1j
//! ```
//!
//! where `rho` is the unit impulse (1 at exactly zero, else 0). The first
//! term leaves already-shielded entries alone; the second gives exact-zero
//! entries an imaginary part the multiplier cannot.

use crate::engine::{self, AdditionRhs};
use crate::error::{Error, Result};
use crate::matrix::{Bicluster, ExpressionMatrix, Scalar};

/// Knobs of the shielded search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShieldParams {
    /// Shielding factor: scales the imaginary components and with them the
    /// score inflation of shielded lines. Must be at least 1.
    pub phi: f64,
    /// Collective-deletion threshold, as in the plain search.
    pub alpha: f64,
    /// MSR budget.
    pub delta: f64,
}

impl ShieldParams {
    pub fn new(phi: f64, alpha: f64, delta: f64) -> Result<Self> {
        let p = Self { phi, alpha, delta };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.phi.is_finite() || self.phi < 1.0 {
            return Err(Error::InvalidParam {
                name: "phi",
                message: format!("must be finite and >= 1, got {}", self.phi),
            });
        }
        if !self.alpha.is_finite() || self.alpha <= 1.0 {
            return Err(Error::InvalidParam {
                name: "alpha",
                message: format!("must be finite and > 1, got {}", self.alpha),
            });
        }
        if !self.delta.is_finite() || self.delta < 0.0 {
            return Err(Error::InvalidParam {
                name: "delta",
                message: format!("must be finite and >= 0, got {}", self.delta),
            });
        }
        Ok(())
    }
}

impl Default for ShieldParams {
    fn default() -> Self {
        Self { phi: 4.0, alpha: 1.2, delta: 300.0 }
    }
}

/// The working matrix of a shielded run, accumulating imaginary marks across
/// successive searches.
#[derive(Debug, Clone, PartialEq)]
pub struct ShieldState {
    matrix: ExpressionMatrix,
    shielded_count: usize,
}

impl ShieldState {
    pub fn new(matrix: ExpressionMatrix) -> Self {
        let shielded_count = count_shielded(&matrix);
        Self { matrix, shielded_count }
    }

    pub fn matrix(&self) -> &ExpressionMatrix {
        &self.matrix
    }

    /// Number of entries with a nonzero imaginary part. Never decreases.
    pub fn shielded_count(&self) -> usize {
        self.shielded_count
    }
}

fn count_shielded(m: &ExpressionMatrix) -> usize {
    let mut n = 0;
    for i in 0..m.n_rows() {
        for j in 0..m.n_cols() {
            if m.get(i, j).im != 0.0 {
                n += 1;
            }
        }
    }
    n
}

/// Unit impulse: 1 when the argument is exactly zero (both parts), else 0.
pub fn unit_impulse(z: Scalar) -> f64 {
    if z.re == 0.0 && z.im == 0.0 {
        1.0
    } else {
        0.0
    }
}

/// Marks every entry of `b` with an imaginary component, leaving real parts
/// and entries outside `b` untouched. Applying it again to the same block is
/// an exact no-op.
pub fn apply_shield(state: &mut ShieldState, b: &Bicluster, params: &ShieldParams) -> Result<()> {
    params.validate()?;
    for &i in b.rows() {
        for &j in b.cols() {
            let a = state.matrix.get(i, j);
            let already = Scalar::new(if a.im != 0.0 { 1.0 } else { 0.0 }, 0.0);
            let multiplier = Scalar::new(1.0, 0.0)
                + Scalar::new(0.0, params.phi) * unit_impulse(already);
            let shielded = multiplier * a + Scalar::new(0.0, params.phi * unit_impulse(a));
            if a.im == 0.0 && shielded.im != 0.0 {
                state.shielded_count += 1;
            }
            state.matrix.set(i, j, shielded);
        }
    }
    Ok(())
}

/// Row score under shielding: the modulus of the summed squared complex
/// residues over the bicluster's columns, divided by the column count.
/// Coincides with the plain row MSR on fully real data.
pub fn shielded_row_msr(state: &ShieldState, b: &Bicluster, i: usize) -> Result<f64> {
    state.matrix.row_msr(b, i)
}

/// Column counterpart of [`shielded_row_msr`].
pub fn shielded_col_msr(state: &ShieldState, b: &Bicluster, j: usize) -> Result<f64> {
    state.matrix.col_msr(b, j)
}

/// Deletion phase over the shielded matrix: collective rounds against
/// alpha * H with modulus scores, then single-line deletion if the rounds
/// stall above the budget. The returned bicluster carries the modulus score.
pub fn shielded_delete(state: &ShieldState, b: &Bicluster, params: &ShieldParams) -> Result<Bicluster> {
    params.validate()?;
    let (rows, cols, msr) = engine::delete_to_delta(
        &state.matrix,
        b.rows().to_vec(),
        b.cols().to_vec(),
        params.delta,
        params.alpha,
    )?;
    Ok(Bicluster::from_parts(rows, cols, msr))
}

/// Addition phase over the shielded matrix: admits outside lines by the mean
/// of their squared real residue parts, compared against the block's
/// real-part score. Shielded lines whose real data fits the block re-enter
/// here, which is what makes overlapping biclusters discoverable. The
/// returned bicluster carries the real-part score.
pub fn shielded_add(state: &ShieldState, b: &Bicluster, params: &ShieldParams) -> Result<Bicluster> {
    params.validate()?;
    let (rows, cols) = engine::add_to_fixpoint(
        &state.matrix,
        b.rows().to_vec(),
        b.cols().to_vec(),
        AdditionRhs::RealPart,
    );
    let msr = state.matrix.real_msr_of(&rows, &cols);
    Ok(Bicluster::from_parts(rows, cols, msr))
}

/// One full shielded search from the whole matrix: deletion, addition, then
/// shielding of the result for subsequent searches. The reported score is the
/// MSR of the block's real parts, i.e. of the original data.
pub fn find_shielded_bicluster(state: &mut ShieldState, params: &ShieldParams) -> Result<Bicluster> {
    params.validate()?;
    let rows: Vec<usize> = (0..state.matrix.n_rows()).collect();
    let cols: Vec<usize> = (0..state.matrix.n_cols()).collect();
    let (rows, cols, _) =
        engine::delete_to_delta(&state.matrix, rows, cols, params.delta, params.alpha)?;
    let (grown_rows, grown_cols) =
        engine::add_to_fixpoint(&state.matrix, rows.clone(), cols.clone(), AdditionRhs::RealPart);
    let msr = state.matrix.real_msr_of(&grown_rows, &grown_cols);
    let result = if msr <= params.delta {
        Bicluster::from_parts(grown_rows, grown_cols, msr)
    } else {
        // Addition kept the real-part score from rising, so this can only
        // happen when deletion stopped on a modulus score whose cancellation
        // hid a high real score. Report the block before addition if it is
        // within budget, otherwise fail this search.
        let msr = state.matrix.real_msr_of(&rows, &cols);
        if msr > params.delta {
            return Err(Error::AboveBudget { msr, delta: params.delta });
        }
        Bicluster::from_parts(rows, cols, msr)
    };
    apply_shield(state, &result, params)?;
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baseline::{find_bicluster, GreedyParams};

    fn mat(rows: usize, cols: usize, v: Vec<f64>) -> ExpressionMatrix {
        ExpressionMatrix::from_real(rows, cols, v).unwrap()
    }

    #[test]
    fn param_validation() {
        assert!(ShieldParams::new(1.0, 1.2, 0.0).is_ok());
        assert!(matches!(
            ShieldParams::new(0.5, 1.2, 300.0),
            Err(Error::InvalidParam { name: "phi", .. })
        ));
        assert!(ShieldParams::new(f64::INFINITY, 1.2, 300.0).is_err());
        assert!(matches!(
            ShieldParams::new(4.0, 0.9, 300.0),
            Err(Error::InvalidParam { name: "alpha", .. })
        ));
        assert!(matches!(
            ShieldParams::new(4.0, 1.2, -1.0),
            Err(Error::InvalidParam { name: "delta", .. })
        ));
    }

    #[test]
    fn unit_impulse_values() {
        assert_eq!(unit_impulse(Scalar::new(0.0, 0.0)), 1.0);
        assert_eq!(unit_impulse(Scalar::new(-0.0, 0.0)), 1.0);
        assert_eq!(unit_impulse(Scalar::new(5.0, 0.0)), 0.0);
        assert_eq!(unit_impulse(Scalar::new(0.0, 1.0)), 0.0);
        assert_eq!(unit_impulse(Scalar::new(5.0, 5.0)), 0.0);
    }

    #[test]
    fn shield_hand_examples() {
        // phi = 1: 5 -> 5+5j, 0 -> 0+1j, and 5+5j stays put.
        let m = mat(1, 2, vec![5.0, 0.0]);
        let mut state = ShieldState::new(m);
        let b = Bicluster::full(state.matrix());
        let params = ShieldParams::new(1.0, 1.2, 300.0).unwrap();
        apply_shield(&mut state, &b, &params).unwrap();
        assert_eq!(state.matrix().get(0, 0), Scalar::new(5.0, 5.0));
        assert_eq!(state.matrix().get(0, 1), Scalar::new(0.0, 1.0));
        apply_shield(&mut state, &b, &params).unwrap();
        assert_eq!(state.matrix().get(0, 0), Scalar::new(5.0, 5.0));
        assert_eq!(state.matrix().get(0, 1), Scalar::new(0.0, 1.0));
    }

    #[test]
    fn shield_marks_every_entry_and_preserves_real_parts() {
        let v = vec![3.5, 0.0, -2.25, 7.0, 0.0, 1.0, -0.0, 4.5, 9.0, 0.5, 6.0, 0.0];
        let m = mat(3, 4, v.clone());
        let mut state = ShieldState::new(m.clone());
        let b = Bicluster::new(&m, vec![0, 2], vec![0, 1, 3]).unwrap();
        let params = ShieldParams::new(4.0, 1.2, 300.0).unwrap();
        apply_shield(&mut state, &b, &params).unwrap();
        assert_eq!(state.shielded_count(), 6);
        for i in 0..3 {
            for j in 0..4 {
                let before = m.get(i, j);
                let after = state.matrix().get(i, j);
                assert_eq!(after.re, before.re, "real part changed at ({i}, {j})");
                if b.contains_row(i) && b.contains_col(j) {
                    assert_ne!(after.im, 0.0, "entry ({i}, {j}) not shielded");
                    if before.re == 0.0 {
                        assert_eq!(after.im, params.phi);
                    }
                } else {
                    assert_eq!(after, before);
                }
            }
        }
    }

    #[test]
    fn shield_idempotence_is_exact() {
        let v: Vec<f64> = (0..48)
            .map(|x| if x % 7 == 0 { 0.0 } else { ((x * 31 + 5) % 23) as f64 - 11.0 })
            .collect();
        let m = mat(6, 8, v);
        let mut state = ShieldState::new(m.clone());
        let b = Bicluster::new(&m, vec![1, 3, 4], vec![0, 2, 5, 7]).unwrap();
        let params = ShieldParams::default();
        apply_shield(&mut state, &b, &params).unwrap();
        let once = state.clone();
        apply_shield(&mut state, &b, &params).unwrap();
        assert_eq!(state, once);
    }

    #[test]
    fn shielded_count_accumulates_across_overlapping_blocks() {
        let m = mat(3, 3, vec![1.0; 9]);
        let mut state = ShieldState::new(m.clone());
        let params = ShieldParams::default();
        let b1 = Bicluster::new(&m, vec![0, 1], vec![0, 1]).unwrap();
        apply_shield(&mut state, &b1, &params).unwrap();
        assert_eq!(state.shielded_count(), 4);
        let b2 = Bicluster::new(&m, vec![1, 2], vec![1, 2]).unwrap();
        apply_shield(&mut state, &b2, &params).unwrap();
        // Entry (1,1) was already shielded; only three new marks.
        assert_eq!(state.shielded_count(), 7);
    }

    /// Hand-rolled complex arithmetic, independent of the library types, for
    /// checking the shielded scores.
    fn oracle_row_msr(entries: &[Vec<(f64, f64)>], rows: &[usize], cols: &[usize], i: usize) -> f64 {
        let add = |a: (f64, f64), b: (f64, f64)| (a.0 + b.0, a.1 + b.1);
        let sub = |a: (f64, f64), b: (f64, f64)| (a.0 - b.0, a.1 - b.1);
        let mul = |a: (f64, f64), b: (f64, f64)| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
        let scale = |a: (f64, f64), s: f64| (a.0 / s, a.1 / s);
        let mean_row = |r: usize| {
            let mut acc = (0.0, 0.0);
            for &j in cols {
                acc = add(acc, entries[r][j]);
            }
            scale(acc, cols.len() as f64)
        };
        let mean_col = |c: usize| {
            let mut acc = (0.0, 0.0);
            for &r in rows {
                acc = add(acc, entries[r][c]);
            }
            scale(acc, rows.len() as f64)
        };
        let mut acc = (0.0, 0.0);
        for &r in rows {
            for &j in cols {
                acc = add(acc, entries[r][j]);
            }
        }
        let overall = scale(acc, (rows.len() * cols.len()) as f64);
        let mut sum = (0.0, 0.0);
        for &j in cols {
            let r = add(sub(sub(entries[i][j], mean_row(i)), mean_col(j)), overall);
            sum = add(sum, mul(r, r));
        }
        (sum.0 * sum.0 + sum.1 * sum.1).sqrt() / cols.len() as f64
    }

    #[test]
    fn shielded_scores_match_independent_oracle() {
        // Constant matrix with one entry shielded at phi = 1.
        let m = mat(3, 3, vec![2.0; 9]);
        let mut state = ShieldState::new(m.clone());
        let params = ShieldParams::new(1.0, 1.2, 300.0).unwrap();
        let spot = Bicluster::new(&m, vec![1], vec![1]).unwrap();
        apply_shield(&mut state, &spot, &params).unwrap();

        let mut entries = vec![vec![(2.0, 0.0); 3]; 3];
        entries[1][1] = (2.0, 2.0);
        let b = Bicluster::full(state.matrix());
        for i in 0..3 {
            let got = shielded_row_msr(&state, &b, i).unwrap();
            let want = oracle_row_msr(&entries, &[0, 1, 2], &[0, 1, 2], i);
            assert!(
                (got - want).abs() <= 1e-12 * want.max(1.0),
                "row {i}: got {got}, oracle {want}"
            );
        }
        assert!(shielded_row_msr(&state, &b, 1).unwrap() > 0.0);
        // Unshielded rows still feel the shielded entry through the means.
        assert!(shielded_row_msr(&state, &b, 0).unwrap() > 0.0);
        assert!(matches!(
            shielded_row_msr(&state, &b, 5),
            Err(Error::IndexOutsideBicluster { .. })
        ));
    }

    #[test]
    fn fully_real_state_reduces_to_plain_search() {
        let v: Vec<f64> = (0..150).map(|x| ((x * 97 + 13) % 61) as f64).collect();
        let m = mat(15, 10, v);
        let gp = GreedyParams::new(40.0, 1.3, 0).unwrap();
        let plain = find_bicluster(&m, &gp).unwrap();
        let mut state = ShieldState::new(m.clone());
        let sp = ShieldParams::new(4.0, 1.3, 40.0).unwrap();
        let shielded = find_shielded_bicluster(&mut state, &sp).unwrap();
        assert_eq!(plain.rows(), shielded.rows());
        assert_eq!(plain.cols(), shielded.cols());
        assert_eq!(plain.msr(), shielded.msr());
        // Plain scores agree with shielded scores entrywise on real data.
        let b = Bicluster::full(&m);
        let fresh = ShieldState::new(m.clone());
        for i in 0..5 {
            assert_eq!(shielded_row_msr(&fresh, &b, i).unwrap(), m.row_msr(&b, i).unwrap());
        }
        for j in 0..5 {
            assert_eq!(shielded_col_msr(&fresh, &b, j).unwrap(), m.col_msr(&b, j).unwrap());
        }
    }

    #[test]
    fn shielded_lines_score_above_the_deletion_threshold() {
        // Two full-width rows shielded with a large phi: their imaginary
        // residues dwarf the matrix average, so they score above alpha * H of
        // the full matrix and the first deletion round drops them.
        let v: Vec<f64> = (0..80).map(|x| ((x * 53 + 29) % 17) as f64).collect();
        let m = mat(8, 10, v);
        let mut state = ShieldState::new(m.clone());
        let params = ShieldParams::new(8.0, 1.2, 40.0).unwrap();
        let found = Bicluster::new(&m, vec![0, 1], (0..10).collect()).unwrap();
        apply_shield(&mut state, &found, &params).unwrap();
        let full = Bicluster::full(state.matrix());
        let h = state.matrix().msr(&full);
        for i in 0..2 {
            let s = shielded_row_msr(&state, &full, i).unwrap();
            assert!(s > params.alpha * h, "row {i} score {s} not above {}", params.alpha * h);
        }
        let reduced = shielded_delete(&state, &full, &params).unwrap();
        assert!(!reduced.contains_row(0) && !reduced.contains_row(1));
    }

    #[test]
    fn shielded_rows_with_matching_real_parts_are_readmitted() {
        // Constant matrix: shield one block, search again. Deletion drops the
        // shielded lines, addition brings them back because their real parts
        // still fit perfectly, and the result is the full matrix again.
        let m = mat(4, 4, vec![5.0; 16]);
        let mut state = ShieldState::new(m.clone());
        let params = ShieldParams::new(4.0, 1.2, 0.5).unwrap();
        let first = Bicluster::new(&m, vec![0, 1], vec![0, 1]).unwrap();
        apply_shield(&mut state, &first, &params).unwrap();
        let second = find_shielded_bicluster(&mut state, &params).unwrap();
        assert_eq!(second.rows(), &[0, 1, 2, 3]);
        assert_eq!(second.cols(), &[0, 1, 2, 3]);
        assert_eq!(second.msr(), 0.0);
    }

    #[test]
    fn successive_searches_never_repeat_a_shielded_block() {
        // Three coherent blocks planted in noise; three shielded searches
        // must return three distinct index sets, and a fourth search must not
        // reproduce any of them.
        let mut v: Vec<f64> = (0..14 * 12)
            .map(|x| 100.0 + ((x * 193 + 71) % 997) as f64)
            .collect();
        for (r0, c0, base) in [(0usize, 0usize, 10.0), (5, 4, 500.0), (10, 8, 1500.0)] {
            for i in 0..4 {
                for j in 0..4 {
                    v[(r0 + i) * 12 + (c0 + j)] = base + (2 * i + 3 * j) as f64;
                }
            }
        }
        let m = mat(14, 12, v);
        let mut state = ShieldState::new(m.clone());
        let params = ShieldParams::new(4.0, 1.2, 50.0).unwrap();
        let mut seen: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for _ in 0..4 {
            let b = find_shielded_bicluster(&mut state, &params).unwrap();
            let key = (b.rows().to_vec(), b.cols().to_vec());
            assert!(!seen.contains(&key), "search repeated block {key:?}");
            seen.push(key);
        }
    }
}
