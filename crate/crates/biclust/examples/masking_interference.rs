//! How random-number masking invents biclusters that are not in the data,
//! and how shielding avoids it.
//!
//! Five rows of a matrix, three of interest (0-indexed 1, 3, 4):
//!
//!     row 1:  1  2   0   3
//!     row 3:  4  5  10   0
//!     row 4:  7  8  15  90
//!
//! Suppose an earlier search already clustered the entries 0 and 90 in the
//! last column, and masking replaced them with the random draws 6 and 9.
//! Rows {1,3,4} x columns {0,1,3} then read 1,2,3 / 4,5,6 / 7,8,9: perfectly
//! additive, admitted under any budget. The actual data at those positions
//! (3 / 0 / 90) are wildly incoherent. The masked matrix manufactured a
//! bicluster out of its own random numbers.
//!
//! Shielding marks clustered entries with an imaginary component instead of
//! overwriting them. The real parts stay intact, so any block the shielded
//! search emits is scored against the data as measured, and the artifact
//! block can never qualify.
//!
//!     cargo run --example masking_interference

use biclust::shield::{apply_shield, find_shielded_bicluster, ShieldParams, ShieldState};
use biclust::{Bicluster, ExpressionMatrix, Result};

const DELTA: f64 = 300.0;

fn main() -> Result<()> {
    // The two filler rows carry values that no coherent block absorbs.
    let truth = ExpressionMatrix::from_real(
        5,
        4,
        vec![
            500.0, 3.0, 250.0, 40.0, // filler
            1.0, 2.0, 0.0, 3.0, //
            31.0, 700.0, 8.0, 333.0, // filler
            4.0, 5.0, 10.0, 0.0, //
            7.0, 8.0, 15.0, 90.0,
        ],
    )?;

    // An earlier iteration clustered the entries 0 and 90 at rows {3,4} of
    // the last column; masking replaced them with the draws 6 and 9.
    let masked = ExpressionMatrix::from_real(
        5,
        4,
        vec![
            500.0, 3.0, 250.0, 40.0, //
            1.0, 2.0, 0.0, 3.0, //
            31.0, 700.0, 8.0, 333.0, //
            4.0, 5.0, 10.0, 6.0, //
            7.0, 8.0, 15.0, 9.0,
        ],
    )?;

    let artifact_rows = vec![1, 3, 4];
    let artifact_cols = vec![0, 1, 3];
    let on_masked =
        Bicluster::new(&masked, artifact_rows.clone(), artifact_cols.clone())?;
    let on_truth = Bicluster::new(&truth, artifact_rows.clone(), artifact_cols.clone())?;

    println!("rows {{1,3,4}} x cols {{0,1,3}}, budget {DELTA}:");
    println!("  score on the masked matrix: {:>8.3}  (admitted)", on_masked.msr());
    println!("  score on the actual data:   {:>8.3}  (violates the budget)", on_truth.msr());
    assert!(on_masked.msr() <= DELTA && on_truth.msr() > DELTA);

    // The shielded pipeline on the same history: shield the previously found
    // block instead of masking it, then search again.
    let params = ShieldParams { phi: 4.0, alpha: 1.2, delta: DELTA };
    let mut state = ShieldState::new(truth.clone());
    let found_earlier = Bicluster::new(&truth, vec![3, 4], vec![3])?;
    apply_shield(&mut state, &found_earlier, &params)?;

    match find_shielded_bicluster(&mut state, &params) {
        Ok(b) => {
            let against_data = truth.real_msr(&Bicluster::new(
                &truth,
                b.rows().to_vec(),
                b.cols().to_vec(),
            )?);
            println!("\nshielded search found rows {:?} x cols {:?}", b.rows(), b.cols());
            println!("  score against the actual data: {against_data:.3} (within budget)");
            assert!(against_data <= DELTA);
            assert!(
                b.rows() != artifact_rows.as_slice() || b.cols() != artifact_cols.as_slice(),
                "the artifact block must not qualify on real data"
            );
        }
        Err(e) => println!("\nshielded search found nothing within budget: {e}"),
    }

    println!("\nthe masked matrix admits a block its own random numbers created;");
    println!("the shielded matrix only admits blocks the measured data supports.");
    Ok(())
}
