//! What shielding does to a block, entry by entry: real parts survive,
//! imaginary parts mark membership, zero entries get rescued, re-shielding
//! is a no-op, and a zero-free block's score inflates by exactly 1 + phi^2.
//!
//!     cargo run --example shield_mechanics

use biclust::shield::{apply_shield, shielded_row_msr, ShieldParams, ShieldState};
use biclust::{Bicluster, ExpressionMatrix, Result};

fn main() -> Result<()> {
    let phi = 4.0;
    let params = ShieldParams { phi, alpha: 1.2, delta: 300.0 };

    // A noisy block with no zero entries.
    let m = ExpressionMatrix::from_real(
        3,
        3,
        vec![1.0, 2.0, 3.5, 4.0, 5.5, 6.0, 7.0, 8.2, 9.0],
    )?;
    let b = Bicluster::full(&m);
    let h = m.msr(&b);
    println!("block score before shielding: {h:.4}");

    let mut state = ShieldState::new(m.clone());
    apply_shield(&mut state, &b, &params)?;

    println!("\nentries after shielding (value -> shielded):");
    for i in 0..3 {
        for j in 0..3 {
            let before = m.get(i, j);
            let after = state.matrix().get(i, j);
            println!("  {:>4} -> {:>4} + {:>4}i", before.re, after.re, after.im);
            // A nonzero entry a becomes (1 + phi i) a.
            assert_eq!(after.re, before.re);
            assert_eq!(after.im, phi * before.re);
        }
    }

    // Every residue of the shielded block picks up the same (1 + phi i)
    // factor, whose square has modulus 1 + phi^2, so the block score
    // inflates by exactly that: 17-fold at phi = 4, far above any deletion
    // threshold. That is what makes the next search skip the block.
    let shielded_b = Bicluster::new(state.matrix(), vec![0, 1, 2], vec![0, 1, 2])?;
    let h_shielded = state.matrix().msr(&shielded_b);
    println!("\nscore after shielding: {h_shielded:.4}");
    println!("inflation factor:      {:.4} (1 + phi^2 = {})", h_shielded / h, 1.0 + phi * phi);
    assert!((h_shielded / h - 17.0).abs() < 1e-9);

    // Per-line deletion scores inflate the same way.
    let r0 = shielded_row_msr(&state, &shielded_b, 0)?;
    println!("row 0 deletion score:  {:.4} (was {:.4})", r0, m.row_msr(&b, 0)?);

    // Shielding the same block again changes nothing.
    let snapshot = state.matrix().clone();
    apply_shield(&mut state, &b, &params)?;
    assert_eq!(state.matrix(), &snapshot);
    println!("\nre-shielding the same block is a no-op: entries unchanged");

    // The real parts still hold the measured data, so a later search can
    // score any candidate block, shielded or not, against reality.
    assert_eq!(state.matrix().real_part(), m);
    println!("real parts still equal the original matrix");

    // An exact zero cannot be marked by multiplication alone: (1 + phi i)
    // times 0 is still 0. Such entries are rescued with a bare phi i, at the
    // cost of perturbing the pure 1 + phi^2 scaling of blocks that hold them.
    let z = ExpressionMatrix::from_real(2, 2, vec![0.0, 2.0, 3.0, 4.0])?;
    let zb = Bicluster::full(&z);
    let mut zstate = ShieldState::new(z);
    apply_shield(&mut zstate, &zb, &params)?;
    let rescued = zstate.matrix().get(0, 0);
    println!("\na zero entry shields to {} + {}i: membership is never lost", rescued.re, rescued.im);
    assert_eq!((rescued.re, rescued.im), (0.0, phi));
    Ok(())
}
