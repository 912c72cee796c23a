//! Residue arithmetic on a two-by-two matrix, worked end to end: means,
//! residues, variance, the mean squared residue, and the per-line scores the
//! greedy search deletes and admits by.
//!
//!     cargo run --example msr_basics

use biclust::{Bicluster, ExpressionMatrix, Result};

fn main() -> Result<()> {
    // | 1 2 |
    // | 3 5 |
    let m = ExpressionMatrix::from_real(2, 2, vec![1.0, 2.0, 3.0, 5.0])?;
    let b = Bicluster::full(&m);

    println!("matrix:");
    for i in 0..m.n_rows() {
        let row: Vec<String> = (0..m.n_cols()).map(|j| format!("{}", m.get(i, j).re)).collect();
        println!("  [{}]", row.join(", "));
    }

    println!("\nrow means:     {} and {}", m.row_mean(&b, 0)?.re, m.row_mean(&b, 1)?.re);
    println!("column means:  {} and {}", m.col_mean(&b, 0)?.re, m.col_mean(&b, 1)?.re);
    println!("overall mean:  {}", m.overall_mean(&b).re);

    // The residue of a cell is what is left after removing its row effect,
    // its column effect, and adding the overall mean back once.
    println!("\nresidues:");
    for i in 0..2 {
        for j in 0..2 {
            println!("  r[{i}][{j}] = {:+}", m.residue(&b, i, j)?.re);
        }
    }

    // The mean squared residue is the block's coherence score; the variance
    // is the trivial alternative that a constant-row block minimizes.
    println!("\nmean squared residue: {}", m.msr(&b));
    println!("variance (about the overall mean): {}", m.variance(&b)?);

    // Per-line scores: the deletion phase drops lines scoring far above the
    // block score, the addition phase admits outside lines scoring at or
    // under it.
    println!("\nrow scores:    {} and {}", m.row_msr(&b, 0)?, m.row_msr(&b, 1)?);
    println!("column scores: {} and {}", m.col_msr(&b, 0)?, m.col_msr(&b, 1)?);

    // Adding one constant to every entry leaves all residues unchanged:
    // coherence is about parallel movement, not absolute level.
    let shifted = ExpressionMatrix::from_real(2, 2, vec![101.0, 102.0, 103.0, 105.0])?;
    let sb = Bicluster::full(&shifted);
    println!("\nafter adding 100 to every entry, the score is still {}", shifted.msr(&sb));

    // A perfectly additive block scores exactly zero.
    let additive = ExpressionMatrix::from_real(2, 2, vec![1.0, 2.0, 3.0, 4.0])?;
    let ab = Bicluster::full(&additive);
    println!("a perfectly additive block scores {}", additive.msr(&ab));
    Ok(())
}
