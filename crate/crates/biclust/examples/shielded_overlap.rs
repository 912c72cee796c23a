//! Recovering two overlapping planted blocks. Random masking destroys the
//! data the blocks share, so the second search digs through rubble; the
//! shield marks it with an imaginary component and leaves the values intact,
//! so the second block is still fully present.
//!
//!     cargo run --example shielded_overlap

use biclust::baseline::{find_bicluster, mask_random, GreedyParams};
use biclust::shield::{find_shielded_bicluster, ShieldParams, ShieldState};
use biclust::synth::{planted_overlap, SynthConfig};
use biclust::{Bicluster, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<()> {
    // Two 40 x 14 additive blocks sharing 10 rows and 3 columns, planted with
    // identical rows and whole-number column offsets so that every block
    // residue is exactly 0.0 and both blocks are perfect score-zero targets.
    let cfg = SynthConfig {
        row_offset_scale: 0.0,
        col_offset_scale: 800.0,
        integer_offsets: true,
        jitter: 0.0,
        ..SynthConfig::default()
    };
    let planted = planted_overlap(&cfg, 40, 14, 10, 3, 0);
    let m = &planted.matrix;
    let truths: Vec<Bicluster> = planted
        .blocks
        .iter()
        .map(|(r, c)| Bicluster::new(m, r.clone(), c.clone()))
        .collect::<Result<_>>()?;

    let delta = 1e-9;
    let alpha = 1.2;

    // Shield strategy: search, shield the result, search again. The weight is
    // large enough that shielded lines dominate the whole-matrix score at the
    // start of the second search, so the first deletion round removes exactly
    // the lines the first find touched and the search proceeds on what is
    // left, shared cells included.
    let params = ShieldParams { phi: 8.0, alpha, delta };
    let mut state = ShieldState::new(m.clone());
    let mut shielded_found = Vec::new();
    for _ in 0..2 {
        shielded_found.push(find_shielded_bicluster(&mut state, &params)?);
    }

    // Random-mask strategy: search, overwrite the result with uniform draws,
    // search again on the damaged matrix.
    let gp = GreedyParams { delta, alpha, rng_seed: 0 };
    let mut rng = ChaCha8Rng::seed_from_u64(gp.rng_seed);
    let mut work = m.clone();
    let mut masked_found = Vec::new();
    for _ in 0..2 {
        let b = find_bicluster(&work, &gp)?;
        work = mask_random(&work, &b, &mut rng);
        masked_found.push(b);
    }

    // Match the two finds to the two planted blocks by the assignment with
    // the better total overlap.
    let pair = |found: &[Bicluster]| -> (f64, f64) {
        let j = |f: &Bicluster, t: &Bicluster| f.cell_jaccard(t);
        let straight = (j(&found[0], &truths[0]), j(&found[1], &truths[1]));
        let crossed = (j(&found[0], &truths[1]), j(&found[1], &truths[0]));
        if straight.0 + straight.1 >= crossed.0 + crossed.1 { straight } else { crossed }
    };
    let (sa, sb) = pair(&shielded_found);
    let (ma, mb) = pair(&masked_found);

    println!("overlap with the planted truth (Jaccard), one value per block:");
    println!("  shield:      {sa:.3}  {sb:.3}");
    println!("  random-mask: {ma:.3}  {mb:.3}");

    // Both shielded finds sit exactly on the planted blocks, and the shared
    // cells are reported in both.
    assert_eq!((sa, sb), (1.0, 1.0));
    assert!(ma == 1.0 && mb < 1.0);
    let shared_in_both = shielded_found[0]
        .rows()
        .iter()
        .any(|i| shielded_found[1].contains_row(*i))
        && shielded_found[0]
            .cols()
            .iter()
            .any(|j| shielded_found[1].contains_col(*j));
    println!("\nshared cells appear in both shielded finds: {shared_in_both}");

    // The mask arm loses the shared region: whichever axis the second search
    // gives up, the recovered block is missing the rows or columns the first
    // find overwrote.
    let missing = 1.0 - mb;
    println!("random-mask second find loses {:.0}% of its block's cells", missing * 100.0);
    Ok(())
}
