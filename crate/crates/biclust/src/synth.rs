//! Synthetic benchmark matrices with known planted biclusters.
//!
//! Planted blocks share one set of row/column offsets, so cells covered by
//! two overlapping blocks are coherent members of both. Recovery is judged
//! against the returned truth index sets.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::ExpressionMatrix;

/// Shape and noise levels of a generated matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SynthConfig {
    pub n_rows: usize,
    pub n_cols: usize,
    /// Uniform range of the background entries.
    pub background: (f64, f64),
    /// Row offsets of planted blocks are uniform in [0, row_offset_scale];
    /// a block cell is row offset + column offset + jitter. A scale of zero
    /// makes every block row carry the same pattern.
    pub row_offset_scale: f64,
    /// Column counterpart of `row_offset_scale`.
    pub col_offset_scale: f64,
    /// Round offsets to whole numbers. With zero jitter and a zero row scale
    /// this makes block residues exactly 0.0: every mean in the residue is
    /// either an exact division (by the block width) or cancels bit-for-bit,
    /// so recovery tests are immune to rounding luck.
    pub integer_offsets: bool,
    /// Half-width of the uniform jitter added inside blocks.
    pub jitter: f64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        Self {
            n_rows: 200,
            n_cols: 40,
            background: (0.0, 800.0),
            row_offset_scale: 400.0,
            col_offset_scale: 400.0,
            integer_offsets: false,
            jitter: 5.0,
        }
    }
}

/// A generated matrix together with the planted truth.
#[derive(Debug, Clone)]
pub struct PlantedMatrix {
    pub matrix: ExpressionMatrix,
    /// Row and column index sets of each planted block, sorted ascending.
    pub blocks: Vec<(Vec<usize>, Vec<usize>)>,
}

/// Fills a background of uniform noise and plants the given blocks as
/// additive patterns. Later blocks overwrite earlier ones cellwise, which is
/// harmless because all blocks draw from the same offset vectors.
pub fn plant_blocks(
    cfg: &SynthConfig,
    blocks: &[(Vec<usize>, Vec<usize>)],
    seed: u64,
) -> PlantedMatrix {
    assert!(cfg.n_rows > 0 && cfg.n_cols > 0, "matrix must be non-empty");
    assert!(cfg.background.0 <= cfg.background.1, "background range inverted");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let quantize = |x: f64| if cfg.integer_offsets { x.round() } else { x };
    let row_offsets: Vec<f64> =
        (0..cfg.n_rows).map(|_| quantize(rng.random_range(0.0..=cfg.row_offset_scale))).collect();
    let col_offsets: Vec<f64> =
        (0..cfg.n_cols).map(|_| quantize(rng.random_range(0.0..=cfg.col_offset_scale))).collect();
    let mut values: Vec<f64> = (0..cfg.n_rows * cfg.n_cols)
        .map(|_| rng.random_range(cfg.background.0..=cfg.background.1))
        .collect();
    for (rows, cols) in blocks {
        for &i in rows {
            assert!(i < cfg.n_rows, "planted row {i} out of range");
            for &j in cols {
                assert!(j < cfg.n_cols, "planted column {j} out of range");
                let jitter = if cfg.jitter > 0.0 {
                    rng.random_range(-cfg.jitter..=cfg.jitter)
                } else {
                    0.0
                };
                values[i * cfg.n_cols + j] = row_offsets[i] + col_offsets[j] + jitter;
            }
        }
    }
    let matrix = ExpressionMatrix::from_real(cfg.n_rows, cfg.n_cols, values)
        .expect("generated values are finite");
    let blocks = blocks
        .iter()
        .map(|(r, c)| {
            let mut r = r.clone();
            let mut c = c.clone();
            r.sort_unstable();
            c.sort_unstable();
            (r, c)
        })
        .collect();
    PlantedMatrix { matrix, blocks }
}

/// One planted block in background noise (the single-recovery benchmark).
pub fn planted_single(cfg: &SynthConfig, block_rows: usize, block_cols: usize, seed: u64) -> PlantedMatrix {
    assert!(block_rows <= cfg.n_rows && block_cols <= cfg.n_cols);
    let rows: Vec<usize> = (0..block_rows).collect();
    let cols: Vec<usize> = (0..block_cols).collect();
    plant_blocks(cfg, &[(rows, cols)], seed)
}

/// Two blocks sharing `shared_rows` rows and `shared_cols` columns (the
/// overlap-discovery benchmark). Each block is `block_rows` x `block_cols`.
pub fn planted_overlap(
    cfg: &SynthConfig,
    block_rows: usize,
    block_cols: usize,
    shared_rows: usize,
    shared_cols: usize,
    seed: u64,
) -> PlantedMatrix {
    assert!(shared_rows < block_rows && shared_cols < block_cols);
    assert!(2 * block_rows - shared_rows <= cfg.n_rows);
    assert!(2 * block_cols - shared_cols <= cfg.n_cols);
    let a_rows: Vec<usize> = (0..block_rows).collect();
    let a_cols: Vec<usize> = (0..block_cols).collect();
    let b_rows: Vec<usize> = (block_rows - shared_rows..2 * block_rows - shared_rows).collect();
    let b_cols: Vec<usize> = (block_cols - shared_cols..2 * block_cols - shared_cols).collect();
    plant_blocks(cfg, &[(a_rows, a_cols), (b_rows, b_cols)], seed)
}

/// A stand-in for the reference expression matrix: same shape (2884 x 17),
/// integer values in [200, 800], additive row/column trends, and a set of
/// planted blocks several of which overlap.
///
/// Every value is at least 200. At a shielding weight of 1000 one shielded
/// cell then carries an imaginary square of at least 4e10, more than the real
/// residue mass any block of this matrix can muster, so no block score can
/// cancel a shield: deletion never stops on, and never collectively wipes,
/// a block holding shielded cells, and long discovery runs cannot jam.
pub fn reference_surrogate(seed: u64) -> PlantedMatrix {
    let n_rows = 2884;
    let n_cols = 17;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gene: Vec<f64> = (0..n_rows).map(|_| rng.random_range(200.0..=450.0)).collect();
    let cond: Vec<f64> = (0..n_cols).map(|_| rng.random_range(100.0..=250.0)).collect();
    let mut values: Vec<f64> = Vec::with_capacity(n_rows * n_cols);
    for i in 0..n_rows {
        for j in 0..n_cols {
            let e: f64 = rng.random_range(-100.0..=100.0);
            values.push((gene[i] + cond[j] + e).round().clamp(0.0, 800.0));
        }
    }
    // Planted coherent blocks; consecutive pairs share rows and columns.
    // All blocks draw from one pair of offset vectors, so shared cells are
    // coherent members of every block covering them.
    let u: Vec<f64> = (0..n_rows).map(|_| rng.random_range(250.0..=450.0)).collect();
    let v: Vec<f64> = (0..n_cols).map(|_| rng.random_range(100.0..=250.0)).collect();
    let specs: [(usize, usize, usize, usize); 12] = [
        (40, 60, 0, 8),
        (80, 50, 4, 7),
        (300, 90, 2, 9),
        (345, 70, 6, 8),
        (700, 120, 0, 6),
        (1000, 45, 9, 8),
        (1025, 55, 11, 6),
        (1400, 100, 3, 10),
        (1800, 80, 0, 9),
        (1845, 60, 5, 8),
        (2300, 110, 7, 10),
        (2600, 90, 1, 9),
    ];
    let mut blocks = Vec::new();
    for &(r0, height, c0, width) in &specs {
        let rows: Vec<usize> = (r0..r0 + height).collect();
        let cols: Vec<usize> = (c0..c0 + width).collect();
        for &i in &rows {
            for &j in &cols {
                let e: f64 = rng.random_range(-8.0..=8.0);
                values[i * n_cols + j] = (u[i] + v[j] + e).round().clamp(0.0, 800.0);
            }
        }
        blocks.push((rows, cols));
    }
    let matrix =
        ExpressionMatrix::from_real(n_rows, n_cols, values).expect("surrogate values are finite");
    PlantedMatrix { matrix, blocks }
}
