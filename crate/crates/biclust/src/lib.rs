//! Greedy delta-bicluster search over expression matrices, with two ways of
//! keeping successive searches from rediscovering the same block: the classic
//! random-number masking and a complex shielding transform that preserves the
//! underlying data and so admits overlapping biclusters.
//!
//! A bicluster is a row and column subset whose submatrix has a small mean
//! squared residue (MSR); a block qualifies when its score is at or under a
//! budget delta. [`matrix`] holds the residue arithmetic, [`baseline`] the
//! greedy delete-then-add search plus random masking, [`shield`] the complex
//! masking variant, [`pipeline`] the repeated-discovery protocol and strategy
//! comparison, [`dataset`] and [`report`] the file I/O, and [`synth`] planted
//! benchmark generators.
//!
//! ```
//! use biclust::baseline::{find_bicluster, GreedyParams};
//! use biclust::ExpressionMatrix;
//!
//! let m = ExpressionMatrix::from_real(2, 2, vec![1.0, 2.0, 3.0, 5.0])?;
//! let b = find_bicluster(&m, &GreedyParams::new(0.1, 1.2, 0)?)?;
//! assert_eq!(b.msr(), 0.0625);
//! # Ok::<(), biclust::Error>(())
//! ```
//!
//! The runnable programs in `examples/` walk through each capability; the
//! `biclust` binary wires the same pipeline to command-line flags.

pub mod baseline;
pub mod dataset;
mod engine;
pub mod error;
pub mod matrix;
pub mod pipeline;
pub mod report;
pub mod shield;
pub mod synth;

pub use error::{Error, Result};
pub use matrix::{Bicluster, ExpressionMatrix, Scalar};
