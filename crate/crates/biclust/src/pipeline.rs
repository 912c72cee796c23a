//! The experimental protocol: discover K biclusters per repeat, R repeats
//! with derived seeds, aggregate MSR and size per k across repeats.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::baseline::{find_bicluster, mask_random, GreedyParams};
use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::matrix::{Bicluster, ExpressionMatrix};
use crate::shield::{find_shielded_bicluster, ShieldParams, ShieldState};

/// How found biclusters are hidden from subsequent searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Overwrite found blocks with uniform random draws.
    RandomMask,
    /// Mark found blocks with imaginary components, preserving the data.
    Shield,
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "random-mask" => Ok(Strategy::RandomMask),
            "shield" => Ok(Strategy::Shield),
            other => Err(format!("unknown strategy {other:?} (expected random-mask or shield)")),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::RandomMask => write!(f, "random-mask"),
            Strategy::Shield => write!(f, "shield"),
        }
    }
}

/// Full configuration of a run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunConfig {
    pub strategy: Strategy,
    /// Number of biclusters to extract per repeat.
    pub k_target: usize,
    pub delta: f64,
    pub alpha: f64,
    /// Shielding factor; ignored by the random-mask strategy.
    pub phi: f64,
    pub seed: u64,
    pub repeats: usize,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.k_target == 0 {
            return Err(Error::InvalidParam { name: "k_target", message: "must be >= 1".into() });
        }
        if self.repeats == 0 {
            return Err(Error::InvalidParam { name: "repeats", message: "must be >= 1".into() });
        }
        GreedyParams::new(self.delta, self.alpha, self.seed)?;
        ShieldParams::new(self.phi, self.alpha, self.delta)?;
        Ok(())
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            strategy: Strategy::Shield,
            k_target: 50,
            delta: 300.0,
            alpha: 1.2,
            phi: 4.0,
            seed: 0,
            repeats: 10,
        }
    }
}

/// Result of one search attempt.
#[derive(Debug, Clone, PartialEq)]
pub enum SearchOutcome {
    Found(Bicluster),
    /// The search could not produce a valid bicluster; the reason is kept for
    /// the report and the run continues with the next k.
    Failed(String),
}

/// One (repeat, k) slot of a run.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchRecord {
    /// 0-based repeat index.
    pub repeat: usize,
    /// 1-based bicluster number within the repeat.
    pub k: usize,
    pub outcome: SearchOutcome,
}

/// Cross-repeat statistics for one k. Standard deviations are population
/// deviations over the repeats in which the search succeeded.
#[derive(Debug, Clone, PartialEq)]
pub struct KAggregate {
    pub k: usize,
    /// Number of repeats that produced a bicluster at this k.
    pub found: usize,
    pub msr_mean: f64,
    pub msr_std: f64,
    pub size_mean: f64,
    pub size_std: f64,
}

/// Everything a run produced.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub config: RunConfig,
    /// Repeat-major, then k ascending.
    pub records: Vec<SearchRecord>,
    pub aggregates: Vec<KAggregate>,
}

impl RunReport {
    /// Mean MSR over every successful record.
    pub fn overall_msr_mean(&self) -> f64 {
        mean(self.found_values(|b| b.msr()))
    }

    /// Mean cell count over every successful record.
    pub fn overall_size_mean(&self) -> f64 {
        mean(self.found_values(|b| b.size() as f64))
    }

    pub fn found_count(&self) -> usize {
        self.records
            .iter()
            .filter(|r| matches!(r.outcome, SearchOutcome::Found(_)))
            .count()
    }

    fn found_values<F: Fn(&Bicluster) -> f64>(&self, f: F) -> Vec<f64> {
        self.records
            .iter()
            .filter_map(|r| match &r.outcome {
                SearchOutcome::Found(b) => Some(f(b)),
                SearchOutcome::Failed(_) => None,
            })
            .collect()
    }
}

fn mean(xs: Vec<f64>) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    xs.iter().sum::<f64>() / xs.len() as f64
}

fn mean_std(xs: &[f64]) -> (f64, f64) {
    if xs.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let n = xs.len() as f64;
    let mu = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mu) * (x - mu)).sum::<f64>() / n;
    (mu, var.sqrt())
}

/// splitmix64 output at index `n` for a given seed; stateless so repeat
/// streams can be derived independently and in any order.
fn splitmix64_at(seed: u64, n: u64) -> u64 {
    let mut x = seed.wrapping_add(n.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Seed of the imputation stream for one repeat.
pub fn impute_seed(seed: u64, repeat: usize) -> u64 {
    splitmix64_at(seed, 2 * repeat as u64)
}

/// Seed of the masking stream for one repeat.
pub fn mask_seed(seed: u64, repeat: usize) -> u64 {
    splitmix64_at(seed, 2 * repeat as u64 + 1)
}

fn run_one_repeat(m: &ExpressionMatrix, config: &RunConfig, repeat: usize) -> Vec<SearchRecord> {
    let mut records = Vec::with_capacity(config.k_target);
    match config.strategy {
        Strategy::RandomMask => {
            let params = GreedyParams {
                delta: config.delta,
                alpha: config.alpha,
                rng_seed: mask_seed(config.seed, repeat),
            };
            let mut rng = ChaCha8Rng::seed_from_u64(params.rng_seed);
            let mut work = m.clone();
            for k in 1..=config.k_target {
                match find_bicluster(&work, &params) {
                    Ok(b) => {
                        work = mask_random(&work, &b, &mut rng);
                        records.push(SearchRecord { repeat, k, outcome: SearchOutcome::Found(b) });
                    }
                    Err(e) => records.push(SearchRecord {
                        repeat,
                        k,
                        outcome: SearchOutcome::Failed(e.to_string()),
                    }),
                }
            }
        }
        Strategy::Shield => {
            let params = ShieldParams { phi: config.phi, alpha: config.alpha, delta: config.delta };
            let mut state = ShieldState::new(m.clone());
            for k in 1..=config.k_target {
                match find_shielded_bicluster(&mut state, &params) {
                    Ok(b) => {
                        records.push(SearchRecord { repeat, k, outcome: SearchOutcome::Found(b) })
                    }
                    Err(e) => records.push(SearchRecord {
                        repeat,
                        k,
                        outcome: SearchOutcome::Failed(e.to_string()),
                    }),
                }
            }
        }
    }
    records
}

fn aggregate(records: &[SearchRecord], k_target: usize) -> Vec<KAggregate> {
    (1..=k_target)
        .map(|k| {
            let mut msrs = Vec::new();
            let mut sizes = Vec::new();
            for r in records.iter().filter(|r| r.k == k) {
                if let SearchOutcome::Found(b) = &r.outcome {
                    msrs.push(b.msr());
                    sizes.push(b.size() as f64);
                }
            }
            let (msr_mean, msr_std) = mean_std(&msrs);
            let (size_mean, size_std) = mean_std(&sizes);
            KAggregate { k, found: msrs.len(), msr_mean, msr_std, size_mean, size_std }
        })
        .collect()
}

fn run_repeats<F>(provider: F, config: &RunConfig) -> Result<RunReport>
where
    F: Fn(usize) -> ExpressionMatrix,
{
    config.validate()?;
    let mut records = Vec::with_capacity(config.repeats * config.k_target);
    for repeat in 0..config.repeats {
        let m = provider(repeat);
        records.extend(run_one_repeat(&m, config, repeat));
    }
    let aggregates = aggregate(&records, config.k_target);
    Ok(RunReport { config: *config, records, aggregates })
}

/// Runs the protocol on an already-imputed matrix: every repeat starts from
/// the same data and differs only in its masking stream.
pub fn discover_all(m: &ExpressionMatrix, config: &RunConfig) -> Result<RunReport> {
    run_repeats(|_| m.clone(), config)
}

/// Runs the protocol on a raw dataset, re-imputing missing values per repeat
/// from a derived seed, so repeats re-randomize both imputation and masking.
pub fn discover_all_raw(dataset: &Dataset, config: &RunConfig) -> Result<RunReport> {
    run_repeats(|repeat| dataset.impute(impute_seed(config.seed, repeat)), config)
}

/// Per-k difference between the two strategies (shield minus random-mask).
#[derive(Debug, Clone, PartialEq)]
pub struct KDelta {
    pub k: usize,
    pub msr_mean_delta: f64,
    pub size_mean_delta: f64,
}

/// Paired runs of both strategies on identical inputs and seeds.
#[derive(Debug, Clone, PartialEq)]
pub struct CompareReport {
    pub random_mask: RunReport,
    pub shield: RunReport,
    pub per_k: Vec<KDelta>,
    /// Overall mean MSR difference, shield minus random-mask.
    pub msr_mean_delta: f64,
    /// Overall mean size difference, shield minus random-mask.
    pub size_mean_delta: f64,
}

fn compare_reports(random_mask: RunReport, shield: RunReport) -> CompareReport {
    let per_k = random_mask
        .aggregates
        .iter()
        .zip(&shield.aggregates)
        .map(|(rm, sh)| KDelta {
            k: rm.k,
            msr_mean_delta: sh.msr_mean - rm.msr_mean,
            size_mean_delta: sh.size_mean - rm.size_mean,
        })
        .collect();
    let msr_mean_delta = shield.overall_msr_mean() - random_mask.overall_msr_mean();
    let size_mean_delta = shield.overall_size_mean() - random_mask.overall_size_mean();
    CompareReport { random_mask, shield, per_k, msr_mean_delta, size_mean_delta }
}

/// Runs both strategies on the same matrix and seeds and pairs the results.
pub fn compare_strategies(m: &ExpressionMatrix, config: &RunConfig) -> Result<CompareReport> {
    let rm = discover_all(m, &RunConfig { strategy: Strategy::RandomMask, ..*config })?;
    let sh = discover_all(m, &RunConfig { strategy: Strategy::Shield, ..*config })?;
    Ok(compare_reports(rm, sh))
}

/// Raw-dataset counterpart of [`compare_strategies`]; imputation seeds match
/// across the two strategies.
pub fn compare_strategies_raw(dataset: &Dataset, config: &RunConfig) -> Result<CompareReport> {
    let rm = discover_all_raw(dataset, &RunConfig { strategy: Strategy::RandomMask, ..*config })?;
    let sh = discover_all_raw(dataset, &RunConfig { strategy: Strategy::Shield, ..*config })?;
    Ok(compare_reports(rm, sh))
}
