//! Cross-check of the closed-form entropy against exact diagonalization.

use std::f64::consts::PI;

use serde::Serialize;

use crate::analysis::period;
use crate::closed_form::{AmplitudeTable, ModelConfig};
use crate::combinatorics::ExactRational;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::oracle::{reduced_entropy, SectorBasis, SectorHamiltonian, DEFAULT_MAX_DOTS};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossCheckOptions {
    pub min_dots: u32,
    pub max_dots: u32,
    pub samples_per_period: usize,
    pub tolerance: f64,
    pub oracle_max_dots: u32,
    /// Perturb every amplitude table before comparing; the check must fail.
    pub corrupt_table: bool,
}

impl Default for CrossCheckOptions {
    fn default() -> Self {
        Self {
            min_dots: 2,
            max_dots: 10,
            samples_per_period: 25,
            tolerance: 1e-9,
            oracle_max_dots: DEFAULT_MAX_DOTS,
            corrupt_table: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Mismatch {
    pub dots: u32,
    pub excitations: u32,
    pub kt: f64,
    pub closed_form: f64,
    pub oracle: f64,
    pub difference: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossCheckReport {
    pub comparisons: usize,
    pub max_difference: f64,
    pub failures: Vec<Mismatch>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Sample times: one period (or `2 pi` for a stationary sector) split into
/// `samples` equal steps.
pub fn sample_times(config: ModelConfig, samples: usize) -> Vec<f64> {
    let span = period(config).unwrap_or(2.0 * PI);
    (0..samples).map(|j| span * j as f64 / samples as f64).collect()
}

/// Compares the two entropy routes for every `min_dots <= N <= max_dots` and
/// `0 <= M <= N`.
pub fn cross_check(options: CrossCheckOptions, exec: Execution) -> Result<CrossCheckReport> {
    if options.min_dots == 0 || options.max_dots < options.min_dots {
        return Err(Error::TooFewDots("cross check", options.min_dots.max(1)));
    }
    let jobs: Vec<(u32, u32)> = (options.min_dots..=options.max_dots)
        .flat_map(|n| (0..=n).map(move |m| (n, m)))
        .collect();
    let per_job = exec.try_map(&jobs, |&(n, m)| check_sector(n, m, &options))?;

    let mut report = CrossCheckReport {
        comparisons: 0,
        max_difference: 0.0,
        failures: Vec::new(),
    };
    for (count, worst, failures) in per_job {
        report.comparisons += count;
        report.max_difference = report.max_difference.max(worst);
        report.failures.extend(failures);
    }
    Ok(report)
}

fn check_sector(n: u32, m: u32, options: &CrossCheckOptions) -> Result<(usize, f64, Vec<Mismatch>)> {
    let config = ModelConfig::new(n, m)?;
    let mut table = AmplitudeTable::new(config);
    if options.corrupt_table {
        let last = table.rank() - 1;
        table = table.with_perturbed_amplitude(last, last, ExactRational::new(1, 1000));
    }
    let basis = SectorBasis::with_budget(n, m, options.oracle_max_dots)?;
    let propagator = SectorHamiltonian::new(basis).propagator()?;

    let mut worst = 0.0f64;
    let mut failures = Vec::new();
    let times = sample_times(config, options.samples_per_period);
    for &kt in &times {
        let closed_form = match table.entropy_at(kt) {
            Ok(e) => e,
            Err(Error::Normalization { .. }) => f64::NAN,
            Err(e) => return Err(e),
        };
        let oracle = reduced_entropy(&propagator.evolve(kt), m)?;
        let difference = (closed_form - oracle).abs();
        if difference.is_nan() {
            worst = f64::INFINITY;
        } else {
            worst = worst.max(difference);
        }
        // NaN differences count as failures
        if difference.is_nan() || difference >= options.tolerance {
            failures.push(Mismatch {
                dots: n,
                excitations: m,
                kt,
                closed_form,
                oracle,
                difference,
            });
        }
    }
    Ok((times.len(), worst, failures))
}
