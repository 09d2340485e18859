//! Interference-exponent sweeps with CSV output.
//!
//! A sweep fixes `(beta, gamma)` and walks a uniform grid of interference
//! exponents, recording at each point the closed-form GDoF with its argmin
//! attribution, the no-relay baseline, and the numerical slopes of the
//! tightest finite-SNR bound and of the searched achievable rate. Rows are
//! written as CSV with a fixed header and six-decimal formatting, so equal
//! configurations produce byte-identical files.

use std::io::Write;

use crate::bounds::bound_report;
use crate::channel::StrengthExponents;
use crate::error::{Error, Result};
use crate::estimator::{estimate_slope, DEFAULT_LADDER};
use crate::fdf::best_sum_rate;
use crate::gdof::{gdof_ic, gdof_irc};

/// Exact header line of the sweep CSV.
pub const CSV_HEADER: &str = "alpha,d_formula,d_ic,d_converse_numeric,d_fdf_numeric,argmin";

/// Convergence tolerance handed to the slope estimator for the numeric
/// columns; the CSV records final-rung slopes only.
const SLOPE_TOLERANCE: f64 = 0.1;

/// Sweep configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub beta: f64,
    pub gamma: f64,
    /// Grid start; must be at least `gamma`.
    pub alpha_min: f64,
    /// Grid end; must exceed `alpha_min`.
    pub alpha_max: f64,
    /// Number of grid points, at least 2.
    pub steps: usize,
    /// SNR ladder for the numeric columns.
    pub ladder: Vec<f64>,
    /// Level cap for the achievable-rate search.
    pub k_max: usize,
    /// Grid resolution for the achievable-rate search.
    pub resolution: usize,
}

impl SweepConfig {
    /// Defaults matching the reference curves: grid from `gamma` to 2.5 at
    /// 0.05 spacing, the default SNR ladder, and a small search.
    pub fn new(beta: f64, gamma: f64) -> Self {
        let alpha_min = gamma;
        let alpha_max = 2.5;
        Self {
            beta,
            gamma,
            alpha_min,
            alpha_max,
            steps: default_steps(alpha_min, alpha_max),
            ladder: DEFAULT_LADDER.to_vec(),
            k_max: 2,
            resolution: 5,
        }
    }
}

/// Number of grid points at the default 0.05 spacing.
pub fn default_steps(alpha_min: f64, alpha_max: f64) -> usize {
    (((alpha_max - alpha_min) / 0.05).round() as usize + 1).max(2)
}

/// One row of the sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub alpha: f64,
    /// Closed-form GDoF.
    pub d_formula: f64,
    /// No-relay baseline.
    pub d_ic: f64,
    /// Final-rung slope of the tightest finite-SNR bound.
    pub d_converse_numeric: f64,
    /// Final-rung slope of the searched achievable sum rate.
    pub d_fdf_numeric: f64,
    /// 1-based argmin of the closed form.
    pub argmin_index: usize,
}

/// Runs the sweep, one row per grid point in grid order.
///
/// # Errors
///
/// The regime precondition `alpha_min >= gamma` is enforced up front (no
/// per-row skipping), along with grid and ladder validation.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    if config.alpha_min < config.gamma {
        return Err(Error::RegimeNotCharacterized {
            alpha: config.alpha_min,
            gamma: config.gamma,
        });
    }
    if config.steps < 2 {
        return Err(Error::Parameter {
            reason: "a sweep needs at least 2 steps",
        });
    }
    if config.alpha_max <= config.alpha_min {
        return Err(Error::Parameter {
            reason: "alpha_max must exceed alpha_min",
        });
    }

    let width = (config.alpha_max - config.alpha_min) / (config.steps - 1) as f64;
    let mut rows = Vec::with_capacity(config.steps);
    for i in 0..config.steps {
        let alpha = config.alpha_min + i as f64 * width;
        let e = StrengthExponents::new(alpha, config.beta, config.gamma)?;
        let breakdown = gdof_irc(e)?;
        let converse = estimate_slope(
            |ch| Ok(bound_report(ch).tightest),
            e,
            &config.ladder,
            SLOPE_TOLERANCE,
        )?;
        let achievable = estimate_slope(
            |ch| best_sum_rate(ch, config.k_max, config.resolution).map(|b| b.rates.sum_rate),
            e,
            &config.ladder,
            SLOPE_TOLERANCE,
        )?;
        rows.push(SweepRow {
            alpha,
            d_formula: breakdown.value,
            d_ic: gdof_ic(alpha),
            d_converse_numeric: converse.final_slope,
            d_fdf_numeric: achievable.final_slope,
            argmin_index: breakdown.argmin_index,
        });
    }
    Ok(rows)
}

/// Writes the header and rows as CSV: UTF-8, LF line endings, six decimal
/// places on the real columns, no trailing whitespace.
pub fn write_csv<W: Write>(rows: &[SweepRow], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(
            out,
            "{:.6},{:.6},{:.6},{:.6},{:.6},{}",
            row.alpha,
            row.d_formula,
            row.d_ic,
            row.d_converse_numeric,
            row.d_fdf_numeric,
            row.argmin_index
        )?;
    }
    Ok(())
}
