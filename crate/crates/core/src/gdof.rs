//! Closed-form sum GDoF of the symmetric IRC and the no-relay baseline.
//!
//! The sum GDoF for `gamma <= alpha` is the minimum of six piecewise-linear
//! expressions in the strength exponents; [`gdof_irc`] evaluates all six and
//! reports which one attains the minimum. [`gdof_ic`] provides the classic
//! symmetric interference-channel W-curve used as the relay-free comparison,
//! and [`gdof_gain_region`] tabulates where the relay strictly beats it.

use crate::channel::StrengthExponents;
use crate::error::{Error, Result};

/// Margin above which the IRC GDoF counts as a strict gain over the IC.
const GAIN_MARGIN: f64 = 1e-12;

/// The six min-arguments of the closed-form sum GDoF, their minimum, and a
/// minimizing index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GdofBreakdown {
    /// The six arguments of the min, in their conventional order.
    pub args: [f64; 6],
    /// `min(args)`.
    pub value: f64,
    /// 1-based index of a minimizing argument; ties go to the smallest index.
    pub argmin_index: usize,
}

/// The six min-arguments as functions of the exponents.
///
/// [`crate::bounds::gdof_upper_args`] carries an independent transcription of
/// the same expressions grouped by converse bound; tests cross-check the two.
fn min_arguments(alpha: f64, beta: f64, gamma: f64) -> [f64; 6] {
    [
        2.0 * beta.max(1.0),
        2.0 * gamma.max(1.0),
        alpha.max(beta).max(1.0) + alpha.max(1.0) - alpha,
        2.0 * alpha.max(1.0) + gamma - alpha,
        2.0 * alpha.max(beta).max(1.0 - alpha),
        2.0 * alpha.max(1.0 + gamma - alpha),
    ]
}

/// Index (1-based) of the smallest entry, lowest index winning ties.
fn argmin(args: &[f64; 6]) -> usize {
    let mut best = 0;
    for (i, &a) in args.iter().enumerate().skip(1) {
        if a < args[best] {
            best = i;
        }
    }
    best + 1
}

/// Closed-form sum GDoF of the IRC with per-argument attribution.
///
/// # Errors
///
/// The closed form holds for `gamma <= alpha` only; `gamma > alpha` is
/// rejected rather than extrapolated. Evaluation exactly at `gamma == alpha`
/// is allowed.
pub fn gdof_irc(e: StrengthExponents) -> Result<GdofBreakdown> {
    if e.gamma() > e.alpha() {
        return Err(Error::RegimeNotCharacterized {
            alpha: e.alpha(),
            gamma: e.gamma(),
        });
    }
    let args = min_arguments(e.alpha(), e.beta(), e.gamma());
    let index = argmin(&args);
    Ok(GdofBreakdown {
        args,
        value: args[index - 1],
        argmin_index: index,
    })
}

/// Sum GDoF of the symmetric interference channel without relay (W-curve).
///
/// ```text
/// 2(1-a)  a in [0, 1/2]
/// 2a      a in [1/2, 2/3]
/// 2-a     a in [2/3, 1]
/// a       a in [1, 2]
/// 2       a >= 2
/// ```
///
/// # Panics
///
/// `alpha` must be finite and non-negative.
pub fn gdof_ic(alpha: f64) -> f64 {
    assert!(
        alpha.is_finite() && alpha >= 0.0,
        "gdof_ic needs alpha >= 0, got {alpha}"
    );
    if alpha <= 0.5 {
        2.0 * (1.0 - alpha)
    } else if alpha <= 2.0 / 3.0 {
        2.0 * alpha
    } else if alpha <= 1.0 {
        2.0 - alpha
    } else if alpha <= 2.0 {
        alpha
    } else {
        2.0
    }
}

/// One grid point of the relay-gain comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GainPoint {
    pub alpha: f64,
    pub d_irc: f64,
    pub d_ic: f64,
    /// Whether the relay strictly improves on the IC at this point.
    pub relay_gain: bool,
}

/// IRC-versus-IC GDoF over a grid of interference exponents.
///
/// # Errors
///
/// Requires `gamma <= min(alpha_grid)`; the regime gate of [`gdof_irc`]
/// propagates from the first offending grid point.
pub fn gdof_gain_region(beta: f64, gamma: f64, alpha_grid: &[f64]) -> Result<Vec<GainPoint>> {
    alpha_grid
        .iter()
        .map(|&alpha| {
            let d_irc = gdof_irc(StrengthExponents::new(alpha, beta, gamma)?)?.value;
            let d_ic = gdof_ic(alpha);
            Ok(GainPoint {
                alpha,
                d_irc,
                d_ic,
                relay_gain: d_irc > d_ic + GAIN_MARGIN,
            })
        })
        .collect()
}
