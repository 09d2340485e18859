//! Finite-SNR sum-capacity upper bounds and their GDoF exponents.
//!
//! Two cut-set bounds and two genie-aided bounds cap the sum rate of the
//! symmetric IRC at any SNR. Normalized by `0.5 * log2(h_d^2 P)`, the
//! cut-set pair converges to the first two min-arguments of the closed-form
//! GDoF and the genie pair to the fourth and sixth; the third and fifth
//! arguments come from bounds available only at the exponent level, so
//! [`gdof_upper_args`] is their single home and no finite-SNR counterpart
//! exists for them here.

use crate::channel::{cap, cap_pos, LinearChannel, StrengthExponents};
use crate::error::{Error, Result};

/// Which of the four finite-SNR bounds is tightest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// Cut around the destinations: sources and relay broadcast jointly.
    CutsetBc,
    /// Cut around the sources: direct links plus the source-relay link.
    CutsetMac,
    /// Genie bound built on the relay observation and one message.
    Genie1,
    /// Genie bound built on noise-ratio enhancement.
    Genie2,
}

impl BoundKind {
    pub fn name(&self) -> &'static str {
        match self {
            BoundKind::CutsetBc => "cutset_bc",
            BoundKind::CutsetMac => "cutset_mac",
            BoundKind::Genie1 => "genie_1",
            BoundKind::Genie2 => "genie_2",
        }
    }
}

/// All four finite-SNR sum-rate bounds in bits, plus their minimum.
///
/// Genie bounds that are undefined for a degenerate channel (`h_c = 0` or
/// `h_sr = 0`) enter the report as `f64::INFINITY`: they constrain nothing,
/// and the cut-set bounds always remain finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub cutset_bc: f64,
    pub cutset_mac: f64,
    pub genie_1: f64,
    pub genie_2: f64,
    /// Minimum of the four fields above.
    pub tightest: f64,
    /// Name of the tightest bound; ties resolve in field order.
    pub tightest_name: BoundKind,
}

/// The two cut-set sum-rate bounds in bits:
/// `2 C((|h_d| + |h_r|)^2 P)` and `2 C(h_d^2 P + h_sr^2 P)`.
pub fn cutset_bounds(ch: &LinearChannel) -> (f64, f64) {
    let sum_gain = ch.h_d().abs() + ch.h_r().abs();
    let bc = 2.0 * cap(sum_gain * sum_gain * ch.power());
    let mac = 2.0 * cap(ch.snr_d() + ch.snr_sr());
    (bc, mac)
}

/// Genie-aided sum-rate bound
/// `C(2 h_sr^2 P) + C(h_d^2 P + h_c^2 P) + C^+(h_d^2/h_c^2 - 1)` in bits.
///
/// # Errors
///
/// Rejects `h_c = 0`, where the gain ratio is undefined.
pub fn genie_bound_1(ch: &LinearChannel) -> Result<f64> {
    if ch.h_c() == 0.0 {
        return Err(Error::DegenerateChannel { gain: "h_c" });
    }
    let ratio = (ch.h_d() / ch.h_c()).powi(2);
    Ok(cap(2.0 * ch.snr_sr()) + cap(ch.snr_d() + ch.snr_c()) + cap_pos(ratio - 1.0))
}

/// Genie-aided sum-rate bound
/// `2 C(h_c^2/h_sr^2 + (1 - h_d/h_c)^2) + 2 C(2 h_sr^2 P)` in bits.
///
/// # Errors
///
/// Rejects `h_sr = 0` and `h_c = 0`, where the gain ratios are undefined.
pub fn genie_bound_2(ch: &LinearChannel) -> Result<f64> {
    if ch.h_sr() == 0.0 {
        return Err(Error::DegenerateChannel { gain: "h_sr" });
    }
    if ch.h_c() == 0.0 {
        return Err(Error::DegenerateChannel { gain: "h_c" });
    }
    let gain_ratio = (ch.h_c() / ch.h_sr()).powi(2);
    let mismatch = (1.0 - ch.h_d() / ch.h_c()).powi(2);
    Ok(2.0 * cap(gain_ratio + mismatch) + 2.0 * cap(2.0 * ch.snr_sr()))
}

/// All four bounds and their minimum for one channel.
pub fn bound_report(ch: &LinearChannel) -> BoundReport {
    let (cutset_bc, cutset_mac) = cutset_bounds(ch);
    let genie_1 = genie_bound_1(ch).unwrap_or(f64::INFINITY);
    let genie_2 = genie_bound_2(ch).unwrap_or(f64::INFINITY);

    let candidates = [
        (cutset_bc, BoundKind::CutsetBc),
        (cutset_mac, BoundKind::CutsetMac),
        (genie_1, BoundKind::Genie1),
        (genie_2, BoundKind::Genie2),
    ];
    let mut tightest = candidates[0];
    for &c in &candidates[1..] {
        if c.0 < tightest.0 {
            tightest = c;
        }
    }

    BoundReport {
        cutset_bc,
        cutset_mac,
        genie_1,
        genie_2,
        tightest: tightest.0,
        tightest_name: tightest.1,
    }
}

/// The six converse exponents of the closed-form GDoF, in the conventional
/// order. Entries 1, 2, 4, and 6 are the high-SNR slopes of `cutset_bc`,
/// `cutset_mac`, `genie_1`, and `genie_2`; entries 3 and 5 exist only at
/// this exponent level.
pub fn gdof_upper_args(e: StrengthExponents) -> [f64; 6] {
    let (alpha, beta, gamma) = (e.alpha(), e.beta(), e.gamma());
    [
        // Broadcast cut: the relay and direct links add in amplitude.
        2.0 * beta.max(1.0),
        // Source-side cut: direct plus source-relay observations.
        2.0 * gamma.max(1.0),
        // Exponent-level-only bound.
        alpha.max(beta).max(1.0) + alpha.max(1.0) - alpha,
        // Relay-observation genie: gamma + the two-receiver sum exponent.
        2.0 * alpha.max(1.0) + gamma - alpha,
        // Exponent-level-only bound.
        2.0 * alpha.max(beta).max(1.0 - alpha),
        // Noise-enhancement genie.
        2.0 * alpha.max(1.0 + gamma - alpha),
    ]
}
