//! Rate and degrees-of-freedom analysis for the symmetric two-user Gaussian
//! interference relay channel (IRC).
//!
//! The toolkit evaluates three views of the same channel and cross-checks
//! them against each other:
//!
//! - the closed-form sum GDoF for `gamma <= alpha` with per-argument
//!   attribution ([`gdof`]), next to the relay-free interference-channel
//!   baseline;
//! - finite-SNR sum-capacity upper bounds (two cut-set and two genie-aided
//!   bounds, [`bounds`]) whose normalized slopes converge to the closed
//!   form's converse arguments;
//! - functional decode-and-forward achievable rates ([`fdf`]), including the
//!   geometric power ladder that meets the GDoF in the weak-interference
//!   regime and a deterministic power-split search.
//!
//! [`estimator`] extracts numerical GDoF slopes from any finite-SNR rate
//! function and assembles converse/achievability verification reports;
//! [`sweep`] reproduces GDoF-versus-alpha curves as deterministic CSV.
//!
//! Rates are bits per channel use (base-2 logs) throughout. All operations
//! are pure functions of immutable values and safe to evaluate concurrently.

pub mod bounds;
pub mod channel;
mod error;
pub mod estimator;
pub mod fdf;
pub mod gdof;
pub mod sweep;

pub use bounds::{bound_report, cutset_bounds, gdof_upper_args, genie_bound_1, genie_bound_2};
pub use bounds::{BoundKind, BoundReport};
pub use channel::{capacity, capacity_plus, realize, recover_exponents};
pub use channel::{LinearChannel, StrengthExponents};
pub use error::{Error, Result};
pub use estimator::{estimate_slope, verify_gdof, GdofVerification, SlopeEstimate, DEFAULT_LADDER};
pub use fdf::{
    best_sum_rate, cp_ladder_check, example_allocation, relay_constraint_dominance, strong_rates,
    weak_rates, BestRate, BindingConstraints, CommonBinding, CpLevelBinding, CpTotalBinding,
    FdfVariant, PowerAllocation, RateBreakdown,
};
pub use gdof::{gdof_gain_region, gdof_ic, gdof_irc, GainPoint, GdofBreakdown};
pub use sweep::{default_steps, run_sweep, write_csv, SweepConfig, SweepRow, CSV_HEADER};
