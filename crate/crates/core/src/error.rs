use std::fmt;

/// Errors shared by every operation in the toolkit.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// `capacity` / `capacity_plus` argument at or below -1.
    CapacityDomain { x: f64 },
    /// `realize` needs snr > 1 so the exponent normalizer log(snr) is positive.
    SnrDomain { snr: f64 },
    /// A strength exponent is negative or non-finite.
    ExponentDomain { name: &'static str, value: f64 },
    /// A channel gain or power is out of range (negative gain, power <= 0, non-finite).
    ChannelDomain { name: &'static str, value: f64 },
    /// `recover_exponents` normalizer h_d^2 P is at or below 1.
    DegenerateNormalizer { snr_d: f64 },
    /// A gain-power product is zero, so its exponent is undefined.
    ZeroStrength { name: &'static str },
    /// The closed form covers gamma <= alpha only.
    RegimeNotCharacterized { alpha: f64, gamma: f64 },
    /// The reference allocation needs its weak-interference regime.
    ExampleRegime { reason: &'static str },
    /// Genie bounds contain bare ratios over h_c or h_sr; zero gains are rejected.
    DegenerateChannel { gain: &'static str },
    /// Power allocation violates the power ledger or positivity.
    InfeasibleAllocation { reason: String },
    /// SNR ladder must be non-empty, strictly ascending, every value > 1.
    LadderDomain { reason: &'static str },
    /// A search or tolerance parameter is out of range.
    Parameter { reason: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::CapacityDomain { x } => {
                write!(f, "capacity argument {x} outside the domain (-1, inf)")
            }
            Error::SnrDomain { snr } => write!(f, "snr {snr} must exceed 1"),
            Error::ExponentDomain { name, value } => {
                write!(
                    f,
                    "exponent {name} = {value} must be finite and non-negative"
                )
            }
            Error::ChannelDomain { name, value } => {
                write!(f, "channel parameter {name} = {value} out of range")
            }
            Error::DegenerateNormalizer { snr_d } => {
                write!(f, "h_d^2*P = {snr_d} must exceed 1 to recover exponents")
            }
            Error::ZeroStrength { name } => {
                write!(f, "gain-power product {name} is zero; exponent undefined")
            }
            Error::RegimeNotCharacterized { .. } => {
                write!(f, "regime gamma>alpha not characterized")
            }
            Error::ExampleRegime { reason } => {
                write!(f, "example allocation regime violated: {reason}")
            }
            Error::DegenerateChannel { gain } => {
                write!(f, "degenerate channel: {gain} is zero")
            }
            Error::InfeasibleAllocation { reason } => {
                write!(f, "infeasible power allocation: {reason}")
            }
            Error::LadderDomain { reason } => write!(f, "invalid snr ladder: {reason}"),
            Error::Parameter { reason } => write!(f, "invalid parameter: {reason}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
