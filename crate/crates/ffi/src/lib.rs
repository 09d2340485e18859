//! C ABI over the irc-gdof toolkit.
//!
//! Channels live behind the opaque [`IrcGdofChannel`] handle; every other
//! result crosses the boundary as a plain C struct through out-pointers.
//! Functions return [`IrcGdofStatus`] and never unwind; `IRC_GDOF_STATUS_OK`
//! means the out-pointers were written. The generated header lands in
//! `include/irc_gdof.h`.

use std::os::raw::c_char;

use irc_gdof::{
    best_sum_rate, bound_report, capacity, capacity_plus, example_allocation, gdof_ic, gdof_irc,
    realize, recover_exponents, weak_rates, BoundKind, Error, FdfVariant, LinearChannel,
    RateBreakdown, StrengthExponents,
};

/// Outcome of an FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IrcGdofStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument was out of its numeric domain.
    InvalidInput = 2,
    /// The closed form covers gamma <= alpha only.
    RegimeNotCharacterized = 3,
    /// A genie bound ratio over a zero gain.
    DegenerateChannel = 4,
    /// A power allocation violated its ledger or regime.
    InfeasibleAllocation = 5,
}

impl From<&Error> for IrcGdofStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::RegimeNotCharacterized { .. } => IrcGdofStatus::RegimeNotCharacterized,
            Error::DegenerateChannel { .. } => IrcGdofStatus::DegenerateChannel,
            Error::InfeasibleAllocation { .. } | Error::ExampleRegime { .. } => {
                IrcGdofStatus::InfeasibleAllocation
            }
            _ => IrcGdofStatus::InvalidInput,
        }
    }
}

/// Opaque channel handle; create with `irc_gdof_channel_new` or
/// `irc_gdof_channel_realize`, release with `irc_gdof_channel_free`.
pub struct IrcGdofChannel {
    inner: LinearChannel,
}

/// The six min-arguments of the closed-form GDoF and their minimum.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct IrcGdofBreakdown {
    /// The six arguments in their conventional order.
    pub args: [f64; 6],
    /// `min(args)`.
    pub value: f64,
    /// 1-based index of a minimizing argument (ties go to the smallest).
    pub argmin_index: u32,
}

/// Which finite-SNR bound is tightest.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IrcGdofBound {
    CutsetBc = 0,
    CutsetMac = 1,
    Genie1 = 2,
    Genie2 = 3,
}

/// The four finite-SNR sum-rate bounds in bits and their minimum. Genie
/// bounds that are undefined for the channel are reported as infinity.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct IrcGdofBoundReport {
    pub cutset_bc: f64,
    pub cutset_mac: f64,
    pub genie_1: f64,
    pub genie_2: f64,
    pub tightest: f64,
    pub tightest_name: IrcGdofBound,
}

/// Rate variant that produced a result.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IrcGdofVariant {
    Weak = 0,
    Strong = 1,
}

/// Condensed achievable-rate result in bits per channel use.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct IrcGdofRateSummary {
    pub r_private: f64,
    pub r_common: f64,
    pub r_cp_total: f64,
    pub sum_rate: f64,
    /// Number of cooperative-public levels in the allocation.
    pub levels: u32,
    pub variant: IrcGdofVariant,
}

fn summarize(rates: &RateBreakdown, variant: FdfVariant) -> IrcGdofRateSummary {
    IrcGdofRateSummary {
        r_private: rates.r_private,
        r_common: rates.r_common,
        r_cp_total: rates.r_cp_total,
        sum_rate: rates.sum_rate,
        levels: rates.r_cp_levels.len() as u32,
        variant: match variant {
            FdfVariant::Weak => IrcGdofVariant::Weak,
            FdfVariant::Strong => IrcGdofVariant::Strong,
        },
    }
}

unsafe fn write_out<T>(out: *mut T, value: T) -> IrcGdofStatus {
    if out.is_null() {
        return IrcGdofStatus::NullPointer;
    }
    out.write(value);
    IrcGdofStatus::Ok
}

/// `C(x) = 0.5 * log2(1 + x)` in bits; requires `x > -1`.
///
/// # Safety
///
/// `out` must be a valid pointer to a writable `double`.
#[no_mangle]
pub unsafe extern "C" fn irc_gdof_capacity(x: f64, out: *mut f64) -> IrcGdofStatus {
    match capacity(x) {
        Ok(v) => write_out(out, v),
        Err(e) => IrcGdofStatus::from(&e),
    }
}

/// `C+(x) = max(0, C(x))` in bits; requires `x > -1`.
///
/// # Safety
///
/// `out` must be a valid pointer to a writable `double`.
#[no_mangle]
pub unsafe extern "C" fn irc_gdof_capacity_plus(x: f64, out: *mut f64) -> IrcGdofStatus {
    match capacity_plus(x) {
        Ok(v) => write_out(out, v),
        Err(e) => IrcGdofStatus::from(&e),
    }
}

/// New channel from physical gains and the per-node power budget.
///
/// # Safety
///
/// `out` must be a valid pointer to a writable handle slot. The returned
/// handle must be released with `irc_gdof_channel_free`.
#[no_mangle]
pub unsafe extern "C" fn irc_gdof_channel_new(
    h_d: f64,
    h_c: f64,
    h_r: f64,
    h_sr: f64,
    power: f64,
    out: *mut *mut IrcGdofChannel,
) -> IrcGdofStatus {
    match LinearChannel::new(h_d, h_c, h_r, h_sr, power) {
        Ok(inner) => write_out(out, Box::into_raw(Box::new(IrcGdofChannel { inner }))),
        Err(e) => IrcGdofStatus::from(&e),
    }
}

/// New canonical channel (`h_d = 1`, `P = snr`) from strength exponents;
/// requires `snr > 1` and non-negative exponents.
///
/// # Safety
///
/// As `irc_gdof_channel_new`.
#[no_mangle]
pub unsafe extern "C" fn irc_gdof_channel_realize(
    alpha: f64,
    beta: f64,
    gamma: f64,
    snr: f64,
    out: *mut *mut IrcGdofChannel,
) -> IrcGdofStatus {
    let build = StrengthExponents::new(alpha, beta, gamma).and_then(|e| realize(e, snr));
    match build {
        Ok(inner) => write_out(out, Box::into_raw(Box::new(IrcGdofChannel { inner }))),
        Err(e) => IrcGdofStatus::from(&e),
    }
}

/// Strength exponents of a channel (normalizer `h_d^2 P` must exceed 1).
///
/// # Safety
///
/// `channel` must be a live handle; the three out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn irc_gdof_channel_exponents(
    channel: *const IrcGdofChannel,
    alpha: *mut f64,
    beta: *mut f64,
    gamma: *mut f64,
) -> IrcGdofStatus {
    if channel.is_null() || alpha.is_null() || beta.is_null() || gamma.is_null() {
        return IrcGdofStatus::NullPointer;
    }
    match recover_exponents(&(*channel).inner) {
        Ok(e) => {
            alpha.write(e.alpha());
            beta.write(e.beta());
            gamma.write(e.gamma());
            IrcGdofStatus::Ok
        }
        Err(e) => IrcGdofStatus::from(&e),
    }
}

/// Releases a channel handle. Null is ignored.
///
/// # Safety
///
/// `channel` must be null or a handle obtained from this library that has
/// not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn irc_gdof_channel_free(channel: *mut IrcGdofChannel) {
    if !channel.is_null() {
        drop(Box::from_raw(channel));
    }
}

/// Closed-form sum GDoF with per-argument attribution; requires
/// `gamma <= alpha`.
///
/// # Safety
///
/// `out` must be a valid pointer to a writable breakdown struct.
#[no_mangle]
pub unsafe extern "C" fn irc_gdof_closed_form(
    alpha: f64,
    beta: f64,
    gamma: f64,
    out: *mut IrcGdofBreakdown,
) -> IrcGdofStatus {
    let result = StrengthExponents::new(alpha, beta, gamma).and_then(gdof_irc);
    match result {
        Ok(b) => write_out(
            out,
            IrcGdofBreakdown {
                args: b.args,
                value: b.value,
                argmin_index: b.argmin_index as u32,
            },
        ),
        Err(e) => IrcGdofStatus::from(&e),
    }
}

/// Sum GDoF of the symmetric interference channel without relay (the
/// W-curve); requires `alpha >= 0`.
///
/// # Safety
///
/// `out` must be a valid pointer to a writable `double`.
#[no_mangle]
pub unsafe extern "C" fn irc_gdof_ic_baseline(alpha: f64, out: *mut f64) -> IrcGdofStatus {
    if !alpha.is_finite() || alpha < 0.0 {
        return IrcGdofStatus::InvalidInput;
    }
    write_out(out, gdof_ic(alpha))
}

/// All four finite-SNR sum-capacity bounds and their minimum.
///
/// # Safety
///
/// `channel` must be a live handle; `out` must be valid and writable.
#[no_mangle]
pub unsafe extern "C" fn irc_gdof_bounds(
    channel: *const IrcGdofChannel,
    out: *mut IrcGdofBoundReport,
) -> IrcGdofStatus {
    if channel.is_null() {
        return IrcGdofStatus::NullPointer;
    }
    let r = bound_report(&(*channel).inner);
    write_out(
        out,
        IrcGdofBoundReport {
            cutset_bc: r.cutset_bc,
            cutset_mac: r.cutset_mac,
            genie_1: r.genie_1,
            genie_2: r.genie_2,
            tightest: r.tightest,
            tightest_name: match r.tightest_name {
                BoundKind::CutsetBc => IrcGdofBound::CutsetBc,
                BoundKind::CutsetMac => IrcGdofBound::CutsetMac,
                BoundKind::Genie1 => IrcGdofBound::Genie1,
                BoundKind::Genie2 => IrcGdofBound::Genie2,
            },
        },
    )
}

/// Best achievable sum rate over the deterministic power-split search;
/// requires `k_max >= 1` and `resolution >= 2`.
///
/// # Safety
///
/// `channel` must be a live handle; `out` must be valid and writable.
#[no_mangle]
pub unsafe extern "C" fn irc_gdof_best_sum_rate(
    channel: *const IrcGdofChannel,
    k_max: u32,
    resolution: u32,
    out: *mut IrcGdofRateSummary,
) -> IrcGdofStatus {
    if channel.is_null() {
        return IrcGdofStatus::NullPointer;
    }
    match best_sum_rate(&(*channel).inner, k_max as usize, resolution as usize) {
        Ok(best) => write_out(out, summarize(&best.rates, best.variant)),
        Err(e) => IrcGdofStatus::from(&e),
    }
}

/// Achievable sum rate of the reference weak-interference allocation;
/// requires its regime.
///
/// # Safety
///
/// `channel` must be a live handle; `out` must be valid and writable.
#[no_mangle]
pub unsafe extern "C" fn irc_gdof_example_sum_rate(
    channel: *const IrcGdofChannel,
    out: *mut IrcGdofRateSummary,
) -> IrcGdofStatus {
    if channel.is_null() {
        return IrcGdofStatus::NullPointer;
    }
    let ch = &(*channel).inner;
    let result = example_allocation(ch).and_then(|alloc| weak_rates(ch, &alloc));
    match result {
        Ok(rates) => write_out(out, summarize(&rates, FdfVariant::Weak)),
        Err(e) => IrcGdofStatus::from(&e),
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn irc_gdof_status_message(status: IrcGdofStatus) -> *const c_char {
    let message: &'static str = match status {
        IrcGdofStatus::Ok => "ok\0",
        IrcGdofStatus::NullPointer => "null pointer argument\0",
        IrcGdofStatus::InvalidInput => "argument out of domain\0",
        IrcGdofStatus::RegimeNotCharacterized => "regime gamma>alpha not characterized\0",
        IrcGdofStatus::DegenerateChannel => "degenerate channel gain\0",
        IrcGdofStatus::InfeasibleAllocation => "infeasible allocation or regime\0",
    };
    message.as_ptr() as *const c_char
}

/// Library version as a static C string.
#[no_mangle]
pub extern "C" fn irc_gdof_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
