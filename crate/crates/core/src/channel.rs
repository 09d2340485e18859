//! Channel parameterization and the elementary capacity functions.
//!
//! The symmetric interference relay channel is described either by physical
//! link gains with a per-node power constraint ([`LinearChannel`]) or by the
//! relative link-strength exponents ([`StrengthExponents`]) obtained by
//! normalizing every log gain-power product by `log(h_d^2 P)`. The two views
//! convert into each other through [`realize`] and [`recover_exponents`].
//!
//! Rates are in bits per channel use throughout: the logarithm base is fixed
//! to 2, so `capacity(x) = 0.5 * log2(1 + x)`.

use crate::error::{Error, Result};

/// Relative link-strength exponents of the symmetric IRC.
///
/// With direct-link SNR `h_d^2 P` as the reference,
///
/// ```text
/// alpha = log(h_c^2 P)  / log(h_d^2 P)   (interference link)
/// beta  = log(h_r^2 P)  / log(h_d^2 P)   (relay-to-destination link)
/// gamma = log(h_sr^2 P) / log(h_d^2 P)   (source-to-relay link)
/// ```
///
/// All three exponents are finite and non-negative. The closed-form GDoF
/// additionally needs `gamma <= alpha`; that gate lives at the operations
/// which require it, not here.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrengthExponents {
    alpha: f64,
    beta: f64,
    gamma: f64,
}

impl StrengthExponents {
    /// Validates that all three exponents are finite and non-negative.
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        for (name, value) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::ExponentDomain { name, value });
            }
        }
        Ok(Self { alpha, beta, gamma })
    }

    /// Interference-link exponent.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Relay-to-destination exponent.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Source-to-relay exponent.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

/// Physical channel gains and the per-node power constraint.
///
/// `h_d` is the direct gain, `h_c` the cross (interference) gain, `h_r` the
/// relay-to-destination gain, and `h_sr` the source-to-relay gain. All gains
/// are real and non-negative; the same power budget `P` applies to both
/// sources and the relay, and receiver noise has unit variance.
///
/// Every formula downstream depends on the channel only through the products
/// `h^2 P` and gain ratios, which stay representable for snr up to 1e30.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearChannel {
    h_d: f64,
    h_c: f64,
    h_r: f64,
    h_sr: f64,
    power: f64,
}

impl LinearChannel {
    /// Validates gains (non-negative, finite) and power (strictly positive).
    pub fn new(h_d: f64, h_c: f64, h_r: f64, h_sr: f64, power: f64) -> Result<Self> {
        for (name, value) in [("h_d", h_d), ("h_c", h_c), ("h_r", h_r), ("h_sr", h_sr)] {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::ChannelDomain { name, value });
            }
        }
        if !power.is_finite() || power <= 0.0 {
            return Err(Error::ChannelDomain {
                name: "power",
                value: power,
            });
        }
        Ok(Self {
            h_d,
            h_c,
            h_r,
            h_sr,
            power,
        })
    }

    pub fn h_d(&self) -> f64 {
        self.h_d
    }

    pub fn h_c(&self) -> f64 {
        self.h_c
    }

    pub fn h_r(&self) -> f64 {
        self.h_r
    }

    pub fn h_sr(&self) -> f64 {
        self.h_sr
    }

    pub fn power(&self) -> f64 {
        self.power
    }

    /// Direct-link receive SNR `h_d^2 P`.
    pub fn snr_d(&self) -> f64 {
        self.h_d * self.h_d * self.power
    }

    /// Interference-link receive SNR `h_c^2 P`.
    pub fn snr_c(&self) -> f64 {
        self.h_c * self.h_c * self.power
    }

    /// Relay-to-destination receive SNR `h_r^2 P`.
    pub fn snr_r(&self) -> f64 {
        self.h_r * self.h_r * self.power
    }

    /// Source-to-relay receive SNR `h_sr^2 P`.
    pub fn snr_sr(&self) -> f64 {
        self.h_sr * self.h_sr * self.power
    }
}

/// Gaussian point-to-point capacity `C(x) = 0.5 * log2(1 + x)` in bits per
/// channel use.
///
/// Monotone non-decreasing on its domain `x > -1`, with `capacity(0) = 0`.
pub fn capacity(x: f64) -> Result<f64> {
    if x <= -1.0 || x.is_nan() {
        return Err(Error::CapacityDomain { x });
    }
    Ok(cap(x))
}

/// Non-negative part `C^+(x) = max(0, C(x))`.
pub fn capacity_plus(x: f64) -> Result<f64> {
    capacity(x).map(|c| c.max(0.0))
}

/// `capacity` for arguments structurally known to lie above -1.
pub(crate) fn cap(x: f64) -> f64 {
    debug_assert!(x > -1.0, "capacity argument {x} outside domain");
    0.5 * (1.0 + x).log2()
}

/// `capacity_plus` for arguments whose exact value is known to lie above -1.
///
/// Returns 0 for `x <= 0` without touching the log, so arguments whose
/// floating-point rounding lands exactly on -1 (tiny gain ratios minus one)
/// stay finite.
pub(crate) fn cap_pos(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        cap(x)
    }
}

/// Canonical channel with the given strength exponents at the given snr.
///
/// Fixes `h_d = 1` and `P = snr`, so that
/// `h_d^2 P = snr`, `h_c^2 P = snr^alpha`, `h_r^2 P = snr^beta`, and
/// `h_sr^2 P = snr^gamma`. Any other gain scaling with the same products is
/// equivalent for every formula in this crate.
///
/// # Errors
///
/// `snr` must exceed 1 so the normalizer `log(snr)` is positive.
pub fn realize(e: StrengthExponents, snr: f64) -> Result<LinearChannel> {
    if !snr.is_finite() || snr <= 1.0 {
        return Err(Error::SnrDomain { snr });
    }
    let gain = |exponent: f64| snr.powf((exponent - 1.0) / 2.0);
    LinearChannel::new(1.0, gain(e.alpha), gain(e.beta), gain(e.gamma), snr)
}

/// Strength exponents of a channel, normalized by `log(h_d^2 P)`.
///
/// Inverse of [`realize`] up to floating-point rounding.
///
/// # Errors
///
/// The normalizer `h_d^2 P` must exceed 1 and every gain-power product must
/// be strictly positive; products below 1 map to negative exponents, which
/// are outside the parameterization and also rejected.
pub fn recover_exponents(ch: &LinearChannel) -> Result<StrengthExponents> {
    let snr_d = ch.snr_d();
    if snr_d <= 1.0 {
        return Err(Error::DegenerateNormalizer { snr_d });
    }
    let norm = snr_d.ln();
    let exponent = |name: &'static str, product: f64| -> Result<f64> {
        if product <= 0.0 {
            return Err(Error::ZeroStrength { name });
        }
        Ok(product.ln() / norm)
    };
    StrengthExponents::new(
        exponent("h_c^2*P", ch.snr_c())?,
        exponent("h_r^2*P", ch.snr_r())?,
        exponent("h_sr^2*P", ch.snr_sr())?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exps(a: f64, b: f64, g: f64) -> StrengthExponents {
        StrengthExponents::new(a, b, g).unwrap()
    }

    #[test]
    fn capacity_reference_points() {
        assert_eq!(capacity(0.0).unwrap(), 0.0);
        assert!((capacity(3.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((capacity(1.0).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn capacity_domain_gate() {
        assert!(matches!(capacity(-1.0), Err(Error::CapacityDomain { .. })));
        assert!(matches!(capacity(-2.0), Err(Error::CapacityDomain { .. })));
        assert!(matches!(
            capacity(f64::NAN),
            Err(Error::CapacityDomain { .. })
        ));
        assert!(capacity(-0.999).is_ok());
    }

    #[test]
    fn capacity_monotone_and_concave() {
        // Sample on a grid spanning the domain; strictly increasing values
        // and non-increasing secant slopes.
        let grid: Vec<f64> = (0..400).map(|i| -0.95 + 0.3 * i as f64).collect();
        let values: Vec<f64> = grid.iter().map(|&x| capacity(x).unwrap()).collect();
        let mut prev_slope = f64::INFINITY;
        for i in 1..grid.len() {
            assert!(values[i] > values[i - 1], "not increasing at {}", grid[i]);
            let slope = (values[i] - values[i - 1]) / (grid[i] - grid[i - 1]);
            assert!(slope <= prev_slope + 1e-12, "not concave at {}", grid[i]);
            prev_slope = slope;
        }
    }

    #[test]
    fn capacity_plus_clamps_negative_part() {
        assert_eq!(capacity_plus(-0.5).unwrap(), 0.0);
        assert_eq!(capacity_plus(0.0).unwrap(), 0.0);
        assert!((capacity_plus(3.0).unwrap() - 1.0).abs() < 1e-15);
        for i in 0..100 {
            let x = 0.1 * i as f64;
            assert_eq!(capacity_plus(x).unwrap(), capacity(x).unwrap());
        }
        for i in 1..100 {
            let x = -0.01 * i as f64;
            assert_eq!(capacity_plus(x).unwrap(), 0.0);
        }
    }

    #[test]
    fn realize_products_follow_power_laws() {
        let ch = realize(exps(1.0, 1.0, 1.0), 100.0).unwrap();
        for snr in [ch.snr_d(), ch.snr_c(), ch.snr_r(), ch.snr_sr()] {
            assert!((snr - 100.0).abs() < 1e-12 * 100.0);
        }

        let ch = realize(exps(0.5, 2.0, 0.5), 100.0).unwrap();
        assert!((ch.snr_c() - 10.0).abs() < 1e-12 * 10.0);
        assert!((ch.snr_r() - 10_000.0).abs() < 1e-12 * 10_000.0);
        assert!((ch.snr_sr() - 10.0).abs() < 1e-12 * 10.0);
        assert_eq!(ch.h_d(), 1.0);
        assert_eq!(ch.power(), 100.0);
    }

    #[test]
    fn realize_rejects_small_snr() {
        let e = exps(1.0, 1.0, 1.0);
        assert!(matches!(realize(e, 1.0), Err(Error::SnrDomain { .. })));
        assert!(matches!(realize(e, 0.5), Err(Error::SnrDomain { .. })));
    }

    #[test]
    fn recover_reference_points() {
        let ch = LinearChannel::new(1.0, 1.0, 1.0, 1.0, 100.0).unwrap();
        let e = recover_exponents(&ch).unwrap();
        assert!((e.alpha() - 1.0).abs() < 1e-15);
        assert!((e.beta() - 1.0).abs() < 1e-15);
        assert!((e.gamma() - 1.0).abs() < 1e-15);

        // h_c^2 = 0.1 at P = 100: alpha = log(10)/log(100) = 0.5.
        let ch = LinearChannel::new(1.0, 0.1f64.sqrt(), 1.0, 1.0, 100.0).unwrap();
        assert!((recover_exponents(&ch).unwrap().alpha() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn recover_rejects_degenerate_inputs() {
        let ch = LinearChannel::new(0.1, 1.0, 1.0, 1.0, 10.0).unwrap();
        assert!(matches!(
            recover_exponents(&ch),
            Err(Error::DegenerateNormalizer { .. })
        ));
        let ch = LinearChannel::new(1.0, 0.0, 1.0, 1.0, 10.0).unwrap();
        assert!(matches!(
            recover_exponents(&ch),
            Err(Error::ZeroStrength { .. })
        ));
    }

    #[test]
    fn round_trip_at_reference_snr() {
        let e = exps(0.7, 1.1, 0.2);
        let back = recover_exponents(&realize(e, 1e10).unwrap()).unwrap();
        assert!((back.alpha() - 0.7).abs() < 1e-9);
        assert!((back.beta() - 1.1).abs() < 1e-9);
        assert!((back.gamma() - 0.2).abs() < 1e-9);

        let back = recover_exponents(&realize(e, 1e6).unwrap()).unwrap();
        assert!((back.alpha() - 0.7).abs() < 1e-12);
        assert!((back.beta() - 1.1).abs() < 1e-12);
        assert!((back.gamma() - 0.2).abs() < 1e-12);
    }

    #[test]
    fn round_trip_over_random_exponents_and_snr() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0001);
        for _ in 0..500 {
            let e = exps(
                rng.gen_range(0.0..3.0),
                rng.gen_range(0.0..3.0),
                rng.gen_range(0.0..3.0),
            );
            let snr = 10f64.powf(rng.gen_range(3.0..30.0));
            let back = recover_exponents(&realize(e, snr).unwrap()).unwrap();
            assert!((back.alpha() - e.alpha()).abs() < 1e-9);
            assert!((back.beta() - e.beta()).abs() < 1e-9);
            assert!((back.gamma() - e.gamma()).abs() < 1e-9);
        }
    }

    #[test]
    fn exponents_must_be_finite_and_non_negative() {
        assert!(StrengthExponents::new(-0.1, 1.0, 0.0).is_err());
        assert!(StrengthExponents::new(0.1, f64::INFINITY, 0.0).is_err());
        assert!(StrengthExponents::new(0.1, 1.0, f64::NAN).is_err());
        assert!(StrengthExponents::new(0.0, 0.0, 0.0).is_ok());
    }

    #[test]
    fn channel_rejects_bad_gains_and_power() {
        assert!(LinearChannel::new(-1.0, 1.0, 1.0, 1.0, 1.0).is_err());
        assert!(LinearChannel::new(1.0, 1.0, 1.0, 1.0, 0.0).is_err());
        assert!(LinearChannel::new(1.0, 1.0, 1.0, f64::NAN, 1.0).is_err());
        assert!(LinearChannel::new(0.0, 0.0, 0.0, 0.0, 1.0).is_ok());
    }
}
