//! Functional decode-and-forward achievable sum rates.
//!
//! Each user splits its message into a private part (decoded only by its own
//! receiver), a common part (decoded by both receivers), and a cooperative
//! public (CP) part. The CP part is lattice-coded in `K` levels whose
//! modulo-sum the relay decodes and forwards; receivers decode the levels
//! successively, cancelling the interfering CP level after each step.
//!
//! [`weak_rates`] evaluates the weak-interference variant (with a private
//! part), [`strong_rates`] the strong-interference variant (without one, and
//! with the interfering CP signal decoded first). [`example_allocation`]
//! builds the geometric power ladder that aligns each CP level's residual
//! interference with the next level, and [`best_sum_rate`] searches a
//! deterministic grid of power splits on top of it.

use crate::channel::{cap, cap_pos, LinearChannel};
use crate::error::{Error, Result};

/// Relative tolerance for the power ledger and for the CP ladder identity.
const POWER_TOLERANCE: f64 = 1e-9;

/// Transmit power split for one user plus the relay.
///
/// The sources spend `p_private + p_common + sum(p_cp) = P` (exactly, within
/// `1e-9 * P`), and the relay splits its budget into two superposed codewords
/// with `p_relay_1 + p_relay_2 <= P`. Both users apply the same split by
/// symmetry. `p_cp` holds the per-level CP powers, strongest level first;
/// there is always at least one level (possibly with zero power).
#[derive(Debug, Clone, PartialEq)]
pub struct PowerAllocation {
    pub p_private: f64,
    pub p_common: f64,
    pub p_cp: Vec<f64>,
    pub p_relay_1: f64,
    pub p_relay_2: f64,
}

impl PowerAllocation {
    /// Number of CP levels `K`.
    pub fn levels(&self) -> usize {
        self.p_cp.len()
    }

    /// Checks the power ledger against a budget `power`.
    pub fn validate(&self, power: f64) -> Result<()> {
        if !power.is_finite() || power <= 0.0 {
            return Err(Error::ChannelDomain {
                name: "power",
                value: power,
            });
        }
        if self.p_cp.is_empty() {
            return Err(Error::InfeasibleAllocation {
                reason: "at least one cooperative-public level is required".into(),
            });
        }
        let mut components = vec![
            ("p_private", self.p_private),
            ("p_common", self.p_common),
            ("p_relay_1", self.p_relay_1),
            ("p_relay_2", self.p_relay_2),
        ];
        for (k, &p) in self.p_cp.iter().enumerate() {
            let _ = k;
            components.push(("p_cp", p));
        }
        for (name, value) in components {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::InfeasibleAllocation {
                    reason: format!("{name} = {value} must be finite and non-negative"),
                });
            }
        }
        let source_total = self.p_private + self.p_common + self.p_cp.iter().sum::<f64>();
        if (source_total - power).abs() > POWER_TOLERANCE * power {
            return Err(Error::InfeasibleAllocation {
                reason: format!("source powers sum to {source_total}, budget is {power}"),
            });
        }
        if self.p_relay_1 + self.p_relay_2 > power * (1.0 + POWER_TOLERANCE) {
            return Err(Error::InfeasibleAllocation {
                reason: format!(
                    "relay powers sum to {}, budget is {power}",
                    self.p_relay_1 + self.p_relay_2
                ),
            });
        }
        Ok(())
    }
}

/// Which constraint pinned the common rate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommonBinding {
    /// Per-user constraint on the weaker of the two observations.
    Individual,
    /// Half the joint-decoding sum constraint.
    Sum,
}

/// Which constraint pinned a CP level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpLevelBinding {
    /// The relay's modulo-sum decoding step.
    Relay,
    /// The destination's successive decoding step.
    Destination,
}

/// Which constraint pinned the CP total.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpTotalBinding {
    /// Sum of the per-level rates.
    LevelSum,
    /// The relay's two-codeword forwarding constraint.
    RelayForward,
}

/// Tight-constraint tags for a [`RateBreakdown`]; ties pick the first listed
/// variant of each enum. The private rate has a single constraint and needs
/// no tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BindingConstraints {
    pub common: CommonBinding,
    pub cp_levels: Vec<CpLevelBinding>,
    pub cp_total: CpTotalBinding,
}

/// Achievable per-message rates and the resulting sum rate, in bits per
/// channel use.
#[derive(Debug, Clone, PartialEq)]
pub struct RateBreakdown {
    pub r_private: f64,
    pub r_common: f64,
    pub r_cp_levels: Vec<f64>,
    /// `min(sum of levels, forwarding cap)`.
    pub r_cp_total: f64,
    /// `2 * (r_private + r_common + r_cp_total)`; the strong variant carries
    /// `r_private = 0`.
    pub sum_rate: f64,
    pub binding_constraints: BindingConstraints,
}

/// Which rate variant produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdfVariant {
    Weak,
    Strong,
}

/// Achievable sum rate of the weak-interference variant for one allocation.
///
/// The private part is decoded last under the residual interference
/// `h_c^2 P_p`; the common pair is decoded jointly; CP level `k` must be
/// decodable both at the relay (modulo-sum, with the `-1/2` lattice penalty
/// and both users' signals as noise) and at the destination (with all
/// not-yet-cancelled CP signals, both common and private parts, and the
/// relay's second codeword as noise). The CP total is further capped by the
/// two-codeword relay forwarding constraint.
///
/// # Errors
///
/// Fails when the allocation violates the power ledger for `ch.power()`.
pub fn weak_rates(ch: &LinearChannel, alloc: &PowerAllocation) -> Result<RateBreakdown> {
    alloc.validate(ch.power())?;
    let hd2 = ch.h_d() * ch.h_d();
    let hc2 = ch.h_c() * ch.h_c();
    let hr2 = ch.h_r() * ch.h_r();
    let hsr2 = ch.h_sr() * ch.h_sr();
    let (p_p, p_c) = (alloc.p_private, alloc.p_common);

    let r_private = cap(hd2 * p_p / (1.0 + hc2 * p_p));

    let common_noise = 1.0 + (hd2 + hc2) * p_p;
    let individual = cap(hd2.min(hc2) * p_c / common_noise);
    let joint = 0.5 * cap((hd2 + hc2) * p_c / common_noise);
    let (r_common, common_binding) = if individual <= joint {
        (individual, CommonBinding::Individual)
    } else {
        (joint, CommonBinding::Sum)
    };

    let k_levels = alloc.levels();
    let mut r_cp_levels = Vec::with_capacity(k_levels);
    let mut cp_bindings = Vec::with_capacity(k_levels);
    for k in 0..k_levels {
        let level = alloc.p_cp[k];
        let tail: f64 = alloc.p_cp[k + 1..].iter().sum();
        let relay = cap_pos(
            hsr2 * level / (1.0 + 2.0 * hsr2 * tail + 2.0 * hsr2 * p_c + 2.0 * hsr2 * p_p) - 0.5,
        );
        let dest_noise = 1.0
            + hd2 * tail
            + hc2 * (level + tail)
            + (hd2 + hc2) * (p_c + p_p)
            + hr2 * alloc.p_relay_2;
        let destination = cap(hd2 * level / dest_noise);
        if relay <= destination {
            r_cp_levels.push(relay);
            cp_bindings.push(CpLevelBinding::Relay);
        } else {
            r_cp_levels.push(destination);
            cp_bindings.push(CpLevelBinding::Destination);
        }
    }

    let level_sum: f64 = r_cp_levels.iter().sum();
    let forward =
        cap(hr2 * alloc.p_relay_1 / (1.0 + hr2 * alloc.p_relay_2 + (hd2 + hc2) * ch.power()))
            + cap(hr2 * alloc.p_relay_2 / (1.0 + (hd2 + hc2) * (p_c + p_p)));
    let (r_cp_total, cp_total_binding) = if level_sum <= forward {
        (level_sum, CpTotalBinding::LevelSum)
    } else {
        (forward, CpTotalBinding::RelayForward)
    };

    Ok(RateBreakdown {
        r_private,
        r_common,
        r_cp_levels,
        r_cp_total,
        sum_rate: 2.0 * (r_private + r_common + r_cp_total),
        binding_constraints: BindingConstraints {
            common: common_binding,
            cp_levels: cp_bindings,
            cp_total: cp_total_binding,
        },
    })
}

/// Achievable sum rate of the strong-interference variant.
///
/// No private part is sent; the receivers decode the *interfering* CP signal
/// first (numerator gain `h_c^2`, desired CP levels in the noise with
/// `h_d^2`), then recover their own levels through the forwarded modulo-sums.
///
/// # Errors
///
/// As [`weak_rates`], plus `p_private > 0` is rejected.
pub fn strong_rates(ch: &LinearChannel, alloc: &PowerAllocation) -> Result<RateBreakdown> {
    if alloc.p_private > 0.0 {
        return Err(Error::InfeasibleAllocation {
            reason: "the strong-interference variant carries no private message".into(),
        });
    }
    alloc.validate(ch.power())?;
    let hd2 = ch.h_d() * ch.h_d();
    let hc2 = ch.h_c() * ch.h_c();
    let hr2 = ch.h_r() * ch.h_r();
    let hsr2 = ch.h_sr() * ch.h_sr();
    let p_c = alloc.p_common;

    let individual = cap(hd2.min(hc2) * p_c);
    let joint = 0.5 * cap((hd2 + hc2) * p_c);
    let (r_common, common_binding) = if individual <= joint {
        (individual, CommonBinding::Individual)
    } else {
        (joint, CommonBinding::Sum)
    };

    let k_levels = alloc.levels();
    let mut r_cp_levels = Vec::with_capacity(k_levels);
    let mut cp_bindings = Vec::with_capacity(k_levels);
    for k in 0..k_levels {
        let level = alloc.p_cp[k];
        let tail: f64 = alloc.p_cp[k + 1..].iter().sum();
        let relay = cap_pos(hsr2 * level / (1.0 + 2.0 * hsr2 * tail + 2.0 * hsr2 * p_c) - 0.5);
        let dest_noise =
            1.0 + hc2 * tail + hd2 * (level + tail) + (hd2 + hc2) * p_c + hr2 * alloc.p_relay_2;
        let destination = cap(hc2 * level / dest_noise);
        if relay <= destination {
            r_cp_levels.push(relay);
            cp_bindings.push(CpLevelBinding::Relay);
        } else {
            r_cp_levels.push(destination);
            cp_bindings.push(CpLevelBinding::Destination);
        }
    }

    let level_sum: f64 = r_cp_levels.iter().sum();
    let forward =
        cap(hr2 * alloc.p_relay_1 / (1.0 + hr2 * alloc.p_relay_2 + (hd2 + hc2) * ch.power()))
            + cap(hr2 * alloc.p_relay_2 / (1.0 + (hd2 + hc2) * p_c));
    let (r_cp_total, cp_total_binding) = if level_sum <= forward {
        (level_sum, CpTotalBinding::LevelSum)
    } else {
        (forward, CpTotalBinding::RelayForward)
    };

    Ok(RateBreakdown {
        r_private: 0.0,
        r_common,
        r_cp_levels,
        r_cp_total,
        sum_rate: 2.0 * (r_common + r_cp_total),
        binding_constraints: BindingConstraints {
            common: common_binding,
            cp_levels: cp_bindings,
            cp_total: cp_total_binding,
        },
    })
}

/// Ceiling with a tolerance for ratios that land on an integer up to
/// floating-point noise.
fn ceil_with_tolerance(x: f64, tol: f64) -> usize {
    let floor = x.floor();
    let k = if x - floor <= tol { floor } else { floor + 1.0 };
    k.max(0.0) as usize
}

/// The reference power allocation for the weak-interference regime.
///
/// Sets the private power at the interference noise floor
/// (`P_p = 1/h_c^2`), the common power so its receive level through the
/// direct link matches the relay's forwarded signal
/// (`P_c = h_d^2 P / h_r^2 - P_p`), and a geometric CP ladder
///
/// ```text
/// K        = ceil( log(h_r^2/h_d^2) / log(h_d^2/h_c^2) ),  at least 1
/// P_cp^(k) = P q^(k-1) (1 - q),   q = h_c^2/h_d^2,  k < K
/// P_cp^(K) = P q^(K-1) - P_c - P_p
/// ```
///
/// so that `h_d^2 P_cp^(k+1) = h_c^2 P_cp^(k)`: while level `k` is decoded,
/// the next desired level and the current interfering level arrive at equal
/// power. The relay spends its full budget on the first codeword. The
/// source powers telescope to exactly `P`.
///
/// # Errors
///
/// Requires the recovered exponents to satisfy
/// `beta - 1 < gamma <= alpha <= 1 <= beta` and `2 alpha > 1 + gamma`, plus
/// `h_d^2 > h_c^2` strictly (the ladder ratio). Negative component powers
/// report infeasibility instead of being clamped.
pub fn example_allocation(ch: &LinearChannel) -> Result<PowerAllocation> {
    let e = crate::channel::recover_exponents(ch)?;
    let (alpha, beta, gamma) = (e.alpha(), e.beta(), e.gamma());
    if gamma > alpha {
        return Err(Error::ExampleRegime {
            reason: "needs gamma <= alpha",
        });
    }
    if alpha > 1.0 {
        return Err(Error::ExampleRegime {
            reason: "needs alpha <= 1",
        });
    }
    if beta < 1.0 {
        return Err(Error::ExampleRegime {
            reason: "needs beta >= 1",
        });
    }
    if beta - 1.0 >= gamma {
        return Err(Error::ExampleRegime {
            reason: "needs beta - 1 < gamma",
        });
    }
    if 2.0 * alpha <= 1.0 + gamma {
        return Err(Error::ExampleRegime {
            reason: "needs 2*alpha > 1 + gamma",
        });
    }

    let hd2 = ch.h_d() * ch.h_d();
    let hc2 = ch.h_c() * ch.h_c();
    let hr2 = ch.h_r() * ch.h_r();
    let power = ch.power();
    if hd2 <= hc2 {
        return Err(Error::ExampleRegime {
            reason: "needs h_d^2 > h_c^2 for the ladder ratio",
        });
    }

    let p_private = 1.0 / hc2;
    let p_common = hd2 * power / hr2 - p_private;
    if p_common < 0.0 {
        return Err(Error::InfeasibleAllocation {
            reason: format!("common power {p_common} is negative"),
        });
    }

    let ratio = (hr2 / hd2).ln() / (hd2 / hc2).ln();
    let k = ceil_with_tolerance(ratio, POWER_TOLERANCE).max(1);
    let q = hc2 / hd2;
    let mut p_cp = Vec::with_capacity(k);
    for i in 0..k - 1 {
        p_cp.push(power * q.powi(i as i32) * (1.0 - q));
    }
    let top = power * q.powi(k as i32 - 1) - p_common - p_private;
    if top < 0.0 {
        return Err(Error::InfeasibleAllocation {
            reason: format!("cooperative-public level {k} power {top} is negative"),
        });
    }
    p_cp.push(top);

    Ok(PowerAllocation {
        p_private,
        p_common,
        p_cp,
        p_relay_1: power,
        p_relay_2: 0.0,
    })
}

/// Checks the CP ladder identity `h_d^2 P_cp^(k+1) = h_c^2 P_cp^(k)` for
/// `k = 1..K-2` (1-based), i.e. across all consecutive pairs below the top
/// level, which breaks the ladder by the `- P_c - P_p` correction.
/// Vacuously true for `K <= 2`.
pub fn cp_ladder_check(ch: &LinearChannel, alloc: &PowerAllocation) -> bool {
    let hd2 = ch.h_d() * ch.h_d();
    let hc2 = ch.h_c() * ch.h_c();
    let k = alloc.levels();
    for i in 0..k.saturating_sub(2) {
        let lhs = hd2 * alloc.p_cp[i + 1];
        let rhs = hc2 * alloc.p_cp[i];
        if (lhs - rhs).abs() > POWER_TOLERANCE * lhs.abs().max(rhs.abs()) {
            return false;
        }
    }
    true
}

/// Confirms that the forwarding constraint's two terms are at least as
/// binding as the relay-block decoding constraints
/// `C(h_r^2 P_r1 / (1 + h_r^2 P_r2))` and `C(h_r^2 P_r2)`, which the rate
/// evaluation therefore ignores.
pub fn relay_constraint_dominance(ch: &LinearChannel, alloc: &PowerAllocation) -> bool {
    let hd2 = ch.h_d() * ch.h_d();
    let hc2 = ch.h_c() * ch.h_c();
    let hr2 = ch.h_r() * ch.h_r();
    let term_1 =
        cap(hr2 * alloc.p_relay_1 / (1.0 + hr2 * alloc.p_relay_2 + (hd2 + hc2) * ch.power()));
    let term_2 =
        cap(hr2 * alloc.p_relay_2 / (1.0 + (hd2 + hc2) * (alloc.p_common + alloc.p_private)));
    let relay_block_1 = cap(hr2 * alloc.p_relay_1 / (1.0 + hr2 * alloc.p_relay_2));
    let relay_block_2 = cap(hr2 * alloc.p_relay_2);
    term_1 <= relay_block_1 && term_2 <= relay_block_2
}

/// Best allocation found by the deterministic search.
#[derive(Debug, Clone, PartialEq)]
pub struct BestRate {
    pub rates: RateBreakdown,
    pub allocation: PowerAllocation,
    pub variant: FdfVariant,
}

/// Work cap for the grid search.
const MAX_GRID_POINTS: u64 = 50_000_000;

/// Relay budget splits `(p_relay_1, p_relay_2)` as fractions of `P`.
const RELAY_SPLITS: [(f64, f64); 6] = [
    (1.0, 0.0),
    (0.75, 0.25),
    (0.5, 0.5),
    (0.25, 0.75),
    (0.0, 1.0),
    (0.0, 0.0),
];

/// Maximum achievable sum rate over both variants, `K` up to `k_max`, and a
/// deterministic grid of power splits.
///
/// Per source component the grid offers `resolution` geometric fractions of
/// the budget spanning `[1/max(P, 4), 1]` plus zero; every tuple with its
/// largest fraction at 1 is rescaled to spend exactly `P`. Relay budget
/// splits come from a fixed quarter grid. The reference allocation of
/// [`example_allocation`] is evaluated first whenever its regime applies, so
/// the result never falls below it. Candidates are visited in a fixed order
/// (weak before strong, `K` ascending, grid index ascending) and replace the
/// incumbent only on a strictly larger sum rate, which makes the search
/// deterministic and independent of evaluation order.
///
/// # Errors
///
/// `k_max >= 1` and `resolution >= 2` are required, and the implied grid
/// must stay below an internal work cap.
pub fn best_sum_rate(ch: &LinearChannel, k_max: usize, resolution: usize) -> Result<BestRate> {
    if k_max < 1 {
        return Err(Error::Parameter {
            reason: "k_max must be at least 1",
        });
    }
    if resolution < 2 {
        return Err(Error::Parameter {
            reason: "resolution must be at least 2",
        });
    }
    let n_values = resolution as u64 + 1;
    let mut work: u64 = 0;
    for k in 1..=k_max as u32 {
        work = work.saturating_add(n_values.saturating_pow(k + 2));
    }
    if work.saturating_mul(RELAY_SPLITS.len() as u64) > MAX_GRID_POINTS {
        return Err(Error::Parameter {
            reason: "k_max/resolution imply too large a search grid",
        });
    }

    let power = ch.power();
    // Geometric ladder from the full budget down to roughly the noise floor;
    // index 0 is exactly 1 so the canonical-tuple filter below can key on it.
    let span = power.max(4.0);
    let mut candidates: Vec<f64> = (0..resolution)
        .map(|j| span.powf(-(j as f64) / (resolution as f64 - 1.0)))
        .collect();
    candidates.push(0.0);

    let mut best: Option<BestRate> = None;
    let mut consider = |rates: RateBreakdown, alloc: PowerAllocation, variant: FdfVariant| {
        let better = match &best {
            None => true,
            Some(b) => rates.sum_rate > b.rates.sum_rate,
        };
        if better {
            best = Some(BestRate {
                rates,
                allocation: alloc,
                variant,
            });
        }
    };

    if let Ok(reference) = example_allocation(ch) {
        if let Ok(rates) = weak_rates(ch, &reference) {
            consider(rates, reference, FdfVariant::Weak);
        }
    }

    for variant in [FdfVariant::Weak, FdfVariant::Strong] {
        for k in 1..=k_max {
            // Source components: private (weak only), common, K CP levels.
            let slots = match variant {
                FdfVariant::Weak => k + 2,
                FdfVariant::Strong => k + 1,
            };
            let mut digits = vec![0usize; slots];
            loop {
                let values: Vec<f64> = digits.iter().map(|&d| candidates[d]).collect();
                // Canonical representative under rescaling: the largest
                // fraction must sit at 1, which also excludes all-zero.
                let is_canonical = values.iter().fold(f64::NEG_INFINITY, |m, &v| m.max(v)) == 1.0;
                if is_canonical {
                    let sum: f64 = values.iter().sum();
                    let scale = power / sum;
                    let (p_private, rest) = match variant {
                        FdfVariant::Weak => (values[0] * scale, &values[1..]),
                        FdfVariant::Strong => (0.0, &values[..]),
                    };
                    let p_common = rest[0] * scale;
                    let p_cp: Vec<f64> = rest[1..].iter().map(|&v| v * scale).collect();
                    for (f_1, f_2) in RELAY_SPLITS {
                        let alloc = PowerAllocation {
                            p_private,
                            p_common,
                            p_cp: p_cp.clone(),
                            p_relay_1: f_1 * power,
                            p_relay_2: f_2 * power,
                        };
                        let rates = match variant {
                            FdfVariant::Weak => weak_rates(ch, &alloc)?,
                            FdfVariant::Strong => strong_rates(ch, &alloc)?,
                        };
                        consider(rates, alloc, variant);
                    }
                }
                // Advance the mixed-radix counter.
                let mut pos = 0;
                loop {
                    if pos == slots {
                        break;
                    }
                    digits[pos] += 1;
                    if digits[pos] < candidates.len() {
                        break;
                    }
                    digits[pos] = 0;
                    pos += 1;
                }
                if pos == slots {
                    break;
                }
            }
        }
    }

    Ok(best.expect("grid always contains at least one canonical tuple"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::{realize, StrengthExponents};

    fn channel(h_d: f64, h_c: f64, h_r: f64, h_sr: f64, power: f64) -> LinearChannel {
        LinearChannel::new(h_d, h_c, h_r, h_sr, power).unwrap()
    }

    fn exps(a: f64, b: f64, g: f64) -> StrengthExponents {
        StrengthExponents::new(a, b, g).unwrap()
    }

    fn all_common(power: f64) -> PowerAllocation {
        PowerAllocation {
            p_private: 0.0,
            p_common: power,
            p_cp: vec![0.0],
            p_relay_1: 0.0,
            p_relay_2: 0.0,
        }
    }

    #[test]
    fn validate_enforces_the_ledger() {
        let power = 1.0;
        assert!(all_common(power).validate(power).is_ok());

        let mut alloc = all_common(power);
        alloc.p_common = 0.9;
        assert!(matches!(
            alloc.validate(power),
            Err(Error::InfeasibleAllocation { .. })
        ));

        let mut alloc = all_common(power);
        alloc.p_relay_1 = 0.8;
        alloc.p_relay_2 = 0.3;
        assert!(alloc.validate(power).is_err());

        let mut alloc = all_common(power);
        alloc.p_cp.clear();
        assert!(alloc.validate(power).is_err());

        let mut alloc = all_common(power);
        alloc.p_private = -0.1;
        alloc.p_common = 1.1;
        assert!(alloc.validate(power).is_err());
    }

    #[test]
    fn weak_all_common_reference_value() {
        // Matched unit gains, all power on the common part: the joint
        // constraint binds and the sum rate is C(2) = 0.5*log2(3).
        let ch = channel(1.0, 1.0, 1.0, 1.0, 1.0);
        let rates = weak_rates(&ch, &all_common(1.0)).unwrap();
        assert!((rates.sum_rate - 0.5 * 3.0f64.log2()).abs() < 1e-12);
        assert_eq!(rates.binding_constraints.common, CommonBinding::Sum);
        assert_eq!(rates.r_private, 0.0);
        // The idle CP level clamps to zero through the lattice penalty.
        assert_eq!(rates.r_cp_levels, vec![0.0]);
        assert_eq!(rates.r_cp_total, 0.0);
    }

    #[test]
    fn weak_deaf_relay_kills_cp() {
        let ch = channel(1.0, 0.5, 1.0, 0.0, 2.0);
        let alloc = PowerAllocation {
            p_private: 0.5,
            p_common: 0.5,
            p_cp: vec![1.0],
            p_relay_1: 1.0,
            p_relay_2: 0.0,
        };
        let rates = weak_rates(&ch, &alloc).unwrap();
        assert_eq!(rates.r_cp_levels[0], 0.0);
        assert_eq!(
            rates.binding_constraints.cp_levels[0],
            CpLevelBinding::Relay
        );
    }

    #[test]
    fn weak_reference_allocation_reaches_the_gdof() {
        let ch = realize(exps(0.7, 1.1, 0.2), 1e30).unwrap();
        let alloc = example_allocation(&ch).unwrap();
        let rates = weak_rates(&ch, &alloc).unwrap();
        let normalized = rates.sum_rate / (0.5 * 1e30f64.log2());
        assert!(
            (normalized - 1.4).abs() < 0.1,
            "normalized sum rate {normalized} misses 1.4"
        );
    }

    #[test]
    fn strong_all_common_matches_weak_degenerate_case() {
        let ch = channel(1.0, 1.0, 1.0, 1.0, 1.0);
        let rates = strong_rates(&ch, &all_common(1.0)).unwrap();
        assert!((rates.sum_rate - 0.5 * 3.0f64.log2()).abs() < 1e-12);
    }

    #[test]
    fn strong_rejects_private_power() {
        let ch = channel(1.0, 1.0, 1.0, 1.0, 1.0);
        let alloc = PowerAllocation {
            p_private: 0.5,
            p_common: 0.5,
            p_cp: vec![0.0],
            p_relay_1: 0.0,
            p_relay_2: 0.0,
        };
        assert!(strong_rates(&ch, &alloc).is_err());
    }

    #[test]
    fn strong_deaf_relay_kills_cp() {
        let ch = channel(1.0, 2.0, 1.0, 0.0, 1.0);
        let alloc = PowerAllocation {
            p_private: 0.0,
            p_common: 0.5,
            p_cp: vec![0.25, 0.25],
            p_relay_1: 1.0,
            p_relay_2: 0.0,
        };
        let rates = strong_rates(&ch, &alloc).unwrap();
        assert_eq!(rates.r_cp_total, 0.0);
    }

    #[test]
    fn strong_destination_decodes_through_the_cross_gain() {
        // h_c^2 = 100, h_d^2 = 1, single CP level at full power: the
        // destination constraint is C(100/(1+1)) = 0.5*log2(51), and a huge
        // h_sr keeps the relay constraint out of the way.
        let ch = channel(1.0, 10.0, 10f64.powf(4.5), 10f64.powf(4.5), 1.0);
        let alloc = PowerAllocation {
            p_private: 0.0,
            p_common: 0.0,
            p_cp: vec![1.0],
            p_relay_1: 1.0,
            p_relay_2: 0.0,
        };
        let rates = strong_rates(&ch, &alloc).unwrap();
        assert!((rates.r_cp_levels[0] - 0.5 * 51f64.log2()).abs() < 1e-12);
        assert_eq!(
            rates.binding_constraints.cp_levels[0],
            CpLevelBinding::Destination
        );
    }

    #[test]
    fn relay_noise_never_helps_cp_levels() {
        // Raising p_relay_2 with everything else fixed only adds noise to
        // the destination's CP decoding.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0006);
        for _ in 0..200 {
            let ch = channel(
                rng.gen_range(0.1..3.0),
                rng.gen_range(0.1..3.0),
                rng.gen_range(0.1..3.0),
                rng.gen_range(0.1..3.0),
                rng.gen_range(1.0..100.0),
            );
            let power = ch.power();
            let c = rng.gen_range(0.0..1.0);
            let cp = rng.gen_range(0.0..1.0 - c);
            let alloc_lo = PowerAllocation {
                p_private: (1.0 - c - cp) * power,
                p_common: c * power,
                p_cp: vec![cp * power],
                p_relay_1: 0.25 * power,
                p_relay_2: 0.25 * power,
            };
            let mut alloc_hi = alloc_lo.clone();
            alloc_hi.p_relay_2 = 0.75 * power;
            let lo = weak_rates(&ch, &alloc_lo).unwrap();
            let hi = weak_rates(&ch, &alloc_hi).unwrap();
            for (h, l) in hi.r_cp_levels.iter().zip(&lo.r_cp_levels) {
                assert!(h <= l);
            }
        }
    }

    #[test]
    fn example_allocation_level_counts() {
        // (beta-1)/(1-alpha) = 1/3 rounds up to one level.
        let ch = realize(exps(0.7, 1.1, 0.2), 1e10).unwrap();
        assert_eq!(example_allocation(&ch).unwrap().levels(), 1);

        // Exactly 2 despite floating-point noise in the log ratio.
        let ch = realize(exps(0.95, 1.1, 0.2), 1e10).unwrap();
        assert_eq!(example_allocation(&ch).unwrap().levels(), 2);

        // 0.25/0.1 = 2.5 rounds up to three levels.
        let ch = realize(exps(0.9, 1.25, 0.7), 1e12).unwrap();
        assert_eq!(example_allocation(&ch).unwrap().levels(), 3);
    }

    #[test]
    fn example_allocation_ledger_telescopes() {
        for (e, snr) in [
            (exps(0.7, 1.1, 0.2), 1e10),
            (exps(0.95, 1.1, 0.2), 1e20),
            (exps(0.9, 1.25, 0.7), 1e12),
            (exps(0.55, 1.02, 0.08), 1e30),
        ] {
            let ch = realize(e, snr).unwrap();
            let alloc = example_allocation(&ch).unwrap();
            let total = alloc.p_private + alloc.p_common + alloc.p_cp.iter().sum::<f64>();
            assert!(
                (total - snr).abs() <= 1e-12 * snr,
                "ledger off: {total} vs {snr}"
            );
            assert!(alloc.validate(snr).is_ok());
            assert_eq!(alloc.p_relay_1, snr);
            assert_eq!(alloc.p_relay_2, 0.0);
        }
    }

    #[test]
    fn example_allocation_regime_gates() {
        // 2*alpha > 1 + gamma fails.
        let ch = realize(exps(0.2, 1.1, 0.2), 1e10).unwrap();
        assert!(matches!(
            example_allocation(&ch),
            Err(Error::ExampleRegime { .. })
        ));
        // beta - 1 < gamma fails.
        let ch = realize(exps(0.9, 1.4, 0.1), 1e10).unwrap();
        assert!(matches!(
            example_allocation(&ch),
            Err(Error::ExampleRegime { .. })
        ));
        // alpha = 1 leaves no ladder ratio.
        let ch = realize(exps(1.0, 1.1, 0.5), 1e10).unwrap();
        assert!(matches!(
            example_allocation(&ch),
            Err(Error::ExampleRegime { .. })
        ));
    }

    #[test]
    fn ladder_identity_holds_below_the_top_level() {
        // K = 1 and K = 2: no pairs to check.
        let ch = realize(exps(0.7, 1.1, 0.2), 1e10).unwrap();
        assert!(cp_ladder_check(&ch, &example_allocation(&ch).unwrap()));
        let ch = realize(exps(0.95, 1.1, 0.2), 1e10).unwrap();
        assert!(cp_ladder_check(&ch, &example_allocation(&ch).unwrap()));

        // K = 3 and a deep ladder: the identity holds on every checked pair.
        let ch = realize(exps(0.9, 1.25, 0.7), 1e12).unwrap();
        let alloc = example_allocation(&ch).unwrap();
        assert_eq!(alloc.levels(), 3);
        assert!(cp_ladder_check(&ch, &alloc));

        let ch = realize(exps(0.97, 1.5, 0.9), 1e12).unwrap();
        let alloc = example_allocation(&ch).unwrap();
        assert!(alloc.levels() >= 3);
        assert!(cp_ladder_check(&ch, &alloc));

        // A broken ladder is detected.
        let ch = realize(exps(0.9, 1.25, 0.7), 1e12).unwrap();
        let mut alloc = example_allocation(&ch).unwrap();
        alloc.p_cp[1] *= 1.5;
        assert!(!cp_ladder_check(&ch, &alloc));
    }

    #[test]
    fn forwarding_terms_dominate_relay_block_decoding() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0007);
        // Degenerate corners first.
        let ch = channel(1.0, 1.0, 0.0, 1.0, 1.0);
        assert!(relay_constraint_dominance(&ch, &all_common(1.0)));
        let ch = channel(1.0, 1.0, 1.0, 1.0, 1.0);
        let mut alloc = all_common(1.0);
        alloc.p_relay_1 = 1.0;
        assert!(relay_constraint_dominance(&ch, &alloc));

        for _ in 0..1000 {
            let power = rng.gen_range(0.5..1e6);
            let ch = channel(
                rng.gen_range(0.0..3.0),
                rng.gen_range(0.0..3.0),
                rng.gen_range(0.0..3.0),
                rng.gen_range(0.0..3.0),
                power,
            );
            let c = rng.gen_range(0.0..1.0);
            let p = rng.gen_range(0.0..1.0 - c);
            let r1 = rng.gen_range(0.0..1.0);
            let alloc = PowerAllocation {
                p_private: p * power,
                p_common: c * power,
                p_cp: vec![(1.0 - c - p) * power],
                p_relay_1: r1 * power,
                p_relay_2: (1.0 - r1) * power,
            };
            assert!(relay_constraint_dominance(&ch, &alloc));
        }
    }

    #[test]
    fn search_rejects_bad_parameters() {
        let ch = channel(1.0, 1.0, 1.0, 1.0, 1.0);
        assert!(matches!(
            best_sum_rate(&ch, 0, 4),
            Err(Error::Parameter { .. })
        ));
        assert!(matches!(
            best_sum_rate(&ch, 2, 1),
            Err(Error::Parameter { .. })
        ));
        assert!(matches!(
            best_sum_rate(&ch, 12, 30),
            Err(Error::Parameter { .. })
        ));
    }

    #[test]
    fn search_covers_the_no_relay_optimum() {
        // With the relay disconnected the best split is the all-common one.
        let ch = channel(1.0, 1.0, 0.0, 0.0, 1.0);
        let best = best_sum_rate(&ch, 2, 5).unwrap();
        assert!(best.rates.sum_rate >= 0.5 * 3.0f64.log2() - 1e-12);
    }

    #[test]
    fn search_never_falls_below_the_reference_allocation() {
        let ch = realize(exps(0.7, 1.1, 0.2), 1e30).unwrap();
        let reference = weak_rates(&ch, &example_allocation(&ch).unwrap()).unwrap();
        let best = best_sum_rate(&ch, 4, 5).unwrap();
        assert!(best.rates.sum_rate >= reference.sum_rate);
        let normalized = best.rates.sum_rate / (0.5 * 1e30f64.log2());
        assert!(normalized >= 1.4 - 0.1);
    }

    #[test]
    fn search_is_deterministic() {
        let ch = realize(exps(0.8, 1.3, 0.4), 1e10).unwrap();
        let a = best_sum_rate(&ch, 3, 4).unwrap();
        let b = best_sum_rate(&ch, 3, 4).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rates_are_non_negative_components() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0008);
        for _ in 0..500 {
            let power = rng.gen_range(0.5..1e9);
            let ch = channel(
                rng.gen_range(0.0..5.0),
                rng.gen_range(0.0..5.0),
                rng.gen_range(0.0..5.0),
                rng.gen_range(0.0..5.0),
                power,
            );
            let k = rng.gen_range(1..=4);
            let mut cuts: Vec<f64> = (0..k + 1).map(|_| rng.gen_range(0.0..1.0)).collect();
            cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut parts = Vec::with_capacity(k + 2);
            let mut last = 0.0;
            for c in cuts {
                parts.push((c - last) * power);
                last = c;
            }
            parts.push((1.0 - last) * power);
            let r1 = rng.gen_range(0.0..1.0);
            let alloc = PowerAllocation {
                p_private: parts[0],
                p_common: parts[1],
                p_cp: parts[2..].to_vec(),
                p_relay_1: r1 * power,
                p_relay_2: (1.0 - r1) * power,
            };
            let rates = weak_rates(&ch, &alloc).unwrap();
            assert!(rates.r_private >= 0.0);
            assert!(rates.r_common >= 0.0);
            assert!(rates.r_cp_levels.iter().all(|&r| r >= 0.0));
            assert!(rates.r_cp_total >= 0.0);
            assert!(rates.sum_rate >= 0.0);
            let level_sum: f64 = rates.r_cp_levels.iter().sum();
            assert!(rates.r_cp_total <= level_sum + 1e-12);
        }
    }
}
