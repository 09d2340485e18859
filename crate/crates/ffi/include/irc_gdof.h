/* C interface to the irc-gdof toolkit: GDoF, capacity bounds, and FDF
   rates of the symmetric Gaussian interference relay channel. */

#ifndef IRC_GDOF_H
#define IRC_GDOF_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of an FFI call.
 */
typedef enum IrcGdofStatus {
  IRC_GDOF_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  IRC_GDOF_STATUS_NULL_POINTER = 1,
  /**
   * An argument was out of its numeric domain.
   */
  IRC_GDOF_STATUS_INVALID_INPUT = 2,
  /**
   * The closed form covers gamma <= alpha only.
   */
  IRC_GDOF_STATUS_REGIME_NOT_CHARACTERIZED = 3,
  /**
   * A genie bound ratio over a zero gain.
   */
  IRC_GDOF_STATUS_DEGENERATE_CHANNEL = 4,
  /**
   * A power allocation violated its ledger or regime.
   */
  IRC_GDOF_STATUS_INFEASIBLE_ALLOCATION = 5,
} IrcGdofStatus;

/**
 * Which finite-SNR bound is tightest.
 */
typedef enum IrcGdofBound {
  IRC_GDOF_BOUND_CUTSET_BC = 0,
  IRC_GDOF_BOUND_CUTSET_MAC = 1,
  IRC_GDOF_BOUND_GENIE1 = 2,
  IRC_GDOF_BOUND_GENIE2 = 3,
} IrcGdofBound;

/**
 * Rate variant that produced a result.
 */
typedef enum IrcGdofVariant {
  IRC_GDOF_VARIANT_WEAK = 0,
  IRC_GDOF_VARIANT_STRONG = 1,
} IrcGdofVariant;

/**
 * Opaque channel handle; create with `irc_gdof_channel_new` or
 * `irc_gdof_channel_realize`, release with `irc_gdof_channel_free`.
 */
typedef struct IrcGdofChannel IrcGdofChannel;

/**
 * The six min-arguments of the closed-form GDoF and their minimum.
 */
typedef struct IrcGdofBreakdown {
  /**
   * The six arguments in their conventional order.
   */
  double args[6];
  /**
   * `min(args)`.
   */
  double value;
  /**
   * 1-based index of a minimizing argument (ties go to the smallest).
   */
  uint32_t argmin_index;
} IrcGdofBreakdown;

/**
 * The four finite-SNR sum-rate bounds in bits and their minimum. Genie
 * bounds that are undefined for the channel are reported as infinity.
 */
typedef struct IrcGdofBoundReport {
  double cutset_bc;
  double cutset_mac;
  double genie_1;
  double genie_2;
  double tightest;
  enum IrcGdofBound tightest_name;
} IrcGdofBoundReport;

/**
 * Condensed achievable-rate result in bits per channel use.
 */
typedef struct IrcGdofRateSummary {
  double r_private;
  double r_common;
  double r_cp_total;
  double sum_rate;
  /**
   * Number of cooperative-public levels in the allocation.
   */
  uint32_t levels;
  enum IrcGdofVariant variant;
} IrcGdofRateSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * `C(x) = 0.5 * log2(1 + x)` in bits; requires `x > -1`.
 *
 * # Safety
 *
 * `out` must be a valid pointer to a writable `double`.
 */
enum IrcGdofStatus irc_gdof_capacity(double x, double *out);

/**
 * `C+(x) = max(0, C(x))` in bits; requires `x > -1`.
 *
 * # Safety
 *
 * `out` must be a valid pointer to a writable `double`.
 */
enum IrcGdofStatus irc_gdof_capacity_plus(double x, double *out);

/**
 * New channel from physical gains and the per-node power budget.
 *
 * # Safety
 *
 * `out` must be a valid pointer to a writable handle slot. The returned
 * handle must be released with `irc_gdof_channel_free`.
 */
enum IrcGdofStatus irc_gdof_channel_new(double h_d,
                                        double h_c,
                                        double h_r,
                                        double h_sr,
                                        double power,
                                        struct IrcGdofChannel **out);

/**
 * New canonical channel (`h_d = 1`, `P = snr`) from strength exponents;
 * requires `snr > 1` and non-negative exponents.
 *
 * # Safety
 *
 * As `irc_gdof_channel_new`.
 */
enum IrcGdofStatus irc_gdof_channel_realize(double alpha,
                                            double beta,
                                            double gamma,
                                            double snr,
                                            struct IrcGdofChannel **out);

/**
 * Strength exponents of a channel (normalizer `h_d^2 P` must exceed 1).
 *
 * # Safety
 *
 * `channel` must be a live handle; the three out-pointers must be valid.
 */
enum IrcGdofStatus irc_gdof_channel_exponents(const struct IrcGdofChannel *channel,
                                              double *alpha,
                                              double *beta,
                                              double *gamma);

/**
 * Releases a channel handle. Null is ignored.
 *
 * # Safety
 *
 * `channel` must be null or a handle obtained from this library that has
 * not been freed yet.
 */
void irc_gdof_channel_free(struct IrcGdofChannel *channel);

/**
 * Closed-form sum GDoF with per-argument attribution; requires
 * `gamma <= alpha`.
 *
 * # Safety
 *
 * `out` must be a valid pointer to a writable breakdown struct.
 */
enum IrcGdofStatus irc_gdof_closed_form(double alpha,
                                        double beta,
                                        double gamma,
                                        struct IrcGdofBreakdown *out);

/**
 * Sum GDoF of the symmetric interference channel without relay (the
 * W-curve); requires `alpha >= 0`.
 *
 * # Safety
 *
 * `out` must be a valid pointer to a writable `double`.
 */
enum IrcGdofStatus irc_gdof_ic_baseline(double alpha, double *out);

/**
 * All four finite-SNR sum-capacity bounds and their minimum.
 *
 * # Safety
 *
 * `channel` must be a live handle; `out` must be valid and writable.
 */
enum IrcGdofStatus irc_gdof_bounds(const struct IrcGdofChannel *channel,
                                   struct IrcGdofBoundReport *out);

/**
 * Best achievable sum rate over the deterministic power-split search;
 * requires `k_max >= 1` and `resolution >= 2`.
 *
 * # Safety
 *
 * `channel` must be a live handle; `out` must be valid and writable.
 */
enum IrcGdofStatus irc_gdof_best_sum_rate(const struct IrcGdofChannel *channel,
                                          uint32_t k_max,
                                          uint32_t resolution,
                                          struct IrcGdofRateSummary *out);

/**
 * Achievable sum rate of the reference weak-interference allocation;
 * requires its regime.
 *
 * # Safety
 *
 * `channel` must be a live handle; `out` must be valid and writable.
 */
enum IrcGdofStatus irc_gdof_example_sum_rate(const struct IrcGdofChannel *channel,
                                             struct IrcGdofRateSummary *out);

/**
 * Static description of a status code.
 */
const char *irc_gdof_status_message(enum IrcGdofStatus status);

/**
 * Library version as a static C string.
 */
const char *irc_gdof_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IRC_GDOF_H */
