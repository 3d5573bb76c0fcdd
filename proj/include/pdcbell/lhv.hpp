#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "pdcbell/counts.hpp"
#include "pdcbell/kernels.hpp"

namespace pdcbell {

/// Local-model parameters: c scales the setting-dependent detection lobe,
/// d the setting-independent background strip.
struct LhvParams {
  double c = 0.0;
  double d = 0.0;

  void validate() const;  // c, d >= 0 and c + d <= 1
};

/// Parameters that reproduce the corrected quantum singles and pair rates:
/// c = 2 pi g^4, d = 2 g^2 - (28/3) g^4. Valid for 0 < g <= the bound at
/// which c = d.
LhvParams lhv_params_from_g(double g);
double lhv_g_upper_bound();  // sqrt(6 / (6 pi + 28))

/// One hidden state. Bob's variables are locked to Alice's:
/// phi_B = 2 pi - phi_A and r_B = 1 - r_A.
struct LhvSample {
  double phi_a = 0.0;  // in [0, 2 pi)
  double r_a = 0.0;    // in [0, 1)

  double phi_b() const;
  double r_b() const;
};

enum class LocalOutcome : int { minus = -1, none = 0, plus = +1 };
enum class Side { alice, bob };

enum class LhvModel { base, symmetric, fair_postselection };

std::string_view lhv_model_name(LhvModel m);
LhvModel parse_lhv_model(std::string_view text);

/// Single-port model: plus fires when the detection lobe
/// sin(phi + pi - setting) is nonnegative and r falls in the lobe strip
/// [0, c sin) or the background strip [1-d, 1). Never reports minus.
/// (Bob's lobe is sin(phi_B - setting).)
LocalOutcome outcome_base(const LhvSample& sample, Side side, double setting,
                          const LhvParams& params);

/// Adds a minus port mirroring the plus port half a fringe away; plus takes
/// precedence on boundaries. Outcome flips exactly under a pi shift of the
/// local setting.
LocalOutcome outcome_symmetric(const LhvSample& sample, Side side,
                               double setting, const LhvParams& params);

/// Adds a minus port that fills the rest of a setting-independent detection
/// set: the lobe strip is topped up to [0, c) and the background strip is
/// claimed whenever the mirrored lobe is positive. Detection (outcome != 0)
/// depends only on r, never on the setting.
LocalOutcome outcome_fair_postselection(const LhvSample& sample, Side side,
                                        double setting,
                                        const LhvParams& params);

LocalOutcome lhv_outcome(LhvModel model, const LhvSample& sample, Side side,
                         double setting, const LhvParams& params);

/// P(plus) at one station, uniform over the hidden state: c/pi + d/2.
double analytic_single(const LhvParams& params);

/// P(plus, plus) for settings (alpha, beta): (c/pi)(1 + cos(alpha+beta)).
/// Requires c <= d, the regime in which the lobe strips never collide with
/// the background strips.
double analytic_joint(const LhvParams& params, double alpha, double beta);

/// Fraction of trials in which both stations fire, per model (setting
/// independent for symmetric and fair_postselection; for base it equals the
/// joint rate, so a setting must be given).
double analytic_coincidence_fraction(LhvModel model, const LhvParams& params,
                                     double alpha = 0.0, double beta = 0.0);

inline constexpr int kMcShards = 64;

/// Monte Carlo run over the listed setting pairs, n_samples fresh hidden
/// states per pair. Sampling is split into kMcShards deterministic streams
/// (per-setting seed plus shard index); shard tallies are summed in shard
/// order, so results are identical for any thread count.
CountsTable mc_run(LhvModel model, const std::vector<SettingPair>& settings,
                   const LhvParams& params, std::uint64_t n_samples,
                   std::uint64_t seed,
                   kernels::Exec exec = kernels::Exec::parallel);

}  // namespace pdcbell
