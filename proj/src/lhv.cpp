#include "pdcbell/lhv.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pdcbell/rng.hpp"

namespace pdcbell {

namespace {

constexpr double kPi = std::numbers::pi;

/// All region tests are closed at the lower boundary and open at the upper
/// one, so the plus/minus strips partition [0, c) exactly and the detection
/// set is the same floating-point set for every setting.
bool in_lobe_strip(double r, double edge) { return r < edge; }
bool in_background_strip(double r, double d) { return r >= 1.0 - d; }

struct SideView {
  double phi = 0.0;
  double r = 0.0;
  double lobe = 0.0;  // sin of the plus-lobe argument
};

SideView side_view(const LhvSample& sample, Side side, double setting) {
  SideView v;
  if (side == Side::alice) {
    v.phi = sample.phi_a;
    v.r = sample.r_a;
    v.lobe = std::sin(v.phi + kPi - setting);
  } else {
    v.phi = sample.phi_b();
    v.r = sample.r_b();
    v.lobe = std::sin(v.phi - setting);
  }
  return v;
}

bool plus_fires(const SideView& v, const LhvParams& p) {
  return v.lobe >= 0.0 &&
         (in_lobe_strip(v.r, p.c * v.lobe) || in_background_strip(v.r, p.d));
}

}  // namespace

void LhvParams::validate() const {
  if (!(c >= 0.0) || !(d >= 0.0) || !std::isfinite(c) || !std::isfinite(d)) {
    throw std::invalid_argument("LhvParams: c and d must be finite and >= 0");
  }
  if (c + d > 1.0) {
    throw std::invalid_argument("LhvParams: c + d must not exceed 1");
  }
}

double lhv_g_upper_bound() { return std::sqrt(6.0 / (6.0 * kPi + 28.0)); }

LhvParams lhv_params_from_g(double g) {
  if (!(g > 0.0) || g > lhv_g_upper_bound()) {
    throw std::invalid_argument(
        "lhv_params_from_g: need 0 < g <= " + std::to_string(lhv_g_upper_bound()));
  }
  const double g2 = g * g;
  const double g4 = g2 * g2;
  LhvParams p;
  p.c = 2.0 * kPi * g4;
  p.d = 2.0 * g2 - (28.0 / 3.0) * g4;
  p.validate();
  return p;
}

double LhvSample::phi_b() const { return 2.0 * kPi - phi_a; }
double LhvSample::r_b() const { return 1.0 - r_a; }

std::string_view lhv_model_name(LhvModel m) {
  switch (m) {
    case LhvModel::base: return "base";
    case LhvModel::symmetric: return "symmetric";
    case LhvModel::fair_postselection: return "fairpost";
  }
  throw std::invalid_argument("unknown model");
}

LhvModel parse_lhv_model(std::string_view text) {
  if (text == "base") {
    return LhvModel::base;
  }
  if (text == "symmetric") {
    return LhvModel::symmetric;
  }
  if (text == "fairpost" || text == "fair_postselection") {
    return LhvModel::fair_postselection;
  }
  throw std::invalid_argument("model must be base, symmetric or fairpost");
}

LocalOutcome outcome_base(const LhvSample& sample, Side side, double setting,
                          const LhvParams& params) {
  const SideView v = side_view(sample, side, setting);
  return plus_fires(v, params) ? LocalOutcome::plus : LocalOutcome::none;
}

LocalOutcome outcome_symmetric(const LhvSample& sample, Side side,
                               double setting, const LhvParams& params) {
  const SideView v = side_view(sample, side, setting);
  if (plus_fires(v, params)) {
    return LocalOutcome::plus;
  }
  // The minus lobe sits half a fringe away: sin(phi - setting) for Alice is
  // exactly -lobe, and negation keeps the sign test consistent with the
  // plus test down to the last ulp.
  const double minus_lobe = -v.lobe;
  if (minus_lobe >= 0.0 && (in_lobe_strip(v.r, params.c * minus_lobe) ||
                            in_background_strip(v.r, params.d))) {
    return LocalOutcome::minus;
  }
  return LocalOutcome::none;
}

LocalOutcome outcome_fair_postselection(const LhvSample& sample, Side side,
                                        double setting,
                                        const LhvParams& params) {
  const SideView v = side_view(sample, side, setting);
  if (plus_fires(v, params)) {
    return LocalOutcome::plus;
  }
  const bool strip_rest = params.c * v.lobe <= v.r && v.r < params.c;
  const bool background_rest =
      -v.lobe > 0.0 && in_background_strip(v.r, params.d);
  if (strip_rest || background_rest) {
    return LocalOutcome::minus;
  }
  return LocalOutcome::none;
}

LocalOutcome lhv_outcome(LhvModel model, const LhvSample& sample, Side side,
                         double setting, const LhvParams& params) {
  switch (model) {
    case LhvModel::base:
      return outcome_base(sample, side, setting, params);
    case LhvModel::symmetric:
      return outcome_symmetric(sample, side, setting, params);
    case LhvModel::fair_postselection:
      return outcome_fair_postselection(sample, side, setting, params);
  }
  throw std::invalid_argument("unknown model");
}

double analytic_single(const LhvParams& params) {
  params.validate();
  return params.c / kPi + params.d / 2.0;
}

double analytic_joint(const LhvParams& params, double alpha, double beta) {
  params.validate();
  if (params.c > params.d) {
    throw std::domain_error("analytic_joint: requires c <= d");
  }
  return params.c / kPi * (1.0 + std::cos(alpha + beta));
}

double analytic_coincidence_fraction(LhvModel model, const LhvParams& params,
                                     double alpha, double beta) {
  params.validate();
  switch (model) {
    case LhvModel::base:
      return analytic_joint(params, alpha, beta);
    case LhvModel::symmetric:
      // Both lobes together cover c(|sin|+|sin|)/2pi of the hidden disc,
      // plus the overlap of the two background strips.
      if (params.c > params.d) {
        throw std::domain_error(
            "analytic_coincidence_fraction: requires c <= d");
      }
      return 4.0 * params.c / kPi + std::max(0.0, 2.0 * params.d - 1.0);
    case LhvModel::fair_postselection:
      if (params.c > params.d) {
        throw std::domain_error(
            "analytic_coincidence_fraction: requires c <= d");
      }
      return 2.0 * params.c + std::max(0.0, 2.0 * params.d - 1.0);
  }
  throw std::invalid_argument("unknown model");
}

CountsTable mc_run(LhvModel model, const std::vector<SettingPair>& settings,
                   const LhvParams& params, std::uint64_t n_samples,
                   std::uint64_t seed, kernels::Exec exec) {
  params.validate();
  if (settings.empty()) {
    throw std::invalid_argument("mc_run: no setting pairs");
  }
  if (n_samples == 0) {
    throw std::invalid_argument("mc_run: zero samples");
  }

  CountsTable table;
  table.set_n_tot(n_samples);

  SplitMix64 setting_stream(seed);
  for (const auto& pair : settings) {
    const std::uint64_t setting_seed = setting_stream.next();

    // Tally per shard, then reduce in shard order: the result is identical
    // for any thread count.
    std::array<std::array<std::uint64_t, 3>, 3>
        shard_counts[kMcShards] = {};
    const std::uint64_t per_shard = n_samples / kMcShards;
    const std::uint64_t remainder = n_samples % kMcShards;

#pragma omp parallel for schedule(static) \
    if (exec == kernels::Exec::parallel)
    for (int shard = 0; shard < kMcShards; ++shard) {
      SplitMix64 rng(setting_seed + static_cast<std::uint64_t>(shard));
      const std::uint64_t n =
          per_shard + (static_cast<std::uint64_t>(shard) < remainder ? 1 : 0);
      auto& local = shard_counts[shard];
      for (std::uint64_t k = 0; k < n; ++k) {
        LhvSample sample;
        sample.phi_a = 2.0 * kPi * rng.uniform01();
        sample.r_a = rng.uniform01();
        const LocalOutcome ra =
            lhv_outcome(model, sample, Side::alice, pair.alpha, params);
        const LocalOutcome rb =
            lhv_outcome(model, sample, Side::bob, pair.beta, params);
        // kOutcomeCodes order: +1, -1, 0.
        const int i = ra == LocalOutcome::plus ? 0
                      : ra == LocalOutcome::minus ? 1 : 2;
        const int j = rb == LocalOutcome::plus ? 0
                      : rb == LocalOutcome::minus ? 1 : 2;
        ++local[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
    }

    for (int shard = 0; shard < kMcShards; ++shard) {
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          const std::uint64_t c = shard_counts[shard][i][j];
          if (c > 0) {
            table.add(kOutcomeCodes[i], kOutcomeCodes[j], pair.alpha,
                      pair.beta, c);
          }
        }
      }
    }
    // Ensure the pair is present even if a count never fired.
    table.add(0, 0, pair.alpha, pair.beta, 0);
  }
  table.validate();
  return table;
}

}  // namespace pdcbell
