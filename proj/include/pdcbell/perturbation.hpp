#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

#include "pdcbell/ket_series.hpp"

namespace pdcbell {

enum class Pump { off, on };

std::string_view pump_name(Pump p);
Pump parse_pump(std::string_view text);

/// One experimental configuration: pump shutters of the two local crystals,
/// the two phase-plate settings, the coupling, and how the evolution is
/// truncated.
struct CircuitConfig {
  Pump alice_pump = Pump::on;
  Pump bob_pump = Pump::on;
  double alpha = 0.0;     // phase on mode a1 [rad]
  double beta = 0.0;      // phase on mode b2 [rad]
  double g = 0.0;         // dimensionless coupling
  int order = 2;          // truncation order of each squeezer, 2..4
  bool corrected = true;  // add the g^3/g^4 repair terms (order-2 builds only)

  void validate() const;
  /// Swap the stations: pumps exchanged, alpha <-> beta.
  CircuitConfig mirrored() const;
};

/// Probabilities are tracked through this power of g regardless of the
/// build order.
inline constexpr int kWorkingOrder = 4;

/// The event labels this toolkit tracks: exact occupations plus the two
/// one-station coincidence marginals ("11**" fixes a1=a2=1, "**11" fixes
/// b1=b2=1).
extern const std::array<std::string_view, 16> kEventLabels;

bool is_event_label(std::string_view label);
bool event_matches(std::string_view label, const Occupation& occ);

/// exp(ig G_ij) truncated at `order`: sum_{k<=order} (ig)^k G^k / k!.
/// Requires order <= state.max_order().
KetSeries apply_truncated_squeezer(const KetSeries& state, Mode i, Mode j,
                                   int order);

/// Build the post-circuit state for `config`. Amplitudes are truncated at
/// total power config.order during composition, then widened to the working
/// order. With corrected=true and order=2 the g^3/g^4 repair terms are
/// added; they restore unit norm and no-signaling through g^4.
KetSeries build_state(const CircuitConfig& config);

/// Truncated squared magnitude summed over occupations matching `label`.
GPoly event_polynomial(const KetSeries& state, std::string_view label,
                       int order);
/// event_polynomial evaluated at the numeric coupling.
double probability(const KetSeries& state, std::string_view label, int order,
                   double g);

using EventProbabilities = std::map<std::string, double, std::less<>>;

/// All tracked event probabilities of `config` at the working order.
/// Validates that every value lies in [0,1] and that the coincidence
/// marginals dominate the corresponding exact events.
EventProbabilities configuration_probabilities(const CircuitConfig& config);

}  // namespace pdcbell
