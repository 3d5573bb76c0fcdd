#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pdcbell/counts.hpp"
#include "pdcbell/perturbation.hpp"

namespace pdcbell {

/// The six probabilities entering the Clauser-Horne combination. A and B
/// denote "local pump off", A' and B' "local pump on"; each event is the
/// two-photon coincidence of the respective station(s).
struct ChInputs {
  double p_ab = 0.0;
  double p_ab_prime = 0.0;
  double p_a_prime_b = 0.0;
  double p_a_prime_b_prime = 0.0;
  double p_a = 0.0;
  double p_b = 0.0;

  void validate() const;
};

/// p(A,B) + p(A,B') + p(A',B) - p(A',B') - p(A) - p(B). Positive values
/// certify nonclassicality.
double ch_value(const ChInputs& in);

/// Leading-order CH combination of the interwoven scheme:
/// g^4 (1 - 4 cos^2((alpha+beta)/2)).
double ch_leading_order(double g, double phase_sum);

enum class Engine { perturbative, oracle };

std::string_view engine_name(Engine e);
Engine parse_engine(std::string_view text);

struct ChResult {
  ChInputs inputs;
  double value = 0.0;
  bool violated = false;
};

/// Assemble the CH inputs from the four pump configurations at the given
/// phases. The perturbative engine uses the corrected order-2 pipeline; the
/// oracle engine uses exact evolution at `cutoff`.
ChResult ch_from_quantum(double g, double alpha, double beta, Engine engine,
                         int cutoff = 6);

struct InterferenceFit {
  double visibility = 0.0;
  double offset = 0.0;
  double residual = 0.0;  // rms residual of the least-squares fit
};

/// Least-squares fit of samples (phase, value) to K (1 + v cos(phase + d)).
/// Requires at least 8 samples spanning at least 7/4 pi.
InterferenceFit visibility_fit(
    const std::vector<std::pair<double, double>>& samples);

struct VisibilityScanPoint {
  double v = 0.0;
  double ch = 0.0;
};

struct VisibilityScan {
  std::vector<VisibilityScanPoint> points;
  /// Interpolated visibility at which the CH value crosses zero.
  double threshold = 0.0;
};

/// Sweep a synthetic interference visibility v at fixed phase sum: the
/// pump-on/pump-on coincidence is attenuated from its zero-phase-sum
/// maximum, p(v) = (1-v) p(0) + v p(phase_sum), while the other CH entries
/// stay at their v=1 values.
VisibilityScan visibility_threshold_scan(double g, double phase_sum,
                                         Engine engine, int n_points = 101,
                                         int cutoff = 6);

/// Probability reconstructed from counts of the (+1,+1) event at shifted
/// settings: outcome -1 is identified with a pi phase shift of the local
/// setting, and the four shifted counts are normalized to sum to one.
double reconstructed_probability(const CountsTable& counts, int r, int s,
                                 double alpha, double beta);

/// Correlation sum_{r,s} r s P_rec(r,s|alpha,beta).
double reconstructed_correlation(const CountsTable& counts, double alpha,
                                 double beta);

/// E(alpha,beta) - E(alpha,beta') + E(alpha',beta) + E(alpha',beta') on the
/// reconstructed correlations.
double reconstructed_chsh(const CountsTable& counts, const ChshSettings& s);

/// Same combination evaluated on an analytic joint-probability function of
/// the (+1,+1) event.
double reconstructed_chsh_analytic(
    const std::function<double(double, double)>& joint, const ChshSettings& s);

/// Correlation from the actual conditional distribution of detected pairs:
/// sum r s N(r,s) / sum N(r,s).
double conditional_correlation(const CountsTable& counts, double alpha,
                               double beta);
double conditional_chsh(const CountsTable& counts, const ChshSettings& s);

/// Fraction of trials of a setting pair in which both stations fired.
double coincidence_fraction(const CountsTable& counts, double alpha,
                            double beta);

/// CH inputs estimated from counts: coincidences at the four CHSH setting
/// pairs plus single-station frequencies at (alpha, beta).
ChInputs ch_inputs_from_counts(const CountsTable& counts,
                               const ChshSettings& s);

struct SymmetryAudit {
  struct Check {
    std::string name;           // which identity
    double alpha = 0.0;         // base setting pair
    double beta = 0.0;
    std::uint64_t lhs = 0;      // count on the unshifted side
    std::uint64_t rhs = 0;      // count on the shifted side
    double sigma_dev = 0.0;     // |lhs-rhs| / sqrt(lhs+rhs)
    double rel_dev = 0.0;       // |lhs-rhs| / max(1, (lhs+rhs)/2)
  };
  std::vector<Check> checks;
  double max_sigma_dev = 0.0;
  double max_rel_dev = 0.0;

  bool pass(double sigma_tol) const { return max_sigma_dev <= sigma_tol; }
};

/// Audit the outcome-flip identities N(+,-|a,b) = N(+,+|a,b+pi),
/// N(-,+|a,b) = N(+,+|a+pi,b) and N(-,-|a,b) = N(+,+|a+pi,b+pi) for every
/// base pair. All shifted pairs must be present in the table.
SymmetryAudit symmetry_audit(const CountsTable& counts,
                             const std::vector<SettingPair>& base_pairs);

/// Purity of Alice's reduced state in the pump-off/pump-off configuration,
/// from the exact engine. Values below 1 - g^2/2 certify entanglement of
/// the source term.
double entanglement_purity_off_off(double g, int cutoff = 6, double alpha = 0.0,
                                   double beta = 0.0);

}  // namespace pdcbell
