#include "pdcbell/bell.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pdcbell/oracle.hpp"

namespace pdcbell {

namespace {

constexpr double kPi = std::numbers::pi;

void require_probability(double p, const char* name) {
  if (!(p >= -1e-12 && p <= 1.0 + 1e-12)) {
    throw std::invalid_argument(std::string("ChInputs: ") + name +
                                " outside [0,1]: " + std::to_string(p));
  }
}

/// The four CH probabilities of one engine at fixed phases. A and B are
/// "pump off"; primed settings are "pump on".
struct QuantumSide {
  EventProbabilities off_off;
  EventProbabilities on_off;
  EventProbabilities off_on;
  EventProbabilities on_on;
};

QuantumSide quantum_probabilities(double g, double alpha, double beta,
                                  Engine engine, int cutoff) {
  auto probs = [&](Pump a, Pump b) {
    CircuitConfig cfg;
    cfg.alice_pump = a;
    cfg.bob_pump = b;
    cfg.alpha = alpha;
    cfg.beta = beta;
    cfg.g = g;
    cfg.order = 2;
    cfg.corrected = true;
    if (engine == Engine::perturbative) {
      return configuration_probabilities(cfg);
    }
    return exact_event_probabilities(cfg, cutoff);
  };
  return QuantumSide{probs(Pump::off, Pump::off), probs(Pump::on, Pump::off),
                     probs(Pump::off, Pump::on), probs(Pump::on, Pump::on)};
}

ChInputs inputs_from_side(const QuantumSide& side) {
  ChInputs in;
  in.p_ab = side.off_off.at("1111");
  in.p_a_prime_b = side.on_off.at("1111");
  in.p_ab_prime = side.off_on.at("1111");
  in.p_a_prime_b_prime = side.on_on.at("1111");
  in.p_a = side.off_off.at("11**");
  in.p_b = side.off_off.at("**11");
  return in;
}

}  // namespace

void ChInputs::validate() const {
  require_probability(p_ab, "p_ab");
  require_probability(p_ab_prime, "p_ab_prime");
  require_probability(p_a_prime_b, "p_a_prime_b");
  require_probability(p_a_prime_b_prime, "p_a_prime_b_prime");
  require_probability(p_a, "p_a");
  require_probability(p_b, "p_b");
  if (p_ab > p_a + 1e-12 || p_ab > p_b + 1e-12 || p_ab_prime > p_a + 1e-12 ||
      p_a_prime_b > p_b + 1e-12) {
    throw std::invalid_argument("ChInputs: joint above its marginal");
  }
}

double ch_value(const ChInputs& in) {
  in.validate();
  return in.p_ab + in.p_ab_prime + in.p_a_prime_b - in.p_a_prime_b_prime -
         in.p_a - in.p_b;
}

double ch_leading_order(double g, double phase_sum) {
  const double c = std::cos(phase_sum / 2.0);
  const double g2 = g * g;
  return g2 * g2 * (1.0 - 4.0 * c * c);
}

std::string_view engine_name(Engine e) {
  return e == Engine::perturbative ? "perturbative" : "oracle";
}

Engine parse_engine(std::string_view text) {
  if (text == "perturbative") {
    return Engine::perturbative;
  }
  if (text == "oracle") {
    return Engine::oracle;
  }
  throw std::invalid_argument("engine must be \"perturbative\" or \"oracle\"");
}

ChResult ch_from_quantum(double g, double alpha, double beta, Engine engine,
                         int cutoff) {
  const QuantumSide side = quantum_probabilities(g, alpha, beta, engine, cutoff);
  ChResult result;
  result.inputs = inputs_from_side(side);
  result.value = ch_value(result.inputs);
  result.violated = result.value > 0.0;
  return result;
}

InterferenceFit visibility_fit(
    const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 8) {
    throw std::invalid_argument("visibility_fit: need at least 8 samples");
  }
  double lo = samples.front().first;
  double hi = lo;
  for (const auto& [phi, y] : samples) {
    lo = std::min(lo, phi);
    hi = std::max(hi, phi);
  }
  if (hi - lo < 1.75 * kPi) {
    throw std::invalid_argument(
        "visibility_fit: samples must span most of a fringe period");
  }

  // Least squares on the basis {1, cos, sin}: 3x3 normal equations.
  double m[3][3] = {};
  double rhs[3] = {};
  for (const auto& [phi, y] : samples) {
    const double b[3] = {1.0, std::cos(phi), std::sin(phi)};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        m[i][j] += b[i] * b[j];
      }
      rhs[i] += b[i] * y;
    }
  }
  // Gaussian elimination with partial pivoting.
  int perm[3] = {0, 1, 2};
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 3; ++row) {
      if (std::abs(m[perm[row]][col]) > std::abs(m[perm[pivot]][col])) {
        pivot = row;
      }
    }
    std::swap(perm[col], perm[pivot]);
    const double diag = m[perm[col]][col];
    if (std::abs(diag) < 1e-12) {
      throw std::invalid_argument("visibility_fit: degenerate phase design");
    }
    for (int row = col + 1; row < 3; ++row) {
      const double f = m[perm[row]][col] / diag;
      for (int j = col; j < 3; ++j) {
        m[perm[row]][j] -= f * m[perm[col]][j];
      }
      rhs[perm[row]] -= f * rhs[perm[col]];
    }
  }
  double sol[3] = {};
  for (int col = 2; col >= 0; --col) {
    double acc = rhs[perm[col]];
    for (int j = col + 1; j < 3; ++j) {
      acc -= m[perm[col]][j] * sol[j];
    }
    sol[col] = acc / m[perm[col]][col];
  }

  const double offset = sol[0];
  const double amp = std::hypot(sol[1], sol[2]);
  double scale = 0.0;
  for (const auto& [phi, y] : samples) {
    scale = std::max(scale, std::abs(y));
  }
  InterferenceFit fit;
  fit.offset = offset;
  if (amp <= 1e-12 * std::max(scale, 1e-300)) {
    fit.visibility = 0.0;
  } else if (offset <= 0.0) {
    throw std::domain_error(
        "visibility_fit: oscillation without a positive offset");
  } else {
    fit.visibility = amp / offset;
  }
  double ss = 0.0;
  for (const auto& [phi, y] : samples) {
    const double model = sol[0] + sol[1] * std::cos(phi) + sol[2] * std::sin(phi);
    ss += (y - model) * (y - model);
  }
  fit.residual = std::sqrt(ss / static_cast<double>(samples.size()));
  return fit;
}

VisibilityScan visibility_threshold_scan(double g, double phase_sum,
                                         Engine engine, int n_points,
                                         int cutoff) {
  if (n_points < 2) {
    throw std::invalid_argument("visibility_threshold_scan: need >= 2 points");
  }
  const QuantumSide at_sum =
      quantum_probabilities(g, phase_sum, 0.0, engine, cutoff);
  const QuantumSide at_zero = quantum_probabilities(g, 0.0, 0.0, engine, cutoff);
  const ChInputs base = inputs_from_side(at_sum);
  const double p_max = inputs_from_side(at_zero).p_a_prime_b_prime;
  const double p_v1 = base.p_a_prime_b_prime;
  const double fixed =
      base.p_ab + base.p_ab_prime + base.p_a_prime_b - base.p_a - base.p_b;

  VisibilityScan scan;
  scan.points.reserve(static_cast<std::size_t>(n_points));
  for (int k = 0; k < n_points; ++k) {
    const double v =
        static_cast<double>(k) / static_cast<double>(n_points - 1);
    const double attenuated = (1.0 - v) * p_max + v * p_v1;
    scan.points.push_back({v, fixed - attenuated});
  }
  const double denom = p_max - p_v1;
  scan.threshold = std::numeric_limits<double>::quiet_NaN();
  if (denom != 0.0) {
    const double v_star = (p_max - fixed) / denom;
    if (v_star >= 0.0 && v_star <= 1.0) {
      scan.threshold = v_star;
    }
  }
  return scan;
}

double reconstructed_probability(const CountsTable& counts, int r, int s,
                                 double alpha, double beta) {
  if ((r != 1 && r != -1) || (s != 1 && s != -1)) {
    throw std::invalid_argument(
        "reconstructed_probability: outcomes must be +1 or -1");
  }
  double num = 0.0;
  double denom = 0.0;
  for (int rr : {+1, -1}) {
    for (int ss : {+1, -1}) {
      const double a = alpha + (1 - rr) * kPi / 2.0;
      const double b = beta + (1 - ss) * kPi / 2.0;
      if (!counts.has_pair(a, b)) {
        throw std::invalid_argument(
            "reconstructed_probability: missing counts at a shifted setting");
      }
      const double c = static_cast<double>(counts.count(+1, +1, a, b));
      denom += c;
      if (rr == r && ss == s) {
        num = c;
      }
    }
  }
  if (denom == 0.0) {
    throw std::domain_error(
        "reconstructed_probability: no coincidences at any shifted setting");
  }
  return num / denom;
}

double reconstructed_correlation(const CountsTable& counts, double alpha,
                                 double beta) {
  double acc = 0.0;
  for (int r : {+1, -1}) {
    for (int s : {+1, -1}) {
      acc += r * s * reconstructed_probability(counts, r, s, alpha, beta);
    }
  }
  return acc;
}

double reconstructed_chsh(const CountsTable& counts, const ChshSettings& s) {
  return reconstructed_correlation(counts, s.alpha, s.beta) -
         reconstructed_correlation(counts, s.alpha, s.beta_prime) +
         reconstructed_correlation(counts, s.alpha_prime, s.beta) +
         reconstructed_correlation(counts, s.alpha_prime, s.beta_prime);
}

double reconstructed_chsh_analytic(
    const std::function<double(double, double)>& joint,
    const ChshSettings& s) {
  auto correlation = [&joint](double a, double b) {
    const double pp = joint(a, b);
    const double pm = joint(a, b + kPi);
    const double mp = joint(a + kPi, b);
    const double mm = joint(a + kPi, b + kPi);
    const double denom = pp + pm + mp + mm;
    if (denom <= 0.0) {
      throw std::domain_error(
          "reconstructed_chsh_analytic: vanishing joint rate");
    }
    return (pp + mm - pm - mp) / denom;
  };
  return correlation(s.alpha, s.beta) - correlation(s.alpha, s.beta_prime) +
         correlation(s.alpha_prime, s.beta) +
         correlation(s.alpha_prime, s.beta_prime);
}

double conditional_correlation(const CountsTable& counts, double alpha,
                               double beta) {
  double num = 0.0;
  double denom = 0.0;
  for (int r : {+1, -1}) {
    for (int s : {+1, -1}) {
      const double c = static_cast<double>(counts.count(r, s, alpha, beta));
      num += r * s * c;
      denom += c;
    }
  }
  if (denom == 0.0) {
    throw std::domain_error("conditional_correlation: no coincidences");
  }
  return num / denom;
}

double conditional_chsh(const CountsTable& counts, const ChshSettings& s) {
  return conditional_correlation(counts, s.alpha, s.beta) -
         conditional_correlation(counts, s.alpha, s.beta_prime) +
         conditional_correlation(counts, s.alpha_prime, s.beta) +
         conditional_correlation(counts, s.alpha_prime, s.beta_prime);
}

double coincidence_fraction(const CountsTable& counts, double alpha,
                            double beta) {
  if (counts.n_tot() == 0) {
    throw std::domain_error("coincidence_fraction: table has no trial count");
  }
  return static_cast<double>(counts.coincidences(alpha, beta)) /
         static_cast<double>(counts.n_tot());
}

ChInputs ch_inputs_from_counts(const CountsTable& counts,
                               const ChshSettings& s) {
  if (counts.n_tot() == 0) {
    throw std::domain_error("ch_inputs_from_counts: table has no trial count");
  }
  const double n = static_cast<double>(counts.n_tot());
  ChInputs in;
  in.p_ab = static_cast<double>(counts.count(+1, +1, s.alpha, s.beta)) / n;
  in.p_ab_prime =
      static_cast<double>(counts.count(+1, +1, s.alpha, s.beta_prime)) / n;
  in.p_a_prime_b =
      static_cast<double>(counts.count(+1, +1, s.alpha_prime, s.beta)) / n;
  in.p_a_prime_b_prime = static_cast<double>(
                             counts.count(+1, +1, s.alpha_prime, s.beta_prime)) /
                         n;
  std::uint64_t a_fires = 0;
  std::uint64_t b_fires = 0;
  for (int other : {+1, -1, 0}) {
    a_fires += counts.count(+1, other, s.alpha, s.beta);
    b_fires += counts.count(other, +1, s.alpha, s.beta);
  }
  in.p_a = static_cast<double>(a_fires) / n;
  in.p_b = static_cast<double>(b_fires) / n;
  return in;
}

SymmetryAudit symmetry_audit(const CountsTable& counts,
                             const std::vector<SettingPair>& base_pairs) {
  SymmetryAudit audit;
  auto check = [&](const char* name, double alpha, double beta, int r, int s,
                   double a_shift, double b_shift) {
    const double sa = alpha + a_shift;
    const double sb = beta + b_shift;
    if (!counts.has_pair(alpha, beta) || !counts.has_pair(sa, sb)) {
      throw std::invalid_argument(
          "symmetry_audit: missing counts at a shifted setting");
    }
    SymmetryAudit::Check c;
    c.name = name;
    c.alpha = alpha;
    c.beta = beta;
    c.lhs = counts.count(r, s, alpha, beta);
    c.rhs = counts.count(+1, +1, sa, sb);
    const double total = static_cast<double>(c.lhs + c.rhs);
    const double diff =
        std::abs(static_cast<double>(c.lhs) - static_cast<double>(c.rhs));
    c.sigma_dev = total > 0.0 ? diff / std::sqrt(total) : 0.0;
    c.rel_dev = diff / std::max(1.0, total / 2.0);
    audit.max_sigma_dev = std::max(audit.max_sigma_dev, c.sigma_dev);
    audit.max_rel_dev = std::max(audit.max_rel_dev, c.rel_dev);
    audit.checks.push_back(std::move(c));
  };
  for (const auto& pair : base_pairs) {
    check("N(+,-)=N(+,+|beta+pi)", pair.alpha, pair.beta, +1, -1, 0.0, kPi);
    check("N(-,+)=N(+,+|alpha+pi)", pair.alpha, pair.beta, -1, +1, kPi, 0.0);
    check("N(-,-)=N(+,+|both+pi)", pair.alpha, pair.beta, -1, -1, kPi, kPi);
  }
  return audit;
}

double entanglement_purity_off_off(double g, int cutoff, double alpha,
                                   double beta) {
  CircuitConfig cfg;
  cfg.alice_pump = Pump::off;
  cfg.bob_pump = Pump::off;
  cfg.alpha = alpha;
  cfg.beta = beta;
  cfg.g = g;
  const ExactStateResult state = exact_state(cfg, cutoff);
  return reduced_purity_alice(state);
}

}  // namespace pdcbell
