#include "pdcbell/perturbation.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace pdcbell {

namespace {

constexpr cd kI{0.0, 1.0};

cd phase_factor(double angle) { return std::exp(cd{0.0, angle}); }

/// The g^3/g^4 terms that repair the order-2 build: they cancel the order-2
/// norm defect and the spurious setting dependence of the one-station
/// coincidence rates through g^4. Only amplitudes that beat against a lower
/// order in some tracked probability are repaired.
void add_truncation_corrections(KetSeries& state, const CircuitConfig& cfg) {
  const int mo = state.max_order();
  const cd eia = phase_factor(cfg.alpha);
  const cd eib = phase_factor(cfg.beta);
  const cd eid = phase_factor(cfg.alpha + cfg.beta);
  const bool a_on = cfg.alice_pump == Pump::on;
  const bool b_on = cfg.bob_pump == Pump::on;

  auto add = [&](const char* occ, int power, cd coeff) {
    state.add_term(Occupation::parse(occ), GPoly::monomial(mo, power, coeff));
  };

  if (a_on && b_on) {
    add("0000", 4, cd{7.0 / 3.0, 0.0} + eid);
    add("1010", 3, -kI * (10.0 / 3.0) * eia);
    add("0101", 3, -kI * (10.0 / 3.0) * eib);
    add("1100", 3, -kI * (cd{7.0 / 3.0, 0.0} + eid));
    add("0011", 3, -kI * (cd{7.0 / 3.0, 0.0} + eid));
  } else if (!a_on && !b_on) {
    add("0000", 4, cd{2.0 / 3.0, 0.0});
    add("1010", 3, -kI * (4.0 / 3.0) * eia);
    add("0101", 3, -kI * (4.0 / 3.0) * eib);
  } else {
    add("0000", 4, cd{11.0 / 8.0, 0.0});
    add("1010", 3, -kI * (7.0 / 3.0) * eia);
    add("0101", 3, -kI * (7.0 / 3.0) * eib);
    add(a_on ? "1100" : "0011", 3, -kI * cd{11.0 / 6.0, 0.0});
  }
}

}  // namespace

std::string_view pump_name(Pump p) { return p == Pump::on ? "on" : "off"; }

Pump parse_pump(std::string_view text) {
  if (text == "on") {
    return Pump::on;
  }
  if (text == "off") {
    return Pump::off;
  }
  throw std::invalid_argument("pump must be \"on\" or \"off\", got \"" +
                              std::string(text) + "\"");
}

void CircuitConfig::validate() const {
  if (!(g >= 0.0) || !std::isfinite(g)) {
    throw std::invalid_argument("config: g must be finite and >= 0");
  }
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw std::invalid_argument("config: phases must be finite");
  }
  if (order < 2 || order > 4) {
    throw std::invalid_argument("config: order must lie in 2..4, got " +
                                std::to_string(order));
  }
}

CircuitConfig CircuitConfig::mirrored() const {
  CircuitConfig out = *this;
  out.alice_pump = bob_pump;
  out.bob_pump = alice_pump;
  out.alpha = beta;
  out.beta = alpha;
  return out;
}

const std::array<std::string_view, 16> kEventLabels = {
    "0000", "1111", "11**", "**11", "1010", "0101", "1100", "0011",
    "2020", "0202", "2200", "0022", "2110", "1201", "0112", "1021"};

bool is_event_label(std::string_view label) {
  for (auto l : kEventLabels) {
    if (l == label) {
      return true;
    }
  }
  return false;
}

bool event_matches(std::string_view label, const Occupation& occ) {
  if (label == "11**") {
    return occ[Mode::a1] == 1 && occ[Mode::a2] == 1;
  }
  if (label == "**11") {
    return occ[Mode::b1] == 1 && occ[Mode::b2] == 1;
  }
  if (!is_event_label(label)) {
    throw std::invalid_argument("unknown event label \"" + std::string(label) +
                                "\"");
  }
  return occ == Occupation::parse(label);
}

KetSeries apply_truncated_squeezer(const KetSeries& state, Mode i, Mode j,
                                   int order) {
  if (order < 0) {
    throw std::invalid_argument("apply_truncated_squeezer: negative order");
  }
  if (order > state.max_order()) {
    throw std::invalid_argument(
        "apply_truncated_squeezer: order exceeds the state's max_order");
  }
  KetSeries out = state;
  KetSeries power = state;  // G^k applied, k tracked by the loop
  double factorial = 1.0;
  cd i_pow{1.0, 0.0};
  for (int k = 1; k <= order; ++k) {
    power = apply_pair_generator(power, i, j);
    factorial *= k;
    i_pow *= cd{0.0, 1.0};
    const cd coeff = i_pow / factorial;
    for (const auto& [occ, poly] : power.terms()) {
      out.add_term(occ, poly.scaled(coeff).shifted(k));
    }
  }
  return out;
}

KetSeries build_state(const CircuitConfig& config) {
  config.validate();
  // Compose at the requested order so that cross terms of the squeezer
  // expansions above it are dropped along with everything else.
  KetSeries state = KetSeries::vacuum(config.order);
  state = apply_truncated_squeezer(state, Mode::a2, Mode::b2, config.order);
  state = apply_truncated_squeezer(state, Mode::a1, Mode::b1, config.order);
  state = apply_phase(state, Mode::a1, config.alpha);
  state = apply_phase(state, Mode::b2, config.beta);
  if (config.bob_pump == Pump::on) {
    state = apply_truncated_squeezer(state, Mode::b1, Mode::b2, config.order);
  }
  if (config.alice_pump == Pump::on) {
    state = apply_truncated_squeezer(state, Mode::a1, Mode::a2, config.order);
  }
  if (state.max_order() < kWorkingOrder) {
    state = state.widened(kWorkingOrder);
  }
  if (config.corrected && config.order == 2) {
    add_truncation_corrections(state, config);
  }
  return state;
}

GPoly event_polynomial(const KetSeries& state, std::string_view label,
                       int order) {
  if (order < 0 || order > state.max_order()) {
    throw std::invalid_argument(
        "event_polynomial: order outside the state's truncation");
  }
  GPoly acc(state.max_order());
  for (const auto& [occ, poly] : state.terms()) {
    if (event_matches(label, occ)) {
      acc += conj_mul(poly, poly);
    }
  }
  acc = acc.truncated(order);
  for (int k = 0; k <= order; ++k) {
    if (std::abs(acc.coeff(k).imag()) >= 1e-12) {
      throw std::runtime_error("event_polynomial: imaginary residue");
    }
    acc.set_coeff(k, cd{acc.coeff(k).real(), 0.0});
  }
  return acc;
}

double probability(const KetSeries& state, std::string_view label, int order,
                   double g) {
  return event_polynomial(state, label, order).eval(g).real();
}

EventProbabilities configuration_probabilities(const CircuitConfig& config) {
  const KetSeries state = build_state(config);
  EventProbabilities out;
  for (auto label : kEventLabels) {
    const double p = probability(state, label, kWorkingOrder, config.g);
    if (p < -1e-12 || p > 1.0 + 1e-12) {
      throw std::runtime_error("configuration_probabilities: \"" +
                               std::string(label) + "\" outside [0,1]: " +
                               std::to_string(p));
    }
    out.emplace(std::string(label), p);
  }
  if (out.at("11**") < out.at("1111") - 1e-12 ||
      out.at("**11") < out.at("1111") - 1e-12) {
    throw std::runtime_error(
        "configuration_probabilities: marginal below the joint event");
  }
  return out;
}

}  // namespace pdcbell
