#include "pdcbell/oracle.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace pdcbell {

using kernels::CMat;
using kernels::CVec;
using kernels::Exec;

TruncatedSpace::TruncatedSpace(int cutoff_) : cutoff(cutoff_) {
  if (cutoff < 2 || cutoff > 9) {
    throw std::invalid_argument("TruncatedSpace: cutoff must lie in 2..9");
  }
}

int TruncatedSpace::dim() const {
  const int l = levels();
  return l * l * l * l;
}

int TruncatedSpace::stride(Mode m) const {
  const int l = levels();
  switch (m) {
    case Mode::a1: return l * l * l;
    case Mode::a2: return l * l;
    case Mode::b1: return l;
    case Mode::b2: return 1;
  }
  throw std::invalid_argument("unknown mode");
}

int TruncatedSpace::index(const Occupation& occ) const {
  int idx = 0;
  for (int m = 0; m < kNumModes; ++m) {
    const int v = occ.n[static_cast<std::size_t>(m)];
    if (v < 0 || v > cutoff) {
      throw std::out_of_range("TruncatedSpace: occupation outside cutoff");
    }
    idx = idx * levels() + v;
  }
  return idx;
}

Occupation TruncatedSpace::occupation(int index) const {
  if (index < 0 || index >= dim()) {
    throw std::out_of_range("TruncatedSpace: index outside space");
  }
  Occupation occ;
  for (int m = kNumModes - 1; m >= 0; --m) {
    occ.n[static_cast<std::size_t>(m)] = index % levels();
    index /= levels();
  }
  return occ;
}

CMat two_mode_squeezer_kernel(int cutoff, double g, Exec exec) {
  if (cutoff < 1) {
    throw std::invalid_argument("two_mode_squeezer_kernel: cutoff too small");
  }
  if (!std::isfinite(g)) {
    throw std::invalid_argument("two_mode_squeezer_kernel: non-finite g");
  }
  const int l = cutoff + 1;
  CMat h(l * l);
  for (int k1 = 0; k1 < cutoff; ++k1) {
    for (int k2 = 0; k2 < cutoff; ++k2) {
      const double amp = std::sqrt(double(k1 + 1) * double(k2 + 1));
      const int lo = k1 * l + k2;
      const int hi = (k1 + 1) * l + (k2 + 1);
      h.at(hi, lo) = cd{amp, 0.0};
      h.at(lo, hi) = cd{amp, 0.0};
    }
  }
  return kernels::expm(kernels::scaled(h, cd{0.0, g}), exec);
}

DenseOperator exact_squeezer(const TruncatedSpace& space, Mode i, Mode j,
                             double g, Exec exec) {
  if (i == j) {
    throw std::invalid_argument("exact_squeezer: modes must differ");
  }
  const CMat kern = two_mode_squeezer_kernel(space.cutoff, g, exec);
  const int l = space.levels();
  DenseOperator op{space, CMat(space.dim())};
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (int row = 0; row < space.dim(); ++row) {
    const Occupation occ = space.occupation(row);
    const int mi = occ[i];
    const int mj = occ[j];
    const int base = row - mi * space.stride(i) - mj * space.stride(j);
    for (int ki = 0; ki < l; ++ki) {
      for (int kj = 0; kj < l; ++kj) {
        const cd v = kern.at(mi * l + mj, ki * l + kj);
        if (v != cd{0.0, 0.0}) {
          op.m.at(row, base + ki * space.stride(i) + kj * space.stride(j)) = v;
        }
      }
    }
  }
  return op;
}

void apply_two_mode_kernel(const CMat& kern, CVec& psi,
                           const TruncatedSpace& space, Mode i, Mode j,
                           Exec exec) {
  if (i == j) {
    throw std::invalid_argument("apply_two_mode_kernel: modes must differ");
  }
  const int l = space.levels();
  if (kern.n != l * l) {
    throw std::invalid_argument("apply_two_mode_kernel: kernel size mismatch");
  }
  if (static_cast<int>(psi.size()) != space.dim()) {
    throw std::invalid_argument("apply_two_mode_kernel: state size mismatch");
  }

  Mode spectators[2];
  int pos = 0;
  for (int m = 0; m < kNumModes; ++m) {
    const Mode mode = static_cast<Mode>(m);
    if (mode != i && mode != j) {
      spectators[pos++] = mode;
    }
  }
  const int si = space.stride(i);
  const int sj = space.stride(j);
  const int s0 = space.stride(spectators[0]);
  const int s1 = space.stride(spectators[1]);

#pragma omp parallel for collapse(2) schedule(static) \
    if (exec == Exec::parallel)
  for (int v0 = 0; v0 < l; ++v0) {
    for (int v1 = 0; v1 < l; ++v1) {
      const int base = v0 * s0 + v1 * s1;
      CVec sub(static_cast<std::size_t>(l) * l);
      for (int mi = 0; mi < l; ++mi) {
        for (int mj = 0; mj < l; ++mj) {
          sub[static_cast<std::size_t>(mi) * l + mj] =
              psi[static_cast<std::size_t>(base + mi * si + mj * sj)];
        }
      }
      for (int mi = 0; mi < l; ++mi) {
        for (int mj = 0; mj < l; ++mj) {
          const int row = mi * l + mj;
          cd acc{0.0, 0.0};
          for (int u = 0; u < l * l; ++u) {
            acc += kern.at(row, u) * sub[static_cast<std::size_t>(u)];
          }
          psi[static_cast<std::size_t>(base + mi * si + mj * sj)] = acc;
        }
      }
    }
  }
}

void apply_phase_rotation(CVec& psi, const TruncatedSpace& space, Mode mode,
                          double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("apply_phase_rotation: non-finite angle");
  }
  const int l = space.levels();
  std::vector<cd> factors(static_cast<std::size_t>(l));
  for (int n = 0; n < l; ++n) {
    factors[static_cast<std::size_t>(n)] = std::exp(cd{0.0, n * theta});
  }
  const int stride = space.stride(mode);
  for (int idx = 0; idx < space.dim(); ++idx) {
    const int n = (idx / stride) % l;
    psi[static_cast<std::size_t>(idx)] *= factors[static_cast<std::size_t>(n)];
  }
}

ExactStateResult exact_state(const CircuitConfig& config, int cutoff,
                             Exec exec) {
  config.validate();
  TruncatedSpace space(cutoff);
  CVec psi(static_cast<std::size_t>(space.dim()), cd{0.0, 0.0});
  psi[static_cast<std::size_t>(space.index(Occupation{}))] = cd{1.0, 0.0};

  const CMat kern = two_mode_squeezer_kernel(cutoff, config.g, exec);
  apply_two_mode_kernel(kern, psi, space, Mode::a2, Mode::b2, exec);
  apply_two_mode_kernel(kern, psi, space, Mode::a1, Mode::b1, exec);
  apply_phase_rotation(psi, space, Mode::a1, config.alpha);
  apply_phase_rotation(psi, space, Mode::b2, config.beta);
  if (config.bob_pump == Pump::on) {
    apply_two_mode_kernel(kern, psi, space, Mode::b1, Mode::b2, exec);
  }
  if (config.alice_pump == Pump::on) {
    apply_two_mode_kernel(kern, psi, space, Mode::a1, Mode::a2, exec);
  }

  double norm = 0.0;
  double boundary = 0.0;
  for (int idx = 0; idx < space.dim(); ++idx) {
    const double p = std::norm(psi[static_cast<std::size_t>(idx)]);
    norm += p;
    const Occupation occ = space.occupation(idx);
    bool at_cutoff = false;
    for (int v : occ.n) {
      at_cutoff = at_cutoff || v == cutoff;
    }
    if (at_cutoff) {
      boundary += p;
    }
  }

  ExactStateResult result{space, std::move(psi), std::abs(norm - 1.0),
                          boundary};
  if (result.norm_error > 1e-9) {
    throw std::runtime_error(
        "exact_state: norm drift " + std::to_string(result.norm_error) +
        "; increase the cutoff for g=" + std::to_string(config.g));
  }
  if (result.boundary_mass > 1e-6) {
    throw std::runtime_error(
        "exact_state: " + std::to_string(result.boundary_mass) +
        " probability mass at the cutoff boundary; increase the cutoff for "
        "g=" +
        std::to_string(config.g));
  }
  return result;
}

EventProbabilities event_probabilities_of_vector(const CVec& psi,
                                                 const TruncatedSpace& space) {
  if (static_cast<int>(psi.size()) != space.dim()) {
    throw std::invalid_argument(
        "event_probabilities_of_vector: state size mismatch");
  }
  EventProbabilities out;
  for (auto label : kEventLabels) {
    double p = 0.0;
    if (label == "11**" || label == "**11") {
      const Mode fixed1 = label == "11**" ? Mode::a1 : Mode::b1;
      const Mode fixed2 = label == "11**" ? Mode::a2 : Mode::b2;
      const Mode free1 = label == "11**" ? Mode::b1 : Mode::a1;
      const Mode free2 = label == "11**" ? Mode::b2 : Mode::a2;
      for (int u = 0; u <= space.cutoff; ++u) {
        for (int v = 0; v <= space.cutoff; ++v) {
          Occupation occ;
          occ[fixed1] = 1;
          occ[fixed2] = 1;
          occ[free1] = u;
          occ[free2] = v;
          p += std::norm(psi[static_cast<std::size_t>(space.index(occ))]);
        }
      }
    } else {
      const Occupation occ = Occupation::parse(label);
      p = std::norm(psi[static_cast<std::size_t>(space.index(occ))]);
    }
    out.emplace(std::string(label), p);
  }
  return out;
}

EventProbabilities exact_event_probabilities(const CircuitConfig& config,
                                             int cutoff) {
  const ExactStateResult state = exact_state(config, cutoff);
  return event_probabilities_of_vector(state.psi, state.space);
}

double exact_probability(const CircuitConfig& config, std::string_view label,
                         int cutoff) {
  if (!is_event_label(label)) {
    throw std::invalid_argument("exact_probability: unknown event label \"" +
                                std::string(label) + "\"");
  }
  return exact_event_probabilities(config, cutoff).at(std::string(label));
}

cd two_mode_squeezed_vacuum_amplitude(double g, int n) {
  if (n < 0) {
    throw std::invalid_argument(
        "two_mode_squeezed_vacuum_amplitude: negative n");
  }
  const double mag = std::pow(std::tanh(g), n) / std::cosh(g);
  static const cd i_pows[4] = {cd{1, 0}, cd{0, 1}, cd{-1, 0}, cd{0, -1}};
  return mag * i_pows[n % 4];
}

ConvergenceReport convergence_scan(const CircuitConfig& config_template,
                                   const std::vector<double>& g_list,
                                   int order, int cutoff) {
  if (g_list.empty()) {
    throw std::invalid_argument("convergence_scan: empty g list");
  }
  ConvergenceReport report;
  report.order = order;
  report.corrected = config_template.corrected;
  std::map<std::string, std::vector<std::pair<double, double>>> fit_points;
  for (double g : g_list) {
    CircuitConfig cfg = config_template;
    cfg.g = g;
    cfg.order = order;
    const EventProbabilities pert = configuration_probabilities(cfg);
    const EventProbabilities exact = exact_event_probabilities(cfg, cutoff);
    for (auto label : kEventLabels) {
      const std::string key(label);
      const double err = std::abs(exact.at(key) - pert.at(key));
      report.rows.push_back({g, key, exact.at(key), pert.at(key), err});
      if (err > 1e-14 && g > 0.0) {
        fit_points[key].emplace_back(std::log(g), std::log(err));
      }
    }
  }
  for (auto label : kEventLabels) {
    const std::string key(label);
    const auto& pts = fit_points[key];
    double slope = std::numeric_limits<double>::quiet_NaN();
    if (pts.size() >= 2) {
      double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
      for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
      }
      const double n = static_cast<double>(pts.size());
      slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    report.slopes.emplace(key, slope);
  }
  return report;
}

double reduced_purity_alice(const ExactStateResult& state) {
  const int l = state.space.levels();
  const int da = l * l;
  CMat m(da);
  for (int ia = 0; ia < da; ++ia) {
    for (int ib = 0; ib < da; ++ib) {
      m.at(ia, ib) = state.psi[static_cast<std::size_t>(ia) * da + ib];
    }
  }
  // rho_A = M M^dag; purity = ||rho_A||_F^2 because rho_A is Hermitian.
  double purity = 0.0;
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      cd acc{0.0, 0.0};
      for (int k = 0; k < da; ++k) {
        acc += m.at(i, k) * std::conj(m.at(j, k));
      }
      purity += std::norm(acc);
    }
  }
  return purity;
}

}  // namespace pdcbell
