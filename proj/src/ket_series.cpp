#include "pdcbell/ket_series.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "pdcbell/occupation.hpp"

namespace pdcbell {

std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::a1: return "a1";
    case Mode::a2: return "a2";
    case Mode::b1: return "b1";
    case Mode::b2: return "b2";
  }
  throw std::invalid_argument("unknown mode");
}

std::string Occupation::str() const {
  std::string out;
  out.reserve(kNumModes);
  for (int v : n) {
    if (v < 0 || v > 9) {
      throw std::domain_error("Occupation::str: photon number outside 0..9");
    }
    out.push_back(static_cast<char>('0' + v));
  }
  return out;
}

Occupation Occupation::parse(std::string_view text) {
  if (text.size() != kNumModes) {
    throw std::invalid_argument("Occupation::parse: need exactly 4 digits");
  }
  Occupation occ;
  for (int i = 0; i < kNumModes; ++i) {
    const char c = text[static_cast<std::size_t>(i)];
    if (c < '0' || c > '9') {
      throw std::invalid_argument("Occupation::parse: non-digit character");
    }
    occ.n[static_cast<std::size_t>(i)] = c - '0';
  }
  return occ;
}

double Ket::norm_squared() const {
  double acc = 0.0;
  for (const auto& [occ, amp] : amps) {
    acc += std::norm(amp);
  }
  return acc;
}

KetSeries::KetSeries(int max_order) : max_order_(max_order) {
  if (max_order < 0) {
    throw std::invalid_argument("KetSeries: negative max_order");
  }
}

KetSeries KetSeries::vacuum(int max_order) {
  KetSeries s(max_order);
  s.terms_.emplace(Occupation{}, GPoly::constant(max_order, cd{1.0, 0.0}));
  return s;
}

GPoly KetSeries::amplitude(const Occupation& occ) const {
  auto it = terms_.find(occ);
  if (it == terms_.end()) {
    return GPoly(max_order_);
  }
  return it->second;
}

void KetSeries::add_term(const Occupation& occ, const GPoly& poly) {
  if (poly.max_order() != max_order_) {
    throw std::invalid_argument("KetSeries: term with mismatched max_order");
  }
  for (int v : occ.n) {
    if (v < 0) {
      throw std::invalid_argument("KetSeries: negative occupation");
    }
  }
  auto [it, inserted] = terms_.try_emplace(occ, poly);
  if (!inserted) {
    it->second += poly;
  }
  if (it->second.negligible()) {
    terms_.erase(it);
  }
}

KetSeries KetSeries::widened(int new_max_order) const {
  KetSeries out(new_max_order);
  for (const auto& [occ, poly] : terms_) {
    out.terms_.emplace(occ, poly.widened(new_max_order));
  }
  return out;
}

GPoly KetSeries::norm_squared() const {
  GPoly acc(max_order_);
  for (const auto& [occ, poly] : terms_) {
    acc += conj_mul(poly, poly);
  }
  double max_imag = 0.0;
  for (int k = 0; k <= max_order_; ++k) {
    max_imag = std::max(max_imag, std::abs(acc.coeff(k).imag()));
  }
  if (max_imag >= 1e-12) {
    throw std::runtime_error("KetSeries::norm_squared: imaginary residue " +
                             std::to_string(max_imag));
  }
  for (int k = 0; k <= max_order_; ++k) {
    acc.set_coeff(k, cd{acc.coeff(k).real(), 0.0});
  }
  return acc;
}

Ket KetSeries::evaluate(double g) const {
  Ket out;
  for (const auto& [occ, poly] : terms_) {
    const cd amp = poly.eval(g);
    if (amp != cd{0.0, 0.0}) {
      out.amps.emplace(occ, amp);
    }
  }
  return out;
}

KetSeries apply_pair_generator(const KetSeries& state, Mode i, Mode j) {
  if (i == j) {
    throw std::invalid_argument("apply_pair_generator: modes must differ");
  }
  KetSeries out(state.max_order());
  for (const auto& [occ, poly] : state.terms()) {
    const int ni = occ[i];
    const int nj = occ[j];

    Occupation up = occ;
    up[i] = ni + 1;
    up[j] = nj + 1;
    out.add_term(up, poly.scaled(std::sqrt(double(ni + 1) * double(nj + 1))));

    if (ni >= 1 && nj >= 1) {
      Occupation down = occ;
      down[i] = ni - 1;
      down[j] = nj - 1;
      out.add_term(down, poly.scaled(std::sqrt(double(ni) * double(nj))));
    }
  }
  return out;
}

KetSeries apply_phase(const KetSeries& state, Mode mode, double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("apply_phase: non-finite angle");
  }
  KetSeries out(state.max_order());
  for (const auto& [occ, poly] : state.terms()) {
    const cd factor = std::exp(cd{0.0, occ[mode] * theta});
    out.add_term(occ, poly.scaled(factor));
  }
  return out;
}

GPoly inner_product(const KetSeries& bra, const KetSeries& ket) {
  if (bra.max_order() != ket.max_order()) {
    throw std::invalid_argument("inner_product: mixed truncation orders");
  }
  GPoly acc(bra.max_order());
  for (const auto& [occ, poly] : bra.terms()) {
    auto it = ket.terms().find(occ);
    if (it != ket.terms().end()) {
      acc += conj_mul(poly, it->second);
    }
  }
  return acc;
}

}  // namespace pdcbell
