#include "pdcbell/gpoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pdcbell {

namespace {

void require_same_order(const GPoly& a, const GPoly& b) {
  if (a.max_order() != b.max_order()) {
    throw std::invalid_argument("GPoly: mixed truncation orders (" +
                                std::to_string(a.max_order()) + " vs " +
                                std::to_string(b.max_order()) + ")");
  }
}

}  // namespace

GPoly::GPoly(int max_order) {
  if (max_order < 0) {
    throw std::invalid_argument("GPoly: negative max_order");
  }
  c_.assign(static_cast<std::size_t>(max_order) + 1, cd{0.0, 0.0});
}

GPoly GPoly::constant(int max_order, cd value) {
  GPoly p(max_order);
  p.c_[0] = value;
  return p;
}

GPoly GPoly::monomial(int max_order, int power, cd value) {
  GPoly p(max_order);
  if (power < 0) {
    throw std::invalid_argument("GPoly: negative power");
  }
  if (power <= max_order) {
    p.c_[static_cast<std::size_t>(power)] = value;
  }
  return p;
}

cd GPoly::coeff(int power) const {
  if (power < 0 || power > max_order()) {
    return cd{0.0, 0.0};
  }
  return c_[static_cast<std::size_t>(power)];
}

void GPoly::set_coeff(int power, cd value) {
  if (power < 0 || power > max_order()) {
    throw std::out_of_range("GPoly: power outside truncation");
  }
  c_[static_cast<std::size_t>(power)] = value;
}

GPoly& GPoly::operator+=(const GPoly& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    c_[k] += rhs.c_[k];
  }
  return *this;
}

GPoly& GPoly::operator-=(const GPoly& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    c_[k] -= rhs.c_[k];
  }
  return *this;
}

GPoly operator*(const GPoly& a, const GPoly& b) {
  require_same_order(a, b);
  GPoly out(a.max_order());
  const int mo = a.max_order();
  for (int i = 0; i <= mo; ++i) {
    if (a.coeff(i) == cd{0.0, 0.0}) {
      continue;
    }
    for (int j = 0; i + j <= mo; ++j) {
      out.c_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
  }
  return out;
}

GPoly GPoly::scaled(cd factor) const {
  GPoly out(*this);
  for (auto& c : out.c_) {
    c *= factor;
  }
  return out;
}

GPoly GPoly::shifted(int powers) const {
  if (powers < 0) {
    throw std::invalid_argument("GPoly: negative shift");
  }
  GPoly out(max_order());
  for (int k = 0; k + powers <= max_order(); ++k) {
    out.c_[static_cast<std::size_t>(k + powers)] = coeff(k);
  }
  return out;
}

GPoly GPoly::conjugated() const {
  GPoly out(*this);
  for (auto& c : out.c_) {
    c = std::conj(c);
  }
  return out;
}

GPoly GPoly::truncated(int order) const {
  if (order < 0) {
    throw std::invalid_argument("GPoly: negative truncation order");
  }
  GPoly out(*this);
  for (int k = order + 1; k <= max_order(); ++k) {
    out.c_[static_cast<std::size_t>(k)] = cd{0.0, 0.0};
  }
  return out;
}

GPoly GPoly::widened(int new_max_order) const {
  if (new_max_order < max_order()) {
    throw std::invalid_argument("GPoly: widening must not shrink");
  }
  GPoly out(new_max_order);
  for (int k = 0; k <= max_order(); ++k) {
    out.c_[static_cast<std::size_t>(k)] = coeff(k);
  }
  return out;
}

cd GPoly::eval(double g) const {
  cd acc{0.0, 0.0};
  for (int k = max_order(); k >= 0; --k) {
    acc = acc * g + c_[static_cast<std::size_t>(k)];
  }
  return acc;
}

double GPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : c_) {
    m = std::max(m, std::abs(c));
  }
  return m;
}

bool GPoly::negligible(double tol) const { return max_abs_coeff() < tol; }

GPoly conj_mul(const GPoly& a, const GPoly& b) { return a.conjugated() * b; }

}  // namespace pdcbell
