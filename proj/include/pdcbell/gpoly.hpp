#pragma once

#include <complex>
#include <vector>

namespace pdcbell {

using cd = std::complex<double>;

/// Polynomial in the coupling g with complex coefficients, truncated at a
/// fixed maximal power. All arithmetic discards powers above max_order, so
/// a GPoly models one amplitude of a perturbative state.
class GPoly {
 public:
  explicit GPoly(int max_order);
  static GPoly constant(int max_order, cd value);
  static GPoly monomial(int max_order, int power, cd value);

  int max_order() const { return static_cast<int>(c_.size()) - 1; }
  cd coeff(int power) const;
  void set_coeff(int power, cd value);

  GPoly& operator+=(const GPoly& rhs);
  GPoly& operator-=(const GPoly& rhs);
  friend GPoly operator+(GPoly a, const GPoly& b) { return a += b; }
  friend GPoly operator-(GPoly a, const GPoly& b) { return a -= b; }
  friend GPoly operator*(const GPoly& a, const GPoly& b);

  GPoly scaled(cd factor) const;
  /// Multiply by g^powers; coefficients pushed past max_order are dropped.
  GPoly shifted(int powers) const;
  GPoly conjugated() const;
  /// Zero every coefficient above `order` (capacity stays the same).
  GPoly truncated(int order) const;
  GPoly widened(int new_max_order) const;

  cd eval(double g) const;
  double max_abs_coeff() const;
  bool negligible(double tol = 1e-15) const;

 private:
  std::vector<cd> c_;  // c_[k] multiplies g^k
};

/// conj(a) * b, the inner-product combination of two amplitudes.
GPoly conj_mul(const GPoly& a, const GPoly& b);

}  // namespace pdcbell
