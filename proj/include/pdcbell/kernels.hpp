#pragma once

#include <complex>
#include <vector>

namespace pdcbell::kernels {

using cd = std::complex<double>;
using CVec = std::vector<cd>;

/// Dense square complex matrix, row major.
struct CMat {
  int n = 0;
  std::vector<cd> a;

  CMat() = default;
  explicit CMat(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_) {}

  cd& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  cd at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  static CMat identity(int n);
};

/// Execution policy of the dense kernels. `serial` is the reference
/// implementation; `parallel` uses OpenMP and produces bit-identical
/// results (every output element is reduced in a fixed serial order).
enum class Exec { serial, parallel };

void matmul(const CMat& a, const CMat& b, CMat& out, Exec exec);
void matvec(const CMat& a, const CVec& x, CVec& out, Exec exec);
CMat adjoint(const CMat& a);
CMat scaled(const CMat& a, cd factor);
double max_abs_diff(const CMat& a, const CMat& b);
double one_norm(const CMat& a);

/// exp(a): scaling and squaring around a Taylor core that runs until the
/// term one-norm falls below 1e-16.
CMat expm(const CMat& a, Exec exec = Exec::parallel);

}  // namespace pdcbell::kernels
