#include "pdcbell/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pdcbell::kernels {

CMat CMat::identity(int n) {
  CMat m(n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = cd{1.0, 0.0};
  }
  return m;
}

void matmul(const CMat& a, const CMat& b, CMat& out, Exec exec) {
  if (a.n != b.n) {
    throw std::invalid_argument("matmul: dimension mismatch");
  }
  const int n = a.n;
  if (out.n != n) {
    out = CMat(n);
  }
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cd acc{0.0, 0.0};
      for (int k = 0; k < n; ++k) {
        acc += a.at(i, k) * b.at(k, j);
      }
      out.at(i, j) = acc;
    }
  }
}

void matvec(const CMat& a, const CVec& x, CVec& out, Exec exec) {
  const int n = a.n;
  if (static_cast<int>(x.size()) != n) {
    throw std::invalid_argument("matvec: dimension mismatch");
  }
  out.assign(x.size(), cd{0.0, 0.0});
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (int i = 0; i < n; ++i) {
    cd acc{0.0, 0.0};
    for (int k = 0; k < n; ++k) {
      acc += a.at(i, k) * x[static_cast<std::size_t>(k)];
    }
    out[static_cast<std::size_t>(i)] = acc;
  }
}

CMat adjoint(const CMat& a) {
  CMat out(a.n);
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.n; ++j) {
      out.at(i, j) = std::conj(a.at(j, i));
    }
  }
  return out;
}

CMat scaled(const CMat& a, cd factor) {
  CMat out = a;
  for (auto& v : out.a) {
    v *= factor;
  }
  return out;
}

double max_abs_diff(const CMat& a, const CMat& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  }
  double m = 0.0;
  for (std::size_t k = 0; k < a.a.size(); ++k) {
    m = std::max(m, std::abs(a.a[k] - b.a[k]));
  }
  return m;
}

double one_norm(const CMat& a) {
  double m = 0.0;
  for (int j = 0; j < a.n; ++j) {
    double col = 0.0;
    for (int i = 0; i < a.n; ++i) {
      col += std::abs(a.at(i, j));
    }
    m = std::max(m, col);
  }
  return m;
}

CMat expm(const CMat& a, Exec exec) {
  const double norm = one_norm(a);
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  }
  const double scale = std::ldexp(1.0, -squarings);
  const CMat b = scaled(a, cd{scale, 0.0});

  CMat sum = CMat::identity(a.n);
  CMat term = CMat::identity(a.n);
  CMat next(a.n);
  for (int k = 1; k <= 64; ++k) {
    matmul(term, b, next, exec);
    std::swap(term, next);
    for (std::size_t idx = 0; idx < term.a.size(); ++idx) {
      term.a[idx] /= static_cast<double>(k);
      sum.a[idx] += term.a[idx];
    }
    if (one_norm(term) < 1e-16) {
      break;
    }
  }
  for (int s = 0; s < squarings; ++s) {
    matmul(sum, sum, next, exec);
    std::swap(sum, next);
  }
  return sum;
}

}  // namespace pdcbell::kernels
