#include <doctest.h>

#include <cmath>
#include <complex>

#include "pdcbell/kernels.hpp"
#include "pdcbell/rng.hpp"
#include "test_util.hpp"

using namespace pdcbell::kernels;
using pdcbell::SplitMix64;

namespace {

CMat random_matrix(SplitMix64& rng, int n) {
  CMat m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = testutil::random_complex(rng);
    }
  }
  return m;
}

CVec random_vector(SplitMix64& rng, int n) {
  CVec v(static_cast<std::size_t>(n));
  for (auto& x : v) {
    x = testutil::random_complex(rng);
  }
  return v;
}

double max_abs_diff_vec(const CVec& a, const CVec& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

}  // namespace

TEST_CASE("identity and adjoint behave") {
  const CMat id = CMat::identity(3);
  CHECK(id.at(0, 0) == cd{1.0, 0.0});
  CHECK(id.at(0, 1) == cd{0.0, 0.0});

  SplitMix64 rng(7);
  const CMat m = random_matrix(rng, 4);
  const CMat mdd = adjoint(adjoint(m));
  CHECK(max_abs_diff(m, mdd) == 0.0);
  CHECK(adjoint(m).at(1, 3) == std::conj(m.at(3, 1)));
}

TEST_CASE("matmul matches a hand-computed product") {
  CMat a(2);
  a.at(0, 0) = {1.0, 0.0};
  a.at(0, 1) = {0.0, 1.0};
  a.at(1, 0) = {2.0, 0.0};
  a.at(1, 1) = {0.0, 0.0};
  CMat b(2);
  b.at(0, 0) = {0.0, 0.0};
  b.at(0, 1) = {1.0, 0.0};
  b.at(1, 0) = {0.0, -1.0};
  b.at(1, 1) = {3.0, 0.0};
  CMat out;
  matmul(a, b, out, Exec::serial);
  CHECK(out.at(0, 0) == cd{1.0, 0.0});
  CHECK(out.at(0, 1) == cd{1.0, 3.0});
  CHECK(out.at(1, 0) == cd{0.0, 0.0});
  CHECK(out.at(1, 1) == cd{2.0, 0.0});
}

TEST_CASE("parallel kernels are bit-identical to the serial reference") {
  SplitMix64 rng(99);
  for (const int n : {1, 5, 17, 64}) {
    const CMat a = random_matrix(rng, n);
    const CMat b = random_matrix(rng, n);
    const CVec x = random_vector(rng, n);

    CMat ms, mp;
    matmul(a, b, ms, Exec::serial);
    matmul(a, b, mp, Exec::parallel);
    CHECK(max_abs_diff(ms, mp) == 0.0);

    CVec vs, vp;
    matvec(a, x, vs, Exec::serial);
    matvec(a, x, vp, Exec::parallel);
    CHECK(max_abs_diff_vec(vs, vp) == 0.0);

    const CMat es = expm(scaled(a, cd{0.1, 0.0}), Exec::serial);
    const CMat ep = expm(scaled(a, cd{0.1, 0.0}), Exec::parallel);
    CHECK(max_abs_diff(es, ep) == 0.0);
  }
}

TEST_CASE("expm of zero is the identity") {
  const CMat z(6);
  const CMat e = expm(z);
  CHECK(max_abs_diff(e, CMat::identity(6)) == 0.0);
}

TEST_CASE("expm reproduces a closed-form rotation") {
  // exp(i t X) on the Pauli X matrix is cos(t) I + i sin(t) X.
  const double t = 1.234;
  CMat h(2);
  h.at(0, 1) = {0.0, t};
  h.at(1, 0) = {0.0, t};
  const CMat e = expm(h);
  CMat expect(2);
  expect.at(0, 0) = {std::cos(t), 0.0};
  expect.at(1, 1) = {std::cos(t), 0.0};
  expect.at(0, 1) = {0.0, std::sin(t)};
  expect.at(1, 0) = {0.0, std::sin(t)};
  CHECK(max_abs_diff(e, expect) < 1e-14);
}

TEST_CASE("expm of an anti-Hermitian matrix is unitary") {
  SplitMix64 rng(4242);
  const CMat m = random_matrix(rng, 12);
  // (m - m^dag) is anti-Hermitian, so its exponential is unitary.
  CMat anti(12);
  const CMat md = adjoint(m);
  for (int i = 0; i < 12; ++i) {
    for (int j = 0; j < 12; ++j) {
      anti.at(i, j) = m.at(i, j) - md.at(i, j);
    }
  }
  const CMat u = expm(anti);
  CMat prod;
  matmul(adjoint(u), u, prod, Exec::parallel);
  CHECK(max_abs_diff(prod, CMat::identity(12)) < 1e-12);
}

TEST_CASE("one_norm is the maximal column sum") {
  CMat m(2);
  m.at(0, 0) = {3.0, 4.0};
  m.at(1, 0) = {0.0, 1.0};
  m.at(0, 1) = {1.0, 0.0};
  m.at(1, 1) = {1.0, 0.0};
  CHECK(one_norm(m) == doctest::Approx(6.0).epsilon(1e-15));
}
