#include <doctest.h>

#include "pdcbell/gpoly.hpp"
#include "pdcbell/rng.hpp"
#include "test_util.hpp"

using pdcbell::cd;
using pdcbell::GPoly;
using pdcbell::SplitMix64;
using testutil::poly_distance;
using testutil::random_poly;

TEST_CASE("constructors and accessors") {
  GPoly zero(4);
  for (int k = 0; k <= 4; ++k) {
    CHECK(zero.coeff(k) == cd{0.0, 0.0});
  }
  CHECK(zero.max_order() == 4);
  CHECK(zero.negligible());

  const GPoly c = GPoly::constant(3, cd{2.0, -1.0});
  CHECK(c.coeff(0) == cd{2.0, -1.0});
  CHECK(c.coeff(1) == cd{0.0, 0.0});

  const GPoly m = GPoly::monomial(4, 3, cd{0.0, 1.0});
  CHECK(m.coeff(3) == cd{0.0, 1.0});
  CHECK(m.coeff(2) == cd{0.0, 0.0});

  // A monomial beyond the truncation is silently zero.
  CHECK(GPoly::monomial(2, 3, cd{1.0, 0.0}).negligible());

  CHECK(zero.coeff(99) == cd{0.0, 0.0});
  CHECK_THROWS_AS(GPoly(-1), std::invalid_argument);
  GPoly writable(2);
  CHECK_THROWS_AS(writable.set_coeff(3, cd{1.0, 0.0}), std::out_of_range);
}

TEST_CASE("multiplication truncates at max_order") {
  const GPoly g2 = GPoly::monomial(4, 2, cd{1.0, 0.0});
  const GPoly g3 = GPoly::monomial(4, 3, cd{1.0, 0.0});
  CHECK((g2 * g3).negligible());
  CHECK((g2 * g2).coeff(4) == cd{1.0, 0.0});
}

TEST_CASE("ring identities on random polynomials") {
  SplitMix64 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    const GPoly a = random_poly(rng, 4);
    const GPoly b = random_poly(rng, 4);
    const GPoly c = random_poly(rng, 4);
    CHECK(poly_distance(a * b, b * a) < 1e-14);
    CHECK(poly_distance((a * b) * c, a * (b * c)) < 1e-13);
    CHECK(poly_distance(a * (b + c), a * b + a * c) < 1e-13);
  }
}

TEST_CASE("mixed truncation orders are rejected") {
  const GPoly a(2);
  const GPoly b(3);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  GPoly c(2);
  CHECK_THROWS_AS(c += b, std::invalid_argument);
}

TEST_CASE("shift drops overflowing powers") {
  GPoly p(4);
  p.set_coeff(1, cd{1.0, 0.0});
  p.set_coeff(3, cd{2.0, 0.0});
  const GPoly s = p.shifted(2);
  CHECK(s.coeff(3) == cd{1.0, 0.0});
  CHECK(s.coeff(4) == cd{0.0, 0.0});  // power 5 dropped
  CHECK(s.coeff(2) == cd{0.0, 0.0});
  CHECK_THROWS_AS(p.shifted(-1), std::invalid_argument);
}

TEST_CASE("truncation zeroes high powers in place") {
  SplitMix64 rng(99);
  const GPoly p = random_poly(rng, 4);
  const GPoly t = p.truncated(2);
  CHECK(t.max_order() == 4);
  CHECK(t.coeff(2) == p.coeff(2));
  CHECK(t.coeff(3) == cd{0.0, 0.0});
  CHECK(t.coeff(4) == cd{0.0, 0.0});
}

TEST_CASE("widening preserves coefficients and rejects shrinking") {
  SplitMix64 rng(7);
  const GPoly p = random_poly(rng, 2);
  const GPoly w = p.widened(4);
  CHECK(w.max_order() == 4);
  CHECK(w.coeff(2) == p.coeff(2));
  CHECK(w.coeff(4) == cd{0.0, 0.0});
  CHECK_THROWS_AS(p.widened(1), std::invalid_argument);
}

TEST_CASE("evaluation agrees with a manual Horner sum") {
  GPoly p(3);
  p.set_coeff(0, cd{1.0, 0.0});
  p.set_coeff(1, cd{0.0, 2.0});
  p.set_coeff(3, cd{-1.0, 0.5});
  const double g = 0.37;
  const cd expected = cd{1.0, 0.0} + cd{0.0, 2.0} * g +
                      cd{-1.0, 0.5} * g * g * g;
  CHECK(std::abs(p.eval(g) - expected) < 1e-15);
}

TEST_CASE("conj_mul of a polynomial with itself is real") {
  SplitMix64 rng(4242);
  const GPoly p = random_poly(rng, 4);
  const GPoly sq = conj_mul(p, p);
  for (int k = 0; k <= 4; ++k) {
    CHECK(std::abs(sq.coeff(k).imag()) < 1e-14);
  }
  // Constant term is |c0|^2.
  CHECK(sq.coeff(0).real() == doctest::Approx(std::norm(p.coeff(0))));
}
