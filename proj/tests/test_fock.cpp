#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pdcbell/ket_series.hpp"
#include "pdcbell/rng.hpp"
#include "test_util.hpp"

using namespace pdcbell;
using testutil::poly_distance;
using testutil::random_state;

namespace {

Occupation occ(const char* text) { return Occupation::parse(text); }

}  // namespace

TEST_CASE("occupation parse and print round trip") {
  CHECK(occ("1010").str() == "1010");
  CHECK(occ("0000") == Occupation{});
  CHECK(occ("1234").total() == 10);
  CHECK_THROWS_AS(Occupation::parse("123"), std::invalid_argument);
  CHECK_THROWS_AS(Occupation::parse("12345"), std::invalid_argument);
  CHECK_THROWS_AS(Occupation::parse("12a4"), std::invalid_argument);
}

TEST_CASE("station mirror reverses the mode tuple") {
  CHECK(occ("2110").mirrored() == occ("0112"));
  CHECK(occ("1010").mirrored() == occ("0101"));
  CHECK(occ("1100").mirrored() == occ("0011"));
  CHECK(occ("1111").mirrored() == occ("1111"));
}

TEST_CASE("vacuum is a single unit term") {
  const KetSeries vac = KetSeries::vacuum(4);
  CHECK(vac.term_count() == 1);
  CHECK(vac.amplitude(Occupation{}).coeff(0) == cd{1.0, 0.0});
  CHECK(std::abs(vac.norm_squared().coeff(0) - cd{1.0, 0.0}) < 1e-15);
}

TEST_CASE("pair generator ladder values") {
  const KetSeries vac = KetSeries::vacuum(4);
  const KetSeries one = apply_pair_generator(vac, Mode::a1, Mode::b1);
  CHECK(one.term_count() == 1);
  CHECK(one.amplitude(occ("1010")).coeff(0) == cd{1.0, 0.0});

  // G |1010> = 2 |2020> + |0000> on the (a1, b1) pair.
  const KetSeries two = apply_pair_generator(one, Mode::a1, Mode::b1);
  CHECK(two.term_count() == 2);
  CHECK(two.amplitude(occ("2020")).coeff(0) == cd{2.0, 0.0});
  CHECK(two.amplitude(occ("0000")).coeff(0) == cd{1.0, 0.0});

  // G |1100> on (a1, b1) only creates: the b1 slot is empty.
  KetSeries seed(4);
  seed.add_term(occ("1100"), GPoly::constant(4, cd{1.0, 0.0}));
  const KetSeries raised = apply_pair_generator(seed, Mode::a1, Mode::b1);
  CHECK(raised.term_count() == 1);
  CHECK(raised.amplitude(occ("2110")).coeff(0).real() ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  CHECK_THROWS_AS(apply_pair_generator(vac, Mode::a1, Mode::a1),
                  std::invalid_argument);
}

TEST_CASE("creation followed by annihilation scales by n+1") {
  for (int n = 0; n <= 5; ++n) {
    KetSeries state(2);
    Occupation o;
    o[Mode::a1] = n;
    state.add_term(o, GPoly::constant(2, cd{1.0, 0.0}));
    const KetSeries gg = apply_pair_generator(
        apply_pair_generator(state, Mode::a1, Mode::a2), Mode::a1, Mode::a2);
    CHECK(gg.amplitude(o).coeff(0).real() ==
          doctest::Approx(double(n + 1)).epsilon(1e-15));
  }
}

TEST_CASE("phase rotation multiplies by exp(i n theta)") {
  const double alpha = 0.7391;
  KetSeries state(4);
  state.add_term(occ("1010"), GPoly::constant(4, cd{1.0, 0.0}));
  state.add_term(occ("2020"), GPoly::constant(4, cd{1.0, 0.0}));
  state.add_term(occ("0101"), GPoly::constant(4, cd{1.0, 0.0}));

  const KetSeries rotated = apply_phase(state, Mode::a1, alpha);
  CHECK(std::abs(rotated.amplitude(occ("1010")).coeff(0) -
                 std::exp(cd{0.0, alpha})) < 1e-15);
  CHECK(std::abs(rotated.amplitude(occ("2020")).coeff(0) -
                 std::exp(cd{0.0, 2.0 * alpha})) < 1e-15);
  CHECK(rotated.amplitude(occ("0101")).coeff(0) == cd{1.0, 0.0});

  // theta = 0 leaves the sparse map untouched.
  const KetSeries same = apply_phase(state, Mode::a1, 0.0);
  CHECK(poly_distance(same.amplitude(occ("1010")),
                      state.amplitude(occ("1010"))) == 0.0);

  // Phases never change the norm.
  SplitMix64 rng(31337);
  const KetSeries random = random_state(rng, 4, 6);
  const KetSeries randrot = apply_phase(random, Mode::b2, 2.13);
  CHECK(poly_distance(random.norm_squared(), randrot.norm_squared()) < 1e-13);

  CHECK_THROWS_AS(apply_phase(state, Mode::a1, std::nan("")),
                  std::invalid_argument);
}

TEST_CASE("pair generator is Hermitian on random states") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const KetSeries u = random_state(rng, 4, 5);
    const KetSeries v = random_state(rng, 4, 5);
    const GPoly lhs = inner_product(u, apply_pair_generator(v, Mode::a2, Mode::b1));
    const GPoly rhs = inner_product(apply_pair_generator(u, Mode::a2, Mode::b1), v);
    CHECK(poly_distance(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("terms cancelling to zero are pruned") {
  KetSeries state(4);
  const GPoly p = GPoly::monomial(4, 2, cd{0.5, -0.25});
  state.add_term(occ("1111"), p);
  CHECK(state.term_count() == 1);
  state.add_term(occ("1111"), p.scaled(cd{-1.0, 0.0}));
  CHECK(state.term_count() == 0);
  CHECK(state.amplitude(occ("1111")).negligible());
}

TEST_CASE("norm_squared collects conj(amp) * amp") {
  // (1 - g^2)|0000> + i g e^{i 0.3}|1010>:
  // norm^2 = 1 - g^2 + g^4 through fourth order.
  KetSeries state(4);
  GPoly vac(4);
  vac.set_coeff(0, cd{1.0, 0.0});
  vac.set_coeff(2, cd{-1.0, 0.0});
  state.add_term(occ("0000"), vac);
  state.add_term(occ("1010"),
                 GPoly::monomial(4, 1, cd{0.0, 1.0} * std::exp(cd{0.0, 0.3})));
  const GPoly n2 = state.norm_squared();
  CHECK(std::abs(n2.coeff(0) - cd{1.0, 0.0}) < 1e-15);
  CHECK(std::abs(n2.coeff(1)) < 1e-15);
  CHECK(std::abs(n2.coeff(2) - cd{-1.0, 0.0}) < 1e-15);
  CHECK(std::abs(n2.coeff(3)) < 1e-15);
  CHECK(std::abs(n2.coeff(4) - cd{1.0, 0.0}) < 1e-15);
}

TEST_CASE("evaluation at numeric g") {
  KetSeries state(4);
  GPoly vac(4);
  vac.set_coeff(0, cd{1.0, 0.0});
  vac.set_coeff(2, cd{-1.0, 0.0});
  state.add_term(occ("0000"), vac);
  state.add_term(occ("1010"), GPoly::monomial(4, 1, cd{0.0, 1.0}));

  const double g = 0.1;
  const Ket ket = state.evaluate(g);
  CHECK(ket.amps.at(occ("0000")) == cd{1.0 - g * g, 0.0});
  CHECK(ket.amps.at(occ("1010")) == cd{0.0, g});
  CHECK(ket.norm_squared() ==
        doctest::Approx(std::norm(cd{1.0 - g * g, 0.0}) + g * g));

  // g = 0 keeps only the vacuum.
  const Ket at_zero = state.evaluate(0.0);
  CHECK(at_zero.amps.size() == 1);
  CHECK(at_zero.amps.at(occ("0000")) == cd{1.0, 0.0});
}

TEST_CASE("inner product is conjugate linear in the bra") {
  KetSeries u(2);
  u.add_term(occ("1010"), GPoly::constant(2, cd{0.0, 2.0}));
  KetSeries v(2);
  v.add_term(occ("1010"), GPoly::constant(2, cd{3.0, 0.0}));
  const GPoly ip = inner_product(u, v);
  CHECK(ip.coeff(0) == cd{0.0, -6.0});
  CHECK_THROWS_AS(inner_product(u, KetSeries::vacuum(3)),
                  std::invalid_argument);
}

TEST_CASE("max_order mismatches and bad occupations are rejected") {
  KetSeries state(4);
  CHECK_THROWS_AS(state.add_term(occ("0000"), GPoly::constant(2, cd{1, 0})),
                  std::invalid_argument);
  Occupation bad;
  bad[Mode::a1] = -1;
  CHECK_THROWS_AS(state.add_term(bad, GPoly::constant(4, cd{1, 0})),
                  std::invalid_argument);
}
