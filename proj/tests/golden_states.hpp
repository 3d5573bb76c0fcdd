#pragma once

// Hand-derived amplitude tables for the four pump configurations: the
// printed second-order states and the higher-order repair blocks, written
// out term by term. The builders under test must reproduce these exactly,
// so nothing here may come from the library's own composition code.

#include <complex>
#include <map>
#include <string>

namespace golden {

using cd = std::complex<double>;

// occupation string -> (power of g -> coefficient)
using CoeffTable = std::map<std::string, std::map<int, cd>>;

inline CoeffTable state_coeffs(bool alice_on, bool bob_on, double alpha,
                               double beta, bool corrected) {
  const cd i{0.0, 1.0};
  const cd ea = std::exp(i * alpha);
  const cd eb = std::exp(i * beta);
  const cd ed = std::exp(i * (alpha + beta));
  const double r2 = std::sqrt(2.0);

  CoeffTable t;
  if (!alice_on && !bob_on) {
    t["0000"] = {{0, 1.0}, {2, -1.0}};
    t["1010"] = {{1, i * ea}};
    t["0101"] = {{1, i * eb}};
    t["2020"] = {{2, -ea * ea}};
    t["0202"] = {{2, -eb * eb}};
    t["1111"] = {{2, -ed}};
    if (corrected) {
      t["0000"][4] = 2.0 / 3.0;
      t["1010"][3] = -i * (4.0 / 3.0) * ea;
      t["0101"][3] = -i * (4.0 / 3.0) * eb;
    }
  } else if (alice_on && !bob_on) {
    t["0000"] = {{0, 1.0}, {2, -1.5}};
    t["1100"] = {{1, i}};
    t["1010"] = {{1, i * ea}};
    t["0101"] = {{1, i * eb}};
    t["2110"] = {{2, -r2 * ea}};
    t["2020"] = {{2, -ea * ea}};
    t["1201"] = {{2, -r2 * eb}};
    t["0202"] = {{2, -eb * eb}};
    t["1111"] = {{2, -ed}};
    t["2200"] = {{2, -1.0}};
    if (corrected) {
      t["0000"][4] = 11.0 / 8.0;
      t["1010"][3] = -i * (7.0 / 3.0) * ea;
      t["0101"][3] = -i * (7.0 / 3.0) * eb;
      t["1100"][3] = -i * (11.0 / 6.0);
    }
  } else if (!alice_on && bob_on) {
    t["0000"] = {{0, 1.0}, {2, -1.5}};
    t["0011"] = {{1, i}};
    t["1010"] = {{1, i * ea}};
    t["0101"] = {{1, i * eb}};
    t["1021"] = {{2, -r2 * ea}};
    t["2020"] = {{2, -ea * ea}};
    t["0112"] = {{2, -r2 * eb}};
    t["0202"] = {{2, -eb * eb}};
    t["1111"] = {{2, -ed}};
    t["0022"] = {{2, -1.0}};
    if (corrected) {
      t["0000"][4] = 11.0 / 8.0;
      t["1010"][3] = -i * (7.0 / 3.0) * ea;
      t["0101"][3] = -i * (7.0 / 3.0) * eb;
      t["0011"][3] = -i * (11.0 / 6.0);
    }
  } else {
    t["0000"] = {{0, 1.0}, {2, -2.0}};
    t["1100"] = {{1, i}};
    t["0011"] = {{1, i}};
    t["1010"] = {{1, i * ea}};
    t["0101"] = {{1, i * eb}};
    t["2200"] = {{2, -1.0}};
    t["0022"] = {{2, -1.0}};
    t["2020"] = {{2, -ea * ea}};
    t["0202"] = {{2, -eb * eb}};
    t["1111"] = {{2, -(cd{1.0, 0.0} + ed)}};
    t["2110"] = {{2, -r2 * ea}};
    t["1021"] = {{2, -r2 * ea}};
    t["1201"] = {{2, -r2 * eb}};
    t["0112"] = {{2, -r2 * eb}};
    if (corrected) {
      t["0000"][4] = cd{7.0 / 3.0, 0.0} + ed;
      t["1010"][3] = -i * (10.0 / 3.0) * ea;
      t["0101"][3] = -i * (10.0 / 3.0) * eb;
      t["1100"][3] = -i * (cd{7.0 / 3.0, 0.0} + ed);
      t["0011"][3] = -i * (cd{7.0 / 3.0, 0.0} + ed);
    }
  }
  return t;
}

}  // namespace golden
