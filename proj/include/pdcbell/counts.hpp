#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace pdcbell {

struct SettingPair {
  double alpha = 0.0;
  double beta = 0.0;
};

struct ChshSettings {
  double alpha = 0.0;
  double alpha_prime = 0.0;
  double beta = 0.0;
  double beta_prime = 0.0;
};

/// Outcome codes used in counts tables: +1 and -1 are detections at the
/// two output ports, 0 means no detection.
inline constexpr std::array<int, 3> kOutcomeCodes = {+1, -1, 0};

/// Coincidence counts per setting pair, indexed by the outcome codes of the
/// two stations. Setting angles are matched modulo 2*pi within 1e-9.
class CountsTable {
 public:
  struct Block {
    double alpha = 0.0;
    double beta = 0.0;
    // c[i][j]: i indexes Alice's outcome, j Bob's, in kOutcomeCodes order.
    std::array<std::array<std::uint64_t, 3>, 3> c{};
  };

  /// Number of trials behind each setting pair.
  std::uint64_t n_tot() const { return n_tot_; }
  void set_n_tot(std::uint64_t n) { n_tot_ = n; }

  void add(int r, int s, double alpha, double beta, std::uint64_t count);
  std::uint64_t count(int r, int s, double alpha, double beta) const;
  bool has_pair(double alpha, double beta) const;
  /// Trials with both stations firing, i.e. r, s both nonzero.
  std::uint64_t coincidences(double alpha, double beta) const;
  /// All recorded outcomes of the pair (at most n_tot).
  std::uint64_t recorded(double alpha, double beta) const;

  const std::vector<Block>& blocks() const { return blocks_; }

  /// Validate per-pair totals against n_tot.
  void validate() const;

  void write_csv(std::ostream& os) const;
  static CountsTable read_csv(std::istream& is);

 private:
  Block* find(double alpha, double beta);
  const Block* find(double alpha, double beta) const;

  std::vector<Block> blocks_;
  std::uint64_t n_tot_ = 0;
};

/// Circular distance of two angles modulo 2*pi.
double angle_distance(double a, double b);

}  // namespace pdcbell
