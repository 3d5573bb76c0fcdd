#pragma once

#include <cstddef>
#include <map>

#include "pdcbell/gpoly.hpp"
#include "pdcbell/occupation.hpp"

namespace pdcbell {

/// Number state with plain complex amplitudes: a KetSeries evaluated at a
/// numeric coupling.
struct Ket {
  std::map<Occupation, cd> amps;
  double norm_squared() const;
};

/// Sparse four-mode state whose amplitudes are truncated polynomials in g.
/// Terms whose polynomial falls below 1e-15 in every coefficient are pruned,
/// so equal states have identical sparse maps.
class KetSeries {
 public:
  explicit KetSeries(int max_order);
  static KetSeries vacuum(int max_order = 4);

  int max_order() const { return max_order_; }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Occupation, GPoly>& terms() const { return terms_; }

  /// Amplitude polynomial of `occ`; the zero polynomial when absent.
  GPoly amplitude(const Occupation& occ) const;
  /// Accumulate `poly` onto the amplitude of `occ`, pruning negligible sums.
  void add_term(const Occupation& occ, const GPoly& poly);
  KetSeries widened(int new_max_order) const;

  /// sum_occ conj(amp) * amp. The result must be real: an imaginary residue
  /// below 1e-12 is dropped, anything larger throws.
  GPoly norm_squared() const;
  Ket evaluate(double g) const;

 private:
  std::map<Occupation, GPoly> terms_;
  int max_order_;
};

/// Apply the pair generator G = x_i^dag x_j^dag + x_i x_j of modes (i, j).
/// G |.. n_i .. n_j ..> = sqrt((n_i+1)(n_j+1)) |.. n_i+1 .. n_j+1 ..>
///                      + sqrt(n_i n_j)         |.. n_i-1 .. n_j-1 ..>.
KetSeries apply_pair_generator(const KetSeries& state, Mode i, Mode j);

/// Multiply every term by exp(i n_mode theta).
KetSeries apply_phase(const KetSeries& state, Mode mode, double theta);

/// <bra|ket> with the bra amplitudes conjugated.
GPoly inner_product(const KetSeries& bra, const KetSeries& ket);

}  // namespace pdcbell
