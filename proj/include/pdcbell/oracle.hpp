#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pdcbell/kernels.hpp"
#include "pdcbell/occupation.hpp"
#include "pdcbell/perturbation.hpp"

namespace pdcbell {

/// Four-mode Fock space with at most `cutoff` photons per mode. Dense
/// indices are mixed radix over (a1, a2, b1, b2), a1 slowest.
struct TruncatedSpace {
  int cutoff;

  explicit TruncatedSpace(int cutoff_);
  int levels() const { return cutoff + 1; }
  int dim() const;
  int stride(Mode m) const;
  int index(const Occupation& occ) const;
  Occupation occupation(int index) const;
};

/// Dense operator over a TruncatedSpace.
struct DenseOperator {
  TruncatedSpace space;
  kernels::CMat m;
};

/// exp(ig (x^dag y^dag + x y)) on one mode pair, as a dense
/// (cutoff+1)^2-dimensional matrix. Exactly unitary on the truncated pair
/// space because the exponent is Hermitian there.
kernels::CMat two_mode_squeezer_kernel(int cutoff, double g,
                                       kernels::Exec exec = kernels::Exec::parallel);

/// The kernel lifted to the full four-mode space (identity on spectators).
DenseOperator exact_squeezer(const TruncatedSpace& space, Mode i, Mode j,
                             double g,
                             kernels::Exec exec = kernels::Exec::parallel);

/// Apply a pair kernel to the state vector in place, contracting the two
/// designated mode slots and leaving spectators untouched.
void apply_two_mode_kernel(const kernels::CMat& kern, kernels::CVec& psi,
                           const TruncatedSpace& space, Mode i, Mode j,
                           kernels::Exec exec = kernels::Exec::parallel);

/// psi[occ] *= exp(i n_mode theta).
void apply_phase_rotation(kernels::CVec& psi, const TruncatedSpace& space,
                          Mode mode, double theta);

struct ExactStateResult {
  TruncatedSpace space;
  kernels::CVec psi;
  double norm_error;     // | <psi|psi> - 1 |
  double boundary_mass;  // probability on occupations touching the cutoff
};

/// Circuit evolution without perturbative truncation (exact on the
/// truncated space). Throws when the norm drifts beyond 1e-9 or more than
/// 1e-6 of the probability mass sits on the cutoff boundary; both indicate
/// the cutoff is too small for the requested coupling.
ExactStateResult exact_state(const CircuitConfig& config, int cutoff,
                             kernels::Exec exec = kernels::Exec::parallel);

double exact_probability(const CircuitConfig& config, std::string_view label,
                         int cutoff);
EventProbabilities exact_event_probabilities(const CircuitConfig& config,
                                             int cutoff);
EventProbabilities event_probabilities_of_vector(const kernels::CVec& psi,
                                                 const TruncatedSpace& space);

/// Closed-form amplitude of |n,n> for a single two-mode squeezer acting on
/// the pair vacuum: (i tanh g)^n / cosh g.
cd two_mode_squeezed_vacuum_amplitude(double g, int n);

struct ConvergenceRow {
  double g;
  std::string event;
  double exact;
  double perturbative;
  double abs_err;
};

struct ConvergenceReport {
  int order = 2;
  bool corrected = true;
  std::vector<ConvergenceRow> rows;
  /// Fitted slope of log err vs log g per event; NaN when fewer than two
  /// points rise above the noise floor (1e-14).
  std::map<std::string, double> slopes;
};

/// Compare perturbative event probabilities (build order `order`, working
/// truncation) against the exact engine across `g_list`.
ConvergenceReport convergence_scan(const CircuitConfig& config_template,
                                   const std::vector<double>& g_list,
                                   int order, int cutoff = 6);

/// Tr(rho_A^2) of Alice's two-mode reduction of an exact state.
double reduced_purity_alice(const ExactStateResult& state);

}  // namespace pdcbell
