// Timing comparison between the serial reference kernels and the OpenMP
// versions, plus the two workloads built on them. Wall times only; the
// bit-identity of serial and parallel results is covered by the unit tests.

#include <chrono>
#include <cstdio>
#include <numbers>
#include <vector>

#include "pdcbell/kernels.hpp"
#include "pdcbell/lhv.hpp"
#include "pdcbell/occupation.hpp"
#include "pdcbell/oracle.hpp"

using namespace pdcbell;
using kernels::CMat;
using kernels::CVec;
using kernels::Exec;

namespace {

template <typename F>
double time_best_of(int repeats, F&& body) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    best = std::min(best, dt);
  }
  return best;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-28s %10.3f ms %10.3f ms %8.2fx\n", name, serial * 1e3,
              parallel * 1e3, serial / parallel);
}

CMat random_matrix(int n) {
  CMat m(n);
  unsigned state = 12345u;
  for (auto& v : m.a) {
    state = state * 1664525u + 1013904223u;
    const double re = static_cast<double>(state >> 8) / double(1u << 24) - 0.5;
    state = state * 1664525u + 1013904223u;
    const double im = static_cast<double>(state >> 8) / double(1u << 24) - 0.5;
    v = {re * 0.01, im * 0.01};
  }
  return m;
}

}  // namespace

int main() {
  std::printf("%-28s %13s %13s %9s\n", "workload", "serial", "parallel",
              "speedup");

  {
    const CMat a = random_matrix(343);
    const CMat b = random_matrix(343);
    CMat out(343);
    const double s = time_best_of(
        3, [&] { kernels::matmul(a, b, out, Exec::serial); });
    const double p = time_best_of(
        3, [&] { kernels::matmul(a, b, out, Exec::parallel); });
    row("matmul 343x343", s, p);
  }

  {
    const CMat a = random_matrix(2401);
    CVec x(2401, {0.3, -0.1});
    CVec out(2401);
    const double s = time_best_of(
        5, [&] { kernels::matvec(a, x, out, Exec::serial); });
    const double p = time_best_of(
        5, [&] { kernels::matvec(a, x, out, Exec::parallel); });
    row("matvec 2401x2401", s, p);
  }

  {
    const CMat a = random_matrix(343);
    const double s =
        time_best_of(3, [&] { (void)kernels::expm(a, Exec::serial); });
    const double p =
        time_best_of(3, [&] { (void)kernels::expm(a, Exec::parallel); });
    row("expm 343x343", s, p);
  }

  {
    const TruncatedSpace space(8);
    const CMat kern_s = two_mode_squeezer_kernel(8, 0.1, Exec::serial);
    CVec psi(space.dim(), {0.0, 0.0});
    psi[space.index(Occupation::parse("0000"))] = {1.0, 0.0};
    CVec work = psi;
    const double s = time_best_of(5, [&] {
      work = psi;
      apply_two_mode_kernel(kern_s, work, space, Mode::a1, Mode::b1,
                            Exec::serial);
    });
    const double p = time_best_of(5, [&] {
      work = psi;
      apply_two_mode_kernel(kern_s, work, space, Mode::a1, Mode::b1,
                            Exec::parallel);
    });
    row("two-mode apply, cutoff 8", s, p);
  }

  {
    CircuitConfig cfg;
    cfg.g = 0.096;
    cfg.alpha = 0.4;
    cfg.beta = 1.1;
    const double s = time_best_of(
        3, [&] { (void)exact_state(cfg, 6, Exec::serial); });
    const double p = time_best_of(
        3, [&] { (void)exact_state(cfg, 6, Exec::parallel); });
    row("exact state, cutoff 6", s, p);
  }

  {
    const LhvParams params = lhv_params_from_g(0.096);
    const std::vector<SettingPair> pairs = {{0.0, -std::numbers::pi / 4.0}};
    const double s = time_best_of(3, [&] {
      (void)mc_run(LhvModel::base, pairs, params, 2000000, 7, Exec::serial);
    });
    const double p = time_best_of(3, [&] {
      (void)mc_run(LhvModel::base, pairs, params, 2000000, 7, Exec::parallel);
    });
    row("lhv mc, 2e6 samples", s, p);
  }

  return 0;
}
