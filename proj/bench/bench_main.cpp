// Timing comparison of the serial reference paths against the OpenMP ones.
// Every pair must also produce bitwise-identical output; a speed win that
// changes results would be a bug, so this doubles as a determinism check.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <omp.h>

#include "gsn/identities.hpp"
#include "gsn/quad_verify.hpp"
#include "gsn/report.hpp"
#include "gsn/special_numbers.hpp"
#include "gsn/sweep.hpp"

using namespace gsn;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

bool same_reports(const std::vector<VerificationReport>& a,
                  const std::vector<VerificationReport>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].expected != b[i].expected || a[i].computed != b[i].computed ||
        a[i].abs_error != b[i].abs_error || a[i].passed != b[i].passed)
      return false;
  }
  return true;
}

void row(const char* name, double serial_ms, double parallel_ms, bool identical) {
  std::printf("%-34s %10.1f ms %10.1f ms   %s\n", name, serial_ms, parallel_ms,
              identical ? "identical" : "DIFFERENT");
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", omp_get_max_threads());
  std::printf("%-34s %13s %13s   %s\n", "benchmark", "serial", "parallel", "results");

  {
    // Extended-precision quadrature of one stiff integrand; the parallel flag
    // switches the node evaluation inside each refinement level.
    QuadratureOptions ser;
    ser.parallel = false;
    QuadratureOptions par;
    par.parallel = true;
    const int reps = 5;
    verify_gumbel_bernoulli_quadrature(6, 1e-18, PrecisionMode::extended, ser);  // warm caches
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rs;
    for (int i = 0; i < reps; ++i)
      rs = verify_gumbel_bernoulli_quadrature(6, 1e-18, PrecisionMode::extended, ser);
    const double t_ser = ms_since(t0) / reps;
    t0 = std::chrono::steady_clock::now();
    VerificationReport rp;
    for (int i = 0; i < reps; ++i)
      rp = verify_gumbel_bernoulli_quadrature(6, 1e-18, PrecisionMode::extended, par);
    const double t_par = ms_since(t0) / reps;
    row("quadrature nodes (extended, k=6)", t_ser, t_par,
        rs.computed == rp.computed && rs.abs_error == rp.abs_error);
  }

  {
    // Exact rational sweep: the expensive part is the large-k Gamma-moment
    // double sum. Number caches are prewarmed so both runs time the same work.
    const long k_max = 120;
    stirling_row(k_max);
    bernoulli(2 * k_max);
    auto job = [](long i) { return verify_gumbel_bernoulli(i + 1); };
    auto t0 = std::chrono::steady_clock::now();
    const auto ser = run_indexed(k_max, job, false);
    const double t_ser = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    const auto par = run_indexed(k_max, job, true);
    const double t_par = ms_since(t0);
    row("exact identity sweep (k <= 120)", t_ser, t_par, same_reports(ser, par));
  }

  {
    // Sweep of double-precision derivative integrals; parallelism sits at the
    // sweep level while each integral runs its nodes serially.
    const std::vector<double> qs = {0.5, 1.0, 2.0}, cs = {0.5, 1.0, 3.0}, us = {1.0, 2.0, 5.0};
    std::vector<std::pair<GompertzParams, long>> jobs;
    for (double q : qs)
      for (double c : cs)
        for (double u : us)
          for (long k = 1; k <= 4; ++k) jobs.push_back({GompertzParams{q, c, u}, k});
    QuadratureOptions inner;
    inner.parallel = false;
    auto job = [&](long i) {
      const auto& [p, k] = jobs[static_cast<size_t>(i)];
      return verify_general_derivative_integral(k, p, 1e-8, PrecisionMode::double_precision,
                                                inner);
    };
    auto t0 = std::chrono::steady_clock::now();
    const auto ser = run_indexed(static_cast<long>(jobs.size()), job, false);
    const double t_ser = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    const auto par = run_indexed(static_cast<long>(jobs.size()), job, true);
    const double t_par = ms_since(t0);
    row("derivative integral grid (double)", t_ser, t_par, same_reports(ser, par));
  }

  return 0;
}
