// Benchmark: OpenMP kernels vs the serial reference paths.
// Reports wall time, speedup, and the max deviation between the two results.
// For the sum kernels the deviation is 0 by construction (same reduction
// tree); for slice-vs-pointwise it measures fold accuracy instead.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "discharm/boundary.hpp"
#include "discharm/disc_ops.hpp"
#include "discharm/kernels.hpp"

using namespace discharm;

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename Fn>
double timed(Fn&& fn, int reps) {
  fn();  // warm up
  const double t0 = now_ms();
  for (int i = 0; i < reps; ++i) fn();
  return (now_ms() - t0) / reps;
}

void report(const char* name, double serial_ms, double parallel_ms, double max_dev) {
  std::printf("%-28s serial %9.3f ms   parallel %9.3f ms   speedup %5.2fx   max|delta| %.3g\n",
              name, serial_ms, parallel_ms, serial_ms / parallel_ms, max_dev);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (compiled without OpenMP)\n");
#endif

  // 1. Quadrature-style reduction: mean of |f|^3 over a large midpoint grid.
  {
    const FourierSeries f = preset_series("abs_t", 8191);
    const std::size_t m = 1 << 20;
    const std::vector<Complex> grid = synthesize_grid(f.packed(), f.degree(), m, 0.5);
    auto term = [&grid](std::size_t j) {
      const double a = std::abs(grid[j]);
      return a * a * a;
    };
    double s_val = 0.0, p_val = 0.0;
    const double ts = timed([&] { s_val = sum_terms_serial(m, term); }, 5);
    const double tp = timed([&] { p_val = sum_terms(m, term); }, 5);
    report("grid reduction (M=2^20)", ts, tp, std::abs(s_val - p_val));
  }

  // 2. Whole-circle slice via the FFT fold vs a pointwise loop.
  {
    const FourierSeries f = preset_series("abs_t", 4095);
    const PoissonExtension ext(f);
    const std::size_t m = 1 << 14;
    std::vector<Complex> out_p, out_s(m);
    const double tp = timed([&] { ext.circle_slice(0.97, m, 0.0, out_p); }, 3);
    const double ts = timed(
        [&] {
          for (std::size_t j = 0; j < m; ++j)
            out_s[j] = ext.at(DiscPoint(0.97, kTwoPi * static_cast<double>(j) / m));
        },
        3);
    double dev = 0.0;
    for (std::size_t j = 0; j < m; ++j) dev = std::max(dev, std::abs(out_p[j] - out_s[j]));
    report("circle slice (16k points)", ts, tp, dev);
  }

  // 3. Grid synthesis: FFT fold vs direct Horner.
  {
    const FourierSeries f = preset_series("abs_t", 8191);
    const std::size_t m = 1 << 16;
    std::vector<Complex> out_f, out_h;
    const double tp = timed([&] { out_f = synthesize_grid(f.packed(), f.degree(), m, 0.0); }, 3);
    const double ts =
        timed([&] { out_h = synthesize_grid_serial(f.packed(), f.degree(), m, 0.0); }, 3);
    double dev = 0.0;
    for (std::size_t j = 0; j < m; ++j) dev = std::max(dev, std::abs(out_f[j] - out_h[j]));
    report("grid synthesis (64k)", ts, tp, dev);
  }

  return 0;
}
