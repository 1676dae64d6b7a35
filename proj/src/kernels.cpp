#include "discharm/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace discharm {

bool is_pow2(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

namespace {

constexpr std::size_t kLeaf = 32;

template <class T>
T pairwise_impl(const T* v, std::size_t n) {
  if (n <= kLeaf) {
    T s{};
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  // Split at the largest power of two below n so the tree shape depends
  // only on n, never on how the buffer was produced.
  std::size_t half = std::size_t{1} << (63 - static_cast<std::size_t>(__builtin_clzll(n - 1)));
  return pairwise_impl(v, half) + pairwise_impl(v + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> v) {
  return v.empty() ? 0.0 : pairwise_impl(v.data(), v.size());
}

Complex pairwise_sum(std::span<const Complex> v) {
  return v.empty() ? Complex{} : pairwise_impl(v.data(), v.size());
}

namespace detail {

void parallel_fill(std::size_t n, void* ctx, void (*fn)(void*, std::size_t)) {
  // Each slot is written exactly once; safe for any thread count. Term
  // callbacks must be pure. An exception in a callback is captured and
  // rethrown after the loop completes.
  std::exception_ptr err = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      fn(ctx, static_cast<std::size_t>(i));
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(discharm_fill_err)
#endif
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace detail

void fft_pow2(std::span<Complex> a, int sign) {
  const std::size_t m = a.size();
  if (!is_pow2(m)) throw std::invalid_argument("fft_pow2: length must be a power of two");
  if (sign != 1 && sign != -1) throw std::invalid_argument("fft_pow2: sign must be +-1");
  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < m; ++i) {
    std::size_t bit = m >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= m; len <<= 1) {
    const double ang = sign * kTwoPi / static_cast<double>(len);
    for (std::size_t i = 0; i < m; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        // Twiddles from std::polar per butterfly: slower than a recurrence
        // but free of accumulated drift.
        const Complex w = std::polar(1.0, ang * static_cast<double>(k));
        const Complex u = a[i + k];
        const Complex v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

std::vector<Complex> synthesize_grid(std::span<const Complex> packed, int degree,
                                     std::size_t m, double offset) {
  if (degree < 0) throw std::invalid_argument("synthesize_grid: negative degree");
  if (packed.size() != static_cast<std::size_t>(2 * degree + 1))
    throw std::invalid_argument("synthesize_grid: packed size != 2*degree+1");
  if (!is_pow2(m)) throw std::invalid_argument("synthesize_grid: m must be a power of two");
  std::vector<Complex> bins(m, Complex{});
  const std::ptrdiff_t mm = static_cast<std::ptrdiff_t>(m);
  for (int n = -degree; n <= degree; ++n) {
    std::ptrdiff_t k = static_cast<std::ptrdiff_t>(n) % mm;
    if (k < 0) k += mm;
    // e^{i n theta_j} = e^{i n 2pi offset/m} * e^{2pi i (n mod m) j / m}.
    const Complex phase = std::polar(1.0, kTwoPi * static_cast<double>(n) * offset / static_cast<double>(m));
    bins[static_cast<std::size_t>(k)] += packed[static_cast<std::size_t>(n + degree)] * phase;
  }
  fft_pow2(bins, +1);
  return bins;
}

std::vector<Complex> synthesize_grid_serial(std::span<const Complex> packed, int degree,
                                            std::size_t m, double offset) {
  if (degree < 0) throw std::invalid_argument("synthesize_grid_serial: negative degree");
  if (packed.size() != static_cast<std::size_t>(2 * degree + 1))
    throw std::invalid_argument("synthesize_grid_serial: packed size != 2*degree+1");
  std::vector<Complex> out(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double theta = kTwoPi * (static_cast<double>(j) + offset) / static_cast<double>(m);
    const Complex w = std::polar(1.0, theta);
    const Complex wb = std::conj(w);
    // Two one-sided Horner passes: n >= 0 in w, n < 0 in conj(w).
    Complex pos{};
    for (int n = degree; n >= 1; --n) pos = (pos + packed[static_cast<std::size_t>(n + degree)]) * w;
    Complex neg{};
    for (int n = -degree; n <= -1; ++n) neg = (neg + packed[static_cast<std::size_t>(n + degree)]) * wb;
    out[j] = pos + neg + packed[static_cast<std::size_t>(degree)];
  }
  return out;
}

std::vector<Complex> analyze_samples(std::span<const Complex> samples) {
  const std::size_t m = samples.size();
  if (!is_pow2(m)) throw std::invalid_argument("analyze_samples: sample count must be a power of two");
  std::vector<Complex> a(samples.begin(), samples.end());
  fft_pow2(a, -1);
  const double inv = 1.0 / static_cast<double>(m);
  for (auto& x : a) x *= inv;
  return a;
}

}  // namespace discharm
