#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <type_traits>
#include <vector>

// Low-level numeric kernels shared by the whole library.
//
// Every reduction goes through pairwise_sum(), which uses a fixed recursion
// tree. Parallel variants fill a term buffer with one slot per index and
// then run the same serial reduction, so results are bit-identical to the
// serial reference paths for any thread count.

namespace discharm {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

bool is_pow2(std::size_t m);

// Pairwise (cascade) summation, leaves of 32 summed linearly.
double pairwise_sum(std::span<const double> v);
Complex pairwise_sum(std::span<const Complex> v);

namespace detail {
void parallel_fill(std::size_t n, void* ctx, void (*fn)(void*, std::size_t));
}

// Fill-then-reduce over n independent terms; OpenMP fill, pairwise reduce.
template <class Term>
double sum_terms(std::size_t n, Term&& term) {
  std::vector<double> buf(n);
  struct Ctx {
    std::vector<double>* buf;
    std::remove_reference_t<Term>* term;
  } ctx{&buf, &term};
  detail::parallel_fill(n, &ctx, [](void* p, std::size_t i) {
    auto* c = static_cast<Ctx*>(p);
    (*c->buf)[i] = (*c->term)(i);
  });
  return pairwise_sum(buf);
}

template <class Term>
Complex sum_terms_c(std::size_t n, Term&& term) {
  std::vector<Complex> buf(n);
  struct Ctx {
    std::vector<Complex>* buf;
    std::remove_reference_t<Term>* term;
  } ctx{&buf, &term};
  detail::parallel_fill(n, &ctx, [](void* p, std::size_t i) {
    auto* c = static_cast<Ctx*>(p);
    (*c->buf)[i] = (*c->term)(i);
  });
  return pairwise_sum(buf);
}

// Serial reference twins (identical buffers and reduction tree).
template <class Term>
double sum_terms_serial(std::size_t n, Term&& term) {
  std::vector<double> buf(n);
  for (std::size_t i = 0; i < n; ++i) buf[i] = term(i);
  return pairwise_sum(buf);
}

template <class Term>
Complex sum_terms_c_serial(std::size_t n, Term&& term) {
  std::vector<Complex> buf(n);
  for (std::size_t i = 0; i < n; ++i) buf[i] = term(i);
  return pairwise_sum(buf);
}

// In-place radix-2 complex FFT. sign = -1: X_k = sum_j a_j e^{-2pi i jk/m};
// sign = +1: the unscaled inverse. m must be a power of two.
void fft_pow2(std::span<Complex> a, int sign);

// Values of sum_{n=-N}^{N} packed[n+N] e^{i n theta_j} on the uniform grid
// theta_j = 2*pi*(j + offset)/m, j = 0..m-1, via coefficient folding and an
// inverse FFT. Exact on the grid (folding is plain aliasing). Requires m a
// power of two.
std::vector<Complex> synthesize_grid(std::span<const Complex> packed, int degree,
                                     std::size_t m, double offset);

// Direct per-point Horner reference for synthesize_grid.
std::vector<Complex> synthesize_grid_serial(std::span<const Complex> packed, int degree,
                                            std::size_t m, double offset);

// Forward DFT of uniform samples, scaled by 1/m: out[k] = (1/m) sum_j s_j w^{-jk}.
std::vector<Complex> analyze_samples(std::span<const Complex> samples);

}  // namespace discharm
