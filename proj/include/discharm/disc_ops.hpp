#pragma once

#include <functional>
#include <memory>

#include "discharm/series.hpp"

namespace discharm {

// --- spectral operators on boundary series ---------------------------------

// Harmonic extension P[f](z) = sum c_n r^{|n|} e^{i n theta}.
Complex poisson_extend(const FourierSeries& f, const DiscPoint& z);

// P_+: keep n >= 0. Returns the analytic completion as a power series.
AnalyticSeries riesz_projection(const FourierSeries& f);

// Conjugate-function multiplier c_n -> -i sgn(n) c_n (so the conjugate of a
// real series is real and vanishes at the origin).
FourierSeries conjugate_function(const FourierSeries& f);

// Boundary trace of the conjugate extension; same multiplier as above.
FourierSeries hilbert_transform(const FourierSeries& f);

// Conjugate Poisson kernel Im((1+z)/(1-z)) = 2 r sin(theta) / (1 + r^2 - 2 r cos(theta)).
double conjugate_poisson_kernel(const DiscPoint& z);

// Wirtinger derivative series: f_z = sum_{n>=1} n c_n z^{n-1}. For the
// anti-analytic part, dzbar_series returns B with B_m = (m+1) c_{-(m+1)},
// so that f_zbar(z) = B(conj(z)); note |f_zbar| on a circle has the same
// integral means as |B| there.
AnalyticSeries dz_series(const FourierSeries& f);
AnalyticSeries dzbar_series(const FourierSeries& f);

Complex wirtinger_dz(const FourierSeries& f, const DiscPoint& z);
Complex wirtinger_dzbar(const FourierSeries& f, const DiscPoint& z);

struct PolarDerivatives {
  Complex f_theta;
  Complex f_r;      // radial derivative; at r = 0 the series form is used directly
  Complex r_f_r;    // r * f_r, the combination appearing in 2 i z f_z = f_theta + i r f_r
};

PolarDerivatives polar_derivatives(const FourierSeries& f, const DiscPoint& z);

// Coefficients of the boundary function theta -> d/dtheta trace: built from
// the Wirtinger series so the identity with boundary_derivative is exact.
FourierSeries polar_theta_series(const FourierSeries& f);

// Residual of P[phi](z) + i Ptilde[phi](z) = 2 P_+(phi)(z), which requires
// zero mean: throws std::domain_error when |c_0| > 1e-12 (with a nonzero
// mean the right side acquires a -c_0 constant; see README on the sign).
double conjugate_identity_check(const FourierSeries& phi, const DiscPoint& z);

// --- function-on-the-disc abstraction ---------------------------------------

// A complex-valued function on the open disc that can also render a whole
// circle slice at once (radius r, midpoint grid of m points). The default
// slice loops at(); subclasses with spectral structure override it with the
// FFT fold. Implementations must be pure (slices are filled in parallel).
class DiscFunction {
 public:
  virtual ~DiscFunction() = default;
  virtual Complex at(const DiscPoint& p) const = 0;
  virtual void circle_slice(double r, std::size_t m, double offset,
                            std::vector<Complex>& out) const;
};

// P[f] for a boundary series f.
class PoissonExtension final : public DiscFunction {
 public:
  explicit PoissonExtension(FourierSeries boundary);
  Complex at(const DiscPoint& p) const override;
  void circle_slice(double r, std::size_t m, double offset,
                    std::vector<Complex>& out) const override;
  const FourierSeries& boundary() const noexcept { return boundary_; }

 private:
  FourierSeries boundary_;
};

// z -> series(z) for a power series (Riesz projections, f_z, ...).
class AnalyticFunction final : public DiscFunction {
 public:
  explicit AnalyticFunction(AnalyticSeries s);
  Complex at(const DiscPoint& p) const override;
  void circle_slice(double r, std::size_t m, double offset,
                    std::vector<Complex>& out) const override;
  const AnalyticSeries& series() const noexcept { return series_; }

 private:
  AnalyticSeries series_;
  FourierSeries two_sided_;  // cached for the fold
};

// Arbitrary callable (quadrature oracles, closed forms).
class DiscCallable final : public DiscFunction {
 public:
  explicit DiscCallable(std::function<Complex(const DiscPoint&)> fn);
  Complex at(const DiscPoint& p) const override;

 private:
  std::function<Complex(const DiscPoint&)> fn_;
};

}  // namespace discharm
