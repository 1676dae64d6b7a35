#pragma once

#include <optional>
#include <string>

#include "discharm/disc_ops.hpp"
#include "discharm/series.hpp"

namespace discharm {

// L^p exponent, p in [1, inf]. infinity() gives the sup-norm endpoint.
class Exponent {
 public:
  explicit Exponent(double p);
  static Exponent infinity();

  double p() const noexcept { return p_; }
  bool is_inf() const noexcept { return inf_; }
  Exponent conjugate() const;  // q with 1/p + 1/q = 1
  double q_value() const;      // conjugate as double (inf -> HUGE_VAL)

 private:
  Exponent(double p, bool inf) : p_(p), inf_(inf) {}
  double p_;
  bool inf_;
};

enum class NormMethod { ExactSpectral, Quadrature, GridSup };

struct NormValue {
  double value = 0.0;
  NormMethod method = NormMethod::Quadrature;
  double error_bound = 0.0;   // |M panels - M/2 panels| for quadrature;
                              // |quadrature - Parseval| when p = 2 spectral
                              // data makes the exact value available
  std::size_t panels = 0;
  bool lower_bound_only = false;  // grid-sup norms underestimate the sup
  bool divergent = false;         // Bergman outer-panel domination

  std::string method_name() const;
};

// Normalized circle norm ((1/2pi) int |phi|^p)^{1/p}. The series overload
// renders the midpoint grid with the FFT fold; p = inf takes a grid max on
// the aligned grid (flagged lower bound). M must be a power of two.
NormValue circle_lp_norm(const FourierSeries& phi, const Exponent& p, std::size_t panels);
NormValue circle_lp_norm(const CircleMap& phi, const Exponent& p, std::size_t panels);

// M_p(r, f) over the midpoint angular grid. For PoissonExtension /
// AnalyticFunction data at p = 2 the Parseval value is computed as well and
// the difference stored in error_bound.
NormValue integral_mean(const DiscFunction& f, double r, const Exponent& p, std::size_t panels);

// Grid sup of M_p(r, f) over an increasing radii grid (lower bound for the
// Hardy norm). Monotonicity in r is asserted (1e-8 relative dips allowed);
// a violation means the quadrature is under-resolved.
NormValue hardy_norm(const DiscFunction& f, const Exponent& p, std::span<const double> radii,
                     std::size_t panels);

std::vector<double> default_hardy_radii();  // 1 - 2^{-k}, k = 1..12

// Bergman norm (2 int_0^1 r M_p^p dr)^{1/p}: composite Gauss-Legendre in r
// with panels split at 1 - 2^{-j}, j <= 10 (nodes_per_panel each), midpoint
// trapezoid in theta. f == 1 gives exactly 1. p = inf delegates to the
// hardy grid sup. Sets divergent when the outermost radial panel carries
// more than half the mass.
NormValue bergman_norm(const DiscFunction& f, const Exponent& p, int nodes_per_panel,
                       std::size_t angular_panels);

// I_a(z) = (1/2pi) int dt / |1 - z e^{-it}|^{a+1}, a > 0.
double kernel_moment(double a, const DiscPoint& z, std::size_t panels);

// The a = 0 member: (1/2pi) int dt / |1 - z e^{-it}| (depends only on |z|).
double kernel_moment_zero(double r, std::size_t panels);

// Upper bound Gamma(a) / Gamma(a/2 + 1/2)^2 * (1 - |z|^2)^{-a}.
double kernel_moment_bound(double a, double r);

// Sharp constants: A_p = csc(pi/p) (1 < p < inf) and
// C_p = (Gamma(q-1) / Gamma(q/2)^2)^{1/q} with q the conjugate exponent.
double riesz_constant(const Exponent& p);
double pointwise_constant(const Exponent& p);

// Exact Parseval forms for spectral data.
double l2_norm_parseval(const FourierSeries& phi);                 // circle norm
double mean2_parseval(const FourierSeries& phi, double r);         // M_2(r, P[phi])
double mean2_parseval(const AnalyticSeries& a, double r);          // M_2(r, a)

}  // namespace discharm
