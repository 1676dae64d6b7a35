#pragma once

#include <functional>
#include <span>
#include <vector>

#include "discharm/kernels.hpp"

namespace discharm {

// Point of the open unit disc in polar form. Construction validates
// 0 <= r < 1 and finiteness; theta is kept as given (not reduced).
class DiscPoint {
 public:
  DiscPoint(double r, double theta);
  double r() const noexcept { return r_; }
  double theta() const noexcept { return theta_; }
  Complex z() const noexcept;

 private:
  double r_;
  double theta_;
};

// theta |-> value of a boundary function at e^{i theta}. Must be pure:
// quadrature and grid fills may call it from several threads.
using CircleMap = std::function<Complex(double)>;

// Two-sided trigonometric polynomial sum_{|n|<=N} c_n e^{i n t}, stored
// packed with index n+N. real_valued() is detected at construction:
// c_{-n} = conj(c_n) for all n within 1e-12 (absolute, per component).
class FourierSeries {
 public:
  FourierSeries();
  explicit FourierSeries(int degree);
  FourierSeries(int degree, std::vector<Complex> packed);

  int degree() const noexcept { return degree_; }
  Complex coeff(int n) const noexcept;  // zero outside [-N, N]
  void set_coeff(int n, Complex v);     // throws if |n| > N
  bool real_valued() const noexcept { return real_valued_; }
  std::span<const Complex> packed() const noexcept { return c_; }

  // Re-runs the conjugate-symmetry detection (after set_coeff edits).
  void refresh_real_flag();

 private:
  int degree_;
  std::vector<Complex> c_;
  bool real_valued_;
};

FourierSeries add(const FourierSeries& a, const FourierSeries& b);
FourierSeries scaled(const FourierSeries& a, Complex factor);

// One-sided power series sum_{n=0}^{N} a_n z^n (the analytic completions
// and Wirtinger derivative series live here).
class AnalyticSeries {
 public:
  AnalyticSeries();
  AnalyticSeries(int degree, std::vector<Complex> coeffs);  // size degree+1

  int degree() const noexcept { return degree_; }
  Complex coeff(int n) const noexcept;
  std::span<const Complex> coeffs() const noexcept { return a_; }

  Complex evaluate(Complex z) const;  // Horner
  Complex evaluate(const DiscPoint& p) const { return evaluate(p.z()); }

  // View as a two-sided series with vanishing negative part.
  FourierSeries as_two_sided() const;

 private:
  int degree_;
  std::vector<Complex> a_;
};

// Values on the circle grid theta_j = 2*pi*(j + offset)/m at radius r,
// i.e. sum c_n r^{|n|} e^{i n theta_j}. offset 0 is the sample-alignment
// convention, offset 0.5 the quadrature (midpoint) convention. m must be
// a power of two; uses the FFT fold.
std::vector<Complex> circle_grid(const FourierSeries& f, double r, std::size_t m,
                                 double offset);

}  // namespace discharm
