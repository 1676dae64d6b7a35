#include "discharm/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace discharm {

namespace {

void check_oracle_args(const CircleMap& phi, const DiscPoint& z, std::size_t panels) {
  if (!phi) throw std::invalid_argument("oracle: empty circle evaluator");
  if (panels < 4) throw std::invalid_argument("oracle: need at least 4 panels");
  if (z.r() > kOracleMaxRadius)
    throw std::domain_error("oracle: r > 1 - 1e-6; kernel peak unresolvable, use the spectral path");
}

// (1/2pi) sum over the uniform grid == trapezoid rule on a 2pi-periodic
// integrand. Kernel is supplied per node.
template <class Kernel>
Complex periodic_trapezoid(const CircleMap& phi, std::size_t m, Kernel&& kernel) {
  return sum_terms_c(m, [&](std::size_t j) {
    const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
    return kernel(t) * phi(t);
  }) / static_cast<double>(m);
}

template <class Kernel>
OracleResult doubled(const CircleMap& phi, std::size_t m, Kernel&& kernel) {
  const Complex v1 = periodic_trapezoid(phi, m, kernel);
  const Complex v2 = periodic_trapezoid(phi, 2 * m, kernel);
  return {v1, std::abs(v2 - v1)};
}

}  // namespace

OracleResult poisson_quadrature_oracle(const CircleMap& phi, const DiscPoint& z, std::size_t panels) {
  check_oracle_args(phi, z, panels);
  const double r = z.r();
  const double theta = z.theta();
  auto kernel = [r, theta](double t) {
    const double den = 1.0 + r * r - 2.0 * r * std::cos(theta - t);
    return Complex((1.0 - r * r) / den, 0.0);
  };
  return doubled(phi, panels, kernel);
}

OracleResult cauchy_integral_oracle(const CircleMap& phi, const DiscPoint& z, std::size_t panels) {
  check_oracle_args(phi, z, panels);
  const Complex zz = z.z();
  // w = e^{it}, dw = i w dt: (1/2pi i) int phi w' /(w-z) dw = (1/2pi) int phi(t) w/(w-z) dt.
  auto kernel = [zz](double t) {
    const Complex w = std::polar(1.0, t);
    return w / (w - zz);
  };
  return doubled(phi, panels, kernel);
}

OracleResult conjugate_extension_quadrature(const CircleMap& phi, const DiscPoint& z, std::size_t panels) {
  check_oracle_args(phi, z, panels);
  const double r = z.r();
  const double theta = z.theta();
  auto kernel = [r, theta](double t) {
    const double den = 1.0 + r * r - 2.0 * r * std::cos(theta - t);
    return Complex(2.0 * r * std::sin(theta - t) / den, 0.0);
  };
  return doubled(phi, panels, kernel);
}

Complex pv_hilbert_oracle(const CircleMap& phi, double theta, std::size_t panels) {
  if (!phi) throw std::invalid_argument("pv_hilbert_oracle: empty circle evaluator");
  if (panels < 4 || panels % 2 != 0)
    throw std::invalid_argument("pv_hilbert_oracle: panel count must be even, >= 4");
  const double h = kTwoPi / static_cast<double>(panels);
  // Nodes t_j = theta + (j + 1/2) h: theta - t_j = -(j + 1/2) h never hits a
  // multiple of 2pi, and the grid is symmetric about the singularity so the
  // odd part of the cotangent cancels to spectral accuracy.
  return sum_terms_c(panels, [&](std::size_t j) {
    const double d = (static_cast<double>(j) + 0.5) * h;
    const double t = theta + d;
    return phi(t) / std::tan(-0.5 * d);
  }) / static_cast<double>(panels);
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Tricomi-style initial guess, then Newton on P_n.
    double x = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      if (n == 1) { p1 = x; }
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      const double pn = (n == 1) ? x : p1;
      const double pm = (n == 1) ? 1.0 : p0;
      dp = static_cast<double>(n) * (x * pn - pm) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace discharm
