#pragma once

#include "discharm/series.hpp"

namespace discharm {

// Independent quadrature oracles: trapezoid sums against pointwise circle
// evaluators. They never touch the FFT fold, so spectral bugs cannot hide
// behind them. All refuse r > 1 - 1e-6: the kernel peak has width ~(1-r)
// and a fixed panel count cannot resolve it arbitrarily close to the
// boundary; failing loudly beats losing digits silently.

inline constexpr double kOracleMaxRadius = 1.0 - 1e-6;

struct OracleResult {
  Complex value;           // trapezoid value at M panels
  double error_estimate;   // |value(2M) - value(M)|
};

// (1/2pi) integral of P_r(theta - t) phi(t) dt, P the Poisson kernel.
OracleResult poisson_quadrature_oracle(const CircleMap& phi, const DiscPoint& z, std::size_t panels);

// (1/2pi i) contour integral of phi(w)/(w - z) dw over |w| = 1.
OracleResult cauchy_integral_oracle(const CircleMap& phi, const DiscPoint& z, std::size_t panels);

// Conjugate Poisson integral: (1/2pi) integral of Q_r(theta - t) phi(t) dt
// with Q_r = 2 r sin / (1 + r^2 - 2 r cos).
OracleResult conjugate_extension_quadrature(const CircleMap& phi, const DiscPoint& z, std::size_t panels);

// Principal-value convolution with the cotangent kernel:
// (1/2pi) p.v. integral of phi(t) cot((theta - t)/2) dt, on the symmetric
// midpoint-offset grid t_j = theta + (j + 1/2) h so the singularity sits
// midway between nodes. panels must be even.
Complex pv_hilbert_oracle(const CircleMap& phi, double theta, std::size_t panels);

// Gauss-Legendre nodes/weights on [-1, 1], by Newton iteration on P_n.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int n);

}  // namespace discharm
