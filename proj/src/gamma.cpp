#include "discharm/gamma.hpp"

#include <cmath>
#include <stdexcept>

#include "discharm/kernels.hpp"

namespace discharm {

double lanczos_gamma(double x) {
  if (!std::isfinite(x)) throw std::domain_error("lanczos_gamma: non-finite argument");
  if (x <= 0.0 && x == std::floor(x))
    throw std::domain_error("lanczos_gamma: pole at non-positive integer");
  static const double c[9] = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    return kPi / (std::sin(kPi * x) * lanczos_gamma(1.0 - x));
  }
  const double xx = x - 1.0;
  double a = c[0];
  for (int i = 1; i < 9; ++i) a += c[i] / (xx + static_cast<double>(i));
  const double t = xx + 7.5;
  return std::sqrt(kTwoPi) * std::pow(t, xx + 0.5) * std::exp(-t) * a;
}

}  // namespace discharm
