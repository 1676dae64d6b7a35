#pragma once

namespace discharm {

// Lanczos approximation (g = 7, 9 terms), |relative error| <= 1e-12 on
// (0, 50]; reflection formula below 0.5. Non-positive integers rejected.
double lanczos_gamma(double x);

}  // namespace discharm
