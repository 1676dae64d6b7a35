#include "discharm/series.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace discharm {

namespace {
constexpr double kRealTol = 1e-12;
}

DiscPoint::DiscPoint(double r, double theta) : r_(r), theta_(theta) {
  if (!std::isfinite(r) || !std::isfinite(theta))
    throw std::domain_error("DiscPoint: coordinates must be finite");
  if (r < 0.0 || r >= 1.0)
    throw std::domain_error("DiscPoint: radius must satisfy 0 <= r < 1");
}

Complex DiscPoint::z() const noexcept { return std::polar(r_, theta_); }

FourierSeries::FourierSeries() : degree_(0), c_(1, Complex{}), real_valued_(true) {}

FourierSeries::FourierSeries(int degree)
    : degree_(degree), c_(static_cast<std::size_t>(2 * degree + 1), Complex{}), real_valued_(true) {
  if (degree < 0) throw std::invalid_argument("FourierSeries: negative degree");
}

FourierSeries::FourierSeries(int degree, std::vector<Complex> packed)
    : degree_(degree), c_(std::move(packed)), real_valued_(false) {
  if (degree < 0) throw std::invalid_argument("FourierSeries: negative degree");
  if (c_.size() != static_cast<std::size_t>(2 * degree + 1))
    throw std::invalid_argument("FourierSeries: packed size != 2*degree+1");
  for (const auto& v : c_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("FourierSeries: non-finite coefficient");
  refresh_real_flag();
}

Complex FourierSeries::coeff(int n) const noexcept {
  if (n < -degree_ || n > degree_) return Complex{};
  return c_[static_cast<std::size_t>(n + degree_)];
}

void FourierSeries::set_coeff(int n, Complex v) {
  if (n < -degree_ || n > degree_)
    throw std::invalid_argument("FourierSeries::set_coeff: index outside [-N, N]");
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw std::invalid_argument("FourierSeries::set_coeff: non-finite coefficient");
  c_[static_cast<std::size_t>(n + degree_)] = v;
}

void FourierSeries::refresh_real_flag() {
  bool ok = true;
  for (int n = 0; n <= degree_ && ok; ++n) {
    const Complex d = coeff(-n) - std::conj(coeff(n));
    ok = std::abs(d.real()) <= kRealTol && std::abs(d.imag()) <= kRealTol;
  }
  real_valued_ = ok;
}

FourierSeries add(const FourierSeries& a, const FourierSeries& b) {
  const int n = std::max(a.degree(), b.degree());
  std::vector<Complex> c(static_cast<std::size_t>(2 * n + 1));
  for (int k = -n; k <= n; ++k) c[static_cast<std::size_t>(k + n)] = a.coeff(k) + b.coeff(k);
  return FourierSeries(n, std::move(c));
}

FourierSeries scaled(const FourierSeries& a, Complex factor) {
  std::vector<Complex> c(a.packed().begin(), a.packed().end());
  for (auto& v : c) v *= factor;
  return FourierSeries(a.degree(), std::move(c));
}

AnalyticSeries::AnalyticSeries() : degree_(0), a_(1, Complex{}) {}

AnalyticSeries::AnalyticSeries(int degree, std::vector<Complex> coeffs)
    : degree_(degree), a_(std::move(coeffs)) {
  if (degree < 0) throw std::invalid_argument("AnalyticSeries: negative degree");
  if (a_.size() != static_cast<std::size_t>(degree + 1))
    throw std::invalid_argument("AnalyticSeries: coeff count != degree+1");
  for (const auto& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("AnalyticSeries: non-finite coefficient");
}

Complex AnalyticSeries::coeff(int n) const noexcept {
  if (n < 0 || n > degree_) return Complex{};
  return a_[static_cast<std::size_t>(n)];
}

Complex AnalyticSeries::evaluate(Complex z) const {
  Complex acc{};
  for (int n = degree_; n >= 0; --n) acc = acc * z + a_[static_cast<std::size_t>(n)];
  return acc;
}

FourierSeries AnalyticSeries::as_two_sided() const {
  std::vector<Complex> c(static_cast<std::size_t>(2 * degree_ + 1), Complex{});
  for (int n = 0; n <= degree_; ++n) c[static_cast<std::size_t>(n + degree_)] = a_[static_cast<std::size_t>(n)];
  return FourierSeries(degree_, std::move(c));
}

std::vector<Complex> circle_grid(const FourierSeries& f, double r, std::size_t m,
                                 double offset) {
  if (!(r >= 0.0) || r > 1.0)
    throw std::domain_error("circle_grid: radius must satisfy 0 <= r <= 1");
  const int deg = f.degree();
  std::vector<Complex> packed(f.packed().begin(), f.packed().end());
  if (r != 1.0) {
    // Scale c_n by r^{|n|}; powers accumulated multiplicatively.
    double pw = 1.0;
    for (int n = 0; n <= deg; ++n) {
      packed[static_cast<std::size_t>(deg + n)] *= pw;
      packed[static_cast<std::size_t>(deg - n)] *= (n == 0 ? 1.0 : pw);
      pw *= r;
    }
  }
  return synthesize_grid(packed, deg, m, offset);
}

}  // namespace discharm
