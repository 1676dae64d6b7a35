#include "discharm/disc_ops.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace discharm {

Complex poisson_extend(const FourierSeries& f, const DiscPoint& z) {
  const int deg = f.degree();
  const Complex u = std::polar(z.r(), z.theta());        // r e^{i theta}
  const Complex ub = std::conj(u);
  Complex pos{};
  for (int n = deg; n >= 1; --n) pos = (pos + f.coeff(n)) * u;
  Complex neg{};
  for (int n = deg; n >= 1; --n) neg = (neg + f.coeff(-n)) * ub;
  return pos + neg + f.coeff(0);
}

AnalyticSeries riesz_projection(const FourierSeries& f) {
  const int deg = f.degree();
  std::vector<Complex> a(static_cast<std::size_t>(deg + 1));
  for (int n = 0; n <= deg; ++n) a[static_cast<std::size_t>(n)] = f.coeff(n);
  return AnalyticSeries(deg, std::move(a));
}

FourierSeries conjugate_function(const FourierSeries& f) {
  const int deg = f.degree();
  std::vector<Complex> c(static_cast<std::size_t>(2 * deg + 1));
  for (int n = -deg; n <= deg; ++n) {
    const Complex v = f.coeff(n);
    // -i sgn(n): n > 0 -> -i c_n, n < 0 -> i c_n, n = 0 -> 0.
    Complex w{};
    if (n > 0) w = Complex(v.imag(), -v.real());
    else if (n < 0) w = Complex(-v.imag(), v.real());
    c[static_cast<std::size_t>(n + deg)] = w;
  }
  return FourierSeries(deg, std::move(c));
}

FourierSeries hilbert_transform(const FourierSeries& f) { return conjugate_function(f); }

double conjugate_poisson_kernel(const DiscPoint& z) {
  const double r = z.r();
  const double den = 1.0 + r * r - 2.0 * r * std::cos(z.theta());
  return 2.0 * r * std::sin(z.theta()) / den;
}

AnalyticSeries dz_series(const FourierSeries& f) {
  const int deg = f.degree();
  const int d = deg >= 1 ? deg - 1 : 0;
  std::vector<Complex> a(static_cast<std::size_t>(d + 1), Complex{});
  for (int n = 1; n <= deg; ++n)
    a[static_cast<std::size_t>(n - 1)] = static_cast<double>(n) * f.coeff(n);
  return AnalyticSeries(d, std::move(a));
}

AnalyticSeries dzbar_series(const FourierSeries& f) {
  const int deg = f.degree();
  const int d = deg >= 1 ? deg - 1 : 0;
  std::vector<Complex> a(static_cast<std::size_t>(d + 1), Complex{});
  for (int n = 1; n <= deg; ++n)
    a[static_cast<std::size_t>(n - 1)] = static_cast<double>(n) * f.coeff(-n);
  return AnalyticSeries(d, std::move(a));
}

Complex wirtinger_dz(const FourierSeries& f, const DiscPoint& z) {
  return dz_series(f).evaluate(z.z());
}

Complex wirtinger_dzbar(const FourierSeries& f, const DiscPoint& z) {
  return dzbar_series(f).evaluate(std::conj(z.z()));
}

PolarDerivatives polar_derivatives(const FourierSeries& f, const DiscPoint& z) {
  // f_theta = sum (i n) c_n r^{|n|} e^{i n theta}, r f_r = sum |n| c_n r^{|n|} e^{i n theta}.
  const int deg = f.degree();
  const double r = z.r();
  PolarDerivatives out{};
  Complex ftheta{}, rfr{}, fr{};
  double pw = 1.0;  // r^{n}
  for (int n = 1; n <= deg; ++n) {
    const double prev = pw;  // r^{n-1}
    pw *= r;
    const Complex ep = std::polar(pw, n * z.theta());
    const Complex em = std::conj(ep);
    const Complex cp = f.coeff(n), cm = f.coeff(-n);
    const double dn = static_cast<double>(n);
    ftheta += Complex(0.0, dn) * (cp * ep) + Complex(0.0, -dn) * (cm * em);
    rfr += dn * (cp * ep + cm * em);
    fr += dn * prev * (cp * std::polar(1.0, n * z.theta()) + cm * std::polar(1.0, -n * z.theta()));
  }
  out.f_theta = ftheta;
  out.r_f_r = rfr;
  out.f_r = fr;
  return out;
}

FourierSeries polar_theta_series(const FourierSeries& f) {
  // Assembled from the two Wirtinger series: coefficient n >= 1 is
  // i * (n c_n) = i * dz[n-1]; coefficient -n is -i * (n c_{-n}) = -i * dzbar[n-1].
  const int deg = f.degree();
  const AnalyticSeries dz = dz_series(f);
  const AnalyticSeries dzb = dzbar_series(f);
  FourierSeries out(deg);
  for (int n = 1; n <= deg; ++n) {
    const Complex a = dz.coeff(n - 1);
    const Complex b = dzb.coeff(n - 1);
    out.set_coeff(n, Complex(-a.imag(), a.real()));    // i * a
    out.set_coeff(-n, Complex(b.imag(), -b.real()));   // -i * b
  }
  out.refresh_real_flag();
  return out;
}

double conjugate_identity_check(const FourierSeries& phi, const DiscPoint& z) {
  if (std::abs(phi.coeff(0)) > 1e-12)
    throw std::domain_error(
        "conjugate_identity_check: phi must have zero mean (c_0 = 0); "
        "with a mean the identity picks up a -c_0 term");
  const Complex p = poisson_extend(phi, z);
  const Complex pt = poisson_extend(conjugate_function(phi), z);
  const Complex plus = riesz_projection(phi).evaluate(z.z());
  return std::abs(p + Complex(0.0, 1.0) * pt - 2.0 * plus);
}

void DiscFunction::circle_slice(double r, std::size_t m, double offset,
                                std::vector<Complex>& out) const {
  out.resize(m);
  struct Ctx {
    const DiscFunction* self;
    std::vector<Complex>* out;
    double r, offset;
    std::size_t m;
  } ctx{this, &out, r, offset, m};
  detail::parallel_fill(m, &ctx, [](void* p, std::size_t j) {
    auto* c = static_cast<Ctx*>(p);
    const double theta = kTwoPi * (static_cast<double>(j) + c->offset) / static_cast<double>(c->m);
    (*c->out)[j] = c->self->at(DiscPoint(c->r, theta));
  });
}

PoissonExtension::PoissonExtension(FourierSeries boundary) : boundary_(std::move(boundary)) {}

Complex PoissonExtension::at(const DiscPoint& p) const { return poisson_extend(boundary_, p); }

void PoissonExtension::circle_slice(double r, std::size_t m, double offset,
                                    std::vector<Complex>& out) const {
  out = circle_grid(boundary_, r, m, offset);
}

AnalyticFunction::AnalyticFunction(AnalyticSeries s)
    : series_(std::move(s)), two_sided_(series_.as_two_sided()) {}

Complex AnalyticFunction::at(const DiscPoint& p) const { return series_.evaluate(p.z()); }

void AnalyticFunction::circle_slice(double r, std::size_t m, double offset,
                                    std::vector<Complex>& out) const {
  out = circle_grid(two_sided_, r, m, offset);
}

DiscCallable::DiscCallable(std::function<Complex(const DiscPoint&)> fn) : fn_(std::move(fn)) {
  if (!fn_) throw std::invalid_argument("DiscCallable: empty function");
}

Complex DiscCallable::at(const DiscPoint& p) const { return fn_(p); }

}  // namespace discharm
