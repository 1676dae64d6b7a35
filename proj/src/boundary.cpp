#include "discharm/boundary.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace discharm {

namespace {

// Wrap to (-pi, pi].
double wrap_pi(double t) {
  double x = std::fmod(t, kTwoPi);
  if (x > kPi) x -= kTwoPi;
  if (x <= -kPi) x += kTwoPi;
  return x;
}

FourierSeries abs_t_series(int degree, int) {
  FourierSeries f(degree);
  f.set_coeff(0, Complex(kPi / 2.0, 0.0));
  for (int n = 1; n <= degree; ++n) {
    if (n % 2 == 0) continue;
    const double v = -2.0 / (kPi * static_cast<double>(n) * static_cast<double>(n));
    f.set_coeff(n, Complex(v, 0.0));
    f.set_coeff(-n, Complex(v, 0.0));
  }
  f.refresh_real_flag();
  return f;
}

Complex abs_t_closed(double theta, int) { return Complex(std::abs(wrap_pi(theta)), 0.0); }

// d/dt |t| on (-pi, pi): the square wave sign(t); 0 at the jumps.
FourierSeries square_wave_series(int degree, int) {
  FourierSeries f(degree);
  for (int n = 1; n <= degree; ++n) {
    if (n % 2 == 0) continue;
    const double v = -2.0 / (kPi * static_cast<double>(n));
    f.set_coeff(n, Complex(0.0, v));
    f.set_coeff(-n, Complex(0.0, -v));
  }
  f.refresh_real_flag();
  return f;
}

Complex square_wave_closed(double theta, int) {
  const double t = wrap_pi(theta);
  if (t == 0.0 || t == kPi) return Complex{};
  return Complex(t > 0.0 ? 1.0 : -1.0, 0.0);
}

// All coefficients 1: the truncated Poisson-kernel boundary data.
FourierSeries ones_series(int degree, int) {
  std::vector<Complex> c(static_cast<std::size_t>(2 * degree + 1), Complex(1.0, 0.0));
  return FourierSeries(degree, std::move(c));
}

Complex ones_closed(double theta, int) {
  // The untruncated data is a point mass, not a function; the degree-N
  // truncation is the Dirichlet kernel, which callers can evaluate from
  // the series itself.
  (void)theta;
  throw std::domain_error("poisson_boundary: no pointwise closed form; evaluate the truncated series");
}

FourierSeries harmonic_series(int degree, int k) {
  FourierSeries f(degree);
  if (std::abs(k) <= degree) f.set_coeff(k, Complex(1.0, 0.0));
  f.refresh_real_flag();
  return f;
}

Complex harmonic_closed(double theta, int k) { return std::polar(1.0, k * theta); }

FourierSeries cos_series(int degree, int k) {
  FourierSeries f(degree);
  const int a = std::abs(k);
  if (a == 0) {
    f.set_coeff(0, Complex(1.0, 0.0));
  } else if (a <= degree) {
    f.set_coeff(a, Complex(0.5, 0.0));
    f.set_coeff(-a, Complex(0.5, 0.0));
  }
  f.refresh_real_flag();
  return f;
}

Complex cos_closed(double theta, int k) { return Complex(std::cos(k * theta), 0.0); }

FourierSeries sin_series(int degree, int k) {
  FourierSeries f(degree);
  if (k != 0 && std::abs(k) <= degree) {
    f.set_coeff(std::abs(k), Complex(0.0, -0.5));
    f.set_coeff(-std::abs(k), Complex(0.0, 0.5));
    if (k < 0) {
      f.set_coeff(std::abs(k), Complex(0.0, 0.5));
      f.set_coeff(-std::abs(k), Complex(0.0, -0.5));
    }
  }
  f.refresh_real_flag();
  return f;
}

Complex sin_closed(double theta, int k) { return Complex(std::sin(k * theta), 0.0); }

bool parse_family(const std::string& name, const std::string& prefix, int* k) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return false;
  const std::string tail = name.substr(prefix.size());
  char* end = nullptr;
  const long v = std::strtol(tail.c_str(), &end, 10);
  if (end == tail.c_str() || *end != '\0') return false;
  if (v < -1000000 || v > 1000000) return false;
  *k = static_cast<int>(v);
  return true;
}

}  // namespace

bool is_preset(const std::string& name) {
  if (name == "abs_t" || name == "square_wave" || name == "poisson_boundary") return true;
  int k = 0;
  return parse_family(name, "harmonic_", &k) || parse_family(name, "exp_ik", &k) ||
         parse_family(name, "cos_", &k) || parse_family(name, "sin_", &k);
}

std::vector<std::string> preset_names() {
  return {"abs_t", "square_wave", "poisson_boundary", "harmonic_<k>", "cos_<k>", "sin_<k>"};
}

Preset preset(const std::string& name) {
  if (name == "abs_t") return {name, &abs_t_series, &abs_t_closed, 0};
  if (name == "square_wave") return {name, &square_wave_series, &square_wave_closed, 0};
  if (name == "poisson_boundary") return {name, &ones_series, &ones_closed, 0};
  int k = 0;
  if (parse_family(name, "harmonic_", &k) || parse_family(name, "exp_ik", &k))
    return {name, &harmonic_series, &harmonic_closed, k};
  if (parse_family(name, "cos_", &k)) return {name, &cos_series, &cos_closed, k};
  if (parse_family(name, "sin_", &k)) return {name, &sin_series, &sin_closed, k};
  std::ostringstream os;
  os << "unknown preset '" << name << "'; available:";
  for (const auto& p : preset_names()) os << ' ' << p;
  throw std::invalid_argument(os.str());
}

FourierSeries preset_series(const std::string& name, int degree) {
  const Preset p = preset(name);
  return p.coefficients(degree, p.k);
}

CircleMap preset_closed_form(const std::string& name) {
  const Preset p = preset(name);
  const int k = p.k;
  auto fn = p.closed_form;
  return [fn, k](double theta) { return fn(theta, k); };
}

BoundarySpec BoundarySpec::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("boundary spec: ") + e.what());
  }
  auto fail = [](const std::string& where, const std::string& msg) {
    throw std::invalid_argument("boundary spec at " + where + ": " + msg);
  };
  if (!j.is_object()) fail("/", "top level must be an object");
  BoundarySpec spec;
  if (!j.contains("kind") || !j["kind"].is_string()) fail("/kind", "required string");
  spec.kind = j["kind"].get<std::string>();
  if (spec.kind == "preset") {
    if (!j.contains("name") || !j["name"].is_string()) fail("/name", "required string");
    spec.name = j["name"].get<std::string>();
    if (!is_preset(spec.name)) fail("/name", "unknown preset '" + spec.name + "'");
    if (!j.contains("N") || !j["N"].is_number_integer()) fail("/N", "required integer");
    spec.degree = j["N"].get<int>();
    if (spec.degree < 0) fail("/N", "must be >= 0");
  } else if (spec.kind == "coefficients") {
    if (!j.contains("N") || !j["N"].is_number_integer()) fail("/N", "required integer");
    spec.degree = j["N"].get<int>();
    if (spec.degree < 0) fail("/N", "must be >= 0");
    if (!j.contains("coefficients") || !j["coefficients"].is_array())
      fail("/coefficients", "required array of [n, re, im]");
    std::size_t idx = 0;
    for (const auto& row : j["coefficients"]) {
      const std::string where = "/coefficients/" + std::to_string(idx++);
      if (!row.is_array() || row.size() != 3) fail(where, "expected [n, re, im]");
      if (!row[0].is_number_integer()) fail(where + "/0", "n must be an integer");
      if (!row[1].is_number() || !row[2].is_number()) fail(where + "/1", "re, im must be numbers");
      const int n = row[0].get<int>();
      if (n < -spec.degree || n > spec.degree) fail(where + "/0", "|n| exceeds N");
      const double re = row[1].get<double>();
      const double im = row[2].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) fail(where, "non-finite coefficient");
      spec.coefficients.emplace_back(n, Complex(re, im));
    }
  } else if (spec.kind == "samples") {
    if (!j.contains("N") || !j["N"].is_number_integer()) fail("/N", "required integer");
    spec.degree = j["N"].get<int>();
    if (spec.degree < 0) fail("/N", "must be >= 0");
    if (!j.contains("samples") || !j["samples"].is_array())
      fail("/samples", "required array of [re, im]");
    std::size_t idx = 0;
    for (const auto& row : j["samples"]) {
      const std::string where = "/samples/" + std::to_string(idx++);
      if (!row.is_array() || row.size() != 2) fail(where, "expected [re, im]");
      if (!row[0].is_number() || !row[1].is_number()) fail(where, "re, im must be numbers");
      const double re = row[0].get<double>();
      const double im = row[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) fail(where, "non-finite sample");
      spec.samples.emplace_back(re, im);
    }
    const std::size_t m = spec.samples.size();
    if (m < 4 || !is_pow2(m)) fail("/samples", "sample count must be a power of two, >= 4");
    if (m < static_cast<std::size_t>(2 * spec.degree + 2))
      fail("/samples", "need at least 2N+2 samples for degree N");
  } else {
    fail("/kind", "must be one of: preset, coefficients, samples");
  }
  return spec;
}

FourierSeries BoundarySpec::to_series() const {
  if (kind == "preset") return preset_series(name, degree);
  if (kind == "coefficients") {
    FourierSeries f(degree);
    for (const auto& [n, v] : coefficients) f.set_coeff(n, v);
    f.refresh_real_flag();
    return f;
  }
  if (kind == "samples") return series_from_samples(samples, degree);
  throw std::invalid_argument("boundary spec: unset kind");
}

FourierSeries series_from_samples(std::span<const Complex> samples, int degree) {
  if (degree < 0) throw std::invalid_argument("series_from_samples: negative degree");
  const std::size_t m = samples.size();
  if (!is_pow2(m)) throw std::invalid_argument("series_from_samples: sample count must be a power of two");
  if (m < static_cast<std::size_t>(2 * degree + 2))
    throw std::invalid_argument("series_from_samples: need at least 2N+2 samples");
  const std::vector<Complex> dft = analyze_samples(samples);
  std::vector<Complex> packed(static_cast<std::size_t>(2 * degree + 1));
  for (int n = -degree; n <= degree; ++n) {
    const std::size_t k = static_cast<std::size_t>(n >= 0 ? n : n + static_cast<int>(m));
    packed[static_cast<std::size_t>(n + degree)] = dft[k];
  }
  return FourierSeries(degree, std::move(packed));
}

FourierSeries boundary_derivative(const FourierSeries& f) {
  const int deg = f.degree();
  std::vector<Complex> c(static_cast<std::size_t>(2 * deg + 1));
  for (int n = -deg; n <= deg; ++n)
    c[static_cast<std::size_t>(n + deg)] = Complex(0.0, static_cast<double>(n)) * f.coeff(n);
  return FourierSeries(deg, std::move(c));
}

Complex evaluate_on_circle(const FourierSeries& f, double theta) {
  const int deg = f.degree();
  const Complex w = std::polar(1.0, theta);
  const Complex wb = std::conj(w);
  Complex pos{};
  for (int n = deg; n >= 1; --n) pos = (pos + f.coeff(n)) * w;
  Complex neg{};
  for (int n = deg; n >= 1; --n) neg = (neg + f.coeff(-n)) * wb;
  return pos + neg + f.coeff(0);
}

}  // namespace discharm
