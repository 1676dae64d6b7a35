#include "discharm/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "discharm/boundary.hpp"
#include "discharm/quadrature.hpp"

namespace discharm {

namespace {

constexpr double kRelSlack = 1e-6;

std::string fmt_double(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

class Timer {
 public:
  Timer() : t0_(std::chrono::steady_clock::now()) {}
  double ms() const {
    const auto dt = std::chrono::steady_clock::now() - t0_;
    return std::chrono::duration<double, std::milli>(dt).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

void finalize(VerificationReport& r, const Timer& t) {
  r.margin = r.bound != 0.0 ? (r.bound - r.observed) / r.bound : 0.0;
  r.runtime_ms = t.ms();
}

void reject_endpoint(const Exponent& p, const char* check) {
  if (p.is_inf() || p.p() == 1.0)
    throw std::domain_error(std::string(check) +
                            ": p in {1, inf} has no finite constant; "
                            "run check_endpoint_failure for the demonstrations");
}

}  // namespace

void VerificationReport::param(const std::string& key, double value) {
  params.push_back({key, value, {}, false});
}

void VerificationReport::param(const std::string& key, const std::string& value) {
  params.push_back({key, 0.0, value, true});
}

std::string VerificationReport::to_json(bool include_runtime) const {
  std::string s = "{\"check\":\"" + json_escape(check) + "\",\"params\":{";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ',';
    s += '"' + json_escape(params[i].key) + "\":";
    s += params[i].is_text ? '"' + json_escape(params[i].text) + '"' : fmt_double(params[i].num);
  }
  s += "},\"observed\":" + fmt_double(observed);
  s += ",\"bound\":" + fmt_double(bound);
  s += ",\"margin\":" + fmt_double(margin);
  s += ",\"pass\":";
  s += pass ? "true" : "false";
  s += ",\"runtime_ms\":" + fmt_double(include_runtime ? runtime_ms : 0.0);
  s += ",\"seed\":" + std::to_string(seed) + "}";
  return s;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports, bool include_runtime) {
  std::string s = "[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) s += ',';
    s += "\n  " + reports[i].to_json(include_runtime);
  }
  s += "\n]";
  return s;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

TrialGenerator::TrialGenerator(std::uint64_t seed, int min_degree, int max_degree)
    : eng_(seed), min_degree_(min_degree), max_degree_(max_degree) {
  if (min_degree < 1 || max_degree < min_degree)
    throw std::invalid_argument("TrialGenerator: need 1 <= min_degree <= max_degree");
}

double TrialGenerator::unit() {
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double TrialGenerator::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 shifted away from 0.
  const double u1 = 1.0 - unit();
  const double u2 = unit();
  const double rad = std::sqrt(-2.0 * std::log(u1));
  const double ang = kTwoPi * u2;
  spare_ = rad * std::sin(ang);
  have_spare_ = true;
  return rad * std::cos(ang);
}

double TrialGenerator::uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

int TrialGenerator::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(eng_() % span);
}

FourierSeries TrialGenerator::next_series(bool real_valued, bool zero_mean, bool analytic) {
  const int deg = uniform_int(min_degree_, max_degree_);
  std::vector<Complex> c(static_cast<std::size_t>(2 * deg + 1));
  for (auto& v : c) v = Complex(gaussian(), gaussian()) * 0.70710678118654752;
  if (real_valued) {
    for (int n = 1; n <= deg; ++n) {
      const Complex a = c[static_cast<std::size_t>(deg + n)];
      const Complex b = c[static_cast<std::size_t>(deg - n)];
      const Complex sym = 0.5 * (a + std::conj(b));
      c[static_cast<std::size_t>(deg + n)] = sym;
      c[static_cast<std::size_t>(deg - n)] = std::conj(sym);
    }
    c[static_cast<std::size_t>(deg)] = Complex(c[static_cast<std::size_t>(deg)].real(), 0.0);
  }
  if (analytic)
    for (int n = 1; n <= deg; ++n) c[static_cast<std::size_t>(deg - n)] = Complex{};
  if (zero_mean) c[static_cast<std::size_t>(deg)] = Complex{};
  return FourierSeries(deg, std::move(c));
}

DiscPoint TrialGenerator::next_point(double max_r) {
  const double r = max_r * std::sqrt(unit());
  const double theta = uniform(0.0, kTwoPi);
  return DiscPoint(r, theta);
}

// ---------------------------------------------------------------------------

VerificationReport check_riesz_inequality(const Exponent& p, int trials, std::uint64_t seed,
                                          double constant_scale) {
  Timer timer;
  reject_endpoint(p, "check_riesz_inequality");
  constexpr std::size_t kPanels = 4096;
  constexpr double kR = 0.999;
  const double ap = constant_scale * riesz_constant(p);
  const bool exact = p.p() == 2.0;

  VerificationReport rep;
  rep.check = "riesz_inequality";
  rep.seed = seed;
  rep.param("p", p.p());
  rep.param("trials", trials);
  rep.param("panels", static_cast<double>(kPanels));
  rep.param("r", kR);
  rep.param("constant_scale", constant_scale);
  rep.param("method", exact ? "parseval" : "quadrature");

  TrialGenerator gen(seed, 3, 16);
  double max_ratio = 0.0;
  int violations = 0;
  for (int t = 0; t < trials; ++t) {
    const FourierSeries phi = gen.next_series(false, false, t % 8 == 7);
    const AnalyticSeries plus = riesz_projection(phi);
    double lhs, rhs;
    if (exact) {
      lhs = mean2_parseval(plus, kR);
      rhs = l2_norm_parseval(phi);
    } else {
      lhs = integral_mean(AnalyticFunction(plus), kR, p, kPanels).value;
      rhs = circle_lp_norm(phi, p, kPanels).value;
    }
    if (rhs == 0.0) continue;
    const double ratio = lhs / rhs;
    max_ratio = std::max(max_ratio, ratio);
    const bool ok = exact ? lhs <= ap * rhs + 1e-10 : lhs <= ap * rhs * (1.0 + kRelSlack);
    if (!ok) ++violations;
  }
  rep.param("violations", violations);
  if (trials == 0) rep.param("vacuous", 1.0);
  rep.observed = max_ratio;
  rep.bound = ap;
  rep.pass = violations == 0;
  finalize(rep, timer);
  return rep;
}

VerificationReport check_main_theorem_lp(const Exponent& p, int trials, std::uint64_t seed,
                                         double constant_scale) {
  Timer timer;
  reject_endpoint(p, "check_main_theorem_lp");
  constexpr std::size_t kPanels = 4096;
  const double radii[] = {0.9, 0.99, 0.999};
  const double ap = constant_scale * riesz_constant(p);
  const bool exact = p.p() == 2.0;

  VerificationReport rep;
  rep.check = "main_theorem_lp";
  rep.seed = seed;
  rep.param("p", p.p());
  rep.param("trials", trials);
  rep.param("constant_scale", constant_scale);
  rep.param("method", exact ? "parseval" : "quadrature");
  if (!exact) rep.param("panels", static_cast<double>(kPanels));

  TrialGenerator gen(seed, 3, 16);
  double max_ratio = 0.0;
  int violations = 0;
  for (int t = 0; t < trials; ++t) {
    const FourierSeries f = gen.next_series(false, false, t % 8 == 7);
    const FourierSeries fdot = boundary_derivative(f);
    double lhs, rhs;
    if (exact) {
      // Parseval in the r -> 1 limit: ||f_z||_2^2 = sum_{n>=1} n^2 |c_n|^2,
      // symmetric sum for conj(f_zbar); ||Fdot||_2^2 = sum over all n.
      const AnalyticSeries dz = dz_series(f), dzb = dzbar_series(f);
      const double a = mean2_parseval(dz, 1.0);
      const double b = mean2_parseval(dzb, 1.0);
      lhs = std::max(a, b);
      rhs = l2_norm_parseval(fdot);
      if (rhs == 0.0) continue;
      if (!(lhs <= ap * rhs + 1e-10)) ++violations;
    } else {
      const AnalyticFunction dz(dz_series(f)), dzb(dzbar_series(f));
      lhs = 0.0;
      for (double r : radii) {
        lhs = std::max(lhs, integral_mean(dz, r, p, kPanels).value);
        lhs = std::max(lhs, integral_mean(dzb, r, p, kPanels).value);
      }
      rhs = circle_lp_norm(fdot, p, kPanels).value;
      if (rhs == 0.0) continue;
      if (!(lhs <= ap * rhs * (1.0 + kRelSlack))) ++violations;
    }
    max_ratio = std::max(max_ratio, lhs / rhs);
  }
  rep.param("violations", violations);
  if (trials == 0) rep.param("vacuous", 1.0);
  rep.observed = max_ratio;
  rep.bound = ap;
  rep.pass = violations == 0;
  finalize(rep, timer);
  return rep;
}

VerificationReport check_identity_2izfz(int trials, std::uint64_t seed, int points) {
  Timer timer;
  VerificationReport rep;
  rep.check = "identity_2izfz";
  rep.seed = seed;
  rep.param("trials", trials);
  rep.param("points", points);

  TrialGenerator gen(seed, 3, 16);
  double max_resid = 0.0;
  for (int t = 0; t < trials; ++t) {
    const FourierSeries f = gen.next_series(false, false, false);
    const FourierSeries fdot = boundary_derivative(f);
    const FourierSeries rhs_data = add(fdot, scaled(hilbert_transform(fdot), Complex(0.0, 1.0)));
    for (int k = 0; k < points; ++k) {
      const DiscPoint z = gen.next_point(0.99);
      const Complex lhs = 2.0 * Complex(0.0, 1.0) * z.z() * wirtinger_dz(f, z);
      const Complex rhs = poisson_extend(rhs_data, z);
      max_resid = std::max(max_resid, std::abs(lhs - rhs));
    }
  }
  if (trials == 0 || points == 0) rep.param("vacuous", 1.0);
  rep.observed = max_resid;
  rep.bound = 1e-9;
  rep.pass = max_resid <= rep.bound;
  finalize(rep, timer);
  return rep;
}

VerificationReport check_polar_lemma(int trials, std::uint64_t seed, int points,
                                     double constant_scale) {
  Timer timer;
  constexpr std::size_t kPanels = 1024;
  const double kNormR = 1.0 - std::ldexp(1.0, -10);
  const double norm_ps[] = {1.0, 1.5, 2.0, 3.0};

  VerificationReport rep;
  rep.check = "polar_lemma";
  rep.seed = seed;
  rep.param("trials", trials);
  rep.param("points", points);
  rep.param("panels", static_cast<double>(kPanels));
  rep.param("norm_r", kNormR);
  rep.param("constant_scale", constant_scale);

  TrialGenerator gen(seed, 3, 16);
  double max_resid = 0.0;
  int coeff_mismatch = 0, norm_violations = 0;
  for (int t = 0; t < trials; ++t) {
    const FourierSeries f = gen.next_series(false, false, false);
    const FourierSeries fdot = boundary_derivative(f);

    // f_theta series assembled from the Wirtinger split must equal the
    // spectral derivative exactly (same products, no tolerance).
    const FourierSeries ft = polar_theta_series(f);
    for (int n = -f.degree(); n <= f.degree(); ++n)
      if (ft.coeff(n) != fdot.coeff(n)) ++coeff_mismatch;

    for (int k = 0; k < points; ++k) {
      const DiscPoint z = gen.next_point(0.99);
      const PolarDerivatives pd = polar_derivatives(f, z);
      const Complex lhs = 2.0 * Complex(0.0, 1.0) * z.z() * wirtinger_dz(f, z);
      const Complex rhs = pd.f_theta + Complex(0.0, 1.0) * pd.r_f_r;
      max_resid = std::max(max_resid, std::abs(lhs - rhs));
      max_resid = std::max(max_resid, std::abs(pd.f_theta - poisson_extend(fdot, z)));
    }

    // Norm inequality ||f_theta||_p <= ||Fdot||_p (+ slack), f_theta taken
    // at radius kNormR; p = inf as aligned grid maxima.
    const PoissonExtension ext(fdot);
    for (double pv : norm_ps) {
      const double lhs = integral_mean(ext, kNormR, Exponent(pv), kPanels).value;
      const double rhs = circle_lp_norm(fdot, Exponent(pv), kPanels).value;
      if (!(lhs <= constant_scale * rhs + kRelSlack * std::max(1.0, rhs))) ++norm_violations;
    }
    const double lhs_inf = integral_mean(ext, kNormR, Exponent::infinity(), kPanels).value;
    const double rhs_inf = circle_lp_norm(fdot, Exponent::infinity(), kPanels).value;
    if (!(lhs_inf <= constant_scale * rhs_inf + kRelSlack * std::max(1.0, rhs_inf)))
      ++norm_violations;
  }
  rep.param("coeff_mismatches", coeff_mismatch);
  rep.param("norm_violations", norm_violations);
  if (trials == 0) rep.param("vacuous", 1.0);
  rep.observed = max_resid;
  rep.bound = 1e-10;
  rep.pass = coeff_mismatch == 0 && norm_violations == 0 && max_resid <= rep.bound;
  finalize(rep, timer);
  return rep;
}

VerificationReport check_endpoint_failure() {
  Timer timer;
  VerificationReport rep;
  rep.check = "endpoint_failure";
  rep.seed = 0;

  // Every condition is normalized to a score <= 1; observed is the worst.
  double worst = 0.0;
  auto need = [&](const std::string& name, double score) {
    rep.param(name, score);
    worst = std::max(worst, score);
  };

  // (a) Riesz endpoint gap at p = 1: P[ones] has unit mean for every r
  // (positive kernel) but its analytic projection ~ 1/(1-z) blows up like
  // ln(1/(1-r)).
  {
    const int deg = 16383;
    const std::size_t panels = 65536;
    const FourierSeries ones = preset_series("poisson_boundary", deg);
    const PoissonExtension full(ones);
    const AnalyticFunction plus(riesz_projection(ones));
    const double radii[] = {0.9, 0.99, 0.999};
    double prev = 0.0;
    for (double r : radii) {
      const double m_full = integral_mean(full, r, Exponent(1.0), panels).value;
      const double m_plus = integral_mean(plus, r, Exponent(1.0), panels).value;
      const double ratio = m_plus / std::log(1.0 / (1.0 - r));
      rep.param("a_m1_full_r" + std::to_string(r).substr(0, 5), m_full);
      rep.param("a_m1_plus_r" + std::to_string(r).substr(0, 5), m_plus);
      need("a_kernel_mass_dev_r" + std::to_string(r).substr(0, 5), std::abs(m_full - 1.0) / 1e-6);
      need("a_log_ratio_hi_r" + std::to_string(r).substr(0, 5), ratio / 5.0);
      need("a_log_ratio_lo_r" + std::to_string(r).substr(0, 5), 0.2 / ratio);
      need("a_monotone_r" + std::to_string(r).substr(0, 5), prev / std::max(m_plus, 1e-300));
      prev = m_plus;
      if (r == 0.99) need("a_gap_over_2", 2.0 / m_plus);
    }
  }

  // (b) abs_t: M_inf(r, f_z) grid sup reaches 95% of the closed form
  // (2/(pi r)) atanh(r) — the series ground-truth magnitude.
  {
    const FourierSeries f = preset_series("abs_t", 8191);
    const AnalyticFunction dz(dz_series(f));
    for (double r : {0.9, 0.999}) {
      const double sup = integral_mean(dz, r, Exponent::infinity(), 8192).value;
      const double closed = 2.0 / (kPi * r) * std::atanh(r);
      rep.param("b_minf_r" + std::to_string(r).substr(0, 5), sup);
      rep.param("b_closed_r" + std::to_string(r).substr(0, 5), closed);
      need("b_blowup_r" + std::to_string(r).substr(0, 5), 0.95 * closed / sup);
    }
  }

  // (c) H(Fdot) = (2/pi) ln|tan(theta/2)|: grid max near theta = 0 gains
  // >= 0.5 per 4x refinement (log divergence), while the L^p norms are
  // refinement-stable for p in {1, 2, 3}.
  {
    double prev_max = 0.0;
    for (int level = 0; level <= 3; ++level) {
      const int scale = 1 << (2 * level);  // 4^level
      const int deg = 2048 * scale - 1;
      const double h = (kPi / 128.0) / static_cast<double>(scale);
      const FourierSeries hf = hilbert_transform(preset_series("square_wave", deg));
      double gmax = 0.0;
      for (int j = 1; j <= 32; ++j)
        gmax = std::max(gmax, std::abs(evaluate_on_circle(hf, j * h)));
      rep.param("c_gridmax_L" + std::to_string(level), gmax);
      if (level > 0) {
        const double growth = gmax - prev_max;
        need("c_growth_L" + std::to_string(level), growth > 0.0 ? 0.5 / growth : 2.0);
      }
      prev_max = gmax;
    }
    const FourierSeries hf = hilbert_transform(preset_series("square_wave", 8191));
    for (double pv : {1.0, 2.0, 3.0}) {
      const double n1 = circle_lp_norm(hf, Exponent(pv), 16384).value;
      const double n2 = circle_lp_norm(hf, Exponent(pv), 32768).value;
      const double rel = std::abs(n2 - n1) / n1;
      rep.param("c_norm_p" + fmt_double(pv), n1);
      need("c_stable_p" + fmt_double(pv), rel / 1e-3);
    }
  }

  rep.observed = worst;
  rep.bound = 1.0;
  rep.pass = worst <= 1.0;
  finalize(rep, timer);
  return rep;
}

VerificationReport check_pointwise_bound(const Exponent& p, int trials, std::uint64_t seed,
                                         int points, double constant_scale) {
  Timer timer;
  reject_endpoint(p, "check_pointwise_bound");
  constexpr std::size_t kPanels = 4096;
  const double radii[] = {0.0, 0.5, 0.9, 0.99};
  const double cp = pointwise_constant(p);

  VerificationReport rep;
  rep.check = "pointwise_bound";
  rep.seed = seed;
  rep.param("p", p.p());
  rep.param("C_p", cp);
  rep.param("trials", trials);
  rep.param("points", points);
  rep.param("panels", static_cast<double>(kPanels));
  rep.param("constant_scale", constant_scale);

  TrialGenerator gen(seed, 3, 16);
  double max_ratio = 0.0;
  int violations = 0;
  // Trial 0/1 are fixed: a pure first harmonic (the known near-extremal
  // case at z = 0, which defeats the halved-constant mutation) and the
  // abs_t truncation.
  for (int t = 0; t < trials + 2; ++t) {
    FourierSeries f = t == 0   ? preset_series("harmonic_1", 4)
                     : t == 1 ? preset_series("abs_t", 2047)
                               : gen.next_series(false, false, (t - 2) % 8 == 7);
    const FourierSeries fdot = boundary_derivative(f);
    const double norm = circle_lp_norm(fdot, p, kPanels).value;
    if (norm == 0.0) continue;
    for (double r : radii) {
      const double denom = constant_scale * cp * norm * std::pow(1.0 - r * r, -1.0 / p.p());
      for (int k = 0; k < points; ++k) {
        const double theta = gen.uniform(0.0, kTwoPi);
        const DiscPoint z(r, theta);
        const double a = std::abs(wirtinger_dz(f, z));
        const double b = std::abs(wirtinger_dzbar(f, z));
        const double lhs = std::max(a, b);
        max_ratio = std::max(max_ratio, lhs / denom);
        if (!(lhs <= denom * (1.0 + kRelSlack))) ++violations;
        // D_f interpreted as |f_z| + |f_zbar|, bounded by twice the formula.
        if (!(a + b <= 2.0 * denom * (1.0 + kRelSlack))) ++violations;
      }
    }
  }
  rep.param("violations", violations);
  if (points == 0) rep.param("vacuous", 1.0);
  rep.observed = max_ratio;
  rep.bound = 1.0;
  rep.pass = violations == 0;
  finalize(rep, timer);
  return rep;
}

VerificationReport check_jensen_step(const Exponent& p, int points, double constant_scale) {
  Timer timer;
  if (p.is_inf()) throw std::domain_error("check_jensen_step: requires p < inf");
  constexpr std::size_t kPanels = 8192;
  constexpr std::uint64_t kSeed = 0x6a656e73;  // fixed: signature carries no seed
  const double radii[] = {0.5, 0.9, 0.99};

  VerificationReport rep;
  rep.check = "jensen_step";
  rep.seed = kSeed;
  rep.param("p", p.p());
  rep.param("random_trials", points);
  rep.param("panels", static_cast<double>(kPanels));
  rep.param("constant_scale", constant_scale);

  TrialGenerator gen(kSeed, 3, 16);
  double max_ratio = 0.0;
  int violations = 0;
  for (int t = 0; t < points + 2; ++t) {
    // harmonic_1 has |Fdot| = 1, the near-equality case of the Jensen step;
    // it keeps the check sensitive to a weakened constant.
    const FourierSeries f = t == 0   ? preset_series("abs_t", 8191)
                            : t == 1 ? preset_series("harmonic_1", 4)
                                     : gen.next_series(false, false, false);
    const FourierSeries fdot = boundary_derivative(f);
    const AnalyticFunction dz(dz_series(f));
    // Unnormalized |Fdot|_p^p, i.e. int |Fdot|^p dt without the 1/2pi.
    const double fdot_pp = kTwoPi * std::pow(circle_lp_norm(fdot, p, kPanels).value, p.p());
    if (fdot_pp == 0.0) continue;
    for (double r : radii) {
      const double lhs = kTwoPi * std::pow(integral_mean(dz, r, p, kPanels).value, p.p());
      const double rhs =
          constant_scale * fdot_pp * std::pow(kernel_moment_zero(r, kPanels), p.p());
      max_ratio = std::max(max_ratio, lhs / rhs);
      if (!(lhs <= rhs * (1.0 + kRelSlack))) ++violations;
    }
  }
  rep.param("violations", violations);
  rep.observed = max_ratio;
  rep.bound = 1.0;
  rep.pass = violations == 0;
  finalize(rep, timer);
  return rep;
}

VerificationReport check_holder_continuity(const Exponent& p, int pairs, std::uint64_t seed) {
  Timer timer;
  reject_endpoint(p, "check_holder_continuity");
  const double alpha = 1.0 / p.q_value();

  VerificationReport rep;
  rep.check = "holder_continuity";
  rep.seed = seed;
  rep.param("p", p.p());
  rep.param("alpha", alpha);
  rep.param("pairs", pairs);

  TrialGenerator gen(seed, 3, 16);
  std::vector<PoissonExtension> funcs;
  funcs.emplace_back(preset_series("abs_t", 2047));
  for (int i = 0; i < 3; ++i) funcs.emplace_back(gen.next_series(false, false, false));

  // Quotient sweep: max over the first `pairs` draws, then over twice as
  // many; stabilization (ratio <= 1.5) is the boundedness smoke test.
  double max1 = 0.0, max2 = 0.0;
  for (int k = 0; k < 2 * pairs; ++k) {
    const DiscPoint z = gen.next_point(0.999);
    const DiscPoint w = gen.next_point(0.999);
    const double dist = std::abs(z.z() - w.z());
    if (dist < 1e-12) continue;
    for (const auto& f : funcs) {
      const double q = std::abs(f.at(z) - f.at(w)) / std::pow(dist, alpha);
      if (k < pairs) max1 = std::max(max1, q);
      max2 = std::max(max2, q);
    }
  }
  rep.param("max_quotient_n", max1);
  rep.param("max_quotient_2n", max2);
  if (pairs == 0) {
    rep.param("vacuous", 1.0);
    rep.observed = 0.0;
    rep.bound = 1.5;
    rep.pass = true;
    finalize(rep, timer);
    return rep;
  }
  rep.observed = max1 > 0.0 ? max2 / max1 : 0.0;
  rep.bound = 1.5;
  rep.pass = rep.observed <= rep.bound;
  finalize(rep, timer);
  return rep;
}

namespace {

using CheckFn = std::function<VerificationReport()>;

void run_guarded(std::vector<VerificationReport>& out, const std::string& name,
                 const CheckFn& fn) {
  try {
    out.push_back(fn());
  } catch (const std::exception& e) {
    Timer timer;
    VerificationReport rep;
    rep.check = name;
    rep.param("error", std::string(e.what()));
    rep.observed = 0.0;
    rep.bound = 0.0;
    rep.pass = false;
    finalize(rep, timer);
    out.push_back(rep);
  }
}

// A mutation run passes when the weakened bound is violated; a mutation
// that still "passes" would mean the original comparison was vacuous.
void run_mutation(std::vector<VerificationReport>& out, const std::string& name,
                  bool vacuous_inputs, const CheckFn& fn) {
  Timer timer;
  VerificationReport rep;
  rep.check = name + "_mutation";
  rep.param("mutation", "constant halved");
  if (vacuous_inputs) {
    rep.param("vacuous", 1.0);
    rep.pass = true;
    finalize(rep, timer);
    out.push_back(rep);
    return;
  }
  try {
    const VerificationReport inner = fn();
    rep.seed = inner.seed;
    rep.observed = inner.observed;
    rep.bound = inner.bound;
    rep.param("inner_pass", inner.pass ? 1.0 : 0.0);
    rep.pass = !inner.pass;
  } catch (const std::exception& e) {
    rep.param("error", std::string(e.what()));
    rep.pass = false;
  }
  finalize(rep, timer);
  out.push_back(rep);
}

}  // namespace

std::vector<VerificationReport> run_all(const RunConfig& cfg) {
  std::vector<VerificationReport> out;
  const bool vac = cfg.trials == 0;

  for (double pv : {1.5, 2.0, 3.0, 4.0}) {
    const int n = pv == 2.0 ? cfg.parseval_trials : cfg.trials;
    run_guarded(out, "riesz_inequality",
                [&, pv] { return check_riesz_inequality(Exponent(pv), n, cfg.seed); });
  }
  if (cfg.include_mutations)
    for (double pv : {1.5, 3.0, 4.0})
      run_mutation(out, "riesz_inequality", vac, [&, pv] {
        return check_riesz_inequality(Exponent(pv), cfg.trials, cfg.seed, 0.5);
      });

  run_guarded(out, "main_theorem_lp", [&] {
    return check_main_theorem_lp(Exponent(2.0), cfg.parseval_trials, cfg.seed);
  });
  run_guarded(out, "main_theorem_lp",
              [&] { return check_main_theorem_lp(Exponent(3.0), cfg.trials, cfg.seed); });
  if (cfg.include_mutations)
    run_mutation(out, "main_theorem_lp", vac || cfg.parseval_trials == 0, [&] {
      return check_main_theorem_lp(Exponent(2.0), cfg.parseval_trials, cfg.seed, 0.5);
    });

  run_guarded(out, "identity_2izfz",
              [&] { return check_identity_2izfz(std::min(cfg.trials, 100), cfg.seed, cfg.points); });

  run_guarded(out, "polar_lemma",
              [&] { return check_polar_lemma(std::min(cfg.trials, 50), cfg.seed, 12); });
  if (cfg.include_mutations)
    run_mutation(out, "polar_lemma", vac, [&] {
      return check_polar_lemma(std::min(cfg.trials, 50), cfg.seed, 12, 0.5);
    });

  run_guarded(out, "endpoint_failure", [&] { return check_endpoint_failure(); });

  for (double pv : {1.5, 2.0, 3.0})
    run_guarded(out, "pointwise_bound", [&, pv] {
      return check_pointwise_bound(Exponent(pv), std::min(cfg.trials, 50), cfg.seed, 6);
    });
  if (cfg.include_mutations)
    run_mutation(out, "pointwise_bound", false, [&] {
      return check_pointwise_bound(Exponent(2.0), std::min(cfg.trials, 50), cfg.seed, 6, 0.5);
    });

  for (double pv : {1.0, 2.0})
    run_guarded(out, "jensen_step",
                [&, pv] { return check_jensen_step(Exponent(pv), std::min(cfg.trials, 10)); });
  if (cfg.include_mutations)
    run_mutation(out, "jensen_step", false,
                 [&] { return check_jensen_step(Exponent(2.0), std::min(cfg.trials, 10), 0.5); });

  for (double pv : {2.0, 3.0})
    run_guarded(out, "holder_continuity",
                [&, pv] { return check_holder_continuity(Exponent(pv), cfg.pairs, cfg.seed); });

  return out;
}

}  // namespace discharm
