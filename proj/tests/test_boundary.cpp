#include <cmath>

#include "doctest.h"

#include "discharm/boundary.hpp"

using namespace discharm;

TEST_CASE("abs_t coefficients") {
  const FourierSeries f = preset_series("abs_t", 9);
  CHECK(f.coeff(0).real() == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(f.coeff(0).imag() == 0.0);
  for (int n : {1, 3, 5, 7, 9}) {
    CHECK(f.coeff(n).real() == doctest::Approx(-2.0 / (kPi * n * n)).epsilon(1e-15));
    CHECK(f.coeff(n).imag() == 0.0);
    CHECK(f.coeff(-n) == f.coeff(n));
  }
  for (int n : {2, 4, 6, 8}) CHECK(f.coeff(n) == Complex(0.0, 0.0));
  CHECK(f.real_valued());
}

TEST_CASE("abs_t trace approximates |theta|") {
  const FourierSeries f = preset_series("abs_t", 2047);
  for (double theta : {0.0, 0.3, 1.0, -1.7, 2.9, -3.1}) {
    const Complex v = evaluate_on_circle(f, theta);
    CHECK(std::abs(v.real() - std::abs(theta)) <= 1e-3);
    CHECK(std::abs(v.imag()) <= 1e-12);
  }
}

TEST_CASE("square_wave equals the derivative of abs_t") {
  const FourierSeries sw = preset_series("square_wave", 31);
  const FourierSeries d = boundary_derivative(preset_series("abs_t", 31));
  for (int n = -31; n <= 31; ++n) CHECK(std::abs(sw.coeff(n) - d.coeff(n)) <= 1e-16);
  for (int n : {1, 3, 5}) {
    CHECK(sw.coeff(n).real() == 0.0);
    CHECK(sw.coeff(n).imag() == doctest::Approx(-2.0 / (kPi * n)).epsilon(1e-15));
  }
  // Trace is -1 on (-pi, 0), +1 on (0, pi): check far from the jumps.
  const FourierSeries big = preset_series("square_wave", 4095);
  CHECK(evaluate_on_circle(big, 1.2).real() == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(evaluate_on_circle(big, -2.0).real() == doctest::Approx(-1.0).epsilon(1e-3));
}

TEST_CASE("parametric families") {
  const FourierSeries h = preset_series("harmonic_3", 5);
  for (int n = -5; n <= 5; ++n)
    CHECK(h.coeff(n) == (n == 3 ? Complex(1.0, 0.0) : Complex(0.0, 0.0)));
  CHECK_FALSE(h.real_valued());

  const FourierSeries hm = preset_series("harmonic_-2", 4);
  CHECK(hm.coeff(-2) == Complex(1.0, 0.0));
  CHECK(hm.coeff(2) == Complex(0.0, 0.0));

  const FourierSeries c = preset_series("cos_2", 4);
  CHECK(c.coeff(2) == Complex(0.5, 0.0));
  CHECK(c.coeff(-2) == Complex(0.5, 0.0));
  CHECK(c.real_valued());
  CHECK(evaluate_on_circle(c, 0.7).real() == doctest::Approx(std::cos(1.4)).epsilon(1e-15));

  const FourierSeries s = preset_series("sin_5", 7);
  CHECK(s.coeff(5) == Complex(0.0, -0.5));
  CHECK(s.coeff(-5) == Complex(0.0, 0.5));
  CHECK(s.real_valued());
  CHECK(evaluate_on_circle(s, 0.3).real() == doctest::Approx(std::sin(1.5)).epsilon(1e-15));

  // exp_ik alias.
  const FourierSeries a = preset_series("exp_ik4", 6);
  CHECK(a.coeff(4) == Complex(1.0, 0.0));

  // Truncation below |k| leaves the zero polynomial.
  const FourierSeries z = preset_series("harmonic_9", 5);
  for (int n = -5; n <= 5; ++n) CHECK(z.coeff(n) == Complex(0.0, 0.0));
}

TEST_CASE("poisson_boundary preset and its closed form") {
  const FourierSeries f = preset_series("poisson_boundary", 6);
  for (int n = -6; n <= 6; ++n) CHECK(f.coeff(n) == Complex(1.0, 0.0));
  // The untruncated object is a point mass; there is no pointwise closed form.
  const CircleMap cf = preset_closed_form("poisson_boundary");
  CHECK_THROWS_AS((void)cf(0.5), std::domain_error);
}

TEST_CASE("preset closed forms match traces") {
  const CircleMap abs_cf = preset_closed_form("abs_t");
  CHECK(abs_cf(1.3).real() == doctest::Approx(1.3).epsilon(1e-15));
  CHECK(abs_cf(-2.2).real() == doctest::Approx(2.2).epsilon(1e-15));
  // Angles are reduced to (-pi, pi].
  CHECK(abs_cf(2.0 * kPi + 0.4).real() == doctest::Approx(0.4).epsilon(1e-12));

  const CircleMap sq_cf = preset_closed_form("square_wave");
  CHECK(sq_cf(0.5).real() == 1.0);
  CHECK(sq_cf(-0.5).real() == -1.0);
}

TEST_CASE("unknown preset lists the available names") {
  CHECK_FALSE(is_preset("nope"));
  CHECK(is_preset("abs_t"));
  CHECK(is_preset("harmonic_12"));
  try {
    (void)preset("nope");
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find("abs_t") != std::string::npos);
    CHECK(msg.find("square_wave") != std::string::npos);
  }
}

TEST_CASE("boundary spec: coefficients kind") {
  const char* text = R"({"kind":"coefficients","N":3,
    "coefficients":[[0, 1.0, 0.0],[2, 0.25, -0.5],[-2, 0.25, 0.5]]})";
  const FourierSeries f = BoundarySpec::from_json_text(text).to_series();
  CHECK(f.degree() == 3);
  CHECK(f.coeff(0) == Complex(1.0, 0.0));
  CHECK(f.coeff(2) == Complex(0.25, -0.5));
  CHECK(f.coeff(-2) == Complex(0.25, 0.5));
  CHECK(f.coeff(1) == Complex(0.0, 0.0));
  CHECK(f.real_valued());
}

TEST_CASE("boundary spec: preset kind") {
  const char* text = R"({"kind":"preset","name":"cos_1","N":8})";
  const FourierSeries f = BoundarySpec::from_json_text(text).to_series();
  CHECK(f.degree() == 8);
  CHECK(f.coeff(1) == Complex(0.5, 0.0));
}

TEST_CASE("boundary spec: samples kind recovers a trig polynomial") {
  // F(t) = cos t + sin 3t sampled on 16 points, N = 3.
  std::string text = R"({"kind":"samples","N":3,"samples":[)";
  for (int j = 0; j < 16; ++j) {
    const double t = kTwoPi * j / 16.0;
    if (j) text += ',';
    char buf[64];
    std::snprintf(buf, sizeof(buf), "[%.17g, 0.0]", std::cos(t) + std::sin(3.0 * t));
    text += buf;
  }
  text += "]}";
  const FourierSeries f = BoundarySpec::from_json_text(text).to_series();
  CHECK(std::abs(f.coeff(1) - Complex(0.5, 0.0)) <= 1e-14);
  CHECK(std::abs(f.coeff(3) - Complex(0.0, -0.5)) <= 1e-14);
  CHECK(std::abs(f.coeff(-3) - Complex(0.0, 0.5)) <= 1e-14);
  CHECK(std::abs(f.coeff(2)) <= 1e-14);
}

TEST_CASE("boundary spec: malformed inputs carry a location") {
  auto expect_throw = [](const char* text, const char* needle) {
    try {
      (void)BoundarySpec::from_json_text(text);
      FAIL_CHECK("expected invalid_argument for: " << text);
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_throw(R"({"N":3})", "kind");
  expect_throw(R"({"kind":"coefficients","N":-1,"coefficients":[]})", "/N");
  expect_throw(R"({"kind":"coefficients","N":2,"coefficients":[[5,1.0,0.0]]})", "N");
  expect_throw(R"({"kind":"coefficients","N":2,"coefficients":[[1,1.0]]})", "coefficients");
  expect_throw(R"({"kind":"samples","N":3,"samples":[[1.0,0.0]]})", "samples");
  expect_throw(R"({"kind":"preset","name":"nope","N":4})", "name");
  expect_throw("not json at all", "boundary spec");
}

TEST_CASE("series_from_samples requires a power-of-two count") {
  std::vector<Complex> s(12, Complex(1.0, 0.0));
  CHECK_THROWS_AS((void)series_from_samples(s, 2), std::invalid_argument);
}

TEST_CASE("boundary_derivative kills the mean and flips parity") {
  const FourierSeries f = preset_series("cos_3", 5);
  const FourierSeries d = boundary_derivative(f);
  CHECK(d.coeff(0) == Complex(0.0, 0.0));
  // d/dt cos(3t) = -3 sin(3t): coefficients ±(-3/2 i) -> at n=3: i*3*0.5.
  CHECK(std::abs(d.coeff(3) - Complex(0.0, 1.5)) <= 1e-16);
  CHECK(std::abs(d.coeff(-3) - Complex(0.0, -1.5)) <= 1e-16);
  CHECK(d.real_valued());
}
