#pragma once

#include <string>
#include <vector>

#include "discharm/series.hpp"

namespace discharm {

// Named boundary functions with exact coefficients at any truncation degree
// and a closed-form evaluator on the circle. Fixed names: abs_t,
// square_wave, poisson_boundary; parametric families: harmonic_<k>,
// cos_<k>, sin_<k> (k any integer, e.g. harmonic_-2). exp_ik<k> is accepted
// as an alias of harmonic_<k>.
struct Preset {
  std::string name;
  FourierSeries (*coefficients)(int degree, int k);
  Complex (*closed_form)(double theta, int k);
  int k = 0;  // family parameter, 0 for the fixed presets
};

bool is_preset(const std::string& name);
Preset preset(const std::string& name);       // throws std::invalid_argument (lists names)
std::vector<std::string> preset_names();      // fixed names + family patterns

FourierSeries preset_series(const std::string& name, int degree);
CircleMap preset_closed_form(const std::string& name);

// Boundary data as parsed from the JSON input format. kind is one of
// "preset", "coefficients", "samples".
struct BoundarySpec {
  std::string kind;
  std::string name;                                  // preset only
  int degree = 0;
  std::vector<std::pair<int, Complex>> coefficients; // coefficients only
  std::vector<Complex> samples;                      // samples only

  // Parse/validate. Errors carry a JSON-pointer-style location.
  static BoundarySpec from_json_text(const std::string& text);
  FourierSeries to_series() const;
};

// Trig-polynomial coefficients from uniform samples at theta_j = 2*pi*j/M:
// c_n = (1/M) sum_j s_j e^{-i n theta_j}, |n| <= N. Exact when the samples
// come from a trig polynomial of degree <= N and M >= 2N+2. M must be a
// power of two.
FourierSeries series_from_samples(std::span<const Complex> samples, int degree);

// d/dt: c_n -> (i n) c_n.
FourierSeries boundary_derivative(const FourierSeries& f);

// sum c_n e^{i n theta} by two-sided Horner.
Complex evaluate_on_circle(const FourierSeries& f, double theta);

}  // namespace discharm
