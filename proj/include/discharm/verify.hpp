#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "discharm/norms.hpp"

namespace discharm {

// One key/value parameter recorded in a report (number or string).
struct ReportParam {
  std::string key;
  double num = 0.0;
  std::string text;
  bool is_text = false;
};

// Result of one named check. margin = (bound - observed) / bound, so a
// passing <=-type check has margin >= 0 (up to the check's stated slack);
// demonstration checks are normalized so that observed <= bound == 1 means
// every required condition held.
struct VerificationReport {
  std::string check;
  std::vector<ReportParam> params;
  double observed = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  bool pass = false;
  double runtime_ms = 0.0;
  std::uint64_t seed = 0;

  void param(const std::string& key, double value);
  void param(const std::string& key, const std::string& value);
  // include_runtime=false zeroes runtime_ms for byte-stable comparison.
  std::string to_json(bool include_runtime = true) const;
};

std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            bool include_runtime = true);
bool all_pass(const std::vector<VerificationReport>& reports);

// Seeded random trial data. The raw stream is mt19937_64 with a fixed
// 53-bit mapping to doubles (no std::distribution types), so the sequence
// is identical across standard libraries.
class TrialGenerator {
 public:
  TrialGenerator(std::uint64_t seed, int min_degree, int max_degree);

  // Complex-Gaussian coefficients, then the requested projections:
  // real_valued (c_{-n} = conj(c_n)), zero_mean (c_0 = 0), analytic
  // (c_n = 0 for n < 0). Projections do not perturb the draw stream.
  FourierSeries next_series(bool real_valued, bool zero_mean, bool analytic);
  DiscPoint next_point(double max_r);
  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);

 private:
  double unit();
  double gaussian();

  std::mt19937_64 eng_;
  int min_degree_, max_degree_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// --- checks -----------------------------------------------------------------
// constant_scale multiplies the bound constant; 0.5 is the known-violation
// mutation used to prove the comparisons are not vacuous.

VerificationReport check_riesz_inequality(const Exponent& p, int trials, std::uint64_t seed,
                                          double constant_scale = 1.0);
VerificationReport check_main_theorem_lp(const Exponent& p, int trials, std::uint64_t seed,
                                         double constant_scale = 1.0);
VerificationReport check_identity_2izfz(int trials, std::uint64_t seed, int points);
VerificationReport check_polar_lemma(int trials, std::uint64_t seed, int points,
                                     double constant_scale = 1.0);
VerificationReport check_endpoint_failure();
VerificationReport check_pointwise_bound(const Exponent& p, int trials, std::uint64_t seed,
                                         int points, double constant_scale = 1.0);
VerificationReport check_jensen_step(const Exponent& p, int points, double constant_scale = 1.0);
VerificationReport check_holder_continuity(const Exponent& p, int pairs, std::uint64_t seed);

struct RunConfig {
  std::uint64_t seed = 20260813;
  int trials = 200;          // per-p trial count for inequality sweeps
  int parseval_trials = 500; // p = 2 exact-route trial count
  int points = 20;
  int pairs = 4096;
  bool include_mutations = true;
};

// Fixed-order full suite; per-check exceptions become failed reports, the
// suite itself never throws.
std::vector<VerificationReport> run_all(const RunConfig& config);

}  // namespace discharm
