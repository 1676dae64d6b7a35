// disc-harmonics: spectral computations for harmonic functions on the unit
// disc, plus the verification suite. See README.md for the interface.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "discharm/boundary.hpp"
#include "discharm/disc_ops.hpp"
#include "discharm/norms.hpp"
#include "discharm/quadrature.hpp"
#include "discharm/verify.hpp"

namespace {

using namespace discharm;

// ---------------------------------------------------------------- output ---

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_pretty(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
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

struct Cell {
  enum Kind { Num, Text, Boolean } kind = Num;
  double num = 0.0;
  std::string text;
  bool flag = false;

  static Cell N(double v) { return {Num, v, {}, false}; }
  static Cell S(std::string s) { return {Text, 0.0, std::move(s), false}; }
  static Cell B(bool b) { return {Boolean, 0.0, {}, b}; }
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string render_cell_csv(const Cell& c) {
  if (c.kind == Cell::Num) return fmt17(c.num);
  if (c.kind == Cell::Boolean) return c.flag ? "true" : "false";
  // CSV-quote only when needed.
  if (c.text.find_first_of(",\"\n") == std::string::npos) return c.text;
  std::string out = "\"";
  for (char ch : c.text) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  return out + "\"";
}

std::string render_cell_json(const Cell& c) {
  if (c.kind == Cell::Num) {
    if (std::isnan(c.num) || std::isinf(c.num)) return "null";
    return fmt17(c.num);
  }
  if (c.kind == Cell::Boolean) return c.flag ? "true" : "false";
  return '"' + json_escape(c.text) + '"';
}

std::string render_cell_pretty(const Cell& c) {
  if (c.kind == Cell::Num) return fmt_pretty(c.num);
  if (c.kind == Cell::Boolean) return c.flag ? "true" : "false";
  return c.text;
}

std::string render_csv(const std::vector<Table>& tables) {
  std::string out;
  for (std::size_t t = 0; t < tables.size(); ++t) {
    if (t) out += "\n";
    if (tables.size() > 1) out += "# table: " + tables[t].name + "\n";
    for (std::size_t i = 0; i < tables[t].columns.size(); ++i) {
      if (i) out += ',';
      out += tables[t].columns[i];
    }
    out += '\n';
    for (const auto& row : tables[t].rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += render_cell_csv(row[i]);
      }
      out += '\n';
    }
  }
  return out;
}

std::string render_json(const std::vector<Table>& tables) {
  std::string out = tables.size() == 1 ? "" : "{\"tables\":[\n";
  for (std::size_t t = 0; t < tables.size(); ++t) {
    if (t) out += ",\n";
    out += "{\"table\":\"" + json_escape(tables[t].name) + "\",\"rows\":[";
    for (std::size_t r = 0; r < tables[t].rows.size(); ++r) {
      if (r) out += ',';
      out += "\n  {";
      const auto& row = tables[t].rows[r];
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += '"' + json_escape(tables[t].columns[i]) + "\":" + render_cell_json(row[i]);
      }
      out += '}';
    }
    out += "\n]}";
  }
  if (tables.size() > 1) out += "\n]}";
  out += '\n';
  return out;
}

std::string render_pretty(const std::vector<Table>& tables) {
  std::string out;
  for (const auto& tbl : tables) {
    if (!tbl.name.empty()) out += "== " + tbl.name + " ==\n";
    std::vector<std::size_t> width(tbl.columns.size());
    std::vector<std::vector<std::string>> cells;
    for (std::size_t i = 0; i < tbl.columns.size(); ++i) width[i] = tbl.columns[i].size();
    for (const auto& row : tbl.rows) {
      std::vector<std::string> r;
      for (std::size_t i = 0; i < row.size(); ++i) {
        r.push_back(render_cell_pretty(row[i]));
        width[i] = std::max(width[i], r.back().size());
      }
      cells.push_back(std::move(r));
    }
    auto pad = [](const std::string& s, std::size_t w) {
      return s + std::string(w - s.size(), ' ');
    };
    for (std::size_t i = 0; i < tbl.columns.size(); ++i)
      out += pad(tbl.columns[i], width[i]) + (i + 1 < tbl.columns.size() ? "  " : "");
    out += '\n';
    for (const auto& row : cells) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out += pad(row[i], width[i]) + (i + 1 < row.size() ? "  " : "");
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

std::string render(const std::vector<Table>& tables, const std::string& format) {
  if (format == "csv") return render_csv(tables);
  if (format == "json") return render_json(tables);
  return render_pretty(tables);
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(output_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + output_path);
  f << text;
}

// ----------------------------------------------------------------- input ---

struct BoundaryArgs {
  std::string preset;
  std::string spec_path;
  int degree = 1024;
};

FourierSeries load_boundary(const BoundaryArgs& a) {
  if (!a.preset.empty() && !a.spec_path.empty())
    throw std::invalid_argument("give either --preset or --spec, not both");
  if (!a.preset.empty()) return preset_series(a.preset, a.degree);
  if (!a.spec_path.empty()) {
    std::ifstream f(a.spec_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open spec file: " + a.spec_path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return BoundarySpec::from_json_text(ss.str()).to_series();
  }
  throw std::invalid_argument("boundary data required: --preset NAME or --spec FILE");
}

std::vector<DiscPoint> parse_points(const std::vector<std::string>& at) {
  std::vector<DiscPoint> pts;
  for (const auto& s : at) {
    double r = 0.0, theta = 0.0;
    char extra = 0;
    if (std::sscanf(s.c_str(), "%lf,%lf%c", &r, &theta, &extra) != 2)
      throw std::invalid_argument("--at expects r,theta (got '" + s + "')");
    pts.emplace_back(r, theta);  // validates r
  }
  return pts;
}

Exponent parse_exponent(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "INF" || s == "infinity") return Exponent::infinity();
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse exponent '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("cannot parse exponent '" + s + "'");
  return Exponent(v);  // validates p >= 1
}

std::size_t auto_panels(int degree, std::size_t requested) {
  if (requested != 0) return requested;
  std::size_t m = 4096;
  while (m < static_cast<std::size_t>(2 * degree + 2)) m *= 2;
  return m;
}

// ------------------------------------------------------------- commands ----

int cmd_extend(const BoundaryArgs& ba, const std::vector<std::string>& at, bool oracle,
               std::size_t oracle_panels, const std::string& format, const std::string& out_path) {
  const FourierSeries f = load_boundary(ba);
  const auto pts = parse_points(at);
  Table tbl;
  tbl.name = "extend";
  tbl.columns = {"r", "theta", "re", "im"};
  if (oracle) {
    tbl.columns.push_back("oracle_re");
    tbl.columns.push_back("oracle_im");
    tbl.columns.push_back("oracle_err");
  }
  CircleMap trace = [&f](double t) { return evaluate_on_circle(f, t); };
  for (const auto& z : pts) {
    const Complex v = poisson_extend(f, z);
    std::vector<Cell> row = {Cell::N(z.r()), Cell::N(z.theta()), Cell::N(v.real()),
                             Cell::N(v.imag())};
    if (oracle) {
      const OracleResult o = poisson_quadrature_oracle(trace, z, oracle_panels);
      row.push_back(Cell::N(o.value.real()));
      row.push_back(Cell::N(o.value.imag()));
      row.push_back(Cell::N(o.error_estimate));
    }
    tbl.rows.push_back(std::move(row));
  }
  emit(render({tbl}, format), out_path);
  return 0;
}

int cmd_derive(const BoundaryArgs& ba, const std::vector<std::string>& at,
               const std::string& which, bool identity, const std::string& format,
               const std::string& out_path) {
  const FourierSeries f = load_boundary(ba);
  const auto pts = parse_points(at);
  Table tbl;
  tbl.name = "derive";
  tbl.columns = {"r", "theta", "which", "re", "im"};
  if (identity) tbl.columns.push_back("identity_residual");
  for (const auto& z : pts) {
    Complex v;
    if (which == "dz") v = wirtinger_dz(f, z);
    else if (which == "dzbar") v = wirtinger_dzbar(f, z);
    else {
      const PolarDerivatives pd = polar_derivatives(f, z);
      v = which == "theta" ? pd.f_theta : pd.r_f_r;
    }
    std::vector<Cell> row = {Cell::N(z.r()), Cell::N(z.theta()), Cell::S(which),
                             Cell::N(v.real()), Cell::N(v.imag())};
    if (identity) {
      const PolarDerivatives pd = polar_derivatives(f, z);
      const Complex lhs = 2.0 * Complex(0.0, 1.0) * z.z() * wirtinger_dz(f, z);
      row.push_back(Cell::N(std::abs(lhs - pd.f_theta - Complex(0.0, 1.0) * pd.r_f_r)));
    }
    tbl.rows.push_back(std::move(row));
  }
  emit(render({tbl}, format), out_path);
  return 0;
}

int cmd_norms(const BoundaryArgs& ba, const std::string& space, const std::string& p_str,
              const std::string& of, std::size_t panels, int radial_nodes,
              const std::string& radii_str, const std::string& format,
              const std::string& out_path) {
  const FourierSeries f = load_boundary(ba);
  const Exponent p = parse_exponent(p_str);
  const std::size_t m = auto_panels(f.degree(), panels);

  FourierSeries series = f;
  if (of == "dz") series = dz_series(f).as_two_sided();
  else if (of == "dzbar") series = dzbar_series(f).as_two_sided();

  std::vector<double> radii;
  if (radii_str.empty()) {
    radii = default_hardy_radii();
  } else {
    std::stringstream ss(radii_str);
    std::string item;
    while (std::getline(ss, item, ',')) radii.push_back(std::stod(item));
  }

  NormValue nv;
  if (space == "circle") {
    nv = circle_lp_norm(series, p, m);
  } else {
    // dz/dzbar are one-sided power series; f itself extends harmonically.
    std::unique_ptr<DiscFunction> fn;
    if (of == "f") fn = std::make_unique<PoissonExtension>(f);
    else fn = std::make_unique<AnalyticFunction>(AnalyticSeries(riesz_projection(series)));
    if (space == "hardy") nv = hardy_norm(*fn, p, radii, m);
    else if (space == "bergman") nv = bergman_norm(*fn, p, radial_nodes, m);
    else throw std::invalid_argument("unknown space '" + space + "'");
  }

  Table tbl;
  tbl.name = "norms";
  tbl.columns = {"space", "p", "of", "value", "method", "error_bound", "panels", "flags"};
  std::string flags;
  if (nv.lower_bound_only) flags += "lower-bound";
  if (nv.divergent) flags += std::string(flags.empty() ? "" : ";") + "divergent";
  tbl.rows.push_back({Cell::S(space), p.is_inf() ? Cell::S("inf") : Cell::N(p.p()), Cell::S(of),
                      Cell::N(nv.value), Cell::S(nv.method_name()), Cell::N(nv.error_bound),
                      Cell::N(static_cast<double>(nv.panels)), Cell::S(flags)});
  emit(render({tbl}, format), out_path);
  return 0;
}

Table reports_table(const std::vector<VerificationReport>& reports, bool canonical) {
  Table tbl;
  tbl.name = "verify";
  tbl.columns = {"check", "seed", "observed", "bound", "margin", "pass", "runtime_ms", "params"};
  for (const auto& r : reports) {
    std::string params;
    for (const auto& pr : r.params) {
      if (!params.empty()) params += ';';
      params += pr.key + '=' + (pr.is_text ? pr.text : fmt17(pr.num));
    }
    tbl.rows.push_back({Cell::S(r.check), Cell::N(static_cast<double>(r.seed)),
                        Cell::N(r.observed), Cell::N(r.bound), Cell::N(r.margin),
                        Cell::B(r.pass), Cell::N(canonical ? 0.0 : r.runtime_ms),
                        Cell::S(params)});
  }
  return tbl;
}

int cmd_verify(const std::string& name, const std::string& p_str, int trials, int points,
               int pairs, std::uint64_t seed, double constant_scale, bool mutations,
               bool canonical, const std::string& format, const std::string& out_path) {
  std::vector<VerificationReport> reports;
  auto p_or = [&](double dflt) {
    return p_str.empty() ? Exponent(dflt) : parse_exponent(p_str);
  };
  if (name == "all") {
    RunConfig cfg;
    cfg.seed = seed;
    if (trials >= 0) cfg.trials = trials;
    if (points > 0) cfg.points = points;
    if (pairs > 0) cfg.pairs = pairs;
    cfg.include_mutations = mutations;
    reports = run_all(cfg);
  } else if (name == "riesz" || name == "riesz_inequality") {
    reports.push_back(check_riesz_inequality(p_or(3.0), trials < 0 ? 200 : trials, seed,
                                             constant_scale));
  } else if (name == "main" || name == "main_theorem_lp") {
    reports.push_back(check_main_theorem_lp(p_or(2.0), trials < 0 ? 500 : trials, seed,
                                            constant_scale));
  } else if (name == "identity" || name == "identity_2izfz") {
    reports.push_back(check_identity_2izfz(trials < 0 ? 100 : trials, seed,
                                           points > 0 ? points : 20));
  } else if (name == "polar" || name == "polar_lemma") {
    reports.push_back(check_polar_lemma(trials < 0 ? 50 : trials, seed,
                                        points > 0 ? points : 12, constant_scale));
  } else if (name == "endpoint" || name == "endpoint_failure") {
    reports.push_back(check_endpoint_failure());
  } else if (name == "pointwise" || name == "pointwise_bound") {
    reports.push_back(check_pointwise_bound(p_or(2.0), trials < 0 ? 50 : trials, seed,
                                            points > 0 ? points : 6, constant_scale));
  } else if (name == "jensen" || name == "jensen_step") {
    reports.push_back(check_jensen_step(p_or(2.0), points > 0 ? points : 10, constant_scale));
  } else if (name == "holder" || name == "holder_continuity") {
    reports.push_back(check_holder_continuity(p_or(2.0), pairs > 0 ? pairs : 4096, seed));
  } else {
    throw std::invalid_argument(
        "unknown check '" + name +
        "'; available: all, riesz, main, identity, polar, endpoint, pointwise, jensen, holder");
  }

  if (format == "json") {
    emit(reports_to_json(reports, !canonical) + "\n", out_path);
  } else {
    emit(render({reports_table(reports, canonical)}, format), out_path);
  }
  return all_pass(reports) ? 0 : 1;
}

int cmd_example(int degree, const std::string& emit_mode, const std::string& out_path) {
  std::vector<Table> tables;

  const FourierSeries f = preset_series("abs_t", degree);
  const FourierSeries fdot = boundary_derivative(f);
  const FourierSeries hfdot = hilbert_transform(fdot);
  const AnalyticSeries dz = dz_series(f);

  {
    // Coefficients of i z f_z vs the closed form -(2i/pi)/n at odd n.
    Table t;
    t.name = "izfz_coefficients";
    t.columns = {"n", "re", "im", "closed_re", "closed_im", "abs_err"};
    for (int n = 1; n <= 15; n += 2) {
      const Complex a = dz.coeff(n - 1);     // coefficient of z^{n-1} in f_z
      const Complex izfz = Complex(0.0, 1.0) * a;  // z f_z shifts the power
      const Complex closed(0.0, -2.0 / (kPi * n));
      t.rows.push_back({Cell::N(n), Cell::N(izfz.real()), Cell::N(izfz.imag()),
                        Cell::N(closed.real()), Cell::N(closed.imag()),
                        Cell::N(std::abs(izfz - closed))});
    }
    tables.push_back(std::move(t));
  }

  {
    // Fdot and H(Fdot), spectral vs (2/pi) ln|tan(theta/2)|.
    Table t;
    t.name = "theta_grid";
    t.columns = {"theta", "fdot", "h_spectral", "h_closed", "abs_err"};
    for (int j = 0; j < 100; ++j) {
      const double theta = 0.1 + (kPi - 0.2) * static_cast<double>(j) / 99.0;
      const double fd = evaluate_on_circle(fdot, theta).real();
      const double hs = evaluate_on_circle(hfdot, theta).real();
      const double hc = (2.0 / kPi) * std::log(std::abs(std::tan(0.5 * theta)));
      t.rows.push_back({Cell::N(theta), Cell::N(fd), Cell::N(hs), Cell::N(hc),
                        Cell::N(std::abs(hs - hc))});
    }
    tables.push_back(std::move(t));
  }

  {
    // |f_z| along the positive radius vs (2/(pi r)) atanh(r).
    Table t;
    t.name = "r_grid";
    t.columns = {"r", "fz_abs", "fz_closed_abs", "abs_err"};
    for (double r : {0.5, 0.9, 0.99, 0.999}) {
      const double series_abs = std::abs(dz.evaluate(Complex(r, 0.0)));
      const double closed = 2.0 / (kPi * r) * std::atanh(r);
      t.rows.push_back(
          {Cell::N(r), Cell::N(series_abs), Cell::N(closed), Cell::N(std::abs(series_abs - closed))});
    }
    tables.push_back(std::move(t));
  }

  {
    // Grid max of |H(Fdot)| under 4x refinement towards theta = 0.
    Table t;
    t.name = "growth";
    t.columns = {"level", "h", "grid_max", "increment"};
    double prev = 0.0;
    for (int level = 0; level <= 3; ++level) {
      const int scale = 1 << (2 * level);
      const FourierSeries hl = hilbert_transform(preset_series("square_wave", 2048 * scale - 1));
      const double h = (kPi / 128.0) / static_cast<double>(scale);
      double gmax = 0.0;
      for (int j = 1; j <= 32; ++j)
        gmax = std::max(gmax, std::abs(evaluate_on_circle(hl, j * h)));
      t.rows.push_back({Cell::N(level), Cell::N(h), Cell::N(gmax),
                        level == 0 ? Cell::S("") : Cell::N(gmax - prev)});
      prev = gmax;
    }
    tables.push_back(std::move(t));
  }

  emit(render(tables, emit_mode == "csv" ? "csv" : "pretty"), out_path);
  return 0;
}

void setup_threads() {
#ifdef _OPENMP
  if (const char* tv = std::getenv("DISC_HARMONICS_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(tv, &end, 10);
    if (end != tv && *end == '\0' && n > 0) omp_set_num_threads(static_cast<int>(n));
  }
#endif
}

}  // namespace

int main(int argc, char** argv) {
  setup_threads();

  CLI::App app{"Harmonic functions on the unit disc: extensions, conjugates, "
               "Wirtinger/polar derivatives, norms, and a verification suite."};
  app.require_subcommand(1);

  std::string format = "pretty", out_path;
  BoundaryArgs ba;
  std::vector<std::string> at;
  bool oracle = false;
  std::size_t oracle_panels = 4096;
  std::string which = "dz", space = "circle", p_str, of = "f", radii_str;
  std::size_t panels = 0;
  int radial_nodes = 64;
  bool identity = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: pretty, json, csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    cmd->add_option("--output", out_path, "write to file instead of stdout");
  };
  auto add_boundary = [&](CLI::App* cmd) {
    cmd->add_option("--preset", ba.preset, "named boundary data (abs_t, square_wave, "
                    "poisson_boundary, harmonic_<k>, cos_<k>, sin_<k>)");
    cmd->add_option("--spec", ba.spec_path, "boundary spec JSON file");
    cmd->add_option("--N", ba.degree, "truncation degree (default 1024)");
  };

  CLI::App* extend = app.add_subcommand("extend", "evaluate the harmonic extension P[f]");
  add_common(extend);
  add_boundary(extend);
  extend->add_option("--at", at, "evaluation point r,theta (repeatable)")->required();
  extend->add_flag("--oracle", oracle, "append quadrature-oracle columns");
  extend->add_option("--oracle-M", oracle_panels, "oracle panel count (default 4096)");

  CLI::App* derive = app.add_subcommand("derive", "evaluate Wirtinger/polar derivatives");
  add_common(derive);
  add_boundary(derive);
  derive->add_option("--at", at, "evaluation point r,theta (repeatable)")->required();
  derive->add_option("--which", which, "dz, dzbar, theta, rfr")
      ->check(CLI::IsMember({"dz", "dzbar", "theta", "rfr"}));
  derive->add_flag("--identity", identity, "append the 2izf_z = f_theta + i r f_r residual");

  CLI::App* norms = app.add_subcommand("norms", "circle / Hardy / Bergman norms");
  add_common(norms);
  add_boundary(norms);
  norms->add_option("--space", space, "circle, hardy, bergman")
      ->check(CLI::IsMember({"circle", "hardy", "bergman"}));
  norms->add_option("--p", p_str, "exponent in [1, inf], or 'inf'")->required();
  norms->add_option("--of", of, "f, dz, dzbar")->check(CLI::IsMember({"f", "dz", "dzbar"}));
  norms->add_option("--M", panels, "angular panels (0 = auto from degree)");
  norms->add_option("--radial-nodes", radial_nodes, "Gauss-Legendre nodes per radial panel");
  norms->add_option("--radii", radii_str, "comma-separated radii for hardy (default 1-2^-k)");

  std::string check_name = "all";
  int trials = -1, points = 0, pairs = 0;
  std::uint64_t seed = 20260813;
  double constant_scale = 1.0;
  bool no_mutations = false, canonical = false;

  CLI::App* verify = app.add_subcommand("verify", "run verification checks");
  add_common(verify);
  verify->add_option("check", check_name,
                     "all, riesz, main, identity, polar, endpoint, pointwise, jensen, holder");
  verify->add_option("--p", p_str, "exponent for p-parameterized checks");
  verify->add_option("--trials", trials, "random trial count");
  verify->add_option("--points", points, "evaluation points per trial");
  verify->add_option("--pairs", pairs, "sample pairs (holder)");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--constant-scale", constant_scale,
                     "scale the bound constant (0.5 = known-violation mutation)");
  verify->add_flag("--no-mutations", no_mutations, "skip mutation companions in 'all'");
  verify->add_flag("--canonical", canonical, "zero runtime_ms for byte-stable output");

  int example_n = 8191;
  std::string emit_mode = "table";
  CLI::App* example = app.add_subcommand("example", "worked |t| example end-to-end");
  example->add_option("--N", example_n, "truncation degree (default 8191)");
  example->add_option("--emit", emit_mode, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}));
  example->add_option("--output", out_path, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (extend->parsed())
      return cmd_extend(ba, at, oracle, oracle_panels, format, out_path);
    if (derive->parsed())
      return cmd_derive(ba, at, which, identity, format, out_path);
    if (norms->parsed())
      return cmd_norms(ba, space, p_str, of, panels, radial_nodes, radii_str, format, out_path);
    if (verify->parsed())
      return cmd_verify(check_name, p_str, trials, points, pairs, seed, constant_scale,
                        !no_mutations, canonical, format, out_path);
    if (example->parsed()) return cmd_example(example_n, emit_mode, out_path);
  } catch (const std::domain_error& e) {
    std::cerr << "numeric-domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
