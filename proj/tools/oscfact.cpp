// Command-line front end: evaluate family members, emit figure data series,
// scan for singular times, run the verification suites, and run the generic
// factorization pipeline.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oscfact/families.hpp"
#include "oscfact/factorize.hpp"
#include "oscfact/figures.hpp"
#include "oscfact/grid.hpp"
#include "oscfact/suites.hpp"
#include "oscfact/verify.hpp"

namespace {

using oscfact::Complex;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return Complex(std::stod(text), 0.0);
  return Complex(std::stod(text.substr(0, comma)),
                 std::stod(text.substr(comma + 1)));
}

std::string format_sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return buf;
}

struct CommonFlags {
  std::string kind = "trig";
  double omega0 = 3.5;
  double k0 = 1.0;
  double lambda = 2.0;
  std::string c1 = "1", c2 = "0", c3 = "1", c4 = "0";
  double t0 = 0.0, t1 = 4.0;
  std::size_t n = 2001;
  std::string out;

  oscfact::FamilyParams params() const {
    if (kind == "trig")
      return {oscfact::FamilyKind::trigonometric, omega0, lambda};
    if (kind == "hyp") return {oscfact::FamilyKind::hyperbolic, k0, lambda};
    throw CLI::ValidationError("--kind must be trig or hyp");
  }
  oscfact::SuperpositionConstants constants() const {
    if (kind == "trig") return {parse_complex(c1), parse_complex(c2)};
    return {parse_complex(c3), parse_complex(c4)};
  }
  oscfact::TimeGrid window() const { return oscfact::make_grid(t0, t1, n); }
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool with_constants) {
  cmd->add_option("--kind", flags.kind, "family kind: trig or hyp");
  cmd->add_option("--omega0", flags.omega0, "trigonometric rate");
  cmd->add_option("--k0", flags.k0, "hyperbolic rate");
  cmd->add_option("--lambda", flags.lambda, "deformation parameter");
  cmd->add_option("--t0", flags.t0, "window start");
  cmd->add_option("--t1", flags.t1, "window end");
  cmd->add_option("--n", flags.n, "sample count");
  cmd->add_option("--out", flags.out, "output CSV path");
  if (with_constants) {
    cmd->add_option("--c1", flags.c1, "trig constant C1, re[,im]");
    cmd->add_option("--c2", flags.c2, "trig constant C2, re[,im]");
    cmd->add_option("--c3", flags.c3, "hyperbolic constant C3, re[,im]");
    cmd->add_option("--c4", flags.c4, "hyperbolic constant C4, re[,im]");
  }
}

void write_complex_series(const std::string& path, const oscfact::TimeGrid& grid,
                          const std::function<Complex(double)>& f) {
  std::vector<oscfact::SeriesRecord> rows;
  rows.reserve(grid.n);
  for (std::size_t k = 0; k < grid.n; ++k) {
    const double t = grid.time(k);
    const Complex y = f(t);
    rows.push_back({{t, y.real(), y.imag(), std::abs(y)}});
  }
  oscfact::write_series_csv(path, {"t", "re", "im", "abs"}, rows);
}

// Flat JSON object mirroring the long flags; command-line flags override.
std::vector<std::string> inject_config(const std::vector<std::string>& args) {
  std::string config_path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size())
        throw CLI::ValidationError("--config needs a file path");
      config_path = args[++i];
    } else {
      rest.push_back(args[i]);
    }
  }
  if (config_path.empty()) return rest;
  std::ifstream in(config_path);
  if (!in) throw CLI::ValidationError("cannot read config file " + config_path);
  nlohmann::json cfg = nlohmann::json::parse(in);
  if (!cfg.is_object())
    throw CLI::ValidationError("config file must hold a JSON object");

  std::vector<std::string> merged;
  if (!rest.empty()) merged.push_back(rest.front());  // subcommand name
  for (const auto& [key, value] : cfg.items()) {
    merged.push_back("--" + key);
    if (value.is_string())
      merged.push_back(value.get<std::string>());
    else
      merged.push_back(value.dump());
  }
  merged.insert(merged.end(), rest.begin() + (rest.empty() ? 0 : 1), rest.end());
  return merged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parametric-oscillator factorization toolkit"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  CommonFlags family_flags;
  auto* family = app.add_subcommand("family", "emit a solution series");
  add_common_flags(family, family_flags, true);

  CommonFlags figure_flags;
  int figure_id = 0;
  auto* figure = app.add_subcommand("figure", "emit a figure data series");
  figure->add_option("--id", figure_id, "figure id, 1..9")->required();
  add_common_flags(figure, figure_flags, true);

  CommonFlags scan_flags;
  scan_flags.n = 4001;
  auto* scan = app.add_subcommand("scan", "list singular times in a window");
  add_common_flags(scan, scan_flags, false);

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite,
                     "one of all, factorize, families, verify");

  CommonFlags fact_flags;
  fact_flags.t1 = 0.4;
  auto* factorize = app.add_subcommand(
      "factorize", "run the quadrature pipeline and report residuals");
  add_common_flags(factorize, fact_flags, false);

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = inject_config(args);
    std::vector<const char*> cargs{argv[0]};
    for (const auto& a : args) cargs.push_back(a.c_str());
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*family) {
      const std::string out =
          family_flags.out.empty() ? "family.csv" : family_flags.out;
      const auto p = family_flags.params();
      const auto c = family_flags.constants();
      write_complex_series(out, family_flags.window(), [&](double t) {
        return oscfact::solution(p, c, t);
      });
      std::cout << out << '\n';
    } else if (*figure) {
      oscfact::FigureSpec spec = oscfact::figure_spec(figure_id);
      if (figure->count("--kind") || figure->count("--lambda") ||
          figure->count("--omega0") || figure->count("--k0"))
        spec.params = figure_flags.params();
      if (figure->count("--c1") || figure->count("--c2") ||
          figure->count("--c3") || figure->count("--c4"))
        spec.constants = figure_flags.constants();
      if (figure->count("--t0") || figure->count("--t1") ||
          figure->count("--n"))
        spec.window = oscfact::make_grid(
            figure->count("--t0") ? figure_flags.t0 : spec.window.t0,
            figure->count("--t1") ? figure_flags.t1 : spec.window.t1,
            figure->count("--n") ? figure_flags.n : spec.window.n);
      const std::string out = figure_flags.out.empty()
                                  ? "figure" + std::to_string(figure_id) + ".csv"
                                  : figure_flags.out;
      oscfact::emit_figure(spec, out);
      std::cout << out << '\n';
    } else if (*scan) {
      const auto roots =
          oscfact::singularity_scan(scan_flags.params(), scan_flags.window());
      for (double r : roots) std::cout << format_sci(r) << '\n';
    } else if (*verify) {
      const auto results = oscfact::run_suite(suite);
      bool all_ok = true;
      for (const auto& r : results) {
        all_ok = all_ok && r.pass;
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "  measured "
                  << format_sci(r.measured) << "  bound "
                  << format_sci(r.bound)
                  << (r.note.empty() ? "" : "  (" + r.note + ")") << '\n';
      }
      return all_ok ? kExitOk : kExitUsage;
    } else if (*factorize) {
      const auto p = fact_flags.params();
      const auto coeffs = oscfact::family_coefficients(p);
      const auto seed = oscfact::family_seed(p);
      const auto grid = fact_flags.window();
      const auto sol = oscfact::alpha_numeric(
          coeffs, seed, Complex(oscfact::lambda_numeric(p, grid.t0)), grid);
      double bern = 0.0;
      for (std::size_t k = 0; k < grid.n; ++k)
        bern = std::max(bern, std::abs(oscfact::bernoulli_residual(
                                  sol, seed, coeffs, grid.time(k))));
      const auto back = oscfact::reconstruct_fg(sol);
      double roundtrip = 0.0;
      for (std::size_t k = 0; k < grid.n; ++k) {
        const double t = grid.time(k);
        roundtrip = std::max(roundtrip, std::abs(back.f(t) - coeffs.f(t)));
        roundtrip = std::max(roundtrip, std::abs(back.g(t) - coeffs.g(t)));
      }
      std::cout << "max bernoulli residual " << format_sci(bern) << '\n'
                << "max roundtrip deviation " << format_sci(roundtrip) << '\n';
      if (!fact_flags.out.empty()) {
        write_complex_series(fact_flags.out, grid, [&](double t) {
          return sol.alpha.at_time(t);
        });
        std::cout << fact_flags.out << '\n';
      }
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const oscfact::SingularTime& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const oscfact::SingularDenominator& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const oscfact::NonFiniteState& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}
