// Acceptance harness: one pass/fail line per criterion, with the measured
// value and the pinned bound. Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oscfact/factorize.hpp"
#include "oscfact/families.hpp"
#include "oscfact/figures.hpp"
#include "oscfact/grid.hpp"
#include "oscfact/verify.hpp"

namespace fs = std::filesystem;
using namespace oscfact;
using Clock = std::chrono::steady_clock;

namespace {

const FamilyParams kTrig{FamilyKind::trigonometric, 3.5, 2.0};
const FamilyParams kHyp{FamilyKind::hyperbolic, 1.0, 0.5};
const SuperpositionConstants kTrigC{Complex(2.0 / 7.0), Complex(7.0 / 4.0)};
const SuperpositionConstants kHypC{Complex(2.0), Complex(-1.0)};

bool g_all_pass = true;

void report(int id, bool pass, double measured, double bound,
            const std::string& what, const std::string& note = "") {
  g_all_pass = g_all_pass && pass;
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << what
            << "  measured " << measured << "  bound " << bound
            << (note.empty() ? "" : "  [" + note + "]") << '\n';
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double rk_error(const FamilyParams& p, const SuperpositionConstants& c,
                double t1, std::size_t n) {
  const TimeGrid grid = make_grid(0.0, t1, n);
  const CJet y0 = solution_jet(p, c, 0.0);
  const SampledField y =
      integrate_ivp(family_partner(p), {0.0, y0.v, y0.d1}, grid);
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.n; ++k)
    worst =
        std::max(worst, std::abs(y.values[k] - solution(p, c, grid.time(k))));
  return worst;
}

double alpha_error(std::size_t n) {
  const TimeGrid grid = make_grid(0.0, 0.4, n);
  const FactorSolution sol =
      alpha_numeric(family_coefficients(kTrig), family_seed(kTrig),
                    Complex(lambda_numeric(kTrig)), grid);
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.n; ++k) {
    const CJet closed = trig_alpha_jet(kTrig, grid.time(k));
    worst = std::max(worst, std::abs(sol.alpha.values[k] - closed.v));
  }
  return worst;
}

double roundtrip_error(const FamilyParams& p, double t1) {
  const TimeGrid grid = make_grid(0.0, t1, 4001);
  const CoefficientPair coeffs = family_coefficients(p);
  const FactorSolution sol = alpha_numeric(
      coeffs, family_seed(p), Complex(lambda_numeric(p)), grid);
  const CoefficientPair back = reconstruct_fg(sol);
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.n; ++k) {
    const double t = grid.time(k);
    worst = std::max(worst, std::abs(back.f(t) - coeffs.f(t)));
    worst = std::max(worst, std::abs(back.g(t) - coeffs.g(t)));
  }
  return worst;
}

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

Csv parse_csv(const fs::path& path) {
  Csv out;
  std::ifstream in(path);
  std::string line;
  if (std::getline(in, line)) {
    std::istringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');)
      out.header.push_back(cell);
  }
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::vector<double> row;
    for (std::string cell; std::getline(ss, cell, ',');)
      row.push_back(std::stod(cell));
    out.rows.push_back(row);
  }
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const Clock::time_point suite_start = Clock::now();

  // 1. Riccati seed residuals with analytic derivatives.
  {
    const Clock::time_point start = Clock::now();
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const double t_trig = 0.4 * (k + 0.5) / 1000.0;
      worst = std::max(worst, std::abs(riccati_residual(
                                  family_seed(kTrig),
                                  family_coefficients(kTrig), t_trig)));
      const double t_hyp = 5.0 * (k + 0.5) / 1000.0;
      worst = std::max(worst,
                       std::abs(riccati_residual(family_seed(kHyp),
                                                 family_coefficients(kHyp),
                                                 t_hyp)));
    }
    const double elapsed = seconds_since(start);
    report(1, worst < 1e-12 && elapsed < 1.0, worst, 1e-12,
           "Riccati seed residual, 1000 points per family",
           "elapsed " + sci(elapsed) + " s, limit 1 s");
  }

  // 2. Quadrature pipeline round trip.
  {
    const Clock::time_point start = Clock::now();
    const double worst =
        std::max(roundtrip_error(kTrig, 0.4), roundtrip_error(kHyp, 2.0));
    const double elapsed = seconds_since(start);
    report(2, worst < 1e-4 && elapsed < 5.0, worst, 1e-4,
           "coefficient reconstruction round trip",
           "elapsed " + sci(elapsed) + " s, limit 5 s");
  }

  // 3. Closed form vs pipeline, plus Simpson-order convergence.
  {
    const double cross = std::max(
        crosscheck_family(kTrig, make_grid(0.0, 0.4, 4001)).max_deviation,
        crosscheck_family(kHyp, make_grid(0.0, 2.0, 4001)).max_deviation);
    const double e1 = alpha_error(251);
    const double e2 = alpha_error(501);
    const double e3 = alpha_error(1001);
    const double ratio = std::min(e1 / e2, e2 / e3);
    report(3, cross < 1e-4 && ratio >= 8.0, cross, 1e-4,
           "closed form vs quadrature pipeline",
           "refinement ratio " + sci(ratio) + ", need >= 8");
  }

  // 4. Closed-form solutions satisfy their partner equations.
  {
    const double worst = std::max(
        ode_residual([&](double t) { return trig_solution_jet(kTrig, kTrigC, t); },
                     family_partner(kTrig), make_grid(0.0, 2.0, 1001)),
        ode_residual([&](double t) { return hyp_solution_jet(kHyp, kHypC, t); },
                     family_partner(kHyp), make_grid(0.0, 5.0, 1001)));
    report(4, worst < 1e-9, worst, 1e-9,
           "solution residuals with analytic derivatives");
  }

  // 5. Runge-Kutta oracle agreement and observed order.
  {
    const double worst = std::max(rk_error(kTrig, kTrigC, 0.44, 8001),
                                  rk_error(kHyp, kHypC, 5.0, 8001));
    const double e1 = rk_error(kTrig, kTrigC, 0.4, 51);
    const double e2 = rk_error(kTrig, kTrigC, 0.4, 101);
    const double e3 = rk_error(kTrig, kTrigC, 0.4, 201);
    const double ratio = std::min(e1 / e2, e2 / e3);
    report(5, worst < 1e-6 && ratio >= 12.0, worst, 1e-6,
           "fixed-step RK4 vs closed forms",
           "halving ratio " + sci(ratio) + ", need >= 12");
  }

  // 6. Singularity logic.
  {
    const TimeGrid wide = make_grid(-10.0, 10.0, 40001);
    const bool empty_ok = singularity_scan(kTrig, wide).empty() &&
                          singularity_scan(kHyp, wide).empty();
    const auto roots =
        singularity_scan({FamilyKind::trigonometric, 1.0, 0.5},
                         make_grid(0.0, 2.0, 4001));
    const double pi = std::acos(-1.0);
    const double root_err =
        roots.empty() ? 1.0 : std::abs(roots.front() - pi / 4.0);
    report(6, empty_ok && root_err < 1e-9, root_err, 1e-9,
           "singularity scans: figure windows clean, pi/4 root located");
  }

  // 7. Hyperbolic asymptotics at t = 10.
  {
    const FamilySnapshot far = hyp_snapshot(kHyp, 10.0);
    const double zeta = std::abs(far.zeta);
    const double gdev = std::abs(far.frequency + Complex(1.0));
    const double printed = std::abs(hyp_frequency_printed(kHyp, 10.0));
    report(7, zeta < 1e-6 && gdev < 1e-6 && printed < 1e-3,
           std::max(zeta, gdev), 1e-6,
           "damping ratio and frequency limits at t = 10",
           "first-power sinh variant tends to 0, measured " +
               sci(printed));
  }

  // 8. Identities: v-connection, Wronskians, Abel relation.
  {
    // v-connection with the quoted constants (1/w0, w0/2).
    double vdev = 0.0;
    for (double t : {0.1, 0.2, 0.35, 0.7, 1.1}) {
      const Complex lhs = trig_solution(
          kTrig, {Complex(1.0 / 3.5), Complex(3.5 / 2.0)}, t);
      const auto [v1, v2] = trig_v_modes(3.5, t);
      const double c = std::cos(3.5 * t);
      const Complex rhs = -c / principal_sqrt(Complex(c * c - 2.0)) *
                          (v1 + Complex(0.0, 1.0) * v2);
      vdev = std::max(vdev, std::abs(lhs - rhs));
    }
    // The same identity with rescaled constants (-1/w0, -2 w0).
    double vdev_rescaled = 0.0;
    for (double t : {0.1, 0.2, 0.35, 0.7, 1.1}) {
      const Complex lhs =
          trig_solution(kTrig, {Complex(-1.0 / 3.5), Complex(-7.0)}, t);
      const auto [v1, v2] = trig_v_modes(3.5, t);
      const double c = std::cos(3.5 * t);
      const Complex rhs = -c / principal_sqrt(Complex(c * c - 2.0)) *
                          (v1 + Complex(0.0, 1.0) * v2);
      vdev_rescaled = std::max(vdev_rescaled, std::abs(lhs - rhs));
    }

    double wdrift = 0.0;
    {
      for (double t : {0.1, 0.3, 0.41, 1.0, 2.0}) {
        const auto [v1, v2] = trig_v_modes_jet(3.5, t);
        wdrift = std::max(
            wdrift, std::abs(wronskian({t, v1.v, v1.d1}, {t, v2.v, v2.d1}) -
                             Complex(3.5)));
        const auto m = hyp_u_w_modes_jet(1.0, t);
        wdrift = std::max(
            wdrift, std::abs(wronskian({t, m[0].v, m[0].d1},
                                       {t, m[1].v, m[1].d1}) -
                             Complex(1.0)));
        wdrift = std::max(
            wdrift, std::abs(wronskian({t, m[2].v, m[2].d1},
                                       {t, m[3].v, m[3].d1}) -
                             Complex(1.0)));
      }
    }

    const auto abel_drift = [](const FamilyParams& p, double t1) {
      const TimeGrid grid = make_grid(0.0, t1, 4001);
      const PartnerODE ode = family_partner(p);
      const SampledField damping = sample(grid, ode.damping);
      const SampledField phi = cumulative_integral(damping);
      const SuperpositionConstants ca{Complex(1.0), Complex(0.0)};
      const SuperpositionConstants cb{Complex(0.0), Complex(1.0)};
      const auto state = [&](const SuperpositionConstants& c, double t) {
        const CJet y = solution_jet(p, c, t);
        return IvpState{t, y.v, y.d1};
      };
      const Complex w0 = wronskian(state(ca, 0.0), state(cb, 0.0));
      double worst = 0.0;
      for (std::size_t k = 0; k < grid.n; ++k) {
        const double t = grid.time(k);
        const Complex expect = w0 * std::exp(-phi.values[k]);
        worst = std::max(
            worst, std::abs(wronskian(state(ca, t), state(cb, t)) - expect));
      }
      return worst;
    };
    const double abel =
        std::max(abel_drift(kTrig, 0.4), abel_drift(kHyp, 2.0));

    report(8, vdev < 1e-10 && wdrift < 1e-9 && abel < 1e-6, vdev, 1e-10,
           "mode identities: v-connection with (1/w0, w0/2), Wronskians, Abel",
           "identity holds with rescaled constants (-1/w0, -2 w0), deviation " +
               sci(vdev_rescaled) + "; Wronskian drift " +
               sci(wdrift) + "; Abel drift " +
               sci(abel));
  }

  // 9. Figure CSVs: deterministic bytes plus periodic imaginary part.
  {
    bool ok = !cli.empty();
    std::string note = cli.empty() ? "CLI path missing from argv[1]" : "";
    if (ok) {
      const fs::path dir =
          fs::temp_directory_path() /
          ("oscfact-acceptance-" + std::to_string(std::rand()));
      fs::create_directories(dir / "a");
      fs::create_directories(dir / "b");
      for (int id = 1; id <= 9 && ok; ++id) {
        const fs::path a = dir / "a" / ("fig" + std::to_string(id) + ".csv");
        const fs::path b = dir / "b" / ("fig" + std::to_string(id) + ".csv");
        const std::string base = cli + " figure --id " + std::to_string(id);
        if (std::system((base + " --out " + a.string() + " > /dev/null")
                            .c_str()) != 0 ||
            std::system((base + " --out " + b.string() + " > /dev/null")
                            .c_str()) != 0) {
          ok = false;
          note = "figure emission failed for id " + std::to_string(id);
          break;
        }
        if (slurp(a) != slurp(b)) {
          ok = false;
          note = "repeated runs differ for id " + std::to_string(id);
        }
      }
      double period_dev = 0.0;
      if (ok) {
        const Csv fig1 = parse_csv(dir / "a" / "fig1.csv");
        ok = fig1.rows.size() == 2001 && fig1.header.size() == 5;
        const double period = std::acos(-1.0) / 3.5;
        for (const auto& row : fig1.rows) {
          if (row[0] + period > 4.0) break;
          const double shifted =
              trig_solution(kTrig, kTrigC, row[0] + period).imag();
          period_dev = std::max(period_dev, std::abs(row[2] - shifted));
        }
        ok = ok && period_dev < 1e-9;
        note = "Im-part period deviation " + sci(period_dev);
      }
      fs::remove_all(dir);
      const double elapsed = seconds_since(suite_start);
      ok = ok && elapsed < 30.0;
      report(9, ok, period_dev, 1e-9,
             "figure CSVs byte-identical and Im part pi/w0-periodic",
             note + "; total elapsed " + sci(elapsed) +
                 " s, limit 30 s");
    } else {
      report(9, false, 1.0, 0.0, "figure CSVs", note);
    }
  }

  return g_all_pass ? EXIT_SUCCESS : EXIT_FAILURE;
}
