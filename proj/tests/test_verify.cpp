#include <doctest.h>

#include <cmath>

#include "oscfact/families.hpp"
#include "oscfact/suites.hpp"
#include "oscfact/verify.hpp"

using namespace oscfact;

namespace {

const FamilyParams kTrig{FamilyKind::trigonometric, 3.5, 2.0};
const FamilyParams kHyp{FamilyKind::hyperbolic, 1.0, 0.5};
const SuperpositionConstants kTrigC{Complex(2.0 / 7.0), Complex(7.0 / 4.0)};
const SuperpositionConstants kHypC{Complex(2.0), Complex(-1.0)};

}  // namespace

TEST_CASE("rk4 reproduces the harmonic oscillator") {
  const PartnerODE ode{[](double) { return Complex(0.0); },
                       [](double) { return Complex(12.25); }};
  const TimeGrid grid = make_grid(0.0, 2.0, 4001);
  const SampledField y =
      integrate_ivp(ode, {0.0, Complex(1.0), Complex(0.0)}, grid);
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.n; ++k)
    worst = std::max(worst,
                     std::abs(y.values[k] - std::cos(3.5 * grid.time(k))));
  CHECK(worst < 1e-8);
}

TEST_CASE("rk4 reproduces cosh for the upside-down sign") {
  const PartnerODE ode{[](double) { return Complex(0.0); },
                       [](double) { return Complex(-1.0); }};
  const TimeGrid grid = make_grid(0.0, 3.0, 4001);
  const SampledField y =
      integrate_ivp(ode, {0.0, Complex(1.0), Complex(0.0)}, grid);
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.n; ++k)
    worst = std::max(worst, std::abs(y.values[k] - std::cosh(grid.time(k))));
  CHECK(worst < 1e-7);
}

TEST_CASE("rk4 tracks the closed forms on pole-free windows") {
  {
    const TimeGrid grid = make_grid(0.0, 0.44, 8001);
    const CJet y0 = trig_solution_jet(kTrig, kTrigC, 0.0);
    const SampledField y =
        integrate_ivp(family_partner(kTrig), {0.0, y0.v, y0.d1}, grid);
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.n; ++k)
      worst = std::max(
          worst, std::abs(y.values[k] - trig_solution(kTrig, kTrigC,
                                                      grid.time(k))));
    CHECK(worst < 1e-6);
  }
  {
    const TimeGrid grid = make_grid(0.0, 5.0, 8001);
    const CJet y0 = hyp_solution_jet(kHyp, kHypC, 0.0);
    const SampledField y =
        integrate_ivp(family_partner(kHyp), {0.0, y0.v, y0.d1}, grid);
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.n; ++k)
      worst = std::max(
          worst,
          std::abs(y.values[k] - hyp_solution(kHyp, kHypC, grid.time(k))));
    CHECK(worst < 1e-6);
  }
}

// The trigonometric damping coefficient has tan-type poles at w0 t = pi/2 + k
// pi even for nonsingular lambda. Fixed-step RK4 across such a pole violates
// the finite-coefficient precondition and loses the solution; the window must
// be screened first.
TEST_CASE("rk4 across a damping pole is rejected by the contract") {
  const TimeGrid grid = make_grid(0.0, 2.0, 8001);
  const CJet y0 = trig_solution_jet(kTrig, kTrigC, 0.0);
  const SampledField y =
      integrate_ivp(family_partner(kTrig), {0.0, y0.v, y0.d1}, grid);
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.n; ++k)
    worst = std::max(worst, std::abs(y.values[k] -
                                     trig_solution(kTrig, kTrigC,
                                                   grid.time(k))));
  CHECK(worst > 1.0);  // far outside any oracle tolerance
}

TEST_CASE("integrate_ivp aborts on non-finite states") {
  // A coefficient pole placed exactly on a grid sample.
  const PartnerODE ode{[](double t) { return Complex(1.0 / (t - 0.5)); },
                       [](double) { return Complex(1.0); }};
  CHECK_THROWS_AS(integrate_ivp(ode, {0.0, Complex(1.0), Complex(1.0)},
                                make_grid(0.0, 1.0, 5)),
                  NonFiniteState);
}

TEST_CASE("closed-form solutions satisfy their partner equations") {
  CHECK(ode_residual(
            [&](double t) { return trig_solution_jet(kTrig, kTrigC, t); },
            family_partner(kTrig), make_grid(0.0, 2.0, 1001)) < 1e-9);
  CHECK(ode_residual(
            [&](double t) { return hyp_solution_jet(kHyp, kHypC, t); },
            family_partner(kHyp), make_grid(0.0, 5.0, 1001)) < 1e-9);
}

TEST_CASE("sampled-field residual variant works on smooth data") {
  const PartnerODE ode{[](double) { return Complex(0.0); },
                       [](double) { return Complex(12.25); }};
  const TimeGrid grid = make_grid(0.0, 2.0, 4001);
  const SampledField y =
      sample(grid, [](double t) { return Complex(std::cos(3.5 * t)); });
  CHECK(ode_residual(y, ode) < 1e-3);  // limited by central differences
}

TEST_CASE("wronskian spot values") {
  const auto m = hyp_u_w_modes_jet(1.0, 0.9);
  CHECK(std::abs(wronskian({0.9, m[2].v, m[2].d1}, {0.9, m[3].v, m[3].d1}) -
                 Complex(1.0)) < 1e-12);
  const auto [v1, v2] = trig_v_modes_jet(2.0, 0.3);
  CHECK(std::abs(wronskian({0.3, v1.v, v1.d1}, {0.3, v2.v, v2.d1}) -
                 Complex(2.0)) < 1e-10);
  CHECK(std::abs(wronskian({1.7, m[0].v, m[0].d1}, {1.7, m[1].v, m[1].d1}) -
                 wronskian({1.7, m[0].v, m[0].d1}, {1.7, m[1].v, m[1].d1})) ==
        0.0);
}

TEST_CASE("asymptotics report flags nothing at figure parameters") {
  const VerificationReport rep = asymptotics_report(kHyp, 10.0);
  CHECK(rep.max_residual < 1e-6);
  CHECK(rep.max_deviation < 1e-6);
  CHECK(rep.flagged_times.empty());
  CHECK_THROWS_AS(asymptotics_report(kHyp, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(asymptotics_report(kTrig, 10.0), std::invalid_argument);
}

TEST_CASE("crosscheck agrees between closed form and quadrature") {
  CHECK(crosscheck_family(kTrig, make_grid(0.0, 0.4, 4001)).max_deviation <
        1e-4);
  CHECK(crosscheck_family(kHyp, make_grid(0.0, 2.0, 4001)).max_deviation <
        1e-4);
  CHECK_THROWS_AS(crosscheck_family({FamilyKind::trigonometric, 1.0, 0.5},
                                    make_grid(0.0, 2.0, 2001)),
                  SingularDenominator);
}

TEST_CASE("verify invariant suite is green") {
  for (const CheckResult& r : run_verify_suite()) {
    INFO(r.name, " measured ", r.measured, " bound ", r.bound);
    CHECK(r.pass);
  }
}
