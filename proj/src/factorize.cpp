#include "oscfact/factorize.hpp"

#include <cmath>
#include <memory>
#include <sstream>

namespace oscfact {

namespace {

std::string join_times(const char* what, const std::vector<double>& ts) {
  std::ostringstream os;
  os << what << " at t =";
  for (double t : ts) os << ' ' << t;
  return os.str();
}

std::vector<double> singular_alpha_times(const FactorSolution& sol) {
  std::vector<double> bad;
  for (std::size_t k = 0; k < sol.grid.n; ++k)
    if (std::abs(sol.alpha.values[k]) < 1e-12) bad.push_back(sol.grid.time(k));
  return bad;
}

}  // namespace

SingularDenominator::SingularDenominator(std::vector<double> times)
    : std::runtime_error(join_times("singular radicand", times)),
      times_(std::move(times)) {}

DivisionBySingularAlpha::DivisionBySingularAlpha(std::vector<double> times)
    : std::runtime_error(join_times("alpha vanishes", times)),
      times_(std::move(times)) {}

Complex riccati_residual(const RiccatiSeed& seed, const CoefficientPair& coeffs,
                         double t) {
  const Complex h = seed.h(t);
  return -seed.h_prime(t) - coeffs.f(t) * h + h * h + coeffs.g(t);
}

FactorSolution alpha_numeric(const CoefficientPair& coeffs,
                             const RiccatiSeed& seed, Complex lambda,
                             const TimeGrid& grid) {
  SampledField hmf = sample(grid, [&](double t) { return seed.h(t) - coeffs.f(t); });
  SampledField inner = cumulative_integral(hmf);

  SampledField integrand{grid, std::vector<Complex>(grid.n)};
  for (std::size_t k = 0; k < grid.n; ++k)
    integrand.values[k] =
        2.0 * seed.h(grid.time(k)) * std::exp(-2.0 * inner.values[k]);
  SampledField outer = cumulative_integral(integrand);

  // Radicand scan: sign change of the real part, or near-zero magnitude.
  std::vector<double> crossings;
  std::vector<Complex> radicand(grid.n);
  for (std::size_t k = 0; k < grid.n; ++k) radicand[k] = lambda + outer.values[k];
  for (std::size_t k = 0; k + 1 < grid.n; ++k) {
    const double a = radicand[k].real(), b = radicand[k + 1].real();
    if (a == 0.0 || (a < 0.0) != (b < 0.0)) {
      const double w = a == b ? 0.0 : a / (a - b);
      crossings.push_back(grid.time(k) + w * grid.step);
    } else if (std::abs(radicand[k]) < 1e-8) {
      crossings.push_back(grid.time(k));
    }
  }
  if (!crossings.empty()) throw SingularDenominator(std::move(crossings));

  FactorSolution sol;
  sol.lambda = lambda;
  sol.grid = grid;
  sol.alpha = SampledField{grid, std::vector<Complex>(grid.n)};
  sol.beta = SampledField{grid, std::vector<Complex>(grid.n)};
  for (std::size_t k = 0; k < grid.n; ++k) {
    const Complex a = std::exp(-inner.values[k]) / principal_sqrt(radicand[k]);
    sol.alpha.values[k] = a;
    sol.beta.values[k] = seed.h(grid.time(k)) * a;
  }
  sol.alpha_prime = central_derivative(sol.alpha);
  sol.beta_prime = central_derivative(sol.beta);
  return sol;
}

PartnerODE partner_coefficients(const CoefficientPair& coeffs,
                                const FactorSolution& sol) {
  if (auto bad = singular_alpha_times(sol); !bad.empty())
    throw DivisionBySingularAlpha(std::move(bad));

  auto F = std::make_shared<SampledField>(SampledField{sol.grid, {}});
  auto G = std::make_shared<SampledField>(SampledField{sol.grid, {}});
  F->values.resize(sol.grid.n);
  G->values.resize(sol.grid.n);
  for (std::size_t k = 0; k < sol.grid.n; ++k) {
    const double t = sol.grid.time(k);
    const Complex a = sol.alpha.values[k];
    F->values[k] = coeffs.f(t) - 2.0 * sol.alpha_prime.values[k] / a;
    G->values[k] = coeffs.g(t) + sol.beta_prime.values[k] * (a - 1.0 / a);
  }
  return {[F](double t) { return F->at_time(t); },
          [G](double t) { return G->at_time(t); }};
}

CoefficientPair reconstruct_fg(const FactorSolution& sol) {
  if (auto bad = singular_alpha_times(sol); !bad.empty())
    throw DivisionBySingularAlpha(std::move(bad));

  auto fs = std::make_shared<SampledField>(SampledField{sol.grid, {}});
  auto gs = std::make_shared<SampledField>(SampledField{sol.grid, {}});
  fs->values.resize(sol.grid.n);
  gs->values.resize(sol.grid.n);
  for (std::size_t k = 0; k < sol.grid.n; ++k) {
    const Complex a = sol.alpha.values[k];
    const Complex b = sol.beta.values[k];
    fs->values[k] = sol.alpha_prime.values[k] / a + a * b + b / a;
    gs->values[k] = b * b + sol.beta_prime.values[k] / a;
  }
  return {[fs](double t) { return fs->at_time(t); },
          [gs](double t) { return gs->at_time(t); }};
}

Complex bernoulli_residual(Complex alpha, Complex alpha_prime,
                           const RiccatiSeed& seed,
                           const CoefficientPair& coeffs, double t) {
  const Complex h = seed.h(t);
  return alpha_prime + h * alpha * alpha * alpha + (h - coeffs.f(t)) * alpha;
}

Complex bernoulli_residual(const FactorSolution& sol, const RiccatiSeed& seed,
                           const CoefficientPair& coeffs, double t) {
  return bernoulli_residual(sol.alpha.at_time(t), sol.alpha_prime.at_time(t),
                            seed, coeffs, t);
}

bool undamped_condition(const CoefficientPair& coeffs, const FactorSolution& sol,
                        double t, double tol) {
  const Complex a = sol.alpha.at_time(t);
  const Complex F = coeffs.f(t) - 2.0 * sol.alpha_prime.at_time(t) / a;
  return std::abs(F) < tol;
}

}  // namespace oscfact
