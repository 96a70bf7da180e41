#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "oscfact/grid.hpp"

namespace oscfact {

/// Damping coefficient f and frequency coefficient g of y'' + f y' + g y = 0.
struct CoefficientPair {
  ScalarField f;
  ScalarField g;
};

/// A solution h of the quadratic first-order equation
///   -h' - f h + h^2 + g = 0
/// together with its analytic derivative. Seeds are supplied, never solved for.
struct RiccatiSeed {
  ScalarField h;
  ScalarField h_prime;
};

/// Factorization coefficients on a grid: alpha from quadrature, beta = h*alpha,
/// derivatives by central differences. lambda is the raw integration constant
/// of the quadrature route (see families::lambda_numeric for the closed-form
/// convention).
struct FactorSolution {
  Complex lambda;
  TimeGrid grid;
  SampledField alpha;
  SampledField beta;
  SampledField alpha_prime;
  SampledField beta_prime;
};

/// Coefficients F(t), G(t) of the partner equation y'' + F y' + G y = 0.
struct PartnerODE {
  ScalarField damping;    // F
  ScalarField frequency;  // G
};

class SingularDenominator : public std::runtime_error {
 public:
  explicit SingularDenominator(std::vector<double> times);
  const std::vector<double>& times() const { return times_; }

 private:
  std::vector<double> times_;
};

class DivisionBySingularAlpha : public std::runtime_error {
 public:
  explicit DivisionBySingularAlpha(std::vector<double> times);
  const std::vector<double>& times() const { return times_; }

 private:
  std::vector<double> times_;
};

/// -h'(t) - f(t) h(t) + h(t)^2 + g(t). Zero (to tolerance) iff h solves the
/// quadratic seed equation at t. Non-finite values (poles of h) are returned
/// as-is so batch scans can skip them.
Complex riccati_residual(const RiccatiSeed& seed, const CoefficientPair& coeffs,
                         double t);

/// alpha(t) = e^(-I1) / sqrt(lambda + I2) with
///   I1(t) = int_{t0}^{t} (h - f),  I2(t) = int_{t0}^{t} 2 h e^(-2 I1),
/// principal square-root branch. Throws SingularDenominator when the real part
/// of the radicand changes sign (or its magnitude drops below 1e-8) on the
/// grid, listing all crossing times.
FactorSolution alpha_numeric(const CoefficientPair& coeffs,
                             const RiccatiSeed& seed, Complex lambda,
                             const TimeGrid& grid);

/// F = f - 2 alpha'/alpha, G = g + beta' (alpha - 1/alpha), evaluable on the
/// grid of the solution (interpolated in between).
PartnerODE partner_coefficients(const CoefficientPair& coeffs,
                                const FactorSolution& sol);

/// Round trip through the reversed factorization:
///   f-slot = alpha'/alpha + alpha beta + beta/alpha
///   g-slot = beta^2 + beta'/alpha
/// Must reproduce the (f, g) the solution was built from.
CoefficientPair reconstruct_fg(const FactorSolution& sol);

/// alpha' + h alpha^3 + (h - f) alpha at t, with caller-supplied alpha values
/// (e.g. a closed form with analytic derivative).
Complex bernoulli_residual(Complex alpha, Complex alpha_prime,
                           const RiccatiSeed& seed,
                           const CoefficientPair& coeffs, double t);

/// Same residual with alpha, alpha' read from a FactorSolution.
Complex bernoulli_residual(const FactorSolution& sol, const RiccatiSeed& seed,
                           const CoefficientPair& coeffs, double t);

/// True iff |F(t)| = |f(t) - 2 alpha'(t)/alpha(t)| < tol.
bool undamped_condition(const CoefficientPair& coeffs, const FactorSolution& sol,
                        double t, double tol = 1e-6);

}  // namespace oscfact
