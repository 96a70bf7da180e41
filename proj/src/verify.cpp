#include "oscfact/verify.hpp"

#include <cmath>
#include <sstream>

namespace oscfact {

namespace {

bool finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

NonFiniteState::NonFiniteState(double t)
    : std::runtime_error([t] {
        std::ostringstream os;
        os << "non-finite state at t = " << t;
        return os.str();
      }()),
      time_(t) {}

IvpTrajectory integrate_ivp_trajectory(const PartnerODE& ode,
                                       const IvpState& init,
                                       const TimeGrid& grid) {
  const double h = grid.step;
  IvpTrajectory out{{grid, std::vector<Complex>(grid.n)},
                    {grid, std::vector<Complex>(grid.n)}};
  Complex y = init.y, dy = init.dy;
  out.y.values[0] = y;
  out.dy.values[0] = dy;
  const auto rhs = [&](double t, Complex yy, Complex dd, Complex& ky,
                       Complex& kd) {
    ky = dd;
    kd = -ode.damping(t) * dd - ode.frequency(t) * yy;
  };
  for (std::size_t k = 0; k + 1 < grid.n; ++k) {
    const double t = grid.time(k);
    Complex k1y, k1d, k2y, k2d, k3y, k3d, k4y, k4d;
    rhs(t, y, dy, k1y, k1d);
    rhs(t + 0.5 * h, y + 0.5 * h * k1y, dy + 0.5 * h * k1d, k2y, k2d);
    rhs(t + 0.5 * h, y + 0.5 * h * k2y, dy + 0.5 * h * k2d, k3y, k3d);
    rhs(t + h, y + h * k3y, dy + h * k3d, k4y, k4d);
    y += (h / 6.0) * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    dy += (h / 6.0) * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
    if (!finite(y) || !finite(dy)) throw NonFiniteState(grid.time(k + 1));
    out.y.values[k + 1] = y;
    out.dy.values[k + 1] = dy;
  }
  return out;
}

SampledField integrate_ivp(const PartnerODE& ode, const IvpState& init,
                           const TimeGrid& grid) {
  return integrate_ivp_trajectory(ode, init, grid).y;
}

double ode_residual(const AnalyticField& y, const PartnerODE& ode,
                    const TimeGrid& grid) {
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.n; ++k) {
    const double t = grid.time(k);
    const CJet j = y(t);
    const Complex r = j.d2 + ode.damping(t) * j.d1 + ode.frequency(t) * j.v;
    worst = std::max(worst, std::abs(r) / (1.0 + std::abs(j.v)));
  }
  return worst;
}

namespace {

// Direct second-difference stencil; iterating central_derivative would drop
// the endpoints to first order.
SampledField second_derivative(const SampledField& f) {
  const double h = f.grid.step;
  const std::size_t n = f.grid.n;
  SampledField out{f.grid, std::vector<Complex>(n)};
  const auto& v = f.values;
  for (std::size_t k = 1; k + 1 < n; ++k)
    out.values[k] = (v[k + 1] - 2.0 * v[k] + v[k - 1]) / (h * h);
  if (n >= 4) {
    out.values[0] = (2.0 * v[0] - 5.0 * v[1] + 4.0 * v[2] - v[3]) / (h * h);
    out.values[n - 1] =
        (2.0 * v[n - 1] - 5.0 * v[n - 2] + 4.0 * v[n - 3] - v[n - 4]) /
        (h * h);
  } else {
    out.values[0] = out.values[n - 1] = (v[0] - 2.0 * v[1] + v[2]) / (h * h);
  }
  return out;
}

}  // namespace

double ode_residual(const SampledField& y, const PartnerODE& ode) {
  const SampledField d1 = central_derivative(y);
  const SampledField d2 = second_derivative(y);
  double worst = 0.0;
  for (std::size_t k = 0; k < y.grid.n; ++k) {
    const double t = y.grid.time(k);
    const Complex r = d2.values[k] + ode.damping(t) * d1.values[k] +
                      ode.frequency(t) * y.values[k];
    worst = std::max(worst, std::abs(r) / (1.0 + std::abs(y.values[k])));
  }
  return worst;
}

Complex wronskian(const IvpState& a, const IvpState& b) {
  return a.y * b.dy - a.dy * b.y;
}

VerificationReport asymptotics_report(const FamilyParams& p, double t_probe) {
  if (p.kind != FamilyKind::hyperbolic)
    throw std::invalid_argument("asymptotics_report: hyperbolic family only");
  if (t_probe < 5.0 / p.rate)
    throw std::invalid_argument("asymptotics_report: probe before 5/k0");
  const FamilySnapshot snap = hyp_snapshot(p, t_probe);
  VerificationReport rep;
  rep.max_residual = std::abs(snap.zeta);
  rep.max_deviation = std::abs(snap.frequency + Complex(p.rate * p.rate));
  const double bound = 10.0 * std::exp(-2.0 * p.rate * t_probe);
  if (rep.max_residual >= bound || rep.max_deviation >= bound)
    rep.flagged_times.push_back(t_probe);
  return rep;
}

VerificationReport crosscheck_family(const FamilyParams& p,
                                     const TimeGrid& grid) {
  const CoefficientPair coeffs = family_coefficients(p);
  const RiccatiSeed seed = family_seed(p);
  const FactorSolution sol = alpha_numeric(
      coeffs, seed, Complex(lambda_numeric(p, grid.t0)), grid);
  const PartnerODE numeric = partner_coefficients(coeffs, sol);
  const PartnerODE closed = family_partner(p);

  VerificationReport rep;
  double dev_f = 0.0, dev_g = 0.0;
  for (std::size_t k = 0; k < grid.n; ++k) {
    const double t = grid.time(k);
    dev_f = std::max(dev_f, std::abs(numeric.damping(t) - closed.damping(t)));
    dev_g = std::max(dev_g,
                     std::abs(numeric.frequency(t) - closed.frequency(t)));
  }
  rep.max_deviation = std::max(dev_f, dev_g);
  return rep;
}

}  // namespace oscfact
