#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "oscfact/families.hpp"
#include "oscfact/factorize.hpp"
#include "oscfact/grid.hpp"

namespace oscfact {

/// Complex two-component state of the first-order system behind
/// y'' + F y' + G y = 0.
struct IvpState {
  double t = 0.0;
  Complex y{};
  Complex dy{};
};

struct VerificationReport {
  double max_residual = 0.0;
  double max_deviation = 0.0;
  double wronskian_drift = 0.0;
  std::vector<double> flagged_times;
};

class NonFiniteState : public std::runtime_error {
 public:
  explicit NonFiniteState(double t);
  double time() const { return time_; }

 private:
  double time_;
};

/// Both components of a fixed-step integration.
struct IvpTrajectory {
  SampledField y;
  SampledField dy;
};

/// Classical fixed-step RK4 on y' = dy, dy' = -F dy - G y over the grid.
/// Throws NonFiniteState at the first non-finite step.
IvpTrajectory integrate_ivp_trajectory(const PartnerODE& ode,
                                       const IvpState& init,
                                       const TimeGrid& grid);
SampledField integrate_ivp(const PartnerODE& ode, const IvpState& init,
                           const TimeGrid& grid);

/// A field carrying exact first and second derivatives.
using AnalyticField = std::function<CJet(double)>;

/// max over the grid of |y'' + F y' + G y| / (1 + |y|), derivatives exact.
double ode_residual(const AnalyticField& y, const PartnerODE& ode,
                    const TimeGrid& grid);
/// Same residual with derivatives from central differences of the samples.
double ode_residual(const SampledField& y, const PartnerODE& ode);

Complex wronskian(const IvpState& a, const IvpState& b);

/// |zeta(t_probe)| and |G(t_probe) + k0^2| for the hyperbolic family; both
/// must fall below 10 e^(-2 k0 t_probe), else t_probe is flagged.
VerificationReport asymptotics_report(const FamilyParams& p, double t_probe);

/// Builds (alpha, beta) by the closed form and by quadrature (with the lambda
/// convention mapping) and reports the larger max-norm deviation of the
/// partner coefficients F, G over the grid.
VerificationReport crosscheck_family(const FamilyParams& p,
                                     const TimeGrid& grid);

}  // namespace oscfact
