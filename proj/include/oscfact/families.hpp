#pragma once

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oscfact/factorize.hpp"
#include "oscfact/grid.hpp"

namespace oscfact {

enum class FamilyKind { trigonometric, hyperbolic };

/// One member of the deformation family: kind, rate (omega0 or k0) and the
/// deformation parameter lambda in the closed-form convention.
struct FamilyParams {
  FamilyKind kind = FamilyKind::trigonometric;
  double rate = 1.0;    // omega0 (trig) or k0 (hyperbolic), > 0
  double lambda = 2.0;  // singularity structure: trig singular iff in [0,1],
                        // hyperbolic nonsingular iff < 1
};

/// Pointwise closed-form state of a family member.
struct FamilySnapshot {
  double t = 0.0;
  Complex h;          // seed
  Complex alpha;
  Complex beta;       // = h * alpha
  Complex zeta;       // damping ratio
  Complex frequency;  // coefficient of y in the partner equation
  Complex damping;    // coefficient of y' = 2 * zeta * rate
};

/// (C1, C2) for the trigonometric family, (C3, C4) for the hyperbolic one.
struct SuperpositionConstants {
  Complex c_a{1.0};
  Complex c_b{0.0};
};

class SingularTime : public std::runtime_error {
 public:
  explicit SingularTime(double t);
  double time() const { return time_; }

 private:
  double time_;
};

// -- Trigonometric family (g = rate^2) --------------------------------------

FamilySnapshot trig_snapshot(const FamilyParams& p, double t);
Complex trig_solution(const FamilyParams& p, const SuperpositionConstants& c,
                      double t);
/// Solution with exact first and second time derivatives.
CJet trig_solution_jet(const FamilyParams& p, const SuperpositionConstants& c,
                       double t);
CJet trig_alpha_jet(const FamilyParams& p, double t);

/// Singular partner modes of the standard factorization, normalization
/// constants fixed to 1. Wronskian is omega0.
std::pair<Complex, Complex> trig_v_modes(double omega0, double t);
std::pair<CJet, CJet> trig_v_modes_jet(double omega0, double t);

// -- Hyperbolic family (g = -rate^2) ----------------------------------------

FamilySnapshot hyp_snapshot(const FamilyParams& p, double t);
Complex hyp_solution(const FamilyParams& p, const SuperpositionConstants& c,
                     double t);
CJet hyp_solution_jet(const FamilyParams& p, const SuperpositionConstants& c,
                      double t);
CJet hyp_alpha_jet(const FamilyParams& p, double t);

/// (u1, u2, w1, w2): transient modes u of the standard-factorization partner
/// and the plain hyperbolic zero-modes w. Constants fixed to 1; both
/// Wronskians equal k0.
std::array<Complex, 4> hyp_u_w_modes(double k0, double t);
std::array<CJet, 4> hyp_u_w_modes_jet(double k0, double t);

// -- Kind-generic helpers ----------------------------------------------------

FamilySnapshot snapshot(const FamilyParams& p, double t);
Complex solution(const FamilyParams& p, const SuperpositionConstants& c,
                 double t);
CJet solution_jet(const FamilyParams& p, const SuperpositionConstants& c,
                  double t);

/// Coefficients (f = 0, g = +-rate^2) of the undeformed equation.
CoefficientPair family_coefficients(const FamilyParams& p);
/// Closed-form seed h with its analytic derivative.
RiccatiSeed family_seed(const FamilyParams& p);
/// Closed-form partner coefficients F(t), G(t) as evaluable fields.
PartnerODE family_partner(const FamilyParams& p);

/// Integration constant of the quadrature route (lower limits at grid_t0) that
/// reproduces the closed form with deformation parameter p.lambda.
double lambda_numeric(const FamilyParams& p, double grid_t0 = 0.0);

/// Sign changes of the family denominator (lambda - cos^2 or cosh^2 - lambda)
/// in the window, refined by bisection to 1e-10. Empty means nonsingular.
std::vector<double> singularity_scan(const FamilyParams& p,
                                     const TimeGrid& grid);

/// trig: lambda outside [0, 1]; hyperbolic: lambda < 1.
bool nonsingular_domain(const FamilyParams& p);

/// Variant of the hyperbolic frequency coefficient with a first-power
/// sinh 2k0t correction term. It decays to zero instead of approaching -k0^2
/// and is retained only for regression comparison against the consistent form
/// used by hyp_snapshot.
Complex hyp_frequency_printed(const FamilyParams& p, double t);

}  // namespace oscfact
