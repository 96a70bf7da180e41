#include "oscfact/families.hpp"

#include <cmath>
#include <sstream>

namespace oscfact {

namespace {

constexpr double kDenominatorTol = 1e-12;

void require_kind(const FamilyParams& p, FamilyKind kind, const char* fn) {
  if (p.kind != kind)
    throw std::invalid_argument(std::string(fn) + ": wrong family kind");
}

}  // namespace

SingularTime::SingularTime(double t)
    : std::runtime_error([t] {
        std::ostringstream os;
        os << "singular family denominator at t = " << t;
        return os.str();
      }()),
      time_(t) {}

// -- Trigonometric family -----------------------------------------------------

FamilySnapshot trig_snapshot(const FamilyParams& p, double t) {
  require_kind(p, FamilyKind::trigonometric, "trig_snapshot");
  const double w = p.rate, lam = p.lambda;
  const double c = std::cos(w * t), s = std::sin(w * t);
  const double den = lam - c * c;
  if (std::abs(den) < kDenominatorTol) throw SingularTime(t);
  const Complex root = principal_sqrt(Complex(den));
  FamilySnapshot snap;
  snap.t = t;
  snap.h = Complex(w * std::tan(w * t));
  snap.alpha = c / root;
  snap.beta = w * s / root;
  snap.zeta = Complex(lam * std::tan(w * t) / den);
  const double s2 = std::sin(2.0 * w * t);
  snap.frequency = Complex(w * w * (1.0 / den - s2 * s2 / (4.0 * den * den)));
  snap.damping = 2.0 * snap.zeta * w;
  return snap;
}

CJet trig_solution_jet(const FamilyParams& p, const SuperpositionConstants& c,
                       double t) {
  const double w = p.rate;
  const CJet wt = w * jet_time(t);
  const CJet root = sqrt(Complex(p.lambda) - cos(wt) * cos(wt));
  if (std::abs(root.v) < kDenominatorTol) throw SingularTime(t);
  const CJet secular = (wt + 0.5 * sin(2.0 * wt)) / (2.0 * root);
  const CJet flat = jet_const(Complex(0.0, 1.0) * c.c_b) / (2.0 * root);
  return c.c_a * secular - flat;
}

Complex trig_solution(const FamilyParams& p, const SuperpositionConstants& c,
                      double t) {
  return trig_solution_jet(p, c, t).v;
}

CJet trig_alpha_jet(const FamilyParams& p, double t) {
  const CJet wt = p.rate * jet_time(t);
  const CJet root = sqrt(Complex(p.lambda) - cos(wt) * cos(wt));
  if (std::abs(root.v) < kDenominatorTol) throw SingularTime(t);
  return cos(wt) / root;
}

std::pair<CJet, CJet> trig_v_modes_jet(double omega0, double t) {
  const CJet wt = omega0 * jet_time(t);
  const CJet cwt = cos(wt);
  if (std::abs(cwt.v) < kDenominatorTol) throw SingularTime(t);
  const CJet v1 = jet_const(Complex(omega0)) / cwt;
  const CJet v2 = (0.5 * wt + 0.25 * sin(2.0 * wt)) / (omega0 * cwt);
  return {v1, v2};
}

std::pair<Complex, Complex> trig_v_modes(double omega0, double t) {
  auto [v1, v2] = trig_v_modes_jet(omega0, t);
  return {v1.v, v2.v};
}

// -- Hyperbolic family --------------------------------------------------------

FamilySnapshot hyp_snapshot(const FamilyParams& p, double t) {
  require_kind(p, FamilyKind::hyperbolic, "hyp_snapshot");
  const double k = p.rate, lam = p.lambda;
  const double ch = std::cosh(k * t), sh = std::sinh(k * t);
  const double den = ch * ch - lam;
  if (std::abs(den) < kDenominatorTol) throw SingularTime(t);
  const Complex root = principal_sqrt(Complex(lam - ch * ch));
  FamilySnapshot snap;
  snap.t = t;
  snap.h = Complex(-k * std::tanh(k * t));
  snap.alpha = ch / root;
  snap.beta = -k * sh / root;
  snap.zeta = Complex(lam * std::tanh(k * t) / den);
  snap.frequency =
      Complex(-k * k * (sh * sh * sh * sh + lam - 1.0) / (den * den));
  snap.damping = 2.0 * snap.zeta * k;
  return snap;
}

Complex hyp_frequency_printed(const FamilyParams& p, double t) {
  const double k = p.rate, lam = p.lambda;
  const double den = std::cosh(k * t) * std::cosh(k * t) - lam;
  if (std::abs(den) < kDenominatorTol) throw SingularTime(t);
  return Complex(k * k *
                 (1.0 / den - std::sinh(2.0 * k * t) / (4.0 * den * den)));
}

CJet hyp_solution_jet(const FamilyParams& p, const SuperpositionConstants& c,
                      double t) {
  const double k = p.rate;
  const CJet kt = k * jet_time(t);
  const CJet root = sqrt(Complex(p.lambda) - cosh(kt) * cosh(kt));
  if (std::abs(root.v) < kDenominatorTol) throw SingularTime(t);
  const Complex pi = std::acos(-1.0);
  const CJet numerator = jet_const(c.c_a + Complex(0.0, 1.0) * c.c_b * pi) +
                         c.c_b * (2.0 * kt + sinh(2.0 * kt));
  return numerator / (4.0 * root);
}

Complex hyp_solution(const FamilyParams& p, const SuperpositionConstants& c,
                     double t) {
  return hyp_solution_jet(p, c, t).v;
}

CJet hyp_alpha_jet(const FamilyParams& p, double t) {
  const CJet kt = p.rate * jet_time(t);
  const CJet root = sqrt(Complex(p.lambda) - cosh(kt) * cosh(kt));
  if (std::abs(root.v) < kDenominatorTol) throw SingularTime(t);
  return cosh(kt) / root;
}

std::array<CJet, 4> hyp_u_w_modes_jet(double k0, double t) {
  const CJet kt = k0 * jet_time(t);
  const CJet ch = cosh(kt);
  const CJet u1 = jet_const(Complex(k0)) / ch;
  const CJet u2 = (0.5 * kt + 0.25 * sinh(2.0 * kt)) / (k0 * ch);
  return {u1, u2, ch, sinh(kt)};
}

std::array<Complex, 4> hyp_u_w_modes(double k0, double t) {
  auto m = hyp_u_w_modes_jet(k0, t);
  return {m[0].v, m[1].v, m[2].v, m[3].v};
}

// -- Kind-generic helpers -----------------------------------------------------

FamilySnapshot snapshot(const FamilyParams& p, double t) {
  return p.kind == FamilyKind::trigonometric ? trig_snapshot(p, t)
                                             : hyp_snapshot(p, t);
}

Complex solution(const FamilyParams& p, const SuperpositionConstants& c,
                 double t) {
  return solution_jet(p, c, t).v;
}

CJet solution_jet(const FamilyParams& p, const SuperpositionConstants& c,
                  double t) {
  return p.kind == FamilyKind::trigonometric ? trig_solution_jet(p, c, t)
                                             : hyp_solution_jet(p, c, t);
}

CoefficientPair family_coefficients(const FamilyParams& p) {
  const double g = p.kind == FamilyKind::trigonometric ? p.rate * p.rate
                                                       : -p.rate * p.rate;
  return {[](double) { return Complex(0.0); },
          [g](double) { return Complex(g); }};
}

RiccatiSeed family_seed(const FamilyParams& p) {
  const double r = p.rate;
  if (p.kind == FamilyKind::trigonometric)
    return {[r](double t) { return Complex(r * std::tan(r * t)); },
            [r](double t) {
              const double c = std::cos(r * t);
              return Complex(r * r / (c * c));
            }};
  return {[r](double t) { return Complex(-r * std::tanh(r * t)); },
          [r](double t) {
            const double c = std::cosh(r * t);
            return Complex(-r * r / (c * c));
          }};
}

PartnerODE family_partner(const FamilyParams& p) {
  return {[p](double t) { return snapshot(p, t).damping; },
          [p](double t) { return snapshot(p, t).frequency; }};
}

double lambda_numeric(const FamilyParams& p, double grid_t0) {
  const double base = p.kind == FamilyKind::trigonometric
                          ? std::cos(p.rate * grid_t0)
                          : std::cosh(p.rate * grid_t0);
  return (p.lambda - base * base) / (base * base);
}

std::vector<double> singularity_scan(const FamilyParams& p,
                                     const TimeGrid& grid) {
  const auto den = [&](double t) {
    if (p.kind == FamilyKind::trigonometric) {
      const double c = std::cos(p.rate * t);
      return p.lambda - c * c;
    }
    const double c = std::cosh(p.rate * t);
    return c * c - p.lambda;
  };
  std::vector<double> roots;
  double a = grid.time(0), fa = den(a);
  for (std::size_t k = 1; k < grid.n; ++k) {
    double b = grid.time(k), fb = den(b);
    if ((fa < 0.0) != (fb < 0.0) || fa == 0.0) {
      double lo = a, hi = b, flo = fa;
      while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi), fm = den(mid);
        if ((flo < 0.0) != (fm < 0.0)) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    a = b;
    fa = fb;
  }
  return roots;
}

bool nonsingular_domain(const FamilyParams& p) {
  if (p.kind == FamilyKind::trigonometric)
    return p.lambda < 0.0 || p.lambda > 1.0;
  return p.lambda < 1.0;
}

}  // namespace oscfact
