#pragma once

#include <cmath>
#include <complex>

namespace oscfact {

using Complex = std::complex<double>;

/// Principal square root with negative reals mapped to +i*sqrt(|x|).
/// A negative-zero imaginary part (common after complex trig of real
/// arguments) would otherwise select the -i branch.
inline Complex principal_sqrt(Complex z) {
  if (z.imag() == 0.0) z = Complex(z.real(), 0.0);
  return std::sqrt(z);
}

/// Value plus first and second derivative with respect to one real parameter.
/// Used to evaluate closed forms together with their exact derivatives.
template <typename T>
struct Jet {
  T v{};
  T d1{};
  T d2{};
};

using CJet = Jet<Complex>;

inline CJet jet_time(double t) {
  return {Complex(t, 0.0), Complex(1.0, 0.0), Complex(0.0, 0.0)};
}

inline CJet jet_const(Complex c) { return {c, Complex(0.0), Complex(0.0)}; }

inline CJet operator+(const CJet& a, const CJet& b) {
  return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2};
}
inline CJet operator-(const CJet& a, const CJet& b) {
  return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2};
}
inline CJet operator-(const CJet& a) { return {-a.v, -a.d1, -a.d2}; }
inline CJet operator*(const CJet& a, const CJet& b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1,
          a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}
inline CJet operator/(const CJet& a, const CJet& b) {
  const Complex q = a.v / b.v;
  const Complex q1 = (a.d1 - q * b.d1) / b.v;
  const Complex q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) / b.v;
  return {q, q1, q2};
}

inline CJet operator+(const CJet& a, Complex c) { return a + jet_const(c); }
inline CJet operator+(Complex c, const CJet& a) { return jet_const(c) + a; }
inline CJet operator-(const CJet& a, Complex c) { return a - jet_const(c); }
inline CJet operator-(Complex c, const CJet& a) { return jet_const(c) - a; }
inline CJet operator*(const CJet& a, Complex c) { return a * jet_const(c); }
inline CJet operator*(Complex c, const CJet& a) { return jet_const(c) * a; }
inline CJet operator/(const CJet& a, Complex c) { return a / jet_const(c); }
inline CJet operator/(Complex c, const CJet& a) { return jet_const(c) / a; }
inline CJet operator*(double c, const CJet& a) { return jet_const(Complex(c)) * a; }
inline CJet operator*(const CJet& a, double c) { return a * jet_const(Complex(c)); }
inline CJet operator/(const CJet& a, double c) { return a / jet_const(Complex(c)); }

// Chain rule for an elementary function with value f and derivatives fp, fpp
// evaluated at u.v.
inline CJet chain(Complex f, Complex fp, Complex fpp, const CJet& u) {
  return {f, fp * u.d1, fpp * u.d1 * u.d1 + fp * u.d2};
}

inline CJet sin(const CJet& u) {
  const Complex s = std::sin(u.v), c = std::cos(u.v);
  return chain(s, c, -s, u);
}
inline CJet cos(const CJet& u) {
  const Complex s = std::sin(u.v), c = std::cos(u.v);
  return chain(c, -s, -c, u);
}
inline CJet tan(const CJet& u) {
  const Complex t = std::tan(u.v);
  const Complex sec2 = 1.0 + t * t;
  return chain(t, sec2, 2.0 * t * sec2, u);
}
inline CJet sinh(const CJet& u) {
  const Complex s = std::sinh(u.v), c = std::cosh(u.v);
  return chain(s, c, s, u);
}
inline CJet cosh(const CJet& u) {
  const Complex s = std::sinh(u.v), c = std::cosh(u.v);
  return chain(c, s, c, u);
}
inline CJet tanh(const CJet& u) {
  const Complex t = std::tanh(u.v);
  const Complex sech2 = 1.0 - t * t;
  return chain(t, sech2, -2.0 * t * sech2, u);
}
inline CJet exp(const CJet& u) {
  const Complex e = std::exp(u.v);
  return chain(e, e, e, u);
}
inline CJet sqrt(const CJet& u) {
  const Complex s = principal_sqrt(u.v);
  const Complex fp = 0.5 / s;
  const Complex fpp = -0.25 / (s * u.v);
  return chain(s, fp, fpp, u);
}

}  // namespace oscfact
