#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "oscfact/jet.hpp"

namespace oscfact {

using ScalarField = std::function<Complex(double)>;

/// Uniform sampling of a closed time interval [t0, t1] with n points.
struct TimeGrid {
  double t0 = 0.0;
  double t1 = 1.0;
  std::size_t n = 3;
  double step = 0.5;

  double time(std::size_t k) const {
    // Last sample is pinned to t1 exactly.
    return k + 1 == n ? t1 : t0 + static_cast<double>(k) * step;
  }
};

/// Throws std::invalid_argument unless t1 > t0 and n >= 3.
TimeGrid make_grid(double t0, double t1, std::size_t n);

/// Complex values of a scalar function of time on a TimeGrid.
struct SampledField {
  TimeGrid grid;
  std::vector<Complex> values;

  /// Value at an arbitrary time inside the window: exact at grid samples,
  /// linear interpolation in between.
  Complex at_time(double t) const;
};

SampledField sample(const TimeGrid& grid, const ScalarField& f);

/// Cumulative integral from the grid start: Phi(t0) = 0, two interleaved
/// composite-Simpson chains (odd indices seeded by the three-point opening
/// rule), fourth-order accurate at every sample.
SampledField cumulative_integral(const SampledField& f);

/// Second-order central differences, one-sided second-order at the endpoints.
SampledField central_derivative(const SampledField& f);

}  // namespace oscfact
