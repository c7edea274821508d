#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mink {

/// Cumulative integral of uniformly spaced samples by the pairwise parabolic
/// rule: out[0] = 0 and even-index nodes reproduce composite Simpson exactly;
/// odd-index nodes integrate the local interpolating parabola over the half
/// panel. T must support addition, subtraction and scaling by double
/// (double, Eigen vectors/matrices). Needs at least 3 samples.
template <class T>
std::vector<T> cumulative_simpson(const std::vector<T>& f, double h) {
  if (f.size() < 3)
    throw std::invalid_argument("cumulative_simpson: need at least 3 samples");
  if (!(h > 0.0))
    throw std::invalid_argument("cumulative_simpson: step must be positive");
  const std::size_t intervals = f.size() - 1;
  const double c = h / 12.0;
  std::vector<T> out;
  out.reserve(f.size());
  out.push_back(T(f[0] - f[0]));
  for (std::size_t i = 0; i < intervals; ++i) {
    T delta;
    if (i % 2 == 0 && i + 2 <= intervals) {
      delta = c * (5.0 * f[i] + 8.0 * f[i + 1] - f[i + 2]);
    } else {
      delta = c * (8.0 * f[i] + 5.0 * f[i + 1] - f[i - 1]);
    }
    out.push_back(T(out.back() + delta));
  }
  return out;
}

/// Integral over the whole sample range: composite Simpson on pairs of
/// intervals, with a parabolic half-panel tail when the interval count is
/// odd. Needs at least 3 samples.
template <class T>
T integrate_simpson(const std::vector<T>& f, double h) {
  if (f.size() < 3)
    throw std::invalid_argument("integrate_simpson: need at least 3 samples");
  if (!(h > 0.0))
    throw std::invalid_argument("integrate_simpson: step must be positive");
  const std::size_t last = f.size() - 1;
  T acc = T(f[0] - f[0]);
  std::size_t i = 0;
  for (; i + 2 <= last; i += 2) {
    acc += (h / 3.0) * (f[i] + 4.0 * f[i + 1] + f[i + 2]);
  }
  if (i < last) {
    acc += (h / 12.0) * (8.0 * f[last - 1] + 5.0 * f[last] - f[last - 2]);
  }
  return acc;
}

}  // namespace mink
