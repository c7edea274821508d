#include "minkclose/profile.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mink {

namespace {

double reduce_period(double s, double omega) {
  double u = std::fmod(s, omega);
  if (u < 0.0) u += omega;
  if (u >= omega) u = 0.0;  // fmod(-tiny, w) + w can round up to w
  return u;
}

bool all_finite(const std::vector<double>& xs) {
  for (double x : xs)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace

double eval_curvature(const CurvatureFunction& f, double s, double omega) {
  const double u = reduce_period(s, omega);
  if (const auto* c = std::get_if<ConstantCurvature>(&f)) return c->value;
  if (const auto* fo = std::get_if<FourierCurvature>(&f)) {
    const double base = 2.0 * std::numbers::pi * u / omega;
    double acc = fo->a0;
    for (std::size_t m = 0; m < fo->cos_coef.size(); ++m)
      acc += fo->cos_coef[m] * std::cos(static_cast<double>(m + 1) * base);
    for (std::size_t m = 0; m < fo->sin_coef.size(); ++m)
      acc += fo->sin_coef[m] * std::sin(static_cast<double>(m + 1) * base);
    return acc;
  }
  const auto& grid = std::get<SampledCurvature>(f).values;
  const std::size_t m = grid.size();
  const double t = u * static_cast<double>(m) / omega;
  std::size_t cell = static_cast<std::size_t>(t);
  if (cell >= m) cell = m - 1;
  const double frac = t - static_cast<double>(cell);
  const double left = grid[cell];
  const double right = grid[(cell + 1) % m];  // wraps back to the start
  return (1.0 - frac) * left + frac * right;
}

void CurvatureProfile::validate() const {
  sig.validate();
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::invalid_argument("omega: must be positive and finite");
  if (static_cast<int>(curvatures.size()) != sig.n - 1)
    throw std::invalid_argument("curvatures: expected n-1 = " +
                                std::to_string(sig.n - 1) + " entries, got " +
                                std::to_string(curvatures.size()));
  if (static_cast<int>(eps.size()) != sig.n)
    throw std::invalid_argument("eps: expected " + std::to_string(sig.n) +
                                " entries, got " + std::to_string(eps.size()));
  int negatives = 0;
  for (int e : eps) {
    if (e != 1 && e != -1)
      throw std::invalid_argument("eps: entries must be +1 or -1");
    if (e == -1) ++negatives;
  }
  if (negatives != sig.v)
    throw std::invalid_argument("eps: expected " + std::to_string(sig.v) +
                                " negative sign" + (sig.v == 1 ? "" : "s") +
                                " for v=" + std::to_string(sig.v) + ", got " +
                                std::to_string(negatives));
  for (std::size_t i = 0; i < curvatures.size(); ++i) {
    const std::string field = "curvatures[" + std::to_string(i) + "]";
    if (const auto* c = std::get_if<ConstantCurvature>(&curvatures[i])) {
      if (!std::isfinite(c->value))
        throw std::invalid_argument(field + ": constant must be finite");
    } else if (const auto* fo = std::get_if<FourierCurvature>(&curvatures[i])) {
      if (!std::isfinite(fo->a0) || !all_finite(fo->cos_coef) ||
          !all_finite(fo->sin_coef))
        throw std::invalid_argument(field + ": coefficients must be finite");
    } else {
      const auto& samples = std::get<SampledCurvature>(curvatures[i]).values;
      if (samples.empty())
        throw std::invalid_argument(field + ": needs at least one sample");
      if (!all_finite(samples))
        throw std::invalid_argument(field + ": samples must be finite");
    }
  }
}

Eigen::VectorXd CurvatureProfile::evaluate(double s) const {
  Eigen::VectorXd k(sig.n - 1);
  for (int i = 0; i < sig.n - 1; ++i)
    k[i] = eval_curvature(curvatures[i], s, omega);
  return k;
}

Eigen::MatrixXd frenet_matrix(const CurvatureProfile& p, double s) {
  const int n = p.sig.n;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  const Eigen::VectorXd k = p.evaluate(s);
  for (int i = 0; i + 1 < n; ++i) {
    a(i, i + 1) = p.eps[i] * k[i];
    a(i + 1, i) = -p.eps[i + 1] * k[i];
  }
  return a;
}

Eigen::MatrixXd darboux_matrix(double kg, double kn, double tg, int eps,
                               SurfaceKind surface) {
  if (eps != 1 && eps != -1)
    throw std::invalid_argument("eps: must be +1 or -1");
  Eigen::MatrixXd a(3, 3);
  if (surface == SurfaceKind::Timelike) {
    a << 0.0, kg, -eps * kn,
         kg, 0.0, eps * tg,
         kn, tg, 0.0;
  } else {
    if (eps != 1)
      throw std::invalid_argument(
          "surface: a timelike curve (eps=-1) cannot lie on a spacelike surface");
    a << 0.0, kg, kn,
         -kg, 0.0, tg,
         kn, tg, 0.0;
  }
  return a;
}

std::vector<int> darboux_signs(int eps, SurfaceKind surface) {
  if (eps != 1 && eps != -1)
    throw std::invalid_argument("eps: must be +1 or -1");
  if (surface == SurfaceKind::Timelike) return {eps, -eps, 1};
  return {1, 1, -1};
}

}  // namespace mink
