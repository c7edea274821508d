#pragma once

#include <Eigen/Dense>
#include <variant>
#include <vector>

#include "minkclose/metric.hpp"

namespace mink {

struct ConstantCurvature {
  double value = 0.0;
};

/// Truncated Fourier series on the fundamental frequency 2*pi/omega:
/// k(s) = a0 + sum_m cos_coef[m-1] cos(2 pi m s / omega)
///           + sin_coef[m-1] sin(2 pi m s / omega).
struct FourierCurvature {
  double a0 = 0.0;
  std::vector<double> cos_coef;
  std::vector<double> sin_coef;
};

/// Uniform samples over [0, omega), linear interpolation with wraparound.
/// Piecewise-C1 only; first-order accuracy limit for downstream quadrature.
struct SampledCurvature {
  std::vector<double> values;
};

using CurvatureFunction =
    std::variant<ConstantCurvature, FourierCurvature, SampledCurvature>;

/// Periodic evaluation: s is reduced into [0, omega) first, so
/// eval_curvature(f, s + m*omega, omega) == eval_curvature(f, s, omega)
/// up to the rounding of s + m*omega itself.
double eval_curvature(const CurvatureFunction& f, double s, double omega);

/// The data driving the Frenet system: period omega, curvature functions
/// k_1..k_{n-1} and the frame sign sequence eps_1..eps_n.
struct CurvatureProfile {
  MetricSignature sig;
  double omega = 1.0;
  std::vector<CurvatureFunction> curvatures;  ///< exactly sig.n - 1 entries
  std::vector<int> eps;                       ///< +-1 each; #(-1) == sig.v

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  /// (k_1(s), ..., k_{n-1}(s)), omega-periodic, defined for any real s.
  Eigen::VectorXd evaluate(double s) const;
};

/// Coefficient matrix of the Frenet system: tridiagonal with
/// A[i][i+1] = eps_i k_i(s) and A[i+1][i] = -eps_{i+1} k_i(s) (1-based).
/// Satisfies A_ij eps_j + A_ji eps_i = 0, so the flow preserves the
/// indefinite Gram matrix of the frame.
Eigen::MatrixXd frenet_matrix(const CurvatureProfile& p, double s);

enum class SurfaceKind { Timelike, Spacelike };

/// Darboux-frame coefficient matrix for a curve on an oriented surface in
/// three-dimensional Minkowski space. For a timelike surface eps = <T,T>;
/// a spacelike surface carries only spacelike curves, so eps must be +1.
Eigen::MatrixXd darboux_matrix(double kg, double kn, double tg, int eps,
                               SurfaceKind surface);

/// Frame signs of the Darboux frame: (eps, -eps, +1) on a timelike surface,
/// (1, 1, -1) on a spacelike one.
std::vector<int> darboux_signs(int eps, SurfaceKind surface);

}  // namespace mink
