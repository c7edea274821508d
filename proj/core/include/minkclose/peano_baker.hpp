#pragma once

#include <vector>

#include "minkclose/oracle.hpp"
#include "minkclose/system.hpp"

namespace mink {

struct SeriesSettings {
  int grid_points = 2048;     ///< shared uniform grid intervals; even, >= 2
  int max_order = 64;         ///< hard cap on the iterated-integral chain
  double tol_series = 1e-14;  ///< stop once max-abs xi^(k)A(omega) drops below
};

/// One level of the chain tabulated on the shared grid.
using GridMatrix = std::vector<Eigen::MatrixXd>;

/// xi^(1)A, ..., xi^(N)A on the uniform grid over [0, omega], where
/// xi^(1)A(s) = int_0^s A and xi^(k)A(s) = int_0^s A * xi^(k-1)A. Each level
/// is one cumulative-Simpson pass over the previous one; the chain stops at
/// max_order or once the newest level is below tol_series at s = omega.
std::vector<GridMatrix> xi_chain(const SystemSpec& sys, int grid_points,
                                 int max_order, double tol_series = 1e-14);

struct SeriesResult {
  Eigen::MatrixXd m_omega;  ///< truncated M(omega) = sum_k xi^(k)A(omega)
  int order_used = 0;
  /// Factorial envelope of the discarded tail: sum_{j>N} (a*omega)^j / j!
  /// with a the sup of the coefficient matrix row-sum norm over the grid.
  double tail_bound = 0.0;
  int grid_points = 0;
  /// False when the chain hit max_order with the last term still above
  /// tol_series; carried as a warning, not a failure.
  bool converged = true;
};

/// Truncated M(s) on the whole grid (row 1 feeds the tangent-integral
/// condition; s = omega feeds the frame condition).
struct SeriesTabulation {
  std::vector<double> s;
  GridMatrix m;
  int order_used = 0;
  double tail_bound = 0.0;
  bool converged = true;
};

SeriesTabulation tabulate_m(const SystemSpec& sys,
                            const SeriesSettings& settings = {});
SeriesResult m_series(const SystemSpec& sys,
                      const SeriesSettings& settings = {});

enum class Verdict { Closed, NotClosed };

const char* to_string(Verdict v);

struct CriterionSettings {
  SeriesSettings series;
  int steps = 4096;        ///< RK4 steps for the attached oracle
  double tol_zero = 1e-8;  ///< zero test for both closure conditions
  bool reorthonormalize = false;
};

/// Everything the closure decision rests on, with the oracle's independent
/// residuals attached. Residuals are reported raw so callers can
/// re-threshold; the verdict uses tol_zero.
struct ClosureReport {
  Verdict verdict = Verdict::NotClosed;
  double tol_zero = 1e-8;

  double cond_i_residual = 0.0;       ///< max-abs M(omega)
  Eigen::VectorXd cond_ii_residuals;  ///< (omega + int m11, int m12, ...)
  double det_m_omega = 0.0;           ///< via LU with partial pivoting

  int order_used = 0;
  double tail_bound = 0.0;
  bool series_converged = true;
  int grid_points = 0;
  int steps = 0;

  double oracle_frame_gap = 0.0;
  double oracle_curve_gap = 0.0;
  Eigen::VectorXd oracle_tangent_integral;
  double oracle_frame_drift = 0.0;
};

/// The closure criterion: closed iff M(omega) = 0 and the tangent-integral
/// vector (omega + int m11, int m12, ..., int m1n) vanishes, both to
/// tol_zero. The RK4 oracle is run alongside and its residuals recorded in
/// every report; it validates the series, it does not replace it.
ClosureReport closure_criterion(const SystemSpec& sys,
                                const CriterionSettings& settings = {});

struct PeriodicSolutionTest {
  double det_m_omega = 0.0;
  /// |det M(omega)| < tol_zero: some nonvanishing periodic solution exists
  /// (weaker than M(omega) = 0, which gives n independent ones).
  bool has_nonvanishing_periodic = false;
};

PeriodicSolutionTest periodic_solution_test(const SystemSpec& sys,
                                            const CriterionSettings& settings = {});

// CurvatureProfile conveniences.
SeriesResult m_series(const CurvatureProfile& p,
                      const SeriesSettings& settings = {});
ClosureReport closure_criterion(const CurvatureProfile& p,
                                const CriterionSettings& settings = {});
PeriodicSolutionTest periodic_solution_test(const CurvatureProfile& p,
                                            const CriterionSettings& settings = {});

}  // namespace mink
