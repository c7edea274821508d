#pragma once

#include <optional>
#include <vector>

#include "minkclose/metric.hpp"
#include "minkclose/system.hpp"

namespace mink {

struct IntegrateOptions {
  /// Per-step Gram-Schmidt against the indefinite metric. Off by default:
  /// the drift is a measured quantity and projection would mask it.
  bool reorthonormalize = false;

  /// Starting frame in ambient coordinates; validated against the ambient
  /// signature and required to carry the system's sign sequence. When absent
  /// the identity is used and the trace lives in initial-frame coordinates.
  std::optional<FrameState> initial_frame;
};

/// Arc-length-sampled flow of the frame ODE Phi' = A(s) Phi, plus the curve
/// x' = V_1 when reconstructed. Row i of frames[k] holds frame vector V_i at
/// s[k], expressed in coordinates whose metric is diag(coord_signs); the
/// exact flow keeps frames[k] * diag(coord_signs) * frames[k]^T equal to
/// diag(frame_signs).
struct CurveTrace {
  std::vector<double> s;
  std::vector<Eigen::VectorXd> positions;  ///< empty for frame-only traces
  std::vector<Eigen::MatrixXd> frames;
  std::vector<int> frame_signs;
  std::vector<int> coord_signs;
};

/// Fixed-step classical RK4 on Phi' = A(s) Phi over one period, h = omega /
/// steps. Phi(0) is the identity unless an initial frame is supplied.
CurveTrace integrate_frame(const SystemSpec& sys, int steps,
                           const IntegrateOptions& opt = {});

/// Phi(omega) from integrate_frame's final step.
Eigen::MatrixXd monodromy(const SystemSpec& sys, int steps);

/// Integrates the augmented system {Phi' = A Phi, x' = V_1} jointly inside
/// the RK stages (x keeps 4th-order accuracy). x0 defaults to the origin.
CurveTrace reconstruct_curve(const SystemSpec& sys, int steps,
                             const Eigen::VectorXd& x0,
                             const IntegrateOptions& opt = {});
CurveTrace reconstruct_curve(const SystemSpec& sys, int steps);

// CurvatureProfile conveniences (the general Frenet family).
CurveTrace integrate_frame(const CurvatureProfile& p, int steps,
                           const IntegrateOptions& opt = {});
Eigen::MatrixXd monodromy(const CurvatureProfile& p, int steps);
CurveTrace reconstruct_curve(const CurvatureProfile& p, int steps,
                             const Eigen::VectorXd& x0,
                             const IntegrateOptions& opt = {});
CurveTrace reconstruct_curve(const CurvatureProfile& p, int steps);

struct ClosureResiduals {
  /// Euclidean coordinate norm of x(omega) - x(0). The pseudo-norm would
  /// vanish on nonzero null gaps and falsely report closure.
  double curve_gap = 0.0;
  /// Max-abs of Phi(omega) - Phi(0).
  double frame_gap = 0.0;
  /// Composite-Simpson estimate of the tangent integral over the period.
  Eigen::VectorXd tangent_integral;
};

/// Needs a reconstructed trace with at least 3 samples.
ClosureResiduals closure_residuals(const CurveTrace& trace);

/// Worst orthonormality defect along the trace:
/// max_k max-abs(F_k diag(coord_signs) F_k^T - diag(frame_signs)).
double max_frame_drift(const CurveTrace& trace);

}  // namespace mink
