#include "minkclose/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "minkclose/quadrature.hpp"

namespace mink {

namespace {

Eigen::VectorXd sign_vector(const std::vector<int>& signs) {
  Eigen::VectorXd d(signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) d[i] = signs[i];
  return d;
}

Eigen::MatrixXd coefficient_at(const SystemSpec& sys, double s) {
  Eigen::MatrixXd a = sys.coefficient(s);
  if (!a.allFinite())
    throw std::runtime_error("coefficient matrix is not finite at s=" +
                             std::to_string(s));
  return a;
}

// Sequential Gram-Schmidt of the frame rows against the indefinite metric
// diag(coord); row i is rescaled to <V_i,V_i> = frame_signs[i].
void pseudo_orthonormalize(Eigen::MatrixXd& frame,
                           const std::vector<int>& frame_signs,
                           const Eigen::VectorXd& coord, double s) {
  const int n = static_cast<int>(frame.rows());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      const double proj =
          frame_signs[j] * frame.row(i).cwiseProduct(coord.transpose())
                               .dot(frame.row(j));
      frame.row(i) -= proj * frame.row(j);
    }
    const double q =
        frame.row(i).cwiseProduct(coord.transpose()).dot(frame.row(i));
    if (!(q * frame_signs[i] > 0.0))
      throw std::runtime_error(
          "reorthonormalization failed (degenerate frame) at s=" +
          std::to_string(s));
    frame.row(i) /= std::sqrt(std::abs(q));
  }
}

CurveTrace propagate(const SystemSpec& sys, int steps, bool with_positions,
                     const Eigen::VectorXd& x0, const IntegrateOptions& opt) {
  if (steps < 2)
    throw std::invalid_argument("steps: must be >= 2, got " +
                                std::to_string(steps));
  const int n = sys.dimension();
  const double omega = sys.omega();
  const double h = omega / steps;

  CurveTrace trace;
  trace.frame_signs = sys.sign_sequence();
  trace.coord_signs = trace.frame_signs;

  Eigen::MatrixXd frame = Eigen::MatrixXd::Identity(n, n);
  if (opt.initial_frame) {
    // A user frame lives in ambient coordinates; it must realize the ambient
    // signature and carry exactly the system's sign sequence.
    MetricSignature ambient{n, 0};
    for (int e : trace.frame_signs)
      if (e == -1) ++ambient.v;
    validate_frame(*opt.initial_frame, ambient);
    if (opt.initial_frame->signs != trace.frame_signs)
      throw std::invalid_argument(
          "initial frame: sign sequence does not match the system's");
    frame = opt.initial_frame->vectors;
    trace.coord_signs.assign(n, 1);
    for (int i = 0; i < ambient.v; ++i) trace.coord_signs[i] = -1;
  }

  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  if (with_positions && x0.size() > 0) {
    if (x0.size() != n)
      throw std::invalid_argument("x0: expected dimension " + std::to_string(n) +
                                  ", got " + std::to_string(x0.size()));
    x = x0;
  }

  trace.s.reserve(steps + 1);
  trace.frames.reserve(steps + 1);
  if (with_positions) trace.positions.reserve(steps + 1);
  trace.s.push_back(0.0);
  trace.frames.push_back(frame);
  if (with_positions) trace.positions.push_back(x);

  Eigen::MatrixXd k1(n, n), k2(n, n), k3(n, n), k4(n, n);
  Eigen::MatrixXd p2(n, n), p3(n, n), p4(n, n);
  for (int step = 0; step < steps; ++step) {
    const double s0 = step * h;
    const Eigen::MatrixXd a1 = coefficient_at(sys, s0);
    const Eigen::MatrixXd am = coefficient_at(sys, s0 + 0.5 * h);
    const Eigen::MatrixXd a4 = coefficient_at(sys, s0 + h);

    k1.noalias() = a1 * frame;
    p2 = frame + (0.5 * h) * k1;
    k2.noalias() = am * p2;
    p3 = frame + (0.5 * h) * k2;
    k3.noalias() = am * p3;
    p4 = frame + h * k3;
    k4.noalias() = a4 * p4;

    if (with_positions) {
      // x' = V_1 evaluated at the same stage frames keeps the position at
      // the integrator's full order.
      x += (h / 6.0) * (frame.row(0) + 2.0 * p2.row(0) + 2.0 * p3.row(0) +
                        p4.row(0)).transpose();
    }
    frame += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    if (opt.reorthonormalize)
      pseudo_orthonormalize(frame, trace.frame_signs,
                            sign_vector(trace.coord_signs), s0 + h);
    if (!frame.allFinite() || (with_positions && !x.allFinite()))
      throw std::runtime_error("frame integration diverged at s=" +
                               std::to_string(s0 + h));

    trace.s.push_back((step + 1) * h);
    trace.frames.push_back(frame);
    if (with_positions) trace.positions.push_back(x);
  }
  trace.s.back() = omega;
  return trace;
}

}  // namespace

CurveTrace integrate_frame(const SystemSpec& sys, int steps,
                           const IntegrateOptions& opt) {
  return propagate(sys, steps, false, Eigen::VectorXd(), opt);
}

Eigen::MatrixXd monodromy(const SystemSpec& sys, int steps) {
  return integrate_frame(sys, steps).frames.back();
}

CurveTrace reconstruct_curve(const SystemSpec& sys, int steps,
                             const Eigen::VectorXd& x0,
                             const IntegrateOptions& opt) {
  return propagate(sys, steps, true, x0, opt);
}

CurveTrace reconstruct_curve(const SystemSpec& sys, int steps) {
  return propagate(sys, steps, true, Eigen::VectorXd(), IntegrateOptions{});
}

CurveTrace integrate_frame(const CurvatureProfile& p, int steps,
                           const IntegrateOptions& opt) {
  return integrate_frame(SystemSpec::frenet(p), steps, opt);
}

Eigen::MatrixXd monodromy(const CurvatureProfile& p, int steps) {
  return monodromy(SystemSpec::frenet(p), steps);
}

CurveTrace reconstruct_curve(const CurvatureProfile& p, int steps,
                             const Eigen::VectorXd& x0,
                             const IntegrateOptions& opt) {
  return reconstruct_curve(SystemSpec::frenet(p), steps, x0, opt);
}

CurveTrace reconstruct_curve(const CurvatureProfile& p, int steps) {
  return reconstruct_curve(SystemSpec::frenet(p), steps);
}

ClosureResiduals closure_residuals(const CurveTrace& trace) {
  if (trace.s.size() < 3)
    throw std::invalid_argument("trace: need at least 3 samples");
  if (trace.positions.size() != trace.s.size())
    throw std::invalid_argument("trace: positions missing (frame-only trace)");
  const double h = trace.s[1] - trace.s[0];

  ClosureResiduals res;
  res.curve_gap = (trace.positions.back() - trace.positions.front()).norm();
  res.frame_gap =
      (trace.frames.back() - trace.frames.front()).cwiseAbs().maxCoeff();
  std::vector<Eigen::VectorXd> tangent;
  tangent.reserve(trace.frames.size());
  for (const auto& f : trace.frames)
    tangent.push_back(f.row(0).transpose());
  res.tangent_integral = integrate_simpson(tangent, h);
  return res;
}

double max_frame_drift(const CurveTrace& trace) {
  if (trace.frames.empty())
    throw std::invalid_argument("trace: empty");
  const Eigen::VectorXd coord = sign_vector(trace.coord_signs);
  const Eigen::VectorXd target = sign_vector(trace.frame_signs);
  double worst = 0.0;
  for (const auto& f : trace.frames) {
    Eigen::MatrixXd gram = f * coord.asDiagonal() * f.transpose();
    gram.diagonal() -= target;
    worst = std::max(worst, gram.cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace mink
