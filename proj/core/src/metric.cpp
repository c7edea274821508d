#include "minkclose/metric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mink {

void MetricSignature::validate() const {
  if (n < 2)
    throw std::invalid_argument("sig: dimension n must be >= 2, got " +
                                std::to_string(n));
  if (v < 0 || v >= n)
    throw std::invalid_argument("sig: index v must satisfy 0 <= v < n, got v=" +
                                std::to_string(v) + " for n=" + std::to_string(n));
}

Eigen::VectorXd MetricSignature::diagonal() const {
  validate();
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) d[i] = sign(i);
  return d;
}

const char* to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Spacelike: return "spacelike";
    case CausalCharacter::Timelike: return "timelike";
    case CausalCharacter::Null: return "null";
  }
  return "?";
}

namespace {

void check_dimension(const Eigen::VectorXd& u, const MetricSignature& sig,
                     const char* name) {
  if (u.size() != sig.n)
    throw std::invalid_argument(std::string(name) + ": expected dimension " +
                                std::to_string(sig.n) + ", got " +
                                std::to_string(u.size()));
}

}  // namespace

double inner(const Eigen::VectorXd& u, const Eigen::VectorXd& w,
             const MetricSignature& sig) {
  sig.validate();
  check_dimension(u, sig, "u");
  check_dimension(w, sig, "w");
  double acc = 0.0;
  for (int i = 0; i < sig.n; ++i) acc += sig.sign(i) * u[i] * w[i];
  return acc;
}

CausalCharacter causal_character(const Eigen::VectorXd& u,
                                 const MetricSignature& sig) {
  const double q = inner(u, u, sig);
  if (q > 0.0) return CausalCharacter::Spacelike;
  if (q < 0.0) return CausalCharacter::Timelike;
  return u.isZero(0.0) ? CausalCharacter::Spacelike : CausalCharacter::Null;
}

double pseudo_norm(const Eigen::VectorXd& u, const MetricSignature& sig) {
  return std::sqrt(std::abs(inner(u, u, sig)));
}

Eigen::MatrixXd frame_residual(const FrameState& f, const MetricSignature& sig) {
  sig.validate();
  if (f.vectors.rows() != sig.n || f.vectors.cols() != sig.n)
    throw std::invalid_argument("frame: expected " + std::to_string(sig.n) + "x" +
                                std::to_string(sig.n) + " vectors, got " +
                                std::to_string(f.vectors.rows()) + "x" +
                                std::to_string(f.vectors.cols()));
  if (static_cast<int>(f.signs.size()) != sig.n)
    throw std::invalid_argument("frame signs: expected " + std::to_string(sig.n) +
                                " entries, got " + std::to_string(f.signs.size()));
  for (int e : f.signs)
    if (e != 1 && e != -1)
      throw std::invalid_argument("frame signs: entries must be +1 or -1");

  const Eigen::VectorXd metric = sig.diagonal();
  Eigen::MatrixXd gram =
      f.vectors * metric.asDiagonal() * f.vectors.transpose();
  for (int i = 0; i < sig.n; ++i) gram(i, i) -= f.signs[i];
  return gram;
}

void validate_frame(const FrameState& f, const MetricSignature& sig, double tol) {
  const Eigen::MatrixXd residual = frame_residual(f, sig);
  int negatives = 0;
  for (int e : f.signs)
    if (e == -1) ++negatives;
  if (negatives != sig.v)
    throw std::invalid_argument(
        "frame signs: expected " + std::to_string(sig.v) + " negative sign" +
        (sig.v == 1 ? "" : "s") + " for v=" + std::to_string(sig.v) + ", got " +
        std::to_string(negatives));
  const double defect = residual.cwiseAbs().maxCoeff();
  if (!(defect <= tol))
    throw std::invalid_argument("frame: orthonormality defect " +
                                std::to_string(defect) + " exceeds tolerance " +
                                std::to_string(tol));
}

}  // namespace mink
