#pragma once

#include <Eigen/Dense>
#include <vector>

namespace mink {

/// Signature of the flat indefinite metric on real n-space:
/// <u,w> = -sum_{i<v} u_i w_i + sum_{i>=v} u_i w_i  (0-based coordinates).
struct MetricSignature {
  int n = 0;  ///< ambient dimension, n >= 2
  int v = 0;  ///< index: number of negative metric directions, 0 <= v < n

  /// Throws std::invalid_argument if n < 2 or v is out of range.
  void validate() const;

  double sign(int i) const { return i < v ? -1.0 : 1.0; }
  Eigen::VectorXd diagonal() const;
};

enum class CausalCharacter { Spacelike, Timelike, Null };

const char* to_string(CausalCharacter c);

double inner(const Eigen::VectorXd& u, const Eigen::VectorXd& w,
             const MetricSignature& sig);

/// Spacelike if <u,u> > 0 or u = 0, timelike if <u,u> < 0, null otherwise.
/// The comparison against zero is exact on the computed inner product; callers
/// probing near-null vectors get the floating-point sign.
CausalCharacter causal_character(const Eigen::VectorXd& u,
                                 const MetricSignature& sig);

/// sqrt(|<u,u>|); vanishes on null vectors.
double pseudo_norm(const Eigen::VectorXd& u, const MetricSignature& sig);

/// A candidate pseudo-orthonormal frame. Row i of `vectors` holds the
/// coordinates of frame vector V_i; signs[i] is the intended <V_i,V_i> = +-1.
struct FrameState {
  Eigen::MatrixXd vectors;
  std::vector<int> signs;
};

/// Raw orthonormality defect G - diag(signs) with G_ij = <V_i,V_j> under sig.
/// Computes for any +-1 sign sequence of the right length, including ones
/// whose negative count disagrees with sig.v (the defect then shows it);
/// conformance enforcement lives in validate_frame.
Eigen::MatrixXd frame_residual(const FrameState& f, const MetricSignature& sig);

/// Checks that `f` realizes a pseudo-orthonormal frame of the signature:
/// signs are +-1 with exactly sig.v negative entries and the residual is
/// below `tol` in max-abs. Throws std::invalid_argument otherwise.
void validate_frame(const FrameState& f, const MetricSignature& sig,
                    double tol = 1e-8);

}  // namespace mink
