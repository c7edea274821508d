#pragma once

#include <variant>
#include <vector>

#include "minkclose/darboux.hpp"
#include "minkclose/profile.hpp"

namespace mink {

struct DarbouxSpacelikeParams {
  double kg = 0.0;
  double kn = 0.0;
  double tg = 0.0;
  double omega = 1.0;

  void validate() const;
};

/// One coefficient-matrix interface over the supported ODE families: the
/// general Frenet system in dimension n and the two Darboux systems in
/// dimension 3. Integrators and the series engine are agnostic to which
/// family A(s) comes from.
class SystemSpec {
 public:
  static SystemSpec frenet(CurvatureProfile p);
  static SystemSpec darboux_timelike(DarbouxParams prm);
  static SystemSpec darboux_spacelike(double kg, double kn, double tg,
                                      double omega);

  int dimension() const;
  double omega() const;

  /// A(s) of the underlying system; constant Darboux data ignores s.
  Eigen::MatrixXd coefficient(double s) const;

  /// Frame signs eps_i = <V_i, V_i> of the system's moving frame.
  std::vector<int> sign_sequence() const;

  const CurvatureProfile* as_frenet() const;
  const DarbouxParams* as_darboux_timelike() const;
  const DarbouxSpacelikeParams* as_darboux_spacelike() const;

 private:
  SystemSpec() = default;

  std::variant<CurvatureProfile, DarbouxParams, DarbouxSpacelikeParams> data_;
};

}  // namespace mink
