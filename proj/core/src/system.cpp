#include "minkclose/system.hpp"

#include <cmath>
#include <stdexcept>

namespace mink {

void DarbouxSpacelikeParams::validate() const {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::invalid_argument("omega: must be positive and finite");
  if (!std::isfinite(kg) || !std::isfinite(kn) || !std::isfinite(tg))
    throw std::invalid_argument("darboux: kg, kn, tg must be finite");
}

SystemSpec SystemSpec::frenet(CurvatureProfile p) {
  p.validate();
  SystemSpec spec;
  spec.data_ = std::move(p);
  return spec;
}

SystemSpec SystemSpec::darboux_timelike(DarbouxParams prm) {
  prm.validate();
  SystemSpec spec;
  spec.data_ = prm;
  return spec;
}

SystemSpec SystemSpec::darboux_spacelike(double kg, double kn, double tg,
                                         double omega) {
  DarbouxSpacelikeParams prm{kg, kn, tg, omega};
  prm.validate();
  SystemSpec spec;
  spec.data_ = prm;
  return spec;
}

int SystemSpec::dimension() const {
  if (const auto* p = std::get_if<CurvatureProfile>(&data_)) return p->sig.n;
  return 3;
}

double SystemSpec::omega() const {
  if (const auto* p = std::get_if<CurvatureProfile>(&data_)) return p->omega;
  if (const auto* d = std::get_if<DarbouxParams>(&data_)) return d->omega;
  return std::get<DarbouxSpacelikeParams>(data_).omega;
}

Eigen::MatrixXd SystemSpec::coefficient(double s) const {
  if (const auto* p = std::get_if<CurvatureProfile>(&data_))
    return frenet_matrix(*p, s);
  if (const auto* d = std::get_if<DarbouxParams>(&data_))
    return darboux_matrix(d->kg, d->kn, d->tg, d->eps, SurfaceKind::Timelike);
  const auto& d = std::get<DarbouxSpacelikeParams>(data_);
  return darboux_matrix(d.kg, d.kn, d.tg, 1, SurfaceKind::Spacelike);
}

std::vector<int> SystemSpec::sign_sequence() const {
  if (const auto* p = std::get_if<CurvatureProfile>(&data_)) return p->eps;
  if (const auto* d = std::get_if<DarbouxParams>(&data_))
    return darboux_signs(d->eps, SurfaceKind::Timelike);
  return darboux_signs(1, SurfaceKind::Spacelike);
}

const CurvatureProfile* SystemSpec::as_frenet() const {
  return std::get_if<CurvatureProfile>(&data_);
}

const DarbouxParams* SystemSpec::as_darboux_timelike() const {
  return std::get_if<DarbouxParams>(&data_);
}

const DarbouxSpacelikeParams* SystemSpec::as_darboux_spacelike() const {
  return std::get_if<DarbouxSpacelikeParams>(&data_);
}

}  // namespace mink
