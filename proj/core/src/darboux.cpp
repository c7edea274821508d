#include "minkclose/darboux.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mink {

namespace {

// Width of the series-limit band around D = 0.
constexpr double kBranchDelta = 1e-12;

// C(w) = (cosh(sqrt(D) w) - 1) / D, S(w) = sinh(sqrt(D) w) / sqrt(D) and
// T(w) = (S(w) - w) / D, evaluated in real arithmetic on each side of D = 0
// (cosh(ix) = cos x) with second-order series limits in between.
struct Kernels {
  double c;
  double s;
  double t;
};

Kernels kernels(double d, double w) {
  if (d > kBranchDelta) {
    const double r = std::sqrt(d);
    const double s = std::sinh(r * w) / r;
    return {(std::cosh(r * w) - 1.0) / d, s, (s - w) / d};
  }
  if (d < -kBranchDelta) {
    const double r = std::sqrt(-d);
    const double s = std::sin(r * w) / r;
    return {(std::cos(r * w) - 1.0) / d, s, (s - w) / d};
  }
  const double w2 = w * w;
  return {w2 / 2.0 + d * w2 * w2 / 24.0,
          w + d * w * w2 / 6.0,
          w * w2 / 6.0 + d * w2 * w2 * w / 120.0};
}

}  // namespace

void DarbouxParams::validate() const {
  if (eps != 1 && eps != -1)
    throw std::invalid_argument("eps: must be +1 or -1");
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::invalid_argument("omega: must be positive and finite");
  if (!std::isfinite(kg) || !std::isfinite(kn) || !std::isfinite(tg))
    throw std::invalid_argument("darboux: kg, kn, tg must be finite");
  if (!std::isfinite(discriminant()))
    throw std::invalid_argument("darboux: discriminant overflows");
}

DarbouxRow1 closed_form_row1(const DarbouxParams& prm) {
  prm.validate();
  const auto [c, s, t] = kernels(prm.discriminant(), prm.omega);
  (void)t;
  const double flat = prm.kg * prm.kg - prm.eps * prm.kn * prm.kn;
  return {flat * c,
          prm.kg * s - prm.eps * prm.kn * prm.tg * c,
          -prm.eps * prm.kn * s + prm.eps * prm.kg * prm.tg * c};
}

DarbouxRow1Integrals closed_form_row1_integrals(const DarbouxParams& prm) {
  prm.validate();
  // Term-wise integration of the row-1 closed forms over one period:
  // int S = C and int C = T.
  const auto [c, s, t] = kernels(prm.discriminant(), prm.omega);
  (void)s;
  const double flat = prm.kg * prm.kg - prm.eps * prm.kn * prm.kn;
  return {prm.omega + flat * t,
          prm.kg * c - prm.eps * prm.kn * prm.tg * t,
          -prm.eps * prm.kn * c + prm.eps * prm.kg * prm.tg * t};
}

DarbouxClosure darboux_closure_condition(const DarbouxParams& prm, double tol) {
  prm.validate();
  if (!(tol > 0.0))
    throw std::invalid_argument("tol: must be positive");
  if (!(std::abs(prm.tg) < tol)) return {false, std::nullopt};
  const double flat = prm.kg * prm.kg - prm.eps * prm.kn * prm.kn;
  // Any matching winding number satisfies (2 k pi / omega)^2 = -flat.
  const double bound =
      prm.omega * std::sqrt(std::max(0.0, -flat)) / (2.0 * std::numbers::pi);
  const int k_max = static_cast<int>(std::ceil(bound)) + 1;
  for (int k = 1; k <= k_max; ++k) {
    const double freq = 2.0 * k * std::numbers::pi / prm.omega;
    if (std::abs(flat + freq * freq) < tol) return {true, k};
  }
  return {false, std::nullopt};
}

}  // namespace mink
