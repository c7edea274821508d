#pragma once

#include <optional>

#include "minkclose/profile.hpp"

namespace mink {

/// Constant Darboux data (geodesic curvature, normal curvature, geodesic
/// torsion) of a curve on a timelike surface, with eps = <T,T> = +-1.
struct DarbouxParams {
  double kg = 0.0;
  double kn = 0.0;
  double tg = 0.0;
  int eps = 1;
  double omega = 1.0;

  void validate() const;

  /// D = kg^2 - eps kn^2 + eps tg^2 governs whether the constant-coefficient
  /// solution is hyperbolic (D > 0) or trigonometric (D < 0).
  double discriminant() const {
    return kg * kg - eps * (kn * kn) + eps * (tg * tg);
  }
};

struct DarbouxRow1 {
  double m11 = 0.0;
  double m12 = 0.0;
  double m13 = 0.0;
};

struct DarbouxRow1Integrals {
  double i11 = 0.0;  ///< omega + integral of m11 over one period
  double i12 = 0.0;  ///< integral of m12
  double i13 = 0.0;  ///< integral of m13
};

/// Closed forms for row 1 of M(omega) = Phi(omega) - I. Real arithmetic
/// throughout: cosh/sinh for D > 0, cos/sin for D < 0, series limits near
/// D = 0 (the forms are continuous across the split).
DarbouxRow1 closed_form_row1(const DarbouxParams& prm);

/// Closed forms for the tangent-integral condition over one period.
DarbouxRow1Integrals closed_form_row1_integrals(const DarbouxParams& prm);

struct DarbouxClosure {
  bool closed = false;
  std::optional<int> k;  ///< matching winding number when closed
};

/// The curve closes up iff tg = 0 and kg^2 - eps kn^2 = -(2 k pi / omega)^2
/// for some positive integer k; both tested to `tol`.
DarbouxClosure darboux_closure_condition(const DarbouxParams& prm,
                                         double tol = 1e-8);

}  // namespace mink
