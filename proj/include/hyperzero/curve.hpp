#pragma once

// The theta-parametrisation of the interval I:
//   phi(theta) = ((n-1) pi + r theta) / n,
//   z(theta)   = sin^n(theta) / (sin^{n-r}(phi - theta) sin^r(phi)),
// with the derived quantities A(theta), B(theta) and the ratio |t_0|.

#include <optional>

#include "hyperzero/exactpoly.hpp"
#include "hyperzero/family.hpp"

namespace hyperzero {

/// Open interval (lo, hi) holding the zeros; hi absent means +infinity.
struct IntervalI {
  BigRat lo;
  std::optional<BigRat> hi;

  double lo_value() const { return lo.get_d(); }
  std::optional<double> hi_value() const {
    return hi ? std::optional<double>(hi->get_d()) : std::nullopt;
  }
  bool contains(double z) const {
    return z > lo_value() && (!hi || z < hi->get_d());
  }
};

IntervalI interval_I(const FamilyParams& params);

/// Sines and cosines of theta, phi and phi - theta, evaluated in quad
/// precision from the reduced angles and rounded.
struct ThetaTrig {
  double sin_theta;
  double cos_theta;
  double sin_phi;
  double cos_phi;
  double sin_phi_minus_theta;
  double cos_phi_minus_theta;
};

ThetaTrig theta_trig(const FamilyParams& params, double theta);

struct ThetaSample {
  double theta;
  double phi;
  double z;
  double a_val;     // -n (sin phi / sin theta) cos(phi - theta) + r
  double b_val;     //  n (sin phi / sin theta) sin(phi - theta)
  double t0_ratio;  // sin phi / sin(phi - theta) = |t_0|
};

/// Throws OutOfDomain unless 0 < theta < pi / r.
ThetaSample z_of_theta(const FamilyParams& params, double theta);

/// Inverse of the increasing map theta -> z(theta) by bisection. Throws
/// OutOfInterval unless z lies strictly inside I.
double theta_of_z(const FamilyParams& params, double z, double tol = 1e-12);

/// Limits of the two sine quotients that pin the finite endpoint of I.
/// For r = 1 (theta -> pi): sin th / sin(phi - th) -> n/(n-1) and
/// sin th / sin phi -> n. For n = 1 (theta -> 0): sin th / sin phi -> 1/r and
/// sin(phi - th) / sin phi -> (r-1)/r. Other families throw WrongCase.
struct EndpointLimits {
  double theta_end;
  double first;
  double second;
};

EndpointLimits endpoint_limits(const FamilyParams& params);

/// The same two quotients evaluated at theta (theta_end is set to theta).
EndpointLimits endpoint_quotients(const FamilyParams& params, double theta);

struct DoubleZero {
  double theta;
  double z;
  double zeta;
  BigRat z_exact;
};

/// The unique theta* where Q(zeta) has a double zero; present only for
/// n > r > 1 with r odd, or r > n > 1 with n odd.
std::optional<DoubleZero> double_zero_theta(const FamilyParams& params, double tol = 1e-12);

}  // namespace hyperzero
