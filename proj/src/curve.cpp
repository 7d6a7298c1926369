#include "hyperzero/curve.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "quad.hpp"

namespace hyperzero {

namespace {

using detail::quad;
using detail::QuadTrig;
using detail::quad_trig;

const quad kPiQ = M_PIq;

quad qpow(quad x, int k) {
  quad out = 1;
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

BigInt ipow(long base, int exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base),
                static_cast<unsigned long>(exp));
  if (base < 0 && exp % 2 == 1) out = -out;
  return out;
}

void check_domain(const FamilyParams& params, double theta) {
  const double end = std::numbers::pi / params.r();
  if (!(theta > 0.0 && theta < end)) {
    throw Error(ErrorCode::OutOfDomain,
                "theta = " + std::to_string(theta) + " outside (0, pi/r)");
  }
}

quad quad_z(const FamilyParams& params, const QuadTrig& t) {
  const int n = params.n();
  const int r = params.r();
  if (r < n) return qpow(t.sin_theta / t.sin_pmt, n - r) * qpow(t.sin_theta / t.sin_phi, r);
  if (n < r) return qpow(t.sin_theta / t.sin_phi, n) * qpow(t.sin_pmt / t.sin_phi, r - n);
  return qpow(t.sin_theta / t.sin_phi, n);
}

}  // namespace

// phi = pi - alpha with alpha = (pi - r theta) / n, and
// phi - theta = pi - beta with beta = (pi + (n - r) theta) / n.
// Working from alpha and beta keeps the small angles near the endpoints exact.
QuadTrig detail::quad_trig(const FamilyParams& params, double theta) {
  const quad th = theta;
  const quad n = params.n();
  const quad r = params.r();
  const quad alpha = (kPiQ - r * th) / n;
  const quad beta = (kPiQ + (n - r) * th) / n;
  QuadTrig t;
  t.sin_theta = sinq(th);
  t.cos_theta = cosq(th);
  t.sin_phi = sinq(alpha);
  t.cos_phi = -cosq(alpha);
  t.sin_pmt = sinq(beta);
  t.cos_pmt = -cosq(beta);
  return t;
}

IntervalI interval_I(const FamilyParams& params) {
  const int n = params.n();
  const int r = params.r();
  if (n >= 2 && r >= 2) return {BigRat(0), std::nullopt};
  if (r == 1) {
    BigRat hi(ipow(n, n), ipow(n - 1, n - 1));
    hi.canonicalize();
    return {BigRat(0), hi};
  }
  BigRat lo(ipow(r - 1, r - 1), ipow(r, r));
  lo.canonicalize();
  return {lo, std::nullopt};
}

ThetaTrig theta_trig(const FamilyParams& params, double theta) {
  check_domain(params, theta);
  const auto t = quad_trig(params, theta);
  return {static_cast<double>(t.sin_theta), static_cast<double>(t.cos_theta),
          static_cast<double>(t.sin_phi),   static_cast<double>(t.cos_phi),
          static_cast<double>(t.sin_pmt),   static_cast<double>(t.cos_pmt)};
}

ThetaSample z_of_theta(const FamilyParams& params, double theta) {
  check_domain(params, theta);
  const auto t = quad_trig(params, theta);
  const quad ratio = t.sin_phi / t.sin_theta;
  ThetaSample s;
  s.theta = theta;
  s.phi = ((params.n() - 1) * std::numbers::pi + params.r() * theta) / params.n();
  s.z = static_cast<double>(quad_z(params, t));
  s.a_val = static_cast<double>(-params.n() * ratio * t.cos_pmt + params.r());
  s.b_val = static_cast<double>(params.n() * ratio * t.sin_pmt);
  s.t0_ratio = static_cast<double>(t.sin_phi / t.sin_pmt);
  return s;
}

double theta_of_z(const FamilyParams& params, double z, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
  if (!interval_I(params).contains(z)) {
    throw Error(ErrorCode::OutOfInterval, "z = " + std::to_string(z) + " outside I");
  }
  double lo = 0.0;
  double hi = std::numbers::pi / params.r();
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 400; ++iter) {
    mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double zm = z_of_theta(params, mid).z;
    if (std::abs(zm - z) < tol) break;
    if (zm < z) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

EndpointLimits endpoint_limits(const FamilyParams& params) {
  const double n = params.n();
  const double r = params.r();
  if (params.r() == 1) return {std::numbers::pi, n / (n - 1), n};
  if (params.n() == 1) return {0.0, 1.0 / r, (r - 1) / r};
  throw Error(ErrorCode::WrongCase, "endpoint limits exist only for r = 1 or n = 1");
}

EndpointLimits endpoint_quotients(const FamilyParams& params, double theta) {
  check_domain(params, theta);
  const auto t = quad_trig(params, theta);
  if (params.r() == 1) {
    return {theta, static_cast<double>(t.sin_theta / t.sin_pmt),
            static_cast<double>(t.sin_theta / t.sin_phi)};
  }
  if (params.n() == 1) {
    return {theta, static_cast<double>(t.sin_theta / t.sin_phi),
            static_cast<double>(t.sin_pmt / t.sin_phi)};
  }
  throw Error(ErrorCode::WrongCase, "endpoint quotients exist only for r = 1 or n = 1");
}

std::optional<DoubleZero> double_zero_theta(const FamilyParams& params, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
  const int n = params.n();
  const int r = params.r();
  const bool case1 = n > r && r > 1 && r % 2 == 1;
  const bool case2 = r > n && n > 1 && n % 2 == 1;
  if (!case1 && !case2) return std::nullopt;

  // z* = (-1)^(r+1) n^n / (r^r (n-r)^(n-r)), with 0^0 = 1.
  BigInt num = ipow(n, n);
  BigInt den = ipow(r, r);
  const int d = n - r;
  if (d > 0) {
    den *= ipow(d, d);
  } else {
    num *= ipow(d, -d);
  }
  if (r % 2 == 0) num = -num;
  BigRat z_exact(num, den);
  z_exact.canonicalize();

  DoubleZero out;
  out.z_exact = z_exact;
  out.z = z_exact.get_d();
  // Bisect to full precision: the root pair splits like sqrt(theta - theta*).
  out.theta = theta_of_z(params, out.z, std::numeric_limits<double>::min());
  const auto t = theta_trig(params, out.theta);
  out.zeta = -(static_cast<double>(r) / d) * t.sin_phi_minus_theta / t.sin_phi;
  return out;
}

}  // namespace hyperzero
