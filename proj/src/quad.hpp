#pragma once

// Private quad-precision helpers shared by curve and qspec.

#include <quadmath.h>

#include "hyperzero/family.hpp"

namespace hyperzero::detail {

using quad = __float128;

struct cquad {
  quad re = 0;
  quad im = 0;
};

inline cquad operator+(cquad a, cquad b) { return {a.re + b.re, a.im + b.im}; }
inline cquad operator-(cquad a, cquad b) { return {a.re - b.re, a.im - b.im}; }
inline cquad operator*(cquad a, cquad b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline cquad operator*(quad s, cquad a) { return {s * a.re, s * a.im}; }
inline cquad operator/(cquad a, cquad b) {
  const quad den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
inline quad abs(cquad a) { return hypotq(a.re, a.im); }

inline cquad ipow(cquad z, int k) {
  cquad out{1, 0};
  while (k > 0) {
    if (k & 1) out = out * z;
    z = z * z;
    k >>= 1;
  }
  return out;
}

/// sin and cos of theta, phi and phi - theta from the reduced angles
/// alpha = (pi - r theta)/n and beta = (pi + (n - r) theta)/n, with
/// phi = pi - alpha and phi - theta = pi - beta.
struct QuadTrig {
  quad sin_theta, cos_theta;
  quad sin_phi, cos_phi;
  quad sin_pmt, cos_pmt;
};

QuadTrig quad_trig(const FamilyParams& params, double theta);

}  // namespace hyperzero::detail
