#pragma once

// The polynomial family P_m(z) defined by
//   sum_m P_m(z) t^m = 1 / ((1 - t)^n + z t^r),
// its generalisation to 1 / (Q(t) + z t^r), and an independent numeric
// oracle that extracts P_m(z0) as a Taylor coefficient by contour integration.

#include <complex>
#include <vector>

#include "hyperzero/exactpoly.hpp"

namespace hyperzero {

/// The exponents (n, r) of D_{n,r}(t, z) = (1 - t)^n + z t^r.
/// Both are positive and at least one exceeds 1.
class FamilyParams {
 public:
  FamilyParams(int n, int r);

  int n() const noexcept { return n_; }
  int r() const noexcept { return r_; }
  /// Degree of D in t, which is also the number of roots of Q(zeta).
  int degree_in_t() const noexcept { return n_ > r_ ? n_ : r_; }

  bool operator==(const FamilyParams&) const = default;

 private:
  int n_;
  int r_;
};

/// Denominator Q(t) + z t^r with rational Q. The caller asserts that Q has
/// only positive real zeros; nothing here checks it.
struct GeneralDenominator {
  std::vector<BigRat> qcoeffs;  // ascending in t
  int r = 1;
};

/// P_0 .. P_{m_max}, exact.
std::vector<IntPoly> generate(const FamilyParams& params, int m_max);

/// Coefficients of the power series of 1 / (Q(t) + z t^r).
std::vector<RatPoly> generate_general(const GeneralDenominator& den, int m_max);

/// D_{n,r}(t, z) as a polynomial in t with rational coefficients for a given
/// rational z; handy for exact checks.
RatPoly denominator_in_t(const FamilyParams& params, const BigRat& z);

/// Residual of the defining recurrence at index m >= 1:
///   sum_{j=0}^{min(n,m)} (-1)^j C(n,j) P_{m-j} + z P_{m-r} [m >= r].
/// Zero for every m when `polys` came from generate().
IntPoly recurrence_residual(const FamilyParams& params, const std::vector<IntPoly>& polys, int m);

std::complex<double> eval_denominator(const FamilyParams& params, std::complex<double> t,
                                      double z0);

/// Trapezoidal approximation of (1 / 2 pi i) \oint dt / (t^{m+1} D(t, z0))
/// on |t| = radius with `nodes` equally spaced points. Requires
/// nodes >= 4 (m + 1); throws SingularOnContour if |D| < 1e-12 at a node.
std::complex<double> eval_series_oracle(const FamilyParams& params, int m, double z0,
                                        double radius, int nodes);

struct ContourChoice {
  double radius;
  int nodes;
};

/// Contour that keeps the oracle accurate for large m: just inside the
/// smallest root modulus R of D(., z0), radius = R exp(-1/(m+1)), with
/// 64 (m + 1) nodes.
ContourChoice suggested_contour(const FamilyParams& params, int m, double z0);

}  // namespace hyperzero
