#pragma once

// Experiments over the family: exact hyperbolicity and containment counts,
// sign patterns of R_m on the theta_h grid, the theta-root / Sturm-root
// cross-check, theta-space density of zeros, and the exponential-sum sign.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperzero/curve.hpp"
#include "hyperzero/family.hpp"

namespace hyperzero {

struct PerMResult {
  int m = 0;
  int degree = 0;
  std::size_t real_roots_in_I = 0;
  std::size_t total_real_roots = 0;
  bool endpoint_root = false;
  bool hyperbolic = false;   // real_roots_in_I == degree
  bool containment = false;  // no real root outside the open interval I
};

struct VerifyReport {
  FamilyParams params{2, 1};
  int m_lo = 0;
  int m_hi = 0;
  std::vector<PerMResult> per_m;
  /// Least m such that every m' in [m, m_hi] passes both flags.
  std::optional<int> first_all_pass_m;
  std::vector<std::string> notes;
};

/// Sturm counts for P_m, m_lo <= m <= m_max, over I and over all of R.
/// An infinite end of I is replaced by the Cauchy bound of each P_m.
/// `jobs` worker threads share the per-m work; results do not depend on it.
VerifyReport check_hyperbolicity(const FamilyParams& params, int m_max, int jobs = 1,
                                 int m_lo = 0);

/// Sturm-certified number of distinct real zeros of p in the open interval I
/// (endpoint zeros excluded); sets *endpoint_root when an end of I is a zero.
std::size_t count_in_interval(const IntPoly& p, const IntervalI& interval,
                              bool* endpoint_root = nullptr);

struct SignPattern {
  int m = 0;
  /// sgn R_m(theta_h) for h = 1..floor(m/r).
  std::vector<int> signs;
  /// sgn R_m(pi/r - 1e-9).
  int terminal_sign = 0;
  /// sgn R_m(pi/r - 1e-7), the sensitivity probe.
  int terminal_sign_coarse = 0;
  bool matches_prediction = false;
};

/// Requires m >= r.
SignPattern check_sign_pattern(const FamilyParams& params, int m);

struct CrossCheckResult {
  int m = 0;
  bool pass = false;
  std::size_t theta_roots = 0;
  std::size_t sturm_roots = 0;
  /// z(theta_j) for each theta-root, ascending.
  std::vector<double> z_roots;
  /// Each z(theta_j) fell in its own isolating interval (widened by
  /// tol * max(1, |z|)).
  bool bijection = false;
  /// Worst |P_m(z_j)| / sum_i |c_i| |z_j|^i.
  double max_residual = 0.0;
  /// Worst |P_m(z_j)| / max_i |c_i|; not scale-invariant, large once z_j >> 1.
  double max_residual_by_largest_coeff = 0.0;
};

/// Throws CountMismatch when the theta-root count differs from the Sturm
/// count on I.
CrossCheckResult cross_check_roots(const FamilyParams& params, int m, double tol = 1e-6);

struct DensityReport {
  int bins = 0;
  int m_max = 0;
  std::size_t covered = 0;
  double coverage_fraction = 0.0;
};

/// Bins of (0, pi/r) holding a zero of some R_m with m <= m_max. A bin counts
/// once a sign change of R_m is bracketed inside it.
DensityReport density_scan(const FamilyParams& params, int m_max, int bins);

/// density_scan at every checkpoint, from a single pass over m.
std::vector<DensityReport> density_profile(const FamilyParams& params,
                                           std::vector<int> checkpoints, int bins);

/// Sign of the real part of
///   sum_{k=0}^{n-1} w_k exp(-(cos(pi/n) - w_k) h pi / sin(pi/n)),
///   w_k = e^{(2k-1) pi i / n}.
/// For n = 2 the sum is exactly 2 (-1)^h cos(pi/2) = 0; its sign is taken
/// from the two-term form as (-1)^h.
int expsum_sign(int n, int h);

}  // namespace hyperzero
