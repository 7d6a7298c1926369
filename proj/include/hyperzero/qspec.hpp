#pragma once

// The rescaled characteristic polynomial
//   Q(zeta) = (c - d zeta)^n + zeta^r,  c = sin(phi - th)/sin th,  d = sin phi/sin th,
// its complex zeros, and the real function
//   R_m(theta) = sum_k 1 / (zeta_k^{m+1} Q'(zeta_k))
// whose zeros in (0, pi/r) correspond to zeros of P_m in I.
//
// Root order convention: ascending modulus, near-equal moduli (1e-12
// relative) by argument in (-pi, pi]. The trivial pair e^{-i th}, e^{i th}
// therefore comes first.

#include <complex>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hyperzero/aberth.hpp"
#include "hyperzero/family.hpp"

namespace hyperzero {

inline constexpr double kCircleTol = 1e-8;
inline constexpr double kPairTol = 1e-6;

/// Ascending real coefficients of Q at theta, degree max{n, r}. For n = r odd
/// the leading coefficient 1 + (-d)^n vanishes at theta = pi/(2n).
std::vector<double> build_q(const FamilyParams& params, double theta);

struct QSpectrum {
  double theta = 0.0;
  std::vector<cplx> roots;
  std::vector<std::size_t> on_circle_indices;
  std::optional<std::pair<std::size_t, std::size_t>> double_root_pair;
  /// min |zeta| - 1 over the roots off the unit circle; +inf if there are none.
  double margin = 0.0;
  /// Smallest pairwise distance between roots; +inf for fewer than two.
  double min_separation = 0.0;
};

/// All zeros of Q, sorted, classified against the unit circle. Throws
/// CircleClassificationAmbiguous unless exactly two roots lie within
/// kCircleTol of the circle and match e^{-+i theta} within tol.
QSpectrum solve_q(const FamilyParams& params, double theta, double tol = 1e-8);

struct RDetail {
  double value = 0.0;
  /// Imaginary part of the summed non-trivial terms, before it is dropped.
  double imag_residue = 0.0;
  /// Magnitude scale of the summed terms, for relative checks.
  double scale = 0.0;
  /// Contribution of the pair e^{-+i theta}.
  double trivial_part = 0.0;
  bool removable_used = false;
};

/// R_m(theta) with diagnostics. Throws NoConvergence if the imaginary residue
/// exceeds 1e-8 of the term scale.
RDetail eval_R_detailed(const FamilyParams& params, double theta, int m);
double eval_R(const FamilyParams& params, double theta, int m);

/// Closed form of R_m for max{n, r} = 3, using only the real root
/// zeta_2 = -Q(0)/lead(Q). Independent of the root finder. Throws WrongDegree.
double eval_R_cubic(const FamilyParams& params, double theta, int m);

/// Zeros of R_m bracketed by sign changes on the grid theta_h = h pi/(m+r),
/// h = 1..floor(m/r), plus the probe pi/r - 1e-9, each refined by bisection
/// to width 1e-12. Sorted ascending.
std::vector<double> find_R_roots(const FamilyParams& params, int m);

}  // namespace hyperzero
