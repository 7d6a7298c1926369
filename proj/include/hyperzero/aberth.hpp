#pragma once

// Simultaneous complex root finding (Aberth-Ehrlich iteration) for
// polynomials with real coefficients, with Newton polishing.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hyperzero {

using cplx = std::complex<double>;

struct AberthOptions {
  int max_iterations = 200;
  /// Converged once every correction is below tolerance * max(1, |z|).
  double tolerance = 1e-13;
  /// Circle for the starting points not covered by seeds.
  double initial_radius = 1.5;
  int polish_steps = 3;
};

/// Value and derivative of the polynomial (ascending coefficients) at z.
void horner_with_derivative(std::span<const double> coeffs, cplx z, cplx& value, cplx& deriv);
cplx horner(std::span<const double> coeffs, cplx z);
cplx horner(std::span<const cplx> coeffs, cplx z);

/// All roots of the polynomial with ascending coefficients `coeffs` (the
/// leading one nonzero). `seeds` replace the first starting points; the rest
/// sit on a circle of radius options.initial_radius. If that start does not
/// converge, a second attempt starts from Newton-polygon radii. Throws
/// NoConvergence when both fail.
std::vector<cplx> aberth_roots(std::span<const double> coeffs, std::span<const cplx> seeds = {},
                               const AberthOptions& options = {});

/// Sets p(z), p'(z) and a bound on the rounding error in p(z).
using PolyEvaluator = std::function<void(cplx z, cplx& value, cplx& deriv, double& noise)>;

/// Same iteration, but p is evaluated through `eval` (for polynomials with a
/// better-conditioned form than their monomial expansion). `coeffs` are the
/// monomial coefficients of the same polynomial; they fix the degree and the
/// fallback starting radii only.
std::vector<cplx> aberth_roots(const PolyEvaluator& eval, std::span<const double> coeffs,
                               std::span<const cplx> seeds = {}, const AberthOptions& options = {});

}  // namespace hyperzero
