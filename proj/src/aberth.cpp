#include "hyperzero/aberth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "hyperzero/error.hpp"

namespace hyperzero {

void horner_with_derivative(std::span<const double> coeffs, cplx z, cplx& value, cplx& deriv) {
  value = 0.0;
  deriv = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    deriv = deriv * z + value;
    value = value * z + *it;
  }
}

cplx horner(std::span<const double> coeffs, cplx z) {
  cplx v = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * z + *it;
  return v;
}

cplx horner(std::span<const cplx> coeffs, cplx z) {
  cplx v = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * z + *it;
  return v;
}

namespace {

double abs_horner(std::span<const double> coeffs, double x) {
  double v = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + std::abs(*it);
  return v;
}

PolyEvaluator horner_evaluator(std::span<const double> coeffs) {
  return [coeffs](cplx z, cplx& value, cplx& deriv, double& noise) {
    horner_with_derivative(coeffs, z, value, deriv);
    const double deg = static_cast<double>(coeffs.size() - 1);
    noise = 32.0 * deg * std::numeric_limits<double>::epsilon() * abs_horner(coeffs, std::abs(z));
  };
}

std::vector<cplx> circle_start(std::size_t count, double radius, std::size_t offset) {
  std::vector<cplx> out;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double angle = step * static_cast<double>(k + offset) + 0.4;
    out.push_back(std::polar(radius, angle));
  }
  return out;
}

// Starting points on circles whose radii come from the upper convex hull of
// (k, log|a_k|), so clusters of very large or very small roots get their own
// circle.
std::vector<cplx> newton_polygon_start(std::span<const double> coeffs) {
  std::vector<int> hull;
  std::vector<double> logs(coeffs.size(), -std::numeric_limits<double>::infinity());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0.0) logs[k] = std::log(std::abs(coeffs[k]));
  }
  for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) {
    if (!std::isfinite(logs[k])) continue;
    while (hull.size() >= 2) {
      const int a = hull[hull.size() - 2];
      const int b = hull.back();
      // Drop b if it lies on or below the segment a -> k.
      const double cross = (logs[b] - logs[a]) * (k - a) - (logs[k] - logs[a]) * (b - a);
      if (cross <= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(k);
  }
  std::vector<cplx> out;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const int a = hull[i];
    const int b = hull[i + 1];
    const double radius = std::exp((logs[a] - logs[b]) / (b - a));
    const auto ring = circle_start(static_cast<std::size_t>(b - a), radius, i);
    out.insert(out.end(), ring.begin(), ring.end());
  }
  return out;
}

std::optional<std::vector<cplx>> iterate(const PolyEvaluator& eval, std::vector<cplx> z,
                                         const AberthOptions& options) {
  const std::size_t deg = z.size();
  bool converged = false;
  for (int iter = 0; iter < options.max_iterations && !converged; ++iter) {
    double worst = 0.0;
    for (std::size_t i = 0; i < deg; ++i) {
      cplx p, dp;
      double noise;
      eval(z[i], p, dp, noise);
      if (p == 0.0) continue;
      const cplx ratio = p / dp;
      cplx sum = 0.0;
      for (std::size_t j = 0; j < deg; ++j) {
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      }
      const cplx w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return std::nullopt;
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[i])));
    }
    converged = worst < options.tolerance;
  }
  if (!converged) {
    // Multiple roots slow the iteration to a linear crawl that stalls at
    // rounding level; accept when every residual is rounding-sized.
    for (const auto& zi : z) {
      cplx p, dp;
      double noise;
      eval(zi, p, dp, noise);
      if (std::abs(p) > noise) return std::nullopt;
    }
  }
  for (auto& zi : z) {
    for (int s = 0; s < options.polish_steps; ++s) {
      cplx p, dp, p_next, dp_next;
      double noise;
      eval(zi, p, dp, noise);
      if (p == 0.0 || dp == 0.0) break;
      const cplx next = zi - p / dp;
      eval(next, p_next, dp_next, noise);
      if (std::abs(p_next) < std::abs(p)) {
        zi = next;
      } else {
        break;
      }
    }
  }
  return z;
}

}  // namespace

std::vector<cplx> aberth_roots(std::span<const double> coeffs, std::span<const cplx> seeds,
                               const AberthOptions& options) {
  if (coeffs.empty() || coeffs.back() == 0.0) {
    throw Error(ErrorCode::InvalidArgument, "aberth_roots needs a nonzero leading coefficient");
  }
  return aberth_roots(horner_evaluator(coeffs), coeffs, seeds, options);
}

std::vector<cplx> aberth_roots(const PolyEvaluator& eval, std::span<const double> coeffs,
                               std::span<const cplx> seeds, const AberthOptions& options) {
  if (coeffs.empty() || coeffs.back() == 0.0) {
    throw Error(ErrorCode::InvalidArgument, "aberth_roots needs a nonzero leading coefficient");
  }
  const std::size_t deg = coeffs.size() - 1;
  if (deg == 0) return {};
  if (deg == 1) return {cplx(-coeffs[0] / coeffs[1], 0.0)};

  std::vector<cplx> start(seeds.begin(), seeds.begin() + std::min(seeds.size(), deg));
  const auto ring = circle_start(deg - start.size(), options.initial_radius, 0);
  start.insert(start.end(), ring.begin(), ring.end());
  if (auto roots = iterate(eval, start, options)) return *roots;

  if (auto roots = iterate(eval, newton_polygon_start(coeffs), options)) return *roots;
  throw Error(ErrorCode::NoConvergence,
              "Aberth iteration did not converge in " + std::to_string(options.max_iterations) +
                  " iterations (degree " + std::to_string(deg) + ")");
}

}  // namespace hyperzero
