#include "hyperzero/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <numbers>
#include <thread>

#include "hyperzero/qspec.hpp"

namespace hyperzero {

namespace {

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

// Finite upper end of the search range: the interval's own end, or the
// Cauchy bound when it is infinite.
BigRat upper_end(const IntPoly& p, const IntervalI& interval) {
  if (interval.hi) return *interval.hi;
  return cauchy_bound(to_rat(p));
}

// Half-width of a neighbourhood of the root x that holds no other root.
BigRat isolating_radius(const SturmChain& chain, const BigRat& x) {
  BigRat delta(1, 1024);
  for (;;) {
    const BigRat a = x - delta;
    const BigRat b = x + delta;
    if (chain.sign_of_base(a) != 0 && chain.sign_of_base(b) != 0 && chain.count(a, b) == 1) {
      return delta;
    }
    delta /= 2;
  }
}

// Roots in the open interval (lo, hi), tolerating roots at either end.
std::size_t count_open(const SturmChain& chain, BigRat lo, BigRat hi, bool* endpoint_root) {
  std::size_t excess = 0;
  if (chain.sign_of_base(lo) == 0) {
    if (endpoint_root) *endpoint_root = true;
    lo -= isolating_radius(chain, lo);
    ++excess;
  }
  if (chain.sign_of_base(hi) == 0) {
    if (endpoint_root) *endpoint_root = true;
    hi += isolating_radius(chain, hi);
    ++excess;
  }
  return chain.count(lo, hi) - excess;
}

PerMResult check_one(const IntPoly& p, int m, const IntervalI& interval) {
  PerMResult res;
  res.m = m;
  res.degree = p.degree();
  if (p.degree() <= 0) {
    res.hyperbolic = true;
    res.containment = true;
    return res;
  }
  const SturmChain chain(p);
  const BigRat bound = cauchy_bound(to_rat(p));
  res.total_real_roots = chain.count(-bound, bound);

  const BigRat hi = upper_end(p, interval);
  if (interval.lo < hi) {
    res.real_roots_in_I = count_open(chain, interval.lo, hi, &res.endpoint_root);
  }
  res.hyperbolic = res.real_roots_in_I == static_cast<std::size_t>(res.degree);
  res.containment = !res.endpoint_root && res.real_roots_in_I == res.total_real_roots;
  return res;
}

int bin_of(double theta, double width, int bins) {
  const int b = static_cast<int>(std::floor(theta / width));
  return std::clamp(b, 0, bins - 1);
}

}  // namespace

std::size_t count_in_interval(const IntPoly& p, const IntervalI& interval, bool* endpoint_root) {
  if (endpoint_root) *endpoint_root = false;
  if (p.degree() <= 0) return 0;
  const SturmChain chain(p);
  const BigRat hi = upper_end(p, interval);
  if (!(interval.lo < hi)) return 0;
  return count_open(chain, interval.lo, hi, endpoint_root);
}

VerifyReport check_hyperbolicity(const FamilyParams& params, int m_max, int jobs, int m_lo) {
  if (m_max < 0 || m_lo < 0 || m_lo > m_max) {
    throw Error(ErrorCode::InvalidArgument, "need 0 <= m_lo <= m_max");
  }
  if (jobs < 1) throw Error(ErrorCode::InvalidArgument, "jobs must be >= 1");
  const auto polys = generate(params, m_max);
  const auto interval = interval_I(params);

  VerifyReport report;
  report.params = params;
  report.m_lo = m_lo;
  report.m_hi = m_max;
  report.per_m.resize(static_cast<std::size_t>(m_max - m_lo + 1));

  std::atomic<int> next{m_lo};
  const auto worker = [&] {
    for (int m = next++; m <= m_max; m = next++) {
      report.per_m[static_cast<std::size_t>(m - m_lo)] = check_one(polys[m], m, interval);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  for (auto it = report.per_m.rbegin(); it != report.per_m.rend(); ++it) {
    if (!(it->hyperbolic && it->containment)) break;
    report.first_all_pass_m = it->m;
  }
  if (!interval.hi) {
    report.notes.push_back("upper end of I is infinite; each P_m uses its Cauchy bound");
  }
  for (const auto& rec : report.per_m) {
    if (rec.degree != rec.m / params.r()) {
      report.notes.push_back("deg P_" + std::to_string(rec.m) + " = " +
                             std::to_string(rec.degree) + " differs from floor(m/r)");
    }
    if (rec.endpoint_root) {
      report.notes.push_back("P_" + std::to_string(rec.m) + " vanishes at an end of I");
    }
  }
  return report;
}

SignPattern check_sign_pattern(const FamilyParams& params, int m) {
  const int r = params.r();
  if (m < r) throw Error(ErrorCode::InvalidArgument, "check_sign_pattern needs m >= r");
  SignPattern out;
  out.m = m;
  const int count = m / r;
  bool ok = true;
  for (int h = 1; h <= count; ++h) {
    const int s = sign_of(eval_R(params, h * std::numbers::pi / (m + r), m));
    out.signs.push_back(s);
    ok = ok && s == (h % 2 == 0 ? 1 : -1);
  }
  out.terminal_sign = sign_of(eval_R(params, std::numbers::pi / r - 1e-9, m));
  out.terminal_sign_coarse = sign_of(eval_R(params, std::numbers::pi / r - 1e-7, m));
  out.matches_prediction = ok && out.terminal_sign == ((count + 1) % 2 == 0 ? 1 : -1);
  return out;
}

CrossCheckResult cross_check_roots(const FamilyParams& params, int m, double tol) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "m must be >= 0");
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
  CrossCheckResult out;
  out.m = m;
  const auto thetas = find_R_roots(params, m);
  const IntPoly p = generate(params, m).back();
  const auto interval = interval_I(params);
  out.theta_roots = thetas.size();

  bool endpoint_root = false;
  out.sturm_roots = count_in_interval(p, interval, &endpoint_root);
  if (out.theta_roots != out.sturm_roots) throw CountMismatch(out.theta_roots, out.sturm_roots);
  for (double th : thetas) out.z_roots.push_back(z_of_theta(params, th).z);
  std::sort(out.z_roots.begin(), out.z_roots.end());
  if (thetas.empty()) {
    out.bijection = true;
    out.pass = !endpoint_root;
    return out;
  }
  if (endpoint_root) return out;

  const auto isolated =
      isolate_roots(SturmChain(p), interval.lo, upper_end(p, interval), rat_from_double(tol / 8));
  std::vector<bool> used(isolated.size(), false);
  bool bijection = true;
  const BigInt big = max_abs_coeff(p);
  for (double z : out.z_roots) {
    const double widen = tol * std::max(1.0, std::abs(z));
    bool placed = false;
    for (std::size_t i = 0; i < isolated.size(); ++i) {
      if (used[i]) continue;
      if (isolated[i].lo.get_d() - widen <= z && z <= isolated[i].hi.get_d() + widen) {
        used[i] = true;
        placed = true;
        break;
      }
    }
    bijection = bijection && placed;

    // Exact residual at the double z, so only the error in z shows up.
    const BigRat zq = rat_from_double(z);
    const BigRat value = abs(poly_eval(p, zq));
    BigRat scale = 0;
    BigRat power = 1;
    const BigRat az = abs(zq);
    for (const auto& c : p.coeffs()) {
      scale += abs(c) * power;
      power *= az;
    }
    out.max_residual = std::max(out.max_residual, BigRat(value / scale).get_d());
    out.max_residual_by_largest_coeff =
        std::max(out.max_residual_by_largest_coeff, BigRat(value / big).get_d());
  }
  out.bijection = bijection;
  out.pass = bijection;
  return out;
}

std::vector<DensityReport> density_profile(const FamilyParams& params,
                                           std::vector<int> checkpoints, int bins) {
  if (bins < 1) throw Error(ErrorCode::InvalidArgument, "bins must be >= 1");
  std::sort(checkpoints.begin(), checkpoints.end());
  for (int c : checkpoints) {
    if (c < 0) throw Error(ErrorCode::InvalidArgument, "m_max must be >= 0");
  }
  const int r = params.r();
  const double end = std::numbers::pi / r;
  const double width = end / bins;
  std::vector<bool> covered(static_cast<std::size_t>(bins), false);
  std::size_t n_covered = 0;
  const auto mark = [&](int b) {
    if (!covered[b]) {
      covered[b] = true;
      ++n_covered;
    }
  };
  const auto all_covered = [&](int first, int last) {
    for (int b = first; b <= last; ++b) {
      if (!covered[b]) return false;
    }
    return true;
  };

  std::vector<DensityReport> out;
  std::size_t next_cp = 0;
  const int m_top = checkpoints.empty() ? -1 : checkpoints.back();
  for (int m = 0; m <= m_top; ++m) {
    const int count = m / r;
    if (count > 0 && n_covered < covered.size()) {
      std::vector<double> grid;
      for (int h = 1; h <= count; ++h) grid.push_back(h * std::numbers::pi / (m + r));
      grid.push_back(end - 1e-9);
      std::vector<double> values;
      for (double th : grid) values.push_back(eval_R(params, th, m));
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (values[i] == 0.0) {
          mark(bin_of(grid[i], width, bins));
          continue;
        }
        if (i + 1 == grid.size() || sign_of(values[i]) * sign_of(values[i + 1]) >= 0) continue;
        // Move the bracket onto bin edges until it sits inside one bin.
        double lo = grid[i];
        double hi = grid[i + 1];
        int bl = bin_of(lo, width, bins);
        int bh = bin_of(hi, width, bins);
        const int lo_sign = sign_of(values[i]);
        while (bl < bh && !all_covered(bl, bh)) {
          const double edge = (bl + 1) * width;
          if (edge >= hi) {
            bh = bl;
            break;
          }
          const double fe = eval_R(params, edge, m);
          if (fe == 0.0) {
            bl = bh = bl + 1;
          } else if (sign_of(fe) == lo_sign) {
            lo = edge;
            ++bl;
          } else {
            hi = edge;
            bh = bl;
          }
        }
        if (bl == bh) mark(bl);
      }
    }
    while (next_cp < checkpoints.size() && checkpoints[next_cp] == m) {
      out.push_back({bins, m, n_covered, static_cast<double>(n_covered) / bins});
      ++next_cp;
    }
  }
  return out;
}

DensityReport density_scan(const FamilyParams& params, int m_max, int bins) {
  return density_profile(params, {m_max}, bins).front();
}

int expsum_sign(int n, int h) {
  if (n < 2 || h < 1) throw Error(ErrorCode::InvalidArgument, "expsum_sign needs n >= 2, h >= 1");
  if (n == 2) return h % 2 == 0 ? 1 : -1;
  using C = std::complex<double>;
  const double pi = std::numbers::pi;
  const double c = std::cos(pi / n);
  const double factor = h * pi / std::sin(pi / n);
  C sum = 0.0;
  double magnitude = 0.0;
  for (int k = 0; k < n; ++k) {
    const C w = std::polar(1.0, (2.0 * k - 1.0) * pi / n);
    const C term = w * std::exp(-(c - w) * factor);
    sum += term;
    magnitude += std::abs(term);
  }
  if (magnitude < 1e-300) throw Error(ErrorCode::NumericUnderflow, "all expsum terms underflow");
  if (std::abs(sum.imag()) >= 1e-9 * magnitude) {
    throw Error(ErrorCode::NoConvergence, "expsum has imaginary part " + std::to_string(sum.imag()));
  }
  return sign_of(sum.real());
}

}  // namespace hyperzero
