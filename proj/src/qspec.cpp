#include "hyperzero/qspec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hyperzero/curve.hpp"
#include "quad.hpp"

namespace hyperzero {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTieTol = 1e-12;
constexpr double kImagTol = 1e-8;
const double kLogHuge = std::log(1e300);

// Drops leading coefficients that are rounding noise relative to the rest.
std::vector<double> effective_coeffs(std::vector<double> q) {
  double big = 0.0;
  for (double c : q) big = std::max(big, std::abs(c));
  while (q.size() > 1 && std::abs(q.back()) <= 4.0 * std::numeric_limits<double>::epsilon() * big) {
    q.pop_back();
  }
  return q;
}

// Q kept unexpanded as (c - d zeta)^n + zeta^r. Its monomial expansion has
// coefficients of size theta^{-n} for small theta, where Horner loses most
// digits; the factored form evaluates to full precision.
struct QForm {
  int n;
  int r;
  double c;
  double d;
  std::vector<double> coeffs;  // monomial expansion, leading noise trimmed
  bool degree_dropped;

  cplx derivative(cplx zeta) const {
    const cplx u = c - d * zeta;
    return -static_cast<double>(n) * d * std::pow(u, n - 1) +
           static_cast<double>(r) * std::pow(zeta, r - 1);
  }

  void evaluate(cplx zeta, cplx& value, cplx& deriv, double& noise) const {
    const cplx u = c - d * zeta;
    const cplx un1 = std::pow(u, n - 1);
    const cplx zr1 = std::pow(zeta, r - 1);
    value = un1 * u + zr1 * zeta;
    deriv = -static_cast<double>(n) * d * un1 + static_cast<double>(r) * zr1;
    const double eps = std::numeric_limits<double>::epsilon();
    noise = 16.0 * eps *
            (n * std::abs(un1) * (std::abs(c) + std::abs(d * zeta)) + std::abs(un1 * u) +
             r * std::abs(zr1 * zeta));
  }
};

QForm make_qform(const FamilyParams& params, double theta) {
  const auto t = theta_trig(params, theta);
  QForm f{params.n(), params.r(), t.sin_phi_minus_theta / t.sin_theta, t.sin_phi / t.sin_theta,
          {}, false};
  auto full = build_q(params, theta);
  f.coeffs = effective_coeffs(full);
  f.degree_dropped = f.coeffs.size() < full.size();
  return f;
}

std::vector<cplx> raw_roots(const QForm& f, double theta) {
  const cplx seeds[] = {std::polar(1.0, -theta), std::polar(1.0, theta)};
  // After a degree drop the factored form still has the vanished leading
  // term, so fall back to the trimmed expansion.
  if (f.degree_dropped) return aberth_roots(f.coeffs, seeds);
  const PolyEvaluator eval = [&f](cplx z, cplx& v, cplx& dv, double& noise) {
    f.evaluate(z, v, dv, noise);
  };
  return aberth_roots(eval, f.coeffs, seeds);
}

void sort_roots(std::vector<cplx>& roots) {
  std::sort(roots.begin(), roots.end(),
            [](const cplx& a, const cplx& b) { return std::abs(a) < std::abs(b); });
  // Within runs of equal modulus, order by argument.
  std::size_t start = 0;
  for (std::size_t i = 1; i <= roots.size(); ++i) {
    const bool breaks = i == roots.size() ||
                        std::abs(roots[i]) - std::abs(roots[i - 1]) >
                            kTieTol * std::max(1.0, std::abs(roots[i]));
    if (breaks) {
      std::sort(roots.begin() + static_cast<std::ptrdiff_t>(start),
                roots.begin() + static_cast<std::ptrdiff_t>(i),
                [](const cplx& a, const cplx& b) { return std::arg(a) < std::arg(b); });
      start = i;
    }
  }
}

std::size_t nearest(const std::vector<cplx>& roots, cplx target, std::size_t skip) {
  std::size_t best = roots.size();
  double best_dist = kInf;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i == skip) continue;
    const double dist = std::abs(roots[i] - target);
    if (dist < best_dist) {
      best_dist = dist;
      best = i;
    }
  }
  return best;
}

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

std::vector<double> build_q(const FamilyParams& params, double theta) {
  const auto t = theta_trig(params, theta);
  const int n = params.n();
  const int r = params.r();
  const double c = t.sin_phi_minus_theta / t.sin_theta;
  const double d = t.sin_phi / t.sin_theta;
  std::vector<double> q(static_cast<std::size_t>(std::max(n, r)) + 1, 0.0);
  double binom = 1.0;
  for (int j = 0; j <= n; ++j) {
    q[j] += binom * std::pow(c, n - j) * std::pow(-d, j);
    binom = binom * (n - j) / (j + 1);
  }
  q[r] += 1.0;
  return q;
}

QSpectrum solve_q(const FamilyParams& params, double theta, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
  const auto form = make_qform(params, theta);
  QSpectrum s;
  s.theta = theta;
  s.roots = raw_roots(form, theta);
  sort_roots(s.roots);

  for (std::size_t i = 0; i < s.roots.size(); ++i) {
    if (std::abs(std::abs(s.roots[i]) - 1.0) < kCircleTol) s.on_circle_indices.push_back(i);
  }
  if (s.on_circle_indices.size() != 2) {
    throw Error(ErrorCode::CircleClassificationAmbiguous,
                std::to_string(s.on_circle_indices.size()) +
                    " roots within circle_tol of the unit circle at theta = " +
                    std::to_string(theta));
  }
  const cplx lower = s.roots[s.on_circle_indices[0]];
  const cplx upper = s.roots[s.on_circle_indices[1]];
  const bool matches = (std::abs(lower - std::polar(1.0, -theta)) < tol &&
                        std::abs(upper - std::polar(1.0, theta)) < tol) ||
                       (std::abs(lower - std::polar(1.0, theta)) < tol &&
                        std::abs(upper - std::polar(1.0, -theta)) < tol);
  if (!matches) {
    throw Error(ErrorCode::CircleClassificationAmbiguous,
                "unit-circle roots do not match e^{-+i theta} at theta = " + std::to_string(theta));
  }

  s.margin = kInf;
  for (std::size_t i = 0; i < s.roots.size(); ++i) {
    if (i == s.on_circle_indices[0] || i == s.on_circle_indices[1]) continue;
    s.margin = std::min(s.margin, std::abs(s.roots[i]) - 1.0);
  }
  s.min_separation = kInf;
  for (std::size_t i = 0; i < s.roots.size(); ++i) {
    for (std::size_t j = i + 1; j < s.roots.size(); ++j) {
      const double dist = std::abs(s.roots[i] - s.roots[j]);
      if (dist < s.min_separation) {
        s.min_separation = dist;
        if (dist < kPairTol) s.double_root_pair = std::make_pair(i, j);
      }
    }
  }
  return s;
}

RDetail eval_R_detailed(const FamilyParams& params, double theta, int m) {
  using detail::cquad;
  using detail::quad;
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "m must be >= 0");
  const auto form = make_qform(params, theta);
  const auto found = raw_roots(form, theta);

  // The pair e^{-+i theta}, found by proximity rather than by modulus: near
  // theta = pi/r other roots crowd the unit circle.
  const std::size_t a = nearest(found, std::polar(1.0, -theta), found.size());
  const std::size_t b = nearest(found, std::polar(1.0, theta), a);

  std::vector<std::size_t> extras;
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (i != a && i != b) extras.push_back(i);
  }
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  double closest = kPairTol;
  for (std::size_t x = 0; x < extras.size(); ++x) {
    for (std::size_t y = x + 1; y < extras.size(); ++y) {
      const double dist = std::abs(found[extras[x]] - found[extras[y]]);
      if (dist < closest) {
        closest = dist;
        pair = std::make_pair(extras[x], extras[y]);
      }
    }
  }
  const auto in_pair = [&pair](std::size_t i) {
    return pair && (i == pair->first || i == pair->second);
  };

  // R_m vanishes like (pi/r - theta)^2 at the right end while its terms stay
  // O(1), so the sum is carried out in quad precision.
  const int n = params.n();
  const int r = params.r();
  const auto t = detail::quad_trig(params, theta);
  const quad c = t.sin_pmt / t.sin_theta;
  const quad d = t.sin_phi / t.sin_theta;
  const auto q_value = [&](cquad z) {
    const cquad u{c - d * z.re, -d * z.im};
    return detail::ipow(u, n) + detail::ipow(z, r);
  };
  const auto q_deriv = [&](cquad z) {
    const cquad u{c - d * z.re, -d * z.im};
    return quad(-n) * d * detail::ipow(u, n - 1) + quad(r) * detail::ipow(z, r - 1);
  };
  quad lead = 1;
  if (form.degree_dropped) {
    lead = form.coeffs.back();
  } else if (n >= r) {
    lead = powq(-d, n) + (n == r ? 1 : 0);
  }

  std::vector<cquad> roots(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    roots[i] = {found[i].real(), found[i].imag()};
    if (i == a || i == b || in_pair(i)) continue;
    for (int step = 0; step < 3; ++step) {
      const cquad dq = q_deriv(roots[i]);
      if (dq.re == 0 && dq.im == 0) break;
      roots[i] = roots[i] - q_value(roots[i]) / dq;
    }
  }
  roots[a] = {t.cos_theta, -t.sin_theta};
  roots[b] = {t.cos_theta, t.sin_theta};

  const auto inverse_power_q = [m](cquad z) -> cquad {
    const quad logmod = logq(detail::abs(z));
    if ((m + 1) * logmod > kLogHuge) return {0, 0};
    const quad mag = expq(-(m + 1) * logmod);
    const quad ang = -(m + 1) * atan2q(z.im, z.re);
    return {mag * cosq(ang), mag * sinq(ang)};
  };

  RDetail out;
  const quad ratio = d;
  const quad big_a = -n * ratio * t.cos_pmt + r;
  const quad big_b = n * ratio * t.sin_pmt;
  const quad k = static_cast<quad>(m + r) * static_cast<quad>(theta);
  const quad trivial = 2 * (big_a * cosq(k) - big_b * sinq(k)) / (big_a * big_a + big_b * big_b);

  cquad sum{0, 0};
  quad scale = fabsq(trivial);
  for (std::size_t i : extras) {
    if (in_pair(i)) continue;
    const cquad inv = inverse_power_q(roots[i]);
    if (inv.re == 0 && inv.im == 0) continue;
    const cquad term = inv / q_deriv(roots[i]);
    sum = sum + term;
    scale += detail::abs(term);
  }
  if (pair) {
    // The two terms of a near-double root combine into a divided difference
    // of g(zeta) = zeta^{-(m+1)} / prod_{l != pair} (zeta - zeta_l); take its
    // limit g'(mid) / lead.
    const cquad mid = quad(0.5) * (roots[pair->first] + roots[pair->second]);
    cquad prod{1, 0};
    cquad log_deriv = cquad{quad(-(m + 1)), 0} / mid;
    for (std::size_t l = 0; l < roots.size(); ++l) {
      if (in_pair(l)) continue;
      prod = prod * (mid - roots[l]);
      log_deriv = log_deriv - cquad{1, 0} / (mid - roots[l]);
    }
    const cquad term = inverse_power_q(mid) / prod * log_deriv / cquad{lead, 0};
    sum = sum + term;
    scale += detail::abs(term);
    out.removable_used = true;
  }

  out.trivial_part = static_cast<double>(trivial);
  out.imag_residue = static_cast<double>(sum.im);
  out.scale = static_cast<double>(scale);
  out.value = static_cast<double>(trivial + sum.re);
  if (fabsq(sum.im) > kImagTol * scale) {
    throw Error(ErrorCode::NoConvergence, "R_m has imaginary residue " +
                                              std::to_string(out.imag_residue) + " at theta = " +
                                              std::to_string(theta));
  }
  return out;
}

double eval_R(const FamilyParams& params, double theta, int m) {
  return eval_R_detailed(params, theta, m).value;
}

double eval_R_cubic(const FamilyParams& params, double theta, int m) {
  if (params.degree_in_t() != 3) {
    throw Error(ErrorCode::WrongDegree, "eval_R_cubic needs max{n, r} = 3");
  }
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "m must be >= 0");
  const auto q = build_q(params, theta);
  const double lead = q[3];
  // zeta_0 zeta_1 = 1, so Vieta gives the third root directly.
  const double z2 = -q[0] / lead;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double k = static_cast<double>(m + 1) * theta;
  const double bracket = (c - z2) * std::sin(k) / s + std::cos(k) - std::pow(z2, -(m + 1));
  return -bracket / (lead * (z2 * z2 - 2.0 * z2 * c + 1.0));
}

std::vector<double> find_R_roots(const FamilyParams& params, int m) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "m must be >= 0");
  const int r = params.r();
  const int count = m / r;
  std::vector<double> roots;
  if (count == 0) return roots;

  std::vector<double> grid;
  for (int h = 1; h <= count; ++h) grid.push_back(h * std::numbers::pi / (m + r));
  grid.push_back(std::numbers::pi / r - 1e-9);
  std::vector<double> values;
  for (double th : grid) values.push_back(eval_R(params, th, m));

  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i] == 0.0) {
      roots.push_back(grid[i]);
      continue;
    }
    if (i + 1 == grid.size() || values[i + 1] == 0.0) continue;
    if (sign_of(values[i]) == sign_of(values[i + 1])) continue;
    double lo = grid[i];
    double hi = grid[i + 1];
    const int lo_sign = sign_of(values[i]);
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      const double fm = eval_R(params, mid, m);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if (sign_of(fm) == lo_sign) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }
  return roots;
}

}  // namespace hyperzero
