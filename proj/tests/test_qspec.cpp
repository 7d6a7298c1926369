#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hyperzero/curve.hpp"
#include "hyperzero/qspec.hpp"

using namespace hyperzero;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<std::pair<int, int>> kCubic = {{3, 1}, {3, 2}, {1, 3}, {2, 3}};

// R_m as minus the residue at 0 of 1 / (zeta^{m+1} Q(zeta)), i.e. minus the
// m-th Taylor coefficient of 1/Q. Uses no roots at all.
long double r_by_series(const std::vector<double>& qc, int m) {
  std::vector<long double> a;
  for (int k = 0; k <= m; ++k) {
    long double acc = (k == 0) ? 1.0L : 0.0L;
    for (int i = 1; i <= k && i < static_cast<int>(qc.size()); ++i) acc -= qc[i] * a[k - i];
    a.push_back(acc / qc[0]);
  }
  return -a[m];
}

std::complex<double> horner_c(const std::vector<double>& c, std::complex<double> z) {
  std::complex<double> v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
  return v;
}

std::vector<double> deriv(const std::vector<double>& c) {
  std::vector<double> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(k * c[k]);
  return d;
}

double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

}  // namespace

TEST_CASE("build_q examples") {
  const auto a = build_q(FamilyParams(2, 2), kPi / 4);
  REQUIRE(a.size() == 3);
  CHECK(a[0] == Approx(2.0));
  CHECK(a[1] == Approx(-2.0 * std::sqrt(2.0)));
  CHECK(a[2] == Approx(2.0));

  const auto b = build_q(FamilyParams(1, 3), kPi / 6);
  REQUIRE(b.size() == 4);
  CHECK(b[0] == Approx(std::sqrt(3.0)));
  CHECK(b[1] == Approx(-2.0));
  CHECK(std::abs(b[2]) < 1e-14);
  CHECK(b[3] == Approx(1.0));

  std::mt19937_64 rng(2);
  for (int n = 2; n <= 6; ++n) {
    for (int r = 2; r <= 6; ++r) {
      std::uniform_real_distribution<double> pick(1e-3, kPi / r - 1e-3);
      for (int k = 0; k < 5; ++k) {
        const auto qc = build_q(FamilyParams(n, r), pick(rng));
        CHECK(qc.size() == static_cast<std::size_t>(std::max(n, r)) + 1);
        CHECK(qc[0] > 0.0);
      }
    }
  }
  CHECK_THROWS_AS(build_q(FamilyParams(2, 2), kPi / 2), Error);
}

TEST_CASE("solve_q examples") {
  const auto s = solve_q(FamilyParams(2, 2), kPi / 4);
  REQUIRE(s.roots.size() == 2);
  CHECK(std::abs(s.roots[0] - std::polar(1.0, -kPi / 4)) < 1e-12);
  CHECK(std::abs(s.roots[1] - std::polar(1.0, kPi / 4)) < 1e-12);
  CHECK(s.on_circle_indices == std::vector<std::size_t>{0, 1});
  CHECK(std::isinf(s.margin));
  CHECK_FALSE(s.double_root_pair.has_value());
}

TEST_CASE("spectrum properties on random parameters") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> pick(1, 8);
  int done = 0;
  while (done < 300) {
    const int n = pick(rng);
    const int r = pick(rng);
    if (std::max(n, r) < 2) continue;
    const FamilyParams p(n, r);
    std::uniform_real_distribution<double> pick_t(0.0, kPi / r);
    const double th = pick_t(rng);
    if (th <= 0.0) continue;
    ++done;
    const auto s = solve_q(p, th);
    const auto qc = build_q(p, th);
    CAPTURE(n);
    CAPTURE(r);
    CAPTURE(th);
    REQUIRE(s.roots.size() == qc.size() - 1);

    // The trivial pair comes first.
    CHECK(std::abs(s.roots[0] - std::polar(1.0, -th)) < 1e-8);
    CHECK(std::abs(s.roots[1] - std::polar(1.0, th)) < 1e-8);
    CHECK(s.margin > 0.0);
    for (std::size_t i = 1; i < s.roots.size(); ++i) {
      CHECK(std::abs(s.roots[i]) >= std::abs(s.roots[i - 1]) * (1 - 1e-12));
    }

    // Conjugate closure.
    for (const auto& z : s.roots) {
      double best = 1e300;
      for (const auto& w : s.roots) best = std::min(best, std::abs(std::conj(z) - w));
      CHECK(best <= 1e-8 * std::max(1.0, std::abs(z)));
    }

    // Expanding lead * prod (zeta - zeta_k) gives back the coefficients.
    std::vector<std::complex<double>> expanded{1.0};
    for (const auto& z : s.roots) {
      std::vector<std::complex<double>> next(expanded.size() + 1, 0.0);
      for (std::size_t k = 0; k < expanded.size(); ++k) {
        next[k + 1] += expanded[k];
        next[k] -= z * expanded[k];
      }
      expanded = next;
    }
    double big = 0.0;
    for (double c : qc) big = std::max(big, std::abs(c));
    for (std::size_t k = 0; k < qc.size(); ++k) {
      CHECK(std::abs(qc.back() * expanded[k] - qc[k]) <= 1e-8 * big);
    }
  }
}

TEST_CASE("derivative identities") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 6; ++n) {
    for (int r = 1; r <= 6; ++r) {
      if (std::max(n, r) < 2) continue;
      const FamilyParams p(n, r);
      for (int k = 1; k < 8; ++k) {
        const double th = (kPi / r) * k / 8.0;
        const auto qc = build_q(p, th);
        const auto dq = deriv(qc);
        const auto sample = z_of_theta(p, th);
        const auto e = std::polar(1.0, th);
        const double mod2 = std::norm(horner_c(dq, e));
        CHECK(mod2 == Approx(sample.a_val * sample.a_val + sample.b_val * sample.b_val).epsilon(1e-9));

        const auto t = theta_trig(p, th);
        for (const auto& z : solve_q(p, th).roots) {
          const auto shortcut = std::pow(z, r - 1) *
                                (static_cast<double>(n) * z * t.sin_phi /
                                     (t.sin_phi_minus_theta - z * t.sin_phi) +
                                 static_cast<double>(r));
          const auto direct = horner_c(dq, z);
          CHECK(std::abs(shortcut - direct) <= 1e-7 * std::max(1.0, std::abs(direct)));
        }
      }
    }
  }
}

TEST_CASE("eval_R for quadratic Q is the trivial-pair term") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {1, 2}, {2, 2}}) {
    const FamilyParams p(n, r);
    for (int m : {0, 1, 7, 40}) {
      for (int k = 1; k < 20; ++k) {
        const double th = (kPi / r) * k / 20.0;
        const auto s = z_of_theta(p, th);
        const double ang = (m + r) * th;
        const double expected = 2.0 * (s.a_val * std::cos(ang) - s.b_val * std::sin(ang)) /
                                (s.a_val * s.a_val + s.b_val * s.b_val);
        CHECK(eval_R(p, th, m) == Approx(expected).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("eval_R matches the residue at zero") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{
           {3, 1}, {3, 2}, {4, 3}, {2, 5}, {5, 2}, {4, 4}, {1, 4}, {6, 2}}) {
    const FamilyParams p(n, r);
    for (int m : {0, 1, 4, 13, 30}) {
      for (int k = 2; k < 10; ++k) {
        const double th = (kPi / r) * k / 11.0;
        const double series = static_cast<double>(r_by_series(build_q(p, th), m));
        const double value = eval_R(p, th, m);
        CAPTURE(n);
        CAPTURE(r);
        CAPTURE(m);
        CAPTURE(th);
        CHECK(std::abs(value - series) <= 1e-8 * std::max(1.0, std::abs(series)));
      }
    }
  }
}

TEST_CASE("eval_R keeps a negligible imaginary part") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{4, 3}, {5, 2}, {2, 6}, {7, 5}}) {
    const FamilyParams p(n, r);
    for (int k = 1; k < 40; ++k) {
      const auto d = eval_R_detailed(p, (kPi / r) * k / 40.0, 60);
      CHECK(std::abs(d.imag_residue) < 1e-8 * d.scale);
    }
  }
}

TEST_CASE("eval_R agrees with the cubic closed form") {
  for (auto [n, r] : kCubic) {
    const FamilyParams p(n, r);
    const double lo = 1e-4;
    const double hi = kPi / r - 1e-4;
    for (int m : {0, 2, 11, 40, 90}) {
      for (int k = 0; k < 100; ++k) {
        const double th = lo + (hi - lo) * k / 99.0;
        CAPTURE(n);
        CAPTURE(r);
        CAPTURE(m);
        CAPTURE(th);
        CHECK(rel(eval_R(p, th, m), eval_R_cubic(p, th, m)) < 1e-8);
      }
    }
  }
  CHECK_THROWS_AS(eval_R_cubic(FamilyParams(4, 3), 0.3, 5), Error);
}

TEST_CASE("cubic closed form at m = 0") {
  // The bracket at m = 0 is 2 cos(th) - z2 - 1/z2 = -(z2^2 - 2 z2 cos th + 1)/z2,
  // so R_0 = 1 / (lead * z2).
  for (auto [n, r] : kCubic) {
    const FamilyParams p(n, r);
    for (double th : {0.1, 0.3, 0.5}) {
      const auto qc = build_q(p, th);
      const double z2 = -qc[0] / qc[3];
      CHECK(eval_R_cubic(p, th, 0) == Approx(1.0 / (qc[3] * z2)).epsilon(1e-12));
    }
  }
}

TEST_CASE("signs on the theta_h grid") {
  const FamilyParams p(3, 2);
  for (int m : {40, 60}) {
    for (int h = 1; h <= m / 2; ++h) {
      const double th = h * kPi / (m + 2);
      const int expected = h % 2 == 0 ? 1 : -1;
      CHECK((eval_R(p, th, m) > 0 ? 1 : -1) == expected);
      if (m == 40) CHECK((eval_R_cubic(p, th, m) > 0 ? 1 : -1) == expected);
    }
  }
}

TEST_CASE("find_R_roots") {
  const FamilyParams p(3, 2);
  const auto roots = find_R_roots(p, 40);
  CHECK(roots.size() == 20);
  for (std::size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1] < roots[i]);
  CHECK(find_R_roots(p, 1).empty());
  CHECK(find_R_roots(FamilyParams(2, 5), 4).empty());

  const IntPoly pm = generate(p, 40).back();
  for (double th : roots) {
    const double z = z_of_theta(p, th).z;
    double value = 0.0;
    double scale = 0.0;
    for (auto it = pm.coeffs().rbegin(); it != pm.coeffs().rend(); ++it) {
      value = value * z + it->get_d();
      scale = scale * z + std::abs(it->get_d());
    }
    CHECK(std::abs(value) < 1e-6 * scale);
  }
}

TEST_CASE("double root at theta*") {
  const FamilyParams p(4, 3);
  const auto dz = double_zero_theta(p);
  REQUIRE(dz.has_value());
  const auto s = solve_q(p, dz->theta);
  REQUIRE(s.double_root_pair.has_value());
  const auto [a, b] = *s.double_root_pair;
  CHECK(std::abs(s.roots[a] - dz->zeta) < 1e-6);
  CHECK(std::abs(s.roots[b] - dz->zeta) < 1e-6);

  for (int m : {5, 10, 25, 50}) {
    const auto mid = eval_R_detailed(p, dz->theta, m);
    CHECK(mid.removable_used);
    const double left = eval_R(p, dz->theta - 1e-4, m);
    const double right = eval_R(p, dz->theta + 1e-4, m);
    const double slack = 1e-3 * std::abs(mid.value);
    CHECK(mid.value >= std::min(left, right) - slack);
    CHECK(mid.value <= std::max(left, right) + slack);
  }
  // Away from theta* the pair separates.
  CHECK(solve_q(p, dz->theta + 0.05).min_separation > 1e-6);
}

TEST_CASE("n = r odd through the vanishing leading coefficient") {
  const FamilyParams p(3, 3);
  const double th = kPi / 6;
  for (double off : {-1e-3, -1e-6, 0.0, 1e-6, 1e-3}) {
    CHECK(std::isfinite(eval_R(p, th + off, 12)));
  }
  CHECK(eval_R(p, th - 1e-6, 12) == Approx(eval_R(p, th + 1e-6, 12)).epsilon(1e-4));
}
