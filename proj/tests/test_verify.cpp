#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "hyperzero/verify.hpp"

using namespace hyperzero;

TEST_CASE("hyperbolicity examples") {
  const auto a = check_hyperbolicity(FamilyParams(2, 1), 2);
  REQUIRE(a.per_m.size() == 3);
  const auto& p2 = a.per_m[2];
  CHECK(p2.degree == 2);
  CHECK(p2.real_roots_in_I == 2);
  CHECK(p2.total_real_roots == 2);
  CHECK(p2.hyperbolic);
  CHECK(p2.containment);
  CHECK(a.per_m[0].degree == 0);
  CHECK(a.per_m[0].hyperbolic);
  CHECK(a.first_all_pass_m == 0);

  const auto b = check_hyperbolicity(FamilyParams(1, 2), 4);
  CHECK(b.per_m[4].real_roots_in_I == 2);
  CHECK(b.per_m[4].containment);
}

TEST_CASE("cubic families pass from m = 0") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {1, 3}, {2, 3}, {3, 3}}) {
    const auto rep = check_hyperbolicity(FamilyParams(n, r), 60);
    CHECK(rep.first_all_pass_m == 0);
  }
}

TEST_CASE("report does not depend on the worker count") {
  const FamilyParams p(4, 3);
  const auto one = check_hyperbolicity(p, 50, 1);
  const auto four = check_hyperbolicity(p, 50, 4);
  REQUIRE(one.per_m.size() == four.per_m.size());
  for (std::size_t i = 0; i < one.per_m.size(); ++i) {
    CHECK(one.per_m[i].real_roots_in_I == four.per_m[i].real_roots_in_I);
    CHECK(one.per_m[i].total_real_roots == four.per_m[i].total_real_roots);
  }
  CHECK(one.first_all_pass_m == four.first_all_pass_m);
}

TEST_CASE("a zero at an end of I fails containment") {
  // z (z - 4) vanishes at both ends of (0, 4).
  const IntervalI interval{BigRat(0), BigRat(4)};
  bool endpoint = false;
  const IntPoly p{BigInt(0), BigInt(-4), BigInt(1)};
  CHECK(count_in_interval(p, interval, &endpoint) == 0);
  CHECK(endpoint);
  const IntPoly inside{BigInt(-2), BigInt(1)};
  CHECK(count_in_interval(inside * p, interval, &endpoint) == 1);
}

TEST_CASE("sign pattern examples") {
  CHECK(check_sign_pattern(FamilyParams(3, 2), 100).matches_prediction);
  CHECK(check_sign_pattern(FamilyParams(4, 3), 200).matches_prediction);
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 2}, {1, 4}, {4, 1}, {3, 4}}) {
    for (int m = 20; m <= 40; ++m) {
      const auto s = check_sign_pattern(FamilyParams(n, r), m);
      CAPTURE(n);
      CAPTURE(r);
      CAPTURE(m);
      CHECK(s.matches_prediction);
      CHECK(s.terminal_sign == s.terminal_sign_coarse);
    }
  }
  const auto single = check_sign_pattern(FamilyParams(3, 2), 2);
  CHECK(single.signs == std::vector<int>{-1});
  CHECK(single.terminal_sign == 1);
  CHECK_THROWS_AS(check_sign_pattern(FamilyParams(3, 2), 1), Error);
}

TEST_CASE("cross check examples") {
  const auto a = cross_check_roots(FamilyParams(3, 1), 10, 1e-6);
  CHECK(a.pass);
  CHECK(a.theta_roots == 10);
  CHECK(a.sturm_roots == 10);
  CHECK(a.max_residual < 1e-6);

  const auto b = cross_check_roots(FamilyParams(2, 2), 7, 1e-6);
  CHECK(b.pass);
  CHECK(b.theta_roots == 3);
  CHECK(b.sturm_roots == 3);

  const auto c = cross_check_roots(FamilyParams(2, 3), 2, 1e-6);
  CHECK(c.pass);
  CHECK(c.theta_roots == 0);
  CHECK(c.sturm_roots == 0);

  for (std::size_t i = 1; i < a.z_roots.size(); ++i) CHECK(a.z_roots[i - 1] < a.z_roots[i]);
}

TEST_CASE("CountMismatch carries both counts") {
  const CountMismatch e(3, 4);
  CHECK(e.theta_roots() == 3);
  CHECK(e.sturm_roots() == 4);
  CHECK(e.code() == ErrorCode::CountMismatch);
}

TEST_CASE("density examples") {
  const FamilyParams p(3, 2);
  CHECK(density_scan(p, 2, 1).coverage_fraction == 1.0);
  CHECK(density_scan(FamilyParams(2, 5), 5, 1).coverage_fraction == 1.0);
  CHECK(density_scan(p, 0, 10).coverage_fraction == 0.0);
  CHECK_THROWS_AS(density_scan(p, 10, 0), Error);

  const auto profile = density_profile(p, {10, 20, 40, 80}, 30);
  REQUIRE(profile.size() == 4);
  for (std::size_t i = 1; i < profile.size(); ++i) {
    CHECK(profile[i].covered >= profile[i - 1].covered);
  }
  for (const auto& d : profile) {
    CHECK(d.covered <= 30);
    CHECK(d.coverage_fraction == static_cast<double>(d.covered) / 30);
  }
  // Coarser bins never lose coverage.
  CHECK(density_scan(p, 40, 10).coverage_fraction >= density_scan(p, 40, 30).coverage_fraction);
  CHECK(density_scan(p, 40, 30).covered == profile[2].covered);
}

TEST_CASE("expsum examples") {
  CHECK(expsum_sign(5, 1) == -1);
  CHECK(expsum_sign(5, 2) == 1);
  CHECK(expsum_sign(85, 1) == -1);
  CHECK(expsum_sign(2, 3) == -1);
  CHECK(expsum_sign(2, 4) == 1);
  CHECK_THROWS_AS(expsum_sign(1, 1), Error);
  CHECK_THROWS_AS(expsum_sign(4, 0), Error);
}

TEST_CASE("expsum leading pair") {
  // The k = 0, 1 terms sum to 2 (-1)^h cos(pi/n); the rest decay with h.
  for (int n : {3, 7, 30}) {
    for (int h : {1, 2, 5}) {
      const double pi = std::numbers::pi;
      const double f = h * pi / std::sin(pi / n);
      std::complex<double> pair = 0.0;
      for (int k = 0; k < 2; ++k) {
        const auto w = std::polar(1.0, (2.0 * k - 1.0) * pi / n);
        pair += w * std::exp(-(std::cos(pi / n) - w) * f);
      }
      CHECK(pair.real() == doctest::Approx(2.0 * (h % 2 ? -1 : 1) * std::cos(pi / n)));
      CHECK(std::abs(pair.imag()) < 1e-12);
      CHECK(expsum_sign(n, h) == (h % 2 ? -1 : 1));
    }
  }
}
