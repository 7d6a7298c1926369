#include <cmath>
#include <random>

#include "doctest.h"
#include "hyperzero/family.hpp"

using namespace hyperzero;

namespace {

IntPoly ip(std::initializer_list<long> cs) {
  std::vector<BigInt> v;
  for (long c : cs) v.emplace_back(c);
  return IntPoly(v);
}

BigRat q(long a, long b = 1) {
  BigRat x(a, b);
  x.canonicalize();
  return x;
}

// Taylor coefficients of 1 / D(t, z0) by plain series division, with D
// expanded here by repeated multiplication rather than binomials.
std::vector<BigRat> series_of_reciprocal(const FamilyParams& p, const BigRat& z0, int m_max) {
  RatPoly d{BigRat(1)};
  for (int i = 0; i < p.n(); ++i) d = d * RatPoly{BigRat(1), BigRat(-1)};
  d = d + RatPoly::monomial(z0, static_cast<std::size_t>(p.r()));
  std::vector<BigRat> a;
  for (int m = 0; m <= m_max; ++m) {
    BigRat acc = (m == 0) ? BigRat(1) : BigRat(0);
    for (int i = 1; i <= m; ++i) acc -= d.coeff(i) * a[m - i];
    a.push_back(acc / d.coeff(0));
  }
  return a;
}

const std::vector<std::pair<int, int>> kFamilies = {{2, 1}, {1, 2}, {3, 2}, {2, 3}, {4, 3}, {5, 5}};

}  // namespace

TEST_CASE("params validation") {
  CHECK_THROWS_AS(FamilyParams(1, 1), Error);
  CHECK_THROWS_AS(FamilyParams(0, 3), Error);
  CHECK_THROWS_AS(FamilyParams(2, -1), Error);
  CHECK(FamilyParams(4, 3).degree_in_t() == 4);
  CHECK(FamilyParams(2, 5).degree_in_t() == 5);
}

TEST_CASE("generate examples") {
  const auto a = generate(FamilyParams(2, 1), 2);
  REQUIRE(a.size() == 3);
  CHECK(a[0] == ip({1}));
  CHECK(a[1] == ip({2, -1}));
  CHECK(a[2] == ip({3, -4, 1}));

  const auto b = generate(FamilyParams(1, 2), 4);
  CHECK(b[0] == ip({1}));
  CHECK(b[1] == ip({1}));
  CHECK(b[2] == ip({1, -1}));
  CHECK(b[3] == ip({1, -2}));
  CHECK(b[4] == ip({1, -3, 1}));
  CHECK_THROWS_AS(generate(FamilyParams(2, 1), -1), Error);
}

TEST_CASE("recurrence residual vanishes and degree is floor(m/r)") {
  for (auto [n, r] : kFamilies) {
    const FamilyParams p(n, r);
    const auto polys = generate(p, 60);
    CHECK(polys[0] == ip({1}));
    for (int m = 1; m <= 60; ++m) {
      CHECK(recurrence_residual(p, polys, m).is_zero());
      CHECK(polys[m].degree() == m / r);
    }
  }
}

TEST_CASE("generate agrees with series division at rational points") {
  for (auto [n, r] : kFamilies) {
    const FamilyParams p(n, r);
    const auto polys = generate(p, 30);
    for (const BigRat& z0 : {q(-2), q(1, 3), q(7, 2), q(10)}) {
      const auto series = series_of_reciprocal(p, z0, 30);
      for (int m = 0; m <= 30; ++m) CHECK(poly_eval(polys[m], z0) == series[m]);
    }
  }
}

TEST_CASE("generate_general examples") {
  const auto same = generate_general({{q(1), q(-2), q(1)}, 1}, 12);
  const auto ref = generate(FamilyParams(2, 1), 12);
  for (int m = 0; m <= 12; ++m) CHECK(same[m] == to_rat(ref[m]));

  const auto half = generate_general({{q(2), q(-1)}, 2}, 2);
  CHECK(half[0] == RatPoly{q(1, 2)});
  CHECK(half[1] == RatPoly{q(1, 4)});
  CHECK(half[2] == (RatPoly{q(1, 8), q(-1, 4)}));

  const auto geo = generate_general({{q(1)}, 1}, 6);
  for (int m = 0; m <= 6; ++m) {
    CHECK(geo[m] == RatPoly::monomial(m % 2 == 0 ? q(1) : q(-1), static_cast<std::size_t>(m)));
  }

  try {
    generate_general({{q(0), q(1)}, 1}, 3);
    FAIL("expected ZeroConstantTerm");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroConstantTerm);
  }
}

TEST_CASE("generate_general reproduces every (1 - t)^n family") {
  for (auto [n, r] : kFamilies) {
    RatPoly qpoly{BigRat(1)};
    for (int i = 0; i < n; ++i) qpoly = qpoly * RatPoly{BigRat(1), BigRat(-1)};
    const auto general = generate_general({qpoly.coeffs(), r}, 25);
    const auto exact = generate(FamilyParams(n, r), 25);
    for (int m = 0; m <= 25; ++m) CHECK(general[m] == to_rat(exact[m]));
  }
}

TEST_CASE("denominator_in_t vanishes at series poles") {
  const FamilyParams p(2, 1);
  const RatPoly d = denominator_in_t(p, q(3));
  CHECK(d == (RatPoly{q(1), q(1), q(1)}));
}

TEST_CASE("contour oracle at radius 0.1") {
  const FamilyParams a(2, 1);
  CHECK(std::abs(eval_series_oracle(a, 2, 1.0, 0.1, 12)) < 1e-9);
  CHECK(std::abs(eval_series_oracle(a, 0, 5.0, 0.1, 64) - 1.0) < 1e-9);
  const FamilyParams b(1, 2);
  CHECK(std::abs(eval_series_oracle(b, 4, 0.0, 0.1, 20) - 1.0) < 1e-9);
  CHECK_THROWS_AS(eval_series_oracle(a, 5, 1.0, 0.1, 23), Error);
}

TEST_CASE("contour oracle flags a pole on the contour") {
  // (1 - t)^2 + z t with z = 0 has its double pole at t = 1.
  try {
    eval_series_oracle(FamilyParams(2, 1), 3, 0.0, 1.0, 16);
    FAIL("expected SingularOnContour");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularOnContour);
  }
}

TEST_CASE("suggested contour matches exact values") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick_m(0, 60);
  std::uniform_real_distribution<double> pick_z(-2.0, 10.0);
  for (auto [n, r] : kFamilies) {
    const FamilyParams p(n, r);
    const auto polys = generate(p, 60);
    for (int trial = 0; trial < 20; ++trial) {
      const int m = pick_m(rng);
      const double z0 = pick_z(rng);
      const double exact = poly_eval(polys[m], rat_from_double(z0)).get_d();
      const auto c = suggested_contour(p, m, z0);
      CHECK(c.nodes >= 4 * (m + 1));
      const auto approx = eval_series_oracle(p, m, z0, c.radius, c.nodes);
      CHECK(std::abs(approx.real() - exact) <= 1e-6 * std::max(1.0, std::abs(exact)));
      CHECK(std::abs(approx.imag()) <= 1e-6 * std::max(1.0, std::abs(exact)));
    }
  }
}
