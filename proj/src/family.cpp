#include "hyperzero/family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hyperzero/aberth.hpp"

namespace hyperzero {

FamilyParams::FamilyParams(int n, int r) : n_(n), r_(r) {
  if (n < 1 || r < 1 || std::max(n, r) <= 1) {
    throw Error(ErrorCode::InvalidParams, "need positive n, r with max{n, r} > 1, got n=" +
                                              std::to_string(n) + " r=" + std::to_string(r));
  }
}

namespace {

std::vector<BigInt> binomial_row(int n) {
  std::vector<BigInt> row(n + 1);
  for (int j = 0; j <= n; ++j) {
    mpz_bin_uiui(row[j].get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
  }
  return row;
}

}  // namespace

std::vector<IntPoly> generate(const FamilyParams& params, int m_max) {
  if (m_max < 0) throw Error(ErrorCode::InvalidArgument, "m_max must be >= 0");
  const int n = params.n();
  const int r = params.r();
  const auto binom = binomial_row(n);
  const IntPoly minus_z{BigInt(0), BigInt(-1)};

  std::vector<IntPoly> polys;
  polys.reserve(static_cast<std::size_t>(m_max) + 1);
  polys.push_back(IntPoly{BigInt(1)});
  for (int m = 1; m <= m_max; ++m) {
    // P_m = sum_{j=1}^{min(n,m)} (-1)^(j+1) C(n,j) P_{m-j} - z P_{m-r}
    IntPoly next;
    for (int j = 1; j <= std::min(n, m); ++j) {
      const BigInt c = (j % 2 == 1) ? BigInt(binom[j]) : BigInt(-binom[j]);
      next = next + poly_scale(polys[m - j], c);
    }
    if (m >= r) next = next + poly_mul(minus_z, polys[m - r]);
    polys.push_back(std::move(next));
  }
  return polys;
}

std::vector<RatPoly> generate_general(const GeneralDenominator& den, int m_max) {
  if (m_max < 0) throw Error(ErrorCode::InvalidArgument, "m_max must be >= 0");
  if (den.r < 1) throw Error(ErrorCode::InvalidParams, "r must be positive");
  if (den.qcoeffs.empty() || sgn(den.qcoeffs[0]) == 0) {
    throw Error(ErrorCode::ZeroConstantTerm, "Q(0) must be nonzero");
  }
  const BigRat inv_q0 = 1 / den.qcoeffs[0];
  const RatPoly minus_z{BigRat(0), BigRat(-1)};
  const int qdeg = static_cast<int>(den.qcoeffs.size()) - 1;

  std::vector<RatPoly> polys;
  polys.reserve(static_cast<std::size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) {
    // q0 P_m = [m = 0] - sum_{i>=1} q_i P_{m-i} - z P_{m-r}
    RatPoly acc = (m == 0) ? RatPoly{BigRat(1)} : RatPoly{};
    for (int i = 1; i <= std::min(qdeg, m); ++i) {
      if (sgn(den.qcoeffs[i]) == 0) continue;
      acc = acc - poly_scale(polys[m - i], den.qcoeffs[i]);
    }
    if (m >= den.r) acc = acc + poly_mul(minus_z, polys[m - den.r]);
    polys.push_back(poly_scale(acc, inv_q0));
  }
  return polys;
}

RatPoly denominator_in_t(const FamilyParams& params, const BigRat& z) {
  const auto binom = binomial_row(params.n());
  std::vector<BigRat> c(params.degree_in_t() + 1, BigRat(0));
  for (int j = 0; j <= params.n(); ++j) c[j] = (j % 2 == 0) ? BigRat(binom[j]) : BigRat(-binom[j]);
  c[params.r()] += z;
  return RatPoly(std::move(c));
}

IntPoly recurrence_residual(const FamilyParams& params, const std::vector<IntPoly>& polys, int m) {
  if (m < 1 || m >= static_cast<int>(polys.size())) {
    throw Error(ErrorCode::InvalidArgument, "recurrence index out of range");
  }
  const auto binom = binomial_row(params.n());
  IntPoly acc;
  for (int j = 0; j <= std::min(params.n(), m); ++j) {
    const BigInt c = (j % 2 == 0) ? BigInt(binom[j]) : BigInt(-binom[j]);
    acc = acc + poly_scale(polys[m - j], c);
  }
  if (m >= params.r()) acc = acc + poly_shift(polys[m - params.r()], 1);
  return acc;
}

std::complex<double> eval_denominator(const FamilyParams& params, std::complex<double> t,
                                      double z0) {
  return std::pow(1.0 - t, params.n()) + z0 * std::pow(t, params.r());
}

std::complex<double> eval_series_oracle(const FamilyParams& params, int m, double z0,
                                        double radius, int nodes) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "m must be >= 0");
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
  if (nodes < 4 * (m + 1)) {
    throw Error(ErrorCode::InvalidArgument, "need at least 4(m+1) trapezoid nodes");
  }
  // t_k = radius e^{i a_k}; dt = i t da, so the integral becomes the mean of
  // t^{-m} / D(t) over the nodes.
  std::complex<double> sum = 0.0;
  const double scale = std::pow(radius, -m);
  for (int k = 0; k < nodes; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / nodes;
    const std::complex<double> t = std::polar(radius, angle);
    const std::complex<double> d = eval_denominator(params, t, z0);
    if (std::abs(d) < 1e-12) {
      throw Error(ErrorCode::SingularOnContour,
                  "|D(t, z0)| < 1e-12 at node " + std::to_string(k));
    }
    sum += std::polar(scale, -angle * m) / d;
  }
  return sum / static_cast<double>(nodes);
}

ContourChoice suggested_contour(const FamilyParams& params, int m, double z0) {
  std::vector<double> coeffs(params.degree_in_t() + 1, 0.0);
  for (int j = 0; j <= params.n(); ++j) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), params.n(), j);
    coeffs[j] = (j % 2 == 0 ? 1.0 : -1.0) * b.get_d();
  }
  coeffs[params.r()] += z0;
  while (coeffs.size() > 1 && coeffs.back() == 0.0) coeffs.pop_back();
  double smallest = std::numeric_limits<double>::infinity();
  for (const auto& t : aberth_roots(coeffs)) smallest = std::min(smallest, std::abs(t));
  if (!std::isfinite(smallest)) smallest = 1.0;  // D is constant in t
  return {smallest * std::exp(-1.0 / (m + 1)), 64 * (m + 1)};
}

}  // namespace hyperzero
