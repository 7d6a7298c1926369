#pragma once

// Exact dense univariate polynomials over GMP integers and rationals, with
// Sturm-sequence real-root counting and bisection isolation.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "hyperzero/error.hpp"

namespace hyperzero {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Degree reported for the zero polynomial (stands in for -infinity).
inline constexpr int kZeroPolyDegree = std::numeric_limits<int>::min();

/// Dense polynomial with ascending coefficients. The leading coefficient is
/// nonzero; the zero polynomial has no coefficients at all.
template <typename Coeff>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }
  DensePoly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { normalize(); }

  static DensePoly constant(const Coeff& c) { return DensePoly(std::vector<Coeff>{c}); }
  static DensePoly monomial(const Coeff& c, std::size_t power) {
    std::vector<Coeff> v(power + 1, Coeff(0));
    v[power] = c;
    return DensePoly(std::move(v));
  }

  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept {
    return coeffs_.empty() ? kZeroPolyDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  const Coeff& leading() const { return coeffs_.back(); }

  /// Coefficient of z^k; zero past the degree.
  Coeff coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff(0); }

  bool operator==(const DensePoly& other) const { return coeffs_ == other.coeffs_; }

 private:
  void normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPoly = DensePoly<BigInt>;
using RatPoly = DensePoly<BigRat>;

template <typename C>
DensePoly<C> poly_add(const DensePoly<C>& a, const DensePoly<C>& b) {
  const std::size_t n = std::max(a.size(), b.size());
  std::vector<C> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a.coeff(i) + b.coeff(i);
  return DensePoly<C>(std::move(out));
}

template <typename C>
DensePoly<C> poly_sub(const DensePoly<C>& a, const DensePoly<C>& b) {
  const std::size_t n = std::max(a.size(), b.size());
  std::vector<C> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a.coeff(i) - b.coeff(i);
  return DensePoly<C>(std::move(out));
}

template <typename C>
DensePoly<C> poly_scale(const DensePoly<C>& a, const C& s) {
  if (sgn(s) == 0) return {};
  std::vector<C> out(a.coeffs());
  for (auto& c : out) c *= s;
  return DensePoly<C>(std::move(out));
}

template <typename C>
DensePoly<C> poly_mul(const DensePoly<C>& a, const DensePoly<C>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<C> out(a.size() + b.size() - 1, C(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a.coeffs()[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return DensePoly<C>(std::move(out));
}

/// Multiplies by z^k.
template <typename C>
DensePoly<C> poly_shift(const DensePoly<C>& a, std::size_t k) {
  if (a.is_zero()) return {};
  std::vector<C> out(k, C(0));
  out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
  return DensePoly<C>(std::move(out));
}

template <typename C>
DensePoly<C> poly_derivative(const DensePoly<C>& a) {
  if (a.size() <= 1) return {};
  std::vector<C> out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a.coeffs()[i] * static_cast<unsigned long>(i);
  return DensePoly<C>(std::move(out));
}

template <typename C>
DensePoly<C> operator+(const DensePoly<C>& a, const DensePoly<C>& b) { return poly_add(a, b); }
template <typename C>
DensePoly<C> operator-(const DensePoly<C>& a, const DensePoly<C>& b) { return poly_sub(a, b); }
template <typename C>
DensePoly<C> operator*(const DensePoly<C>& a, const DensePoly<C>& b) { return poly_mul(a, b); }

RatPoly to_rat(const IntPoly& p);

/// Clears denominators and divides out the content; the result is a positive
/// rational multiple of p (so it has the same signs and roots).
IntPoly primitive_part(const RatPoly& p);
IntPoly primitive_part(const IntPoly& p);

BigRat poly_eval(const RatPoly& p, const BigRat& x);
BigRat poly_eval(const IntPoly& p, const BigRat& x);

/// Sign of p(x) computed without forming the rational value.
int sign_at(const IntPoly& p, const BigRat& x);

double poly_eval_double(const IntPoly& p, double x);

/// Largest |coefficient|.
BigInt max_abs_coeff(const IntPoly& p);

/// 1 + max|c_i| / |c_d|: every complex root has modulus strictly below it.
BigRat cauchy_bound(const RatPoly& p);

/// An interval holding exactly one real root of the polynomial it was
/// isolated from. When the root was hit exactly, lo == hi == *exact.
struct IsolatedRoot {
  BigRat lo;
  BigRat hi;
  std::optional<BigRat> exact;
};

/// Sturm chain p, p', -rem(...), ... kept as primitive integer polynomials,
/// each a positive multiple of the true chain element.
class SturmChain {
 public:
  explicit SturmChain(const RatPoly& p);
  explicit SturmChain(const IntPoly& p);

  /// Number of sign changes in the chain at x, zeros skipped.
  int variations(const BigRat& x) const;

  /// Distinct real roots in the open interval (lo, hi). Throws
  /// EndpointIsRoot if either endpoint is a root.
  std::size_t count(const BigRat& lo, const BigRat& hi) const;

  int sign_of_base(const BigRat& x) const { return sign_at(chain_.front(), x); }
  const IntPoly& base() const { return chain_.front(); }
  const std::vector<IntPoly>& chain() const noexcept { return chain_; }

 private:
  void build(IntPoly p);
  std::vector<IntPoly> chain_;
};

std::size_t sturm_count(const RatPoly& p, const BigRat& lo, const BigRat& hi);

std::vector<IsolatedRoot> isolate_roots(const RatPoly& p, const BigRat& lo, const BigRat& hi,
                                        const BigRat& width);
std::vector<IsolatedRoot> isolate_roots(const SturmChain& chain, const BigRat& lo,
                                        const BigRat& hi, const BigRat& width);

/// Exact binary value of a finite double.
BigRat rat_from_double(double x);

}  // namespace hyperzero
