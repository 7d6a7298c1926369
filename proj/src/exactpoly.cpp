#include "hyperzero/exactpoly.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace hyperzero {

RatPoly to_rat(const IntPoly& p) {
  std::vector<BigRat> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return RatPoly(std::move(out));
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return p;
  }
  std::vector<BigInt> out(p.coeffs());
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return {};
  BigInt l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) {
    BigInt v = l / c.get_den();
    v *= c.get_num();
    out.push_back(std::move(v));
  }
  return primitive_part(IntPoly(std::move(out)));
}

BigRat poly_eval(const RatPoly& p, const BigRat& x) {
  BigRat acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

BigRat poly_eval(const IntPoly& p, const BigRat& x) { return poly_eval(to_rat(p), x); }

int sign_at(const IntPoly& p, const BigRat& x) {
  if (p.is_zero()) return 0;
  // b^d p(a/b) = sum c_i a^i b^(d-i), evaluated by homogeneous Horner.
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  const auto& c = p.coeffs();
  BigInt acc = c.back();
  BigInt bpow = 1;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    bpow *= b;
    acc *= a;
    if (sgn(c[k]) != 0) acc += c[k] * bpow;
  }
  return sgn(acc);
}

double poly_eval_double(const IntPoly& p, double x) {
  double acc = 0.0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

BigInt max_abs_coeff(const IntPoly& p) {
  BigInt best = 0;
  for (const auto& c : p.coeffs()) {
    if (mpz_cmpabs(c.get_mpz_t(), best.get_mpz_t()) > 0) best = abs(c);
  }
  return best;
}

BigRat cauchy_bound(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cauchy_bound of the zero polynomial");
  BigRat best = 0;
  const BigRat lead = abs(p.leading());
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    BigRat q = abs(p.coeffs()[i]) / lead;
    if (q > best) best = q;
  }
  return best + 1;
}

BigRat rat_from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite double");
  return BigRat(x);
}

namespace {

// Pseudo-remainder of a by b. Returns the remainder of lc(b)^steps * a and
// the step count so the caller can recover the sign of the true remainder.
std::pair<IntPoly, int> pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> r(a.coeffs());
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const BigInt& lc = b.leading();
  int steps = 0;
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
    const int dr = static_cast<int>(r.size()) - 1;
    const BigInt lr = r.back();
    const int shift = dr - db;
    for (auto& c : r) c *= lc;
    for (int j = 0; j <= db; ++j) {
      if (sgn(bc[j]) != 0) r[j + shift] -= lr * bc[j];
    }
    ++steps;
    while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
  }
  return {IntPoly(std::move(r)), steps};
}

}  // namespace

SturmChain::SturmChain(const RatPoly& p) { build(primitive_part(p)); }
SturmChain::SturmChain(const IntPoly& p) { build(primitive_part(p)); }

void SturmChain::build(IntPoly p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm chain of the zero polynomial");
  chain_.push_back(std::move(p));
  if (chain_.front().degree() == 0) return;
  chain_.push_back(primitive_part(poly_derivative(chain_.front())));
  while (chain_.back().degree() > 0) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    auto [rem, steps] = pseudo_remainder(a, b);
    if (rem.is_zero()) break;
    // rem = lc(b)^steps * (true remainder); the chain wants -(true remainder).
    const bool flip = sgn(b.leading()) < 0 && (steps % 2 == 1);
    IntPoly next = primitive_part(rem);
    if (!flip) next = poly_scale(next, BigInt(-1));
    chain_.push_back(std::move(next));
  }
}

int SturmChain::variations(const BigRat& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t SturmChain::count(const BigRat& lo, const BigRat& hi) const {
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "sturm count needs lo < hi");
  if (sign_of_base(lo) == 0) throw Error(ErrorCode::EndpointIsRoot, "p(lo) = 0 at " + lo.get_str());
  if (sign_of_base(hi) == 0) throw Error(ErrorCode::EndpointIsRoot, "p(hi) = 0 at " + hi.get_str());
  return static_cast<std::size_t>(variations(lo) - variations(hi));
}

std::size_t sturm_count(const RatPoly& p, const BigRat& lo, const BigRat& hi) {
  return SturmChain(p).count(lo, hi);
}

std::vector<IsolatedRoot> isolate_roots(const RatPoly& p, const BigRat& lo, const BigRat& hi,
                                        const BigRat& width) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "isolate_roots of the zero polynomial");
  if (p.degree() == 0) {
    if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "isolate_roots needs lo < hi");
    return {};
  }
  return isolate_roots(SturmChain(p), lo, hi, width);
}

std::vector<IsolatedRoot> isolate_roots(const SturmChain& chain, const BigRat& lo,
                                        const BigRat& hi, const BigRat& width) {
  if (sgn(width) <= 0) throw Error(ErrorCode::InvalidArgument, "isolation width must be positive");
  chain.count(lo, hi);  // validates the endpoints

  struct Pending {
    BigRat a, b;
    int va, vb;
  };
  std::vector<IsolatedRoot> out;
  std::vector<Pending> work;
  work.push_back({lo, hi, chain.variations(lo), chain.variations(hi)});
  while (!work.empty()) {
    Pending cur = std::move(work.back());
    work.pop_back();
    const int roots = cur.va - cur.vb;
    if (roots == 0) continue;
    if (roots == 1 && cur.b - cur.a <= width) {
      out.push_back({cur.a, cur.b, std::nullopt});
      continue;
    }
    BigRat mid = (cur.a + cur.b) / 2;
    if (chain.sign_of_base(mid) != 0) {
      const int vm = chain.variations(mid);
      work.push_back({cur.a, mid, cur.va, vm});
      work.push_back({std::move(mid), std::move(cur.b), vm, cur.vb});
      continue;
    }
    // Bisection landed on a root: record it and step off both sides until
    // the punctured neighbourhood is root-free and the endpoints are not roots.
    out.push_back({mid, mid, mid});
    BigRat delta = (cur.b - cur.a) / 4;
    BigRat left, right;
    int vl = 0, vr = 0;
    for (;;) {
      left = mid - delta;
      right = mid + delta;
      if (chain.sign_of_base(left) != 0 && chain.sign_of_base(right) != 0) {
        vl = chain.variations(left);
        vr = chain.variations(right);
        if (vl - vr == 1) break;
      }
      delta /= 2;
    }
    work.push_back({cur.a, std::move(left), cur.va, vl});
    work.push_back({std::move(right), cur.b, vr, cur.vb});
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lo < y.lo; });
  return out;
}

}  // namespace hyperzero
