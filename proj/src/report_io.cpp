#include "hyperzero/report_io.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace hyperzero {

namespace {

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json rat_to_json(const BigRat& q) { return q.get_str(); }

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json poly_to_json(const IntPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

IntPoly poly_from_json(const Json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& c : j) {
    try {
      coeffs.emplace_back(c.get<std::string>());
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "coefficient is not a decimal integer string");
    }
  }
  return IntPoly(std::move(coeffs));
}

std::vector<IntPoly> polys_from_json(const Json& j) {
  std::vector<IntPoly> out;
  for (const auto& p : j) out.push_back(poly_from_json(p));
  return out;
}

Json to_json(const IntervalI& interval) {
  return {{"lo", rat_to_json(interval.lo)},
          {"hi", interval.hi ? rat_to_json(*interval.hi) : Json(nullptr)},
          {"lo_value", interval.lo_value()},
          {"hi_value", interval.hi ? Json(interval.hi->get_d()) : Json(nullptr)}};
}

Json to_json(const ThetaSample& s) {
  return {{"theta", s.theta}, {"phi", s.phi},   {"z", s.z},
          {"A", s.a_val},     {"B", s.b_val},   {"t0_ratio", s.t0_ratio}};
}

Json to_json(const QSpectrum& s) {
  Json roots = Json::array();
  for (const auto& z : s.roots) roots.push_back({z.real(), z.imag()});
  Json pair = nullptr;
  if (s.double_root_pair) pair = {s.double_root_pair->first, s.double_root_pair->second};
  return {{"theta", s.theta},
          {"roots", roots},
          {"on_circle_indices", s.on_circle_indices},
          {"double_root_pair", pair},
          {"margin", finite_or_null(s.margin)},
          {"min_separation", finite_or_null(s.min_separation)}};
}

Json to_json(const PerMResult& r) {
  return {{"m", r.m},
          {"degree", r.degree},
          {"real_roots_in_I", r.real_roots_in_I},
          {"total_real_roots", r.total_real_roots},
          {"endpoint_root", r.endpoint_root},
          {"hyperbolic", r.hyperbolic},
          {"containment", r.containment}};
}

Json to_json(const VerifyReport& r) {
  Json per_m = Json::array();
  for (const auto& x : r.per_m) per_m.push_back(to_json(x));
  return {{"n", r.params.n()},
          {"r", r.params.r()},
          {"m_range", {r.m_lo, r.m_hi}},
          {"first_all_pass_m", r.first_all_pass_m ? Json(*r.first_all_pass_m) : Json(nullptr)},
          {"per_m", per_m},
          {"notes", r.notes}};
}

Json to_json(const SignPattern& s) {
  return {{"m", s.m},
          {"signs", s.signs},
          {"terminal_sign", s.terminal_sign},
          {"terminal_sign_coarse", s.terminal_sign_coarse},
          {"matches_prediction", s.matches_prediction}};
}

Json to_json(const CrossCheckResult& c) {
  return {{"m", c.m},
          {"pass", c.pass},
          {"theta_roots", c.theta_roots},
          {"sturm_roots", c.sturm_roots},
          {"bijection", c.bijection},
          {"max_residual", c.max_residual},
          {"max_residual_by_largest_coeff", finite_or_null(c.max_residual_by_largest_coeff)},
          {"z_roots", c.z_roots}};
}

Json to_json(const DensityReport& d) {
  return {{"bins", d.bins},
          {"m_max", d.m_max},
          {"covered", d.covered},
          {"coverage_fraction", d.coverage_fraction}};
}

Json to_json(const IsolatedRoot& root) {
  return {{"lo", rat_to_json(root.lo)},
          {"hi", rat_to_json(root.hi)},
          {"exact", root.exact ? rat_to_json(*root.exact) : Json(nullptr)},
          {"approx", BigRat((root.lo + root.hi) / 2).get_d()}};
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) line += ',';
    line += fields[i];
  }
  line += '\n';
  return line;
}

}  // namespace hyperzero
