#include "hyperzero/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"

#include "hyperzero/curve.hpp"
#include "hyperzero/qspec.hpp"
#include "hyperzero/report_io.hpp"
#include "hyperzero/verify.hpp"

namespace hyperzero::cli {

namespace {

struct Output {
  std::string text;
  int code = kExitOk;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

Format format_or(const RunConfig& config, Format fallback) {
  return config.format.value_or(fallback);
}

Json header(const RunConfig& config, Json echo) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command_name(config.command);
  if (config.seed) echo["seed"] = *config.seed;
  j["config"] = std::move(echo);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  file << text;
  file.close();
  if (!file) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

std::vector<double> sample_thetas(const FamilyParams& params, int samples) {
  const double end = std::numbers::pi / params.r();
  std::vector<double> out;
  for (int i = 0; i < samples; ++i) out.push_back(end * (i + 1) / (samples + 1));
  return out;
}

std::string figure_csv(const FamilyParams& params, int samples) {
  std::string text = csv_row({"theta", "z"});
  for (double th : sample_thetas(params, samples)) {
    text += csv_row({format_double(th), format_double(z_of_theta(params, th).z)});
  }
  return text;
}

Output do_gen(const RunConfig& c) {
  const FamilyParams params(c.n, c.r);
  const auto polys = generate(params, *c.m_max);
  if (format_or(c, Format::Json) == Format::Csv) {
    std::string text = csv_row({"m", "k", "coefficient"});
    for (std::size_t m = 0; m < polys.size(); ++m) {
      for (std::size_t k = 0; k < polys[m].size(); ++k) {
        text += csv_row({std::to_string(m), std::to_string(k), polys[m].coeffs()[k].get_str()});
      }
    }
    return {text};
  }
  Json j = header(c, {{"n", c.n}, {"r", c.r}, {"m_max", *c.m_max}});
  Json arr = Json::array();
  for (const auto& p : polys) arr.push_back(poly_to_json(p));
  j["polynomials"] = arr;
  return {dump(j)};
}

Output do_roots(const RunConfig& c) {
  const FamilyParams params(c.n, c.r);
  const IntPoly p = generate(params, *c.m).back();
  const auto interval = interval_I(params);
  std::vector<IsolatedRoot> roots;
  std::size_t total = 0;
  if (p.degree() > 0) {
    const SturmChain chain(p);
    const BigRat bound = cauchy_bound(to_rat(p));
    roots = isolate_roots(chain, -bound, bound, rat_from_double(c.width));
    total = roots.size();
  }
  const std::size_t in_i = count_in_interval(p, interval);
  if (format_or(c, Format::Json) == Format::Csv) {
    std::string text = csv_row({"index", "lo", "hi", "approx"});
    for (std::size_t i = 0; i < roots.size(); ++i) {
      text += csv_row({std::to_string(i), roots[i].lo.get_str(), roots[i].hi.get_str(),
                       format_double(BigRat((roots[i].lo + roots[i].hi) / 2).get_d())});
    }
    return {text};
  }
  Json j = header(c, {{"n", c.n}, {"r", c.r}, {"m", *c.m}, {"width", c.width}});
  j["degree"] = p.degree() < 0 ? -1 : p.degree();
  j["interval"] = to_json(interval);
  j["total_real_roots"] = total;
  j["real_roots_in_I"] = in_i;
  Json arr = Json::array();
  for (const auto& r : roots) arr.push_back(to_json(r));
  j["roots"] = arr;
  return {dump(j)};
}

Output do_curve(const RunConfig& c) {
  const FamilyParams params(c.n, c.r);
  if (c.figure) {
    require(format_or(c, Format::Csv) == Format::Csv, "--figure writes CSV only");
    if (!c.out_path.empty()) {
      emit_figure_data(params, c.samples, c.out_path);
      return {""};
    }
    return {figure_csv(params, c.samples)};
  }
  const auto thetas = sample_thetas(params, c.samples);
  if (format_or(c, Format::Csv) == Format::Csv) {
    std::string text = csv_row({"theta", "phi", "z", "A", "B", "t0_ratio"});
    for (double th : thetas) {
      const auto s = z_of_theta(params, th);
      text += csv_row({format_double(s.theta), format_double(s.phi), format_double(s.z),
                       format_double(s.a_val), format_double(s.b_val), format_double(s.t0_ratio)});
    }
    return {text};
  }
  Json j = header(c, {{"n", c.n}, {"r", c.r}, {"samples", c.samples}});
  j["interval"] = to_json(interval_I(params));
  Json arr = Json::array();
  for (double th : thetas) arr.push_back(to_json(z_of_theta(params, th)));
  j["samples"] = arr;
  return {dump(j)};
}

Output do_qroots(const RunConfig& c) {
  const FamilyParams params(c.n, c.r);
  const auto spec = solve_q(params, *c.theta, c.tol);
  const int code = spec.margin > 0.0 ? kExitOk : kExitFailure;
  if (format_or(c, Format::Json) == Format::Csv) {
    std::string text = csv_row({"index", "re", "im", "modulus", "on_circle"});
    for (std::size_t i = 0; i < spec.roots.size(); ++i) {
      const bool on = std::find(spec.on_circle_indices.begin(), spec.on_circle_indices.end(), i) !=
                      spec.on_circle_indices.end();
      text += csv_row({std::to_string(i), format_double(spec.roots[i].real()),
                       format_double(spec.roots[i].imag()),
                       format_double(std::abs(spec.roots[i])), on ? "1" : "0"});
    }
    return {text, code};
  }
  Json j = header(c, {{"n", c.n}, {"r", c.r}, {"theta", *c.theta}, {"tol", c.tol}});
  j["q_coefficients"] = build_q(params, *c.theta);
  j["spectrum"] = to_json(spec);
  return {dump(j), code};
}

Output do_signs(const RunConfig& c) {
  const FamilyParams params(c.n, c.r);
  const auto pattern = check_sign_pattern(params, *c.m);
  const int code = pattern.matches_prediction ? kExitOk : kExitFailure;
  if (format_or(c, Format::Json) == Format::Csv) {
    std::string text = csv_row({"h", "theta", "sign", "predicted"});
    for (std::size_t i = 0; i < pattern.signs.size(); ++i) {
      const int h = static_cast<int>(i) + 1;
      text += csv_row({std::to_string(h), format_double(h * std::numbers::pi / (*c.m + c.r)),
                       std::to_string(pattern.signs[i]), h % 2 == 0 ? "1" : "-1"});
    }
    return {text, code};
  }
  Json j = header(c, {{"n", c.n}, {"r", c.r}, {"m", *c.m}});
  j["sign_pattern"] = to_json(pattern);
  return {dump(j), code};
}

Output do_verify(const RunConfig& c) {
  const FamilyParams params(c.n, c.r);
  const auto report = check_hyperbolicity(params, *c.m_max, c.jobs);
  // Containment for all large m is claimed for every family, and from m = 0
  // on when max{n, r} = 3.
  bool ok = report.first_all_pass_m.has_value();
  if (ok && params.degree_in_t() == 3) ok = *report.first_all_pass_m == report.m_lo;
  const int code = ok ? kExitOk : kExitFailure;
  if (format_or(c, Format::Json) == Format::Csv) {
    std::string text = csv_row(
        {"m", "degree", "real_roots_in_I", "total_real_roots", "hyperbolic", "containment"});
    for (const auto& x : report.per_m) {
      text += csv_row({std::to_string(x.m), std::to_string(x.degree),
                       std::to_string(x.real_roots_in_I), std::to_string(x.total_real_roots),
                       x.hyperbolic ? "1" : "0", x.containment ? "1" : "0"});
    }
    return {text, code};
  }
  Json j = header(c, {{"n", c.n}, {"r", c.r}, {"m_max", *c.m_max}, {"jobs", c.jobs}});
  j["interval"] = to_json(interval_I(params));
  j["report"] = to_json(report);
  return {dump(j), code};
}

Output do_density(const RunConfig& c) {
  const FamilyParams params(c.n, c.r);
  const auto report = density_scan(params, *c.m_max, c.bins);
  if (format_or(c, Format::Json) == Format::Csv) {
    return {csv_row({"bins", "m_max", "covered", "coverage_fraction"}) +
            csv_row({std::to_string(report.bins), std::to_string(report.m_max),
                     std::to_string(report.covered), format_double(report.coverage_fraction)})};
  }
  Json j = header(c, {{"n", c.n}, {"r", c.r}, {"m_max", *c.m_max}, {"bins", c.bins}});
  j["density"] = to_json(report);
  return {dump(j)};
}

Output do_crosscheck(const RunConfig& c) {
  require(format_or(c, Format::Json) == Format::Json, "crosscheck writes JSON only");
  const FamilyParams params(c.n, c.r);
  Json j = header(c, {{"n", c.n}, {"r", c.r}, {"m", *c.m}, {"tol", c.tol}});
  try {
    const auto result = cross_check_roots(params, *c.m, c.tol);
    j["crosscheck"] = to_json(result);
    const bool ok = result.pass && result.max_residual < c.tol;
    return {dump(j), ok ? kExitOk : kExitFailure};
  } catch (const CountMismatch& e) {
    j["crosscheck"] = {{"m", *c.m},
                       {"pass", false},
                       {"theta_roots", e.theta_roots()},
                       {"sturm_roots", e.sturm_roots()}};
    return {dump(j), kExitFailure};
  }
}

Output do_expsum(const RunConfig& c) {
  const int sign = expsum_sign(c.n, *c.h);
  const int code = sign == (*c.h % 2 == 0 ? 1 : -1) ? kExitOk : kExitFailure;
  if (c.format == Format::Json) {
    Json j = header(c, {{"n", c.n}, {"h", *c.h}});
    j["sign"] = sign;
    return {dump(j), code};
  }
  require(!c.format, "expsum prints text or JSON");
  return {sign > 0 ? "+1\n" : "-1\n", code};
}

bool is_usage_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams:
    case ErrorCode::InvalidArgument:
    case ErrorCode::OutOfDomain:
    case ErrorCode::OutOfInterval:
    case ErrorCode::WrongCase:
    case ErrorCode::WrongDegree:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string command_name(Command c) {
  switch (c) {
    case Command::Gen: return "gen";
    case Command::Roots: return "roots";
    case Command::Curve: return "curve";
    case Command::QRoots: return "qroots";
    case Command::Signs: return "signs";
    case Command::Verify: return "verify";
    case Command::Density: return "density";
    case Command::CrossCheck: return "crosscheck";
    case Command::ExpSum: return "expsum";
  }
  return "?";
}

void validate(const RunConfig& c) {
  if (c.command == Command::ExpSum) {
    require(c.n >= 2, "expsum needs --n >= 2");
    require(c.h && *c.h >= 1, "expsum needs --h >= 1");
    return;
  }
  try {
    FamilyParams(c.n, c.r);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  require(c.tol > 0.0 && std::isfinite(c.tol), "--tol must be positive");
  require(c.width > 0.0 && std::isfinite(c.width), "--width must be positive");
  require(c.jobs >= 1, "--jobs must be >= 1");
  switch (c.command) {
    case Command::Gen:
    case Command::Verify:
      require(c.m_max && *c.m_max >= 0, "--m-max >= 0 is required");
      break;
    case Command::Density:
      require(c.m_max && *c.m_max >= 0, "--m-max >= 0 is required");
      require(c.bins >= 1, "--bins must be >= 1");
      break;
    case Command::Roots:
    case Command::CrossCheck:
      require(c.m && *c.m >= 0, "--m >= 0 is required");
      break;
    case Command::Signs:
      require(c.m && *c.m >= c.r, "--m >= r is required");
      break;
    case Command::Curve:
      require(c.samples >= (c.figure ? 2 : 1), c.figure ? "--samples must be >= 2"
                                                         : "--samples must be >= 1");
      break;
    case Command::QRoots:
      require(c.theta.has_value(), "--theta is required");
      break;
    case Command::ExpSum:
      break;
  }
}

void emit_figure_data(const FamilyParams& params, int samples, const std::string& out_path) {
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "figure data needs samples >= 2");
  write_text(out_path, figure_csv(params, samples));
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    Output result;
    switch (config.command) {
      case Command::Gen: result = do_gen(config); break;
      case Command::Roots: result = do_roots(config); break;
      case Command::Curve: result = do_curve(config); break;
      case Command::QRoots: result = do_qroots(config); break;
      case Command::Signs: result = do_signs(config); break;
      case Command::Verify: result = do_verify(config); break;
      case Command::Density: result = do_density(config); break;
      case Command::CrossCheck: result = do_crosscheck(config); break;
      case Command::ExpSum: result = do_expsum(config); break;
    }
    if (!result.text.empty()) {
      if (config.out_path.empty()) {
        out << result.text;
      } else {
        write_text(config.out_path, result.text);
      }
    }
    return result.code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_usage_code(e.code()) ? kExitUsage : kExitFailure;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeros of the polynomials generated by 1/((1-t)^n + z t^r)", "hyperzero"};
  app.require_subcommand(1);

  RunConfig config;
  std::optional<int> m;
  std::optional<int> m_max;
  std::optional<double> theta;
  std::optional<int> h;
  std::optional<std::uint64_t> seed;
  std::string format;

  const auto add = [&](Command cmd, const std::string& description) {
    CLI::App* sub = app.add_subcommand(command_name(cmd), description);
    sub->callback([&config, cmd] { config.command = cmd; });
    sub->add_option("--n", config.n, "exponent of (1 - t)")->required();
    sub->add_option("--out", config.out_path, "output file (default: stdout)");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", seed, "recorded in the config echo");
    return sub;
  };
  const auto add_r = [&](CLI::App* sub) {
    sub->add_option("--r", config.r, "exponent of t in z t^r")->required();
  };

  auto* gen = add(Command::Gen, "exact coefficients of P_0 .. P_{m_max}");
  add_r(gen);
  gen->add_option("--m-max", m_max)->required();

  auto* roots = add(Command::Roots, "Sturm-isolated real zeros of P_m");
  add_r(roots);
  roots->add_option("--m", m)->required();
  roots->add_option("--width", config.width, "isolating interval width");

  auto* curve = add(Command::Curve, "samples of theta -> z(theta), A, B, |t0|");
  add_r(curve);
  curve->add_option("--samples", config.samples);
  curve->add_flag("--figure", config.figure, "only the (theta, z) columns");

  auto* qroots = add(Command::QRoots, "zeros of Q(zeta) at theta");
  add_r(qroots);
  qroots->add_option("--theta", theta)->required();
  qroots->add_option("--tol", config.tol);

  auto* signs = add(Command::Signs, "signs of R_m on the theta_h grid");
  add_r(signs);
  signs->add_option("--m", m)->required();

  auto* verify = add(Command::Verify, "Sturm hyperbolicity and containment for m <= m_max");
  add_r(verify);
  verify->add_option("--m-max", m_max)->required();
  verify->add_option("--jobs", config.jobs, "worker threads");

  auto* density = add(Command::Density, "theta-bin coverage by zeros of R_m, m <= m_max");
  add_r(density);
  density->add_option("--m-max", m_max)->required();
  density->add_option("--bins", config.bins);

  auto* cross = add(Command::CrossCheck, "theta-roots of R_m against Sturm roots of P_m");
  add_r(cross);
  cross->add_option("--m", m)->required();
  cross->add_option("--tol", config.tol);

  auto* expsum = add(Command::ExpSum, "sign of the exponential sum");
  expsum->set_help_flag("--help", "Print this help message and exit");
  expsum->add_option("--h", h)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto chosen = app.get_subcommands();
    out << (chosen.empty() ? app.help() : chosen.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  config.m = m;
  config.m_max = m_max;
  config.theta = theta;
  config.h = h;
  config.seed = seed;
  if (format == "json") config.format = Format::Json;
  if (format == "csv") config.format = Format::Csv;
  const int code = run(config, out, err);
  if (code == kExitUsage) err << app.help();
  return code;
}

}  // namespace hyperzero::cli
