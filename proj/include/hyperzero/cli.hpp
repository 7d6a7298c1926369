#pragma once

// Command-line front end. Exit codes: 0 success, 1 a checked claim failed
// (or the computation itself failed), 2 usage error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hyperzero/family.hpp"

namespace hyperzero::cli {

enum class Command { Gen, Roots, Curve, QRoots, Signs, Verify, Density, CrossCheck, ExpSum };
enum class Format { Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::Gen;
  int n = 0;
  int r = 0;
  std::optional<int> m;
  std::optional<int> m_max;
  int bins = 50;
  int samples = 100;
  double tol = 1e-6;
  std::optional<double> theta;
  std::optional<int> h;
  double width = 1e-9;
  int jobs = 1;
  std::optional<std::uint64_t> seed;
  bool figure = false;
  std::string out_path;  // empty: standard output
  std::optional<Format> format;
};

/// Raised for invalid flags or combinations; maps to exit code 2.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorCode::InvalidArgument, what) {}
};

std::string command_name(Command c);

/// Throws UsageError unless the command's required fields are present and
/// every tolerance and count is in range.
void validate(const RunConfig& config);

/// Runs one command, writing the report to config.out_path or `out`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// CSV of (theta, z) at `samples` interior points of (0, pi/r), evenly spaced.
/// Throws Io with the path on write failure.
void emit_figure_data(const FamilyParams& params, int samples, const std::string& out_path);

/// Parses argv and runs; what tools/hyperzero calls.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperzero::cli
