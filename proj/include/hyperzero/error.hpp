#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperzero {

enum class ErrorCode {
  InvalidParams,
  InvalidArgument,
  EndpointIsRoot,
  ZeroPolynomial,
  ZeroConstantTerm,
  SingularOnContour,
  OutOfDomain,
  OutOfInterval,
  WrongCase,
  WrongDegree,
  NoConvergence,
  CircleClassificationAmbiguous,
  NumericUnderflow,
  CountMismatch,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by cross_check_roots when the theta-root count and the
/// Sturm-certified count of P_m on I disagree.
class CountMismatch : public Error {
 public:
  CountMismatch(std::size_t theta_roots, std::size_t sturm_roots);
  std::size_t theta_roots() const noexcept { return theta_roots_; }
  std::size_t sturm_roots() const noexcept { return sturm_roots_; }

 private:
  std::size_t theta_roots_;
  std::size_t sturm_roots_;
};

}  // namespace hyperzero
