#include "hyperzero/error.hpp"

namespace hyperzero {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EndpointIsRoot: return "EndpointIsRoot";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::SingularOnContour: return "SingularOnContour";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::OutOfInterval: return "OutOfInterval";
    case ErrorCode::WrongCase: return "WrongCase";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::CircleClassificationAmbiguous: return "CircleClassificationAmbiguous";
    case ErrorCode::NumericUnderflow: return "NumericUnderflow";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

CountMismatch::CountMismatch(std::size_t theta_roots, std::size_t sturm_roots)
    : Error(ErrorCode::CountMismatch,
            "theta-root count " + std::to_string(theta_roots) +
                " != Sturm count " + std::to_string(sturm_roots)),
      theta_roots_(theta_roots),
      sturm_roots_(sturm_roots) {}

}  // namespace hyperzero
