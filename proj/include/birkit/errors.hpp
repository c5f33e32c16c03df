#ifndef BIRKIT_ERRORS_HPP
#define BIRKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace birkit {

enum class ErrorKind {
  Syntax,
  UnknownVariable,
  NonIntegerCoefficient,
  RingMismatch,
  ZeroPolynomial,
  Homogeneity,
  Precondition,
  NotApplicable,
  ResourceLimit,
  Io,
  Schema,
  Internal,
};

/// Engine-wide error type; `kind()` drives the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::Homogeneity: return "HomogeneityError";
    case ErrorKind::Precondition: return "PreconditionViolated";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::Io: return "IoError";
    case ErrorKind::Schema: return "SchemaError";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Error";
}

/// 0 = verdict computed, 1 = input error, 2 = resource limit, 3 = internal.
inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::ResourceLimit: return 2;
    case ErrorKind::Internal: return 3;
    default: return 1;
  }
}

}  // namespace birkit

#endif
