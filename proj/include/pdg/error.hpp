#pragma once

#include <stdexcept>
#include <string>

namespace pdg {

enum class ErrorKind {
  ParameterDomain,
  Parse,
  Validation,
  Structural,
  WrongSolver,
  SizeGuard,
  UnsupportedRegime,
  InvalidCoupling,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParameterDomain: return "parameter-domain";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Structural: return "structural";
    case ErrorKind::WrongSolver: return "wrong-solver";
    case ErrorKind::SizeGuard: return "size-guard";
    case ErrorKind::UnsupportedRegime: return "unsupported-regime";
    case ErrorKind::InvalidCoupling: return "invalid-coupling";
  }
  return "unknown";
}

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + " error: " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pdg
