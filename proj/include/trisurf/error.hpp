#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trisurf {

enum class ErrorKind {
  DegenerateFace,
  EmptyInput,
  NotACycle,
  NotManifold,
  NotConnected,
  OddParity,
  UnknownVertex,
  NotAutomorphism,
  NotOrientable,
  InvalidMap,
  InfeasibleParameters,
  ReconstructionIncomplete,
  NoMatch,
  CorruptCatalog,
  Parse,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateFace: return "DegenerateFace";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::NotManifold: return "NotManifold";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::OddParity: return "OddParity";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotOrientable: return "NotOrientable";
    case ErrorKind::InvalidMap: return "InvalidMap";
    case ErrorKind::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorKind::ReconstructionIncomplete: return "ReconstructionIncomplete";
    case ErrorKind::NoMatch: return "NoMatch";
    case ErrorKind::CorruptCatalog: return "CorruptCatalog";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the kinds above so that
// callers (and the CLI) can branch on it without parsing messages.
class SurfaceError : public std::runtime_error {
 public:
  SurfaceError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace trisurf
