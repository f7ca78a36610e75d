#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace realkirwan {

enum class ErrorKind {
  DegreeMismatch,
  InvalidCharacter,
  InvalidGraph,
  UnknownVertex,
  Disconnected,
  TwoTorsion,
  NotRegularOrbit,
  NotDelzant,
  NonGenericDirection,
  IrregularValue,
  UnsupportedDimension,
  DegreeHalvingUnavailable,
  ModelInconsistency,
  OracleMismatch,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::InvalidCharacter: return "InvalidCharacter";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::TwoTorsion: return "TwoTorsion";
    case ErrorKind::NotRegularOrbit: return "NotRegularOrbit";
    case ErrorKind::NotDelzant: return "NotDelzant";
    case ErrorKind::NonGenericDirection: return "NonGenericDirection";
    case ErrorKind::IrregularValue: return "IrregularValue";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::DegreeHalvingUnavailable: return "DegreeHalvingUnavailable";
    case ErrorKind::ModelInconsistency: return "ModelInconsistency";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace realkirwan
