#include "fishburn/error.hpp"

namespace fishburn {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSelfDual: return "NotSelfDual";
    case ErrorKind::NotFishburn: return "NotFishburn";
    case ErrorKind::NotRowFishburn: return "NotRowFishburn";
    case ErrorKind::NotSuperTriangular: return "NotSuperTriangular";
    case ErrorKind::Lemma1Violated: return "Lemma1Violated";
    case ErrorKind::NotSMMember: return "NotSMMember";
    case ErrorKind::NotBMember: return "NotBMember";
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::DegenerateMatrix: return "DegenerateMatrix";
    case ErrorKind::NotIntervalOrder: return "NotIntervalOrder";
    case ErrorKind::NotSelfDualMatrix: return "NotSelfDualMatrix";
    case ErrorKind::InvalidPoset: return "InvalidPoset";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace fishburn
