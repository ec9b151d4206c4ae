#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fishburn {

enum class ErrorKind {
  NotSelfDual,
  NotFishburn,
  NotRowFishburn,
  NotSuperTriangular,
  Lemma1Violated,
  NotSMMember,
  NotBMember,
  OddDimension,
  DegenerateMatrix,
  NotIntervalOrder,
  NotSelfDualMatrix,
  InvalidPoset,
  IndexOutOfRange,
  ParseError,
  Overflow,
  Unsupported,
};

std::string_view to_string(ErrorKind kind);

// All library failures carry a kind; what() is "<Kind>: <detail>" with
// 1-based coordinates in the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fishburn
