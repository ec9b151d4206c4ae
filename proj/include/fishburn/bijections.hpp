#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fishburn/tri_matrix.hpp"

namespace fishburn {

struct TraceStep {
  std::string label;
  TriMatrix matrix;

  bool operator==(const TraceStep&) const = default;
};

// Value snapshots of a bijection run: the input first, one snapshot per
// algorithm step, the output last.
struct BijectionTrace {
  std::vector<TraceStep> steps;
};

struct MapResult {
  TriMatrix matrix;
  std::optional<BijectionTrace> trace;
};

enum class TraceMode { Off, On };

// Row-Fishburn matrix plus a bit recording whether its representative in B(n)
// carried an extra zero first row and column.
struct SignedRowFishburn {
  TriMatrix matrix;
  int flag = 0;

  bool operator==(const SignedRowFishburn&) const = default;
  auto operator<=>(const SignedRowFishburn&) const = default;
};

// Self-dual Fishburn matrices of reduced size n -> SM(n).
// Preserves the first-row sum; the diagonal sum becomes the center-column sum.
// Throws NotSelfDual, NotFishburn, DegenerateMatrix.
TriMatrix alpha(const TriMatrix& m);
MapResult alpha(const TriMatrix& m, TraceMode mode);

// SM(n) -> self-dual Fishburn matrices of reduced size n.
// Throws NotSMMember, DegenerateMatrix, Lemma1Violated.
TriMatrix alpha_inv(const TriMatrix& m);
MapResult alpha_inv(const TriMatrix& m, TraceMode mode);

// SM(n) -> B(n) by the column insertion algorithm. Carries
// (first-row sum, center-column sum) to (last-column sum, first-row sum).
// Throws NotSMMember, DegenerateMatrix.
MapResult beta(const TriMatrix& a, TraceMode mode = TraceMode::Off);

// B(n) -> SM(n) by the column removal algorithm.
// Throws NotBMember, DegenerateMatrix.
MapResult beta_inv(const TriMatrix& a, TraceMode mode = TraceMode::Off);

// (A, 0) -> A and (A, 1) -> A with a zero first row and column prepended.
// Throws NotRowFishburn.
TriMatrix embed_rm_in_b(const TriMatrix& a, int add_zero_first);

// Inverse of embed_rm_in_b. Throws NotBMember, DegenerateMatrix.
SignedRowFishburn project_b_to_signed_rm(const TriMatrix& m);

// project_b_to_signed_rm(beta(alpha(M))): self-dual Fishburn matrices of
// reduced size n onto RM(n) x {0,1}.
SignedRowFishburn selfdual_to_signed_rm(const TriMatrix& m);

// Inverse of selfdual_to_signed_rm.
TriMatrix signed_rm_to_selfdual(const SignedRowFishburn& s);

// Even-dimension self-dual Fishburn M -> SM member with zero center column:
// reduce(M) with a zero row and column inserted at the middle.
// Throws NotSelfDual, NotFishburn, OddDimension.
TriMatrix em_to_sm(const TriMatrix& m);

// Inverse of em_to_sm on SM members with zero center row and column.
// Throws NotSMMember.
TriMatrix sm_to_em(const TriMatrix& a);

}  // namespace fishburn
