#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "fishburn/tri_matrix.hpp"

namespace fishburn {

enum class CellClass { NW, Diagonal, SE };
enum class Parity { Even, Odd };

std::string to_string(CellClass c);
std::string to_string(Parity p);

// Class of cell (i,j) in a dimension-m matrix, relative to the
// bottom-left/top-right diagonal i+j = m+1. Requires 1 <= i <= j <= m.
CellClass cell_class(std::size_t m, std::size_t i, std::size_t j);

// Sum of all entries.
Entry size(const TriMatrix& m);

// Reflection along the bottom-left/top-right diagonal:
// dual(M)(i,j) = M(m+1-j, m+1-i).
TriMatrix dual(const TriMatrix& m);
bool is_self_dual(const TriMatrix& m);

bool is_fishburn(const TriMatrix& m);
bool is_row_fishburn(const TriMatrix& m);
bool is_super_triangular(const TriMatrix& m);

// Sum over NW and diagonal cells. Throws NotSelfDual.
Entry reduced_size(const TriMatrix& m);

// Zeroes every SE cell of a self-dual Fishburn matrix. Throws NotSelfDual or
// NotFishburn.
TriMatrix reduce(const TriMatrix& m);

// For super triangular M of dimension m and every i <= ceil(m/2):
// (i) column i is nonzero, (ii) row i or column m+1-i is nonzero.
// These characterize the reduced matrices of self-dual Fishburn matrices.
// Throws NotSuperTriangular.
bool satisfies_lemma1(const TriMatrix& m);

// Inverse of reduce: mirrors every NW cell into its SE partner.
// Throws Lemma1Violated (also for inputs that are not super triangular).
TriMatrix expand(const TriMatrix& m);

// Half-dimension k of a dimension-(2k+1) matrix; nullopt for even dimension.
std::optional<std::size_t> half_dimension(const TriMatrix& m);

// Odd dimension 2k+1, super triangular, (a) columns 1..k nonzero,
// (b) row k+1-i or column k+1+i nonzero for 1 <= i <= k.
bool is_sm_member(const TriMatrix& m);

// Rows 2..m nonzero; row 1 unconstrained.
bool is_b_member(const TriMatrix& m);

// Human-readable reason for failing each predicate, 1-based; nullopt when the
// predicate holds.
std::optional<std::string> self_dual_violation(const TriMatrix& m);
std::optional<std::string> fishburn_violation(const TriMatrix& m);
std::optional<std::string> row_fishburn_violation(const TriMatrix& m);
std::optional<std::string> super_triangular_violation(const TriMatrix& m);
std::optional<std::string> lemma1_violation(const TriMatrix& m);
std::optional<std::string> sm_violation(const TriMatrix& m);
std::optional<std::string> b_violation(const TriMatrix& m);

struct StatVector {
  Entry size = 0;
  // Present only for self-dual matrices.
  std::optional<Entry> reduced_size;
  Entry first_row_sum = 0;
  Entry diag_sum = 0;
  // Sum of column (m+1)/2 for odd m; 0 for even m.
  Entry center_col_sum = 0;
  Entry last_col_sum = 0;
  std::size_t dim = 1;
  Parity dim_parity = Parity::Odd;

  bool operator==(const StatVector&) const = default;
};

StatVector stats(const TriMatrix& m);

}  // namespace fishburn
