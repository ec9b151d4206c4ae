#include "fishburn/matrix_core.hpp"

#include <algorithm>

#include "fishburn/error.hpp"

namespace fishburn {

namespace {

std::string cell_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::size_t ceil_half(std::size_t m) { return (m + 1) / 2; }

}  // namespace

std::string to_string(CellClass c) {
  switch (c) {
    case CellClass::NW: return "NW";
    case CellClass::Diagonal: return "DIAGONAL";
    case CellClass::SE: return "SE";
  }
  return "?";
}

std::string to_string(Parity p) { return p == Parity::Even ? "EVEN" : "ODD"; }

CellClass cell_class(std::size_t m, std::size_t i, std::size_t j) {
  if (i < 1 || i > j || j > m) {
    throw Error(ErrorKind::IndexOutOfRange, "cell " + cell_name(i, j) +
                                                " is not an upper-triangular cell of dimension " +
                                                std::to_string(m));
  }
  if (i + j == m + 1) return CellClass::Diagonal;
  return i + j < m + 1 ? CellClass::NW : CellClass::SE;
}

Entry size(const TriMatrix& m) {
  Entry s = 0;
  for (Entry v : m.cells()) s = checked_add(s, v);
  return s;
}

TriMatrix dual(const TriMatrix& m) {
  const std::size_t d = m.dim();
  TriMatrix out(d);
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = i; j <= d; ++j) out.set(i, j, m(d + 1 - j, d + 1 - i));
  return out;
}

std::optional<std::string> self_dual_violation(const TriMatrix& m) {
  const std::size_t d = m.dim();
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t j = i; j <= d; ++j) {
      const std::size_t mi = d + 1 - j, mj = d + 1 - i;
      if (m(i, j) != m(mi, mj)) {
        return "cell " + cell_name(i, j) + " = " + std::to_string(m(i, j)) + " but mirrored cell " +
               cell_name(mi, mj) + " = " + std::to_string(m(mi, mj));
      }
    }
  }
  return std::nullopt;
}

bool is_self_dual(const TriMatrix& m) { return !self_dual_violation(m); }

std::optional<std::string> row_fishburn_violation(const TriMatrix& m) {
  for (std::size_t i = 1; i <= m.dim(); ++i)
    if (m.row_zero(i)) return "row " + std::to_string(i) + " zero";
  return std::nullopt;
}

std::optional<std::string> fishburn_violation(const TriMatrix& m) {
  if (auto r = row_fishburn_violation(m)) return r;
  for (std::size_t j = 1; j <= m.dim(); ++j)
    if (m.col_zero(j)) return "column " + std::to_string(j) + " zero";
  return std::nullopt;
}

bool is_fishburn(const TriMatrix& m) { return !fishburn_violation(m); }
bool is_row_fishburn(const TriMatrix& m) { return !row_fishburn_violation(m); }

std::optional<std::string> super_triangular_violation(const TriMatrix& m) {
  const std::size_t d = m.dim();
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = std::max(i, d + 2 - i); j <= d; ++j)
      if (m(i, j) != 0) return "SE cell " + cell_name(i, j) + " nonzero";
  return std::nullopt;
}

bool is_super_triangular(const TriMatrix& m) { return !super_triangular_violation(m); }

Entry reduced_size(const TriMatrix& m) {
  if (auto why = self_dual_violation(m)) throw Error(ErrorKind::NotSelfDual, *why);
  const std::size_t d = m.dim();
  Entry s = 0;
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = i; i + j <= d + 1; ++j) s = checked_add(s, m(i, j));
  return s;
}

TriMatrix reduce(const TriMatrix& m) {
  if (auto why = self_dual_violation(m)) throw Error(ErrorKind::NotSelfDual, *why);
  if (auto why = fishburn_violation(m)) throw Error(ErrorKind::NotFishburn, *why);
  TriMatrix out = m;
  const std::size_t d = m.dim();
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = std::max(i, d + 2 - i); j <= d; ++j) out.set(i, j, 0);
  return out;
}

std::optional<std::string> lemma1_violation(const TriMatrix& m) {
  const std::size_t d = m.dim();
  for (std::size_t i = 1; i <= ceil_half(d); ++i)
    if (m.col_zero(i)) return "column " + std::to_string(i) + " zero (condition i)";
  for (std::size_t i = 1; i <= ceil_half(d); ++i) {
    if (m.row_zero(i) && m.col_zero(d + 1 - i)) {
      return "row " + std::to_string(i) + " and column " + std::to_string(d + 1 - i) +
             " both zero (condition ii)";
    }
  }
  return std::nullopt;
}

bool satisfies_lemma1(const TriMatrix& m) {
  if (auto why = super_triangular_violation(m)) throw Error(ErrorKind::NotSuperTriangular, *why);
  return !lemma1_violation(m);
}

TriMatrix expand(const TriMatrix& m) {
  if (auto why = super_triangular_violation(m)) throw Error(ErrorKind::Lemma1Violated, *why);
  if (auto why = lemma1_violation(m)) throw Error(ErrorKind::Lemma1Violated, *why);
  TriMatrix out = m;
  const std::size_t d = m.dim();
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = i; i + j < d + 1; ++j) out.set(d + 1 - j, d + 1 - i, m(i, j));
  return out;
}

std::optional<std::size_t> half_dimension(const TriMatrix& m) {
  if (m.dim() % 2 == 0) return std::nullopt;
  return (m.dim() - 1) / 2;
}

std::optional<std::string> sm_violation(const TriMatrix& m) {
  const auto k = half_dimension(m);
  if (!k) return "even dimension " + std::to_string(m.dim());
  if (auto why = super_triangular_violation(m)) return why;
  for (std::size_t i = 1; i <= *k; ++i)
    if (m.col_zero(i)) return "column " + std::to_string(i) + " zero (property a)";
  for (std::size_t i = 1; i <= *k; ++i) {
    if (m.row_zero(*k + 1 - i) && m.col_zero(*k + 1 + i)) {
      return "row " + std::to_string(*k + 1 - i) + " and column " + std::to_string(*k + 1 + i) +
             " both zero (property b)";
    }
  }
  return std::nullopt;
}

bool is_sm_member(const TriMatrix& m) { return !sm_violation(m); }

std::optional<std::string> b_violation(const TriMatrix& m) {
  for (std::size_t i = 2; i <= m.dim(); ++i)
    if (m.row_zero(i)) return "row " + std::to_string(i) + " zero";
  return std::nullopt;
}

bool is_b_member(const TriMatrix& m) { return !b_violation(m); }

StatVector stats(const TriMatrix& m) {
  const std::size_t d = m.dim();
  StatVector s;
  s.size = size(m);
  if (is_self_dual(m)) s.reduced_size = reduced_size(m);
  s.first_row_sum = m.row_sum(1);
  for (std::size_t i = 1; i <= ceil_half(d); ++i) s.diag_sum = checked_add(s.diag_sum, m(i, d + 1 - i));
  if (auto k = half_dimension(m)) s.center_col_sum = m.col_sum(*k + 1);
  s.last_col_sum = m.col_sum(d);
  s.dim = d;
  s.dim_parity = d % 2 == 0 ? Parity::Even : Parity::Odd;
  return s;
}

}  // namespace fishburn
