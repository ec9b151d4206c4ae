#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace fishburn {

using Entry = std::uint64_t;

// Sum with overflow detection; throws Error(Overflow).
Entry checked_add(Entry a, Entry b);

// Square upper-triangular matrix of nonnegative integers. All indices in the
// public interface are 1-based (row 1 is the top row). Cells below the main
// diagonal are identically zero and cannot be written.
//
// Ordering is by dimension first, then lexicographic on the row-major entry
// sequence; this is the emission order of the enumerators.
class TriMatrix {
 public:
  explicit TriMatrix(std::size_t dim);

  static TriMatrix from_rows(std::initializer_list<std::initializer_list<Entry>> rows);
  static TriMatrix from_rows(const std::vector<std::vector<Entry>>& rows);

  std::size_t dim() const noexcept { return dim_; }

  Entry operator()(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Entry value);
  void add(std::size_t i, std::size_t j, Entry value);

  Entry row_sum(std::size_t i) const;
  Entry col_sum(std::size_t j) const;
  bool row_zero(std::size_t i) const;
  bool col_zero(std::size_t j) const;

  // Inserts a new row and a new column at index after+1. The new row is zero;
  // the new column takes column[r-1] in row r for r = 1..column.size(), which
  // must not exceed after (cells on or below the diagonal stay zero).
  void insert_line(std::size_t after, std::span<const Entry> column = {});
  // Removes row `index` and column `index` together.
  void remove_line(std::size_t index);
  // Keeps the leading new_dim rows and columns.
  void truncate(std::size_t new_dim);

  // Row-major entries of the full dim x dim square (zeros below the diagonal).
  const std::vector<Entry>& cells() const noexcept { return cells_; }

  bool operator==(const TriMatrix&) const = default;
  std::strong_ordering operator<=>(const TriMatrix& other) const;

 private:
  void check_index(std::size_t i, std::size_t j) const;
  std::size_t offset(std::size_t i, std::size_t j) const { return (i - 1) * dim_ + (j - 1); }

  std::size_t dim_;
  std::vector<Entry> cells_;
};

// Text format: first line is the dimension m, then m lines of m
// space-separated nonnegative integers. Blank lines and lines starting with
// '#' are skipped by the parser.
TriMatrix parse_matrix(std::istream& in);
TriMatrix parse_matrix(const std::string& text);
std::string format_matrix(const TriMatrix& m);
std::ostream& operator<<(std::ostream& os, const TriMatrix& m);

}  // namespace fishburn
