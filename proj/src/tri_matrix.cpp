#include "fishburn/tri_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "fishburn/error.hpp"

namespace fishburn {

namespace {

std::string cell_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Entry checked_add(Entry a, Entry b) {
  if (a > std::numeric_limits<Entry>::max() - b) {
    throw Error(ErrorKind::Overflow, "entry sum exceeds 64-bit range");
  }
  return a + b;
}

TriMatrix::TriMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim, 0) {
  if (dim == 0) throw Error(ErrorKind::IndexOutOfRange, "matrix dimension must be at least 1");
}

TriMatrix TriMatrix::from_rows(std::initializer_list<std::initializer_list<Entry>> rows) {
  std::vector<std::vector<Entry>> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

TriMatrix TriMatrix::from_rows(const std::vector<std::vector<Entry>>& rows) {
  TriMatrix m(rows.size());
  for (std::size_t i = 1; i <= rows.size(); ++i) {
    const auto& row = rows[i - 1];
    if (row.size() != rows.size()) {
      throw Error(ErrorKind::ParseError, "row " + std::to_string(i) + " has " +
                                             std::to_string(row.size()) + " entries, expected " +
                                             std::to_string(rows.size()));
    }
    for (std::size_t j = 1; j <= row.size(); ++j) m.set(i, j, row[j - 1]);
  }
  return m;
}

void TriMatrix::check_index(std::size_t i, std::size_t j) const {
  if (i < 1 || j < 1 || i > dim_ || j > dim_) {
    throw Error(ErrorKind::IndexOutOfRange,
                "cell " + cell_name(i, j) + " outside dimension " + std::to_string(dim_));
  }
}

Entry TriMatrix::operator()(std::size_t i, std::size_t j) const {
  check_index(i, j);
  return cells_[offset(i, j)];
}

void TriMatrix::set(std::size_t i, std::size_t j, Entry value) {
  check_index(i, j);
  if (i > j && value != 0) {
    throw Error(ErrorKind::ParseError, "below-diagonal cell " + cell_name(i, j) + " must be 0");
  }
  cells_[offset(i, j)] = value;
}

void TriMatrix::add(std::size_t i, std::size_t j, Entry value) {
  set(i, j, checked_add((*this)(i, j), value));
}

Entry TriMatrix::row_sum(std::size_t i) const {
  check_index(i, i);
  Entry s = 0;
  for (std::size_t j = i; j <= dim_; ++j) s = checked_add(s, cells_[offset(i, j)]);
  return s;
}

Entry TriMatrix::col_sum(std::size_t j) const {
  check_index(j, j);
  Entry s = 0;
  for (std::size_t i = 1; i <= j; ++i) s = checked_add(s, cells_[offset(i, j)]);
  return s;
}

bool TriMatrix::row_zero(std::size_t i) const {
  check_index(i, i);
  for (std::size_t j = i; j <= dim_; ++j)
    if (cells_[offset(i, j)] != 0) return false;
  return true;
}

bool TriMatrix::col_zero(std::size_t j) const {
  check_index(j, j);
  for (std::size_t i = 1; i <= j; ++i)
    if (cells_[offset(i, j)] != 0) return false;
  return true;
}

void TriMatrix::insert_line(std::size_t after, std::span<const Entry> column) {
  if (after > dim_) {
    throw Error(ErrorKind::IndexOutOfRange, "cannot insert after line " + std::to_string(after) +
                                                " in dimension " + std::to_string(dim_));
  }
  if (column.size() > after) {
    throw Error(ErrorKind::IndexOutOfRange, "inserted column would reach the diagonal");
  }
  const std::size_t n = dim_ + 1;
  const std::size_t at = after + 1;
  std::vector<Entry> next(n * n, 0);
  for (std::size_t i = 1; i <= dim_; ++i) {
    const std::size_t ni = i < at ? i : i + 1;
    for (std::size_t j = i; j <= dim_; ++j) {
      const std::size_t nj = j < at ? j : j + 1;
      next[(ni - 1) * n + (nj - 1)] = cells_[offset(i, j)];
    }
  }
  for (std::size_t r = 1; r <= column.size(); ++r) next[(r - 1) * n + (at - 1)] = column[r - 1];
  dim_ = n;
  cells_ = std::move(next);
}

void TriMatrix::remove_line(std::size_t index) {
  check_index(index, index);
  if (dim_ == 1) throw Error(ErrorKind::IndexOutOfRange, "cannot remove the only line");
  const std::size_t n = dim_ - 1;
  std::vector<Entry> next(n * n, 0);
  for (std::size_t i = 1; i <= dim_; ++i) {
    if (i == index) continue;
    const std::size_t ni = i < index ? i : i - 1;
    for (std::size_t j = i; j <= dim_; ++j) {
      if (j == index) continue;
      const std::size_t nj = j < index ? j : j - 1;
      next[(ni - 1) * n + (nj - 1)] = cells_[offset(i, j)];
    }
  }
  dim_ = n;
  cells_ = std::move(next);
}

void TriMatrix::truncate(std::size_t new_dim) {
  if (new_dim == 0 || new_dim > dim_) {
    throw Error(ErrorKind::IndexOutOfRange, "cannot truncate dimension " + std::to_string(dim_) +
                                                " to " + std::to_string(new_dim));
  }
  std::vector<Entry> next(new_dim * new_dim, 0);
  for (std::size_t i = 1; i <= new_dim; ++i)
    for (std::size_t j = i; j <= new_dim; ++j)
      next[(i - 1) * new_dim + (j - 1)] = cells_[offset(i, j)];
  dim_ = new_dim;
  cells_ = std::move(next);
}

std::strong_ordering TriMatrix::operator<=>(const TriMatrix& other) const {
  if (auto c = dim_ <=> other.dim_; c != 0) return c;
  return std::lexicographical_compare_three_way(cells_.begin(), cells_.end(),
                                                other.cells_.begin(), other.cells_.end());
}

TriMatrix parse_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] != '#') return true;
    }
    return false;
  };
  auto tokens_of = [&](const std::string& s) {
    std::vector<Entry> values;
    std::istringstream ss(s);
    std::string tok;
    while (ss >> tok) {
      Entry v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": '" + tok +
                                               "' is not a nonnegative integer");
      }
      values.push_back(v);
    }
    return values;
  };

  if (!next_line()) throw Error(ErrorKind::ParseError, "empty input, expected dimension");
  auto header = tokens_of(line);
  if (header.size() != 1 || header[0] == 0) {
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line_no) + ": expected a positive dimension");
  }
  const std::size_t m = header[0];
  // Rows are collected before allocating so a bogus header cannot force an
  // m*m allocation.
  std::vector<std::vector<Entry>> rows;
  for (std::size_t i = 1; i <= m; ++i) {
    if (!next_line()) {
      throw Error(ErrorKind::ParseError, "expected " + std::to_string(m) + " rows, got " +
                                             std::to_string(i - 1));
    }
    auto row = tokens_of(line);
    if (row.size() != m) {
      throw Error(ErrorKind::ParseError, "row " + std::to_string(i) + " has " +
                                             std::to_string(row.size()) + " entries, expected " +
                                             std::to_string(m));
    }
    for (std::size_t j = 1; j < i; ++j) {
      if (row[j - 1] != 0) {
        throw Error(ErrorKind::ParseError, "below-diagonal cell " + cell_name(i, j) + " is nonzero");
      }
    }
    rows.push_back(std::move(row));
  }
  if (next_line()) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": trailing content");
  }
  return TriMatrix::from_rows(rows);
}

TriMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

std::string format_matrix(const TriMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TriMatrix& m) {
  os << m.dim() << '\n';
  for (std::size_t i = 1; i <= m.dim(); ++i) {
    for (std::size_t j = 1; j <= m.dim(); ++j) {
      if (j > 1) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os;
}

}  // namespace fishburn
