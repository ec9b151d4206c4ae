#include "fishburn/enumeration.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "fishburn/error.hpp"
#include "fishburn/matrix_core.hpp"

namespace fishburn {

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

// Cell pattern and nonzero obligations for one dimension of one family.
struct Shape {
  std::size_t dim = 1;
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // allowed, row-major
  std::vector<char> row_required;                          // 1-based
  std::vector<char> col_required;                          // 1-based
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // row r or column c nonzero

  explicit Shape(std::size_t m) : dim(m), row_required(m + 1, 0), col_required(m + 1, 0) {}

  void allow_all() {
    for (std::size_t i = 1; i <= dim; ++i)
      for (std::size_t j = i; j <= dim; ++j) cells.emplace_back(i, j);
  }
  void allow_non_se() {
    for (std::size_t i = 1; i <= dim; ++i)
      for (std::size_t j = i; i + j <= dim + 1; ++j) cells.emplace_back(i, j);
  }
};

Shape shape_for(FamilyTag f, std::size_t m) {
  Shape s(m);
  switch (f) {
    case FamilyTag::RM:
      s.allow_all();
      std::fill(s.row_required.begin() + 1, s.row_required.end(), 1);
      break;
    case FamilyTag::Fishburn:
      s.allow_all();
      std::fill(s.row_required.begin() + 1, s.row_required.end(), 1);
      std::fill(s.col_required.begin() + 1, s.col_required.end(), 1);
      break;
    case FamilyTag::B:
      s.allow_all();
      std::fill(s.row_required.begin() + 2, s.row_required.end(), 1);
      break;
    case FamilyTag::SM: {
      s.allow_non_se();
      const std::size_t k = (m - 1) / 2;
      for (std::size_t i = 1; i <= k; ++i) {
        s.col_required[i] = 1;
        s.pairs.emplace_back(k + 1 - i, k + 1 + i);
      }
      break;
    }
    case FamilyTag::SelfDual: {
      // Reduced matrices: super triangular with the column and row-or-column conditions.
      s.allow_non_se();
      for (std::size_t i = 1; i <= (m + 1) / 2; ++i) {
        s.col_required[i] = 1;
        s.pairs.emplace_back(i, m + 1 - i);
      }
      break;
    }
    case FamilyTag::Super:
      throw Error(ErrorKind::Unsupported, "SUPER has no dimension bound and cannot be enumerated");
  }
  return s;
}

// Depth-first filling of the allowed cells with pruning on the remaining
// budget and on rows/columns whose last allowed cell has been assigned.
class ShapeSearch {
 public:
  ShapeSearch(const Shape& shape, Entry budget, const std::function<void(const TriMatrix&)>& emit)
      : shape_(shape),
        budget_(budget),
        emit_(emit),
        work_(shape.dim),
        row_total_(shape.dim + 1, 0),
        col_total_(shape.dim + 1, 0),
        after_(shape.cells.size()) {}

  void run() {
    const std::size_t m = shape_.dim;
    std::vector<std::size_t> row_close(m + 1, kNone), col_close(m + 1, kNone);
    for (std::size_t pos = 0; pos < shape_.cells.size(); ++pos) {
      // Row-major order: the last write is the closing cell.
      row_close[shape_.cells[pos].first] = pos;
      col_close[shape_.cells[pos].second] = pos;
    }
    for (std::size_t r = 1; r <= m; ++r) {
      if (!shape_.row_required[r]) continue;
      if (row_close[r] == kNone) return;
      after_[row_close[r]].rows.push_back(r);
      ++rows_unsat_;
    }
    for (std::size_t c = 1; c <= m; ++c) {
      if (!shape_.col_required[c]) continue;
      if (col_close[c] == kNone) return;
      after_[col_close[c]].cols.push_back(c);
      ++cols_unsat_;
    }
    for (std::size_t idx = 0; idx < shape_.pairs.size(); ++idx) {
      const auto [r, c] = shape_.pairs[idx];
      const std::size_t a = row_close[r], b = col_close[c];
      if (a == kNone && b == kNone) return;
      const std::size_t at = a == kNone ? b : b == kNone ? a : std::max(a, b);
      after_[at].pairs.push_back(idx);
    }
    if (shape_.cells.empty()) return;
    dfs(0, budget_);
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct Checks {
    std::vector<std::size_t> rows, cols, pairs;
  };

  bool checks_pass(std::size_t pos) const {
    const Checks& c = after_[pos];
    for (std::size_t r : c.rows)
      if (row_total_[r] == 0) return false;
    for (std::size_t col : c.cols)
      if (col_total_[col] == 0) return false;
    for (std::size_t idx : c.pairs) {
      const auto [r, col] = shape_.pairs[idx];
      if (row_total_[r] == 0 && col_total_[col] == 0) return false;
    }
    return true;
  }

  void assign(std::size_t i, std::size_t j, Entry v) {
    if (v == 0) return;
    if (row_total_[i] == 0 && shape_.row_required[i]) --rows_unsat_;
    if (col_total_[j] == 0 && shape_.col_required[j]) --cols_unsat_;
    row_total_[i] += v;
    col_total_[j] += v;
    work_.set(i, j, v);
  }

  void unassign(std::size_t i, std::size_t j, Entry v) {
    if (v == 0) return;
    row_total_[i] -= v;
    col_total_[j] -= v;
    if (row_total_[i] == 0 && shape_.row_required[i]) ++rows_unsat_;
    if (col_total_[j] == 0 && shape_.col_required[j]) ++cols_unsat_;
    work_.set(i, j, 0);
  }

  void dfs(std::size_t pos, Entry remaining) {
    if (pos == shape_.cells.size()) {
      if (remaining == 0) emit_(work_);
      return;
    }
    const auto [i, j] = shape_.cells[pos];
    const bool last = pos + 1 == shape_.cells.size();
    for (Entry v = last ? remaining : 0; v <= remaining; ++v) {
      assign(i, j, v);
      const bool feasible = remaining - v >= std::max(rows_unsat_, cols_unsat_);
      if (feasible && checks_pass(pos)) dfs(pos + 1, remaining - v);
      unassign(i, j, v);
      // Beyond v = 1 a larger value satisfies nothing new.
      if (!feasible && v > 0) break;
    }
  }

  const Shape& shape_;
  Entry budget_;
  const std::function<void(const TriMatrix&)>& emit_;
  TriMatrix work_;
  std::vector<Entry> row_total_, col_total_;
  std::vector<Checks> after_;
  std::size_t rows_unsat_ = 0, cols_unsat_ = 0;
};

}  // namespace

std::string_view to_string(FamilyTag f) {
  switch (f) {
    case FamilyTag::Fishburn: return "FISHBURN";
    case FamilyTag::SelfDual: return "SELF_DUAL";
    case FamilyTag::RM: return "RM";
    case FamilyTag::SM: return "SM";
    case FamilyTag::B: return "B";
    case FamilyTag::Super: return "SUPER";
  }
  return "?";
}

std::optional<FamilyTag> parse_family(std::string_view name) {
  const std::string u = upper(name);
  for (FamilyTag f : {FamilyTag::Fishburn, FamilyTag::SelfDual, FamilyTag::RM, FamilyTag::SM,
                      FamilyTag::B, FamilyTag::Super}) {
    if (u == to_string(f)) return f;
  }
  return std::nullopt;
}

std::optional<std::string> family_violation(FamilyTag f, const TriMatrix& m) {
  switch (f) {
    case FamilyTag::Fishburn: return fishburn_violation(m);
    case FamilyTag::SelfDual:
      if (auto why = fishburn_violation(m)) return why;
      return self_dual_violation(m);
    case FamilyTag::RM: return row_fishburn_violation(m);
    case FamilyTag::SM: return sm_violation(m);
    case FamilyTag::B: return b_violation(m);
    case FamilyTag::Super: return super_triangular_violation(m);
  }
  return "unknown family";
}

bool is_member(FamilyTag f, const TriMatrix& m) { return !family_violation(f, m); }

Entry family_size(FamilyTag f, const TriMatrix& m) {
  return f == FamilyTag::SelfDual ? reduced_size(m) : size(m);
}

std::size_t max_dimension(FamilyTag f, std::size_t n) {
  switch (f) {
    case FamilyTag::Fishburn:
    case FamilyTag::RM: return n;
    case FamilyTag::SelfDual: return 2 * n;
    case FamilyTag::SM: return 2 * n + 1;
    case FamilyTag::B: return n + 1;
    case FamilyTag::Super: break;
  }
  throw Error(ErrorKind::Unsupported, "SUPER has no dimension bound");
}

void for_each_member(FamilyTag f, std::size_t n,
                     const std::function<void(const TriMatrix&)>& visit) {
  if (n == 0) throw Error(ErrorKind::Unsupported, "family size must be at least 1");
  const std::size_t max_dim = max_dimension(f, n);
  const std::size_t step = f == FamilyTag::SM ? 2 : 1;
  std::function<void(const TriMatrix&)> emit = visit;
  if (f == FamilyTag::SelfDual) emit = [&visit](const TriMatrix& r) { visit(expand(r)); };
  for (std::size_t m = 1; m <= max_dim; m += step) {
    const Shape shape = shape_for(f, m);
    ShapeSearch(shape, n, emit).run();
  }
}

std::vector<TriMatrix> enumerate_family(FamilyTag f, std::size_t n) {
  std::vector<TriMatrix> out;
  for_each_member(f, n, [&out](const TriMatrix& m) { out.push_back(m); });
  return out;
}

std::string_view to_string(ParityKey p) {
  switch (p) {
    case ParityKey::Even: return "EVEN";
    case ParityKey::Odd: return "ODD";
    case ParityKey::Any: return "ANY";
  }
  return "?";
}

void CountTable::add(const CountKey& key, std::uint64_t count) {
  auto& cell = cells[key];
  cell = checked_add(cell, count);
  total = checked_add(total, count);
}

std::uint64_t CountTable::sum_where(const std::function<bool(const CountKey&)>& pred) const {
  std::uint64_t s = 0;
  for (const auto& [key, count] : cells)
    if (pred(key)) s = checked_add(s, count);
  return s;
}

void merge(CountTable& into, const CountTable& other) {
  if (into.family != other.family || into.n != other.n) {
    throw Error(ErrorKind::Unsupported, "cannot merge count tables of different families or sizes");
  }
  for (const auto& [key, count] : other.cells) into.add(key, count);
}

CountKey count_key(FamilyTag f, const TriMatrix& m) {
  const StatVector s = stats(m);
  switch (f) {
    case FamilyTag::SelfDual:
      return {s.first_row_sum, s.diag_sum,
              s.dim_parity == Parity::Even ? ParityKey::Even : ParityKey::Odd};
    case FamilyTag::RM:
    case FamilyTag::B: return {s.last_col_sum, s.first_row_sum, ParityKey::Any};
    case FamilyTag::SM: return {s.first_row_sum, s.center_col_sum, ParityKey::Any};
    case FamilyTag::Fishburn: return {s.first_row_sum, s.last_col_sum, ParityKey::Any};
    case FamilyTag::Super: break;
  }
  throw Error(ErrorKind::Unsupported, "SUPER has no refined count table");
}

CountTable count_refined(FamilyTag f, std::size_t n) {
  CountTable table{f, n, {}, 0};
  for_each_member(f, n, [&](const TriMatrix& m) { table.add(count_key(f, m)); });
  return table;
}

std::string to_csv(const CountTable& t) {
  std::ostringstream os;
  os << "family,n,k,p,parity,count\n";
  for (const auto& [key, count] : t.cells) {
    os << to_string(t.family) << ',' << t.n << ',' << key.k << ',' << key.p << ','
       << to_string(key.parity) << ',' << count << '\n';
  }
  return os.str();
}

std::string to_json(const CountTable& t) {
  nlohmann::ordered_json doc;
  doc["family"] = to_string(t.family);
  doc["n"] = t.n;
  doc["total"] = t.total;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& [key, count] : t.cells) {
    nlohmann::ordered_json row;
    row["family"] = to_string(t.family);
    row["n"] = t.n;
    row["k"] = key.k;
    row["p"] = key.p;
    row["parity"] = to_string(key.parity);
    row["count"] = count;
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace fishburn
