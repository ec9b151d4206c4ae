#include "fishburn/bijections.hpp"

#include <stdexcept>
#include <utility>

#include "fishburn/error.hpp"
#include "fishburn/matrix_core.hpp"

namespace fishburn {

namespace {

class Recorder {
 public:
  explicit Recorder(TraceMode mode) {
    if (mode == TraceMode::On) trace_.emplace();
  }

  void record(std::string label, const TriMatrix& m) {
    if (trace_) trace_->steps.push_back({std::move(label), m});
  }

  std::optional<BijectionTrace> take() { return std::move(trace_); }

 private:
  std::optional<BijectionTrace> trace_;
};

void swap_cells(TriMatrix& m, std::size_t i, std::size_t j1, std::size_t j2) {
  const Entry a = m(i, j1);
  m.set(i, j1, m(i, j2));
  m.set(i, j2, a);
}

// Interchanges (i, k+1) with the diagonal cell (i, m+1-i) for 1 <= i <= k in a
// dimension-(2k+1) matrix. This is an involution.
void swap_center_with_diagonal(TriMatrix& m) {
  const std::size_t d = m.dim();
  const std::size_t k = (d - 1) / 2;
  for (std::size_t i = 1; i <= k; ++i) swap_cells(m, i, k + 1, d + 1 - i);
}

void require_nonempty(const TriMatrix& m) {
  if (size(m) == 0) throw Error(ErrorKind::DegenerateMatrix, "size-0 matrices are not supported");
}

void require_self_dual_fishburn(const TriMatrix& m) {
  if (auto why = self_dual_violation(m)) throw Error(ErrorKind::NotSelfDual, *why);
  if (auto why = fishburn_violation(m)) throw Error(ErrorKind::NotFishburn, *why);
}

std::string step_label(std::size_t j) { return "A(" + std::to_string(j) + ")"; }

}  // namespace

MapResult alpha(const TriMatrix& m, TraceMode mode) {
  require_self_dual_fishburn(m);
  Recorder rec(mode);
  rec.record("M", m);
  TriMatrix a = reduce(m);
  rec.record("R(M)", a);
  if (a.dim() % 2 == 0) {
    a.insert_line(a.dim() / 2);
    rec.record("inserted", a);
  }
  swap_center_with_diagonal(a);
  rec.record("alpha(M)", a);
  return {std::move(a), rec.take()};
}

TriMatrix alpha(const TriMatrix& m) { return alpha(m, TraceMode::Off).matrix; }

MapResult alpha_inv(const TriMatrix& m, TraceMode mode) {
  if (auto why = sm_violation(m)) throw Error(ErrorKind::NotSMMember, *why);
  require_nonempty(m);
  Recorder rec(mode);
  rec.record("A", m);
  TriMatrix a = m;
  swap_center_with_diagonal(a);
  rec.record("swapped", a);
  const std::size_t k = (a.dim() - 1) / 2;
  if (k >= 1 && a.row_zero(k + 1) && a.col_zero(k + 1)) {
    a.remove_line(k + 1);
    rec.record("deleted", a);
  }
  TriMatrix out = expand(a);
  rec.record("M", out);
  return {std::move(out), rec.take()};
}

TriMatrix alpha_inv(const TriMatrix& m) { return alpha_inv(m, TraceMode::Off).matrix; }

MapResult beta(const TriMatrix& a, TraceMode mode) {
  if (auto why = sm_violation(a)) throw Error(ErrorKind::NotSMMember, *why);
  require_nonempty(a);
  Recorder rec(mode);
  rec.record(step_label(0), a);

  TriMatrix cur = a;
  for (std::size_t step = 1;; ++step) {
    const std::size_t r = (cur.dim() - 1) / 2;
    std::size_t offset = 0;
    for (std::size_t t = r; t >= 1; --t) {
      if (!cur.col_zero(r + 1 + t)) {
        offset = t;
        break;
      }
    }
    if (offset == 0) break;

    const std::size_t source = r + 1 + offset;
    const std::size_t target = r + 1 - offset;
    std::vector<Entry> carried(target, 0);
    for (std::size_t row = 1; row <= source; ++row) {
      const Entry v = cur(row, source);
      if (row <= target) {
        carried[row - 1] = v;
      } else if (v != 0) {
        throw std::logic_error("insertion source column has an SE entry");
      }
      cur.set(row, source, 0);
    }
    // Content column and zero row after `target`; the emptied source column
    // now sits at source+1, and a zero line goes immediately before it.
    cur.insert_line(target, carried);
    cur.insert_line(source);
    rec.record(step_label(step), cur);
  }

  const std::size_t q = (cur.dim() - 1) / 2;
  for (std::size_t j = q + 2; j <= cur.dim(); ++j) {
    if (!cur.col_zero(j) || !cur.row_zero(j)) {
      throw std::logic_error("insertion algorithm left a nonzero trailing line");
    }
  }
  cur.truncate(q + 1);
  rec.record("B", cur);
  TriMatrix out = dual(cur);
  rec.record("A'", out);
  return {std::move(out), rec.take()};
}

MapResult beta_inv(const TriMatrix& a, TraceMode mode) {
  if (auto why = b_violation(a)) throw Error(ErrorKind::NotBMember, *why);
  require_nonempty(a);
  Recorder rec(mode);
  rec.record("A'", a);

  TriMatrix cur = dual(a);
  rec.record("B", cur);
  const std::size_t k0 = a.dim() - 1;
  for (std::size_t t = 0; t < k0; ++t) cur.insert_line(cur.dim());
  std::vector<TriMatrix> stages{cur};

  for (;;) {
    const std::size_t k = (cur.dim() - 1) / 2;
    std::size_t offset = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (cur.row_zero(k + 1 - i) && cur.col_zero(k + 1 + i)) {
        offset = i;
        break;
      }
    }
    if (offset == 0) break;
    if (k + 2 + offset > cur.dim()) {
      throw std::logic_error("removal algorithm reached the last column");
    }
    const std::size_t left = k + 1 - offset;
    for (std::size_t row = 1; row <= left; ++row) cur.add(row, k + 2 + offset, cur(row, left));
    cur.remove_line(k + 1 + offset);
    cur.remove_line(left);
    stages.push_back(cur);
  }
  if (!is_sm_member(cur)) throw std::logic_error("removal algorithm produced a non-SM matrix");

  // Stages mirror the insertion run: the padded matrix is A(l), the result A(0).
  const std::size_t l = stages.size() - 1;
  for (std::size_t s = 0; s <= l; ++s) rec.record(step_label(l - s), stages[s]);
  return {std::move(cur), rec.take()};
}

TriMatrix embed_rm_in_b(const TriMatrix& a, int add_zero_first) {
  if (auto why = row_fishburn_violation(a)) throw Error(ErrorKind::NotRowFishburn, *why);
  if (add_zero_first != 0 && add_zero_first != 1) {
    throw Error(ErrorKind::IndexOutOfRange, "flag must be 0 or 1");
  }
  TriMatrix out = a;
  if (add_zero_first == 1) out.insert_line(0);
  return out;
}

SignedRowFishburn project_b_to_signed_rm(const TriMatrix& m) {
  if (auto why = b_violation(m)) throw Error(ErrorKind::NotBMember, *why);
  require_nonempty(m);
  if (m.row_zero(1)) {
    TriMatrix out = m;
    out.remove_line(1);
    return {std::move(out), 1};
  }
  return {m, 0};
}

SignedRowFishburn selfdual_to_signed_rm(const TriMatrix& m) {
  return project_b_to_signed_rm(beta(alpha(m)).matrix);
}

TriMatrix signed_rm_to_selfdual(const SignedRowFishburn& s) {
  return alpha_inv(beta_inv(embed_rm_in_b(s.matrix, s.flag)).matrix);
}

TriMatrix em_to_sm(const TriMatrix& m) {
  require_self_dual_fishburn(m);
  if (m.dim() % 2 != 0) {
    throw Error(ErrorKind::OddDimension, "dimension " + std::to_string(m.dim()) + " is odd");
  }
  TriMatrix out = reduce(m);
  out.insert_line(out.dim() / 2);
  return out;
}

TriMatrix sm_to_em(const TriMatrix& a) {
  if (auto why = sm_violation(a)) throw Error(ErrorKind::NotSMMember, *why);
  const std::size_t k = (a.dim() - 1) / 2;
  if (k == 0 || !a.row_zero(k + 1) || !a.col_zero(k + 1)) {
    throw Error(ErrorKind::NotSMMember, "center row and column " + std::to_string(k + 1) +
                                            " must be zero with dimension at least 3");
  }
  TriMatrix out = a;
  out.remove_line(k + 1);
  return expand(out);
}

}  // namespace fishburn
