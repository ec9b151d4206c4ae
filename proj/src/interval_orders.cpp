#include "fishburn/interval_orders.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

#include "fishburn/enumeration.hpp"
#include "fishburn/error.hpp"
#include "fishburn/matrix_core.hpp"

namespace fishburn {

Poset::Poset(std::size_t n) : n_(n), rel_(n * n, 0) {
  if (n == 0) throw Error(ErrorKind::InvalidPoset, "a poset needs at least one element");
}

Poset Poset::from_pairs(std::size_t n,
                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Poset p(n);
  for (const auto& [x, y] : pairs) {
    if (x < 1 || y < 1 || x > n || y > n) {
      throw Error(ErrorKind::InvalidPoset, "pair (" + std::to_string(x) + "," + std::to_string(y) +
                                               ") outside elements 1.." + std::to_string(n));
    }
    p.rel_[p.idx(x, y)] = 1;
  }
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = 1; i <= n; ++i)
      if (p.rel_[p.idx(i, k)])
        for (std::size_t j = 1; j <= n; ++j)
          if (p.rel_[p.idx(k, j)]) p.rel_[p.idx(i, j)] = 1;
  for (std::size_t x = 1; x <= n; ++x) {
    if (p.rel_[p.idx(x, x)]) {
      throw Error(ErrorKind::InvalidPoset, "relation has a cycle through element " + std::to_string(x));
    }
  }
  return p;
}

Poset Poset::chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 1; x < n; ++x) pairs.emplace_back(x, x + 1);
  return from_pairs(n, pairs);
}

bool Poset::less(std::size_t x, std::size_t y) const {
  if (x < 1 || y < 1 || x > n_ || y > n_) {
    throw Error(ErrorKind::IndexOutOfRange, "element outside 1.." + std::to_string(n_));
  }
  return rel_[idx(x, y)] != 0;
}

std::size_t Poset::down_degree(std::size_t x) const {
  std::size_t d = 0;
  for (std::size_t y = 1; y <= n_; ++y) d += less(y, x);
  return d;
}

std::size_t Poset::up_degree(std::size_t x) const {
  std::size_t d = 0;
  for (std::size_t y = 1; y <= n_; ++y) d += less(x, y);
  return d;
}

bool is_interval_order(const Poset& p) {
  const std::size_t n = p.size();
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; b <= n; ++b) {
      if (!p.less(a, b)) continue;
      for (std::size_t c = 1; c <= n; ++c) {
        if (p.comparable(a, c) || p.comparable(b, c)) continue;
        for (std::size_t d = 1; d <= n; ++d) {
          if (p.less(c, d) && !p.comparable(a, d) && !p.comparable(b, d)) return false;
        }
      }
    }
  return true;
}

namespace {

using Set = std::vector<char>;

Set down_set(const Poset& p, std::size_t x) {
  Set s(p.size(), 0);
  for (std::size_t y = 1; y <= p.size(); ++y) s[y - 1] = p.less(y, x);
  return s;
}

Set up_set(const Poset& p, std::size_t x) {
  Set s(p.size(), 0);
  for (std::size_t y = 1; y <= p.size(); ++y) s[y - 1] = p.less(x, y);
  return s;
}

bool subset(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

std::size_t cardinality(const Set& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), 1)); }

// Distinct sets sorted by cardinality; nullopt if they are not a chain.
std::optional<std::vector<Set>> as_chain(std::vector<Set> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::stable_sort(sets.begin(), sets.end(),
                   [](const Set& a, const Set& b) { return cardinality(a) < cardinality(b); });
  for (std::size_t i = 1; i < sets.size(); ++i)
    if (!subset(sets[i - 1], sets[i])) return std::nullopt;
  return sets;
}

std::size_t index_in(const std::vector<Set>& chain, const Set& s) {
  return static_cast<std::size_t>(std::find(chain.begin(), chain.end(), s) - chain.begin());
}

}  // namespace

bool down_sets_form_chain(const Poset& p) {
  std::vector<Set> downs;
  for (std::size_t x = 1; x <= p.size(); ++x) downs.push_back(down_set(p, x));
  return as_chain(std::move(downs)).has_value();
}

LevelDecomposition level_decomposition(const Poset& p) {
  if (!is_interval_order(p)) throw Error(ErrorKind::NotIntervalOrder, "poset contains an induced 2+2");
  const std::size_t n = p.size();
  std::vector<Set> downs, ups;
  for (std::size_t x = 1; x <= n; ++x) {
    downs.push_back(down_set(p, x));
    ups.push_back(up_set(p, x));
  }
  auto down_chain = as_chain(downs);
  auto up_chain = as_chain(ups);
  if (!down_chain || !up_chain || down_chain->size() != up_chain->size()) {
    throw Error(ErrorKind::NotIntervalOrder, "strict down-sets or up-sets do not form a chain");
  }
  // Up-sets are indexed in decreasing order: U_1 is the largest.
  std::reverse(up_chain->begin(), up_chain->end());

  LevelDecomposition dec;
  dec.magnitude = down_chain->size();
  for (std::size_t x = 1; x <= n; ++x) {
    dec.level.push_back(index_in(*down_chain, downs[x - 1]) + 1);
    dec.up_level.push_back(index_in(*up_chain, ups[x - 1]) + 1);
  }
  return dec;
}

TriMatrix poset_to_fishburn(const Poset& p) {
  const LevelDecomposition dec = level_decomposition(p);
  TriMatrix m(dec.magnitude);
  for (std::size_t x = 0; x < p.size(); ++x) m.add(dec.level[x], dec.up_level[x], 1);
  return m;
}

Poset fishburn_to_poset(const TriMatrix& m) {
  if (auto why = fishburn_violation(m)) throw Error(ErrorKind::NotFishburn, *why);
  std::vector<std::pair<std::size_t, std::size_t>> labels;
  for (std::size_t i = 1; i <= m.dim(); ++i)
    for (std::size_t j = i; j <= m.dim(); ++j)
      for (Entry c = 0; c < m(i, j); ++c) labels.emplace_back(i, j);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < labels.size(); ++x)
    for (std::size_t y = 0; y < labels.size(); ++y)
      if (labels[x].second < labels[y].first) pairs.emplace_back(x + 1, y + 1);
  return Poset::from_pairs(labels.size(), pairs);
}

Poset dual_poset(const Poset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 1; x <= p.size(); ++x)
    for (std::size_t y = 1; y <= p.size(); ++y)
      if (p.less(x, y)) pairs.emplace_back(y, x);
  return Poset::from_pairs(p.size(), pairs);
}

namespace {

using Invariant = std::pair<std::size_t, std::size_t>;

std::vector<Invariant> invariants(const Poset& p) {
  std::vector<Invariant> inv;
  for (std::size_t x = 1; x <= p.size(); ++x) inv.emplace_back(p.down_degree(x), p.up_degree(x));
  return inv;
}

bool extend_isomorphism(const Poset& p, const Poset& q, const std::vector<Invariant>& pinv,
                        const std::vector<Invariant>& qinv, std::vector<std::size_t>& f,
                        std::vector<char>& used, std::size_t x) {
  const std::size_t n = p.size();
  if (x > n) return true;
  for (std::size_t y = 1; y <= n; ++y) {
    if (used[y - 1] || pinv[x - 1] != qinv[y - 1]) continue;
    bool ok = true;
    for (std::size_t w = 1; w < x && ok; ++w) {
      ok = p.less(w, x) == q.less(f[w - 1], y) && p.less(x, w) == q.less(y, f[w - 1]);
    }
    if (!ok) continue;
    f[x - 1] = y;
    used[y - 1] = 1;
    if (extend_isomorphism(p, q, pinv, qinv, f, used, x + 1)) return true;
    used[y - 1] = 0;
  }
  return false;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Poset& p) : p_(p), inv_(invariants(p)) {
    slots_ = inv_;
    std::sort(slots_.begin(), slots_.end());
    order_.reserve(p.size());
    used_.assign(p.size(), 0);
  }

  std::string run() {
    std::string header;
    for (const auto& [d, u] : slots_) header += std::to_string(d) + "," + std::to_string(u) + ";";
    search(std::string());
    return header + "|" + best_;
  }

 private:
  // Encoding bits for position t are emitted as soon as element t is placed,
  // so prefixes can be compared against the best complete encoding.
  void search(const std::string& code) {
    if (found_ && code.compare(0, code.size(), best_, 0, code.size()) > 0) return;
    const std::size_t t = order_.size();
    if (t == p_.size()) {
      if (!found_ || code < best_) best_ = code;
      found_ = true;
      return;
    }
    for (std::size_t x = 1; x <= p_.size(); ++x) {
      if (used_[x - 1] || inv_[x - 1] != slots_[t]) continue;
      std::string next = code;
      for (std::size_t s = 0; s < t; ++s) {
        next += p_.less(order_[s], x) ? '1' : '0';
        next += p_.less(x, order_[s]) ? '1' : '0';
      }
      used_[x - 1] = 1;
      order_.push_back(x);
      search(next);
      order_.pop_back();
      used_[x - 1] = 0;
    }
  }

  const Poset& p_;
  std::vector<Invariant> inv_, slots_;
  std::vector<std::size_t> order_;
  std::vector<char> used_;
  std::string best_;
  bool found_ = false;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return std::nullopt;
  auto pinv = invariants(p), qinv = invariants(q);
  auto ps = pinv, qs = qinv;
  std::sort(ps.begin(), ps.end());
  std::sort(qs.begin(), qs.end());
  if (ps != qs) return std::nullopt;
  std::vector<std::size_t> f(p.size(), 0);
  std::vector<char> used(p.size(), 0);
  if (!extend_isomorphism(p, q, pinv, qinv, f, used, 1)) return std::nullopt;
  return f;
}

bool are_isomorphic(const Poset& p, const Poset& q) { return find_isomorphism(p, q).has_value(); }

bool is_self_dual_poset(const Poset& p) { return are_isomorphic(p, dual_poset(p)); }

std::string canonical_form(const Poset& p) { return CanonicalSearch(p).run(); }

Entry reduced_size_of_interval_order(const Poset& p) {
  const TriMatrix m = poset_to_fishburn(p);
  if (!is_self_dual_poset(p)) throw Error(ErrorKind::NotSelfDual, "poset is not isomorphic to its dual");
  if (auto why = self_dual_violation(m)) throw Error(ErrorKind::NotSelfDualMatrix, *why);
  return reduced_size(m);
}

std::uint64_t count_self_dual_interval_orders(std::size_t n) {
  std::uint64_t count = 0;
  for (std::size_t elements = n; elements <= 2 * n; ++elements) {
    for_each_member(FamilyTag::Fishburn, elements, [&](const TriMatrix& m) {
      const Poset p = fishburn_to_poset(m);
      if (is_self_dual_poset(p) && reduced_size_of_interval_order(p) == n) ++count;
    });
  }
  return count;
}

Poset parse_poset(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto read_numbers = [&](const std::string& s) {
    std::vector<std::size_t> values;
    std::istringstream ss(s);
    std::string tok;
    while (ss >> tok) {
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": '" + tok +
                                               "' is not a nonnegative integer");
      }
      values.push_back(v);
    }
    return values;
  };

  std::optional<std::size_t> n;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto first = line.find_first_not_of(" \t\r");
        first != std::string::npos && line[first] == '#') {
      continue;
    }
    auto values = read_numbers(line);
    if (values.empty()) continue;
    if (!n) {
      if (values.size() != 1 || values[0] == 0) {
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line_no) + ": expected a positive element count");
      }
      n = values[0];
      continue;
    }
    if (values.size() != 2) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected a pair 'x y'");
    }
    if (values[0] < 1 || values[1] < 1 || values[0] > *n || values[1] > *n) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": element outside 1.." +
                                             std::to_string(*n));
    }
    pairs.emplace_back(values[0], values[1]);
  }
  if (!n) throw Error(ErrorKind::ParseError, "empty input, expected element count");
  return Poset::from_pairs(*n, pairs);
}

Poset parse_poset(const std::string& text) {
  std::istringstream in(text);
  return parse_poset(in);
}

std::string format_poset(const Poset& p) {
  std::ostringstream os;
  os << p.size() << '\n';
  for (std::size_t x = 1; x <= p.size(); ++x)
    for (std::size_t y = 1; y <= p.size(); ++y)
      if (p.less(x, y)) os << x << ' ' << y << '\n';
  return os.str();
}

}  // namespace fishburn
