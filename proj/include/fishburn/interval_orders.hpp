#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fishburn/tri_matrix.hpp"

namespace fishburn {

// Finite strict partial order on elements 1..n, stored as the full relation.
class Poset {
 public:
  // Antichain on n >= 1 elements.
  explicit Poset(std::size_t n);

  // Transitive closure of the given covering pairs (x, y) meaning x < y.
  // Throws InvalidPoset on a cycle or an out-of-range label.
  static Poset from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  static Poset chain(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool less(std::size_t x, std::size_t y) const;
  bool comparable(std::size_t x, std::size_t y) const { return less(x, y) || less(y, x); }

  std::size_t down_degree(std::size_t x) const;
  std::size_t up_degree(std::size_t x) const;

  bool operator==(const Poset&) const = default;

 private:
  std::size_t idx(std::size_t x, std::size_t y) const { return (x - 1) * n_ + (y - 1); }

  std::size_t n_;
  std::vector<char> rel_;
};

// No induced 2+2: no a<b, c<d with {a,b} incomparable to {c,d}.
bool is_interval_order(const Poset& p);
// Strict down-sets totally ordered by inclusion (equivalent characterization).
bool down_sets_form_chain(const Poset& p);

struct LevelDecomposition {
  std::size_t magnitude = 0;
  // Indexed by element - 1; values in 1..magnitude.
  std::vector<std::size_t> level;
  std::vector<std::size_t> up_level;
};

// Throws NotIntervalOrder.
LevelDecomposition level_decomposition(const Poset& p);

// M(i,j) counts elements of level i and up-level j. Throws NotIntervalOrder.
TriMatrix poset_to_fishburn(const Poset& p);

// Places M(i,j) elements labeled (i,j), grouped in row-major order, with
// (i,j) < (i',j') iff j < i'. Throws NotFishburn.
Poset fishburn_to_poset(const TriMatrix& m);

Poset dual_poset(const Poset& p);

// Order isomorphism q_label = f[p_label - 1], or nullopt. Backtracking with
// (down-degree, up-degree) pruning.
std::optional<std::vector<std::size_t>> find_isomorphism(const Poset& p, const Poset& q);
bool are_isomorphic(const Poset& p, const Poset& q);
bool is_self_dual_poset(const Poset& p);

// Isomorphism-invariant encoding: equal iff the posets are isomorphic.
std::string canonical_form(const Poset& p);

// Reduced size of the matrix image. Throws NotIntervalOrder, NotSelfDual (poset
// not self-dual), NotSelfDualMatrix (matrix image not self-dual).
Entry reduced_size_of_interval_order(const Poset& p);

// Self-dual interval orders of reduced size n, up to isomorphism, decided on
// the poset side: every interval order of n..2n elements is generated from
// its Fishburn matrix and tested with the isomorphism search.
std::uint64_t count_self_dual_interval_orders(std::size_t n);

// Text format: first line n, then one "x y" pair per line meaning x < y.
// Blank lines and '#' comment lines are skipped.
Poset parse_poset(std::istream& in);
Poset parse_poset(const std::string& text);
// Writes the full relation as pairs, in lexicographic order.
std::string format_poset(const Poset& p);

}  // namespace fishburn
