#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fishburn/tri_matrix.hpp"

namespace fishburn {

// Matrix families. SelfDual is sized by reduced size, the others by size.
// Super (super triangular matrices) is a membership-only family: it has no
// dimension bound, so it cannot be enumerated.
enum class FamilyTag { Fishburn, SelfDual, RM, SM, B, Super };

std::string_view to_string(FamilyTag f);
std::optional<FamilyTag> parse_family(std::string_view name);

// Nullopt when m belongs to the family, otherwise a 1-based reason.
std::optional<std::string> family_violation(FamilyTag f, const TriMatrix& m);
bool is_member(FamilyTag f, const TriMatrix& m);
// Size notion of the family: reduced size for SelfDual, size otherwise.
Entry family_size(FamilyTag f, const TriMatrix& m);

// Largest dimension a member of size n can have.
std::size_t max_dimension(FamilyTag f, std::size_t n);

// Visits every member of family f with size n exactly once, in ascending
// dimension and then lexicographic row-major order. Throws Unsupported for
// Super and for n == 0.
void for_each_member(FamilyTag f, std::size_t n, const std::function<void(const TriMatrix&)>& visit);
std::vector<TriMatrix> enumerate_family(FamilyTag f, std::size_t n);

enum class ParityKey { Even, Odd, Any };
std::string_view to_string(ParityKey p);

struct CountKey {
  Entry k = 0;
  Entry p = 0;
  ParityKey parity = ParityKey::Any;

  auto operator<=>(const CountKey&) const = default;
};

// Refined counts. Keys per family:
//   SelfDual: (first-row sum, diagonal sum, dimension parity)
//   RM, B:    (last-column sum, first-row sum, ANY)
//   SM:       (first-row sum, center-column sum, ANY)
//   Fishburn: (first-row sum, last-column sum, ANY)
struct CountTable {
  FamilyTag family = FamilyTag::RM;
  std::size_t n = 0;
  std::map<CountKey, std::uint64_t> cells;
  std::uint64_t total = 0;

  void add(const CountKey& key, std::uint64_t count = 1);
  std::uint64_t sum_where(const std::function<bool(const CountKey&)>& pred) const;

  bool operator==(const CountTable&) const = default;
};

// Adds every cell of `other` into `into`; the tables must describe the same
// family and n.
void merge(CountTable& into, const CountTable& other);

CountKey count_key(FamilyTag f, const TriMatrix& m);
CountTable count_refined(FamilyTag f, std::size_t n);

// Canonical serializations, rows ordered by (k, p, parity).
std::string to_csv(const CountTable& t);
std::string to_json(const CountTable& t);

enum class Identity { EQ1, EQ2, EQ3, EQ4, EQ8 };
std::string_view to_string(Identity id);
std::optional<Identity> parse_identity(std::string_view name);
const std::vector<Identity>& all_identities();

struct IdentityReport {
  Identity identity = Identity::EQ1;
  std::size_t n = 0;
  bool counts_ok = false;
  bool transport_ok = false;
  std::string summary;
  std::string failure;
  std::optional<TriMatrix> counterexample;

  bool passed() const { return counts_ok && transport_ok; }
};

// Checks one identity at size n by comparing refined counts and by pushing
// every member through the corresponding bijection chain.
IdentityReport verify_identity(Identity id, std::size_t n);

}  // namespace fishburn
