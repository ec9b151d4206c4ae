#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// predicates or generators, so agreement is evidence rather than tautology.

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "fishburn/enumeration.hpp"
#include "fishburn/tri_matrix.hpp"

namespace oracle {

using fishburn::Entry;
using fishburn::FamilyTag;
using fishburn::TriMatrix;

// Plain predicates written from the definitions, scanning every cell.
bool fishburn(const TriMatrix& m);
bool row_fishburn(const TriMatrix& m);
bool self_dual(const TriMatrix& m);
bool super_triangular(const TriMatrix& m);
bool sm(const TriMatrix& m);
bool b(const TriMatrix& m);
Entry total(const TriMatrix& m);
Entry nw_and_diagonal_sum(const TriMatrix& m);

// Every upper-triangular matrix of dimension d whose entries sum to s.
void for_each_upper(std::size_t d, Entry s, const std::function<void(const TriMatrix&)>& visit);

// Family members of size n found by filtering all upper-triangular matrices
// within the dimension bound. Self-dual matrices are generated from every
// assignment of the on-or-above-antidiagonal cells, mirrored, then filtered.
std::set<TriMatrix> brute_force_family(FamilyTag f, std::size_t n);

// Labeled posets on n <= 4 elements, stored as n*n relation bitmaps.
using Relation = std::vector<char>;
std::vector<Relation> all_posets(std::size_t n);
bool two_plus_two_free(const Relation& r, std::size_t n);
// Lexicographically least relation over all n! relabelings.
Relation canonical(const Relation& r, std::size_t n);
Relation dual(const Relation& r, std::size_t n);

// Interval orders on n elements, up to isomorphism.
std::size_t interval_order_classes(std::size_t n);
// Self-dual interval orders on n elements, up to isomorphism.
std::size_t self_dual_interval_order_classes(std::size_t n);

}  // namespace oracle
