#include <doctest.h>

#include <limits>
#include <random>
#include <sstream>

#include "fishburn/error.hpp"
#include "fishburn/matrix_core.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace fishburn;
using namespace golden;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Unsupported;
}

TriMatrix random_upper(std::mt19937& rng, std::size_t max_dim, Entry max_entry, double density) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<Entry> val(1, max_entry);
  std::bernoulli_distribution on(density);
  TriMatrix m(dim(rng));
  for (std::size_t i = 1; i <= m.dim(); ++i)
    for (std::size_t j = i; j <= m.dim(); ++j)
      if (on(rng)) m.set(i, j, val(rng));
  return m;
}

// Random self-dual matrix: random upper half mirrored.
TriMatrix random_self_dual(std::mt19937& rng, std::size_t max_dim, double density) {
  TriMatrix m = random_upper(rng, max_dim, 2, density);
  const std::size_t d = m.dim();
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = i; j <= d; ++j)
      if (i + j < d + 1) m.set(d + 1 - j, d + 1 - i, m(i, j));
  return m;
}

}  // namespace

TEST_CASE("tri_matrix construction and indexing") {
  TriMatrix m(3);
  CHECK(m.dim() == 3);
  m.set(1, 3, 4);
  m.add(1, 3, 2);
  CHECK(m(1, 3) == 6);
  CHECK(m.row_sum(1) == 6);
  CHECK(m.col_sum(3) == 6);
  CHECK(m.row_zero(2));
  CHECK_FALSE(m.col_zero(3));
  CHECK(kind_of([] { TriMatrix(0); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([&] { (void)m(4, 4); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([&] { m.set(2, 1, 1); }) == ErrorKind::ParseError);
  m.set(2, 1, 0);
  CHECK(m(2, 1) == 0);
}

TEST_CASE("tri_matrix overflow is detected") {
  TriMatrix m(1);
  m.set(1, 1, std::numeric_limits<Entry>::max());
  CHECK(kind_of([&] { m.add(1, 1, 1); }) == ErrorKind::Overflow);
  CHECK(kind_of([] { checked_add(std::numeric_limits<Entry>::max(), 2); }) == ErrorKind::Overflow);
}

TEST_CASE("tri_matrix line insertion and removal") {
  TriMatrix m = TriMatrix::from_rows({{1, 2}, {0, 3}});
  const Entry col[] = {7};
  m.insert_line(1, col);
  CHECK(m == TriMatrix::from_rows({{1, 7, 2}, {0, 0, 0}, {0, 0, 3}}));
  m.remove_line(2);
  CHECK(m == TriMatrix::from_rows({{1, 2}, {0, 3}}));
  m.insert_line(2);
  CHECK(m.dim() == 3);
  CHECK(m.row_zero(3));
  m.truncate(2);
  CHECK(m == TriMatrix::from_rows({{1, 2}, {0, 3}}));
}

TEST_CASE("tri_matrix ordering is dimension then row-major") {
  CHECK(TriMatrix::from_rows({{5}}) < TriMatrix::from_rows({{0, 0}, {0, 1}}));
  CHECK(TriMatrix::from_rows({{0, 1}, {0, 0}}) < TriMatrix::from_rows({{1, 0}, {0, 0}}));
}

TEST_CASE("parse and format") {
  const std::string text = "# comment\n3\n1 0 2\n\n0 1 0\n0 0 4\n";
  const TriMatrix m = parse_matrix(text);
  CHECK(m == TriMatrix::from_rows({{1, 0, 2}, {0, 1, 0}, {0, 0, 4}}));
  CHECK(format_matrix(m) == "3\n1 0 2\n0 1 0\n0 0 4\n");
  std::ostringstream os;
  os << m;
  CHECK(os.str() == format_matrix(m));

  CHECK(kind_of([] { parse_matrix("2\n1 0\n1 1\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_matrix("2\n1 0 0\n0 1\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_matrix("2\n1 x\n0 1\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_matrix("2\n1 0\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_matrix("1\n1\n5\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_matrix(""); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_matrix("0\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_matrix("1\n-1\n"); }) == ErrorKind::ParseError);
  try {
    parse_matrix("2\n1 0\n3 1\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("(2,1)") != std::string::npos);
  }
}

TEST_CASE("cell classes") {
  CHECK(cell_class(5, 1, 3) == CellClass::NW);
  CHECK(cell_class(5, 2, 4) == CellClass::Diagonal);
  CHECK(cell_class(5, 3, 3) == CellClass::Diagonal);
  CHECK(cell_class(5, 4, 4) == CellClass::SE);
  CHECK(cell_class(1, 1, 1) == CellClass::Diagonal);
  CHECK(to_string(CellClass::SE) == "SE");
}

TEST_CASE("size and dual") {
  CHECK(size(A5) == 9);
  CHECK(size(A6) == 6);
  CHECK(size(TriMatrix(4)) == 0);
  CHECK(dual(dual(A5)) == A5);
  CHECK(dual(TriMatrix::from_rows({{1, 2}, {0, 3}})) == TriMatrix::from_rows({{3, 2}, {0, 1}}));
  CHECK(dual(B6) == A6_prime);
}

TEST_CASE("family predicates on fixed matrices") {
  CHECK(is_self_dual(A5));
  CHECK(is_fishburn(A5));
  CHECK_FALSE(is_self_dual(A6));
  CHECK_FALSE(is_fishburn(TriMatrix::from_rows({{1, 0}, {0, 0}})));
  CHECK(is_row_fishburn(TriMatrix::from_rows({{1, 0}, {0, 1}})));
  CHECK_FALSE(is_row_fishburn(TriMatrix::from_rows({{0, 0}, {0, 1}})));
  CHECK(is_super_triangular(R5));
  CHECK_FALSE(is_super_triangular(A5));
  CHECK(is_sm_member(A6));
  CHECK(is_sm_member(S5));
  CHECK_FALSE(is_sm_member(A6_step1));
  CHECK(is_b_member(A6_prime));
  CHECK_FALSE(is_b_member(B6));
  CHECK(is_b_member(TriMatrix::from_rows({{0}})));

  CHECK(row_fishburn_violation(TriMatrix::from_rows({{0, 0}, {0, 1}})) == "row 1 zero");
  CHECK(fishburn_violation(TriMatrix::from_rows({{1, 0}, {0, 0}})) == "row 2 zero");
  CHECK(super_triangular_violation(A5) == "SE cell (3,4) nonzero");
  CHECK(self_dual_violation(A5) == std::nullopt);
  CHECK(self_dual_violation(A6).has_value());
  CHECK(sm_violation(TriMatrix(4)).value().find("even") != std::string::npos);
}

TEST_CASE("reduce, expand and the reduced-matrix characterization") {
  CHECK(reduced_size(A5) == 5);
  CHECK(reduce(A5) == R5);
  CHECK(expand(R5) == A5);
  CHECK(satisfies_lemma1(R5));
  CHECK(kind_of([] { reduce(A6); }) == ErrorKind::NotSelfDual);
  CHECK(kind_of([] { reduced_size(A6); }) == ErrorKind::NotSelfDual);
  CHECK(kind_of([] { satisfies_lemma1(A5); }) == ErrorKind::NotSuperTriangular);
  CHECK(kind_of([] { expand(TriMatrix::from_rows({{0, 1}, {0, 0}})); }) == ErrorKind::Lemma1Violated);
  CHECK(kind_of([] { reduce(TriMatrix::from_rows({{1, 0, 0}, {0, 0, 0}, {0, 0, 1}})); }) ==
        ErrorKind::NotFishburn);
  CHECK(reduced_size(TriMatrix::from_rows({{1, 0}, {0, 1}})) == 1);
}

TEST_CASE("statistics") {
  const StatVector a = stats(A5);
  CHECK(a.size == 9);
  CHECK(a.reduced_size == 5);
  CHECK(a.first_row_sum == 2);
  CHECK(a.diag_sum == 1);
  CHECK(a.dim == 5);
  CHECK(a.dim_parity == Parity::Odd);

  const StatVector s = stats(S5);
  CHECK(s.first_row_sum == 2);
  CHECK(s.center_col_sum == 1);
  CHECK_FALSE(s.reduced_size.has_value());

  const StatVector p = stats(A6_prime);
  CHECK(p.first_row_sum == 1);
  CHECK(p.last_col_sum == 3);

  const StatVector q = stats(A6);
  CHECK(q.first_row_sum == 3);
  CHECK(q.center_col_sum == 1);

  CHECK(stats(TriMatrix(2)).dim_parity == Parity::Even);
  CHECK(stats(TriMatrix(2)).center_col_sum == 0);
}

TEST_CASE("property: predicates agree with the plain definitions on random matrices") {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 4000; ++trial) {
    const TriMatrix m = random_upper(rng, 7, 3, trial % 2 ? 0.6 : 0.3);
    CAPTURE(format_matrix(m));
    CHECK(is_fishburn(m) == oracle::fishburn(m));
    CHECK(is_row_fishburn(m) == oracle::row_fishburn(m));
    CHECK(is_self_dual(m) == oracle::self_dual(m));
    CHECK(is_super_triangular(m) == oracle::super_triangular(m));
    CHECK(is_sm_member(m) == oracle::sm(m));
    CHECK(is_b_member(m) == oracle::b(m));
    CHECK(size(m) == oracle::total(m));
    CHECK(dual(dual(m)) == m);
    CHECK(size(dual(m)) == size(m));
    CHECK(parse_matrix(format_matrix(m)) == m);
  }
}

TEST_CASE("property: reduce and expand are inverse on random self-dual Fishburn matrices") {
  std::mt19937 rng(7);
  int hits = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const TriMatrix m = random_self_dual(rng, 8, 0.5);
    CHECK(is_self_dual(m));
    if (!is_fishburn(m)) continue;
    ++hits;
    const TriMatrix r = reduce(m);
    CHECK(is_super_triangular(r));
    CHECK(satisfies_lemma1(r));
    CHECK(expand(r) == m);
    CHECK(reduced_size(m) == oracle::nw_and_diagonal_sum(m));
    CHECK(size(r) == reduced_size(m));
    CHECK(stats(m).reduced_size == reduced_size(m));
  }
  CHECK(hits > 100);
}
