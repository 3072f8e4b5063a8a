#include "doctest.h"

#include <random>

#include "coarsek/integer_matrix.hpp"

using namespace coarsek;

namespace {

IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

Integer det_small(const IntegerMatrix& m) {
  if (m.rows() == 1) return m(0, 0);
  if (m.rows() == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Integer d = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    IntegerMatrix minor(m.rows() - 1, m.cols() - 1);
    for (std::size_t r = 1; r < m.rows(); ++r)
      for (std::size_t k = 0, j = 0; k < m.cols(); ++k)
        if (k != c) minor(r - 1, j++) = m(r, k);
    d += (c % 2 ? -1 : 1) * m(0, c) * det_small(minor);
  }
  return d;
}

}  // namespace

TEST_CASE("Smith form of a matrix with torsion") {
  const IntegerMatrix a = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const SmithForm s = smith_normal_form(a);
  CHECK(s.divisors == std::vector<Integer>{2, 6, 12});
  CHECK(s.left * a * s.right == s.diagonal);
  CHECK(std::abs(det_small(s.left)) == 1);
  CHECK(std::abs(det_small(s.right)) == 1);
}

TEST_CASE("Smith form of rank-deficient and empty matrices") {
  const SmithForm s = smith_normal_form(from_rows({{1, 2}, {2, 4}}));
  CHECK(s.divisors == std::vector<Integer>{1});
  CHECK(smith_normal_form(IntegerMatrix(0, 3)).rank() == 0);
  CHECK(smith_normal_form(IntegerMatrix(2, 2)).rank() == 0);
}

TEST_CASE("random Smith forms are unimodular factorizations with a divisibility chain") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Integer> v(-4, 4);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  for (int t = 0; t < 200; ++t) {
    IntegerMatrix a(dim(rng), dim(rng));
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = v(rng);
    const SmithForm s = smith_normal_form(a);
    REQUIRE(s.left * a * s.right == s.diagonal);
    CHECK(std::abs(det_small(s.left)) == 1);
    CHECK(std::abs(det_small(s.right)) == 1);
    for (std::size_t i = 0; i + 1 < s.divisors.size(); ++i) CHECK(s.divisors[i + 1] % s.divisors[i] == 0);
    CHECK(s.rank() == rational_rank(a));
    if (a.rows() == a.cols()) {
      Integer prod = 1;
      for (Integer d : s.divisors) prod *= d;
      CHECK(std::abs(det_small(a)) == (s.rank() == a.rows() ? prod : 0));
    }
  }
}

TEST_CASE("rational rank") {
  CHECK(rational_rank(IntegerMatrix::identity(4)) == 4);
  CHECK(rational_rank(from_rows({{1, 1, 0}, {0, 1, 1}, {1, 2, 1}})) == 2);
}
