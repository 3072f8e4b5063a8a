#include "coarsek/integer_matrix.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

namespace coarsek {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
  if (cols_ != other.rows_) throw PreconditionError("matrix product dimension mismatch");
  IntegerMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Integer a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(a, other(k, j)));
    }
  return out;
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] -= q * row[src]
void row_axpy(IntegerMatrix& m, std::size_t dst, std::size_t src, Integer q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m(src, c) != 0) m(dst, c) = checked_sub(m(dst, c), checked_mul(q, m(src, c)));
}

void col_axpy(IntegerMatrix& m, std::size_t dst, std::size_t src, Integer q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m(r, src) != 0) m(r, dst) = checked_sub(m(r, dst), checked_mul(q, m(r, src)));
}

Integer floor_div(Integer a, Integer b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntegerMatrix d = a;
  IntegerMatrix left = IntegerMatrix::identity(m);
  IntegerMatrix right = IntegerMatrix::identity(n);

  std::size_t t = 0;
  while (t < m && t < n) {
    // Smallest nonzero |entry| in the trailing block becomes the pivot.
    bool found = false;
    std::size_t pr = t, pc = t;
    for (std::size_t r = t; r < m; ++r)
      for (std::size_t c = t; c < n; ++c)
        if (d(r, c) != 0 && (!found || std::abs(d(r, c)) < std::abs(d(pr, pc)))) {
          found = true;
          pr = r;
          pc = c;
        }
    if (!found) break;
    swap_rows(d, t, pr);
    swap_rows(left, t, pr);
    swap_cols(d, t, pc);
    swap_cols(right, t, pc);

    bool clean = true;
    for (std::size_t r = t + 1; r < m; ++r) {
      Integer q = floor_div(d(r, t), d(t, t));
      row_axpy(d, r, t, q);
      row_axpy(left, r, t, q);
      if (d(r, t) != 0) clean = false;
    }
    for (std::size_t c = t + 1; c < n; ++c) {
      Integer q = floor_div(d(t, c), d(t, t));
      col_axpy(d, c, t, q);
      col_axpy(right, c, t, q);
      if (d(t, c) != 0) clean = false;
    }
    if (!clean) continue;  // a smaller remainder exists, pick it as the next pivot

    // Divisibility: fold an offending row into the pivot row and retry.
    bool divides = true;
    for (std::size_t r = t + 1; r < m && divides; ++r)
      for (std::size_t c = t + 1; c < n; ++c)
        if (d(r, c) % d(t, t) != 0) {
          row_axpy(d, t, r, -1);
          row_axpy(left, t, r, -1);
          divides = false;
          break;
        }
    if (!divides) continue;

    if (d(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < m; ++c) left(t, c) = -left(t, c);
    }
    ++t;
  }

  SmithForm out{d, left, right, {}};
  for (std::size_t i = 0; i < std::min(m, n); ++i)
    if (d(i, i) != 0) out.divisors.push_back(d(i, i));
  return out;
}

std::size_t rational_rank(IntegerMatrix a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < n && rank < m; ++c) {
    std::size_t pivot = rank;
    while (pivot < m && a(pivot, c) == 0) ++pivot;
    if (pivot == m) continue;
    swap_rows(a, rank, pivot);
    for (std::size_t r = rank + 1; r < m; ++r) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Integer num = checked_sub(checked_mul(a(rank, c), a(r, j)), checked_mul(a(r, c), a(rank, j)));
        a(r, j) = num / prev;  // exact by Sylvester's identity
      }
      a(r, c) = 0;
    }
    prev = a(rank, c);
    ++rank;
  }
  return rank;
}

}  // namespace coarsek
