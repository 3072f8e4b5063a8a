#include "coarsek/oracles.hpp"

#include <numeric>
#include <stdexcept>

namespace coarsek::oracle {

namespace {

using Wide = __int128;
using WideMatrix = std::vector<std::vector<Wide>>;

Wide mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("oracle: 128-bit overflow");
  return r;
}

Wide sub(Wide a, Wide b) {
  Wide r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("oracle: 128-bit overflow");
  return r;
}

WideMatrix widen(const Dense& m) {
  WideMatrix w(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) w[i].assign(m[i].begin(), m[i].end());
  return w;
}

// Bareiss elimination in place; returns the rank and the sign-adjusted last pivot.
std::pair<std::size_t, Wide> bareiss(WideMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  Wide prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = sub(mul(a[r][c], a[i][j]), mul(a[i][c], a[r][j])) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return {r, sign * prev};
}

Integer gcd(Integer a, Integer b) { return std::gcd(a, b); }

// Calls f on every k-subset of {0..n-1} until f returns true.
template <class F>
bool any_subset(std::size_t n, std::size_t k, F f) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Dense incidence(const OrientedGraph& g) {
  Dense d(g.vertex_count(), std::vector<Integer>(g.edge_count(), 0));
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edges()[j];
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      const VertexId v = g.vertices()[i];
      d[i][j] = (e.target == v ? 1 : 0) - (e.source == v ? 1 : 0);
    }
  }
  return d;
}

__int128 determinant(const Dense& m) {
  if (m.empty()) return 1;
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("oracle::determinant: not square");
  WideMatrix a = widen(m);
  auto [r, last] = bareiss(a);
  return r == m.size() ? last : 0;
}

std::size_t rank(const Dense& m) {
  WideMatrix a = widen(m);
  return bareiss(a).first;
}

Integer determinantal_divisor(const Dense& m, std::size_t r) {
  if (r == 0) return 1;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  Integer g = 0;
  Dense minor(r, std::vector<Integer>(r));
  any_subset(rows, r, [&](const std::vector<std::size_t>& ri) {
    return any_subset(cols, r, [&](const std::vector<std::size_t>& ci) {
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) minor[i][j] = m[ri[i]][ci[j]];
      const Wide d = determinant(minor);
      const Wide ad = d < 0 ? -d : d;
      if (ad > std::numeric_limits<Integer>::max()) throw std::overflow_error("oracle: minor too large");
      g = gcd(g, static_cast<Integer>(ad));
      return g == 1;
    });
  });
  return g;
}

GraphHomology graph_homology(const OrientedGraph& g) {
  const Dense d = incidence(g);
  const std::size_t r = rank(d);
  GraphHomology h;
  h.h0_free_rank = g.vertex_count() - r;
  h.h0_torsion_free = determinantal_divisor(d, r) == 1;
  h.h1_rank = g.edge_count() - r;
  return h;
}

Integer trace_index(const SparseBlockOperator& u, const Window& w) {
  const Basis& basis = *u.basis();
  std::vector<Integer> weight(basis.size(), 0);
  u.for_each([&](std::size_t r, std::size_t c, Integer v) {
    if (basis[r].vertex.value >= 0) weight[c] += v * v;
  });
  Integer total = 0;
  for (std::size_t c = 0; c < basis.size(); ++c) {
    if (!w.in_interior(basis[c].vertex)) continue;
    total += (basis[c].vertex.value >= 0 ? 1 : 0) - weight[c];
  }
  return total;
}

bool is_permutation_matrix(const SparseBlockOperator& u) {
  const std::size_t n = u.basis()->size();
  std::vector<int> row(n, 0), col(n, 0);
  bool ones = true;
  u.for_each([&](std::size_t r, std::size_t c, Integer v) {
    ++row[r];
    ++col[c];
    if (v != 1) ones = false;
  });
  for (std::size_t i = 0; i < n; ++i)
    if (row[i] != 1 || col[i] != 1) return false;
  return ones;
}

}  // namespace coarsek::oracle
