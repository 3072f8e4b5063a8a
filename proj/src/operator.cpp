#include "coarsek/operator.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "coarsek/integer_matrix.hpp"

namespace coarsek {

std::string SlotId::to_string() const {
  if (kind == Kind::Ordinal) return "O" + std::to_string(major);
  return "E" + std::to_string(major) + "." + std::to_string(minor);
}

SlotId SlotId::parse(const std::string& text) {
  try {
    if (text.size() >= 2 && text[0] == 'O') return ordinal(std::stoll(text.substr(1)));
    if (text.size() >= 4 && text[0] == 'E') {
      auto dot = text.find('.', 2);
      if (dot != std::string::npos)
        return copy_edge(EdgeId{std::stoll(text.substr(1, dot - 1))}, std::stoll(text.substr(dot + 1)));
    }
  } catch (const std::exception&) {
  }
  throw InputError("malformed slot '" + text + "'");
}

Basis::Basis(std::vector<BlockIndex> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

BasisPtr Basis::product(const std::vector<VertexId>& vertices, const std::vector<SlotId>& slots) {
  std::vector<BlockIndex> el;
  el.reserve(vertices.size() * slots.size());
  for (VertexId v : vertices)
    for (const SlotId& s : slots) el.push_back(BlockIndex{v, s});
  return std::make_shared<const Basis>(std::move(el));
}

BasisPtr Basis::merge(const Basis& a, const Basis& b) {
  std::vector<BlockIndex> el = a.elements_;
  el.insert(el.end(), b.elements_.begin(), b.elements_.end());
  return std::make_shared<const Basis>(std::move(el));
}

std::optional<std::size_t> Basis::find(const BlockIndex& b) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), b);
  if (it == elements_.end() || *it != b) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool Basis::contains_all(const Basis& other) const {
  return std::includes(elements_.begin(), elements_.end(), other.elements_.begin(), other.elements_.end());
}

VertexId Basis::min_vertex() const {
  if (elements_.empty()) throw PreconditionError("empty basis");
  return elements_.front().vertex;
}

VertexId Basis::max_vertex() const {
  if (elements_.empty()) throw PreconditionError("empty basis");
  return elements_.back().vertex;
}

std::vector<VertexId> Basis::vertices() const {
  std::vector<VertexId> out;
  for (const BlockIndex& b : elements_)
    if (out.empty() || out.back() != b.vertex) out.push_back(b.vertex);
  return out;
}

SparseBlockOperator::SparseBlockOperator(BasisPtr basis)
    : basis_(std::move(basis)), row_ptr_(basis_ ? basis_->size() + 1 : 1, 0) {
  if (!basis_) throw PreconditionError("operator needs a basis");
}

SparseBlockOperator SparseBlockOperator::from_indexed(
    BasisPtr basis, std::vector<std::tuple<std::size_t, std::size_t, Integer>> triplets) {
  SparseBlockOperator op(std::move(basis));
  const std::size_t n = op.basis_->size();
  std::sort(triplets.begin(), triplets.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  std::vector<std::size_t> counts(n, 0);
  for (std::size_t i = 0; i < triplets.size();) {
    auto [r, c, v] = triplets[i];
    if (r >= n || c >= n) throw PreconditionError("operator entry outside basis");
    std::size_t j = i + 1;
    while (j < triplets.size() && std::get<0>(triplets[j]) == r && std::get<1>(triplets[j]) == c)
      v = checked_add(v, std::get<2>(triplets[j++]));
    if (v != 0) {
      op.cols_.push_back(c);
      op.values_.push_back(v);
      ++counts[r];
    }
    i = j;
  }
  for (std::size_t r = 0; r < n; ++r) op.row_ptr_[r + 1] = op.row_ptr_[r] + counts[r];
  return op;
}

SparseBlockOperator SparseBlockOperator::from_entries(BasisPtr basis, const std::vector<OperatorEntry>& entries) {
  std::vector<std::tuple<std::size_t, std::size_t, Integer>> t;
  t.reserve(entries.size());
  for (const OperatorEntry& e : entries) {
    auto r = basis->find(e.row);
    auto c = basis->find(e.col);
    if (!r || !c) throw PreconditionError("operator entry outside basis");
    t.emplace_back(*r, *c, e.value);
  }
  return from_indexed(std::move(basis), std::move(t));
}

SparseBlockOperator SparseBlockOperator::identity(BasisPtr basis) {
  return diagonal_projection(std::move(basis), [](const BlockIndex&) { return true; });
}

Integer SparseBlockOperator::at(std::size_t r, std::size_t c) const {
  auto first = cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[r]);
  auto last = cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[r + 1]);
  auto it = std::lower_bound(first, last, c);
  if (it == last || *it != c) return 0;
  return values_[static_cast<std::size_t>(it - cols_.begin())];
}

Integer SparseBlockOperator::at(const BlockIndex& r, const BlockIndex& c) const {
  auto ri = basis_->find(r);
  auto ci = basis_->find(c);
  if (!ri || !ci) return 0;
  return at(*ri, *ci);
}

std::vector<std::pair<std::size_t, Integer>> SparseBlockOperator::row(std::size_t r) const {
  std::vector<std::pair<std::size_t, Integer>> out;
  for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) out.emplace_back(cols_[k], values_[k]);
  return out;
}

std::vector<OperatorEntry> SparseBlockOperator::entries() const {
  std::vector<OperatorEntry> out;
  out.reserve(nnz());
  for_each([&](std::size_t r, std::size_t c, Integer v) { out.push_back({(*basis_)[r], (*basis_)[c], v}); });
  return out;
}

bool SparseBlockOperator::operator==(const SparseBlockOperator& other) const {
  if (basis_ != other.basis_ && !(*basis_ == *other.basis_)) return false;
  return row_ptr_ == other.row_ptr_ && cols_ == other.cols_ && values_ == other.values_;
}

namespace {

void require_same_basis(const SparseBlockOperator& a, const SparseBlockOperator& b, const char* what) {
  if (a.basis() == b.basis()) return;
  if (a.basis()->size() != b.basis()->size() || !(*a.basis() == *b.basis()))
    throw BasisMismatch(std::string(what) + ": operators live on different bases");
}

}  // namespace

SparseBlockOperator compose(const SparseBlockOperator& a, const SparseBlockOperator& b) {
  require_same_basis(a, b, "compose");
  const std::size_t n = a.basis_->size();
  SparseBlockOperator out(a.basis_);
  std::vector<Integer> acc(n, 0);
  std::vector<std::size_t> touched;
  std::vector<char> mark(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = a.row_ptr_[r]; k < a.row_ptr_[r + 1]; ++k) {
      const std::size_t mid = a.cols_[k];
      const Integer av = a.values_[k];
      for (std::size_t q = b.row_ptr_[mid]; q < b.row_ptr_[mid + 1]; ++q) {
        const std::size_t c = b.cols_[q];
        if (!mark[c]) {
          mark[c] = 1;
          touched.push_back(c);
        }
        acc[c] = checked_add(acc[c], checked_mul(av, b.values_[q]));
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::size_t c : touched) {
      if (acc[c] != 0) {
        out.cols_.push_back(c);
        out.values_.push_back(acc[c]);
      }
      acc[c] = 0;
      mark[c] = 0;
    }
    touched.clear();
    out.row_ptr_[r + 1] = out.cols_.size();
  }
  return out;
}

SparseBlockOperator adjoint(const SparseBlockOperator& a) {
  std::vector<std::tuple<std::size_t, std::size_t, Integer>> t;
  t.reserve(a.nnz());
  a.for_each([&](std::size_t r, std::size_t c, Integer v) { t.emplace_back(c, r, v); });
  return SparseBlockOperator::from_indexed(a.basis(), std::move(t));
}

namespace {

SparseBlockOperator combine(const SparseBlockOperator& a, const SparseBlockOperator& b, Integer sign) {
  std::vector<std::tuple<std::size_t, std::size_t, Integer>> t;
  t.reserve(a.nnz() + b.nnz());
  a.for_each([&](std::size_t r, std::size_t c, Integer v) { t.emplace_back(r, c, v); });
  b.for_each([&](std::size_t r, std::size_t c, Integer v) { t.emplace_back(r, c, checked_mul(sign, v)); });
  return SparseBlockOperator::from_indexed(a.basis(), std::move(t));
}

}  // namespace

SparseBlockOperator add(const SparseBlockOperator& a, const SparseBlockOperator& b) {
  require_same_basis(a, b, "add");
  return combine(a, b, 1);
}

SparseBlockOperator subtract(const SparseBlockOperator& a, const SparseBlockOperator& b) {
  require_same_basis(a, b, "subtract");
  return combine(a, b, -1);
}

SparseBlockOperator minus_identity(const SparseBlockOperator& a) {
  return combine(a, SparseBlockOperator::identity(a.basis()), -1);
}

SparseBlockOperator embed(const SparseBlockOperator& a, BasisPtr larger, Extension ext) {
  if (!larger->contains_all(*a.basis())) throw BasisMismatch("embed: target basis does not contain source basis");
  std::vector<std::tuple<std::size_t, std::size_t, Integer>> t;
  std::vector<std::size_t> position(a.basis()->size());
  for (std::size_t i = 0; i < a.basis()->size(); ++i) position[i] = *larger->find((*a.basis())[i]);
  a.for_each([&](std::size_t r, std::size_t c, Integer v) { t.emplace_back(position[r], position[c], v); });
  if (ext == Extension::Identity) {
    std::vector<char> seen(larger->size(), 0);
    for (std::size_t p : position) seen[p] = 1;
    for (std::size_t i = 0; i < larger->size(); ++i)
      if (!seen[i]) t.emplace_back(i, i, 1);
  }
  return SparseBlockOperator::from_indexed(std::move(larger), std::move(t));
}

SparseBlockOperator restrict_to(const SparseBlockOperator& a, BasisPtr smaller) {
  std::vector<std::tuple<std::size_t, std::size_t, Integer>> t;
  std::vector<std::optional<std::size_t>> position(a.basis()->size());
  for (std::size_t i = 0; i < a.basis()->size(); ++i) position[i] = smaller->find((*a.basis())[i]);
  a.for_each([&](std::size_t r, std::size_t c, Integer v) {
    if (position[r] && position[c]) t.emplace_back(*position[r], *position[c], v);
  });
  return SparseBlockOperator::from_indexed(std::move(smaller), std::move(t));
}

Integer propagation(const SparseBlockOperator& a, const Metric& m) {
  Integer best = 0;
  const Basis& basis = *a.basis();
  a.for_each([&](std::size_t r, std::size_t c, Integer) {
    if (basis[r].vertex == basis[c].vertex) return;
    Integer d = distance(m, basis[r].vertex, basis[c].vertex);
    if (d == FiniteMetricSpace::kUnreachable)
      throw PreconditionError("propagation: entry joins vertices at infinite distance");
    best = std::max(best, d);
  });
  return best;
}

namespace {

std::size_t rank_of_entries(const std::vector<std::tuple<std::size_t, std::size_t, Integer>>& e) {
  std::map<std::size_t, std::size_t> rows, cols;
  for (const auto& [r, c, v] : e) {
    rows.emplace(r, rows.size());
    cols.emplace(c, cols.size());
  }
  IntegerMatrix m(rows.size(), cols.size());
  for (const auto& [r, c, v] : e) m(rows.at(r), cols.at(c)) = v;
  return rational_rank(std::move(m));
}

}  // namespace

std::size_t block_rank(const SparseBlockOperator& a, VertexId x, VertexId y) {
  std::vector<std::tuple<std::size_t, std::size_t, Integer>> e;
  const Basis& basis = *a.basis();
  a.for_each([&](std::size_t r, std::size_t c, Integer v) {
    if (basis[r].vertex == x && basis[c].vertex == y) e.emplace_back(r, c, v);
  });
  return e.empty() ? 0 : rank_of_entries(e);
}

std::map<std::pair<VertexId, VertexId>, std::size_t> block_ranks(const SparseBlockOperator& a) {
  std::map<std::pair<VertexId, VertexId>, std::vector<std::tuple<std::size_t, std::size_t, Integer>>> blocks;
  const Basis& basis = *a.basis();
  a.for_each([&](std::size_t r, std::size_t c, Integer v) {
    blocks[{basis[r].vertex, basis[c].vertex}].emplace_back(r, c, v);
  });
  std::map<std::pair<VertexId, VertexId>, std::size_t> out;
  for (const auto& [key, e] : blocks) out.emplace(key, rank_of_entries(e));
  return out;
}

std::size_t max_block_rank(const SparseBlockOperator& a) {
  std::size_t best = 0;
  for (const auto& [key, r] : block_ranks(a)) best = std::max(best, r);
  return best;
}

bool is_permutation(const SparseBlockOperator& a) {
  const std::size_t n = a.basis()->size();
  std::vector<int> col_count(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    auto row = a.row(r);
    if (row.size() != 1 || row.front().second != 1) return false;
    ++col_count[row.front().first];
  }
  return std::all_of(col_count.begin(), col_count.end(), [](int c) { return c == 1; });
}

bool is_diagonal(const SparseBlockOperator& a) {
  bool ok = true;
  a.for_each([&](std::size_t r, std::size_t c, Integer) { ok = ok && r == c; });
  return ok;
}

bool is_projection(const SparseBlockOperator& a) { return a == adjoint(a) && compose(a, a) == a; }

namespace {

bool identity_rows_on(const SparseBlockOperator& p, const Window* w) {
  const Basis& basis = *p.basis();
  for (std::size_t r = 0; r < basis.size(); ++r) {
    if (w && !w->in_interior(basis[r].vertex)) continue;
    auto row = p.row(r);
    if (row.size() != 1 || row.front().first != r || row.front().second != 1) return false;
  }
  return true;
}

}  // namespace

bool is_unitary_on(const SparseBlockOperator& a, const Window& w) {
  const SparseBlockOperator star = adjoint(a);
  return identity_rows_on(compose(star, a), &w) && identity_rows_on(compose(a, star), &w);
}

bool is_unitary(const SparseBlockOperator& a) {
  const SparseBlockOperator star = adjoint(a);
  return identity_rows_on(compose(star, a), nullptr) && identity_rows_on(compose(a, star), nullptr);
}

IndexPairing index_pairing_details(const SparseBlockOperator& u, const Window& w) {
  IndexPairing out;
  out.propagation = propagation(minus_identity(u), LineMetric{});
  const Integer p = out.propagation;
  if (w.margin < 2 * p)
    throw MarginError("index_pairing: margin " + std::to_string(w.margin) + " is below twice the propagation " +
                      std::to_string(p));
  if (w.first.value > -(p + 1) || w.last.value < p)
    throw MarginError("index_pairing: window interior does not cover the cut at 0");
  if (u.basis()->size() == 0 || u.basis()->min_vertex() > w.outer_first() || u.basis()->max_vertex() < w.outer_last())
    throw MarginError("index_pairing: operator is not generated on the full window plus margin");
  if (!is_unitary_on(u, w)) throw PreconditionError("index_pairing: operator is not unitary on the window");

  const BasisPtr& basis = u.basis();
  const auto half = SparseBlockOperator::diagonal_projection(basis, [](const BlockIndex& b) { return b.vertex.value >= 0; });
  const SparseBlockOperator q = subtract(half, compose(adjoint(u), compose(half, u)));
  for (std::size_t i = 0; i < basis->size(); ++i) {
    const VertexId v = (*basis)[i].vertex;
    if (!w.in_interior(v)) continue;
    const Integer d = q.at(i, i);
    out.index = checked_add(out.index, d);
    // P - u*Pu vanishes on the diagonal outside [-p, p-1].
    if (v.value < -p || v.value > p - 1) out.far_trace = checked_add(out.far_trace, d);
  }
  return out;
}

Integer index_pairing(const SparseBlockOperator& u, const Window& w) { return index_pairing_details(u, w).index; }

std::string dump(const SparseBlockOperator& a) {
  std::ostringstream os;
  a.for_each([&](std::size_t r, std::size_t c, Integer v) {
    const BlockIndex& row = (*a.basis())[r];
    const BlockIndex& col = (*a.basis())[c];
    os << row.vertex.value << ' ' << row.slot.to_string() << ' ' << col.vertex.value << ' ' << col.slot.to_string()
       << ' ' << v << '\n';
  });
  return os.str();
}

SparseBlockOperator parse_dump(BasisPtr basis, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<OperatorEntry> entries;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    Integer rv, cv, value;
    std::string rs, cs;
    if (!(ls >> rv >> rs >> cv >> cs >> value))
      throw InputError("operator dump line " + std::to_string(lineno) + " is malformed");
    entries.push_back({BlockIndex{VertexId{rv}, SlotId::parse(rs)}, BlockIndex{VertexId{cv}, SlotId::parse(cs)}, value});
  }
  return SparseBlockOperator::from_entries(std::move(basis), entries);
}

SparseBlockOperator forward_shift(const Window& w) {
  std::vector<VertexId> vertices;
  for (Integer x = w.outer_first().value; x <= w.outer_last().value; ++x) vertices.push_back(VertexId{x});
  auto basis = Basis::product(vertices, {SlotId::ordinal(1)});
  std::vector<std::tuple<std::size_t, std::size_t, Integer>> t;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) t.emplace_back(i + 1, i, 1);
  return SparseBlockOperator::from_indexed(std::move(basis), std::move(t));
}

}  // namespace coarsek
