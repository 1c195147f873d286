#include "alphadet/rank.hpp"

#include <numeric>

#include "alphadet/error.hpp"

namespace alphadet {

namespace {

// Partition of the rows by connected column support.
template <class Coeff>
std::vector<std::vector<std::size_t>> column_blocks(const std::vector<SparseRow<Coeff>>& rows, int& ncols) {
  ncols = 0;
  for (const auto& r : rows)
    for (const auto& [c, x] : r) ncols = std::max(ncols, c + 1);
  std::vector<int> parent(ncols);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& r : rows)
    for (std::size_t k = 1; k < r.size(); ++k) {
      int a = find(r[0].first), b = find(r[k].first);
      if (a != b) parent[a] = b;
    }
  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].empty()) groups[find(rows[i][0].first)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

template <class Coeff>
std::vector<SparseRow<Coeff>> drop_zeros(const std::vector<SparseRow<Coeff>>& rows) {
  std::vector<SparseRow<Coeff>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    SparseRow<Coeff> rr;
    for (const auto& [c, x] : r)
      if (!is_zero(x)) rr.emplace_back(c, x);
    out.push_back(std::move(rr));
  }
  return out;
}

// Dense block with local column indices.
template <class Coeff>
std::vector<std::vector<Coeff>> dense_block(const std::vector<SparseRow<Coeff>>& rows,
                                            const std::vector<std::size_t>& members) {
  std::map<int, int> local;
  for (auto i : members)
    for (const auto& [c, x] : rows[i]) local.try_emplace(c, 0);
  int next = 0;
  for (auto& [c, idx] : local) idx = next++;
  std::vector<std::vector<Coeff>> m(members.size(), std::vector<Coeff>(local.size()));
  for (std::size_t r = 0; r < members.size(); ++r)
    for (const auto& [c, x] : rows[members[r]]) m[r][local[c]] = x;
  return m;
}

std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t ncols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && is_zero(m[piv][col])) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (is_zero(m[r][col])) continue;
      Rational f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < ncols; ++c)
        if (!is_zero(m[rank][c])) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

// Bareiss: every division by the previous pivot is exact in Q[alpha].
std::size_t dense_generic_rank(std::vector<std::vector<AlphaPoly>> m) {
  if (m.empty()) return 0;
  const std::size_t ncols = m[0].size();
  std::size_t rank = 0;
  AlphaPoly prev(1);
  for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const AlphaPoly pivot = m[rank][col];
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      const AlphaPoly lead = m[r][col];
      for (std::size_t c = col; c < ncols; ++c) {
        AlphaPoly v = pivot * m[r][c] - lead * m[rank][c];
        m[r][c] = exact_div(v, prev);
      }
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

template <class Poly, class Coeff, class Convert>
std::vector<SparseRow<Coeff>> rows_from(std::span<const Poly> vectors, Convert convert) {
  std::map<typename Poly::Terms::key_type, int> cols;
  std::vector<SparseRow<Coeff>> rows;
  rows.reserve(vectors.size());
  int n = -1;
  for (const auto& v : vectors) {
    if (n < 0) n = v.ambient();
    if (v.ambient() != n && !v.is_zero()) throw_input("exact_rank: mixed ambient sizes");
    SparseRow<Coeff> row;
    for (const auto& [k, c] : v.terms()) {
      auto [it, ins] = cols.try_emplace(k, static_cast<int>(cols.size()));
      row.emplace_back(it->second, convert(c));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::size_t rank_of_rows(const std::vector<SparseRow<Rational>>& input) {
  auto rows = drop_zeros(input);
  int ncols = 0;
  std::size_t total = 0;
  for (const auto& members : column_blocks(rows, ncols)) total += dense_rank(dense_block(rows, members));
  return total;
}

std::size_t generic_rank_of_rows(const std::vector<SparseRow<AlphaPoly>>& input) {
  auto rows = drop_zeros(input);
  int ncols = 0;
  std::size_t total = 0;
  for (const auto& members : column_blocks(rows, ncols)) total += dense_generic_rank(dense_block(rows, members));
  return total;
}

std::size_t exact_rank(std::span<const RatMatPoly> vectors) {
  return rank_of_rows(rows_from<RatMatPoly, Rational>(vectors, [](const Rational& c) { return c; }));
}

std::size_t exact_rank(std::span<const MatPoly> vectors, const AlphaValue& alpha) {
  const Rational& a = alpha.finite();
  return rank_of_rows(rows_from<MatPoly, Rational>(vectors, [&](const AlphaPoly& c) { return c.evaluate(a); }));
}

std::size_t exact_rank(std::span<const TensorElem> vectors, const AlphaValue& alpha) {
  const Rational& a = alpha.finite();
  return rank_of_rows(rows_from<TensorElem, Rational>(vectors, [&](const AlphaPoly& c) { return c.evaluate(a); }));
}

std::size_t generic_rank(std::span<const MatPoly> vectors) {
  return generic_rank_of_rows(rows_from<MatPoly, AlphaPoly>(vectors, [](const AlphaPoly& c) { return c; }));
}

std::size_t generic_rank(std::span<const TensorElem> vectors) {
  return generic_rank_of_rows(rows_from<TensorElem, AlphaPoly>(vectors, [](const AlphaPoly& c) { return c; }));
}

bool WeightedSpan::insert(const RatMatPoly& f) {
  if (f.is_zero()) return false;
  auto w = f.row_weight();
  if (!w) throw_input("WeightedSpan: vector is not weight-homogeneous");
  return blocks_[*w].insert(f.terms());
}

bool WeightedSpan::contains(const RatMatPoly& f) const {
  if (f.is_zero()) return true;
  auto w = f.row_weight();
  if (!w) {
    // A graded subspace contains f iff it contains every weight component.
    std::map<std::vector<int>, RatMatPoly> parts;
    for (const auto& [m, c] : f.terms()) {
      auto [it, ins] = parts.try_emplace(m.row_weight(), f.ambient());
      it->second.add_term(m, c);
    }
    for (const auto& [wt, part] : parts)
      if (!contains(part)) return false;
    return true;
  }
  auto it = blocks_.find(*w);
  return it != blocks_.end() && it->second.contains(f.terms());
}

std::size_t WeightedSpan::rank() const {
  std::size_t r = 0;
  for (const auto& [w, b] : blocks_) r += b.rank();
  return r;
}

}  // namespace alphadet
