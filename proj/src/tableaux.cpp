#include "alphadet/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "alphadet/error.hpp"

namespace alphadet {

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

Partition shape_of(const std::vector<std::vector<int>>& rows) {
  std::vector<int> lens;
  for (const auto& r : rows) {
    if (r.empty()) throw_input("tableau rows must be nonempty");
    lens.push_back(static_cast<int>(r.size()));
  }
  return Partition(lens);
}

std::string rows_string(const std::vector<std::vector<int>>& rows) {
  std::string s;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) s += "/";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c && rows[r][c] >= 10) s += ",";
      s += std::to_string(rows[r][c]);
    }
  }
  return s;
}

std::vector<std::vector<int>> empty_rows(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  for (int p : lambda.parts()) rows.emplace_back(p, 0);
  return rows;
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw_input("enumerate_partitions: n must be positive");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

FrobeniusCoordinates frobenius_coordinates(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  FrobeniusCoordinates fc;
  for (int i = 1; i <= lambda.diagonal(); ++i) {
    fc.arms.push_back(lambda.part(i) - i);
    fc.legs.push_back(conj.part(i) - i);
  }
  return fc;
}

std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  std::vector<std::vector<int>> h;
  for (int i = 1; i <= lambda.length(); ++i) {
    std::vector<int> row;
    for (int j = 1; j <= lambda.part(i); ++j) row.push_back(lambda.part(i) - j + conj.part(j) - i + 1);
    h.push_back(std::move(row));
  }
  return h;
}

std::uint64_t count_standard_tableaux(const Partition& lambda) {
  BigInt num = 1;
  for (int k = 2; k <= lambda.weight(); ++k) num *= k;
  BigInt den = 1;
  for (const auto& row : hook_lengths(lambda))
    for (int h : row) den *= h;
  BigInt q = num / den;
  return q.get_ui();
}

std::uint64_t weyl_dimension(const Partition& lambda, int n) {
  Rational d(1);
  const auto hooks = hook_lengths(lambda);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) d *= ratio(n + j - i, hooks[i - 1][j - 1]);
  if (sgn(d) <= 0) return 0;
  return BigInt(d).get_ui();
}

PartitionStats partition_stats(const Partition& lambda, int n) {
  PartitionStats s;
  s.conjugate = lambda.conjugate();
  s.frobenius = frobenius_coordinates(lambda);
  s.hooks = hook_lengths(lambda);
  s.f_std = count_standard_tableaux(lambda);
  s.weyl_dim = weyl_dimension(lambda, n);
  return s;
}

AlphaPoly content_polynomial(const Partition& lambda) {
  if (lambda.empty()) throw_input("content_polynomial: empty partition");
  const auto fc = frobenius_coordinates(lambda);
  AlphaPoly f(1);
  for (std::size_t i = 0; i < fc.arms.size(); ++i) {
    for (int j = 1; j <= fc.arms[i]; ++j) f *= AlphaPoly::linear(j);
    for (int j = 1; j <= fc.legs[i]; ++j) f *= AlphaPoly::linear(-j);
  }
  return f;
}

std::vector<Rational> content_zero_set(const Partition& lambda) {
  if (lambda.empty()) throw_input("content_zero_set: empty partition");
  std::vector<Rational> z;
  for (int k = 1; k <= lambda.conjugate().part(1) - 1; ++k) z.push_back(ratio(1, k));
  for (int k = 1; k <= lambda.part(1) - 1; ++k) z.push_back(ratio(-1, k));
  std::sort(z.begin(), z.end());
  return z;
}

bool in_content_zero_set(const Partition& lambda, const Rational& alpha) {
  auto z = content_zero_set(lambda);
  return std::find(z.begin(), z.end(), alpha) != z.end();
}

Numbering::Numbering(std::vector<std::vector<int>> rows) : shape_(shape_of(rows)), rows_(std::move(rows)) {
  const int n = shape_.weight();
  std::vector<char> seen(n + 1, 0);
  for (const auto& r : rows_)
    for (int v : r) {
      if (v < 1 || v > n || seen[v]) throw_input("numbering entries must be a bijection onto [1.." + std::to_string(n) + "]");
      seen[v] = 1;
    }
}

std::pair<int, int> Numbering::position(int k) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c)
      if (rows_[r][c] == k) return {static_cast<int>(r) + 1, static_cast<int>(c) + 1};
  throw_input("value not present in numbering");
}

bool Numbering::is_standard() const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c > 0 && rows_[r][c] <= rows_[r][c - 1]) return false;
      if (r > 0 && rows_[r][c] <= rows_[r - 1][c]) return false;
    }
  return true;
}

std::vector<int> Numbering::reading_word() const {
  std::vector<int> w;
  for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
  return w;
}

std::string Numbering::to_string() const { return rows_string(rows_); }

SemiStandardTableau::SemiStandardTableau(std::vector<std::vector<int>> rows, int bound)
    : shape_(shape_of(rows)), bound_(bound), rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      int v = rows_[r][c];
      if (v < 1 || v > bound_) throw_input("semistandard entry outside [1.." + std::to_string(bound_) + "]");
      if (c > 0 && v < rows_[r][c - 1]) throw_input("semistandard rows must weakly increase");
      if (r > 0 && v <= rows_[r - 1][c]) throw_input("semistandard columns must strictly increase");
    }
}

std::string SemiStandardTableau::to_string() const { return rows_string(rows_); }

SemiStandardTableau SemiStandardTableau::row_constant(const Partition& shape, int bound) {
  auto rows = empty_rows(shape);
  for (std::size_t r = 0; r < rows.size(); ++r) std::fill(rows[r].begin(), rows[r].end(), static_cast<int>(r) + 1);
  return SemiStandardTableau(std::move(rows), bound);
}

SemiStandardTableau SemiStandardTableau::lowest(const Partition& shape, int bound) {
  auto rows = empty_rows(shape);
  const Partition conj = shape.conjugate();
  for (int c = 1; c <= conj.length(); ++c) {
    const int height = conj.part(c);
    for (int r = 1; r <= height; ++r) rows[r - 1][c - 1] = bound - height + r;
  }
  return SemiStandardTableau(std::move(rows), bound);
}

std::vector<Numbering> enumerate_standard_tableaux(const Partition& lambda, const Limits& limits) {
  const int n = lambda.weight();
  limits.check_tableau(n, "enumerate_standard_tableaux");
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.part(r + 1); ++c) cells.emplace_back(r, c);
  auto rows = empty_rows(lambda);
  std::vector<char> used(n + 1, 0);
  std::vector<Numbering> out;
  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == cells.size()) {
      out.emplace_back(rows);
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1] + 1);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      rows[r][c] = v;
      fill(idx + 1);
      used[v] = 0;
    }
    rows[r][c] = 0;
  };
  if (n > 0) fill(0);
  return out;
}

std::vector<SemiStandardTableau> enumerate_ssyt(const Partition& lambda, int n, const Limits& limits) {
  limits.check_tableau(lambda.weight(), "enumerate_ssyt");
  if (n < 1) throw_input("enumerate_ssyt: bound must be positive");
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.part(r + 1); ++c) cells.emplace_back(r, c);
  auto rows = empty_rows(lambda);
  std::vector<SemiStandardTableau> out;
  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == cells.size()) {
      out.emplace_back(rows, n);
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      rows[r][c] = v;
      fill(idx + 1);
    }
  };
  if (lambda.length() <= n) fill(0);
  return out;
}

namespace {

// All permutations of [1..n] that permute each block's entries among themselves.
std::vector<Permutation> block_group(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<std::vector<int>> images{std::vector<int>(n)};
  std::iota(images[0].begin(), images[0].end(), 1);
  for (const auto& block : blocks) {
    std::vector<int> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<int>> next;
    for (const auto& img : images) {
      std::vector<int> arrangement = sorted;
      do {
        std::vector<int> g = img;
        for (std::size_t k = 0; k < sorted.size(); ++k) g[sorted[k] - 1] = arrangement[k];
        next.push_back(std::move(g));
      } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    }
    images = std::move(next);
  }
  std::vector<Permutation> out;
  out.reserve(images.size());
  for (auto& img : images) out.emplace_back(std::move(img));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

RowColumnGroups row_column_groups(const Numbering& t) {
  const int n = t.size();
  std::vector<std::vector<int>> row_blocks = t.rows();
  std::vector<std::vector<int>> col_blocks;
  const Partition conj = t.shape().conjugate();
  for (int c = 1; c <= conj.length(); ++c) {
    std::vector<int> col;
    for (int r = 1; r <= conj.part(c); ++r) col.push_back(t.at(r, c));
    col_blocks.push_back(std::move(col));
  }
  return {block_group(n, row_blocks), block_group(n, col_blocks)};
}

GroupAlgElem young_symmetrizer(const Numbering& t) {
  const auto groups = row_column_groups(t);
  GroupAlgElem c(t.size());
  for (const auto& q : groups.columns) {
    const AlphaPoly s(q.sign());
    for (const auto& p : groups.rows) c.add_term(q * p, s);
  }
  return c;
}

IndexVector sequence_from_pair(const SemiStandardTableau& s, const Numbering& t) {
  if (s.shape() != t.shape())
    throw_input("sequence_from_pair: shapes " + s.shape().to_string() + " and " + t.shape().to_string() + " differ");
  IndexVector iv(t.size());
  for (int r = 1; r <= t.shape().length(); ++r)
    for (int c = 1; c <= t.shape().part(r); ++c) iv[t.at(r, c) - 1] = s.at(r, c);
  return iv;
}

}  // namespace alphadet
