#include "alphadet/tensor.hpp"

#include "alphadet/error.hpp"

namespace alphadet {

void TensorElem::check_label(const IndexVector& ivec) const {
  if (static_cast<int>(ivec.size()) != n_)
    throw_input("index vector length " + std::to_string(ivec.size()) + " does not match n = " + std::to_string(n_));
  for (int i : ivec)
    if (i < 1 || i > n_) throw_input("index " + std::to_string(i) + " outside [1.." + std::to_string(n_) + "]");
}

TensorElem TensorElem::basis(const IndexVector& ivec, const AlphaPoly& coeff) {
  TensorElem t(static_cast<int>(ivec.size()));
  if (ivec.empty()) throw_input("index vector must be nonempty");
  t.add_term(ivec, coeff);
  return t;
}

void TensorElem::add_term(const IndexVector& ivec, const AlphaPoly& c) {
  if (c.is_zero()) return;
  check_label(ivec);
  auto [it, inserted] = terms_.try_emplace(ivec, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlphaPoly TensorElem::coefficient(const IndexVector& ivec) const {
  auto it = terms_.find(ivec);
  return it == terms_.end() ? AlphaPoly() : it->second;
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
  if (o.n_ != n_ && !o.is_zero()) throw_input("tensor ambient size mismatch");
  for (const auto& [iv, c] : o.terms_) add_term(iv, c);
  return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
  if (o.n_ != n_ && !o.is_zero()) throw_input("tensor ambient size mismatch");
  for (const auto& [iv, c] : o.terms_) add_term(iv, -c);
  return *this;
}

TensorElem TensorElem::scaled(const AlphaPoly& c) const {
  TensorElem out(n_);
  for (const auto& [iv, x] : terms_) out.add_term(iv, x * c);
  return out;
}

TensorElem TensorElem::apply_Epq(int p, int q) const {
  if (p < 1 || p > n_ || q < 1 || q > n_) throw_input("E_pq: index out of range");
  TensorElem out(n_);
  for (const auto& [iv, c] : terms_) {
    for (int k = 0; k < n_; ++k) {
      if (iv[k] != q) continue;
      IndexVector j = iv;
      j[k] = p;
      out.add_term(j, c);
    }
  }
  return out;
}

TensorElem TensorElem::right_action(const Permutation& sigma) const {
  if (sigma.degree() != n_) throw_input("right action: permutation degree does not match n");
  TensorElem out(n_);
  IndexVector j(n_);
  for (const auto& [iv, c] : terms_) {
    for (int k = 1; k <= n_; ++k) j[k - 1] = iv[sigma(k) - 1];
    out.add_term(j, c);
  }
  return out;
}

std::vector<int> index_weight(const IndexVector& ivec, int n) {
  std::vector<int> w(n, 0);
  for (int i : ivec) ++w[i - 1];
  return w;
}

std::optional<std::vector<int>> TensorElem::weight() const {
  std::optional<std::vector<int>> w;
  for (const auto& [iv, c] : terms_) {
    auto iw = index_weight(iv, n_);
    if (!w)
      w = std::move(iw);
    else if (*w != iw)
      return std::nullopt;
  }
  return w;
}

std::vector<IndexVector> all_index_vectors(int n) {
  std::vector<IndexVector> out;
  IndexVector iv(n, 1);
  while (true) {
    out.push_back(iv);
    int k = n - 1;
    while (k >= 0 && iv[k] == n) iv[k--] = 1;
    if (k < 0) break;
    ++iv[k];
  }
  return out;
}

}  // namespace alphadet
