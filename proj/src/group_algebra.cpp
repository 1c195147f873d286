#include "alphadet/group_algebra.hpp"

#include "alphadet/error.hpp"

namespace alphadet {

GroupAlgElem GroupAlgElem::element(const Permutation& sigma, const AlphaPoly& c) {
  GroupAlgElem g(sigma.degree());
  g.add_term(sigma, c);
  return g;
}

void GroupAlgElem::add_term(const Permutation& sigma, const AlphaPoly& c) {
  if (c.is_zero()) return;
  if (sigma.degree() != n_) throw_input("group algebra: permutation degree does not match");
  auto [it, inserted] = terms_.try_emplace(sigma, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlphaPoly GroupAlgElem::coefficient(const Permutation& sigma) const {
  auto it = terms_.find(sigma);
  return it == terms_.end() ? AlphaPoly() : it->second;
}

GroupAlgElem& GroupAlgElem::operator+=(const GroupAlgElem& o) {
  if (o.n_ != n_ && !o.is_zero()) throw_input("group algebra degree mismatch");
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

GroupAlgElem GroupAlgElem::scaled(const AlphaPoly& c) const {
  GroupAlgElem out(n_);
  for (const auto& [s, x] : terms_) out.add_term(s, x * c);
  return out;
}

GroupAlgElem operator*(const GroupAlgElem& a, const GroupAlgElem& b) {
  if (a.n_ != b.n_) throw_input("group algebra degree mismatch");
  GroupAlgElem out(a.n_);
  for (const auto& [sa, ca] : a.terms_)
    for (const auto& [sb, cb] : b.terms_) out.add_term(sa * sb, ca * cb);
  return out;
}

std::string GroupAlgElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")" + p.cycle_string();
  }
  return s;
}

}  // namespace alphadet
