#include "alphadet/alpha_poly.hpp"

#include <algorithm>

#include "alphadet/error.hpp"

namespace alphadet {

const Rational& AlphaValue::finite() const {
  if (!finite_) throw_unsupported("alpha = infinity has no finite value; use the rescaled limit entry points");
  return *finite_;
}

AlphaValue AlphaValue::parse(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "inf" || t == "infinity" || t == "oo" || t == "+inf") return infinity();
  return AlphaValue(parse_rational(text));
}

std::string AlphaValue::to_string() const { return finite_ ? alphadet::to_string(*finite_) : "inf"; }

AlphaPoly::AlphaPoly(Rational constant) {
  if (!alphadet::is_zero(constant)) c_.push_back(std::move(constant));
}

AlphaPoly::AlphaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

AlphaPoly AlphaPoly::monomial(const Rational& c, int degree) {
  AlphaPoly p;
  p.add_monomial(c, degree);
  return p;
}

AlphaPoly AlphaPoly::linear(const Rational& c) { return AlphaPoly(std::vector<Rational>{Rational(1), c}); }

const Rational& AlphaPoly::coeff(int k) const {
  static const Rational zero(0);
  return (k >= 0 && k <= degree()) ? c_[k] : zero;
}

void AlphaPoly::trim() {
  while (!c_.empty() && alphadet::is_zero(c_.back())) c_.pop_back();
}

Rational AlphaPoly::evaluate(const Rational& a) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + *it;
  return acc;
}

Rational AlphaPoly::evaluate(const AlphaValue& a) const {
  if (a.is_infinite())
    throw_unsupported("evaluation at alpha = infinity is only defined through the rescaled limit");
  return evaluate(a.finite());
}

Rational AlphaPoly::limit_coefficient(int deg) const {
  if (degree() > deg)
    throw_unsupported("alpha^{-" + std::to_string(deg) + "} p(alpha) diverges: p has degree " +
                      std::to_string(degree()));
  return coeff(deg);
}

void AlphaPoly::add_scaled(const AlphaPoly& p, const Rational& c, int shift) {
  if (p.is_zero() || alphadet::is_zero(c)) return;
  const std::size_t need = p.c_.size() + static_cast<std::size_t>(shift);
  if (c_.size() < need) c_.resize(need);
  for (std::size_t k = 0; k < p.c_.size(); ++k) c_[k + shift] += c * p.c_[k];
  trim();
}

void AlphaPoly::add_monomial(const Rational& c, int shift) {
  if (alphadet::is_zero(c)) return;
  if (c_.size() <= static_cast<std::size_t>(shift)) c_.resize(shift + 1);
  c_[shift] += c;
  trim();
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return AlphaPoly(std::move(out));
}

AlphaPoly& AlphaPoly::operator*=(const AlphaPoly& o) { return *this = *this * o; }

AlphaPoly& AlphaPoly::operator*=(const Rational& c) {
  if (alphadet::is_zero(c)) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

AlphaPoly AlphaPoly::operator-() const {
  AlphaPoly p = *this;
  for (auto& x : p.c_) x = -x;
  return p;
}

std::pair<AlphaPoly, AlphaPoly> divmod(const AlphaPoly& num, const AlphaPoly& den) {
  if (den.is_zero()) throw_input("division by the zero polynomial");
  AlphaPoly rem = num;
  std::vector<Rational> q(std::max(0, num.degree() - den.degree() + 1));
  const Rational& lead = den.c_.back();
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    int shift = rem.degree() - den.degree();
    Rational f = rem.c_.back() / lead;
    q[shift] = f;
    rem.add_scaled(den, -f, shift);
  }
  return {AlphaPoly(std::move(q)), rem};
}

AlphaPoly exact_div(const AlphaPoly& num, const AlphaPoly& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw_input("inexact polynomial division");
  return q;
}

std::string AlphaPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& c = c_[k];
    if (alphadet::is_zero(c)) continue;
    Rational mag = abs(c);
    if (s.empty())
      s += sgn(c) < 0 ? "-" : "";
    else
      s += sgn(c) < 0 ? " - " : " + ";
    bool unit = (mag == 1);
    if (k == 0 || !unit) s += alphadet::to_string(mag);
    if (k >= 1) {
      if (!unit) s += "*";
      s += var;
      if (k >= 2) s += "^" + std::to_string(k);
    }
  }
  return s;
}

AlphaPoly rising_content_product(int n) {
  AlphaPoly p(1);
  for (int j = 1; j < n; ++j) p *= AlphaPoly::linear(j);
  return p;
}

}  // namespace alphadet
