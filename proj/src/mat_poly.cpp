#include "alphadet/mat_poly.hpp"

#include <algorithm>

namespace alphadet {

Monomial::Monomial(int n, std::vector<Factor> factors) : n_(n), f_(std::move(factors)) {
  std::sort(f_.begin(), f_.end(), [](const Factor& a, const Factor& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  std::vector<Factor> merged;
  merged.reserve(f_.size());
  for (const auto& f : f_) {
    if (f.row < 1 || f.row > n_ || f.col < 1 || f.col > n_) throw_input("monomial variable index out of range");
    if (f.exp < 0) throw_input("monomial exponent must be non-negative");
    if (!merged.empty() && merged.back().row == f.row && merged.back().col == f.col)
      merged.back().exp += f.exp;
    else
      merged.push_back(f);
  }
  std::erase_if(merged, [](const Factor& f) { return f.exp == 0; });
  f_ = std::move(merged);
}

Monomial Monomial::from_column_rows(std::span<const int> rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Factor> fs;
  fs.reserve(rows.size());
  for (int c = 1; c <= n; ++c) fs.push_back({rows[c - 1], c, 1});
  return Monomial(n, std::move(fs));
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : f_) d += f.exp;
  return d;
}

int Monomial::exponent(int row, int col) const {
  for (const auto& f : f_)
    if (f.row == row && f.col == col) return f.exp;
  return 0;
}

std::optional<std::vector<int>> Monomial::column_rows() const {
  std::vector<int> rows(n_, 0);
  if (static_cast<int>(f_.size()) != n_) return std::nullopt;
  for (const auto& f : f_) {
    if (f.exp != 1 || rows[f.col - 1] != 0) return std::nullopt;
    rows[f.col - 1] = f.row;
  }
  return rows;
}

std::vector<int> Monomial::row_weight() const {
  std::vector<int> w(n_, 0);
  for (const auto& f : f_) w[f.row - 1] += f.exp;
  return w;
}

void Monomial::bump(int row, int col, int delta) {
  auto key = std::make_pair(row, col);
  auto it = std::lower_bound(f_.begin(), f_.end(), key, [](const Factor& f, const std::pair<int, int>& k) {
    return std::tie(f.row, f.col) < std::tie(k.first, k.second);
  });
  if (it != f_.end() && it->row == row && it->col == col) {
    it->exp += delta;
    if (it->exp < 0) throw_input("monomial exponent became negative");
    if (it->exp == 0) f_.erase(it);
  } else {
    if (delta < 0) throw_input("monomial exponent became negative");
    if (delta > 0) f_.insert(it, Factor{row, col, delta});
  }
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.n_ != b.n_) throw_input("monomial ambient size mismatch");
  std::vector<Factor> fs = a.f_;
  fs.insert(fs.end(), b.f_.begin(), b.f_.end());
  return Monomial(a.n_, std::move(fs));
}

std::string Monomial::to_string() const {
  if (f_.empty()) return "1";
  std::string s;
  for (const auto& f : f_) {
    if (!s.empty()) s += "*";
    if (n_ <= 9)
      s += "x" + std::to_string(f.row) + std::to_string(f.col);
    else
      s += "x{" + std::to_string(f.row) + "," + std::to_string(f.col) + "}";
    if (f.exp > 1) s += "^" + std::to_string(f.exp);
  }
  return s;
}

RatMatPoly specialize(const MatPoly& f, const Rational& alpha) {
  RatMatPoly out(f.ambient());
  for (const auto& [m, c] : f.terms()) out.add_term(m, c.evaluate(alpha));
  return out;
}

RatMatPoly limit_part(const MatPoly& f, int degree) {
  RatMatPoly out(f.ambient());
  for (const auto& [m, c] : f.terms()) out.add_term(m, c.limit_coefficient(degree));
  return out;
}

MatPoly to_alpha(const RatMatPoly& f) {
  MatPoly out(f.ambient());
  for (const auto& [m, c] : f.terms()) out.add_term(m, AlphaPoly(c));
  return out;
}

namespace {

// Bare coefficients when they are a single token, parenthesized otherwise; unit
// coefficients are dropped.
std::string render_term(std::string c, const Monomial& m) {
  if (c == "1") return m.to_string();
  if (c == "-1") return "-" + m.to_string();
  if (c.find(' ') != std::string::npos) c = "(" + c + ")";
  return c + "*" + m.to_string();
}

template <class Poly, class Fmt>
std::string render(const Poly& f, Fmt coeff_fmt) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : f.terms()) {
    std::string term = render_term(coeff_fmt(c), m);
    if (s.empty())
      s = term;
    else if (term.front() == '-')
      s += " - " + term.substr(1);
    else
      s += " + " + term;
  }
  return s;
}

}  // namespace

std::string to_string(const MatPoly& f) {
  return render(f, [](const AlphaPoly& c) { return c.to_string(); });
}

std::string to_string(const RatMatPoly& f) {
  return render(f, [](const Rational& c) { return to_string(c); });
}

}  // namespace alphadet
