#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alphadet/alpha_poly.hpp"
#include "alphadet/error.hpp"
#include "alphadet/rational.hpp"

namespace alphadet {

class Permutation;

// One variable power x_{row,col}^exp.
struct Factor {
  int row = 0;
  int col = 0;
  int exp = 0;
  friend auto operator<=>(const Factor&, const Factor&) = default;
  friend bool operator==(const Factor&, const Factor&) = default;
};

// Monomial in the n^2 entries of X. Factors are sorted by (row, col), so the
// default ordering is lexicographic on the flattened (row, col, exp) list.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int n) : n_(n) {}
  Monomial(int n, std::vector<Factor> factors);

  // prod_c x_{rows[c-1], c}: the column |-> row form of a column-multilinear monomial.
  static Monomial from_column_rows(std::span<const int> rows);

  int ambient() const { return n_; }
  const std::vector<Factor>& factors() const { return f_; }
  int degree() const;
  int exponent(int row, int col) const;
  // rows[c-1] for monomials of the form prod_c x_{r_c, c}.
  std::optional<std::vector<int>> column_rows() const;
  // Row content: weight[r-1] = total exponent in row r.
  std::vector<int> row_weight() const;

  // Multiplies in x_{row,col}^delta (delta may be negative; zero exponents are dropped).
  void bump(int row, int col, int delta);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;  // "x11*x22^2"

 private:
  int n_ = 0;
  std::vector<Factor> f_;
};

// Sparse polynomial in the entries of an n x n matrix with coefficients in
// Coeff (AlphaPoly or Rational). Zero coefficients are never stored.
template <class Coeff>
class MatrixPolynomial {
 public:
  using Terms = std::map<Monomial, Coeff>;

  MatrixPolynomial() = default;
  explicit MatrixPolynomial(int n) : n_(n) {}

  int ambient() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Coeff& c) {
    if (alphadet::is_zero(c)) return;
    check_monomial(m);
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (alphadet::is_zero(it->second)) terms_.erase(it);
    }
  }

  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff() : it->second;
  }

  MatrixPolynomial& operator+=(const MatrixPolynomial& o) {
    check_ambient(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MatrixPolynomial& operator-=(const MatrixPolynomial& o) {
    check_ambient(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MatrixPolynomial operator+(MatrixPolynomial a, const MatrixPolynomial& b) { return a += b; }
  friend MatrixPolynomial operator-(MatrixPolynomial a, const MatrixPolynomial& b) { return a -= b; }

  template <class Scalar>
  MatrixPolynomial scaled(const Scalar& s) const {
    MatrixPolynomial out(n_);
    for (const auto& [m, c] : terms_) out.add_term(m, c * s);
    return out;
  }

  friend MatrixPolynomial operator*(const MatrixPolynomial& a, const MatrixPolynomial& b) {
    a.check_ambient(b);
    MatrixPolynomial out(a.n_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }

  friend bool operator==(const MatrixPolynomial& a, const MatrixPolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  // Value at a rational matrix (row-major, values[r-1][c-1]).
  Coeff substitute(const std::vector<std::vector<Rational>>& values) const {
    if (static_cast<int>(values.size()) != n_) throw_input("substitute: matrix size does not match ambient n");
    for (const auto& row : values)
      if (static_cast<int>(row.size()) != n_) throw_input("substitute: matrix is not square");
    Coeff acc{};
    for (const auto& [m, c] : terms_) {
      Rational v(1);
      for (const auto& f : m.factors())
        for (int e = 0; e < f.exp; ++e) v *= values[f.row - 1][f.col - 1];
      acc += c * v;
    }
    return acc;
  }

  // Polarization E_pq = sum_j x_{pj} d/dx_{qj}.
  MatrixPolynomial polarize(int p, int q) const {
    if (p < 1 || p > n_ || q < 1 || q > n_) throw_input("E_pq: index out of range");
    MatrixPolynomial out(n_);
    for (const auto& [m, c] : terms_) {
      for (const auto& f : m.factors()) {
        if (f.row != q) continue;
        Monomial mm = m;
        mm.bump(q, f.col, -1);
        mm.bump(p, f.col, +1);
        out.add_term(mm, c * Rational(f.exp));
      }
    }
    return out;
  }

  // Columns relabeled by c -> perm[c-1] (1-based targets).
  MatrixPolynomial relabel_columns(std::span<const int> perm) const {
    MatrixPolynomial out(n_);
    for (const auto& [m, c] : terms_) {
      std::vector<Factor> fs;
      fs.reserve(m.factors().size());
      for (const auto& f : m.factors()) fs.push_back({f.row, perm[f.col - 1], f.exp});
      out.add_term(Monomial(n_, std::move(fs)), c);
    }
    return out;
  }

  // Common row weight of every term, or nullopt if not weight-homogeneous.
  std::optional<std::vector<int>> row_weight() const {
    std::optional<std::vector<int>> w;
    for (const auto& [m, c] : terms_) {
      auto mw = m.row_weight();
      if (!w)
        w = std::move(mw);
      else if (*w != mw)
        return std::nullopt;
    }
    if (!w) w = std::vector<int>(n_, 0);
    return w;
  }

 private:
  void check_monomial(const Monomial& m) const {
    if (m.ambient() != n_) throw_input("monomial ambient size does not match polynomial");
  }
  void check_ambient(const MatrixPolynomial& o) const {
    if (o.n_ != n_)
      throw_input("ambient size mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
  }

  int n_ = 0;
  Terms terms_;
};

using MatPoly = MatrixPolynomial<AlphaPoly>;
using RatMatPoly = MatrixPolynomial<Rational>;

// Coefficientwise alpha = a specialization.
RatMatPoly specialize(const MatPoly& f, const Rational& alpha);
// Coefficientwise lim alpha^{-degree} f; Unsupported if some coefficient has larger degree.
RatMatPoly limit_part(const MatPoly& f, int degree);
// Embeds rational coefficients as constants in Q[alpha].
MatPoly to_alpha(const RatMatPoly& f);

std::string to_string(const MatPoly& f);
std::string to_string(const RatMatPoly& f);

}  // namespace alphadet
