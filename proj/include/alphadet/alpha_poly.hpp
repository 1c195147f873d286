#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alphadet/rational.hpp"

namespace alphadet {

// Either a finite rational alpha or the formal alpha = infinity mode.
class AlphaValue {
 public:
  AlphaValue() : finite_(Rational(0)) {}
  AlphaValue(Rational value) : finite_(std::move(value)) {}  // NOLINT(runtime/explicit)
  static AlphaValue infinity() { return AlphaValue(std::nullopt); }

  bool is_infinite() const { return !finite_.has_value(); }
  // Throws Unsupported in the infinity mode.
  const Rational& finite() const;

  // Parses a rational, or "inf" / "infinity" / "oo".
  static AlphaValue parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const AlphaValue&, const AlphaValue&) = default;

 private:
  explicit AlphaValue(std::nullopt_t) {}
  std::optional<Rational> finite_;
};

// Element of Q[alpha]; coeffs()[k] is the coefficient of alpha^k and the last
// stored coefficient is nonzero (empty list is zero).
class AlphaPoly {
 public:
  AlphaPoly() = default;
  AlphaPoly(Rational constant);  // NOLINT(runtime/explicit)
  AlphaPoly(int constant) : AlphaPoly(Rational(constant)) {}  // NOLINT(runtime/explicit)
  explicit AlphaPoly(std::vector<Rational> coeffs);

  static AlphaPoly alpha() { return monomial(1, 1); }
  static AlphaPoly monomial(const Rational& c, int degree);
  // 1 + c*alpha
  static AlphaPoly linear(const Rational& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& coeff(int k) const;

  Rational evaluate(const Rational& a) const;
  // Infinity throws Unsupported; use limit_coefficient for the rescaled limit.
  Rational evaluate(const AlphaValue& a) const;
  // lim_{alpha -> inf} alpha^{-degree} p(alpha); Unsupported if deg p > degree.
  Rational limit_coefficient(int degree) const;

  // this += c * alpha^shift * p, in place.
  void add_scaled(const AlphaPoly& p, const Rational& c, int shift = 0);
  // this += c * alpha^shift.
  void add_monomial(const Rational& c, int shift);

  AlphaPoly& operator+=(const AlphaPoly& o);
  AlphaPoly& operator-=(const AlphaPoly& o);
  AlphaPoly& operator*=(const AlphaPoly& o);
  AlphaPoly& operator*=(const Rational& c);

  friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
  friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
  friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);
  friend AlphaPoly operator*(AlphaPoly a, const Rational& c) { return a *= c; }
  friend AlphaPoly operator*(const Rational& c, AlphaPoly a) { return a *= c; }
  AlphaPoly operator-() const;
  friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) { return a.c_ == b.c_; }

  // Euclidean division by a nonzero divisor: (quotient, remainder).
  friend std::pair<AlphaPoly, AlphaPoly> divmod(const AlphaPoly& num, const AlphaPoly& den);
  // Throws Input when den does not divide num.
  friend AlphaPoly exact_div(const AlphaPoly& num, const AlphaPoly& den);

  // Human-readable, e.g. "1 - alpha^2".
  std::string to_string(const std::string& var = "alpha") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

inline bool is_zero(const AlphaPoly& p) { return p.is_zero(); }

// prod_{j=1}^{n-1} (1 + j*alpha)
AlphaPoly rising_content_product(int n);

}  // namespace alphadet
