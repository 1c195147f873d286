#include "alphadet/rational.hpp"

#include <cctype>

#include "alphadet/error.hpp"

namespace alphadet {

namespace {

bool valid_integer(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

BigInt to_bigint(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::string original(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
      throw_input("malformed rational '" + original + "'");
    BigInt d = to_bigint(den);
    if (d == 0) throw_input("zero denominator in '" + original + "'");
    Rational r(to_bigint(num), d);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string digits(text.substr(0, dot));
    std::string frac(text.substr(dot + 1));
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    if (!valid_integer(digits) || (!frac.empty() && !valid_integer(frac)) || (!frac.empty() && (frac[0] == '-' || frac[0] == '+')))
      throw_input("malformed rational '" + original + "'");
    bool neg = digits[0] == '-';
    BigInt whole = to_bigint(digits);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt f = frac.empty() ? BigInt(0) : BigInt(frac, 10);
    BigInt num = abs(whole) * scale + f;
    if (neg) num = -num;
    Rational r(num, scale);
    r.canonicalize();
    return r;
  }
  if (!valid_integer(text)) throw_input("malformed rational '" + original + "'");
  return Rational(to_bigint(text));
}

std::string to_string(const Rational& r) { return r.get_str(10); }

}  // namespace alphadet
