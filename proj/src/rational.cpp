#include "dmod/rational.hpp"

#include <cctype>

#include "dmod/errors.hpp"

namespace dmod {

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = (text[pos] == '-');
    ++pos;
  }
  if (pos == text.size()) return false;
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
    value = value * 10 + (text[pos] - '0');
  }
  out = negative ? -value : value;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  Integer num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) throw ParseError("malformed rational: '" + std::string(text) + "'");
  } else {
    if (!parse_integer(text.substr(0, slash), num) || !parse_integer(text.substr(slash + 1), den))
      throw ParseError("malformed rational: '" + std::string(text) + "'");
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string rational_to_canonical(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

}  // namespace dmod
